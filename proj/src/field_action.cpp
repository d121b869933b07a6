#include "hopfgal/field_action.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hopfgal {

LaurentPoly LaurentPoly::zero(const CtxPtr &ctx, int nvars)
{
	return LaurentPoly(ctx, nvars);
}

LaurentPoly LaurentPoly::monomial(const CtxPtr &ctx, std::vector<long> exps,
                                  const CycloScalar &c)
{
	LaurentPoly p(ctx, (int)exps.size());
	p.add_term(exps, c);
	return p;
}

void LaurentPoly::add_term(const std::vector<long> &exps,
                           const CycloScalar &c)
{
	if (c.is_zero())
		return;
	if ((int)exps.size() != nvars_)
		throw Error("Laurent monomial has wrong number of variables");
	auto it = terms_.find(exps);
	if (it == terms_.end())
		terms_[exps] = c;
	else
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly p(ctx_, nvars_);
	for (auto &[e, c] : terms_)
		p.terms_[e] = -c;
	return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const
{
	LaurentPoly p = *this;
	for (auto &[e, c] : o.terms_)
		p.add_term(e, c);
	return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const
{
	return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const
{
	LaurentPoly p(ctx_, nvars_);
	for (auto &[e1, c1] : terms_)
		for (auto &[e2, c2] : o.terms_)
		{
			std::vector<long> e(e1.size());
			for (size_t i = 0; i < e1.size(); ++i)
				e[i] = e1[i] + e2[i];
			p.add_term(e, c1 * c2);
		}
	return p;
}

LaurentPoly LaurentPoly::scaled(const CycloScalar &s) const
{
	LaurentPoly p(ctx_, nvars_);
	if (s.is_zero())
		return p;
	for (auto &[e, c] : terms_)
		p.add_term(e, c * s);
	return p;
}

bool LaurentPoly::operator==(const LaurentPoly &o) const
{
	return (*this - o).is_zero();
}

std::string LaurentPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream ss;
	bool first = true;
	for (auto &[e, c] : terms_)
	{
		if (!first)
			ss << " + ";
		first = false;
		ss << "(" << c.str() << ")";
		for (size_t v = 0; v < e.size(); ++v)
			if (e[v] != 0)
			{
				ss << "*z" << (v + 1);
				if (e[v] != 1)
					ss << "^" << e[v];
			}
	}
	return ss.str();
}

FieldAction::FieldAction(HopfDatum d, ActionSpec spec)
    : d_(std::move(d)), spec_(std::move(spec))
{
	const auto &G = d_.group();
	if (!d_.has_characters())
		throw MalformedDatum("module field actions need explicit characters");
	if (spec_.gen_action.size() != G.rank())
		throw MalformedDatum("need one action row per group cyclic factor");
	for (size_t j = 0; j < spec_.gen_action.size(); ++j)
	{
		if ((int)spec_.gen_action[j].size() != spec_.nvars)
			throw MalformedDatum("action row has wrong variable count");
		for (auto &t : spec_.gen_action[j])
		{
			auto o = t.multiplicative_order();
			if (!o)
				throw NotARootOfUnity(
				    "group generators must act by roots of unity");
			if (G.orders()[j] % *o != 0)
				throw OrderMismatch("action eigenvalue order does not divide "
				                    "the cyclic factor order");
		}
	}
	if ((int)spec_.w.size() != d_.theta())
		throw MalformedDatum("need one w monomial per generator index");
	for (auto &[c, e] : spec_.w)
	{
		if (c.is_zero())
			throw MalformedDatum("w coefficients must be nonzero");
		if ((int)e.size() != spec_.nvars)
			throw MalformedDatum("w exponent vector has wrong length");
	}

	// inner faithfulness of the diagonal G-action
	for (auto &a : G.elements())
	{
		if (G.is_identity(a))
			continue;
		bool nontrivial = false;
		for (int v = 0; v < spec_.nvars && !nontrivial; ++v)
		{
			std::vector<long> e(spec_.nvars, 0);
			e[v] = 1;
			if (!eigenvalue(a, e).is_one())
				nontrivial = true;
		}
		if (!nontrivial)
			throw UnfaithfulGroupAction(
			    "group element " + G.element_str(a) +
			    " acts trivially on all variables");
	}

	// g . w_i = chi_i(g) w_i for every cyclic generator g
	for (int i = 0; i < d_.theta(); ++i)
		for (size_t j = 0; j < G.rank(); ++j)
		{
			auto lhs = eigenvalue(G.generator(j), spec_.w[i].second);
			auto rhs = d_.chi_at(i, G.generator(j));
			if (!(lhs == rhs))
				throw EquivarianceViolated(
				    "w_" + std::to_string(i + 1) +
				    " is not chi-equivariant on cyclic generator " +
				    std::to_string(j + 1) + ": acts by " + lhs.str() +
				    ", expected " + rhs.str());
		}
}

CycloScalar FieldAction::eigenvalue(const GroupElement &a,
                                    const std::vector<long> &exps) const
{
	auto b = d_.group().normalize(a);
	CycloScalar out = CycloScalar::from_int(d_.ctx(), 1);
	for (size_t j = 0; j < spec_.gen_action.size(); ++j)
		for (int v = 0; v < spec_.nvars; ++v)
			if (b[j] != 0 && exps[v] != 0)
				out *= spec_.gen_action[j][v].pow(b[j] * exps[v]);
	return out;
}

LaurentPoly FieldAction::apply_group(const GroupElement &a,
                                     const LaurentPoly &f) const
{
	LaurentPoly out(d_.ctx(), spec_.nvars);
	for (auto &[e, c] : f.terms())
		out.add_term(e, c * eigenvalue(a, e));
	return out;
}

LaurentPoly FieldAction::apply_x(int i, const LaurentPoly &f) const
{
	auto diff = f - apply_group(d_.g(i), f);
	auto w = LaurentPoly::monomial(d_.ctx(), spec_.w[i].second,
	                               spec_.w[i].first);
	return w * diff;
}

LaurentPoly FieldAction::apply_word(const Word &w, const LaurentPoly &f) const
{
	LaurentPoly out = f;
	for (auto it = w.rbegin(); it != w.rend(); ++it)
		out = apply_x(*it, out);
	return out;
}

LaurentPoly FieldAction::apply_poly(const NcPoly &p,
                                    const LaurentPoly &f) const
{
	LaurentPoly out = LaurentPoly::zero(d_.ctx(), spec_.nvars);
	for (auto &[w, c] : p.terms())
		out = out + apply_word(w, f).scaled(c);
	return out;
}

LaurentPoly
FieldAction::apply_group_algebra(const GroupAlgebraElement &a,
                                 const LaurentPoly &f) const
{
	LaurentPoly out = LaurentPoly::zero(d_.ctx(), spec_.nvars);
	for (auto &[g, c] : a.terms())
		out = out + apply_group(g, f).scaled(c);
	return out;
}

LaurentPoly FieldAction::apply_term(const OpTerm &t,
                                    const LaurentPoly &f) const
{
	LaurentPoly out = f;
	for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it)
	{
		if (std::holds_alternative<int>(*it))
			out = apply_x(std::get<int>(*it), out);
		else
			out = apply_group(std::get<GroupElement>(*it), out);
	}
	return out.scaled(t.coeff);
}

std::vector<RelationCheckResult> FieldAction::verify_relations_on_basis(
    const std::vector<OpRelation> &relations, long degree_bound) const
{
	// all monomials z^a with |a_v| <= degree_bound
	std::vector<std::vector<long>> box{{}};
	for (int v = 0; v < spec_.nvars; ++v)
	{
		std::vector<std::vector<long>> next;
		for (auto &e : box)
			for (long a = -degree_bound; a <= degree_bound; ++a)
			{
				auto f = e;
				f.push_back(a);
				next.push_back(f);
			}
		box = std::move(next);
	}

	std::vector<RelationCheckResult> out;
	for (auto &rel : relations)
	{
		RelationCheckResult rc;
		rc.label = rel.label;
		rc.holds = true;
		for (auto &e : box)
		{
			auto f = LaurentPoly::monomial(d_.ctx(), e,
			                               CycloScalar::from_int(d_.ctx(), 1));
			LaurentPoly acc = LaurentPoly::zero(d_.ctx(), spec_.nvars);
			for (auto &t : rel.terms)
				acc = acc + apply_term(t, f);
			if (!acc.is_zero())
			{
				rc.holds = false;
				rc.failure = "fails on " + f.str() + ": " + acc.str();
				break;
			}
		}
		out.push_back(std::move(rc));
	}
	return out;
}

IndependenceReport FieldAction::check_linear_independence() const
{
	IndependenceReport rep;
	std::vector<int> cls(d_.theta(), -1);
	int nc = 0;
	for (int i = 0; i < d_.theta(); ++i)
	{
		if (cls[i] >= 0)
			continue;
		cls[i] = nc;
		for (int j = i + 1; j < d_.theta(); ++j)
		{
			if (cls[j] >= 0 || !(d_.g(i) == d_.g(j)))
				continue;
			bool same_chi = true;
			for (size_t v = 0; v < d_.group().rank(); ++v)
				if (!(d_.chi(i).values[v] == d_.chi(j).values[v]))
					same_chi = false;
			if (same_chi)
				cls[j] = nc;
		}
		++nc;
	}
	for (int c = 0; c < nc; ++c)
	{
		std::vector<int> members;
		for (int i = 0; i < d_.theta(); ++i)
			if (cls[i] == c)
				members.push_back(i);
		// scalar multiples of Laurent monomials: independent iff the
		// exponent vectors are pairwise distinct
		bool ok = true;
		for (size_t a = 0; a < members.size() && ok; ++a)
			for (size_t b = a + 1; b < members.size(); ++b)
				if (spec_.w[members[a]].second == spec_.w[members[b]].second)
					ok = false;
		std::ostringstream ss;
		ss << "class {";
		for (size_t a = 0; a < members.size(); ++a)
			ss << (a ? "," : "") << "w" << (members[a] + 1);
		ss << "}: " << (ok ? "independent" : "dependent");
		rep.detail.push_back(ss.str());
		if (!ok)
			rep.independent = false;
	}
	return rep;
}

std::vector<long> find_equivariant_monomial(const FiniteAbelianGroup &G,
                                            const ActionSpec &spec,
                                            const Character &chi, long bound)
{
	std::vector<std::vector<long>> box{{}};
	for (int v = 0; v < spec.nvars; ++v)
	{
		std::vector<std::vector<long>> next;
		for (auto &e : box)
			for (long a = -bound; a <= bound; ++a)
			{
				auto f = e;
				f.push_back(a);
				next.push_back(f);
			}
		box = std::move(next);
	}
	std::sort(box.begin(), box.end(),
	          [](const std::vector<long> &a, const std::vector<long> &b) {
		          long sa = 0, sb = 0;
		          for (long x : a)
			          sa += std::abs(x);
		          for (long x : b)
			          sb += std::abs(x);
		          if (sa != sb)
			          return sa < sb;
		          return a < b;
	          });
	for (auto &e : box)
	{
		bool all_zero = true;
		for (long x : e)
			if (x)
				all_zero = false;
		if (all_zero && !chi.is_trivial())
			continue;
		bool ok = true;
		for (size_t j = 0; j < G.rank() && ok; ++j)
		{
			CycloScalar val;
			bool first = true;
			for (int v = 0; v < spec.nvars; ++v)
			{
				auto p = spec.gen_action[j][v].pow(e[v]);
				val = first ? p : val * p;
				first = false;
			}
			if (!(val == chi.values[j]))
				ok = false;
		}
		if (ok)
			return e;
	}
	throw NoEquivariantMonomial(
	    "no chi-equivariant Laurent monomial within the exponent bound " +
	    std::to_string(bound));
}

Sl2Demo make_sl2_demo(long m)
{
	if (m < 3 || m % 2 == 0)
		throw UnsupportedParameters(
		    "the sl2 example needs an odd order m >= 3");
	auto ctx = make_context(m);
	FiniteAbelianGroup G({m});
	auto q = [&](long k) { return CycloScalar::root(ctx, m, k); };
	auto one = CycloScalar::from_int(ctx, 1);

	Character chi1{{q(2)}}, chi2{{q(-2)}};
	HopfDatum d(ctx, G, {{1}, {1}}, {chi1, chi2});

	ActionSpec spec;
	spec.nvars = 1;
	spec.gen_action = {{q(-2)}};
	spec.w = {
	    {(one - q(-2)).inv(), {-1}},          // w1, for x1 = e
	    {-(q(1) * (q(2) - one)).inv(), {1}},  // w2, for x2 = kf
	};

	Sl2Demo demo{std::move(d), spec, {}};

	GroupElement k{1};
	auto xs = [&](int i, int count) {
		std::vector<OpStep> s;
		for (int c = 0; c < count; ++c)
			s.push_back(i);
		return s;
	};
	demo.relations.push_back(
	    {"x1^" + std::to_string(m) + " = 0 (e nilpotent)",
	     {{one, xs(0, (int)m)}}});
	demo.relations.push_back(
	    {"x2^" + std::to_string(m) + " = 0 (kf nilpotent)",
	     {{one, xs(1, (int)m)}}});
	demo.relations.push_back(
	    {"k^" + std::to_string(m) + " = 1",
	     {{one, {GroupElement{m}}}, {-one, {}}}});
	demo.relations.push_back(
	    {"k x1 = q^2 x1 k", {{one, {OpStep(k), OpStep(0)}},
	                         {-q(2), {OpStep(0), OpStep(k)}}}});
	demo.relations.push_back(
	    {"k x2 = q^-2 x2 k", {{one, {OpStep(k), OpStep(1)}},
	                          {-q(-2), {OpStep(1), OpStep(k)}}}});
	// q^2 x1 x2 - x2 x1 = (k^2 - 1)/(q - q^-1)
	auto c = (q(1) - q(-1)).inv();
	demo.relations.push_back(
	    {"q^2 x1 x2 - x2 x1 = (k^2 - 1)/(q - q^-1)",
	     {{q(2), {OpStep(0), OpStep(1)}},
	      {-one, {OpStep(1), OpStep(0)}},
	      {-c, {GroupElement{2}}},
	      {c, {}}}});
	return demo;
}

} // namespace hopfgal
