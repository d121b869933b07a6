#include "hopfgal/relations.hpp"

#include <cstdlib>
#include <sstream>

namespace hopfgal {

NcPoly NcPoly::one(const CtxPtr &ctx)
{
	NcPoly p(ctx);
	p.terms_[Word{}] = CycloScalar::from_int(ctx, 1);
	return p;
}

NcPoly NcPoly::x(const CtxPtr &ctx, int i)
{
	NcPoly p(ctx);
	p.terms_[Word{i}] = CycloScalar::from_int(ctx, 1);
	return p;
}

NcPoly NcPoly::monomial(const CtxPtr &ctx, Word w, const CycloScalar &c)
{
	NcPoly p(ctx);
	p.add_term(w, c);
	return p;
}

void NcPoly::add_term(const Word &w, const CycloScalar &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(w);
	if (it == terms_.end())
		terms_[w] = c;
	else
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NcPoly NcPoly::operator-() const
{
	NcPoly p(ctx_);
	for (auto &[w, c] : terms_)
		p.terms_[w] = -c;
	return p;
}

NcPoly NcPoly::operator+(const NcPoly &o) const
{
	NcPoly p = *this;
	if (!p.ctx_)
		p.ctx_ = o.ctx_;
	for (auto &[w, c] : o.terms_)
		p.add_term(w, c);
	return p;
}

NcPoly NcPoly::operator-(const NcPoly &o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly &o) const
{
	NcPoly p(ctx_ ? ctx_ : o.ctx_);
	for (auto &[w1, c1] : terms_)
		for (auto &[w2, c2] : o.terms_)
		{
			Word w = w1;
			w.insert(w.end(), w2.begin(), w2.end());
			p.add_term(w, c1 * c2);
		}
	return p;
}

NcPoly NcPoly::scaled(const CycloScalar &s) const
{
	NcPoly p(ctx_);
	if (s.is_zero())
		return p;
	for (auto &[w, c] : terms_)
		p.add_term(w, c * s);
	return p;
}

bool NcPoly::operator==(const NcPoly &o) const
{
	return (*this - o).is_zero();
}

std::string NcPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream ss;
	bool first = true;
	for (auto &[w, c] : terms_)
	{
		if (!first)
			ss << " + ";
		first = false;
		ss << "(" << c.str() << ")";
		for (int l : w)
			ss << "*x" << (l + 1);
	}
	return ss.str();
}

std::vector<int> multidegree(const Word &w, int theta)
{
	std::vector<int> d(theta, 0);
	for (int l : w)
	{
		if (l < 0 || l >= theta)
			throw Error("letter index out of range");
		++d[l];
	}
	return d;
}

std::vector<int> multidegree(const NcPoly &p, int theta)
{
	if (p.is_zero())
		throw NotMultihomogeneous("the zero relation has no multidegree");
	std::vector<int> d = multidegree(p.terms().begin()->first, theta);
	for (auto &[w, c] : p.terms())
		if (multidegree(w, theta) != d)
			throw NotMultihomogeneous(
			    "relation mixes words of different multidegrees: " + p.str());
	return d;
}

NcPoly adjoint(const HopfDatum &d, int i, const NcPoly &p)
{
	NcPoly out(p.ctx() ? p.ctx() : d.ctx());
	for (auto &[w, c] : p.terms())
	{
		Word left{i};
		left.insert(left.end(), w.begin(), w.end());
		out.add_term(left, c);
		CycloScalar f = CycloScalar::from_int(d.ctx(), 1);
		for (int l : w)
			f *= d.q(i, l);
		Word right = w;
		right.push_back(i);
		out.add_term(right, -(c * f));
	}
	return out;
}

NcPoly serre_relation(const HopfDatum &d, int i, int j)
{
	auto a = d.cartan_or_infer();
	NcPoly p = NcPoly::x(d.ctx(), j);
	for (int k = 0; k < 1 - a[i][j]; ++k)
		p = adjoint(d, i, p);
	return p;
}

GroupAlgebraElement monomial_Q(const HopfDatum &d, const Word &w)
{
	auto out = GroupAlgebraElement::one(d.ctx(), d.group());
	int t = (int)w.size();
	for (int s = 0; s < t; ++s)
	{
		CycloScalar lam = CycloScalar::from_int(d.ctx(), 1);
		for (int r = s + 1; r < t; ++r)
			lam *= d.q(w[s], w[r]);
		out = out * GroupAlgebraElement::one_minus(d.ctx(), d.group(), lam,
		                                           d.g(w[s]));
	}
	return out;
}

QResult relation_Q(const HopfDatum &d, const NcPoly &p,
                   const std::string &label)
{
	QResult r;
	r.label = label;
	r.multidegree = multidegree(p, d.theta());
	auto out = GroupAlgebraElement::zero(d.ctx(), d.group());
	for (auto &[w, c] : p.terms())
		out = out + monomial_Q(d, w).scaled(c);
	r.value = std::move(out);
	r.zero = r.value.is_zero();
	r.note = "direct";
	return r;
}

long expansion_cap()
{
	if (const char *env = std::getenv("HOPF_GALOIS_EXPANSION_CAP"))
	{
		long v = std::atol(env);
		if (v > 0)
			return v;
	}
	return 1000000;
}

QResult power_relation_Q(const HopfDatum &d, const NcPoly &p, long n,
                         const std::string &label)
{
	QResult r;
	r.label = label;
	auto deg = multidegree(p, d.theta());
	r.multidegree.resize(deg.size());
	for (size_t i = 0; i < deg.size(); ++i)
		r.multidegree[i] = deg[i] * (int)n;

	// accumulated character at g_t, from the braiding matrix alone
	auto chi_acc_at_gen = [&](int t) {
		CycloScalar z = CycloScalar::from_int(d.ctx(), 1);
		for (int i = 0; i < d.theta(); ++i)
			if (deg[i])
				z *= d.q(t, i).pow(deg[i]);
		return z;
	};

	// cyclic shortcut
	{
		std::vector<GroupElement> gens;
		std::vector<int> letters;
		for (int i = 0; i < d.theta(); ++i)
			if (deg[i])
			{
				gens.push_back(d.g(i));
				letters.push_back(i);
			}
		auto sub = subgroup_generated(d.group(), gens);
		if (sub.is_cyclic() && sub.order == n && n > 1)
		{
			CycloScalar z = CycloScalar::from_int(d.ctx(), 1);
			for (size_t s = 0; s < letters.size(); ++s)
				z *= chi_acc_at_gen(letters[s]).pow(sub.gen_expr[0][s]);
			auto o = z.multiplicative_order();
			if (o && *o == n)
			{
				r.value = GroupAlgebraElement::zero(d.ctx(), d.group());
				r.zero = true;
				r.note = "cyclic shortcut: the g_i of the letters generate a "
				         "cyclic group of order n and the accumulated "
				         "character is primitive on it; the power telescopes "
				         "to zero";
				return r;
			}
		}
	}

	// twisted power (needs characters for beta on the whole support)
	if (d.has_characters())
	{
		auto q0 = relation_Q(d, p).value;
		auto beta = [&](const GroupElement &h) {
			CycloScalar z = CycloScalar::from_int(d.ctx(), 1);
			for (int i = 0; i < d.theta(); ++i)
				if (deg[i])
					z *= d.chi_at(i, h).pow(deg[i]);
			return z;
		};
		auto out = GroupAlgebraElement::one(d.ctx(), d.group());
		auto cur = q0;
		for (long k = 0; k < n; ++k)
		{
			out = out * cur;
			if (k + 1 < n)
			{
				auto next = GroupAlgebraElement::zero(d.ctx(), d.group());
				for (auto &[h, c] : cur.terms())
					next.add_term(h, c * beta(h));
				cur = std::move(next);
			}
		}
		r.value = std::move(out);
		r.zero = r.value.is_zero();
		r.note = "twisted power of the single-copy Q";
		return r;
	}

	// brute-force expansion of P^n
	long cap = expansion_cap();
	long count = 0;
	NcPoly prod = NcPoly::one(d.ctx());
	for (long k = 0; k < n; ++k)
	{
		NcPoly next(d.ctx());
		for (auto &[w1, c1] : prod.terms())
			for (auto &[w2, c2] : p.terms())
			{
				if (++count > cap)
					throw ExpansionCapExceeded(
					    "expansion of P^n exceeds the cap of " +
					    std::to_string(cap) + " word products");
				Word w = w1;
				w.insert(w.end(), w2.begin(), w2.end());
				next.add_term(w, c1 * c2);
			}
		prod = std::move(next);
	}
	r = relation_Q(d, prod, label);
	r.note = "expanded P^n (" + std::to_string(count) + " word products)";
	return r;
}

std::vector<NcPoly> rank2_root_vectors(const HopfDatum &d,
                                       const CartanMatrix &a)
{
	if (d.theta() != 2)
		throw WrongRank("root vector table requires rank 2");
	int w = a[0][1] * a[1][0];
	std::vector<NcPoly> out;
	auto x1 = NcPoly::x(d.ctx(), 0), x2 = NcPoly::x(d.ctx(), 1);
	if (w == 0)
		return out;
	if (w == 1) // A2
	{
		out.push_back(adjoint(d, 0, x2));
		return out;
	}
	if (w == 2) // B2
	{
		int i = (a[0][1] == -2) ? 0 : 1;
		int j = 1 - i;
		auto r1 = adjoint(d, i, NcPoly::x(d.ctx(), j));
		out.push_back(r1);
		out.push_back(adjoint(d, i, r1));
		return out;
	}
	if (w == 3) // G2, a_ij = -1 and a_ji = -3: iterate from the -1 side
	{
		int i = (a[0][1] == -1) ? 0 : 1;
		int j = 1 - i;
		auto r11 = adjoint(d, i, NcPoly::x(d.ctx(), j)); // alpha_i + alpha_j
		auto r12 = adjoint(d, j, r11);                   // alpha_i + 2 alpha_j
		auto r13 = adjoint(d, j, r12);                   // alpha_i + 3 alpha_j
		auto r23 = adjoint(d, i, r13);                 // 2 alpha_i + 3 alpha_j
		out = {r11, r12, r13, r23};
		return out;
	}
	throw NotFiniteCartanType("rank-2 Cartan matrix is not of finite type");
}

} // namespace hopfgal
