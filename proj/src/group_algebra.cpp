#include "hopfgal/group_algebra.hpp"

#include <sstream>

namespace hopfgal {

GroupAlgebraElement GroupAlgebraElement::zero(const CtxPtr &ctx,
                                              const FiniteAbelianGroup &G)
{
	return GroupAlgebraElement(ctx, G);
}

GroupAlgebraElement GroupAlgebraElement::one(const CtxPtr &ctx,
                                             const FiniteAbelianGroup &G)
{
	return of(ctx, G, G.identity());
}

GroupAlgebraElement GroupAlgebraElement::of(const CtxPtr &ctx,
                                            const FiniteAbelianGroup &G,
                                            const GroupElement &g)
{
	GroupAlgebraElement a(ctx, G);
	a.terms_[G.normalize(g)] = CycloScalar::from_int(ctx, 1);
	return a;
}

GroupAlgebraElement GroupAlgebraElement::one_minus(
    const CtxPtr &ctx, const FiniteAbelianGroup &G, const CycloScalar &s,
    const GroupElement &g)
{
	GroupAlgebraElement a(ctx, G);
	a.add_term(G.identity(), CycloScalar::from_int(ctx, 1));
	a.add_term(g, -s);
	return a;
}

void GroupAlgebraElement::add_term(const GroupElement &g,
                                   const CycloScalar &c)
{
	if (c.is_zero())
		return;
	auto key = G_.normalize(g);
	auto it = terms_.find(key);
	if (it == terms_.end())
		terms_[key] = c;
	else
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

GroupAlgebraElement GroupAlgebraElement::operator-() const
{
	GroupAlgebraElement out(ctx_, G_);
	for (auto &[g, c] : terms_)
		out.terms_[g] = -c;
	return out;
}

GroupAlgebraElement
GroupAlgebraElement::operator+(const GroupAlgebraElement &o) const
{
	if (!(G_ == o.G_))
		throw Error("group algebra elements live over different groups");
	GroupAlgebraElement out = *this;
	for (auto &[g, c] : o.terms_)
		out.add_term(g, c);
	return out;
}

GroupAlgebraElement
GroupAlgebraElement::operator-(const GroupAlgebraElement &o) const
{
	return *this + (-o);
}

GroupAlgebraElement
GroupAlgebraElement::operator*(const GroupAlgebraElement &o) const
{
	if (!(G_ == o.G_))
		throw Error("group algebra elements live over different groups");
	GroupAlgebraElement out(ctx_, G_);
	for (auto &[g1, c1] : terms_)
		for (auto &[g2, c2] : o.terms_)
			out.add_term(G_.mul(g1, g2), c1 * c2);
	return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CycloScalar &s) const
{
	GroupAlgebraElement out(ctx_, G_);
	if (s.is_zero())
		return out;
	for (auto &[g, c] : terms_)
		out.add_term(g, c * s);
	return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement &o) const
{
	return (*this - o).is_zero();
}

GroupAlgebraElement
GroupAlgebraElement::substitute(int sym_index, const CycloScalar &value) const
{
	GroupAlgebraElement out(ctx_, G_);
	for (auto &[g, c] : terms_)
		out.add_term(g, c.substitute(sym_index, value));
	return out;
}

std::string GroupAlgebraElement::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream ss;
	bool first = true;
	for (auto &[g, c] : terms_) // map order: lexicographic exponent vectors
	{
		if (!first)
			ss << " + ";
		first = false;
		ss << "(" << c.str() << ")*" << G_.element_str(g);
	}
	return ss.str();
}

} // namespace hopfgal
