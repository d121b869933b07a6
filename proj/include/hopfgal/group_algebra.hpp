#pragma once

// Sparse elements of the group algebra kG over the cyclotomic scalar field.

#include "hopfgal/group.hpp"

#include <map>

namespace hopfgal {

class GroupAlgebraElement {
  public:
	GroupAlgebraElement() = default;
	GroupAlgebraElement(CtxPtr ctx, FiniteAbelianGroup G)
	    : ctx_(std::move(ctx)), G_(std::move(G))
	{
	}

	static GroupAlgebraElement zero(const CtxPtr &ctx,
	                                const FiniteAbelianGroup &G);
	static GroupAlgebraElement one(const CtxPtr &ctx,
	                               const FiniteAbelianGroup &G);
	static GroupAlgebraElement of(const CtxPtr &ctx,
	                              const FiniteAbelianGroup &G,
	                              const GroupElement &g);
	// 1 - s*g
	static GroupAlgebraElement one_minus(const CtxPtr &ctx,
	                                     const FiniteAbelianGroup &G,
	                                     const CycloScalar &s,
	                                     const GroupElement &g);

	const FiniteAbelianGroup &group() const { return G_; }
	const CtxPtr &ctx() const { return ctx_; }
	const std::map<GroupElement, CycloScalar> &terms() const
	{
		return terms_;
	}

	bool is_zero() const { return terms_.empty(); }
	size_t support_size() const { return terms_.size(); }

	GroupAlgebraElement operator-() const;
	GroupAlgebraElement operator+(const GroupAlgebraElement &o) const;
	GroupAlgebraElement operator-(const GroupAlgebraElement &o) const;
	GroupAlgebraElement operator*(const GroupAlgebraElement &o) const;
	GroupAlgebraElement scaled(const CycloScalar &s) const;
	bool operator==(const GroupAlgebraElement &o) const;
	bool operator!=(const GroupAlgebraElement &o) const
	{
		return !(*this == o);
	}

	void add_term(const GroupElement &g, const CycloScalar &c);

	GroupAlgebraElement substitute(int sym_index,
	                               const CycloScalar &value) const;

	std::string str() const;

  private:
	CtxPtr ctx_;
	FiniteAbelianGroup G_;
	std::map<GroupElement, CycloScalar> terms_;
};

} // namespace hopfgal
