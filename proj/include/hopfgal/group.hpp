#pragma once

// Finite abelian groups presented as products of cyclic factors,
// characters with root-of-unity (possibly symbolic) values.

#include "hopfgal/cyclotomic.hpp"

#include <string>
#include <vector>

namespace hopfgal {

using GroupElement = std::vector<long>;

class FiniteAbelianGroup {
  public:
	FiniteAbelianGroup() = default;
	explicit FiniteAbelianGroup(std::vector<long> orders);

	const std::vector<long> &orders() const { return orders_; }
	size_t rank() const { return orders_.size(); }
	long order() const;
	long exponent() const;

	GroupElement identity() const;
	GroupElement normalize(GroupElement a) const;
	GroupElement mul(const GroupElement &a, const GroupElement &b) const;
	GroupElement inverse(const GroupElement &a) const;
	GroupElement power(const GroupElement &a, long n) const;
	bool is_identity(const GroupElement &a) const;
	long element_order(const GroupElement &a) const;
	GroupElement generator(size_t i) const;

	std::vector<GroupElement> elements() const; // full enumeration

	std::string str() const;                          // e.g. "Z5 x Z5"
	std::string element_str(const GroupElement &a) const; // "(3,0)" / "g^3"

	bool operator==(const FiniteAbelianGroup &o) const
	{
		return orders_ == o.orders_;
	}

  private:
	std::vector<long> orders_;
};

// subgroup generated by a list of elements, in SNF cyclic coordinates
struct Subgroup {
	FiniteAbelianGroup group;             // abstract cyclic decomposition
	std::vector<GroupElement> cyclic_gens; // in ambient coordinates
	// each cyclic generator as an exponent vector over the input generators
	std::vector<std::vector<long>> gen_expr;
	// each input generator in subgroup coordinates
	std::vector<GroupElement> input_in_subgroup;
	long order = 1;
	bool is_cyclic() const { return group.rank() <= 1; }
};

Subgroup subgroup_generated(const FiniteAbelianGroup &G,
                            const std::vector<GroupElement> &gens);

// membership by enumeration (intended for small groups)
bool subgroup_contains(const FiniteAbelianGroup &G,
                       const std::vector<GroupElement> &gens,
                       const GroupElement &x);

struct Character {
	std::vector<CycloScalar> values; // value on each cyclic generator

	CycloScalar evaluate(const FiniteAbelianGroup &G,
	                     const GroupElement &a) const;
	// lcm of the multiplicative orders of the values
	long order(const FiniteAbelianGroup &G) const;
	Character mul(const Character &o) const;
	Character inverse() const;
	bool is_trivial() const;
};

// checks value_j ^ order_j == 1 for all j
void validate_character(const FiniteAbelianGroup &G, const Character &chi);

// integer smith normal form: returns (U, D, V) with U*A*V = D,
// U and V unimodular, D diagonal with d_i | d_{i+1}
struct SmithResult {
	std::vector<std::vector<long>> U, D, V, U_inv;
};
SmithResult smith_normal_form(std::vector<std::vector<long>> A);

} // namespace hopfgal
