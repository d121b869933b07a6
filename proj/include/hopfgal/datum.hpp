#pragma once

// Datum (G, g_i, chi_i) with derived or explicitly given braiding matrix
// q_ij, optional Cartan matrix and optional lifting scalars.

#include "hopfgal/group_algebra.hpp"

#include <optional>

namespace hopfgal {

using CartanMatrix = std::vector<std::vector<int>>;

struct CartanComponent {
	char letter = 'A';
	int rank = 1;
	std::vector<int> vertices; // datum indices, ascending
	std::string str() const { return letter + std::to_string(rank); }
};

// throws NotFiniteCartanType unless the matrix is a valid finite Cartan
// matrix; components are reported with ascending smallest vertex
std::vector<CartanComponent> classify_cartan(const CartanMatrix &a);

struct Lifting {
	std::vector<CycloScalar> taft_scalars; // alpha_i, one per index
	std::map<std::pair<int, int>, CycloScalar> linking; // lambda_ij, i<j

	bool trivial() const;
};

struct ValidationReport {
	long session_conductor = 1;
	std::vector<long> n; // n_i = ord(q_ii)
	std::vector<std::string> warnings;
};

class HopfDatum {
  public:
	HopfDatum(CtxPtr ctx, FiniteAbelianGroup G, std::vector<GroupElement> g,
	          std::vector<Character> chi,
	          std::optional<CartanMatrix> cartan = std::nullopt,
	          std::optional<Lifting> lifting = std::nullopt);

	static HopfDatum
	from_braiding(CtxPtr ctx, FiniteAbelianGroup G,
	              std::vector<GroupElement> g,
	              std::vector<std::vector<CycloScalar>> q,
	              std::optional<CartanMatrix> cartan = std::nullopt,
	              std::optional<Lifting> lifting = std::nullopt);

	int theta() const { return (int)g_.size(); }
	const CtxPtr &ctx() const { return ctx_; }
	const FiniteAbelianGroup &group() const { return G_; }
	const GroupElement &g(int i) const { return g_[i]; }
	const CycloScalar &q(int i, int j) const { return q_[i][j]; }
	const std::vector<std::vector<CycloScalar>> &braiding() const
	{
		return q_;
	}

	bool has_characters() const { return chi_.has_value(); }
	const Character &chi(int i) const;
	CycloScalar chi_at(int i, const GroupElement &a) const;

	bool has_cartan() const { return cartan_.has_value(); }
	const CartanMatrix &cartan() const;
	void set_cartan(CartanMatrix a) { cartan_ = std::move(a); }
	// exhaustive search over a_ij in {0,-1,-2,-3}; min sum |a_ij|, then
	// lexicographically smallest row-major matrix; finite type required
	CartanMatrix infer_cartan() const;
	CartanMatrix cartan_or_infer() const;

	bool has_lifting() const { return lifting_.has_value(); }
	const Lifting &lifting() const;
	void set_lifting(Lifting l) { lifting_ = std::move(l); }

	// ord(q_ii); throws if q_ii is not a root of unity or equals 1
	long n_of(int i) const;

	ValidationReport validate() const;

	bool is_minimal() const;
	HopfDatum minimal() const;

	HopfDatum substitute_symbol(const std::string &name,
	                            const CycloScalar &value) const;

  private:
	HopfDatum() = default;

	CtxPtr ctx_;
	FiniteAbelianGroup G_;
	std::vector<GroupElement> g_;
	std::optional<std::vector<Character>> chi_;
	std::vector<std::vector<CycloScalar>> q_;
	std::optional<CartanMatrix> cartan_;
	std::optional<Lifting> lifting_;
};

} // namespace hopfgal
