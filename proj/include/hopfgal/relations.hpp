#pragma once

// Noncommutative words and polynomials in x_1..x_theta, the braided adjoint,
// and the Q-value of multihomogeneous relations under x_i -> w_i (1 - g_i).

#include "hopfgal/datum.hpp"

namespace hopfgal {

using Word = std::vector<int>; // letters are 0-based indices

class NcPoly {
  public:
	NcPoly() = default;
	explicit NcPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

	static NcPoly one(const CtxPtr &ctx);
	static NcPoly x(const CtxPtr &ctx, int i);
	static NcPoly monomial(const CtxPtr &ctx, Word w, const CycloScalar &c);

	const CtxPtr &ctx() const { return ctx_; }
	const std::map<Word, CycloScalar> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(const Word &w, const CycloScalar &c);

	NcPoly operator-() const;
	NcPoly operator+(const NcPoly &o) const;
	NcPoly operator-(const NcPoly &o) const;
	NcPoly operator*(const NcPoly &o) const;
	NcPoly scaled(const CycloScalar &s) const;
	bool operator==(const NcPoly &o) const;

	std::string str() const;

  private:
	CtxPtr ctx_;
	std::map<Word, CycloScalar> terms_;
};

std::vector<int> multidegree(const Word &w, int theta);
// the common multidegree; throws NotMultihomogeneous
std::vector<int> multidegree(const NcPoly &p, int theta);

// (ad_c x_i)(P) = x_i P - (prod_s q_{i,j_s}) P x_i, extended linearly
NcPoly adjoint(const HopfDatum &d, int i, const NcPoly &p);

// (ad_c x_i)^{1 - a_ij}(x_j)
NcPoly serre_relation(const HopfDatum &d, int i, int j);

struct QResult {
	std::string label;
	std::vector<int> multidegree;
	GroupAlgebraElement value;
	bool zero = false;
	std::string note; // evaluation route / convention remarks
};

// Q of a single word: prod_s (1 - lambda_s g_{j_s}),
// lambda_s = prod_{r > s} q_{j_s, j_r}
GroupAlgebraElement monomial_Q(const HopfDatum &d, const Word &w);

QResult relation_Q(const HopfDatum &d, const NcPoly &p,
                   const std::string &label = "");

// Q of P^n for multihomogeneous P. Routes, in order:
//  - cyclic shortcut: the g_i of the letters of P generate a cyclic group
//    of order n and the accumulated character sends its generator to a
//    primitive n-th root; then Q = 0 by telescoping
//  - twisted power: Q(P^n) = prod_{k<n} beta^k(Q(P)) with
//    beta(h) = prod chi_i(h)^{d_i} (needs characters)
//  - expansion of P^n, subject to HOPF_GALOIS_EXPANSION_CAP
QResult power_relation_Q(const HopfDatum &d, const NcPoly &p, long n,
                         const std::string &label = "");

long expansion_cap();

// positive non-simple root vectors for a rank-2 datum of finite type,
// as iterated adjoints, together with their multidegrees
std::vector<NcPoly> rank2_root_vectors(const HopfDatum &d,
                                       const CartanMatrix &a);

} // namespace hopfgal
