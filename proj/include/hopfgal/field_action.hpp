#pragma once

// Simulated Hopf actions on Laurent polynomial subrings of a module field:
// G acts diagonally on the variables, x_i acts as w_i (1 - g_i . ).

#include "hopfgal/classifier.hpp"

#include <variant>

namespace hopfgal {

class LaurentPoly {
  public:
	LaurentPoly() = default;
	LaurentPoly(CtxPtr ctx, int nvars) : ctx_(std::move(ctx)), nvars_(nvars)
	{
	}

	static LaurentPoly zero(const CtxPtr &ctx, int nvars);
	static LaurentPoly monomial(const CtxPtr &ctx, std::vector<long> exps,
	                            const CycloScalar &c);

	const CtxPtr &ctx() const { return ctx_; }
	int nvars() const { return nvars_; }
	const std::map<std::vector<long>, CycloScalar> &terms() const
	{
		return terms_;
	}
	bool is_zero() const { return terms_.empty(); }
	void add_term(const std::vector<long> &exps, const CycloScalar &c);

	LaurentPoly operator-() const;
	LaurentPoly operator+(const LaurentPoly &o) const;
	LaurentPoly operator-(const LaurentPoly &o) const;
	LaurentPoly operator*(const LaurentPoly &o) const;
	LaurentPoly scaled(const CycloScalar &s) const;
	bool operator==(const LaurentPoly &o) const;

	std::string str() const;

  private:
	CtxPtr ctx_;
	int nvars_ = 0;
	std::map<std::vector<long>, CycloScalar> terms_;
};

struct ActionSpec {
	int nvars = 1;
	// value of each group cyclic generator on each variable (roots of unity)
	std::vector<std::vector<CycloScalar>> gen_action;
	// w_i as a scalar multiple of a Laurent monomial
	std::vector<std::pair<CycloScalar, std::vector<long>>> w;
};

// an operator word: entries act right to left on the module field
using OpStep = std::variant<int, GroupElement>; // x_index or group element
struct OpTerm {
	CycloScalar coeff;
	std::vector<OpStep> steps;
};
struct OpRelation {
	std::string label;
	std::vector<OpTerm> terms;
};

struct RelationCheckResult {
	std::string label;
	bool holds = false;
	std::string failure; // first failing basis monomial, if any
};

struct IndependenceReport {
	bool independent = true;
	std::vector<std::string> detail; // one line per (g, chi) class
};

class FieldAction {
  public:
	FieldAction(HopfDatum d, ActionSpec spec); // validates on construction

	const HopfDatum &datum() const { return d_; }
	const ActionSpec &spec() const { return spec_; }

	CycloScalar eigenvalue(const GroupElement &a,
	                       const std::vector<long> &exps) const;

	LaurentPoly apply_group(const GroupElement &a,
	                        const LaurentPoly &f) const;
	LaurentPoly apply_x(int i, const LaurentPoly &f) const;
	LaurentPoly apply_word(const Word &w, const LaurentPoly &f) const;
	LaurentPoly apply_poly(const NcPoly &p, const LaurentPoly &f) const;
	LaurentPoly apply_group_algebra(const GroupAlgebraElement &a,
	                                const LaurentPoly &f) const;
	LaurentPoly apply_term(const OpTerm &t, const LaurentPoly &f) const;

	// checks each relation on all monomials z^a with |a_v| <= degree_bound
	std::vector<RelationCheckResult>
	verify_relations_on_basis(const std::vector<OpRelation> &relations,
	                          long degree_bound) const;

	// the w_i within one (g_i, chi_i) class must be linearly independent
	IndependenceReport check_linear_independence() const;

  private:
	HopfDatum d_;
	ActionSpec spec_;
};

// smallest Laurent monomial (by |exponent| then lexicographic) on which G
// acts through chi; throws NoEquivariantMonomial if none exists in the box
std::vector<long> find_equivariant_monomial(const FiniteAbelianGroup &G,
                                            const ActionSpec &spec,
                                            const Character &chi,
                                            long bound);

// Example: u_q(sl2) acting on k(z), q a primitive m-th root (m odd).
// x1 = e, x2 = kf, k . z = q^-2 z, w1 = (1-q^-2)^-1 z^-1,
// w2 = -q^-1 (q^2-1)^-1 z.
struct Sl2Demo {
	HopfDatum datum;
	ActionSpec spec;
	std::vector<OpRelation> relations; // the six defining relations
};
Sl2Demo make_sl2_demo(long m);

} // namespace hopfgal
