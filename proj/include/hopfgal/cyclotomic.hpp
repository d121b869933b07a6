#pragma once

// Exact arithmetic in Q(zeta_N), power basis mod the N-th cyclotomic
// polynomial, extended by formal root-of-unity symbols of declared order.

#include "hopfgal/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfgal {

using Rat = boost::multiprecision::cpp_rational;

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);

// coefficients of Phi_n, low degree first
std::vector<Rat> cyclotomic_polynomial(long n);

struct UnitSymbol {
	std::string name;
	long order = 1;
};

class CycloContext {
  public:
	CycloContext(long conductor, std::vector<UnitSymbol> symbols = {});

	long conductor() const { return conductor_; }
	int degree() const { return degree_; }
	const std::vector<Rat> &phi_poly() const { return phi_; }
	const std::vector<UnitSymbol> &symbols() const { return symbols_; }
	int symbol_index(const std::string &name) const; // -1 if absent
	bool same(const CycloContext &other) const;

	// coefficient vector of zeta_N^k in the power basis
	const std::vector<Rat> &root_vector(long k) const;

	// reduce a polynomial (low-first) mod Phi_N to length degree()
	std::vector<Rat> reduce(std::vector<Rat> poly) const;
	// in-place integer reduction; false when unavailable or near overflow
	// (the caller then falls back to the exact rational path)
	bool reduce_small(std::vector<long long> &poly) const;

  private:
	long conductor_;
	int degree_;
	std::vector<Rat> phi_;
	std::vector<UnitSymbol> symbols_;
	std::vector<std::vector<Rat>> red_;   // x^(degree+i) mod Phi_N
	std::vector<std::vector<Rat>> roots_; // zeta^k, k = 0..N-1
	std::vector<std::vector<long long>> red_i64_; // red_ as small integers
	bool red_i64_ok_ = false;
};

using CtxPtr = std::shared_ptr<const CycloContext>;

CtxPtr make_context(long conductor, std::vector<UnitSymbol> symbols = {});

struct RootIndex {
	long zeta_exp = 0;         // power of zeta_conductor
	std::vector<int> sym_exps; // exponent per declared symbol
};

class CycloScalar {
  public:
	CycloScalar() = default;
	explicit CycloScalar(CtxPtr ctx) : ctx_(std::move(ctx)) {}

	static CycloScalar zero(const CtxPtr &ctx);
	static CycloScalar from_rat(const CtxPtr &ctx, const Rat &r);
	static CycloScalar from_int(const CtxPtr &ctx, long n);
	// zeta_subN^k, requires subN | conductor
	static CycloScalar root(const CtxPtr &ctx, long sub_n, long k);
	static CycloScalar symbol(const CtxPtr &ctx, int index, long exp = 1);
	static CycloScalar symbol(const CtxPtr &ctx, const std::string &name,
	                          long exp = 1);

	const CtxPtr &ctx() const { return ctx_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const;
	bool is_rational() const;
	std::optional<Rat> as_rational() const;

	CycloScalar operator-() const;
	CycloScalar operator+(const CycloScalar &o) const;
	CycloScalar operator-(const CycloScalar &o) const;
	CycloScalar operator*(const CycloScalar &o) const;
	CycloScalar &operator+=(const CycloScalar &o);
	CycloScalar &operator*=(const CycloScalar &o);
	bool operator==(const CycloScalar &o) const;
	bool operator!=(const CycloScalar &o) const { return !(*this == o); }

	// inverse; defined for single-term values (unit check), throws otherwise
	CycloScalar inv() const;
	CycloScalar div(const CycloScalar &o) const { return *this * o.inv(); }
	CycloScalar pow(long n) const;

	// single term zeta^k * prod sym^e with coefficient exactly 1
	std::optional<RootIndex> as_root() const;
	// order in the formal group mu_N x prod <symbol>; nullopt if not a root
	std::optional<long> multiplicative_order() const;

	// replace a symbol by a concrete value (order must divide the symbol's)
	CycloScalar substitute(int sym_index, const CycloScalar &value) const;

	// move to a context with conductor a multiple of the current one
	// (symbol lists must match)
	CycloScalar lifted(const CtxPtr &bigger) const;
	// inverse of lifted(); nullopt if not expressible at the smaller conductor
	std::optional<CycloScalar> lowered(const CtxPtr &smaller) const;

	std::string str() const;

	// deterministic ordering (for use as map key)
	bool operator<(const CycloScalar &o) const { return terms_ < o.terms_; }

  private:
	CtxPtr ctx_;
	// symbol exponent vector -> power basis coefficients (length degree)
	std::map<std::vector<int>, std::vector<Rat>> terms_;

	void prune();
	static std::vector<int> mul_exps(const CycloContext &ctx,
	                                 const std::vector<int> &a,
	                                 const std::vector<int> &b);
};

std::string rat_str(const Rat &r);

} // namespace hopfgal
