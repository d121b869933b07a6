#include "hopfgal/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hopfgal {

long gcd_long(long a, long b)
{
	if (a < 0)
		a = -a;
	if (b < 0)
		b = -b;
	while (b)
	{
		long t = a % b;
		a = b;
		b = t;
	}
	return a;
}

long lcm_long(long a, long b)
{
	if (a == 0 || b == 0)
		return 0;
	return a / gcd_long(a, b) * b;
}

long euler_phi(long n)
{
	long r = n;
	for (long p = 2; p * p <= n; ++p)
		if (n % p == 0)
		{
			while (n % p == 0)
				n /= p;
			r -= r / p;
		}
	if (n > 1)
		r -= r / n;
	return r;
}

namespace {

int poly_deg(const std::vector<Rat> &p)
{
	for (int i = (int)p.size() - 1; i >= 0; --i)
		if (p[i] != 0)
			return i;
	return -1;
}

// exact division, asserts zero remainder
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat> &b)
{
	int db = poly_deg(b);
	assert(db >= 0);
	std::vector<Rat> out(std::max<size_t>(a.size() - db, 1), Rat(0));
	for (int i = (int)a.size() - 1 - db; i >= 0; --i)
	{
		Rat c = a[i + db] / b[db];
		out[i] = c;
		if (c != 0)
			for (int j = 0; j <= db; ++j)
				a[i + j] -= c * b[j];
	}
	assert(poly_deg(a) < 0);
	return out;
}

} // namespace

std::vector<Rat> cyclotomic_polynomial(long n)
{
	// x^n - 1 divided by Phi_d for all proper divisors d
	std::vector<Rat> num(n + 1, Rat(0));
	num[0] = Rat(-1);
	num[n] = Rat(1);
	for (long d = 1; d < n; ++d)
		if (n % d == 0)
			num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
	return num;
}

CycloContext::CycloContext(long conductor, std::vector<UnitSymbol> symbols)
    : conductor_(conductor), symbols_(std::move(symbols))
{
	if (conductor < 1)
		throw Error("conductor must be positive");
	for (auto &s : symbols_)
		if (s.order < 1)
			throw Error("unit symbol order must be positive");
	phi_ = cyclotomic_polynomial(conductor);
	degree_ = (int)phi_.size() - 1;

	// reductions of x^(degree+i), enough to cover zeta^k for k < N and
	// products of two reduced polynomials
	int extra = std::max(degree_ - 1, (int)(conductor - degree_));
	std::vector<Rat> cur(degree_);
	for (int i = 0; i < degree_; ++i)
		cur[i] = -phi_[i];
	red_.push_back(cur);
	for (int step = 1; step < extra; ++step)
	{
		std::vector<Rat> nxt(degree_, Rat(0));
		Rat lead = cur[degree_ - 1];
		for (int i = degree_ - 1; i > 0; --i)
			nxt[i] = cur[i - 1];
		if (lead != 0)
			for (int i = 0; i < degree_; ++i)
				nxt[i] += lead * red_[0][i];
		cur = std::move(nxt);
		red_.push_back(cur);
	}

	roots_.resize(conductor_);
	for (long k = 0; k < conductor_; ++k)
	{
		std::vector<Rat> v(k + 1, Rat(0));
		v[k] = Rat(1);
		roots_[k] = reduce(std::move(v));
	}

	// integer mirror of the reduction table for the fast arithmetic path
	red_i64_ok_ = degree_ <= 64;
	for (auto &row : red_)
	{
		if (!red_i64_ok_)
			break;
		std::vector<long long> r(row.size());
		for (size_t i = 0; i < row.size(); ++i)
		{
			if (denominator(row[i]) != 1 || numerator(row[i]) > (1 << 20) ||
			    numerator(row[i]) < -(1 << 20))
			{
				red_i64_ok_ = false;
				break;
			}
			r[i] = numerator(row[i]).convert_to<long long>();
		}
		if (red_i64_ok_)
			red_i64_.push_back(std::move(r));
	}
}

int CycloContext::symbol_index(const std::string &name) const
{
	for (size_t i = 0; i < symbols_.size(); ++i)
		if (symbols_[i].name == name)
			return (int)i;
	return -1;
}

bool CycloContext::same(const CycloContext &other) const
{
	if (conductor_ != other.conductor_ ||
	    symbols_.size() != other.symbols_.size())
		return false;
	for (size_t i = 0; i < symbols_.size(); ++i)
		if (symbols_[i].name != other.symbols_[i].name ||
		    symbols_[i].order != other.symbols_[i].order)
			return false;
	return true;
}

const std::vector<Rat> &CycloContext::root_vector(long k) const
{
	k %= conductor_;
	if (k < 0)
		k += conductor_;
	return roots_[k];
}

std::vector<Rat> CycloContext::reduce(std::vector<Rat> poly) const
{
	for (int k = (int)poly.size() - 1; k >= degree_; --k)
	{
		Rat c = poly[k];
		if (c != 0)
		{
			poly[k] = Rat(0);
			const auto &row = red_.at(k - degree_);
			for (int i = 0; i < degree_; ++i)
				poly[i] += c * row[i];
		}
	}
	poly.resize(degree_, Rat(0));
	return poly;
}

bool CycloContext::reduce_small(std::vector<long long> &poly) const
{
	if (!red_i64_ok_ || poly.size() > degree_ + red_i64_.size())
		return false;
	for (int k = (int)poly.size() - 1; k >= degree_; --k)
	{
		long long c = poly[k];
		if (!c)
			continue;
		poly[k] = 0;
		const auto &row = red_i64_[k - degree_];
		for (int i = 0; i < degree_; ++i)
			if (row[i])
			{
				__int128 t = (__int128)poly[i] + (__int128)c * row[i];
				if (t > ((__int128)1 << 62) || t < -((__int128)1 << 62))
					return false;
				poly[i] = (long long)t;
			}
	}
	poly.resize(degree_);
	return true;
}

CtxPtr make_context(long conductor, std::vector<UnitSymbol> symbols)
{
	return std::make_shared<CycloContext>(conductor, std::move(symbols));
}

void CycloScalar::prune()
{
	for (auto it = terms_.begin(); it != terms_.end();)
	{
		bool zero = true;
		for (auto &c : it->second)
			if (c != 0)
			{
				zero = false;
				break;
			}
		it = zero ? terms_.erase(it) : std::next(it);
	}
}

std::vector<int> CycloScalar::mul_exps(const CycloContext &ctx,
                                       const std::vector<int> &a,
                                       const std::vector<int> &b)
{
	std::vector<int> out(a.size());
	for (size_t i = 0; i < a.size(); ++i)
	{
		long o = ctx.symbols()[i].order;
		out[i] = (int)(((long)a[i] + b[i]) % o);
	}
	return out;
}

CycloScalar CycloScalar::zero(const CtxPtr &ctx) { return CycloScalar(ctx); }

CycloScalar CycloScalar::from_rat(const CtxPtr &ctx, const Rat &r)
{
	CycloScalar s(ctx);
	if (r != 0)
	{
		std::vector<Rat> v(ctx->degree(), Rat(0));
		v[0] = r;
		s.terms_[std::vector<int>(ctx->symbols().size(), 0)] = std::move(v);
	}
	return s;
}

CycloScalar CycloScalar::from_int(const CtxPtr &ctx, long n)
{
	return from_rat(ctx, Rat(n));
}

CycloScalar CycloScalar::root(const CtxPtr &ctx, long sub_n, long k)
{
	if (sub_n < 1 || ctx->conductor() % sub_n != 0)
		throw OrderMismatch("zeta order " + std::to_string(sub_n) +
		                    " does not divide conductor " +
		                    std::to_string(ctx->conductor()));
	long kk = k % sub_n;
	if (kk < 0)
		kk += sub_n;
	CycloScalar s(ctx);
	s.terms_[std::vector<int>(ctx->symbols().size(), 0)] =
	    ctx->root_vector(kk * (ctx->conductor() / sub_n));
	return s;
}

CycloScalar CycloScalar::symbol(const CtxPtr &ctx, int index, long exp)
{
	if (index < 0 || index >= (int)ctx->symbols().size())
		throw UnknownSymbol("symbol index out of range");
	long o = ctx->symbols()[index].order;
	long e = exp % o;
	if (e < 0)
		e += o;
	CycloScalar s(ctx);
	std::vector<int> exps(ctx->symbols().size(), 0);
	exps[index] = (int)e;
	std::vector<Rat> v(ctx->degree(), Rat(0));
	v[0] = Rat(1);
	s.terms_[std::move(exps)] = std::move(v);
	return s;
}

CycloScalar CycloScalar::symbol(const CtxPtr &ctx, const std::string &name,
                                long exp)
{
	int i = ctx->symbol_index(name);
	if (i < 0)
		throw UnknownSymbol("unknown unit symbol: " + name);
	return symbol(ctx, i, exp);
}

bool CycloScalar::is_one() const
{
	auto r = as_rational();
	return r && *r == 1;
}

bool CycloScalar::is_rational() const { return as_rational().has_value(); }

std::optional<Rat> CycloScalar::as_rational() const
{
	if (terms_.empty())
		return Rat(0);
	if (terms_.size() != 1)
		return std::nullopt;
	const auto &[exps, v] = *terms_.begin();
	for (int e : exps)
		if (e != 0)
			return std::nullopt;
	for (size_t i = 1; i < v.size(); ++i)
		if (v[i] != 0)
			return std::nullopt;
	return v[0];
}

CycloScalar CycloScalar::operator-() const
{
	CycloScalar out(ctx_);
	for (auto &[k, v] : terms_)
	{
		std::vector<Rat> w(v.size());
		for (size_t i = 0; i < v.size(); ++i)
			w[i] = -v[i];
		out.terms_[k] = std::move(w);
	}
	return out;
}

CycloScalar CycloScalar::operator+(const CycloScalar &o) const
{
	CycloScalar out = *this;
	out += o;
	return out;
}

namespace {

// small-integer view of a coefficient vector; false when any entry is a
// non-integer or too large for the overflow-checked fast path
bool to_small(const std::vector<Rat> &v, std::vector<long long> &out)
{
	const long long lim = 1LL << 25;
	out.assign(v.size(), 0);
	for (size_t i = 0; i < v.size(); ++i)
	{
		if (denominator(v[i]) != 1 || numerator(v[i]) > lim ||
		    numerator(v[i]) < -lim)
			return false;
		out[i] = numerator(v[i]).convert_to<long long>();
	}
	return true;
}

} // namespace

CycloScalar &CycloScalar::operator+=(const CycloScalar &o)
{
	if (!ctx_)
		ctx_ = o.ctx_;
	else if (o.ctx_ && !ctx_->same(*o.ctx_))
		throw OrderMismatch("scalar contexts differ");
	std::vector<long long> a64, b64;
	for (auto &[k, v] : o.terms_)
	{
		auto it = terms_.find(k);
		if (it == terms_.end())
		{
			terms_[k] = v;
			continue;
		}
		if (to_small(it->second, a64) && to_small(v, b64))
		{
			for (size_t i = 0; i < v.size(); ++i)
				if (b64[i])
					it->second[i] = Rat(a64[i] + b64[i]);
		}
		else
			for (size_t i = 0; i < v.size(); ++i)
				it->second[i] += v[i];
	}
	prune();
	return *this;
}

CycloScalar CycloScalar::operator-(const CycloScalar &o) const
{
	return *this + (-o);
}

CycloScalar CycloScalar::operator*(const CycloScalar &o) const
{
	if (ctx_ && o.ctx_ && !ctx_->same(*o.ctx_))
		throw OrderMismatch("scalar contexts differ");
	CycloScalar out(ctx_ ? ctx_ : o.ctx_);
	if (!out.ctx_)
		return out;
	const auto &ctx = *out.ctx_;
	int deg = ctx.degree();
	std::vector<long long> a64, b64, c64;
	for (auto &[k1, v1] : terms_)
	{
		bool a_ok = to_small(v1, a64);
		for (auto &[k2, v2] : o.terms_)
		{
			std::vector<Rat> w;
			if (a_ok && to_small(v2, b64))
			{
				c64.assign(2 * deg - 1, 0);
				for (int i = 0; i < deg; ++i)
					if (a64[i])
						for (int j = 0; j < deg; ++j)
							if (b64[j])
								c64[i + j] += a64[i] * b64[j];
				if (ctx.reduce_small(c64))
				{
					w.resize(deg);
					for (int i = 0; i < deg; ++i)
						if (c64[i])
							w[i] = Rat(c64[i]);
				}
			}
			if (w.empty())
			{
				std::vector<Rat> conv(2 * deg - 1, Rat(0));
				for (int i = 0; i < deg; ++i)
					if (v1[i] != 0)
						for (int j = 0; j < deg; ++j)
							if (v2[j] != 0)
								conv[i + j] += v1[i] * v2[j];
				w = ctx.reduce(std::move(conv));
			}
			auto key = mul_exps(ctx, k1, k2);
			auto it = out.terms_.find(key);
			if (it == out.terms_.end())
				out.terms_[std::move(key)] = std::move(w);
			else
				for (int i = 0; i < deg; ++i)
					it->second[i] += w[i];
		}
	}
	out.prune();
	return out;
}

CycloScalar &CycloScalar::operator*=(const CycloScalar &o)
{
	*this = *this * o;
	return *this;
}

bool CycloScalar::operator==(const CycloScalar &o) const
{
	return (*this - o).is_zero();
}

CycloScalar CycloScalar::inv() const
{
	if (is_zero())
		throw DivisionByZero("division by zero");
	if (terms_.size() != 1)
		throw NonUnitDivisor(
		    "divisor must be a single cyclotomic term: " + str());
	const auto &ctx = *ctx_;
	const auto &[exps, v] = *terms_.begin();

	// extended euclid: s*v + t*Phi = gcd (a nonzero constant)
	std::vector<Rat> r0 = ctx.phi_poly(), r1(v.begin(), v.end());
	std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
	while (poly_deg(r1) > 0)
	{
		int d1 = poly_deg(r1);
		std::vector<Rat> q(poly_deg(r0) - d1 + 1, Rat(0));
		std::vector<Rat> rr = r0;
		while (poly_deg(rr) >= d1)
		{
			int d = poly_deg(rr) - d1;
			Rat c = rr[poly_deg(rr)] / r1[d1];
			q[d] += c;
			for (int i = 0; i <= d1; ++i)
				rr[i + d] -= c * r1[i];
		}
		std::vector<Rat> s2(s0.size() + q.size() + s1.size(), Rat(0));
		for (size_t i = 0; i < s0.size(); ++i)
			s2[i] = s0[i];
		for (size_t i = 0; i < q.size(); ++i)
			if (q[i] != 0)
				for (size_t j = 0; j < s1.size(); ++j)
					s2[i + j] -= q[i] * s1[j];
		r0 = std::move(r1);
		r1 = std::move(rr);
		s0 = std::move(s1);
		s1 = std::move(s2);
	}
	if (poly_deg(r1) < 0)
		throw NonUnitDivisor("divisor is not invertible mod Phi_N");
	Rat c = r1[0];
	for (auto &x : s1)
		x /= c;

	CycloScalar out(ctx_);
	std::vector<int> kk(exps.size());
	for (size_t i = 0; i < exps.size(); ++i)
	{
		long o = ctx.symbols()[i].order;
		kk[i] = (int)((o - exps[i]) % o);
	}
	out.terms_[std::move(kk)] = ctx.reduce(std::move(s1));
	out.prune();
	return out;
}

CycloScalar CycloScalar::pow(long n) const
{
	if (n < 0)
		return inv().pow(-n);
	CycloScalar r = from_int(ctx_, 1);
	CycloScalar b = *this;
	while (n)
	{
		if (n & 1)
			r = r * b;
		b = b * b;
		n >>= 1;
	}
	return r;
}

std::optional<RootIndex> CycloScalar::as_root() const
{
	if (terms_.size() != 1)
		return std::nullopt;
	const auto &[exps, v] = *terms_.begin();
	for (long k = 0; k < ctx_->conductor(); ++k)
		if (v == ctx_->root_vector(k))
		{
			RootIndex ri;
			ri.zeta_exp = k;
			ri.sym_exps = exps;
			return ri;
		}
	return std::nullopt;
}

std::optional<long> CycloScalar::multiplicative_order() const
{
	auto ri = as_root();
	if (!ri)
		return std::nullopt;
	long n = ctx_->conductor();
	long ord = n / gcd_long(ri->zeta_exp, n);
	for (size_t i = 0; i < ri->sym_exps.size(); ++i)
	{
		long o = ctx_->symbols()[i].order;
		ord = lcm_long(ord, o / gcd_long(ri->sym_exps[i], o));
	}
	return ord;
}

CycloScalar CycloScalar::substitute(int sym_index,
                                    const CycloScalar &value) const
{
	if (sym_index < 0 || sym_index >= (int)ctx_->symbols().size())
		throw UnknownSymbol("symbol index out of range");
	auto vord = value.multiplicative_order();
	if (!vord || ctx_->symbols()[sym_index].order % *vord != 0)
		throw OrderMismatch(
		    "substituted value must be a root of unity whose order divides "
		    "the symbol's declared order");
	CycloScalar out = zero(ctx_);
	for (auto &[exps, v] : terms_)
	{
		CycloScalar term(ctx_);
		auto e2 = exps;
		int e = e2[sym_index];
		e2[sym_index] = 0;
		term.terms_[std::move(e2)] = v;
		out += term * value.pow(e);
	}
	return out;
}

CycloScalar CycloScalar::lifted(const CtxPtr &bigger) const
{
	long n = ctx_->conductor(), m = bigger->conductor();
	if (m % n != 0)
		throw OrderMismatch("target conductor not a multiple");
	if (bigger->symbols().size() != ctx_->symbols().size())
		throw OrderMismatch("symbol lists differ");
	long step = m / n;
	CycloScalar out = zero(bigger);
	for (auto &[exps, v] : terms_)
	{
		CycloScalar acc = zero(bigger);
		for (int i = 0; i < (int)v.size(); ++i)
			if (v[i] != 0)
				acc += from_rat(bigger, v[i]) * root(bigger, m, i * step);
		CycloScalar symspart(bigger);
		std::vector<Rat> one(bigger->degree(), Rat(0));
		one[0] = Rat(1);
		symspart.terms_[exps] = std::move(one);
		out += acc * symspart;
	}
	return out;
}

std::optional<CycloScalar> CycloScalar::lowered(const CtxPtr &smaller) const
{
	long n = smaller->conductor(), m = ctx_->conductor();
	if (m % n != 0)
		throw OrderMismatch("source conductor not a multiple");
	int dn = smaller->degree(), dm = ctx_->degree();
	// basis of the image of the small power basis inside the big one
	std::vector<std::vector<Rat>> basis(dn);
	for (int j = 0; j < dn; ++j)
		basis[j] = ctx_->root_vector((long)j * (m / n));

	CycloScalar out = zero(smaller);
	for (auto &[exps, v] : terms_)
	{
		// solve sum_j c_j basis[j] = v by gaussian elimination
		std::vector<std::vector<Rat>> a(dm, std::vector<Rat>(dn + 1, Rat(0)));
		for (int i = 0; i < dm; ++i)
		{
			for (int j = 0; j < dn; ++j)
				a[i][j] = basis[j][i];
			a[i][dn] = v[i];
		}
		int row = 0;
		std::vector<int> pivot_col(dm, -1);
		for (int col = 0; col < dn && row < dm; ++col)
		{
			int p = -1;
			for (int i = row; i < dm; ++i)
				if (a[i][col] != 0)
				{
					p = i;
					break;
				}
			if (p < 0)
				continue;
			std::swap(a[row], a[p]);
			for (int i = 0; i < dm; ++i)
				if (i != row && a[i][col] != 0)
				{
					Rat f = a[i][col] / a[row][col];
					for (int j = col; j <= dn; ++j)
						a[i][j] -= f * a[row][j];
				}
			pivot_col[row] = col;
			++row;
		}
		std::vector<Rat> c(dn, Rat(0));
		for (int i = 0; i < row; ++i)
			c[pivot_col[i]] = a[i][dn] / a[i][pivot_col[i]];
		for (int i = row; i < dm; ++i)
			if (a[i][dn] != 0)
				return std::nullopt; // inconsistent: not in the subfield
		CycloScalar term(smaller);
		term.terms_[exps] = std::move(c);
		term.prune();
		out += term;
	}
	return out;
}

std::string rat_str(const Rat &r)
{
	std::ostringstream ss;
	ss << r;
	return ss.str();
}

std::string CycloScalar::str() const
{
	if (is_zero())
		return "0";
	// atoms: (zeta exponent, symbol exps, rational coeff), ordered by
	// ascending zeta exponent then lexicographic symbol exponents
	struct Atom {
		int k;
		std::vector<int> exps;
		Rat c;
	};
	std::vector<Atom> atoms;
	for (auto &[exps, v] : terms_)
		for (int k = 0; k < (int)v.size(); ++k)
			if (v[k] != 0)
				atoms.push_back({k, exps, v[k]});
	std::sort(atoms.begin(), atoms.end(), [](const Atom &a, const Atom &b) {
		if (a.k != b.k)
			return a.k < b.k;
		return a.exps < b.exps;
	});
	std::ostringstream ss;
	bool first = true;
	for (auto &a : atoms)
	{
		Rat c = a.c;
		if (first)
		{
			if (c < 0)
			{
				ss << "-";
				c = -c;
			}
		}
		else
		{
			if (c < 0)
			{
				ss << " - ";
				c = -c;
			}
			else
				ss << " + ";
		}
		first = false;
		std::vector<std::string> parts;
		bool unitpart = false;
		if (a.k != 0)
		{
			parts.push_back("zeta" + std::to_string(ctx_->conductor()) + "^" +
			                std::to_string(a.k));
			unitpart = true;
		}
		for (size_t i = 0; i < a.exps.size(); ++i)
			if (a.exps[i] != 0)
			{
				std::string p = ctx_->symbols()[i].name;
				if (a.exps[i] != 1)
					p += "^" + std::to_string(a.exps[i]);
				parts.push_back(p);
				unitpart = true;
			}
		if (c != 1 || !unitpart)
		{
			std::string cs = rat_str(c);
			parts.insert(parts.begin(), cs);
		}
		for (size_t i = 0; i < parts.size(); ++i)
		{
			if (i)
				ss << "*";
			ss << parts[i];
		}
	}
	return ss.str();
}

} // namespace hopfgal
