#include "hopfgal/group.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace hopfgal {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> orders)
    : orders_(std::move(orders))
{
	for (long m : orders_)
		if (m < 1)
			throw Error("cyclic factor order must be positive");
}

long FiniteAbelianGroup::order() const
{
	long n = 1;
	for (long m : orders_)
		n *= m;
	return n;
}

long FiniteAbelianGroup::exponent() const
{
	long n = 1;
	for (long m : orders_)
		n = lcm_long(n, m);
	return n;
}

GroupElement FiniteAbelianGroup::identity() const
{
	return GroupElement(orders_.size(), 0);
}

GroupElement FiniteAbelianGroup::normalize(GroupElement a) const
{
	if (a.size() != orders_.size())
		throw Error("group element has wrong number of coordinates");
	for (size_t i = 0; i < a.size(); ++i)
	{
		a[i] %= orders_[i];
		if (a[i] < 0)
			a[i] += orders_[i];
	}
	return a;
}

GroupElement FiniteAbelianGroup::mul(const GroupElement &a,
                                     const GroupElement &b) const
{
	GroupElement c(orders_.size());
	for (size_t i = 0; i < orders_.size(); ++i)
		c[i] = (a[i] + b[i]) % orders_[i];
	return c;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement &a) const
{
	GroupElement c(orders_.size());
	for (size_t i = 0; i < orders_.size(); ++i)
		c[i] = (orders_[i] - a[i]) % orders_[i];
	return c;
}

GroupElement FiniteAbelianGroup::power(const GroupElement &a, long n) const
{
	GroupElement c(orders_.size());
	for (size_t i = 0; i < orders_.size(); ++i)
	{
		long v = (a[i] % orders_[i]) * (n % orders_[i]) % orders_[i];
		if (v < 0)
			v += orders_[i];
		c[i] = v;
	}
	return c;
}

bool FiniteAbelianGroup::is_identity(const GroupElement &a) const
{
	for (size_t i = 0; i < orders_.size(); ++i)
		if (a[i] % orders_[i] != 0)
			return false;
	return true;
}

long FiniteAbelianGroup::element_order(const GroupElement &a) const
{
	long n = 1;
	for (size_t i = 0; i < orders_.size(); ++i)
		n = lcm_long(n, orders_[i] / gcd_long(a[i], orders_[i]));
	return n;
}

GroupElement FiniteAbelianGroup::generator(size_t i) const
{
	GroupElement a(orders_.size(), 0);
	a[i] = 1 % orders_[i];
	return a;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const
{
	std::vector<GroupElement> out;
	out.push_back(identity());
	for (size_t i = 0; i < orders_.size(); ++i)
	{
		std::vector<GroupElement> next;
		for (auto &e : out)
			for (long k = 0; k < orders_[i]; ++k)
			{
				auto f = e;
				f[i] = k;
				next.push_back(f);
			}
		out = std::move(next);
	}
	return out;
}

std::string FiniteAbelianGroup::str() const
{
	if (orders_.empty())
		return "Z1";
	std::ostringstream ss;
	for (size_t i = 0; i < orders_.size(); ++i)
	{
		if (i)
			ss << " x ";
		ss << "Z" << orders_[i];
	}
	return ss.str();
}

std::string FiniteAbelianGroup::element_str(const GroupElement &a) const
{
	if (orders_.size() == 1)
	{
		if (a[0] == 0)
			return "1";
		if (a[0] == 1)
			return "g";
		return "g^" + std::to_string(a[0]);
	}
	std::ostringstream ss;
	ss << "(";
	for (size_t i = 0; i < a.size(); ++i)
	{
		if (i)
			ss << ",";
		ss << a[i];
	}
	ss << ")";
	return ss.str();
}

namespace {

using Mat = std::vector<std::vector<long>>;

Mat eye(size_t n)
{
	Mat m(n, std::vector<long>(n, 0));
	for (size_t i = 0; i < n; ++i)
		m[i][i] = 1;
	return m;
}

} // namespace

SmithResult smith_normal_form(Mat A)
{
	size_t rows = A.size();
	size_t cols = rows ? A[0].size() : 0;
	SmithResult r;
	r.U = eye(rows);
	r.U_inv = eye(rows);
	r.V = eye(cols);

	auto row_sub = [&](size_t i, size_t t, long f) {
		// row_i -= f * row_t ; inverse: col_t += f * col_i in U_inv
		for (size_t j = 0; j < cols; ++j)
			A[i][j] -= f * A[t][j];
		for (size_t j = 0; j < rows; ++j)
			r.U[i][j] -= f * r.U[t][j];
		for (size_t j = 0; j < rows; ++j)
			r.U_inv[j][t] += f * r.U_inv[j][i];
	};
	auto col_sub = [&](size_t j, size_t t, long f) {
		for (size_t i = 0; i < rows; ++i)
			A[i][j] -= f * A[i][t];
		for (size_t i = 0; i < cols; ++i)
			r.V[i][j] -= f * r.V[i][t];
	};
	auto row_swap = [&](size_t i, size_t t) {
		std::swap(A[i], A[t]);
		std::swap(r.U[i], r.U[t]);
		for (size_t j = 0; j < rows; ++j)
			std::swap(r.U_inv[j][i], r.U_inv[j][t]);
	};
	auto col_swap = [&](size_t j, size_t t) {
		for (size_t i = 0; i < rows; ++i)
			std::swap(A[i][j], A[i][t]);
		for (size_t i = 0; i < cols; ++i)
			std::swap(r.V[i][j], r.V[i][t]);
	};

	size_t t = 0;
	while (t < rows && t < cols)
	{
		// pivot: smallest nonzero absolute value in the trailing block
		size_t pi = t, pj = t;
		long best = 0;
		for (size_t i = t; i < rows; ++i)
			for (size_t j = t; j < cols; ++j)
				if (A[i][j] != 0 &&
				    (best == 0 || std::abs(A[i][j]) < best))
				{
					best = std::abs(A[i][j]);
					pi = i;
					pj = j;
				}
		if (best == 0)
			break;
		if (pi != t)
			row_swap(pi, t);
		if (pj != t)
			col_swap(pj, t);

		bool clean = true;
		for (size_t i = t + 1; i < rows; ++i)
			if (A[i][t] != 0)
			{
				row_sub(i, t, A[i][t] / A[t][t]);
				if (A[i][t] != 0)
					clean = false;
			}
		for (size_t j = t + 1; j < cols; ++j)
			if (A[t][j] != 0)
			{
				col_sub(j, t, A[t][j] / A[t][t]);
				if (A[t][j] != 0)
					clean = false;
			}
		if (!clean)
			continue;
		// divisibility of the trailing block
		bool divides = true;
		for (size_t i = t + 1; i < rows && divides; ++i)
			for (size_t j = t + 1; j < cols; ++j)
				if (A[i][j] % A[t][t] != 0)
				{
					row_sub(t, i, -1); // row_t += row_i
					divides = false;
					break;
				}
		if (!divides)
			continue;
		++t;
	}
	for (size_t i = 0; i < t; ++i)
		if (A[i][i] < 0)
		{
			for (size_t j = 0; j < cols; ++j)
				A[i][j] = -A[i][j];
			for (size_t j = 0; j < rows; ++j)
				r.U[i][j] = -r.U[i][j];
			for (size_t j = 0; j < rows; ++j)
				r.U_inv[j][i] = -r.U_inv[j][i];
		}
	r.D = std::move(A);
	return r;
}

Subgroup subgroup_generated(const FiniteAbelianGroup &G,
                            const std::vector<GroupElement> &gens)
{
	size_t s = gens.size();
	size_t k = G.rank();

	auto apply = [&](const std::vector<long> &expr) {
		GroupElement e = G.identity();
		for (size_t i = 0; i < s; ++i)
			e = G.mul(e, G.power(gens[i], expr[i]));
		return e;
	};

	Subgroup out;
	if (s == 0)
	{
		out.group = FiniteAbelianGroup(std::vector<long>{});
		out.order = 1;
		return out;
	}

	// relation lattice K = { v in Z^s : sum v_i gens_i = 0 in G } as the
	// projection of the integer kernel of [M | diag(orders)]
	Mat A(k, std::vector<long>(s + k, 0));
	for (size_t i = 0; i < k; ++i)
	{
		for (size_t j = 0; j < s; ++j)
			A[i][j] = gens[j][i];
		A[i][s + i] = G.orders()[i];
	}
	auto snf = smith_normal_form(A);
	size_t rank = 0;
	for (size_t i = 0; i < k && i < s + k; ++i)
		if (snf.D[i][i] != 0)
			++rank;
	Mat B(s, std::vector<long>(s + k - rank, 0));
	for (size_t c = rank; c < s + k; ++c)
		for (size_t i = 0; i < s; ++i)
			B[i][c - rank] = snf.V[i][c];

	auto snf2 = smith_normal_form(B);
	std::vector<long> d(s);
	for (size_t i = 0; i < s; ++i)
	{
		d[i] = (i < snf2.D.size() && i < snf2.D[i].size()) ? snf2.D[i][i] : 0;
		assert(d[i] != 0); // quotient is finite
		if (d[i] < 0)
			d[i] = -d[i];
	}

	std::vector<long> kept_orders;
	std::vector<size_t> kept;
	long total = 1;
	for (size_t j = 0; j < s; ++j)
		if (d[j] > 1)
		{
			kept.push_back(j);
			kept_orders.push_back(d[j]);
			total *= d[j];
		}
	out.group = FiniteAbelianGroup(kept_orders);
	out.order = total;
	for (size_t idx = 0; idx < kept.size(); ++idx)
	{
		size_t j = kept[idx];
		std::vector<long> expr(s);
		for (size_t i = 0; i < s; ++i)
			expr[i] = snf2.U_inv[i][j];
		out.gen_expr.push_back(expr);
		out.cyclic_gens.push_back(apply(expr));
	}
	for (size_t i = 0; i < s; ++i)
	{
		GroupElement coords(kept.size());
		for (size_t idx = 0; idx < kept.size(); ++idx)
		{
			long v = snf2.U[kept[idx]][i] % kept_orders[idx];
			if (v < 0)
				v += kept_orders[idx];
			coords[idx] = v;
		}
		out.input_in_subgroup.push_back(coords);
	}
	return out;
}

bool subgroup_contains(const FiniteAbelianGroup &G,
                       const std::vector<GroupElement> &gens,
                       const GroupElement &x)
{
	std::set<GroupElement> seen;
	std::vector<GroupElement> frontier{G.identity()};
	seen.insert(G.identity());
	while (!frontier.empty())
	{
		std::vector<GroupElement> next;
		for (auto &e : frontier)
			for (auto &g : gens)
			{
				auto f = G.mul(e, g);
				if (seen.insert(f).second)
					next.push_back(f);
			}
		frontier = std::move(next);
	}
	return seen.count(G.normalize(x)) > 0;
}

CycloScalar Character::evaluate(const FiniteAbelianGroup &G,
                                const GroupElement &a) const
{
	if (values.size() != G.rank())
		throw Error("character has wrong number of values");
	CycloScalar out;
	bool first = true;
	for (size_t i = 0; i < values.size(); ++i)
	{
		auto p = values[i].pow(a[i]);
		out = first ? p : out * p;
		first = false;
	}
	if (first)
		throw Error("character on trivial group has no values");
	return out;
}

long Character::order(const FiniteAbelianGroup &) const
{
	long n = 1;
	for (auto &v : values)
	{
		auto o = v.multiplicative_order();
		if (!o)
			throw NotARootOfUnity("character value is not a root of unity: " +
			                      v.str());
		n = lcm_long(n, *o);
	}
	return n;
}

Character Character::mul(const Character &o) const
{
	Character out;
	for (size_t i = 0; i < values.size(); ++i)
		out.values.push_back(values[i] * o.values[i]);
	return out;
}

Character Character::inverse() const
{
	Character out;
	for (auto &v : values)
		out.values.push_back(v.inv());
	return out;
}

bool Character::is_trivial() const
{
	for (auto &v : values)
		if (!v.is_one())
			return false;
	return true;
}

void validate_character(const FiniteAbelianGroup &G, const Character &chi)
{
	if (chi.values.size() != G.rank())
		throw MalformedDatum("character value count does not match the "
		                     "number of cyclic factors");
	for (size_t i = 0; i < chi.values.size(); ++i)
	{
		auto o = chi.values[i].multiplicative_order();
		if (!o)
			throw NotARootOfUnity("character value is not a root of unity: " +
			                      chi.values[i].str());
		if (G.orders()[i] % *o != 0)
			throw OrderMismatch(
			    "character value order " + std::to_string(*o) +
			    " does not divide the cyclic factor order " +
			    std::to_string(G.orders()[i]));
	}
}

} // namespace hopfgal
