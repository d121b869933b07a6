#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgal/relations.hpp"

#include <cstdlib>

using namespace hopfgal;

namespace {

HopfDatum taft(long n)
{
	auto c = make_context(n);
	return HopfDatum(c, FiniteAbelianGroup({n}), {{1}},
	                 {Character{{CycloScalar::root(c, n, 1)}}});
}

HopfDatum borel_sl3(long m)
{
	auto c = make_context(m);
	auto z = [&](long k) { return CycloScalar::root(c, m, k); };
	return HopfDatum(c, FiniteAbelianGroup({m, m}), {{1, 0}, {0, 1}},
	                 {Character{{z(2), z(-1)}}, Character{{z(-1), z(2)}}});
}

} // namespace

TEST_CASE("words and multidegrees")
{
	auto c = make_context(5);
	auto p = NcPoly::x(c, 0) * NcPoly::x(c, 1) -
	         NcPoly::x(c, 1) * NcPoly::x(c, 0);
	CHECK(multidegree(p, 2) == std::vector<int>{1, 1});
	CHECK(multidegree(Word{0, 1, 0, 0}, 2) == std::vector<int>{3, 1});

	auto bad = NcPoly::x(c, 0) + NcPoly::x(c, 1);
	CHECK_THROWS_AS(multidegree(bad, 2), NotMultihomogeneous);
	CHECK_THROWS_AS(multidegree(NcPoly(c), 2), NotMultihomogeneous);
}

TEST_CASE("braided adjoint and serre relations")
{
	auto d = borel_sl3(5);
	auto x1 = NcPoly::x(d.ctx(), 0), x2 = NcPoly::x(d.ctx(), 1);

	auto r = adjoint(d, 0, x2);
	CHECK(r == x1 * x2 - (x2 * x1).scaled(d.q(0, 1)));

	// iterating the adjoint by hand matches serre_relation
	auto s = serre_relation(d, 0, 1);
	auto lhs = x1 * r;
	auto rhs = (r * x1).scaled(d.q(0, 0) * d.q(0, 1));
	CHECK(s == lhs - rhs);
	CHECK(multidegree(s, 2) == std::vector<int>{2, 1});

	// A1 x A1 pairs have trivial serre relations of degree (1,1)
	auto c = make_context(5);
	auto z = [&](long k) { return CycloScalar::root(c, 5, k); };
	HopfDatum d2(c, FiniteAbelianGroup({5, 5}), {{1, 0}, {0, 1}},
	             {Character{{z(1), z(2)}}, Character{{z(-2), z(1)}}});
	CHECK(multidegree(serre_relation(d2, 0, 1), 2) ==
	      std::vector<int>{1, 1});
}

TEST_CASE("Q of single words")
{
	auto d = taft(5);
	auto c = d.ctx();
	auto z = CycloScalar::root(c, 5, 1);
	const auto &G = d.group();

	// Q(x1) = 1 - g
	CHECK(monomial_Q(d, {0}) ==
	      GroupAlgebraElement::one_minus(c, G, CycloScalar::from_int(c, 1),
	                                     {1}));
	// Q(x1 x1) = (1 - q g)(1 - g)
	auto expect = GroupAlgebraElement::one_minus(c, G, z, {1}) *
	              GroupAlgebraElement::one_minus(
	                  c, G, CycloScalar::from_int(c, 1), {1});
	CHECK(monomial_Q(d, {0, 0}) == expect);
	CHECK(monomial_Q(d, {0, 0}).str() ==
	      "(1)*1 + (-1 - zeta5^1)*g + (zeta5^1)*g^2");
}

TEST_CASE("commutation pairs with q_ji = q_ij^-1")
{
	auto c = make_context(5);
	auto z = [&](long k) { return CycloScalar::root(c, 5, k); };
	HopfDatum d(c, FiniteAbelianGroup({5, 5}), {{1, 2}, {0, 3}},
	            {Character{{z(1), z(3)}}, Character{{z(2), z(2)}}});
	REQUIRE(d.q(0, 1) * d.q(1, 0) == CycloScalar::from_int(c, 1));

	auto x1 = NcPoly::x(c, 0), x2 = NcPoly::x(c, 1);
	auto p = x1 * x2 - (x2 * x1).scaled(d.q(0, 1));
	auto q = relation_Q(d, p);

	auto one = CycloScalar::from_int(c, 1);
	auto expect = GroupAlgebraElement::one_minus(
	                  c, d.group(), one, d.group().mul(d.g(0), d.g(1)))
	                  .scaled(one - d.q(0, 1));
	CHECK(q.value == expect);
	CHECK(!q.zero);
}

TEST_CASE("serre Q closed form for the sl3 borel")
{
	auto d = borel_sl3(5);
	auto c = d.ctx();
	auto z = [&](long k) { return CycloScalar::root(c, 5, k); };
	auto q = relation_Q(d, serre_relation(d, 0, 1));

	// q^-1 (q-1)^2 (g1^2 g2 - 1) with q = zeta5
	auto one = CycloScalar::from_int(c, 1);
	auto coeff = z(-1) * (z(1) - one) * (z(1) - one);
	auto expect = GroupAlgebraElement::of(c, d.group(), {2, 1}) -
	              GroupAlgebraElement::one(c, d.group());
	CHECK(q.value == expect.scaled(coeff));
	CHECK(!q.zero);
}

TEST_CASE("power Q routes agree")
{
	// cyclic shortcut on the Taft datum
	auto d = taft(7);
	auto r = power_relation_Q(d, NcPoly::x(d.ctx(), 0), 7);
	CHECK(r.zero);
	CHECK(r.note.find("cyclic shortcut") != std::string::npos);
	CHECK(r.multidegree == std::vector<int>{7});

	// twisted power equals the expanded product
	auto b = borel_sl3(5);
	auto root = adjoint(b, 0, NcPoly::x(b.ctx(), 1));
	auto tw = power_relation_Q(b, root, 5);
	CHECK(tw.note.find("twisted power") != std::string::npos);
	NcPoly prod = NcPoly::one(b.ctx());
	for (int k = 0; k < 5; ++k)
		prod = prod * root;
	CHECK(tw.value == relation_Q(b, prod).value);
	CHECK(!tw.zero);

	// simple powers on the borel vanish either way
	CHECK(power_relation_Q(b, NcPoly::x(b.ctx(), 0), 5).zero);
}

TEST_CASE("telescoping powers over larger cyclic groups")
{
	// ord(g) = n: Q(x^n) telescopes to zero
	for (long n : {2, 3, 5, 12})
	{
		auto c = make_context(n);
		HopfDatum d(c, FiniteAbelianGroup({n}), {{1}},
		            {Character{{CycloScalar::root(c, n, 1)}}});
		CHECK(power_relation_Q(d, NcPoly::x(c, 0), n).zero);
	}
	// ord(g) = 2n with chi(g) of order n: Q(x^n) stays nonzero
	for (long n : {3, 5})
	{
		auto c = make_context(2 * n);
		HopfDatum d(c, FiniteAbelianGroup({2 * n}), {{1}},
		            {Character{{CycloScalar::root(c, n, 1)}}});
		auto r = power_relation_Q(d, NcPoly::x(c, 0), n);
		CHECK(!r.zero);
	}
}

TEST_CASE("expansion route and its cap")
{
	// braiding-only datum, power not matching the subgroup order: brute route
	auto c = make_context(5);
	auto z = [&](long k) { return CycloScalar::root(c, 5, k); };
	std::vector<std::vector<CycloScalar>> q = {{z(1)}};
	auto d = HopfDatum::from_braiding(c, FiniteAbelianGroup({5}), {{1}}, q);
	auto r = power_relation_Q(d, NcPoly::x(c, 0), 3);
	CHECK(r.note.find("expanded") != std::string::npos);
	CHECK(!r.zero);
	CHECK(r.value == monomial_Q(d, {0, 0, 0}));

	setenv("HOPF_GALOIS_EXPANSION_CAP", "2", 1);
	CHECK(expansion_cap() == 2);
	CHECK_THROWS_AS(power_relation_Q(d, NcPoly::x(c, 0), 4),
	                ExpansionCapExceeded);
	unsetenv("HOPF_GALOIS_EXPANSION_CAP");
	CHECK(expansion_cap() == 1000000);
}

TEST_CASE("rank-2 root vector tables")
{
	auto degs = [](const HopfDatum &d) {
		std::vector<std::vector<int>> out;
		for (auto &p : rank2_root_vectors(d, d.cartan_or_infer()))
			out.push_back(multidegree(p, 2));
		return out;
	};

	CHECK(degs(borel_sl3(5)) == std::vector<std::vector<int>>{{1, 1}});

	// B2 with the -2 entry in row 1
	auto c = make_context(5);
	auto z = [&](long k) { return CycloScalar::root(c, 5, k); };
	HopfDatum b2(c, FiniteAbelianGroup({5, 5}), {{1, 0}, {0, 1}},
	             {Character{{z(1), z(-2)}}, Character{{z(0), z(2)}}});
	CHECK(degs(b2) == std::vector<std::vector<int>>{{1, 1}, {2, 1}});

	// G2 with the -1 entry in row 1: four higher roots
	auto c7 = make_context(7);
	auto z7 = [&](long k) { return CycloScalar::root(c7, 7, k); };
	HopfDatum g2(c7, FiniteAbelianGroup({7, 7}), {{1, 0}, {0, 1}},
	             {Character{{z7(3), z7(-3)}}, Character{{z7(0), z7(1)}}});
	REQUIRE(g2.cartan_or_infer() == CartanMatrix{{2, -1}, {-3, 2}});
	CHECK(degs(g2) == std::vector<std::vector<int>>{
	                      {1, 1}, {1, 2}, {1, 3}, {2, 3}});
}
