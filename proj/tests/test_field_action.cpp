#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgal/field_action.hpp"

using namespace hopfgal;

TEST_CASE("laurent polynomial arithmetic")
{
	auto c = make_context(5);
	auto one = CycloScalar::from_int(c, 1);
	auto z = LaurentPoly::monomial(c, {1}, one);
	auto zi = LaurentPoly::monomial(c, {-1}, one);
	auto u = LaurentPoly::monomial(c, {0}, one);

	CHECK(z * zi == u);
	CHECK((z + zi) * (z - zi) == z * z - zi * zi);
	CHECK((z - z).is_zero());
	CHECK(z.scaled(CycloScalar::zero(c)).is_zero());
	CHECK((z + z).str() == "(2)*z1");
	CHECK(LaurentPoly::zero(c, 1).str() == "0");
}

TEST_CASE("sl2 demo: generator actions")
{
	auto demo = make_sl2_demo(5);
	FieldAction act(demo.datum, demo.spec);
	auto c = demo.datum.ctx();
	auto one = CycloScalar::from_int(c, 1);
	auto q = [&](long k) { return CycloScalar::root(c, 5, k); };
	auto z = LaurentPoly::monomial(c, {1}, one);

	// k . z = q^-2 z
	CHECK(act.apply_group({1}, z) == z.scaled(q(-2)));
	// x1 = e: e . z = 1
	CHECK(act.apply_x(0, z) == LaurentPoly::monomial(c, {0}, one));
	// x2 = kf: (kf) . z = -q^-3 z^2
	CHECK(act.apply_x(1, z) == LaurentPoly::monomial(c, {2}, -q(-3)));
	// hence f . z = k^-1 (kf) . z = -q z^2
	CHECK(act.apply_group({4}, act.apply_x(1, z)) ==
	      LaurentPoly::monomial(c, {2}, -q(1)));

	// the eigenvalue of g on z^a is multiplicative
	CHECK(act.eigenvalue({2}, {3}) == q(-2).pow(6));
}

TEST_CASE("sl2 demo: defining relations hold on a monomial box")
{
	for (long m : {3, 5})
	{
		auto demo = make_sl2_demo(m);
		FieldAction act(demo.datum, demo.spec);
		auto results = act.verify_relations_on_basis(demo.relations, 6);
		REQUIRE(results.size() == 6);
		for (auto &r : results)
		{
			INFO(r.label << " " << r.failure);
			CHECK(r.holds);
		}
		CHECK(act.check_linear_independence().independent);
	}
	CHECK_THROWS_AS(make_sl2_demo(4), UnsupportedParameters);
}

TEST_CASE("a perturbed relation fails with a witness monomial")
{
	auto demo = make_sl2_demo(3);
	FieldAction act(demo.datum, demo.spec);
	auto c = demo.datum.ctx();
	// k x1 = q^-2 x1 k is the wrong twist
	OpRelation bad{"k x1 = q^-2 x1 k",
	               {{CycloScalar::from_int(c, 1),
	                 {OpStep(GroupElement{1}), OpStep(0)}},
	                {-CycloScalar::root(c, 3, -2),
	                 {OpStep(0), OpStep(GroupElement{1})}}}};
	auto rs = act.verify_relations_on_basis({bad}, 3);
	REQUIRE(rs.size() == 1);
	CHECK(!rs[0].holds);
	CHECK(!rs[0].failure.empty());
}

TEST_CASE("operator words match group algebra values")
{
	// any relation operator factors as w_alpha times its Q value
	auto demo = make_sl2_demo(5);
	FieldAction act(demo.datum, demo.spec);
	auto c = demo.datum.ctx();
	auto one = CycloScalar::from_int(c, 1);

	auto p = NcPoly::x(c, 0) * NcPoly::x(c, 1);
	auto q = monomial_Q(demo.datum, {0, 1});
	std::vector<long> walpha(1, 0);
	for (int i : {0, 1})
		walpha[0] += demo.spec.w[i].second[0];
	auto wmono = LaurentPoly::monomial(
	    c, walpha, demo.spec.w[0].first * demo.spec.w[1].first);

	for (long a = -3; a <= 3; ++a)
	{
		auto f = LaurentPoly::monomial(c, {a}, one);
		CHECK(act.apply_poly(p, f) ==
		      wmono * act.apply_group_algebra(q, f));
	}
}

TEST_CASE("validation failures")
{
	auto demo = make_sl2_demo(5);

	// trivial group action: unfaithful
	auto bad = demo.spec;
	bad.gen_action = {{CycloScalar::from_int(demo.datum.ctx(), 1)}};
	CHECK_THROWS_AS(FieldAction(demo.datum, bad), UnfaithfulGroupAction);

	// wrong w monomial: not chi-equivariant
	auto bad2 = demo.spec;
	bad2.w[0].second = {2};
	CHECK_THROWS_AS(FieldAction(demo.datum, bad2), EquivarianceViolated);

	// eigenvalue order must divide the cyclic factor order
	auto bad3 = demo.spec;
	bad3.gen_action = {{CycloScalar::root(demo.datum.ctx(), 5, 1) *
	                    CycloScalar::from_int(demo.datum.ctx(), 2)}};
	CHECK_THROWS_AS(FieldAction(demo.datum, bad3), NotARootOfUnity);
}

TEST_CASE("equivariant monomial search")
{
	auto demo = make_sl2_demo(5);
	const auto &G = demo.datum.group();
	auto c = demo.datum.ctx();

	CHECK(find_equivariant_monomial(G, demo.spec, demo.datum.chi(0), 5) ==
	      std::vector<long>{-1});
	CHECK(find_equivariant_monomial(G, demo.spec, demo.datum.chi(1), 5) ==
	      std::vector<long>{1});

	Character triv{{CycloScalar::from_int(c, 1)}};
	CHECK(find_equivariant_monomial(G, demo.spec, triv, 5) ==
	      std::vector<long>{0});

	// no solution: (q^-2)^e never hits q^2 within a tiny box over Z5
	// (e = -1 works, so shrink the box to exclude it via bound 0)
	CHECK_THROWS_AS(
	    find_equivariant_monomial(G, demo.spec, demo.datum.chi(0), 0),
	    NoEquivariantMonomial);
}

TEST_CASE("dependent w vectors are reported")
{
	auto c = make_context(5);
	auto q = [&](long k) { return CycloScalar::root(c, 5, k); };
	Character chi{{q(2)}};
	HopfDatum d(c, FiniteAbelianGroup({5}), {{1}, {1}}, {chi, chi});
	ActionSpec spec;
	spec.nvars = 1;
	spec.gen_action = {{q(-2)}};
	spec.w = {{CycloScalar::from_int(c, 1), {-1}},
	          {q(1), {-1}}}; // same monomial, same (g, chi) class
	FieldAction act(d, spec);
	auto rep = act.check_linear_independence();
	CHECK(!rep.independent);
	REQUIRE(!rep.detail.empty());
	CHECK(rep.detail[0].find("dependent") != std::string::npos);
}
