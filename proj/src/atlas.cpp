#include "hopfgal/atlas.hpp"

namespace hopfgal {

namespace {

CycloScalar rt(const CtxPtr &c, long n, long k)
{
	return CycloScalar::root(c, n, k);
}

HopfDatum taft5()
{
	auto c = make_context(5);
	return HopfDatum(c, FiniteAbelianGroup({5}), {{1}},
	                 {Character{{rt(c, 5, 1)}}});
}

HopfDatum gen_taft_4_2()
{
	// ord(g) = 4 but ord(q) = 2: a generalized Taft algebra
	auto c = make_context(4);
	return HopfDatum(c, FiniteAbelianGroup({4}), {{1}},
	                 {Character{{rt(c, 4, 2)}}});
}

HopfDatum book_E2()
{
	auto c = make_context(2);
	Character s{{rt(c, 2, 1)}};
	return HopfDatum(c, FiniteAbelianGroup({2}), {{1}, {1}}, {s, s});
}

HopfDatum book_h_q5()
{
	auto c = make_context(5);
	Character s{{rt(c, 5, 1)}};
	return HopfDatum(c, FiniteAbelianGroup({5}), {{1}, {4}}, {s, s});
}

HopfDatum taft3_x_taft5()
{
	auto c = make_context(15);
	return HopfDatum(c, FiniteAbelianGroup({3, 5}), {{1, 0}, {0, 1}},
	                 {Character{{rt(c, 3, 1), rt(c, 15, 0)}},
	                  Character{{rt(c, 15, 0), rt(c, 5, 1)}}});
}

HopfDatum h34()
{
	auto c = make_context(3);
	Character s{{rt(c, 3, 1)}};
	return HopfDatum(c, FiniteAbelianGroup({3}), {{1}, {1}}, {s, s});
}

HopfDatum h55()
{
	// braiding over Z5 with a free unit lambda; no consistent characters
	auto c = make_context(5, {{"lambda", 5}});
	auto z = [&](long k) { return rt(c, 5, k); };
	auto lam = CycloScalar::symbol(c, 0);
	std::vector<std::vector<CycloScalar>> q = {
	    {z(-1), z(2) * lam.inv()},
	    {lam, z(-2)},
	};
	return HopfDatum::from_braiding(c, FiniteAbelianGroup({5}), {{3}, {1}}, q,
	                                CartanMatrix{{2, -2}, {-1, 2}});
}

HopfDatum h77()
{
	auto c = make_context(7, {{"lambda", 7}});
	auto z = [&](long k) { return rt(c, 7, k); };
	auto lam = CycloScalar::symbol(c, 0);
	std::vector<std::vector<CycloScalar>> q = {
	    {z(-3), z(3) * lam.inv()},
	    {lam, z(-1)},
	};
	return HopfDatum::from_braiding(c, FiniteAbelianGroup({7}), {{1}, {5}}, q,
	                                CartanMatrix{{2, -1}, {-3, 2}});
}

HopfDatum gr_uq_sl2_5()
{
	auto c = make_context(5);
	return HopfDatum(c, FiniteAbelianGroup({5}), {{1}, {1}},
	                 {Character{{rt(c, 5, 2)}}, Character{{rt(c, 5, -2)}}});
}

HopfDatum uq_borel_sl3_twist()
{
	// a 2-cocycle twist of the Borel of u_q(sl3): q_21 = 1
	auto c = make_context(5);
	auto one = rt(c, 5, 0);
	return HopfDatum(c, FiniteAbelianGroup({5, 5}), {{1, 0}, {0, 1}},
	                 {Character{{rt(c, 5, 2), one}},
	                  Character{{rt(c, 5, -2), rt(c, 5, 2)}}});
}

HopfDatum lifted_A2_taft_scalar()
{
	// nontrivial root-vector scalar alpha_1 with g_1^5 != 1
	auto c = make_context(25);
	auto one = rt(c, 25, 0);
	HopfDatum d(c, FiniteAbelianGroup({25, 25}), {{1, 0}, {0, 1}},
	            {Character{{rt(c, 5, 1), one}},
	             Character{{rt(c, 5, -1), rt(c, 5, 1)}}});
	Lifting l;
	l.taft_scalars = {CycloScalar::from_int(c, 1), CycloScalar::zero(c)};
	d.set_lifting(l);
	return d;
}

HopfDatum lifted_uq_gl2()
{
	auto c = make_context(5);
	Character s{{rt(c, 5, 1), rt(c, 5, 1)}};
	HopfDatum d(c, FiniteAbelianGroup({5, 5}), {{1, 0}, {0, 1}},
	            {s, s.inverse()});
	Lifting l;
	l.taft_scalars = {CycloScalar::zero(c), CycloScalar::zero(c)};
	l.linking[{0, 1}] = CycloScalar::from_int(c, 1);
	d.set_lifting(l);
	return d;
}

std::vector<AtlasEntry> build_entries()
{
	auto by_classify = [](const HopfDatum &d) { return classify(d); };
	auto by_graded = [](const HopfDatum &d) { return check_graded(d); };
	return {
	    {"taft-5", "Taft algebra T(5), q = zeta5", Status::GT, taft5,
	     by_classify},
	    {"gen-taft-4-2", "generalized Taft algebra, ord(g)=4, ord(q)=2",
	     Status::NotGT, gen_taft_4_2, by_classify},
	    {"book-E2", "the algebra E(2): two skew-primitives over Z2",
	     Status::GT, book_E2, by_classify},
	    {"book-h-q5", "the book algebra h(zeta5, 1)", Status::GT, book_h_q5,
	     by_classify},
	    {"taft3-x-taft5", "tensor product T(3) (x) T(5)", Status::GT,
	     taft3_x_taft5, by_classify},
	    {"H34", "type A2 datum over Z3 with g1 = g2", Status::GT, h34,
	     by_classify},
	    {"H55", "type B2 braiding over Z5 with a free unit lambda",
	     Status::GT, h55, by_graded},
	    {"H77", "type G2 braiding over Z7 with a free unit lambda",
	     Status::GT, h77, by_graded},
	    {"gr-uq-sl2-5", "associated graded of u_q(sl2), q = zeta5",
	     Status::NotGT, gr_uq_sl2_5, by_classify},
	    {"uq-borel-sl3-twist", "twisted Borel of u_q(sl3) with q_21 = 1",
	     Status::GT, uq_borel_sl3_twist, by_classify},
	    {"lifted-A2-taft-scalar",
	     "lifted A2 datum with a nontrivial power relation scalar",
	     Status::NotGT, lifted_A2_taft_scalar, by_classify},
	    {"lifted-uq-gl2", "linked pair of Taft halves: u_q'(gl2)", Status::GT,
	     lifted_uq_gl2, by_classify},
	};
}

} // namespace

const std::vector<AtlasEntry> &atlas_entries()
{
	static const std::vector<AtlasEntry> entries = build_entries();
	return entries;
}

const AtlasEntry *atlas_find(const std::string &name)
{
	for (auto &e : atlas_entries())
		if (e.name == name)
			return &e;
	return nullptr;
}

} // namespace hopfgal
