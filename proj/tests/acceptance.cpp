// acceptance suite: one PASS/FAIL line per criterion, exact equality
// throughout (no numeric tolerances; all arithmetic is exact)

#include "hopfgal/atlas.hpp"
#include "hopfgal/field_action.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <thread>

using namespace hopfgal;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void report(int idx, const std::string &what, bool ok,
            const std::string &detail = "")
{
	auto t1 = std::chrono::steady_clock::now();
	char secs[32];
	std::snprintf(secs, sizeof(secs), "%.2f",
	              std::chrono::duration<double>(t1 - t0).count());
	t0 = t1;
	std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": "
	          << what;
	if (!detail.empty())
		std::cout << "  [" << detail << "]";
	std::cout << "  (" << secs << " s)\n";
	if (!ok)
		++failures;
}

HopfDatum gr_uq_sl2(long m)
{
	auto c = make_context(m);
	return HopfDatum(c, FiniteAbelianGroup({m}), {{1}, {1}},
	                 {Character{{CycloScalar::root(c, m, 2)}},
	                  Character{{CycloScalar::root(c, m, -2)}}});
}

// 1: gr(u_q(sl2)) is obstructed, Q = (q^2 - 1)(1 - k^2) != 0
void criterion1()
{
	bool ok = true;
	std::string detail;
	for (long m : {3, 5, 7})
	{
		auto d = gr_uq_sl2(m);
		auto c = d.ctx();
		auto q2 = CycloScalar::root(c, m, 2);
		auto p = (NcPoly::x(c, 0) * NcPoly::x(c, 1)).scaled(q2) -
		         NcPoly::x(c, 1) * NcPoly::x(c, 0);
		auto r = relation_Q(d, p);
		auto expect = GroupAlgebraElement::one_minus(
		                  c, d.group(), CycloScalar::from_int(c, 1), {2})
		                  .scaled(q2 - CycloScalar::from_int(c, 1));
		ok = ok && !r.zero && r.value == expect &&
		     check_uqg_obstruction('A', 1, m).status == Status::NotGT;
		if (m == 5)
			detail = "m=5: Q = " + r.value.str();
	}
	report(1, "gr(u_q(sl2)) obstruction (q^2-1)(1-k^2) for m = 3, 5, 7", ok,
	       detail);
}

// 2, 3: the symbolic B2 / G2 braidings have vanishing serre Q values
void criterion2_3()
{
	auto check = [](const char *name, int idx, const char *what) {
		auto e = atlas_find(name);
		auto d = e->build();
		auto q12 = relation_Q(d, serre_relation(d, 0, 1), "serre(1,2)");
		auto q21 = relation_Q(d, serre_relation(d, 1, 0), "serre(2,1)");
		auto g = check_graded(d);
		report(idx, what, q12.zero && q21.zero && g.status == Status::GT);
	};
	check("H55", 2,
	      "B2 braiding over Z5: serre Q values vanish with lambda free");
	check("H77", 3,
	      "G2 braiding over Z7: serre Q values vanish with lambda free");
}

// 4: the telescoping identity prod_{i<n} (1 - zeta^i g) = 1 - g^n in kG
// over cyclic groups of order n and 2n, for all n <= 12
void criterion4()
{
	bool ok = true;
	for (long n = 2; n <= 12; ++n)
		for (long m : {n, 2 * n})
		{
			auto c = make_context(lcm_long(n, m));
			FiniteAbelianGroup G({m});
			auto prod = GroupAlgebraElement::one(c, G);
			for (long i = 0; i < n; ++i)
				prod = prod * GroupAlgebraElement::one_minus(
				                  c, G, CycloScalar::root(c, n, i), {1});
			auto expect = GroupAlgebraElement::one(c, G) -
			              GroupAlgebraElement::of(c, G, {n % m});
			ok = ok && prod == expect;
			// the power machinery reproduces the same zero-ness
			HopfDatum d(c, G, {{1}},
			            {Character{{CycloScalar::root(c, n, 1)}}});
			ok = ok && power_relation_Q(d, NcPoly::x(c, 0), n).zero ==
			               (m == n);
		}
	report(4, "telescoping: prod (1 - zeta^i g) = 1 - g^n over Z_n and "
	          "Z_2n, n = 2..12",
	       ok);
}

// 5: 500 random pairs with q21 = q12^-1:
//    Q(x1 x2 - q12 x2 x1) = (1 - q12)(1 - g1 g2)
void criterion5()
{
	std::mt19937 rng(90210);
	bool ok = true;
	for (int done = 0; done < 500; ++done)
	{
		std::uniform_int_distribution<long> ord(2, 12);
		std::vector<long> orders{ord(rng), ord(rng)};
		FiniteAbelianGroup G(orders);
		long e = G.exponent();
		auto c = make_context(e);
		auto el = [&] {
			GroupElement a;
			for (long o : orders)
				a.push_back(
				    std::uniform_int_distribution<long>(0, o - 1)(rng));
			return a;
		};
		auto g1 = el(), g2 = el();
		auto rnd_root = [&](long lo) {
			return CycloScalar::root(
			    c, e, std::uniform_int_distribution<long>(lo, e - 1)(rng));
		};
		auto q12 = rnd_root(0);
		auto d = HopfDatum::from_braiding(
		    c, G, {g1, g2}, {{rnd_root(1), q12}, {q12.inv(), rnd_root(1)}});
		auto p = NcPoly::x(c, 0) * NcPoly::x(c, 1) -
		         (NcPoly::x(c, 1) * NcPoly::x(c, 0)).scaled(q12);
		auto expect =
		    GroupAlgebraElement::one_minus(
		        c, G, CycloScalar::from_int(c, 1), G.mul(g1, g2))
		        .scaled(CycloScalar::from_int(c, 1) - q12);
		ok = ok && relation_Q(d, p).value == expect;
	}
	report(5, "500 random pairs: Q(x1 x2 - q12 x2 x1) = (1-q12)(1-g1 g2)",
	       ok);
}

// 6: serre Q closed forms for single, double and triple edges
void criterion6()
{
	bool ok = true;
	// explicit single-edge form at m = 5, 7: q^-1 (q-1)^2 (g1^2 g2 - 1)
	for (long m : {5, 7})
	{
		auto c = make_context(m);
		auto z = [&](long k) { return CycloScalar::root(c, m, k); };
		HopfDatum d(c, FiniteAbelianGroup({m, m}), {{1, 0}, {0, 1}},
		            {Character{{z(2), z(-1)}}, Character{{z(-1), z(2)}}});
		auto r = relation_Q(d, serre_relation(d, 0, 1));
		auto one = CycloScalar::from_int(c, 1);
		auto coeff = z(-1) * (z(1) - one) * (z(1) - one);
		auto expect = (GroupAlgebraElement::of(c, d.group(), {2, 1}) -
		               GroupAlgebraElement::one(c, d.group()))
		                  .scaled(coeff);
		ok = ok && !r.zero && r.value == expect;
	}
	// random A2 / B2 data: whenever q_ii q_ij q_ji = 1, the Q value of
	// ad_i^2(x_j) is (q_ij + q_ii q_ij - 1 - q_ii q_ij^2)(g_i^2 g_j - 1)
	std::mt19937 rng(321321);
	auto closed_form = [](const HopfDatum &d, int i, int j) {
		auto c = d.ctx();
		auto one = CycloScalar::from_int(c, 1);
		auto coeff = d.q(i, j) + d.q(i, i) * d.q(i, j) - one -
		             d.q(i, i) * d.q(i, j) * d.q(i, j);
		auto gij = d.group().mul(d.group().power(d.g(i), 2), d.g(j));
		auto expect = (GroupAlgebraElement::of(c, d.group(), gij) -
		               GroupAlgebraElement::one(c, d.group()))
		                  .scaled(coeff);
		return relation_Q(d, serre_relation(d, i, j)).value == expect;
	};
	for (int trial = 0; trial < 100; ++trial)
	{
		const long ms[] = {5, 7, 9, 11};
		long m = ms[std::uniform_int_distribution<int>(0, 3)(rng)];
		long a = std::uniform_int_distribution<long>(1, m - 1)(rng);
		long b = std::uniform_int_distribution<long>(0, m - 1)(rng);
		auto c = make_context(m);
		auto z = [&](long k) { return CycloScalar::root(c, m, k); };
		FiniteAbelianGroup G({m, m});
		// A2: q11 = q22 = zeta^a, q12 q21 = zeta^-a; both serre relations
		HopfDatum da(c, G, {{1, 0}, {0, 1}},
		             {Character{{z(a), z(-a - b)}}, Character{{z(b), z(a)}}},
		             CartanMatrix{{2, -1}, {-1, 2}});
		ok = ok && closed_form(da, 0, 1) && closed_form(da, 1, 0);
		// B2: q12 q21 = q11^-2 = q22^-1; the short-root serre relation
		HopfDatum db(c, G, {{1, 0}, {0, 1}},
		             {Character{{z(a), z(-2 * a - b)}},
		              Character{{z(b), z(2 * a)}}},
		             CartanMatrix{{2, -2}, {-1, 2}});
		ok = ok && closed_form(db, 1, 0);
	}
	// the edge weight 1, 2, 3 closed forms are recomputed and verified
	// internally; check_uqg_obstruction throws if the computed Q deviates
	for (long m : {5, 7})
		for (auto [letter, rank] :
		     std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}})
		{
			try
			{
				ok = ok && check_uqg_obstruction(letter, rank, m).status ==
				               Status::NotGT;
			}
			catch (const Error &)
			{
				ok = false;
			}
		}
	report(6, "serre Q closed forms (edge weight 1, 2, 3) at m = 5, 7", ok);
}

// 7: exhaustive rank-2 sweep. All data of a target Cartan type with
// ord(q11) = ord(q22) = n over Z_{nk} (k <= n) and Z_n x Z_n, deduped by
// group automorphism orbit and index swap; the classifier must agree with
// the graded Q criterion on every representative (it throws otherwise) and
// the Galois-theoretical set must be exactly: ord(g_i) = n for both i and
// (some off-diagonal q equals 1, or the datum lies in an exceptional family).
namespace sweep {

struct Tuple {
	std::vector<long> g1, g2, e1, e2; // chi as exponent vectors
};

using Key = std::vector<long>;

Key key_of(const Tuple &t)
{
	Key k;
	for (auto *v : {&t.g1, &t.g2, &t.e1, &t.e2})
		for (long x : *v)
			k.push_back(x);
	return k;
}

long inv_mod(long a, long n)
{
	a = (a % n + n) % n;
	for (long v = 1; v < n; ++v)
		if (a * v % n == 1)
			return v;
	return 0;
}

// canonical form over Z_M: units act by a -> u a, e -> u^-1 e
Key canon_cyclic(long M, const Tuple &t)
{
	Key best;
	for (long u = 1; u < M; ++u)
	{
		if (gcd_long(u, M) != 1)
			continue;
		long ui = inv_mod(u, M);
		for (bool swapped : {false, true})
		{
			Tuple s{{u * t.g1[0] % M}, {u * t.g2[0] % M},
			        {ui * t.e1[0] % M}, {ui * t.e2[0] % M}};
			if (swapped)
			{
				std::swap(s.g1, s.g2);
				std::swap(s.e1, s.e2);
			}
			auto k = key_of(s);
			if (best.empty() || k < best)
				best = k;
		}
	}
	return best;
}

using Mat = std::array<long, 4>; // row major 2x2 over Z_n

std::vector<long> apply(const Mat &A, const std::vector<long> &v, long n)
{
	return {((A[0] * v[0] + A[1] * v[1]) % n + n) % n,
	        ((A[2] * v[0] + A[3] * v[1]) % n + n) % n};
}

Mat inverse_transpose(const Mat &A, long n)
{
	long det = ((A[0] * A[3] - A[1] * A[2]) % n + n) % n;
	long di = inv_mod(det, n);
	// ((1/det) [[d,-b],[-c,a]])^T = (1/det) [[d,-c],[-b,a]]
	return {di * A[3] % n, di * ((n - A[2] % n) % n) % n,
	        di * ((n - A[1] % n) % n) % n, di * A[0] % n};
}

// canonical form over Z_n x Z_n (n prime): GL2(Z_n) acts by g -> A g,
// chi -> chi o A^-1 (exponent vectors transform by (A^T)^-1); plus swap
Key canon_square(long n, const Tuple &t)
{
	auto reduce = [&](const Tuple &s) {
		// B sends g1 to (1, 0); then minimize over the stabilizer of (1, 0)
		Mat B;
		if (s.g1[0] % n != 0)
			B = {inv_mod(s.g1[0], n), 0, (n - s.g1[1] % n) % n, s.g1[0] % n};
		else
			B = {0, inv_mod(s.g1[1], n), n - 1, 0};
		auto bt = inverse_transpose(B, n);
		Tuple base{apply(B, s.g1, n), apply(B, s.g2, n),
		           apply(bt, s.e1, n), apply(bt, s.e2, n)};
		Key best;
		for (long b = 0; b < n; ++b)
			for (long dd = 1; dd < n; ++dd)
			{
				Mat S{1, b, 0, dd};
				auto st = inverse_transpose(S, n);
				Tuple u{apply(S, base.g1, n), apply(S, base.g2, n),
				        apply(st, base.e1, n), apply(st, base.e2, n)};
				auto k = key_of(u);
				if (best.empty() || k < best)
					best = k;
			}
		return best;
	};
	auto a = reduce(t);
	auto b = reduce(Tuple{t.g2, t.g1, t.e2, t.e1});
	return std::min(a, b);
}

} // namespace sweep

void criterion7()
{
	bool ok = true;
	long total = 0, gt_count = 0;
	std::string detail;

	struct Target {
		char letter;
		std::vector<std::pair<long, long>> orients; // (a12, a21)
	};
	const std::vector<Target> targets{
	    {'A', {{-1, -1}}},
	    {'B', {{-2, -1}, {-1, -2}}},
	    {'G', {{-1, -3}, {-3, -1}}},
	};

	auto decide_one = [](const FiniteAbelianGroup &G, const CtxPtr &c,
	                     const sweep::Tuple &s, long n, char letter,
	                     bool &rep_ok, bool &rep_gt, std::string &err) {
		std::vector<CycloScalar> v1, v2;
		for (size_t j = 0; j < G.orders().size(); ++j)
		{
			v1.push_back(CycloScalar::root(c, G.orders()[j], s.e1[j]));
			v2.push_back(CycloScalar::root(c, G.orders()[j], s.e2[j]));
		}
		HopfDatum d(c, G, {s.g1, s.g2}, {Character{v1}, Character{v2}});
		Verdict v;
		try
		{
			// throws on any disagreement with the graded Q criterion
			v = classify_rank2(d);
		}
		catch (const Error &e)
		{
			rep_ok = false;
			err = e.what();
			return;
		}
		auto a = d.cartan_or_infer();
		auto gg = [&](long u, long w2) {
			return G.is_identity(
			    G.mul(G.power(s.g1, u), G.power(s.g2, w2)));
		};
		bool taft_ok =
		    G.element_order(s.g1) == n && G.element_order(s.g2) == n;
		bool case_b = d.q(0, 1).is_one() || d.q(1, 0).is_one();
		bool case_c =
		    (letter == 'A' && n == 3 && gg(2, 1) && gg(1, 2)) ||
		    (letter == 'B' && n == 5 &&
		     ((a[0][1] == -2) ? gg(1, 2) : gg(2, 1))) ||
		    (letter == 'G' && n == 7 &&
		     ((a[0][1] == -1) ? gg(2, 1) : gg(1, 2)));
		bool expect_gt = taft_ok && (case_b || case_c);
		rep_ok = (v.status == Status::GT) == expect_gt;
		rep_gt = v.status == Status::GT;
		if (!rep_ok)
			err = "verdict mismatch in the sweep";
	};

	auto decide_all = [&](const FiniteAbelianGroup &G,
	                      const std::vector<sweep::Tuple> &reps, long n,
	                      char letter) {
		auto c = make_context(G.exponent());
		size_t nthreads =
		    std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
		                     reps.size() ? reps.size() : 1);
		std::vector<char> oks(reps.size(), 1), gts(reps.size(), 0);
		std::vector<std::string> errs(reps.size());
		std::atomic<size_t> next{0};
		std::vector<std::thread> pool;
		for (size_t t2 = 0; t2 < nthreads; ++t2)
			pool.emplace_back([&] {
				for (size_t i = next++; i < reps.size(); i = next++)
				{
					bool rok = true, rgt = false;
					decide_one(G, c, reps[i], n, letter, rok, rgt, errs[i]);
					oks[i] = rok;
					gts[i] = rgt;
				}
			});
		for (auto &th : pool)
			th.join();
		for (size_t i = 0; i < reps.size(); ++i)
		{
			++total;
			if (!oks[i])
			{
				ok = false;
				if (!errs[i].empty())
					detail = errs[i];
			}
			if (gts[i])
				++gt_count;
		}
	};

	for (auto &t : targets)
		for (long n : {3L, 5L, 7L})
		{
			// G2 with 3 | ord(q_ii) is outside the classified range
			if (t.letter == 'G' && n == 3)
				continue;
			auto matches = [&](long s11, long s22, long prod, long E) {
				if (s11 == 0 || E / gcd_long(s11, E) != n)
					return false;
				if (s22 == 0 || E / gcd_long(s22, E) != n)
					return false;
				for (auto [a12, a21] : t.orients)
					if (((prod - a12 * s11) % E + E) % E == 0 &&
					    ((prod - a21 * s22) % E + E) % E == 0)
						return true;
				return false;
			};

			for (long k = 1; k <= n; ++k)
			{
				long M = n * k;
				FiniteAbelianGroup G({M});
				// pairing exponents: chi_e(g_a) = zeta_M^(a e)
				std::vector<std::array<long, 3>> half; // (a, e, a e mod M)
				for (long a = 0; a < M; ++a)
					for (long e = 0; e < M; ++e)
						if (a * e % M != 0 &&
						    M / gcd_long(a * e % M, M) == n)
							half.push_back({a, e, a * e % M});
				std::set<sweep::Key> seen;
				std::vector<sweep::Tuple> reps;
				for (auto &[a1, e1, s11] : half)
					for (auto &[a2, e2, s22] : half)
					{
						long prod = (a1 * e2 + a2 * e1) % M;
						if (!matches(s11, s22, prod, M))
							continue;
						sweep::Tuple tp{{a1}, {a2}, {e1}, {e2}};
						if (seen.insert(sweep::canon_cyclic(M, tp)).second)
							reps.push_back(tp);
					}
				decide_all(G, reps, n, t.letter);
			}

			{
				FiniteAbelianGroup G({n, n});
				// every non-identity g1 is equivalent to (1, 0) under
				// GL2(Z_n), so fix it during enumeration
				std::set<sweep::Key> seen;
				std::vector<sweep::Tuple> reps;
				for (long e10 = 1; e10 < n; ++e10) // s11 = e10 != 0
					for (long e11 = 0; e11 < n; ++e11)
						for (long g20 = 0; g20 < n; ++g20)
							for (long g21 = 0; g21 < n; ++g21)
							{
								if (g20 == 0 && g21 == 0)
									continue;
								long s21 = (g20 * e10 + g21 * e11) % n;
								for (long e20 = 0; e20 < n; ++e20)
									for (long e21 = 0; e21 < n; ++e21)
									{
										long s22 =
										    (g20 * e20 + g21 * e21) % n;
										long prod = (e20 + s21) % n;
										if (!matches(e10, s22, prod, n))
											continue;
										sweep::Tuple tp{{1, 0},
										                {g20, g21},
										                {e10, e11},
										                {e20, e21}};
										if (seen.insert(
										            sweep::canon_square(
										                n, tp))
										        .second)
											reps.push_back(tp);
									}
							}
				decide_all(G, reps, n, t.letter);
			}
		}

	report(7,
	       "rank-2 sweep: classifier agrees with the graded criterion and "
	       "the structural description on every orbit representative",
	       ok && total > 0,
	       "representatives: " + std::to_string(total) +
	           ", Galois-theoretical: " + std::to_string(gt_count) +
	           (detail.empty() ? "" : ", " + detail));
}

// 8: the u_q(sl2) module field demo
void criterion8()
{
	bool ok = true;
	for (long m : {3, 5})
	{
		auto demo = make_sl2_demo(m);
		FieldAction act(demo.datum, demo.spec);
		auto c = demo.datum.ctx();
		auto one = CycloScalar::from_int(c, 1);
		auto q = [&](long k) { return CycloScalar::root(c, m, k); };
		auto z = LaurentPoly::monomial(c, {1}, one);

		ok = ok && act.apply_group({1}, z) == z.scaled(q(-2));
		ok = ok && act.apply_x(0, z) == LaurentPoly::monomial(c, {0}, one);
		// f . z = k^-1 (kf) . z = -q z^2
		ok = ok && act.apply_group({m - 1}, act.apply_x(1, z)) ==
		               LaurentPoly::monomial(c, {2}, -q(1));
		for (auto &r : act.verify_relations_on_basis(demo.relations, 10))
			ok = ok && r.holds;
		ok = ok && act.check_linear_independence().independent;
	}
	report(8,
	       "u_q(sl2) on k(z): all six relations hold on z^a, |a| <= 10, "
	       "m = 3 and 5",
	       ok);
}

// 9: the example catalog reproduces its expected verdicts
void criterion9()
{
	bool ok = true;
	std::string bad;
	for (auto &e : atlas_entries())
	{
		auto v = e.decide(e.build());
		if (v.status != e.expected)
		{
			ok = false;
			bad += e.name + " ";
		}
	}
	report(9, "catalog of worked examples matches the expected verdicts", ok,
	       bad);
}

// 10: twist counts
void criterion10()
{
	bool ok = true;
	ok = ok && count_twists('A', 1, false) == 1;
	ok = ok && count_twists('A', 2, false) == 2;
	ok = ok && count_twists('B', 2, false) == 2;
	ok = ok && count_twists('G', 2, false) == 2;
	ok = ok && count_twists('A', 5, false) == 16;
	ok = ok && count_twists('A', 1, true) == 1;
	ok = ok && count_twists('A', 2, true) == 2;
	ok = ok && count_twists('A', 9, true) == 2;
	ok = ok && count_twists('B', 2, true) == 0;
	ok = ok && count_twists('D', 4, true) == 0;
	ok = ok && count_twists('F', 4, true) == 0;
	ok = ok && count_twists('G', 2, true) == 0;
	report(10, "twist counts: 2^(rank-1) for Borel parts; 1, 2, 0 for full",
	       ok);
}

// 11: randomized consistency of the power Q routes (exact, seeded)
void criterion11()
{
	std::mt19937 rng(60601);
	bool ok = true;
	int done = 0;
	while (done < 500)
	{
		std::uniform_int_distribution<long> ord(2, 7);
		FiniteAbelianGroup G({ord(rng), ord(rng)});
		auto c = make_context(G.exponent());
		auto el = [&] {
			GroupElement a;
			for (long o : G.orders())
				a.push_back(
				    std::uniform_int_distribution<long>(0, o - 1)(rng));
			return a;
		};
		auto chr = [&] {
			Character chi;
			for (long o : G.orders())
				chi.values.push_back(CycloScalar::root(
				    c, o,
				    std::uniform_int_distribution<long>(0, o - 1)(rng)));
			return chi;
		};
		auto g1 = el(), g2 = el();
		auto chi1 = chr(), chi2 = chr();
		if (chi1.evaluate(G, g1).is_one() || chi2.evaluate(G, g2).is_one())
			continue;
		HopfDatum d(c, G, {g1, g2}, {chi1, chi2});
		Word w;
		for (int i = 0, t = std::uniform_int_distribution<int>(1, 2)(rng);
		     i < t; ++i)
			w.push_back(std::uniform_int_distribution<int>(0, 1)(rng));
		long nn = std::uniform_int_distribution<long>(2, 4)(rng);
		auto p = NcPoly::monomial(c, w, CycloScalar::from_int(c, 1));
		NcPoly prod = NcPoly::one(c);
		for (long k = 0; k < nn; ++k)
			prod = prod * p;
		ok = ok &&
		     power_relation_Q(d, p, nn).value == relation_Q(d, prod).value;
		++done;
	}
	report(11, "500 seeded trials: power Q routes equal direct expansion",
	       ok);
}

} // namespace

int main()
{
	std::cout << "acceptance suite (all comparisons exact)\n";
	t0 = std::chrono::steady_clock::now();
	criterion1();
	criterion2_3();
	criterion4();
	criterion5();
	criterion6();
	criterion7();
	criterion8();
	criterion9();
	criterion10();
	criterion11();
	std::cout << (failures ? "FAILED" : "OK") << " (" << failures
	          << " failing criteria)\n";
	return failures ? 1 : 0;
}
