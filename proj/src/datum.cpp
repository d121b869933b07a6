#include "hopfgal/datum.hpp"

#include <algorithm>
#include <functional>

namespace hopfgal {

namespace {

// undirected Dynkin diagram components of a (structurally checked) matrix
std::vector<std::vector<int>> diagram_components(const CartanMatrix &a)
{
	int n = (int)a.size();
	std::vector<int> comp(n, -1);
	int nc = 0;
	for (int s = 0; s < n; ++s)
		if (comp[s] < 0)
		{
			std::vector<int> stack{s};
			comp[s] = nc;
			while (!stack.empty())
			{
				int u = stack.back();
				stack.pop_back();
				for (int v = 0; v < n; ++v)
					if (v != u && a[u][v] != 0 && comp[v] < 0)
					{
						comp[v] = nc;
						stack.push_back(v);
					}
			}
			++nc;
		}
	std::vector<std::vector<int>> out(nc);
	for (int i = 0; i < n; ++i)
		out[comp[i]].push_back(i);
	return out;
}

CartanComponent classify_component(const CartanMatrix &a,
                                   const std::vector<int> &verts)
{
	CartanComponent c;
	c.vertices = verts;
	c.rank = (int)verts.size();

	if (c.rank == 1)
	{
		c.letter = 'A';
		return c;
	}

	// local adjacency with edge weights a_ij * a_ji
	int n = c.rank;
	std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
	int edges = 0;
	std::vector<int> deg(n, 0);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
		{
			int u = verts[i], v = verts[j];
			if (a[u][v] != 0)
			{
				w[i][j] = w[j][i] = a[u][v] * a[v][u];
				++edges;
				++deg[i];
				++deg[j];
				if (w[i][j] > 3)
					throw NotFiniteCartanType(
					    "edge weight exceeds 3: not of finite type");
			}
		}
	if (edges != n - 1)
		throw NotFiniteCartanType("Dynkin diagram contains a cycle");

	int triple = -1, w2 = 0, w3 = 0;
	std::pair<int, int> heavy{-1, -1};
	for (int i = 0; i < n; ++i)
	{
		if (deg[i] >= 4)
			throw NotFiniteCartanType("vertex of degree four or more");
		if (deg[i] == 3)
		{
			if (triple >= 0)
				throw NotFiniteCartanType("two branch vertices");
			triple = i;
		}
		for (int j = i + 1; j < n; ++j)
		{
			if (w[i][j] == 2)
			{
				++w2;
				heavy = {i, j};
			}
			if (w[i][j] == 3)
			{
				++w3;
				heavy = {i, j};
			}
		}
	}
	if (w3 > 0)
	{
		if (n != 2 || w3 != 1 || w2 != 0)
			throw NotFiniteCartanType("triple edge only allowed in rank 2");
		c.letter = 'G';
		return c;
	}
	if (w2 > 1)
		throw NotFiniteCartanType("more than one double edge");
	if (triple >= 0)
	{
		if (w2 > 0)
			throw NotFiniteCartanType("branch vertex with a double edge");
		// arm lengths from the branch vertex
		std::vector<int> arms;
		for (int s = 0; s < n; ++s)
			if (w[triple][s] != 0)
			{
				int len = 1, prev = triple, cur = s;
				while (true)
				{
					int nxt = -1;
					for (int t = 0; t < n; ++t)
						if (t != prev && w[cur][t] != 0)
							nxt = t;
					if (nxt < 0)
						break;
					prev = cur;
					cur = nxt;
					++len;
				}
				arms.push_back(len);
			}
		std::sort(arms.begin(), arms.end());
		if (arms == std::vector<int>{1, 1, n - 3} ||
		    (n == 4 && arms == std::vector<int>{1, 1, 1}))
			c.letter = 'D';
		else if (arms == std::vector<int>{1, 2, 2} && n == 6)
			c.letter = 'E';
		else if (arms == std::vector<int>{1, 2, 3} && n == 7)
			c.letter = 'E';
		else if (arms == std::vector<int>{1, 2, 4} && n == 8)
			c.letter = 'E';
		else
			throw NotFiniteCartanType("branch arms do not match D or E");
		return c;
	}
	// path
	if (w2 == 0)
	{
		c.letter = 'A';
		return c;
	}
	if (n == 2)
	{
		c.letter = 'B'; // B2 = C2
		return c;
	}
	// double edge position on the path
	auto [i, j] = heavy;
	bool i_end = deg[i] == 1, j_end = deg[j] == 1;
	if (!i_end && !j_end)
	{
		if (n == 4)
		{
			c.letter = 'F';
			return c;
		}
		throw NotFiniteCartanType("interior double edge outside F4");
	}
	int endpoint = i_end ? i : j;
	int other = i_end ? j : i;
	// B_n: the short simple root sits at the double-edge endpoint, i.e.
	// the endpoint's Cartan entry toward its neighbour is -2
	c.letter = (a[verts[endpoint]][verts[other]] == -2) ? 'B' : 'C';
	return c;
}

} // namespace

std::vector<CartanComponent> classify_cartan(const CartanMatrix &a)
{
	int n = (int)a.size();
	for (int i = 0; i < n; ++i)
	{
		if ((int)a[i].size() != n)
			throw MalformedDatum("Cartan matrix is not square");
		if (a[i][i] != 2)
			throw NotFiniteCartanType("Cartan diagonal entry must be 2");
		for (int j = 0; j < n; ++j)
			if (i != j)
			{
				if (a[i][j] > 0 || a[i][j] < -3)
					throw NotFiniteCartanType(
					    "off-diagonal Cartan entries must lie in {0,-1,-2,-3}");
				if ((a[i][j] == 0) != (a[j][i] == 0))
					throw NotFiniteCartanType(
					    "a_ij = 0 must imply a_ji = 0");
			}
	}
	std::vector<CartanComponent> out;
	for (auto &verts : diagram_components(a))
		out.push_back(classify_component(a, verts));
	return out;
}

bool Lifting::trivial() const
{
	for (auto &a : taft_scalars)
		if (!a.is_zero())
			return false;
	for (auto &[ij, l] : linking)
		if (!l.is_zero())
			return false;
	return true;
}

HopfDatum::HopfDatum(CtxPtr ctx, FiniteAbelianGroup G,
                     std::vector<GroupElement> g, std::vector<Character> chi,
                     std::optional<CartanMatrix> cartan,
                     std::optional<Lifting> lifting)
    : ctx_(std::move(ctx)), G_(std::move(G)), g_(std::move(g)),
      chi_(std::move(chi)), cartan_(std::move(cartan)),
      lifting_(std::move(lifting))
{
	if (chi_->size() != g_.size())
		throw MalformedDatum("need one character per generator index");
	for (auto &e : g_)
		e = G_.normalize(e);
	int th = theta();
	q_.assign(th, std::vector<CycloScalar>(th));
	for (int i = 0; i < th; ++i)
		for (int j = 0; j < th; ++j)
			q_[i][j] = (*chi_)[j].evaluate(G_, g_[i]);
}

HopfDatum HopfDatum::from_braiding(CtxPtr ctx, FiniteAbelianGroup G,
                                   std::vector<GroupElement> g,
                                   std::vector<std::vector<CycloScalar>> q,
                                   std::optional<CartanMatrix> cartan,
                                   std::optional<Lifting> lifting)
{
	HopfDatum d;
	d.ctx_ = std::move(ctx);
	d.G_ = std::move(G);
	d.g_ = std::move(g);
	d.q_ = std::move(q);
	d.cartan_ = std::move(cartan);
	d.lifting_ = std::move(lifting);
	for (auto &e : d.g_)
		e = d.G_.normalize(e);
	if (d.q_.size() != d.g_.size())
		throw MalformedDatum("braiding matrix size does not match rank");
	for (auto &row : d.q_)
		if (row.size() != d.g_.size())
			throw MalformedDatum("braiding matrix is not square");
	return d;
}

const Character &HopfDatum::chi(int i) const
{
	if (!chi_)
		throw MalformedDatum("datum carries no characters, only a braiding "
		                     "matrix");
	return (*chi_)[i];
}

CycloScalar HopfDatum::chi_at(int i, const GroupElement &a) const
{
	return chi(i).evaluate(G_, G_.normalize(a));
}

const CartanMatrix &HopfDatum::cartan() const
{
	if (!cartan_)
		throw MissingCartanMatrix("no Cartan matrix given");
	return *cartan_;
}

long HopfDatum::n_of(int i) const
{
	auto o = q_[i][i].multiplicative_order();
	if (!o)
		throw NotARootOfUnity("q_ii is not a root of unity: " +
		                      q_[i][i].str());
	if (*o < 2)
		throw MalformedDatum("q_ii = 1 at index " + std::to_string(i + 1));
	return *o;
}

CartanMatrix HopfDatum::infer_cartan() const
{
	int th = theta();
	// candidate entries per ordered pair
	std::vector<std::vector<std::vector<std::pair<int, int>>>> cand(
	    th, std::vector<std::vector<std::pair<int, int>>>(th));
	std::vector<std::pair<int, int>> pairs;
	for (int i = 0; i < th; ++i)
		for (int j = i + 1; j < th; ++j)
		{
			auto prod = q_[i][j] * q_[j][i];
			std::vector<int> ci, cj;
			for (int a = 0; a >= -3; --a)
			{
				if (prod == q_[i][i].pow(a))
					ci.push_back(a);
				if (prod == q_[j][j].pow(a))
					cj.push_back(a);
			}
			std::vector<std::pair<int, int>> opts;
			for (int a : ci)
				for (int b : cj)
					if ((a == 0) == (b == 0))
						opts.push_back({a, b});
			if (opts.empty())
				throw CartanIncompatible(
				    "no Cartan entry in {0,-1,-2,-3} matches q_" +
				    std::to_string(i + 1) + std::to_string(j + 1) + " * q_" +
				    std::to_string(j + 1) + std::to_string(i + 1));
			cand[i][j] = opts;
			pairs.push_back({i, j});
		}

	CartanMatrix best;
	int best_score = -1;
	CartanMatrix cur(th, std::vector<int>(th, 0));
	for (int i = 0; i < th; ++i)
		cur[i][i] = 2;

	std::function<void(size_t, int)> dfs = [&](size_t p, int score) {
		if (best_score >= 0 && score > best_score)
			return;
		if (p == pairs.size())
		{
			try
			{
				classify_cartan(cur);
			}
			catch (const NotFiniteCartanType &)
			{
				return;
			}
			auto flat = [](const CartanMatrix &m) {
				std::vector<int> v;
				for (auto &row : m)
					v.insert(v.end(), row.begin(), row.end());
				return v;
			};
			if (best_score < 0 || score < best_score ||
			    (score == best_score && flat(cur) < flat(best)))
			{
				best = cur;
				best_score = score;
			}
			return;
		}
		auto [i, j] = pairs[p];
		for (auto [a, b] : cand[i][j])
		{
			cur[i][j] = a;
			cur[j][i] = b;
			dfs(p + 1, score - a - b);
		}
		cur[i][j] = cur[j][i] = 0;
	};
	dfs(0, 0);
	if (best_score < 0)
		throw NotFiniteCartanType(
		    "no finite-type Cartan matrix is compatible with the braiding");
	return best;
}

CartanMatrix HopfDatum::cartan_or_infer() const
{
	if (cartan_)
		return *cartan_;
	return infer_cartan();
}

const Lifting &HopfDatum::lifting() const
{
	if (!lifting_)
		throw MalformedDatum("datum carries no lifting data");
	return *lifting_;
}

ValidationReport HopfDatum::validate() const
{
	ValidationReport rep;
	int th = theta();
	if (th == 0)
		throw MalformedDatum("datum has no generator indices");
	for (auto &e : g_)
		if ((int)e.size() != (int)G_.rank())
			throw MalformedDatum("group element coordinate count mismatch");
	if (chi_)
		for (auto &c : *chi_)
			validate_character(G_, c);

	rep.session_conductor = G_.exponent();
	for (auto &s : ctx_->symbols())
		rep.session_conductor = lcm_long(rep.session_conductor, s.order);
	for (int i = 0; i < th; ++i)
	{
		long n = n_of(i); // throws if q_ii == 1 or not a root of unity
		rep.n.push_back(n);
		rep.session_conductor = lcm_long(rep.session_conductor, n);
		if (n % 2 == 0)
			rep.warnings.push_back("ord(q_ii) is even at index " +
			                       std::to_string(i + 1) +
			                       "; classification will refuse");
	}

	// derived-vs-given braiding consistency
	if (chi_)
		for (int i = 0; i < th; ++i)
			for (int j = 0; j < th; ++j)
				if (!(q_[i][j] == (*chi_)[j].evaluate(G_, g_[i])))
					throw MalformedDatum(
					    "braiding entry disagrees with chi_j(g_i)");

	if (cartan_)
	{
		auto comps = classify_cartan(*cartan_); // structural + finite type
		const auto &a = *cartan_;
		for (int i = 0; i < th; ++i)
			for (int j = 0; j < th; ++j)
				if (i != j && !(q_[i][j] * q_[j][i] == q_[i][i].pow(a[i][j])))
					throw CartanIncompatible(
					    "q_ij * q_ji != q_ii^{a_ij} at (" +
					    std::to_string(i + 1) + "," + std::to_string(j + 1) +
					    ")");
		for (auto &c : comps)
		{
			long n = n_of(c.vertices[0]);
			for (int v : c.vertices)
				if (n_of(v) != n)
					rep.warnings.push_back(
					    "ord(q_ii) is not constant on component " + c.str());
			if (c.letter == 'G' && n % 3 == 0)
				rep.warnings.push_back(
				    "ord(q_ii) divisible by 3 on a G2 component; rank-2 "
				    "classification will refuse");
		}
	}

	if (lifting_)
	{
		if (lifting_->taft_scalars.size() != (size_t)th)
			throw MalformedDatum("need one Taft scalar per index");
		for (auto &[ij, l] : lifting_->linking)
		{
			auto [i, j] = ij;
			if (i < 0 || j < 0 || i >= th || j >= th || i >= j)
				throw MalformedDatum("linking scalar indices must satisfy "
				                     "1 <= i < j <= theta");
			if (G_.is_identity(G_.mul(g_[i], g_[j])) && !l.is_zero())
				rep.warnings.push_back(
				    "lambda_" + std::to_string(i + 1) + std::to_string(j + 1) +
				    " is nonzero although g_i g_j = 1; it is redundant in "
				    "the defining relation");
		}
	}
	return rep;
}

bool HopfDatum::is_minimal() const
{
	auto sub = subgroup_generated(G_, g_);
	return sub.order == G_.order();
}

HopfDatum HopfDatum::minimal() const
{
	auto sub = subgroup_generated(G_, g_);
	std::vector<GroupElement> new_g;
	for (int i = 0; i < theta(); ++i)
		new_g.push_back(sub.input_in_subgroup[i]);
	if (chi_)
	{
		std::vector<Character> new_chi;
		for (int i = 0; i < theta(); ++i)
		{
			Character c;
			for (auto &h : sub.cyclic_gens)
				c.values.push_back((*chi_)[i].evaluate(G_, h));
			new_chi.push_back(std::move(c));
		}
		return HopfDatum(ctx_, sub.group, new_g, new_chi, cartan_, lifting_);
	}
	return from_braiding(ctx_, sub.group, new_g, q_, cartan_, lifting_);
}

HopfDatum HopfDatum::substitute_symbol(const std::string &name,
                                       const CycloScalar &value) const
{
	int idx = ctx_->symbol_index(name);
	if (idx < 0)
		throw UnknownSymbol("unknown unit symbol: " + name);
	HopfDatum out = *this;
	for (auto &row : out.q_)
		for (auto &s : row)
			s = s.substitute(idx, value);
	if (out.chi_)
		for (auto &c : *out.chi_)
			for (auto &v : c.values)
				v = v.substitute(idx, value);
	if (out.lifting_)
	{
		for (auto &a : out.lifting_->taft_scalars)
			a = a.substitute(idx, value);
		for (auto &[ij, l] : out.lifting_->linking)
			l = l.substitute(idx, value);
	}
	return out;
}

} // namespace hopfgal
