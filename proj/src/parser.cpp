#include "hopfgal/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfgal {

namespace {

struct Tok {
	enum Kind { Num, Name, Punct, End } kind = End;
	std::string text;
	long num = 0;
};

class Lexer {
  public:
	explicit Lexer(const std::string &s) : s_(s) { advance(); }

	const Tok &cur() const { return cur_; }

	void advance()
	{
		while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
			++pos_;
		if (pos_ >= s_.size())
		{
			cur_ = Tok{Tok::End, "", 0};
			return;
		}
		char c = s_[pos_];
		if (std::isdigit((unsigned char)c))
		{
			size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
				++pos_;
			cur_ = Tok{Tok::Num, s_.substr(start, pos_ - start), 0};
			cur_.num = std::stol(cur_.text);
			return;
		}
		if (std::isalpha((unsigned char)c) || c == '_')
		{
			size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
				++pos_;
			cur_ = Tok{Tok::Name, s_.substr(start, pos_ - start), 0};
			return;
		}
		static const std::string punct = "+-*/^(),[]";
		if (punct.find(c) == std::string::npos)
			throw ParseError("unexpected character '" + std::string(1, c) +
			                 "'");
		++pos_;
		cur_ = Tok{Tok::Punct, std::string(1, c), 0};
	}

	bool accept(const std::string &p)
	{
		if (cur_.kind == Tok::Punct && cur_.text == p)
		{
			advance();
			return true;
		}
		return false;
	}

	void expect(const std::string &p)
	{
		if (!accept(p))
			throw ParseError("expected '" + p + "' near '" + cur_.text + "'");
	}

	long expect_int()
	{
		bool neg = accept("-");
		if (cur_.kind != Tok::Num)
			throw ParseError("expected an integer near '" + cur_.text + "'");
		long v = cur_.num;
		advance();
		return neg ? -v : v;
	}

  private:
	std::string s_;
	size_t pos_ = 0;
	Tok cur_;
};

long name_suffix_int(const std::string &name, const std::string &prefix)
{
	// -1 when the name is not prefix followed by digits
	if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix))
		return -1;
	for (size_t i = prefix.size(); i < name.size(); ++i)
		if (!std::isdigit((unsigned char)name[i]))
			return -1;
	return std::stol(name.substr(prefix.size()));
}

// shared expression grammar over an abstract value
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* atom ('^' int)?
template <class V, class Atoms> class ExprParser {
  public:
	ExprParser(Lexer &lex, Atoms atoms) : lex_(lex), atoms_(atoms) {}

	V expr()
	{
		V v = term();
		for (;;)
		{
			if (lex_.accept("+"))
				v = atoms_.add(v, term());
			else if (lex_.accept("-"))
				v = atoms_.sub(v, term());
			else
				return v;
		}
	}

  private:
	V term()
	{
		V v = factor();
		for (;;)
		{
			if (lex_.accept("*"))
				v = atoms_.mul(v, factor());
			else if (lex_.accept("/"))
				v = atoms_.div(v, factor());
			else
				return v;
		}
	}

	V factor()
	{
		if (lex_.accept("-"))
			return atoms_.neg(factor());
		V v;
		if (lex_.accept("("))
		{
			v = expr();
			lex_.expect(")");
		}
		else
			v = atoms_.atom(lex_, *this);
		while (lex_.cur().kind == Tok::Punct && lex_.cur().text == "^")
		{
			lex_.advance();
			v = atoms_.pow(v, lex_.expect_int());
		}
		return v;
	}

	Lexer &lex_;
	Atoms atoms_;

	friend Atoms;
};

struct ScalarAtoms {
	CtxPtr ctx;

	using V = CycloScalar;
	V add(const V &a, const V &b) const { return a + b; }
	V sub(const V &a, const V &b) const { return a - b; }
	V mul(const V &a, const V &b) const { return a * b; }
	V div(const V &a, const V &b) const { return a.div(b); }
	V neg(const V &a) const { return -a; }
	V pow(const V &a, long n) const { return a.pow(n); }

	template <class P> V atom(Lexer &lex, P &) const
	{
		const Tok &t = lex.cur();
		if (t.kind == Tok::Num)
		{
			long v = t.num;
			lex.advance();
			return CycloScalar::from_int(ctx, v);
		}
		if (t.kind == Tok::Name)
		{
			long n = name_suffix_int(t.text, "zeta");
			if (n > 0)
			{
				lex.advance();
				return CycloScalar::root(ctx, n, 1);
			}
			int idx = ctx->symbol_index(t.text);
			if (idx < 0)
				throw UnknownSymbol("unknown symbol '" + t.text + "'");
			lex.advance();
			return CycloScalar::symbol(ctx, idx);
		}
		throw ParseError("expected a scalar atom near '" + t.text + "'");
	}
};

struct WValue {
	CycloScalar c;
	std::vector<long> e;
};

struct WAtoms {
	CtxPtr ctx;
	int nvars;

	using V = WValue;
	V add(const V &a, const V &b) const
	{
		if (a.e != b.e)
			throw ParseError("w must be a scalar multiple of one monomial");
		return {a.c + b.c, a.e};
	}
	V sub(const V &a, const V &b) const
	{
		if (a.e != b.e)
			throw ParseError("w must be a scalar multiple of one monomial");
		return {a.c - b.c, a.e};
	}
	V mul(const V &a, const V &b) const
	{
		auto e = a.e;
		for (int v = 0; v < nvars; ++v)
			e[v] += b.e[v];
		return {a.c * b.c, e};
	}
	V div(const V &a, const V &b) const
	{
		auto e = a.e;
		for (int v = 0; v < nvars; ++v)
			e[v] -= b.e[v];
		return {a.c.div(b.c), e};
	}
	V neg(const V &a) const { return {-a.c, a.e}; }
	V pow(const V &a, long n) const
	{
		auto e = a.e;
		for (int v = 0; v < nvars; ++v)
			e[v] *= n;
		return {a.c.pow(n), e};
	}

	template <class P> V atom(Lexer &lex, P &) const
	{
		const Tok &t = lex.cur();
		if (t.kind == Tok::Name)
		{
			long v = name_suffix_int(t.text, "z");
			if (v >= 1)
			{
				if (v > nvars)
					throw ParseError("variable z" + std::to_string(v) +
					                 " is out of range");
				lex.advance();
				std::vector<long> e(nvars, 0);
				e[v - 1] = 1;
				return {CycloScalar::from_int(ctx, 1), e};
			}
		}
		ScalarAtoms sa{ctx};
		struct Dummy {};
		Dummy d;
		return {sa.atom(lex, d), std::vector<long>(nvars, 0)};
	}
};

struct RelAtoms {
	const HopfDatum *d;

	using V = NcPoly;
	V add(const V &a, const V &b) const { return a + b; }
	V sub(const V &a, const V &b) const { return a - b; }
	V mul(const V &a, const V &b) const { return a * b; }
	V div(const V &a, const V &b) const
	{
		if (b.terms().size() != 1 || !b.terms().begin()->first.empty())
			throw ParseError("can only divide a relation by a scalar");
		return a.scaled(b.terms().begin()->second.inv());
	}
	V neg(const V &a) const { return -a; }
	V pow(const V &a, long n) const
	{
		if (n < 0)
			throw ParseError("relation powers must be nonnegative");
		NcPoly out = NcPoly::one(d->ctx());
		for (long k = 0; k < n; ++k)
			out = out * a;
		return out;
	}

	template <class P> V atom(Lexer &lex, P &parser) const
	{
		const Tok &t = lex.cur();
		if (t.kind == Tok::Name)
		{
			long i = name_suffix_int(t.text, "x");
			if (i >= 1)
			{
				if (i > d->theta())
					throw ParseError("generator x" + std::to_string(i) +
					                 " is out of range");
				lex.advance();
				return NcPoly::x(d->ctx(), (int)i - 1);
			}
			if (t.text == "q")
			{
				lex.advance();
				lex.expect("(");
				long a = lex.expect_int();
				lex.expect(",");
				long b = lex.expect_int();
				lex.expect(")");
				if (a < 1 || a > d->theta() || b < 1 || b > d->theta())
					throw ParseError("q index out of range");
				return NcPoly::one(d->ctx()).scaled(
				    d->q((int)a - 1, (int)b - 1));
			}
			if (t.text == "ad")
			{
				lex.advance();
				lex.expect("(");
				long i2 = lex.expect_int();
				lex.expect(",");
				NcPoly inner = parser.expr();
				lex.expect(")");
				if (i2 < 1 || i2 > d->theta())
					throw ParseError("ad index out of range");
				return adjoint(*d, (int)i2 - 1, inner);
			}
			if (t.text == "pow")
			{
				lex.advance();
				lex.expect("(");
				NcPoly inner = parser.expr();
				lex.expect(",");
				long n = lex.expect_int();
				lex.expect(")");
				return pow(inner, n);
			}
		}
		ScalarAtoms sa{d->ctx()};
		struct Dummy {};
		Dummy dm;
		return NcPoly::one(d->ctx()).scaled(sa.atom(lex, dm));
	}
};

std::string strip(const std::string &s)
{
	size_t a = s.find_first_not_of(" \t\r\n");
	if (a == std::string::npos)
		return "";
	size_t b = s.find_last_not_of(" \t\r\n");
	return s.substr(a, b - a + 1);
}

std::vector<long> parse_tuple(const std::string &s, size_t rank)
{
	Lexer lex(s);
	std::vector<long> out;
	if (lex.cur().kind == Tok::Punct && lex.cur().text == "(")
	{
		lex.expect("(");
		if (!lex.accept(")"))
		{
			out.push_back(lex.expect_int());
			while (lex.accept(","))
				out.push_back(lex.expect_int());
			lex.expect(")");
		}
	}
	else
		out.push_back(lex.expect_int());
	if (lex.cur().kind != Tok::End)
		throw ParseError("trailing input after group element: " + s);
	if (out.size() != rank)
		throw MalformedDatum("group element has " +
		                     std::to_string(out.size()) + " coordinates, the "
		                     "group has rank " + std::to_string(rank));
	return out;
}

std::vector<std::string> split_bracket_list(const std::string &s)
{
	// "[a, b, c]" with nesting-aware commas
	auto t = strip(s);
	if (t.empty() || t.front() != '[' || t.back() != ']')
		throw ParseError("expected a [...] list: " + s);
	std::vector<std::string> out;
	int depth = 0;
	std::string cur;
	for (size_t i = 1; i + 1 < t.size(); ++i)
	{
		char c = t[i];
		if (c == '[' || c == '(')
			++depth;
		if (c == ']' || c == ')')
			--depth;
		if (c == ',' && depth == 0)
		{
			out.push_back(strip(cur));
			cur.clear();
		}
		else
			cur += c;
	}
	if (!strip(cur).empty())
		out.push_back(strip(cur));
	return out;
}

// "g[1]" -> ("g", {1}); "lambda[1][2]" -> ("lambda", {1,2})
bool split_indexed_key(const std::string &key, std::string &base,
                       std::vector<long> &idx)
{
	size_t br = key.find('[');
	if (br == std::string::npos)
		return false;
	base = key.substr(0, br);
	idx.clear();
	size_t p = br;
	while (p < key.size())
	{
		if (key[p] != '[')
			return false;
		size_t q = key.find(']', p);
		if (q == std::string::npos)
			return false;
		idx.push_back(std::stol(key.substr(p + 1, q - p - 1)));
		p = q + 1;
	}
	return true;
}

} // namespace

CycloScalar parse_scalar(const CtxPtr &ctx, const std::string &text)
{
	Lexer lex(text);
	ExprParser<CycloScalar, ScalarAtoms> p(lex, ScalarAtoms{ctx});
	auto v = p.expr();
	if (lex.cur().kind != Tok::End)
		throw ParseError("trailing input in scalar expression: " + text);
	return v;
}

std::pair<CycloScalar, std::vector<long>>
parse_w_expression(const CtxPtr &ctx, int nvars, const std::string &text)
{
	Lexer lex(text);
	ExprParser<WValue, WAtoms> p(lex, WAtoms{ctx, nvars});
	auto v = p.expr();
	if (lex.cur().kind != Tok::End)
		throw ParseError("trailing input in w expression: " + text);
	return {v.c, v.e};
}

NcPoly parse_relation(const HopfDatum &d, const std::string &text)
{
	Lexer lex(text);
	ExprParser<NcPoly, RelAtoms> p(lex, RelAtoms{&d});
	auto v = p.expr();
	if (lex.cur().kind != Tok::End)
		throw ParseError("trailing input in relation: " + text);
	return v;
}

QResult evaluate_relation_Q(const HopfDatum &d, const std::string &text)
{
	auto t = strip(text);
	if (t.rfind("pow", 0) == 0)
	{
		auto rest = strip(t.substr(3));
		if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
		{
			// top-level pow(P, n): locate the outer comma
			int depth = 0;
			size_t comma = std::string::npos;
			bool toplevel = true;
			for (size_t i = 0; i < rest.size(); ++i)
			{
				char c = rest[i];
				if (c == '(' || c == '[')
					++depth;
				if (c == ')' || c == ']')
				{
					--depth;
					if (depth == 0 && i + 1 < rest.size())
						toplevel = false;
				}
				if (c == ',' && depth == 1 && comma == std::string::npos)
					comma = i;
			}
			if (toplevel && comma != std::string::npos)
			{
				auto inner = rest.substr(1, comma - 1);
				auto nstr = strip(
				    rest.substr(comma + 1, rest.size() - comma - 2));
				long n = std::stol(nstr);
				return power_relation_Q(d, parse_relation(d, inner), n, t);
			}
		}
	}
	return relation_Q(d, parse_relation(d, t), t);
}

ParsedDatum parse_datum_text(const std::string &text)
{
	// first pass: group shape, declared unit symbols, mentioned zeta orders
	std::vector<long> orders;
	std::vector<UnitSymbol> symbols;
	long conductor = 1;
	{
		std::istringstream in(text);
		std::string line;
		while (std::getline(in, line))
		{
			auto hash = line.find('#');
			if (hash != std::string::npos)
				line = line.substr(0, hash);
			line = strip(line);
			if (line.empty())
				continue;
			auto eq = line.find('=');
			std::string key = eq == std::string::npos
			                      ? line
			                      : strip(line.substr(0, eq));
			std::string val = eq == std::string::npos
			                      ? ""
			                      : strip(line.substr(eq + 1));
			if (key == "group")
			{
				std::istringstream vs(val);
				std::string tok;
				while (vs >> tok)
				{
					if (tok == "x")
						continue;
					long n = name_suffix_int(tok, "Z");
					if (n < 1)
						throw MalformedDatum(
						    "group factors must look like Z5: " + val);
					orders.push_back(n);
				}
			}
			else if (key.rfind("unit ", 0) == 0)
			{
				std::istringstream vs(key.substr(5));
				std::string name, kw;
				long ord = 0;
				if (!(vs >> name >> kw >> ord) || kw != "order" || ord < 1)
					throw MalformedDatum(
					    "unit lines must read: unit <name> order <k>");
				symbols.push_back({name, ord});
			}
			// collect every zeta<N> mention
			for (size_t i = 0; i + 4 < line.size(); ++i)
			{
				if (line.compare(i, 4, "zeta"))
					continue;
				if (i > 0 && (std::isalnum((unsigned char)line[i - 1]) ||
				              line[i - 1] == '_'))
					continue;
				size_t j = i + 4;
				std::string digits;
				while (j < line.size() &&
				       std::isdigit((unsigned char)line[j]))
					digits += line[j++];
				if (!digits.empty())
					conductor = lcm_long(conductor, std::stol(digits));
			}
		}
	}
	if (orders.empty())
		throw MalformedDatum("missing group line");
	FiniteAbelianGroup G(orders);
	conductor = lcm_long(conductor, G.exponent());
	auto ctx = make_context(conductor, symbols);

	// second pass: everything else
	std::map<int, GroupElement> gmap;
	std::map<int, std::vector<CycloScalar>> chimap;
	std::map<std::pair<int, int>, CycloScalar> qmap;
	std::map<int, CycloScalar> alphamap;
	std::map<std::pair<int, int>, CycloScalar> linkmap;
	std::optional<CartanMatrix> cartan;
	std::optional<long> action_vars;
	std::map<int, std::vector<CycloScalar>> action_g;
	std::map<int, std::string> action_w;
	std::map<std::string, std::string> options;

	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		auto hash = line.find('#');
		if (hash != std::string::npos)
			line = line.substr(0, hash);
		line = strip(line);
		if (line.empty())
			continue;
		auto eq = line.find('=');
		std::string key = eq == std::string::npos ? line
		                                          : strip(line.substr(0, eq));
		std::string val = eq == std::string::npos
		                      ? ""
		                      : strip(line.substr(eq + 1));
		try
		{
			std::string base;
			std::vector<long> idx;
			if (key == "group" || key.rfind("unit ", 0) == 0)
				continue;
			if (key == "cartan")
			{
				CartanMatrix a;
				for (auto &row : split_bracket_list(val))
				{
					std::vector<int> r;
					for (auto &e : split_bracket_list(row))
						r.push_back((int)std::stol(e));
					a.push_back(r);
				}
				cartan = a;
			}
			else if (key == "action.vars")
				action_vars = std::stol(val);
			else if (key.rfind("options.", 0) == 0)
				options[key.substr(8)] = val;
			else if (key.rfind("action.g[", 0) == 0 &&
			         split_indexed_key(key.substr(7), base, idx))
			{
				std::vector<CycloScalar> row;
				for (auto &e : split_bracket_list(val))
					row.push_back(parse_scalar(ctx, e));
				action_g[(int)idx[0]] = row;
			}
			else if (key.rfind("action.w[", 0) == 0 &&
			         split_indexed_key(key.substr(7), base, idx))
				action_w[(int)idx[0]] = val;
			else if (split_indexed_key(key, base, idx))
			{
				if (base == "g" && idx.size() == 1)
					gmap[(int)idx[0]] = parse_tuple(val, G.rank());
				else if (base == "chi" && idx.size() == 1)
				{
					std::vector<CycloScalar> row;
					for (auto &e : split_bracket_list(val))
						row.push_back(parse_scalar(ctx, e));
					if (row.size() != G.rank())
						throw MalformedDatum(
						    "chi must list one value per cyclic factor");
					chimap[(int)idx[0]] = row;
				}
				else if (base == "q" && idx.size() == 2)
					qmap[{(int)idx[0], (int)idx[1]}] = parse_scalar(ctx, val);
				else if (base == "alpha" && idx.size() == 1)
					alphamap[(int)idx[0]] = parse_scalar(ctx, val);
				else if (base == "lambda" && idx.size() == 2)
					linkmap[{(int)idx[0], (int)idx[1]}] =
					    parse_scalar(ctx, val);
				else
					throw MalformedDatum("unrecognized key '" + key + "'");
			}
			else
				throw MalformedDatum("unrecognized key '" + key + "'");
		}
		catch (const Error &e)
		{
			throw ParseError("line " + std::to_string(lineno) + ": " +
			                 e.what());
		}
	}

	if (gmap.empty())
		throw MalformedDatum("no g[i] lines");
	int theta = gmap.rbegin()->first;
	std::vector<GroupElement> g;
	for (int i = 1; i <= theta; ++i)
	{
		auto it = gmap.find(i);
		if (it == gmap.end())
			throw MalformedDatum("missing g[" + std::to_string(i) + "]");
		g.push_back(it->second);
	}

	std::optional<Lifting> lifting;
	if (!alphamap.empty() || !linkmap.empty())
	{
		Lifting l;
		l.taft_scalars.assign(theta, CycloScalar::zero(ctx));
		for (auto &[i, v] : alphamap)
		{
			if (i < 1 || i > theta)
				throw MalformedDatum("alpha index out of range");
			l.taft_scalars[i - 1] = v;
		}
		for (auto &[ij, v] : linkmap)
		{
			auto [i, j] = ij;
			if (i < 1 || j < 1 || i > theta || j > theta || i >= j)
				throw MalformedDatum("lambda indices must satisfy i < j");
			l.linking[{i - 1, j - 1}] = v;
		}
		lifting = l;
	}

	auto build = [&]() -> HopfDatum {
		if (!chimap.empty())
		{
			std::vector<Character> chi;
			for (int i = 1; i <= theta; ++i)
			{
				auto it = chimap.find(i);
				if (it == chimap.end())
					throw MalformedDatum("missing chi[" + std::to_string(i) +
					                     "]");
				chi.push_back(Character{it->second});
			}
			HopfDatum d(ctx, G, g, chi, cartan, lifting);
			for (auto &[ij, v] : qmap)
				if (!(d.q(ij.first - 1, ij.second - 1) == v))
					throw MalformedDatum(
					    "q[" + std::to_string(ij.first) + "][" +
					    std::to_string(ij.second) +
					    "] disagrees with the value derived from chi");
			return d;
		}
		std::vector<std::vector<CycloScalar>> q(
		    theta, std::vector<CycloScalar>(theta));
		for (int i = 1; i <= theta; ++i)
			for (int j = 1; j <= theta; ++j)
			{
				auto it = qmap.find({i, j});
				if (it == qmap.end())
					throw MalformedDatum(
					    "braiding data needs every q[i][j] (or give chi)");
				q[i - 1][j - 1] = it->second;
			}
		return HopfDatum::from_braiding(ctx, G, g, q, cartan, lifting);
	};
	ParsedDatum out{build(), std::nullopt, options, text};

	if (action_vars || !action_g.empty() || !action_w.empty())
	{
		if (!action_vars)
			throw MalformedDatum("action blocks need action.vars");
		ActionSpec spec;
		spec.nvars = (int)*action_vars;
		for (size_t j = 1; j <= G.rank(); ++j)
		{
			auto it = action_g.find((int)j);
			if (it == action_g.end())
				throw MalformedDatum("missing action.g[" +
				                     std::to_string(j) + "]");
			spec.gen_action.push_back(it->second);
		}
		for (int i = 1; i <= theta; ++i)
		{
			auto it = action_w.find(i);
			if (it == action_w.end())
				throw MalformedDatum("missing action.w[" +
				                     std::to_string(i) + "]");
			spec.w.push_back(
			    parse_w_expression(ctx, spec.nvars, it->second));
		}
		out.action = spec;
	}
	return out;
}

ParsedDatum parse_datum_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw ParseError("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_datum_text(ss.str());
}

} // namespace hopfgal
