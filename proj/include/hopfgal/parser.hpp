#pragma once

// Text formats: scalar expressions, datum description files, and the
// relation mini-language (x_i words, q(i,j) coefficients, ad, pow).

#include "hopfgal/field_action.hpp"

namespace hopfgal {

// rationals, zeta<N>[^k], declared unit symbols, + - * / ^<int>, parens
CycloScalar parse_scalar(const CtxPtr &ctx, const std::string &text);

// scalar expression times a Laurent monomial in z1..z<nvars>
std::pair<CycloScalar, std::vector<long>>
parse_w_expression(const CtxPtr &ctx, int nvars, const std::string &text);

struct ParsedDatum {
	HopfDatum datum;
	std::optional<ActionSpec> action;
	std::map<std::string, std::string> options;
	std::string source; // raw text, for digests
};

ParsedDatum parse_datum_text(const std::string &text);
ParsedDatum parse_datum_file(const std::string &path);

// relation polynomial: atoms x<i>, q(i,j), scalar expressions, ad(i, P);
// ^<int> and nested pow(P, n) multiply out
NcPoly parse_relation(const HopfDatum &d, const std::string &text);

// like parse_relation, but a top-level pow(P, n) routes the Q-value
// through power_relation_Q
QResult evaluate_relation_Q(const HopfDatum &d, const std::string &text);

} // namespace hopfgal
