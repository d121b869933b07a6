#pragma once

#include <stdexcept>
#include <string>

namespace hopfgal {

struct Error : std::runtime_error {
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
	using Error::Error;
};
struct NonUnitDivisor : Error {
	using Error::Error;
};
struct UnknownSymbol : Error {
	using Error::Error;
};
struct OrderMismatch : Error {
	using Error::Error;
};
struct NotARootOfUnity : Error {
	using Error::Error;
};
struct MalformedDatum : Error {
	using Error::Error;
};
struct CartanIncompatible : Error {
	using Error::Error;
};
struct NotFiniteCartanType : Error {
	using Error::Error;
};
struct MissingCartanMatrix : Error {
	using Error::Error;
};
struct NotMultihomogeneous : Error {
	using Error::Error;
};
struct ExpansionCapExceeded : Error {
	using Error::Error;
};
struct WrongRank : Error {
	using Error::Error;
};
struct NotTypeA1 : Error {
	using Error::Error;
};
struct ConditionsViolated : Error {
	using Error::Error;
};
struct UnsupportedParameters : Error {
	using Error::Error;
};
struct InvalidDynkin : Error {
	using Error::Error;
};
struct EquivarianceViolated : Error {
	using Error::Error;
};
struct UnfaithfulGroupAction : Error {
	using Error::Error;
};
struct NoEquivariantMonomial : Error {
	using Error::Error;
};
struct ParseError : Error {
	using Error::Error;
};

} // namespace hopfgal
