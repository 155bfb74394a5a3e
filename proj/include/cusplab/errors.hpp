#ifndef CUSPLAB_ERRORS_HPP
#define CUSPLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cusplab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(eps)") {}
};

struct TableMismatch : Error {
    TableMismatch() : Error("polynomials belong to different variable tables") {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable in evaluation: " + name) {}
};

struct NonUnitLaurentSubstitution : Error {
    explicit NonUnitLaurentSubstitution(const std::string& name)
        : Error("substitution into laurent variable " + name +
                " requires a unit (scalar times laurent monomial)") {}
};

struct NonUnitLeadingCoefficient : Error {
    NonUnitLeadingCoefficient()
        : Error("leading coefficient of the divisor is not a unit of the "
                "coefficient ring; mark the offending variable laurent first") {}
};

struct ZeroDivisor : Error {
    ZeroDivisor() : Error("division by the zero polynomial") {}
};

struct InfiniteQuotient : Error {
    explicit InfiniteQuotient(const std::string& name)
        : Error("monomial quotient is infinite: variable " + name +
                " carries no pure-power generator") {}
};

struct NotMonomialReducible : Error {
    NotMonomialReducible()
        : Error("ideal generators do not reduce to monomials after unit "
                "scaling; germ is outside the supported class") {}
};

struct ExactFactorizationFailed : Error {
    explicit ExactFactorizationFailed(const std::string& what_failed)
        : Error("exact factorization over Q(eps) failed: " + what_failed) {}
};

struct ToleranceAmbiguity : Error {
    ToleranceAmbiguity()
        : Error("numeric roots closer than the separation threshold; "
                "refusing to merge") {}
};

struct NotACriticalPoint : Error {
    NotACriticalPoint()
        : Error("the polynomial or one of its partials does not vanish "
                "at the given point") {}
};

struct CenterNotLinear : Error {
    CenterNotLinear()
        : Error("blow-up center must be a pair of independent chart "
                "variables (up to scalar)") {}
};

struct NothingToTransform : Error {
    NothingToTransform()
        : Error("no equation vanishes on the blow-up center") {}
};

struct PointNotOnVariety : Error {
    PointNotOnVariety()
        : Error("point does not satisfy the chart equations") {}
};

struct SymbolicMismatch : Error {
    explicit SymbolicMismatch(const std::string& which)
        : Error("symbolic identity failed: " + which) {}
};

struct ZeroScale : Error {
    ZeroScale() : Error("the scale k of the map p must be nonzero") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace cusplab

#endif
