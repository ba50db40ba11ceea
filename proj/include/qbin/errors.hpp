#ifndef QBIN_ERRORS_HPP
#define QBIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by the zero polynomial") {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& what = "no Laurent-polynomial quotient exists")
        : Error(what) {}
};

struct EvalAtZero : Error {
    EvalAtZero() : Error("evaluation at q=0 of a polynomial with negative exponents") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("valuation/degree of the zero polynomial") {}
};

struct NonUnitCoefficient : Error {
    NonUnitCoefficient() : Error("reciprocal of a monomial with non-unit coefficient") {}
};

struct ZeroArgument : Error {
    ZeroArgument() : Error("reversal of (0;q)_k with k > 0") {}
};

struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("series inversion requires constant term 1") {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& name) : Error("unknown identity: " + name) {}
};

}  // namespace qbin

#endif
