#ifndef QBIN_LAURENT_HPP
#define QBIN_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbin/errors.hpp"

namespace qbin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent type for powers of q. Arithmetic on exponents is checked;
/// overflow throws instead of wrapping.
using Exp = std::int64_t;

Exp checked_add(Exp a, Exp b);
Exp checked_sub(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);
Exp checked_neg(Exp a);

/// k(k-1)/2, integral for every integer k (product of consecutive integers).
Exp triangular(Exp k);

/// A Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: no zero coefficient is ever stored; the zero polynomial
/// is the empty term map. Values are immutable after construction.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);

    static LaurentPoly from_terms(const std::vector<std::pair<Exp, Int>>& terms);
    static LaurentPoly monomial(Exp e, Int coeff = 1);

    /// The monomial q^e.
    static LaurentPoly q_power(Exp e) { return monomial(e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Exp, Int>& terms() const { return terms_; }
    Int coeff(Exp e) const;

    /// (valuation, degree) of a nonzero polynomial.
    std::pair<Exp, Exp> valuation_degree() const;

    /// q -> 1/q: negate every exponent.
    LaurentPoly substitute_qinv() const;

    /// Exact value at q = q0. Throws EvalAtZero when q0 = 0 and a negative
    /// exponent is present.
    Rational eval(const Rational& q0) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<Exp, Int> terms_;

    void insert_term(Exp e, const Int& c);
};

/// Exact quotient u with u*d = p. Throws DivisionByZero when d = 0 and
/// InexactDivision when p is not a multiple of d in the Laurent ring.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Ascending-exponent text form, e.g. "q^-7 + q^-6 + 2*q^-5".
std::string to_text(const LaurentPoly& p);

}  // namespace qbin

#endif
