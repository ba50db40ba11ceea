#include "qbin/laurent.hpp"

#include <sstream>

namespace qbin {

Exp checked_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in addition");
    return r;
}

Exp checked_sub(Exp a, Exp b) {
    Exp r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("exponent overflow in subtraction");
    return r;
}

Exp checked_mul(Exp a, Exp b) {
    Exp r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in multiplication");
    return r;
}

Exp checked_neg(Exp a) { return checked_sub(0, a); }

Exp triangular(Exp k) {
    // product first, then halve: k(k-1) is always even
    return checked_mul(k, checked_sub(k, 1)) / 2;
}

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

void LaurentPoly::insert_term(Exp e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exp, Int>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.insert_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exp e, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

std::pair<Exp, Exp> LaurentPoly::valuation_degree() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return {terms_.begin()->first, terms_.rbegin()->first};
}

LaurentPoly LaurentPoly::substitute_qinv() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(checked_neg(e), c);
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    using boost::multiprecision::pow;
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            Int num = pow(numerator(q0), static_cast<unsigned>(e));
            Int den = pow(denominator(q0), static_cast<unsigned>(e));
            sum += Rational(c * num, den);
        } else {
            if (q0 == 0) throw EvalAtZero();
            unsigned m = static_cast<unsigned>(-e);
            Int num = pow(denominator(q0), m);
            Int den = pow(numerator(q0), m);
            sum += Rational(c * num, den);
        }
    }
    return sum;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert_term(checked_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw DivisionByZero();
    if (p.is_zero()) return {};

    const auto [val_p, deg_p] = p.valuation_degree();
    const auto [val_d, deg_d] = d.valuation_degree();
    const Exp quot_lo = checked_sub(val_p, val_d);
    const Exp quot_hi = checked_sub(deg_p, deg_d);
    if (quot_hi < quot_lo) throw InexactDivision();

    const Int& lead_d = d.terms().begin()->second;

    // long division from the low end: the lowest remainder term must be
    // divisible by the lowest divisor term at every step
    LaurentPoly quot;
    LaurentPoly rem = p;
    while (!rem.is_zero()) {
        const auto& [e_r, c_r] = *rem.terms().begin();
        const Exp e_q = checked_sub(e_r, val_d);
        if (e_q < quot_lo || e_q > quot_hi) throw InexactDivision();
        Int c_q = c_r / lead_d;
        if (c_q * lead_d != c_r) throw InexactDivision();
        LaurentPoly t = LaurentPoly::monomial(e_q, c_q);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            if (e == 1)
                os << "q";
            else
                os << "q^" << e;
        }
    }
    return os.str();
}

}  // namespace qbin
