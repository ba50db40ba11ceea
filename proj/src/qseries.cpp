#include "qbin/qseries.hpp"

#include <stdexcept>

namespace qbin {

LaurentPoly pochhammer(const QMonomial& a, Exp k) {
    if (k < 0) throw std::invalid_argument("pochhammer: k must be nonnegative");
    LaurentPoly prod(Int(1));
    for (Exp j = 0; j < k; ++j) {
        // 1 - a*q^j
        LaurentPoly factor =
            LaurentPoly(Int(1)) - LaurentPoly::monomial(checked_add(a.exp, j), a.coeff);
        prod = prod * factor;
    }
    return prod;
}

LaurentPoly pochhammer_reversed(const QMonomial& a, Exp k) {
    if (k < 0) throw std::invalid_argument("pochhammer_reversed: k must be nonnegative");
    if (k == 0) return LaurentPoly(Int(1));
    if (a.coeff == 0) throw ZeroArgument();
    if (a.coeff != 1 && a.coeff != -1) throw NonUnitCoefficient();

    // a = c*q^e with c = +-1, so q^{1-k}/a = c*q^{1-k-e}
    const Int c = a.coeff;
    QMonomial recip{c, checked_sub(checked_sub(1, k), a.exp)};

    // prefactor (-a)^k q^{k(k-1)/2} = (-c)^k q^{ke + k(k-1)/2}
    Int sign = (k % 2 == 0) ? Int(c * c) : Int(-c);  // (-c)^k for c = +-1
    Exp e = checked_add(checked_mul(k, a.exp), triangular(k));
    LaurentPoly prefactor = LaurentPoly::monomial(e, sign);

    return prefactor * pochhammer(recip, k);
}

}  // namespace qbin
