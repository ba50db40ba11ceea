#ifndef QBIN_QSERIES_HPP
#define QBIN_QSERIES_HPP

#include "qbin/laurent.hpp"

namespace qbin {

/// c*q^e, the admissible first argument of the q-shifted factorial here.
struct QMonomial {
    Int coeff;
    Exp exp = 0;

    LaurentPoly to_poly() const { return LaurentPoly::monomial(exp, coeff); }
};

/// (a;q)_k = prod_{j=0}^{k-1} (1 - a q^j) for k >= 0.
LaurentPoly pochhammer(const QMonomial& a, Exp k);

/// The reversal form (-a)^k q^{k(k-1)/2} (q^{1-k}/a ; q)_k, evaluated
/// literally. Restricted to |coeff| in {0,1} so the reciprocal monomial
/// stays in the Laurent ring.
LaurentPoly pochhammer_reversed(const QMonomial& a, Exp k);

}  // namespace qbin

#endif
