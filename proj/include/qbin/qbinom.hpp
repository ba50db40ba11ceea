#ifndef QBIN_QBINOM_HPP
#define QBIN_QBINOM_HPP

#include "qbin/laurent.hpp"

namespace qbin {

/// Product-formula route: numerator prod_{j=1}^{k} (1 - q^{n-k+j}) divided
/// exactly by (q;q)_k, valid for any integer n once k >= 0. Negative k is
/// routed through the symmetry [n,k] = [n,n-k]; when that also fails to give
/// a nonnegative lower argument the value is zero.
LaurentPoly qbinom_oracle(Exp n, Exp k);

/// q-binomial coefficient for all integer argument pairs. Nonnegative n uses
/// the product route; negative n dispatches the three-case formula
/// (k >= 0, k <= n, otherwise zero) with monomial prefactors.
LaurentPoly qbinom(Exp n, Exp k);

/// sign * q^exp * [n choose k], the result shape of the two argument-negation
/// transformations.
struct ShiftedForm {
    int sign;  // +1 or -1
    Exp exp;
    Exp n;
    Exp k;

    LaurentPoly prefactor() const { return LaurentPoly::monomial(exp, sign); }
};

/// [n,k] = (-1)^k q^{nk - k(k-1)/2} [-n+k-1, k], for k >= 0.
ShiftedForm negate_upper(Exp n, Exp k);

/// [n,k] = (-1)^{n-k} q^{(n-k)(n+k+1)/2} [-k-1, n-k], for k <= n.
ShiftedForm negate_lower(Exp n, Exp k);

/// [n choose k] with q replaced by 1/q.
LaurentPoly reciprocal(Exp n, Exp k);

/// [n,k] = [n,n-k].
bool check_symmetry(Exp n, Exp k);

/// (1-q^k)[n,k] = (1-q^n)[n-1,k-1], the absorption identity cleared of
/// denominators.
bool check_absorption(Exp n, Exp k);

}  // namespace qbin

#endif
