#include "qbin/qbinom.hpp"

#include <stdexcept>

#include "qbin/qseries.hpp"

namespace qbin {

LaurentPoly qbinom_oracle(Exp n, Exp k) {
    if (k < 0) {
        Exp nk = checked_sub(n, k);
        if (nk >= 0) return qbinom_oracle(n, nk);
        return {};
    }
    LaurentPoly num(Int(1));
    for (Exp j = 1; j <= k; ++j) {
        Exp e = checked_add(checked_sub(n, k), j);
        num = num * (LaurentPoly(Int(1)) - LaurentPoly::q_power(e));
    }
    if (num.is_zero()) return {};
    LaurentPoly den = pochhammer(QMonomial{1, 1}, k);
    try {
        return exact_div(num, den);
    } catch (const InexactDivision&) {
        // the product form always divides exactly; reaching this is a bug
        throw InexactDivision("q-binomial product form failed to divide exactly");
    }
}

LaurentPoly qbinom(Exp n, Exp k) {
    if (n >= 0) return qbinom_oracle(n, k);
    if (k >= 0) {
        ShiftedForm t = negate_upper(n, k);
        return t.prefactor() * qbinom_oracle(t.n, t.k);
    }
    if (k <= n) {
        ShiftedForm t = negate_lower(n, k);
        return t.prefactor() * qbinom_oracle(t.n, t.k);
    }
    return {};  // n < k < 0
}

ShiftedForm negate_upper(Exp n, Exp k) {
    if (k < 0) throw std::invalid_argument("negate_upper: k must be nonnegative");
    Exp e = checked_sub(checked_mul(n, k), triangular(k));
    int sign = (k % 2 == 0) ? 1 : -1;
    return {sign, e, checked_sub(checked_sub(k, n), 1), k};
}

ShiftedForm negate_lower(Exp n, Exp k) {
    if (k > n) throw std::invalid_argument("negate_lower: requires k <= n");
    Exp d = checked_sub(n, k);
    // (n-k)(n+k+1) has even product; halve after multiplying
    Exp e = checked_mul(d, checked_add(checked_add(n, k), 1)) / 2;
    int sign = (d % 2 == 0) ? 1 : -1;
    return {sign, e, checked_sub(checked_neg(k), 1), d};
}

LaurentPoly reciprocal(Exp n, Exp k) { return qbinom(n, k).substitute_qinv(); }

bool check_symmetry(Exp n, Exp k) { return qbinom(n, k) == qbinom(n, checked_sub(n, k)); }

bool check_absorption(Exp n, Exp k) {
    LaurentPoly lhs = (LaurentPoly(Int(1)) - LaurentPoly::q_power(k)) * qbinom(n, k);
    LaurentPoly rhs = (LaurentPoly(Int(1)) - LaurentPoly::q_power(n)) *
                      qbinom(checked_sub(n, 1), checked_sub(k, 1));
    return lhs == rhs;
}

}  // namespace qbin
