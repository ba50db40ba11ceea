#include "qbin/xseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbin {

XSeries XSeries::one(Exp order) {
    XSeries s(order);
    s.coeffs_[0] = LaurentPoly(Int(1));
    return s;
}

XSeries XSeries::truncated(Exp order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: order exceeds series order");
    XSeries s(order);
    std::copy_n(coeffs_.begin(), static_cast<std::size_t>(order) + 1, s.coeffs_.begin());
    return s;
}

XSeries XSeries::padded(Exp order) const {
    if (order < this->order()) throw std::invalid_argument("padded: order below series order");
    XSeries s(order);
    std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin());
    return s;
}

XSeries XSeries::negate_x() const {
    XSeries s = *this;
    for (std::size_t i = 1; i < s.coeffs_.size(); i += 2) s.coeffs_[i] = -s.coeffs_[i];
    return s;
}

XSeries XSeries::inverse() const {
    if (!coeffs_[0].is_one()) throw NonUnitConstantTerm();
    XSeries t(order());
    t.coeffs_[0] = LaurentPoly(Int(1));
    for (std::size_t m = 1; m < coeffs_.size(); ++m) {
        LaurentPoly acc;
        for (std::size_t j = 1; j <= m; ++j) acc = acc + coeffs_[j] * t.coeffs_[m - j];
        t.coeffs_[m] = -acc;
    }
    return t;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    Exp order = std::min(a.order(), b.order());
    XSeries r(order);
    for (Exp i = 0; i <= order; ++i) {
        LaurentPoly acc;
        for (Exp j = 0; j <= i; ++j) {
            if (j <= a.order() && i - j <= b.order()) acc = acc + a[j] * b[i - j];
        }
        r.set(i, std::move(acc));
    }
    return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    Exp order = std::min(a.order(), b.order());
    XSeries r(order);
    for (Exp i = 0; i <= order; ++i) r.set(i, a[i] + b[i]);
    return r;
}

XSeries xprod_pos(Exp n, Exp shift) {
    if (n < 0 || shift < 0) throw std::invalid_argument("xprod_pos: arguments must be nonnegative");
    XSeries prod = XSeries::one(n);
    for (Exp k = 0; k < n; ++k) {
        XSeries factor = XSeries::one(n);
        factor.set(1, LaurentPoly::q_power(checked_add(shift, k)));
        prod = prod * factor;
    }
    return prod;
}

}  // namespace qbin
