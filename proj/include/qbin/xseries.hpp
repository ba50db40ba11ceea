#ifndef QBIN_XSERIES_HPP
#define QBIN_XSERIES_HPP

#include <cstddef>
#include <vector>

#include "qbin/laurent.hpp"

namespace qbin {

/// Truncated formal power series in x with LaurentPoly coefficients,
/// kept to degrees 0..order inclusive. Binary operations truncate to
/// the smaller order.
class XSeries {
public:
    explicit XSeries(Exp order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

    static XSeries one(Exp order);

    Exp order() const { return static_cast<Exp>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](Exp i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    void set(Exp i, LaurentPoly c) { coeffs_[static_cast<std::size_t>(i)] = std::move(c); }

    XSeries truncated(Exp order) const;
    /// Extend with zero coefficients up to the given order.
    XSeries padded(Exp order) const;
    /// x -> -x: negate odd-degree coefficients.
    XSeries negate_x() const;

    /// Multiplicative inverse modulo x^{order+1}; the constant term must be 1.
    XSeries inverse() const;

    friend XSeries operator*(const XSeries& a, const XSeries& b);
    friend XSeries operator+(const XSeries& a, const XSeries& b);
    bool operator==(const XSeries&) const = default;

private:
    std::vector<LaurentPoly> coeffs_;
};

/// prod_{k=0}^{n-1} (1 + x q^{shift+k}) as an exact polynomial of order n.
XSeries xprod_pos(Exp n, Exp shift);

}  // namespace qbin

#endif
