#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbin/qbinom.hpp"
#include "qbin/xseries.hpp"

using namespace qbin;

namespace {
LaurentPoly lp(const std::vector<std::pair<Exp, Int>>& t) { return LaurentPoly::from_terms(t); }
}  // namespace

TEST_CASE("xprod_pos examples") {
    XSeries e = xprod_pos(0, 0);
    CHECK(e.order() == 0);
    CHECK(e[0] == LaurentPoly(Int(1)));

    XSeries p2 = xprod_pos(2, 0);  // (1+x)(1+xq)
    CHECK(p2[0] == LaurentPoly(Int(1)));
    CHECK(p2[1] == lp({{0, 1}, {1, 1}}));
    CHECK(p2[2] == lp({{1, 1}}));

    XSeries s = xprod_pos(1, 3);
    CHECK(s[0] == LaurentPoly(Int(1)));
    CHECK(s[1] == lp({{3, 1}}));
}

TEST_CASE("series inversion") {
    XSeries g(4);  // 1 - x
    g.set(0, LaurentPoly(Int(1)));
    g.set(1, LaurentPoly(Int(-1)));
    XSeries inv = g.inverse();
    for (Exp i = 0; i <= 4; ++i) CHECK(inv[i] == LaurentPoly(Int(1)));

    CHECK(XSeries::one(0).inverse() == XSeries::one(0));

    // 1/((1-x)(1-xq)): coefficient of x^k is [k+1 choose 1]
    XSeries h = xprod_pos(2, 0).negate_x().padded(3).inverse();
    for (Exp k = 0; k <= 3; ++k) CHECK(h[k] == qbinom(k + 1, 1));

    XSeries bad(2);
    bad.set(0, lp({{0, 2}}));
    CHECK_THROWS_AS(bad.inverse(), NonUnitConstantTerm);
    CHECK_THROWS_AS(XSeries(3).inverse(), NonUnitConstantTerm);
}

TEST_CASE("inverse is a two-sided inverse up to truncation") {
    for (Exp n = 1; n <= 5; ++n) {
        XSeries s = xprod_pos(n, 0).padded(10);
        XSeries prod = s * s.inverse();
        CHECK(prod == XSeries::one(10));
    }
}

TEST_CASE("multiplication truncates to the minimum order") {
    XSeries a = xprod_pos(3, 0);
    XSeries b = xprod_pos(5, 0);
    CHECK((a * b).order() == 3);
}

TEST_CASE("truncation coherence") {
    for (Exp n = 1; n <= 4; ++n) {
        XSeries big = xprod_pos(n, 0).negate_x().padded(12).inverse();
        XSeries small = xprod_pos(n, 0).negate_x().padded(6).inverse();
        CHECK(big.truncated(6) == small);
    }
}

TEST_CASE("negate_x is an involution") {
    XSeries s = xprod_pos(4, 1);
    CHECK(s.negate_x().negate_x() == s);
}
