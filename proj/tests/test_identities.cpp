#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbin/identities.hpp"
#include "qbin/json_io.hpp"
#include "qbin/qbinom.hpp"

using namespace qbin;

TEST_CASE("registry lists all identities") {
    auto names = identity_names();
    CHECK(names.size() == 17);
    CHECK_THROWS_AS(run_grid("nosuch"), UnknownIdentity);
    CHECK_THROWS_AS(default_grid("nosuch"), UnknownIdentity);
}

TEST_CASE("qbinsum1 full default grid") {
    IdentityReport r = run_grid("qbinsum1");
    CHECK(r.checked == 343);
    CHECK(r.passed());
}

TEST_CASE("product_rule full default grid") {
    IdentityReport r = run_grid("product_rule");
    CHECK(r.checked == 81);
    CHECK(r.passed());
}

TEST_CASE("qbinpos full default grid") {
    IdentityReport r = run_grid("qbinpos");
    CHECK(r.checked == 13);
    CHECK(r.passed());
}

TEST_CASE("remaining sum identities pass on their default grids") {
    for (const char* name : {"qbinsum2", "qbinsum3", "qbinsum4", "derived_transform", "qbinneg"}) {
        IdentityReport r = run_grid(name);
        CAPTURE(name);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("grid identities pass on reduced ranges") {
    GridSpec small{{{"n", {-6, 6}}, {"k", {-6, 6}}}};
    for (const char* name : {"symmetry", "absorption", "zeros", "selfrec", "trans1", "trans2",
                             "negdef", "q1_specialization"}) {
        IdentityReport r = run_grid(name, small);
        CAPTURE(name);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
    IdentityReport r = run_grid("pochhammer_reversal", GridSpec{{{"n", {-3, 3}}, {"k", {0, 5}}}});
    CHECK(r.checked == 42);
    CHECK(r.passed());
}

TEST_CASE("trans2 skips points with k > n") {
    IdentityReport r = run_grid("trans2", GridSpec{{{"n", {0, 1}}, {"k", {0, 1}}}});
    CHECK(r.checked == 3);  // (0,0), (1,0), (1,1)
    CHECK(r.passed());
}

TEST_CASE("range overrides land in the report") {
    GridSpec g{{{"a", {0, 2}}, {"b", {0, 1}}, {"n", {1, 3}}}};
    IdentityReport r = run_grid("qbinsum2", g);
    CHECK(r.checked == 18);
    CHECK(r.grid.ranges.at("a").hi == 2);
    CHECK(r.grid.ranges.at("n").lo == 1);
}

TEST_CASE("perturbation is detected") {
    CheckOptions opts;
    opts.perturb = true;
    for (const char* name : {"symmetry", "qbinsum1", "qbinpos", "q1_specialization"}) {
        IdentityReport r = run_grid(name, GridSpec{{{"a", {0, 2}},
                                                    {"b", {0, 2}},
                                                    {"n", {0, 2}},
                                                    {"k", {0, 2}}}},
                                    opts);
        CAPTURE(name);
        CHECK(!r.passed());
    }
}

TEST_CASE("failures carry rendered sides") {
    CheckOptions opts;
    opts.perturb = true;
    IdentityReport r =
        run_grid("symmetry", GridSpec{{{"n", {2, 2}}, {"k", {1, 1}}}}, opts);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].params.at("n") == 2);
    CHECK(r.failures[0].params.at("k") == 1);
    CHECK(r.failures[0].lhs == "2 + q");
    CHECK(r.failures[0].rhs == "1 + q");
}

TEST_CASE("report json shape") {
    IdentityReport r = run_grid("qbinpos", GridSpec{{{"n", {0, 3}}}});
    auto j = to_json(r);
    CHECK(j["identity"] == "qbinpos");
    CHECK(j["checked"] == 4);
    CHECK(j["grid"]["n"]["lo"] == 0);
    CHECK(j["grid"]["n"]["hi"] == 3);
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
}

TEST_CASE("report text form") {
    IdentityReport r = run_grid("qbinpos", GridSpec{{{"n", {0, 3}}}});
    CHECK(to_text(r) == "qbinpos: checked 4, failures 0\n");
}

TEST_CASE("section-4 linkage routes") {
    for (Exp a = 0; a <= 5; ++a)
        for (Exp b = 0; b <= 5; ++b)
            for (Exp n = 0; n <= 5; ++n) {
                CHECK(linkage_sum3_to_sum1(a, b, n));
                if (a >= 1) CHECK(linkage_sum3_to_sum2(a, b, n));
            }
}

TEST_CASE("alternating-sum second case at a <= b (informational)") {
    // the paper proves the first case from the second only for a > b; count
    // how often the second-case formula also happens to hold when a <= b
    int holds = 0, total = 0;
    for (Exp a = 0; a <= 4; ++a)
        for (Exp b = a; b <= 4; ++b)
            for (Exp n = 0; n <= 4; ++n) {
                LaurentPoly s;
                for (Exp k = 0; k <= n; ++k)
                    s = s + LaurentPoly(Int(k % 2 ? -1 : 1)) *
                                LaurentPoly::q_power(triangular(k)) * qbinom(a, k) *
                                qbinom(b + n - k, b);
                LaurentPoly rhs = LaurentPoly(Int(n % 2 ? -1 : 1)) *
                                  LaurentPoly::q_power(b * n + (n * (n + 1)) / 2) *
                                  qbinom(a - b - 1, n);
                ++total;
                if (s == rhs) ++holds;
            }
    MESSAGE("second-case formula at a<=b holds on ", holds, " of ", total, " points");
    CHECK(total > 0);
}
