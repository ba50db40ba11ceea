#ifndef QBIN_IDENTITIES_HPP
#define QBIN_IDENTITIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbin/laurent.hpp"
#include "qbin/xseries.hpp"

namespace qbin {

struct Range {
    Exp lo;
    Exp hi;
};

/// Closed integer ranges for the parameters an identity iterates over.
/// Keys are a subset of {"a", "b", "n", "k"}.
struct GridSpec {
    std::map<std::string, Range> ranges;
};

struct Failure {
    std::map<std::string, Exp> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    GridSpec grid;
    long long checked = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
};

struct CheckOptions {
    /// Self-test hook: adds 1 to the constant coefficient of each computed
    /// left-hand side, so every comparison-based identity must fail.
    bool perturb = false;
};

/// Names accepted by run_grid, in registry order.
std::vector<std::string> identity_names();

/// Default parameter grid of a named identity.
GridSpec default_grid(const std::string& name);

/// Evaluate the named identity at every grid point. Ranges in `overrides`
/// replace the defaults for the parameters the identity uses; other keys are
/// ignored. Throws UnknownIdentity.
IdentityReport run_grid(const std::string& name, const GridSpec& overrides = {},
                        const CheckOptions& opts = {});

/// Term-by-term §4 route from the alternating sum with its lower parameter
/// negated to the q-Chu-Vandermonde summand, plus the summed form.
bool linkage_sum3_to_sum1(Exp a, Exp b, Exp n);

/// Term-by-term §4 route from the alternating sum with its upper parameter
/// negated to the shifted-product summand (a >= 1), plus the summed form.
bool linkage_sum3_to_sum2(Exp a, Exp b, Exp n);

std::string to_text(const IdentityReport& report);

}  // namespace qbin

#endif
