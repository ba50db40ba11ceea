#include "qbin/identities.hpp"

#include <functional>
#include <sstream>

#include "qbin/qbinom.hpp"
#include "qbin/qseries.hpp"

namespace qbin {
namespace {

using ParamMap = std::map<std::string, Exp>;

struct PointResult {
    bool applicable = true;
    bool ok = true;
    std::string lhs;
    std::string rhs;
};

PointResult skip() { return {false, true, "", ""}; }

LaurentPoly maybe_perturb(LaurentPoly p, const CheckOptions& opts) {
    if (opts.perturb) p = p + LaurentPoly(Int(1));
    return p;
}

PointResult compare(const LaurentPoly& lhs, const LaurentPoly& rhs, const CheckOptions& opts) {
    LaurentPoly l = maybe_perturb(lhs, opts);
    if (l == rhs) return {};
    return {true, false, to_text(l), to_text(rhs)};
}

PointResult compare_series(const XSeries& lhs, const XSeries& rhs, const CheckOptions& opts) {
    for (Exp i = 0; i <= std::min(lhs.order(), rhs.order()); ++i) {
        LaurentPoly l = maybe_perturb(lhs[i], opts);
        if (l == rhs[i]) continue;
        std::ostringstream ls, rs;
        ls << "x^" << i << ": " << to_text(l);
        rs << "x^" << i << ": " << to_text(rhs[i]);
        return {true, false, ls.str(), rs.str()};
    }
    return {};
}

LaurentPoly one_minus_qpow(Exp e) { return LaurentPoly(Int(1)) - LaurentPoly::q_power(e); }

// integer binomial coefficient, n >= 0
Int int_binom(Exp n, Exp k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Exp j = 1; j <= k; ++j) {
        r *= Int(n - k + j);
        r /= Int(j);
    }
    return r;
}

// three-case extension to negative upper argument, q=1 counterpart of qbinom
Int int_binom_all(Exp n, Exp k) {
    if (n >= 0) return int_binom(n, k);
    if (k >= 0) return (k % 2 ? Int(-1) : Int(1)) * int_binom(-n + k - 1, k);
    if (k <= n) return ((n - k) % 2 ? Int(-1) : Int(1)) * int_binom(-k - 1, n - k);
    return 0;
}

PointResult check_symmetry_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    return compare(qbinom(n, k), qbinom(n, checked_sub(n, k)), o);
}

PointResult check_absorption_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    return compare(one_minus_qpow(k) * qbinom(n, k), one_minus_qpow(n) * qbinom(n - 1, k - 1), o);
}

PointResult check_zeros_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    bool expect_zero = (n >= 0 && (k < 0 || k > n)) || (n < 0 && n < k && k < 0);
    LaurentPoly v = maybe_perturb(qbinom(n, k), o);
    if (v.is_zero() == expect_zero) return {};
    return {true, false, to_text(v), expect_zero ? "0" : "nonzero"};
}

PointResult check_selfrec_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    LaurentPoly rec = reciprocal(n, k);
    Exp shift = checked_neg(checked_mul(k, checked_sub(n, k)));
    PointResult r = compare(rec, LaurentPoly::q_power(shift) * qbinom(n, k), o);
    if (!r.ok) return r;
    if (k >= 0) {
        ShiftedForm t = negate_upper(n, k);
        LaurentPoly rhs =
            LaurentPoly::monomial(checked_neg(t.exp), t.sign) * reciprocal(t.n, t.k);
        r = compare(rec, rhs, o);
        if (!r.ok) return r;
    }
    if (k <= n) {
        ShiftedForm t = negate_lower(n, k);
        LaurentPoly rhs =
            LaurentPoly::monomial(checked_neg(t.exp), t.sign) * reciprocal(t.n, t.k);
        r = compare(rec, rhs, o);
        if (!r.ok) return r;
    }
    return {};
}

PointResult check_pochhammer_reversal_point(const ParamMap& p, const CheckOptions& o) {
    Exp e = p.at("n"), k = p.at("k");
    if (k < 0) return skip();
    for (int c : {1, -1}) {
        QMonomial a{c, e};
        PointResult r = compare(pochhammer(a, k), pochhammer_reversed(a, k), o);
        if (!r.ok) return r;
    }
    return {};
}

PointResult check_trans1_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    if (k < 0) return skip();
    ShiftedForm t = negate_upper(n, k);
    return compare(qbinom(n, k), t.prefactor() * qbinom(t.n, t.k), o);
}

PointResult check_trans2_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    if (k > n) return skip();
    ShiftedForm t = negate_lower(n, k);
    return compare(qbinom(n, k), t.prefactor() * qbinom(t.n, t.k), o);
}

PointResult check_negdef_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    return compare(qbinom(n, k), qbinom_oracle(n, k), o);
}

PointResult check_qbinpos_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n");
    XSeries rhs(n);
    for (Exp k = 0; k <= n; ++k)
        rhs.set(k, LaurentPoly::q_power(triangular(k)) * qbinom(n, k));
    return compare_series(xprod_pos(n, 0), rhs, o);
}

PointResult check_qbinneg_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n");
    Exp order = std::max<Exp>(12, n + 4);
    XSeries inv = xprod_pos(n, 0).negate_x().padded(order).inverse();
    XSeries rhs(order);
    for (Exp k = 0; k <= order; ++k) rhs.set(k, qbinom(n + k - 1, n - 1));
    return compare_series(inv, rhs, o);
}

PointResult check_product_rule_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b");
    XSeries lhs = xprod_pos(a, 0).padded(a + b) * xprod_pos(b, a).padded(a + b);
    return compare_series(lhs, xprod_pos(a + b, 0), o);
}

PointResult check_qbinsum1_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b"), n = p.at("n");
    LaurentPoly s1, s2;
    for (Exp k = 0; k <= n; ++k) {
        LaurentPoly prod = qbinom(a, k) * qbinom(b, n - k);
        s1 = s1 + LaurentPoly::q_power(checked_mul(a - k, n - k)) * prod;
        s2 = s2 + LaurentPoly::q_power(checked_mul(b - n + k, k)) * prod;
    }
    LaurentPoly rhs = qbinom(a + b, n);
    PointResult r = compare(s1, rhs, o);
    if (!r.ok) return r;
    return compare(s2, rhs, o);
}

PointResult check_qbinsum2_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b"), n = p.at("n");
    LaurentPoly s1, s2;
    for (Exp k = 0; k <= n; ++k) {
        LaurentPoly prod = qbinom(a + k, a) * qbinom(b + n - k, b);
        s1 = s1 + LaurentPoly::q_power(checked_mul(b + 1, k)) * prod;
        s2 = s2 + LaurentPoly::q_power(checked_mul(a + 1, n - k)) * prod;
    }
    LaurentPoly rhs = qbinom(n + a + b + 1, n);
    PointResult r = compare(s1, rhs, o);
    if (!r.ok) return r;
    return compare(s2, rhs, o);
}

LaurentPoly sign_pm(Exp k) { return LaurentPoly(Int(k % 2 ? -1 : 1)); }

PointResult check_qbinsum3_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b"), n = p.at("n");
    LaurentPoly s;
    for (Exp k = 0; k <= n; ++k)
        s = s + sign_pm(k) * LaurentPoly::q_power(triangular(k)) * qbinom(a, k) *
                    qbinom(b + n - k, b);
    LaurentPoly rhs;
    if (a <= b) {
        rhs = LaurentPoly::q_power(checked_mul(a, n)) * qbinom(n - a + b, n);
    } else {
        rhs = sign_pm(n) *
              LaurentPoly::q_power(checked_add(checked_mul(b, n), triangular(n + 1))) *
              qbinom(a - b - 1, n);
    }
    return compare(s, rhs, o);
}

PointResult check_qbinsum4_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b"), n = p.at("n");
    LaurentPoly s;
    for (Exp k = 0; k <= n; ++k) {
        Exp e = checked_add(checked_mul(a - b, n - k), triangular(k + 1));
        s = s + sign_pm(k) * LaurentPoly::q_power(e) * qbinom(a, k) * qbinom(b + n - k, b);
    }
    LaurentPoly rhs;
    if (a <= b) {
        rhs = LaurentPoly::q_power(checked_mul(a - b, n)) * qbinom(n - a + b, n);
    } else {
        rhs = sign_pm(n) * LaurentPoly::q_power(triangular(n + 1)) * qbinom(a - b - 1, n);
    }
    return compare(s, rhs, o);
}

PointResult check_derived_transform_point(const ParamMap& p, const CheckOptions& o) {
    Exp a = p.at("a"), b = p.at("b"), n = p.at("n");
    if (a < 1) return skip();
    LaurentPoly s;
    for (Exp k = 0; k <= n; ++k)
        s = s + LaurentPoly::q_power(checked_mul(a, n - k)) * qbinom(a + k - 1, a - 1) *
                    qbinom(b + n - k, b);
    return compare(s, qbinom(n + a + b, n), o);
}

PointResult check_q1_specialization_point(const ParamMap& p, const CheckOptions& o) {
    Exp n = p.at("n"), k = p.at("k");
    Rational lhs = maybe_perturb(qbinom(n, k), o).eval(Rational(1));
    Int rhs = int_binom_all(n, k);
    if (lhs == Rational(rhs)) return {};
    return {true, false, lhs.str(), rhs.str()};
}

struct Identity {
    std::vector<std::pair<std::string, Range>> params;
    std::function<PointResult(const ParamMap&, const CheckOptions&)> fn;
};

const std::vector<std::pair<std::string, Identity>>& registry() {
    static const Range full{-12, 12};
    static const Range sum{0, 6};
    static const std::vector<std::pair<std::string, Identity>> reg = {
        {"symmetry", {{{"n", full}, {"k", full}}, check_symmetry_point}},
        {"absorption", {{{"n", full}, {"k", full}}, check_absorption_point}},
        {"zeros", {{{"n", full}, {"k", full}}, check_zeros_point}},
        {"selfrec", {{{"n", full}, {"k", full}}, check_selfrec_point}},
        {"pochhammer_reversal", {{{"n", {-6, 6}}, {"k", {0, 8}}}, check_pochhammer_reversal_point}},
        {"trans1", {{{"n", full}, {"k", {0, 12}}}, check_trans1_point}},
        {"trans2", {{{"n", full}, {"k", full}}, check_trans2_point}},
        {"negdef", {{{"n", full}, {"k", full}}, check_negdef_point}},
        {"qbinpos", {{{"n", {0, 12}}}, check_qbinpos_point}},
        {"qbinneg", {{{"n", {1, 8}}}, check_qbinneg_point}},
        {"product_rule", {{{"a", {0, 8}}, {"b", {0, 8}}}, check_product_rule_point}},
        {"qbinsum1", {{{"a", sum}, {"b", sum}, {"n", sum}}, check_qbinsum1_point}},
        {"qbinsum2", {{{"a", sum}, {"b", sum}, {"n", sum}}, check_qbinsum2_point}},
        {"qbinsum3", {{{"a", sum}, {"b", sum}, {"n", sum}}, check_qbinsum3_point}},
        {"qbinsum4", {{{"a", sum}, {"b", sum}, {"n", sum}}, check_qbinsum4_point}},
        {"derived_transform", {{{"a", {1, 6}}, {"b", sum}, {"n", sum}}, check_derived_transform_point}},
        {"q1_specialization", {{{"n", full}, {"k", full}}, check_q1_specialization_point}},
    };
    return reg;
}

const Identity& lookup(const std::string& name) {
    for (const auto& [n, id] : registry())
        if (n == name) return id;
    throw UnknownIdentity(name);
}

}  // namespace

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& [n, id] : registry()) names.push_back(n);
    return names;
}

GridSpec default_grid(const std::string& name) {
    GridSpec g;
    for (const auto& [pname, range] : lookup(name).params) g.ranges.emplace(pname, range);
    return g;
}

IdentityReport run_grid(const std::string& name, const GridSpec& overrides,
                        const CheckOptions& opts) {
    const Identity& id = lookup(name);

    std::vector<std::pair<std::string, Range>> params = id.params;
    for (auto& [pname, range] : params) {
        auto it = overrides.ranges.find(pname);
        if (it != overrides.ranges.end()) range = it->second;
    }

    IdentityReport report;
    report.identity = name;
    for (const auto& [pname, range] : params) report.grid.ranges.emplace(pname, range);

    // odometer over the parameter ranges, last parameter fastest
    ParamMap point;
    for (const auto& [pname, range] : params) point[pname] = range.lo;
    std::vector<Exp> idx(params.size());
    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i < params.size(); ++i)
            point[params[i].first] = params[i].second.lo + idx[i];

        PointResult r = id.fn(point, opts);
        if (r.applicable) {
            ++report.checked;
            if (!r.ok) report.failures.push_back({point, r.lhs, r.rhs});
        }

        done = true;
        for (std::size_t i = params.size(); i-- > 0;) {
            const auto& range = params[i].second;
            if (params[i].second.lo + idx[i] < range.hi) {
                ++idx[i];
                for (std::size_t j = i + 1; j < params.size(); ++j) idx[j] = 0;
                done = false;
                break;
            }
        }
        if (params.empty()) break;
    }
    return report;
}

bool linkage_sum3_to_sum1(Exp a, Exp b, Exp n) {
    // in the alternating sum replace the lower parameter b by -(b+1); each
    // transformed term must match the Chu-Vandermonde summand up to the
    // common monomial prefactor, and the sums must agree
    LaurentPoly prefactor =
        sign_pm(n) * LaurentPoly::q_power(checked_add(checked_neg(checked_mul(b, n)), triangular(n)));
    LaurentPoly total;
    for (Exp k = 0; k <= n; ++k) {
        LaurentPoly term = sign_pm(k) * LaurentPoly::q_power(triangular(k)) * qbinom(a, k) *
                           qbinom(n - k - b - 1, -b - 1);
        LaurentPoly expected = prefactor *
                               LaurentPoly::q_power(checked_mul(k, b - n + k)) * qbinom(a, k) *
                               qbinom(b, n - k);
        if (term != expected) return false;
        total = total + term;
    }
    return total == prefactor * qbinom(a + b, n);
}

bool linkage_sum3_to_sum2(Exp a, Exp b, Exp n) {
    if (a < 1) return false;
    // replace the upper parameter a by -a; each transformed term must match
    // the shifted-product summand up to the prefactor q^{-an}
    LaurentPoly prefactor = LaurentPoly::q_power(checked_neg(checked_mul(a, n)));
    LaurentPoly total;
    for (Exp k = 0; k <= n; ++k) {
        LaurentPoly term = sign_pm(k) * LaurentPoly::q_power(triangular(k)) * qbinom(-a, k) *
                           qbinom(b + n - k, b);
        LaurentPoly expected = prefactor * LaurentPoly::q_power(checked_mul(a, n - k)) *
                               qbinom(a + k - 1, a - 1) * qbinom(b + n - k, b);
        if (term != expected) return false;
        total = total + term;
    }
    return total == prefactor * qbinom(n + a + b, n);
}

std::string to_text(const IdentityReport& report) {
    std::ostringstream os;
    os << report.identity << ": checked " << report.checked << ", failures "
       << report.failures.size() << "\n";
    for (const auto& f : report.failures) {
        os << "  at";
        for (const auto& [name, value] : f.params) os << " " << name << "=" << value;
        os << ": lhs = " << f.lhs << ", rhs = " << f.rhs << "\n";
    }
    return os.str();
}

}  // namespace qbin
