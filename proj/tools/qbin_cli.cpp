#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qbin/identities.hpp"
#include "qbin/json_io.hpp"
#include "qbin/qbinom.hpp"
#include "qbin/xseries.hpp"

namespace {

using namespace qbin;

bool parse_range(const std::string& text, Range& out) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        std::size_t used = 0;
        out.lo = std::stoll(text.substr(0, pos), &used);
        if (used != pos) return false;
        std::string hi = text.substr(pos + 2);
        out.hi = std::stoll(hi, &used);
        if (used != hi.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return out.lo <= out.hi;
}

bool parse_rational(const std::string& text, Rational& out) {
    try {
        auto pos = text.find('/');
        if (pos == std::string::npos) {
            out = Rational(Int(text));
        } else {
            Int den(text.substr(pos + 1));
            if (den == 0) return false;
            out = Rational(Int(text.substr(0, pos)), den);
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

void print_series(const XSeries& s, bool json) {
    if (json) {
        std::cout << to_json(s).dump() << "\n";
        return;
    }
    for (Exp i = 0; i <= s.order(); ++i) std::cout << "x^" << i << ": " << to_text(s[i]) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact q-binomial coefficients and identity checks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    Exp n = 0, k = 0;
    std::string q_text = "1";
    std::string mode;
    Exp order = 12;
    std::string identity;
    std::string range_a, range_b, range_n, range_k;
    bool perturb = false;

    // positionals accept negative numbers; --n/--k are the escape hatch
    auto* binom = app.add_subcommand("binom", "q-binomial coefficient [n choose k]");
    auto* binom_np = binom->add_option("N", n, "upper argument");
    auto* binom_kp = binom->add_option("K", k, "lower argument");
    auto* binom_nf = binom->add_option("--n", n)->excludes(binom_np);
    auto* binom_kf = binom->add_option("--k", k)->excludes(binom_kp);

    auto* eval = app.add_subcommand("eval", "evaluate [n choose k] at rational q");
    auto* eval_np = eval->add_option("N", n, "upper argument");
    auto* eval_kp = eval->add_option("K", k, "lower argument");
    auto* eval_nf = eval->add_option("--n", n)->excludes(eval_np);
    auto* eval_kf = eval->add_option("--k", k)->excludes(eval_kp);
    eval->add_option("--q", q_text, "value of q, integer or p/r")->capture_default_str();

    auto* expand = app.add_subcommand("expand", "q-binomial theorem expansion in x");
    expand->add_option("mode", mode, "pos or neg")->required();
    expand->add_option("n", n)->required();
    expand->add_option("--order", order, "truncation order for neg mode")->capture_default_str();

    auto* check = app.add_subcommand("check", "verify an identity over a parameter grid");
    check->add_option("identity", identity, "identity name or 'all'")->required();
    check->add_option("--a", range_a, "range lo..hi for parameter a");
    check->add_option("--b", range_b, "range lo..hi for parameter b");
    check->add_option("--n", range_n, "range lo..hi for parameter n");
    check->add_option("--k", range_k, "range lo..hi for parameter k");
    check->add_flag("--perturb", perturb, "self-test: perturb one coefficient per comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool json = format == "json";

    auto have_both = [](const CLI::Option* np, const CLI::Option* kp, const CLI::Option* nf,
                        const CLI::Option* kf) {
        return (np->count() + nf->count() == 1) && (kp->count() + kf->count() == 1);
    };

    if (binom->parsed()) {
        if (!have_both(binom_np, binom_kp, binom_nf, binom_kf)) {
            std::cerr << "binom requires n and k\n";
            return 2;
        }
        LaurentPoly p = qbinom(n, k);
        if (json)
            std::cout << to_json(p).dump() << "\n";
        else
            std::cout << to_text(p) << "\n";
        return 0;
    }

    if (eval->parsed()) {
        if (!have_both(eval_np, eval_kp, eval_nf, eval_kf)) {
            std::cerr << "eval requires n and k\n";
            return 2;
        }
        Rational q0;
        if (!parse_rational(q_text, q0)) {
            std::cerr << "invalid rational: " << q_text << "\n";
            return 2;
        }
        Rational value;
        try {
            value = qbinom(n, k).eval(q0);
        } catch (const EvalAtZero& e) {
            std::cerr << e.what() << "\n";
            return 4;
        }
        if (json)
            std::cout << nlohmann::json{{"value", value.str()}}.dump() << "\n";
        else
            std::cout << value.str() << "\n";
        return 0;
    }

    if (expand->parsed()) {
        if (n < 0 || order < 0) {
            std::cerr << "n and order must be nonnegative\n";
            return 2;
        }
        if (mode == "pos") {
            print_series(xprod_pos(n, 0), json);
        } else if (mode == "neg") {
            print_series(xprod_pos(n, 0).negate_x().padded(std::max(order, n)).inverse()
                             .truncated(order),
                         json);
        } else {
            std::cerr << "invalid mode: " << mode << "\n";
            return 2;
        }
        return 0;
    }

    // check
    GridSpec overrides;
    for (const auto& [name, text] : std::initializer_list<std::pair<const char*, std::string>>{
             {"a", range_a}, {"b", range_b}, {"n", range_n}, {"k", range_k}}) {
        if (text.empty()) continue;
        Range r;
        if (!parse_range(text, r)) {
            std::cerr << "malformed range for --" << name << ": " << text << "\n";
            return 2;
        }
        overrides.ranges.emplace(name, r);
    }

    std::vector<std::string> names;
    if (identity == "all") {
        names = identity_names();
    } else {
        names.push_back(identity);
    }

    CheckOptions opts;
    opts.perturb = perturb;
    bool any_failure = false;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& name : names) {
        IdentityReport report;
        try {
            report = run_grid(name, overrides, opts);
        } catch (const UnknownIdentity& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        any_failure = any_failure || !report.passed();
        if (json)
            reports.push_back(to_json(report));
        else
            std::cout << to_text(report);
    }
    if (json) std::cout << reports.dump() << "\n";
    return any_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qbin::OverflowError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
