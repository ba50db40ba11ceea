#include "qbin/json_io.hpp"

namespace qbin {

using nlohmann::ordered_json;

ordered_json to_json(const LaurentPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.str()}});
    return ordered_json{{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    std::vector<std::pair<Exp, Int>> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at("exp").get<Exp>(), Int(t.at("coeff").get<std::string>()));
    return LaurentPoly::from_terms(terms);
}

ordered_json to_json(const XSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (Exp i = 0; i <= s.order(); ++i) coeffs.push_back(to_json(s[i]));
    return ordered_json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

ordered_json to_json(const IdentityReport& report) {
    ordered_json grid = ordered_json::object();
    for (const auto& [name, range] : report.grid.ranges)
        grid[name] = {{"lo", range.lo}, {"hi", range.hi}};
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json params = ordered_json::object();
        for (const auto& [name, value] : f.params) params[name] = value;
        failures.push_back({{"params", std::move(params)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return ordered_json{{"identity", report.identity},
                        {"grid", std::move(grid)},
                        {"checked", report.checked},
                        {"failures", std::move(failures)}};
}

}  // namespace qbin
