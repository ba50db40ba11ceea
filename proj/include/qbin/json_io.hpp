#ifndef QBIN_JSON_IO_HPP
#define QBIN_JSON_IO_HPP

#include <json.hpp>

#include "qbin/identities.hpp"
#include "qbin/laurent.hpp"
#include "qbin/xseries.hpp"

namespace qbin {

/// {"terms":[{"exp":-7,"coeff":"1"}, ...]}, terms ascending by exponent,
/// coefficients as decimal strings.
nlohmann::ordered_json to_json(const LaurentPoly& p);

/// Rebuild a polynomial from the terms array; inverse of to_json.
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const XSeries& s);

nlohmann::ordered_json to_json(const IdentityReport& report);

}  // namespace qbin

#endif
