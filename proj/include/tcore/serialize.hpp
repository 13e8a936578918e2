#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "tcore/asymptotics.hpp"
#include "tcore/genfun.hpp"
#include "tcore/qseries.hpp"

namespace tcore {

// Big integers are written as decimal strings throughout.

/// {"truncation_order": N, "coeffs": ["c0", ..., "cN"]}
nlohmann::json to_json(const IntSeries& series);
/// Throws std::invalid_argument on a malformed document (missing keys,
/// non-decimal coefficients, or a coefficient count that disagrees with N).
IntSeries series_from_json(const nlohmann::json& doc);

/// {"identity", "t", "j" (null when absent), "order_checked", "status": "pass"|"fail",
///  "first_mismatch": null | {"n", "closed", "brute"}}
nlohmann::json to_json(const VerificationReport& report);

/// "n,coefficient" header then one row per coefficient.
std::string to_csv(const IntSeries& series);

/// Columns n, exact, predicted_main_term, predicted_np_over_t1, ratio.
std::string to_csv(std::span<const AsymptoticSample> samples, int digits = 20);

/// Decimal rendering of a real with `digits` significant digits in scientific notation.
std::string format_real(const Real& value, int digits = 20);

}  // namespace tcore
