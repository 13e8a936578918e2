#include "tcore/serialize.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tcore {

namespace {

bool is_decimal(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

nlohmann::json to_json(const IntSeries& series) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : series.coeffs()) coeffs.push_back(c.str());
    return {{"truncation_order", series.order()}, {"coeffs", std::move(coeffs)}};
}

IntSeries series_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("truncation_order") || !doc.contains("coeffs"))
        throw std::invalid_argument("series document needs 'truncation_order' and 'coeffs'");
    const auto& order = doc.at("truncation_order");
    const auto& coeffs = doc.at("coeffs");
    if (!order.is_number_integer() || order.get<long long>() < 0)
        throw std::invalid_argument("'truncation_order' must be a nonnegative integer");
    if (!coeffs.is_array() || coeffs.size() != order.get<std::size_t>() + 1)
        throw std::invalid_argument("'coeffs' must hold truncation_order + 1 entries");
    std::vector<BigInt> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_string() || !is_decimal(c.get<std::string>()))
            throw std::invalid_argument("coefficients must be decimal strings");
        values.emplace_back(c.get<std::string>());
    }
    return IntSeries(std::move(values));
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json doc{{"identity", report.identity_name},
                       {"t", report.t},
                       {"j", nullptr},
                       {"order_checked", report.order_checked},
                       {"status", report.passed() ? "pass" : "fail"},
                       {"first_mismatch", nullptr}};
    if (report.j) doc["j"] = *report.j;
    if (report.first_mismatch)
        doc["first_mismatch"] = {{"n", report.first_mismatch->n},
                                 {"closed", report.first_mismatch->closed_value.str()},
                                 {"brute", report.first_mismatch->brute_value.str()}};
    return doc;
}

std::string to_csv(const IntSeries& series) {
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= series.order(); ++n)
        out += std::to_string(n) + "," + series[static_cast<std::size_t>(n)].str() + "\n";
    return out;
}

std::string format_real(const Real& value, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits - 1) << value;
    return os.str();
}

std::string to_csv(std::span<const AsymptoticSample> samples, int digits) {
    std::string out = "n,exact,predicted_main_term,predicted_np_over_t1,ratio\n";
    for (const auto& s : samples)
        out += std::to_string(s.n) + "," + s.exact_value.str() + "," + format_real(s.predicted_main_term, digits) +
               "," + format_real(s.predicted_np_over_t1, digits) + "," + format_real(s.ratio, digits) + "\n";
    return out;
}

}  // namespace tcore
