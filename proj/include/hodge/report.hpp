#pragma once

// Pass/fail records shared by the verification routines.

#include "hodge/series.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace hodge {

struct CheckReport {
    std::string name;
    nlohmann::json problem;
    std::vector<int> compared_orders;
    bool passed = true;
    nlohmann::json first_mismatch;
    nlohmann::json details;

    nlohmann::json json() const
    {
        nlohmann::json j{{"check", name}, {"problem", problem}, {"compared_orders", compared_orders},
                         {"status", passed ? "pass" : "fail"}};
        if (!passed) j["first_mismatch"] = first_mismatch;
        if (!details.is_null()) j["details"] = details;
        return j;
    }
};

/// Coefficientwise comparison from `from` through order-1; records every compared exponent.
inline void compare_series(CheckReport& report, const Series& actual, const Series& expected, int from, int order)
{
    if (actual.order() < order || expected.order() < order)
        throw VerificationError(report.name + ": series not known through the requested order");
    nlohmann::json coefficients = nlohmann::json::array();
    for (int k = from; k < order; ++k) {
        report.compared_orders.push_back(k);
        const GaussRat x = actual.coefficient(k), y = expected.coefficient(k);
        coefficients.push_back({k, y.str(), x.str()});
        if (report.passed && x != y) {
            report.passed = false;
            report.first_mismatch = {{"exponent", k}, {"expected", y.str()}, {"actual", x.str()}};
        }
    }
    report.details["coefficients"] = coefficients; // [exponent, expected, actual]
}

/// Records a single exact comparison of two series on exponents [from, order) without
/// keeping the coefficients; `label` identifies the comparison in the mismatch record.
inline bool compare_quiet(CheckReport& report, const std::string& label, const Series& actual, const Series& expected,
                          int from, int order)
{
    if (actual.order() < order || expected.order() < order)
        throw VerificationError(report.name + ": " + label + " not known through u^" + std::to_string(order - 1));
    from = std::max(from, std::min(actual.valuation(), expected.valuation()));
    for (int k = from; k < order; ++k) {
        const GaussRat x = actual.coefficient(k), y = expected.coefficient(k);
        if (x != y) {
            if (report.passed)
                report.first_mismatch = {{"where", label}, {"exponent", k}, {"expected", y.str()}, {"actual", x.str()}};
            report.passed = false;
            return false;
        }
    }
    return true;
}

} // namespace hodge
