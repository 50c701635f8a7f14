#include "colperm/report.hpp"

#include <nlohmann/json.hpp>

namespace colperm {

namespace {

std::string side_text(const std::variant<IntPolynomial, BivariateDistribution>& side) {
    if (const auto* poly = std::get_if<IntPolynomial>(&side)) return poly->to_text();
    // bivariate sides have no one-line text form; summarize by term count
    const auto& dist = std::get<BivariateDistribution>(side);
    return "<bivariate, " + std::to_string(dist.entries().size()) + " terms>";
}

nlohmann::json side_json(const std::variant<IntPolynomial, BivariateDistribution>& side) {
    if (const auto* poly = std::get_if<IntPolynomial>(&side)) return poly->to_json();
    return std::get<BivariateDistribution>(side).to_json();
}

}  // namespace

std::string IdentityReport::lhs_text() const { return side_text(lhs); }
std::string IdentityReport::rhs_text() const { return side_text(rhs); }

nlohmann::json IdentityReport::to_json(bool with_timing) const {
    nlohmann::json out{
        {"identity", identity},
        {"c", c},
        {"n", n},
        {"kind", std::holds_alternative<IntPolynomial>(lhs) ? "polynomial" : "bivariate"},
        {"lhs", side_json(lhs)},
        {"rhs", side_json(rhs)},
        {"pass", pass},
        {"hard", hard},
        {"degenerate", degenerate},
        {"group_size", group_size},
        {"extra", extra},
    };
    if (with_timing) out["elapsed_ms"] = elapsed_seconds * 1000.0;
    return out;
}

}  // namespace colperm
