#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "colperm/bivariate.hpp"
#include "colperm/polynomial.hpp"

namespace colperm {

/// Result record of one identity verification. `lhs` always comes from
/// enumeration, `rhs` from the closed form under test.
struct IdentityReport {
    std::string identity;  // stable id, e.g. "signed-even"
    int c = 0;
    int n = 0;
    std::string extra;  // detail: witness, sub-check counts, clearing exponent
    std::variant<IntPolynomial, BivariateDistribution> lhs;
    std::variant<IntPolynomial, BivariateDistribution> rhs;
    bool pass = false;
    /// Paper-claimed result: a failure is a hard suite failure. Soft reports
    /// (conjecture cells beyond the confirmed range) are findings only.
    bool hard = true;
    bool degenerate = false;
    std::uint64_t group_size = 0;
    double elapsed_seconds = 0.0;

    const IntPolynomial* lhs_poly() const { return std::get_if<IntPolynomial>(&lhs); }
    const IntPolynomial* rhs_poly() const { return std::get_if<IntPolynomial>(&rhs); }

    std::string lhs_text() const;
    std::string rhs_text() const;

    /// One JSON object per report. Timing is omitted unless requested so that
    /// machine output stays byte-identical across runs.
    nlohmann::json to_json(bool with_timing = false) const;
};

}  // namespace colperm
