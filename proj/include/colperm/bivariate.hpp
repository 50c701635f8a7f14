#pragma once

#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace colperm {

/// Sparse exact bivariate distribution: (t-exponent, q-exponent) -> coefficient.
/// Zero coefficients are never stored.
class BivariateDistribution {
public:
    using Key = std::pair<int, int>;  // (t_exp, q_exp)

    void accumulate(int t_exp, int q_exp, const mpz_class& coeff);

    /// Swaps the two exponent coordinates.
    BivariateDistribution transpose() const;

    bool is_symmetric() const;
    /// First entry (in key order) whose transposed coefficient differs;
    /// nullopt when symmetric.
    std::optional<Key> asymmetry_witness() const;

    const std::map<Key, mpz_class>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Coefficient-wise merge (associative, commutative).
    BivariateDistribution& operator+=(const BivariateDistribution& rhs);

    friend bool operator==(const BivariateDistribution&, const BivariateDistribution&) = default;

    /// JSON: array of [t_exp, q_exp, coefficient-as-decimal-string] in key order.
    nlohmann::json to_json() const;

private:
    std::map<Key, mpz_class> entries_;
};

}  // namespace colperm
