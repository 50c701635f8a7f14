#include "colperm/bivariate.hpp"

#include <nlohmann/json.hpp>

namespace colperm {

void BivariateDistribution::accumulate(int t_exp, int q_exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    const Key key{t_exp, q_exp};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
}

BivariateDistribution BivariateDistribution::transpose() const {
    BivariateDistribution out;
    for (const auto& [key, coeff] : entries_)
        out.entries_.emplace(Key{key.second, key.first}, coeff);
    return out;
}

bool BivariateDistribution::is_symmetric() const { return !asymmetry_witness().has_value(); }

std::optional<BivariateDistribution::Key> BivariateDistribution::asymmetry_witness() const {
    for (const auto& [key, coeff] : entries_) {
        const auto mirror = entries_.find(Key{key.second, key.first});
        if (mirror == entries_.end() || mirror->second != coeff) return key;
    }
    return std::nullopt;
}

BivariateDistribution& BivariateDistribution::operator+=(const BivariateDistribution& rhs) {
    for (const auto& [key, coeff] : rhs.entries_) accumulate(key.first, key.second, coeff);
    return *this;
}

nlohmann::json BivariateDistribution::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, coeff] : entries_)
        arr.push_back({key.first, key.second, coeff.get_str()});
    return arr;
}

}  // namespace colperm
