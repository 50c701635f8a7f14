#include "colperm/polynomial.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace colperm {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long v : coeffs) coeffs_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(mpz_class value) {
    IntPolynomial p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

IntPolynomial IntPolynomial::monomial(mpz_class coeff, int exp) {
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    IntPolynomial p;
    if (coeff != 0) {
        p.coeffs_.resize(static_cast<size_t>(exp) + 1);
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

IntPolynomial IntPolynomial::from_counts(std::span<const std::int64_t> counts) {
    IntPolynomial p;
    p.coeffs_.assign(counts.begin(), counts.end());
    p.trim();
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const mpz_class& IntPolynomial::coeff(int exp) const {
    static const mpz_class kZero = 0;
    if (exp < 0 || static_cast<size_t>(exp) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(exp)];
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(*this);
    for (auto& a : out.coeffs_) a = -a;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    IntPolynomial out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.trim();
    return out;
}

IntPolynomial IntPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    IntPolynomial out = one();
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

IntPolynomial IntPolynomial::substitute_neg() const {
    IntPolynomial out(*this);
    for (size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const mpz_class& a = coeffs_[e];
        if (a == 0) continue;
        const bool neg = a < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const mpz_class mag = abs(a);
        if (e == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0)
            arr.push_back({static_cast<int>(e), coeffs_[e].get_str()});
    return arr;
}

IntPolynomial q_integer(int m) {
    if (m < 1) throw std::invalid_argument("q_integer: m must be >= 1");
    return IntPolynomial(std::vector<mpz_class>(static_cast<size_t>(m), mpz_class(1)));
}

IntPolynomial q_integer_power(int m, int stride) {
    if (m < 1) throw std::invalid_argument("q_integer_power: m must be >= 1");
    if (stride < 1) throw std::invalid_argument("q_integer_power: stride must be >= 1");
    std::vector<mpz_class> coeffs(static_cast<size_t>((m - 1) * stride) + 1, mpz_class(0));
    for (int i = 0; i < m; ++i) coeffs[static_cast<size_t>(i * stride)] = 1;
    return IntPolynomial(std::move(coeffs));
}

SignPattern SignPattern::alternating_plus_first(int n) {
    SignPattern p;
    p.signs.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) p.signs[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? 1 : -1;
    return p;
}

SignPattern SignPattern::alternating_minus_first(int n) {
    SignPattern p = alternating_plus_first(n);
    for (auto& s : p.signs) s = -s;
    return p;
}

IntPolynomial q_product(int c, int n, const SignPattern& pattern) {
    if (static_cast<int>(pattern.signs.size()) != n)
        throw std::invalid_argument("q_product: pattern length must equal n");
    IntPolynomial out = IntPolynomial::one();
    for (int i = 1; i <= n; ++i) {
        IntPolynomial factor = q_integer(i * c);
        if (pattern.signs[static_cast<size_t>(i - 1)] < 0) factor = factor.substitute_neg();
        out = out * factor;
    }
    return out;
}

IntPolynomial q_binomial(int n, int k, int c) {
    if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: negative argument");
    if (k > n) throw std::invalid_argument("q_binomial: k > n");
    if (c < 1) throw std::invalid_argument("q_binomial: c must be >= 1");
    // row of the q-Pascal triangle: binom(m,j) = binom(m-1,j-1) + q^{cj} binom(m-1,j)
    std::vector<IntPolynomial> row{IntPolynomial::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<IntPolynomial> next(static_cast<size_t>(m) + 1);
        next[0] = IntPolynomial::one();
        next[static_cast<size_t>(m)] = IntPolynomial::one();
        for (int j = 1; j < m; ++j)
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] +
                IntPolynomial::monomial(1, c * j) * row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

std::vector<IntPolynomial> gauss_forward(std::span<const IntPolynomial> g, int c) {
    std::vector<IntPolynomial> f(g.size());
    for (size_t m = 0; m < g.size(); ++m)
        for (size_t k = 0; k <= m; ++k)
            f[m] += q_binomial(static_cast<int>(m), static_cast<int>(k), c) * g[k];
    return f;
}

std::vector<IntPolynomial> gauss_inversion(std::span<const IntPolynomial> f, int c) {
    std::vector<IntPolynomial> g(f.size());
    for (size_t m = 0; m < f.size(); ++m) {
        for (size_t k = 0; k <= m; ++k) {
            const int d = static_cast<int>(m - k);
            IntPolynomial part =
                q_binomial(static_cast<int>(m), static_cast<int>(k), c) * f[k];
            part = IntPolynomial::monomial((d % 2 == 0) ? 1 : -1, c * (d * (d - 1) / 2)) * part;
            g[m] += part;
        }
    }
    return g;
}

bool rational_check(const IntPolynomial& lhs, std::span<const RationalTerm> terms, int E) {
    if (E < 0) throw std::invalid_argument("rational_check: negative E");
    const IntPolynomial one_plus{1, 1};
    const IntPolynomial one_minus{1, -1};
    IntPolynomial rhs;
    for (const auto& term : terms) {
        if (term.e > E) throw std::invalid_argument("rational_check: term exponent exceeds E");
        IntPolynomial part = term.core * one_minus.pow(term.e) * one_plus.pow(E - term.e);
        if (term.sign < 0) part = -part;
        rhs += part;
    }
    return lhs * one_plus.pow(E) == rhs;
}

}  // namespace colperm
