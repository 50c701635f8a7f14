#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace colperm {

/// Dense univariate polynomial in q with exact integer coefficients.
/// Canonical form: trailing zero coefficients trimmed; the zero polynomial
/// has an empty coefficient vector and no degree. All arithmetic is exact.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return {}; }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial constant(mpz_class value);
    /// coeff * q^exp
    static IntPolynomial monomial(mpz_class coeff, int exp);
    /// From signed 64-bit counters (enumeration accumulators).
    static IntPolynomial from_counts(std::span<const std::int64_t> counts);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Coefficient of q^exp (zero beyond the stored range).
    const mpz_class& coeff(int exp) const;
    std::span<const mpz_class> coeffs() const { return coeffs_; }

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial pow(int e) const;

    /// P(-q): negates odd-exponent coefficients.
    IntPolynomial substitute_neg() const;

    /// Exact evaluation at an integer point.
    mpz_class evaluate(const mpz_class& x) const;
    mpz_class at_one() const { return evaluate(1); }

    /// Sparse text form, ascending exponents: "1 + q^2 - q^8 - q^10",
    /// "3*q^2 - q^5", "0" for zero.
    std::string to_text() const;
    /// JSON: array of [exponent, coefficient-as-decimal-string], ascending,
    /// zero coefficients omitted.
    nlohmann::json to_json() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// q-integer [m]_q = 1 + q + ... + q^{m-1}; m >= 1 required.
IntPolynomial q_integer(int m);

/// [m] in the variable q^stride: 1 + q^stride + ... + q^{(m-1)*stride}.
IntPolynomial q_integer_power(int m, int stride);

/// Signs applied per factor: factor i of a product is [ic] evaluated at
/// signs[i-1] * q.
struct SignPattern {
    std::vector<int> signs;  // entries +1 or -1

    static SignPattern all_plus(int n) { return {std::vector<int>(static_cast<size_t>(n), 1)}; }
    static SignPattern all_minus(int n) { return {std::vector<int>(static_cast<size_t>(n), -1)}; }
    /// eps_i = (-1)^{i-1}: +, -, +, ...
    static SignPattern alternating_plus_first(int n);
    /// eps_i = (-1)^i: -, +, -, ...
    static SignPattern alternating_minus_first(int n);
};

/// prod_{i=1..n} [ic]_{eps_i q}.
IntPolynomial q_product(int c, int n, const SignPattern& pattern);

/// Gaussian binomial coefficient in the variable q^c, via the q-Pascal
/// recurrence (division-free). Throws std::invalid_argument for k > n or
/// negative arguments.
IntPolynomial q_binomial(int n, int k, int c);

/// Forward q-binomial transform: f_m = sum_k binom(m,k;q^c) g_k.
std::vector<IntPolynomial> gauss_forward(std::span<const IntPolynomial> g, int c);

/// Gauss inversion: g_m = sum_k binom(m,k;q^c) (-1)^{m-k} q^{c*C(m-k,2)} f_k.
/// Inverts gauss_forward.
std::vector<IntPolynomial> gauss_inversion(std::span<const IntPolynomial> f, int c);

/// One summand of a cleared rational identity: sign * core * ((1-q)/(1+q))^e.
struct RationalTerm {
    int sign = 1;  // +1 or -1
    IntPolynomial core;
    int e = 0;  // exponent of (1-q)/(1+q); e <= E required
};

/// Denominator-cleared comparison:
///   lhs * (1+q)^E  ==  sum_terms sign * core * (1-q)^e * (1+q)^{E-e}.
/// This is how every identity with ((1-q)/(1+q))^e factors is checked.
bool rational_check(const IntPolynomial& lhs, std::span<const RationalTerm> terms, int E);

}  // namespace colperm
