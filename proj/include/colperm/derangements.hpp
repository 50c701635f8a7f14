#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

#include "colperm/colored.hpp"
#include "colperm/polynomial.hpp"
#include "colperm/report.hpp"

namespace colperm {

/// A word of distinct-valued colored letters over an arbitrary value set
/// (not necessarily [1..k]); the shuffle and tilde machinery works on these.
using ColoredWord = std::vector<ColoredLetter>;

/// Derangement part dp: drop fixed positions, relabel the i-th smallest
/// surviving value to i (colors kept). The result is a colored derangement
/// of degree n - #fixed.
ColoredPermutation derangement_part(const ColoredPermutation& w);

/// The relabeling underlying the fiber bijection. For a word of degree k
/// embedded in ambient degree n:
///   - the i-th smallest subcedant value becomes i, color kept;
///   - the i-th smallest fixed point becomes s+i;
///   - the i-th largest excedant value becomes n-i+1, color kept.
/// Preserves the descent set and the color sum.
ColoredWord tilde(std::span<const ColoredLetter> word, int ambient_n);

inline ColoredWord tilde(const ColoredPermutation& w, int ambient_n) {
    return tilde(w.letters(), ambient_n);
}

/// The fiber bijection: phi(w) = tilde(w, n) for w in G_{c,n}. Restricted to
/// {w : dp(w) = alpha} it is a descent- and color-preserving bijection onto
/// shuffles(tilde(alpha, n), gamma_word(alpha, n)).
ColoredWord phi(const ColoredPermutation& w);

/// The increasing uncolored word (s(alpha)+1, ..., n-e(alpha)) of length n-k.
ColoredWord gamma_word(const ColoredPermutation& alpha, int ambient_n);

/// All w in G_{c,n} with dp(w) = alpha, one per (n-k)-subset of fixed values;
/// exactly C(n,k) elements, in increasing fixed-set order. `alpha` must be a
/// derangement of degree k <= n.
void for_each_fiber_element(const ColoredPermutation& alpha, int n,
                            const std::function<void(const ColoredPermutation&)>& fn);

/// All C(j+k,k) interleavings of two words with disjoint value sets,
/// preserving both as subsequences. Deterministic order (positions of the
/// first word chosen in lexicographic order).
void for_each_shuffle(std::span<const ColoredLetter> tau, std::span<const ColoredLetter> sigma,
                      const std::function<void(const ColoredWord&)>& fn);

/// Generating polynomials over the colored derangements of G_{c,n}.
IntPolynomial d_poly_enumerated(int c, int n, std::uint64_t budget, int jobs = 1);
/// Same weighted by (-1)^length.
IntPolynomial d_signed_enumerated(int c, int n, std::uint64_t budget, int jobs = 1);
/// Restricted to derangements of even length.
IntPolynomial d_even_part_enumerated(int c, int n, std::uint64_t budget, int jobs = 1);

/// Closed form for the derangement polynomial:
///   sum_{k=0..n} (-1)^k q^{c*C(k,2)} prod_{i=k+1..n} [ic]_q
/// (the q-factorial quotient realized as a partial product).
IntPolynomial d_poly_closed(int c, int n);

/// Verifies the signed derangement polynomial (even c) against its closed
/// form with ((1-q)/(1+q))^{floor((n-k+1)/2)} factors, by clearing
/// denominators with (1+q)^{floor((n+1)/2)}.
IdentityReport d_signed_closed_check(int c, int n, std::uint64_t budget, int jobs = 1);

/// Verifies the even-length part (even c): 2*even = plain + signed, the
/// cleared closed form, and the q=1 count consistency.
IdentityReport even_part_check(int c, int n, std::uint64_t budget, int jobs = 1);

/// Number of colored derangements: sum_{k=0..n} (-1)^k (n!/k!) c^{n-k}.
mpz_class d_count(int c, int n);

struct DerangementCountSplit {
    mpz_class even;
    mpz_class odd;
    mpz_class difference;  // even - odd = (-1)^n
};

/// Even/odd-length derangement counts for even c. Internally asserts that
/// the shared half H = n! * sum_{k<n} (-1)^k c^{n-k} / k! is even.
DerangementCountSplit d_counts_split(int c, int n);

struct DerangementPolynomials {
    int c = 1;
    int n = 0;
    IntPolynomial plain;
    IntPolynomial signed_part;
    IntPolynomial even_part;
    mpz_class count_total;
    mpz_class count_even;
    mpz_class count_odd;

    nlohmann::json to_json() const;
};

/// Computes all derangement polynomials and counts by one enumeration pass.
DerangementPolynomials derangement_polynomials(int c, int n, std::uint64_t budget, int jobs = 1);

}  // namespace colperm
