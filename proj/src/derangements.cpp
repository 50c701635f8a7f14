#include "colperm/derangements.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colperm/parallel.hpp"
#include "colperm/statistics.hpp"

namespace colperm {

ColoredPermutation derangement_part(const ColoredPermutation& w) {
    std::vector<ColoredLetter> kept;
    for (int i = 1; i <= w.n(); ++i) {
        const ColoredLetter l = w.letter(i);
        if (!(l.value == i && l.color == 0)) kept.push_back(l);
    }
    std::vector<int> values;
    values.reserve(kept.size());
    for (const auto& l : kept) values.push_back(l.value);
    std::sort(values.begin(), values.end());
    for (auto& l : kept) {
        const auto it = std::lower_bound(values.begin(), values.end(), l.value);
        l.value = static_cast<int>(it - values.begin()) + 1;
    }
    return ColoredPermutation(std::move(kept), w.c());
}

ColoredWord tilde(std::span<const ColoredLetter> word, int ambient_n) {
    const int k = static_cast<int>(word.size());
    if (k > ambient_n) throw std::invalid_argument("tilde: word longer than ambient degree");

    std::vector<int> sub_values, exc_values, fix_values;
    for (int i = 1; i <= k; ++i) {
        const ColoredLetter l = word[static_cast<size_t>(i - 1)];
        const ColoredLetter at_own = {i, 0};
        if (letter_less(l, at_own))
            sub_values.push_back(l.value);
        else if (l == at_own)
            fix_values.push_back(l.value);
        else
            exc_values.push_back(l.value);
    }
    std::sort(sub_values.begin(), sub_values.end());
    std::sort(fix_values.begin(), fix_values.end());
    std::sort(exc_values.begin(), exc_values.end(), std::greater<>());

    const int s = static_cast<int>(sub_values.size());
    std::vector<int> relabel(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= s; ++i) relabel[static_cast<size_t>(sub_values[static_cast<size_t>(i - 1)])] = i;
    for (int i = 1; i <= static_cast<int>(fix_values.size()); ++i)
        relabel[static_cast<size_t>(fix_values[static_cast<size_t>(i - 1)])] = s + i;
    for (int i = 1; i <= static_cast<int>(exc_values.size()); ++i)
        relabel[static_cast<size_t>(exc_values[static_cast<size_t>(i - 1)])] = ambient_n - i + 1;

    ColoredWord out(word.begin(), word.end());
    for (auto& l : out) l.value = relabel[static_cast<size_t>(l.value)];
    return out;
}

ColoredWord phi(const ColoredPermutation& w) { return tilde(w.letters(), w.n()); }

ColoredWord gamma_word(const ColoredPermutation& alpha, int ambient_n) {
    const auto classes = subcedants_excedants(alpha.letters(), ambient_n);
    const int s = static_cast<int>(classes.subcedants.size());
    const int e = static_cast<int>(classes.excedants.size());
    ColoredWord out;
    for (int v = s + 1; v <= ambient_n - e; ++v) out.push_back({v, 0});
    return out;
}

void for_each_fiber_element(const ColoredPermutation& alpha, int n,
                            const std::function<void(const ColoredPermutation&)>& fn) {
    const int k = alpha.n();
    if (k > n) throw std::invalid_argument("fiber: derangement degree exceeds ambient degree");
    if (!alpha.is_derangement())
        throw std::invalid_argument("fiber: base word must be a derangement");

    // walk the (n-k)-subsets of [1..n] as fixed-value sets, lexicographically
    const int f = n - k;
    std::vector<int> fixed(static_cast<size_t>(f));
    std::iota(fixed.begin(), fixed.end(), 1);
    while (true) {
        std::vector<bool> is_fixed(static_cast<size_t>(n) + 1, false);
        for (int v : fixed) is_fixed[static_cast<size_t>(v)] = true;
        std::vector<int> complement;
        complement.reserve(static_cast<size_t>(k));
        for (int v = 1; v <= n; ++v)
            if (!is_fixed[static_cast<size_t>(v)]) complement.push_back(v);

        std::vector<ColoredLetter> letters(static_cast<size_t>(n));
        for (int v : fixed) letters[static_cast<size_t>(v - 1)] = {v, 0};
        size_t slot = 0;
        for (int pos = 1; pos <= n; ++pos) {
            if (is_fixed[static_cast<size_t>(pos)]) continue;
            const ColoredLetter l = alpha.letter(static_cast<int>(++slot));
            letters[static_cast<size_t>(pos - 1)] = {complement[static_cast<size_t>(l.value - 1)],
                                                     l.color};
        }
        fn(ColoredPermutation(std::move(letters), alpha.c()));

        // next combination
        int i = f - 1;
        while (i >= 0 && fixed[static_cast<size_t>(i)] == n - (f - 1 - i)) --i;
        if (i < 0) break;
        ++fixed[static_cast<size_t>(i)];
        for (int j = i + 1; j < f; ++j)
            fixed[static_cast<size_t>(j)] = fixed[static_cast<size_t>(j - 1)] + 1;
    }
}

void for_each_shuffle(std::span<const ColoredLetter> tau, std::span<const ColoredLetter> sigma,
                      const std::function<void(const ColoredWord&)>& fn) {
    std::set<int> tau_values;
    for (const auto& l : tau) tau_values.insert(l.value);
    for (const auto& l : sigma)
        if (tau_values.count(l.value))
            throw std::invalid_argument("shuffle: words share the value " +
                                        std::to_string(l.value));

    const int j = static_cast<int>(tau.size());
    const int m = j + static_cast<int>(sigma.size());
    // positions of tau within [0..m), walked lexicographically
    std::vector<int> pos(static_cast<size_t>(j));
    std::iota(pos.begin(), pos.end(), 0);
    ColoredWord word(static_cast<size_t>(m));
    while (true) {
        size_t a = 0, b = 0;
        for (int i = 0; i < m; ++i) {
            if (a < pos.size() && pos[a] == i)
                word[static_cast<size_t>(i)] = tau[a++];
            else
                word[static_cast<size_t>(i)] = sigma[b++];
        }
        fn(word);

        int i = j - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == m - (j - i)) --i;
        if (i < 0) break;
        ++pos[static_cast<size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            pos[static_cast<size_t>(t)] = pos[static_cast<size_t>(t - 1)] + 1;
    }
}

namespace {

int fmaj_bound(int c, int n) { return c * (n * (n - 1) / 2) + n * (c - 1); }

enum class DerangementWeight { Plain, Signed, EvenOnly };

IntPolynomial derangement_poly(int c, int n, std::uint64_t budget, int jobs,
                               DerangementWeight weight) {
    const GroupParams params{c, n};
    const std::uint64_t size = group_order_checked(params, budget);
    const size_t width = static_cast<size_t>(fmaj_bound(c, n)) + 1;

    using Counts = std::vector<std::int64_t>;
    Counts total = chunked_reduce(
        size, jobs, Counts(width, 0),
        [&](std::uint64_t begin, std::uint64_t end) {
            Counts counts(width, 0);
            for (GroupEnumerator cur(params, budget, begin, end); !cur.done(); cur.advance()) {
                const ColoredPermutation& w = cur.current();
                if (!w.is_derangement()) continue;
                const auto exp = static_cast<size_t>(fmaj(w));
                switch (weight) {
                    case DerangementWeight::Plain: ++counts[exp]; break;
                    case DerangementWeight::Signed:
                        counts[exp] += (length(w) % 2 == 0) ? 1 : -1;
                        break;
                    case DerangementWeight::EvenOnly:
                        if (length(w) % 2 == 0) ++counts[exp];
                        break;
                }
            }
            return counts;
        },
        [](Counts& acc, Counts part) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        });
    return IntPolynomial::from_counts(total);
}

/// Core of the k-th closed-form summand: (-1)^k q^{c*C(k,2)} prod_{i=k+1..n}[ic]_q
/// split into (sign, magnitude) so callers can attach rational factors.
IntPolynomial closed_core(int c, int n, int k) {
    IntPolynomial part = IntPolynomial::monomial(1, c * (k * (k - 1) / 2));
    for (int i = k + 1; i <= n; ++i) part = part * q_integer(i * c);
    return part;
}

}  // namespace

IntPolynomial d_poly_enumerated(int c, int n, std::uint64_t budget, int jobs) {
    return derangement_poly(c, n, budget, jobs, DerangementWeight::Plain);
}

IntPolynomial d_signed_enumerated(int c, int n, std::uint64_t budget, int jobs) {
    return derangement_poly(c, n, budget, jobs, DerangementWeight::Signed);
}

IntPolynomial d_even_part_enumerated(int c, int n, std::uint64_t budget, int jobs) {
    return derangement_poly(c, n, budget, jobs, DerangementWeight::EvenOnly);
}

IntPolynomial d_poly_closed(int c, int n) {
    GroupParams{c, n}.validate();
    IntPolynomial total;
    for (int k = 0; k <= n; ++k) {
        const IntPolynomial part = closed_core(c, n, k);
        total += (k % 2 == 0) ? part : -part;
    }
    return total;
}

IdentityReport d_signed_closed_check(int c, int n, std::uint64_t budget, int jobs) {
    if (c % 2 != 0)
        throw std::invalid_argument("d_signed_closed_check: requires even c");
    const auto start = std::chrono::steady_clock::now();

    const IntPolynomial enumerated = d_signed_enumerated(c, n, budget, jobs);
    const int E = (n + 1) / 2;
    std::vector<RationalTerm> terms;
    terms.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        terms.push_back({(k % 2 == 0) ? 1 : -1, closed_core(c, n, k), (n - k + 1) / 2});

    IdentityReport report;
    report.identity = "derangement-signed";
    report.c = c;
    report.n = n;
    report.extra = "cleared by (1+q)^" + std::to_string(E);
    report.pass = rational_check(enumerated, terms, E);
    report.group_size = group_order_checked({c, n}, budget);

    const IntPolynomial one_plus{1, 1};
    const IntPolynomial one_minus{1, -1};
    IntPolynomial rhs_cleared;
    for (const auto& t : terms) {
        IntPolynomial part = t.core * one_minus.pow(t.e) * one_plus.pow(E - t.e);
        rhs_cleared += (t.sign < 0) ? -part : part;
    }
    report.lhs = enumerated * one_plus.pow(E);
    report.rhs = std::move(rhs_cleared);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

IdentityReport even_part_check(int c, int n, std::uint64_t budget, int jobs) {
    if (c % 2 != 0) throw std::invalid_argument("even_part_check: requires even c");
    const auto start = std::chrono::steady_clock::now();

    const IntPolynomial plain = d_poly_enumerated(c, n, budget, jobs);
    const IntPolynomial signed_part = d_signed_enumerated(c, n, budget, jobs);
    const IntPolynomial even_part = d_even_part_enumerated(c, n, budget, jobs);
    const IntPolynomial twice_even = even_part + even_part;

    bool pass = (twice_even == plain + signed_part);

    // closed form. The 1/2 factors of the published identity appear here as
    // the factor 2 moved to the left side: for each k one term with e = 0 and
    // one with e = floor((n-k+1)/2).
    const int E = (n + 1) / 2;
    std::vector<RationalTerm> terms;
    for (int k = 0; k <= n; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        const IntPolynomial core = closed_core(c, n, k);
        terms.push_back({sign, core, 0});
        terms.push_back({sign, core, (n - k + 1) / 2});
    }
    pass = pass && rational_check(twice_even, terms, E);

    // q = 1 evaluation must reproduce the count split
    const auto split = d_counts_split(c, n);
    pass = pass && (even_part.at_one() == split.even);

    IdentityReport report;
    report.identity = "derangement-even-part";
    report.c = c;
    report.n = n;
    report.extra = "2*even = plain + signed; cleared by (1+q)^" + std::to_string(E);
    report.pass = pass;
    report.group_size = group_order_checked({c, n}, budget);
    const IntPolynomial one_plus{1, 1};
    const IntPolynomial one_minus{1, -1};
    IntPolynomial rhs_cleared;
    for (const auto& t : terms) {
        IntPolynomial part = t.core * one_minus.pow(t.e) * one_plus.pow(E - t.e);
        rhs_cleared += (t.sign < 0) ? -part : part;
    }
    report.lhs = twice_even * one_plus.pow(E);
    report.rhs = std::move(rhs_cleared);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

mpz_class factorial(int n) {
    mpz_class out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace

mpz_class d_count(int c, int n) {
    GroupParams{c, n}.validate();
    mpz_class total = 0;
    mpz_class ratio = factorial(n);  // n!/k!, divided down as k grows
    for (int k = 0; k <= n; ++k) {
        mpz_class c_power;
        mpz_ui_pow_ui(c_power.get_mpz_t(), static_cast<unsigned long>(c),
                      static_cast<unsigned long>(n - k));
        total += ((k % 2 == 0) ? ratio : -ratio) * c_power;
        ratio /= (k + 1);
    }
    return total;
}

DerangementCountSplit d_counts_split(int c, int n) {
    if (c % 2 != 0) throw std::invalid_argument("d_counts_split: requires even c");
    // H = n! * sum_{k=0..n-1} (-1)^k c^{n-k} / k!
    mpz_class h = 0;
    mpz_class ratio = factorial(n);
    for (int k = 0; k <= n - 1; ++k) {
        mpz_class c_power;
        mpz_ui_pow_ui(c_power.get_mpz_t(), static_cast<unsigned long>(c),
                      static_cast<unsigned long>(n - k));
        h += ((k % 2 == 0) ? ratio : -ratio) * c_power;
        ratio /= (k + 1);
    }
    if (h % 2 != 0)
        throw std::runtime_error("d_counts_split: internal consistency failure, H is odd");
    DerangementCountSplit split;
    const mpz_class half = h / 2;
    const int sign = (n % 2 == 0) ? 1 : -1;
    split.even = half + sign;
    split.odd = half;
    split.difference = sign;
    return split;
}

DerangementPolynomials derangement_polynomials(int c, int n, std::uint64_t budget, int jobs) {
    DerangementPolynomials out;
    out.c = c;
    out.n = n;
    out.plain = d_poly_enumerated(c, n, budget, jobs);
    out.signed_part = d_signed_enumerated(c, n, budget, jobs);
    out.even_part = d_even_part_enumerated(c, n, budget, jobs);
    out.count_total = out.plain.at_one();
    out.count_even = out.even_part.at_one();
    out.count_odd = out.count_total - out.count_even;
    return out;
}

nlohmann::json DerangementPolynomials::to_json() const {
    return nlohmann::json{
        {"c", c},
        {"n", n},
        {"plain", plain.to_json()},
        {"signed", signed_part.to_json()},
        {"even_part", even_part.to_json()},
        {"counts",
         {{"total", count_total.get_str()},
          {"even", count_even.get_str()},
          {"odd", count_odd.get_str()},
          {"difference", mpz_class(count_even - count_odd).get_str()}}},
    };
}

}  // namespace colperm
