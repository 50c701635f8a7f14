#include "colperm/identities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "colperm/derangements.hpp"
#include "colperm/parallel.hpp"
#include "colperm/statistics.hpp"

namespace colperm {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int stat_bound(int c, int n) { return c * (n * (n - 1) / 2) + n * (c - 1); }

/// Accumulates sum of sign(w) * q^{exp(w)} over G_{c,n} with int64 counters
/// (coefficients are bounded by the element budget).
template <typename PerElement>
IntPolynomial enumerate_poly(GroupParams params, std::uint64_t budget, int jobs,
                             const PerElement& per) {
    const std::uint64_t size = group_order_checked(params, budget);
    const size_t width = static_cast<size_t>(stat_bound(params.c, params.n)) + 1;
    using Counts = std::vector<std::int64_t>;
    Counts total = chunked_reduce(
        size, jobs, Counts(width, 0),
        [&](std::uint64_t begin, std::uint64_t end) {
            Counts counts(width, 0);
            for (GroupEnumerator cur(params, budget, begin, end); !cur.done(); cur.advance())
                per(cur.current(), counts);
            return counts;
        },
        [](Counts& acc, Counts part) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        });
    return IntPolynomial::from_counts(total);
}

template <typename Stat1, typename Stat2>
BivariateDistribution joint_distribution(GroupParams params, std::uint64_t budget, int jobs,
                                         const Stat1& stat1, const Stat2& stat2) {
    const std::uint64_t size = group_order_checked(params, budget);
    return chunked_reduce(
        size, jobs, BivariateDistribution{},
        [&](std::uint64_t begin, std::uint64_t end) {
            BivariateDistribution dist;
            for (GroupEnumerator cur(params, budget, begin, end); !cur.done(); cur.advance())
                dist.accumulate(stat1(cur.current()), stat2(cur.current()), 1);
            return dist;
        },
        [](BivariateDistribution& acc, BivariateDistribution part) { acc += part; });
}

IdentityReport make_report(IdentityId id, int c, int n) {
    IdentityReport report;
    report.identity = std::string(to_string(id));
    report.c = c;
    report.n = n;
    return report;
}

void require_even(int c, const char* who) {
    if (c % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": requires even c, got " +
                                    std::to_string(c));
}

void require_odd(int c, const char* who) {
    if (c % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": requires odd c, got " +
                                    std::to_string(c));
}

}  // namespace

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::FmajProduct: return "fmaj-product";
        case IdentityId::SignedUnderlying: return "signed-underlying";
        case IdentityId::SignedEven: return "signed-even";
        case IdentityId::InvTildeEven: return "invtilde-even";
        case IdentityId::InvTildeOdd: return "invtilde-odd";
        case IdentityId::Conjecture: return "conjecture";
        case IdentityId::FactorialForm: return "factorial-form";
        case IdentityId::FiberPlain: return "fiber-plain";
        case IdentityId::FiberSigned: return "fiber-signed";
        case IdentityId::DpParity: return "dp-parity";
        case IdentityId::TildeDescent: return "tilde-descent";
        case IdentityId::PhiBijection: return "phi-bijection";
        case IdentityId::ShuffleWeight: return "shuffle-weight";
        case IdentityId::DerangementClosed: return "derangement-closed";
        case IdentityId::DerangementSigned: return "derangement-signed";
        case IdentityId::DerangementEvenPart: return "derangement-even-part";
        case IdentityId::DerangementCount: return "derangement-count";
        case IdentityId::DerangementCountSplit: return "derangement-count-split";
    }
    return "unknown";
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::FmajProduct,
        IdentityId::SignedUnderlying,
        IdentityId::SignedEven,
        IdentityId::InvTildeEven,
        IdentityId::InvTildeOdd,
        IdentityId::Conjecture,
        IdentityId::FactorialForm,
        IdentityId::FiberPlain,
        IdentityId::FiberSigned,
        IdentityId::DpParity,
        IdentityId::TildeDescent,
        IdentityId::PhiBijection,
        IdentityId::ShuffleWeight,
        IdentityId::DerangementClosed,
        IdentityId::DerangementSigned,
        IdentityId::DerangementEvenPart,
        IdentityId::DerangementCount,
        IdentityId::DerangementCountSplit,
    };
    return ids;
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (IdentityId id : all_identities())
        if (to_string(id) == name) return id;
    return std::nullopt;
}

bool identity_applicable(IdentityId id, int c) {
    switch (id) {
        case IdentityId::SignedEven:
        case IdentityId::InvTildeEven:
        case IdentityId::FiberSigned:
        case IdentityId::DpParity:
        case IdentityId::DerangementSigned:
        case IdentityId::DerangementEvenPart:
        case IdentityId::DerangementCountSplit:
            return c % 2 == 0;
        case IdentityId::InvTildeOdd:
        case IdentityId::FactorialForm:
            return c % 2 == 1;
        default:
            return true;
    }
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GCN_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return 10'000'000;
}

bool conjecture_paper_confirmed(int c, int n) {
    if (c == 1) return true;  // classical inv/maj joint symmetry
    if (n <= 1) return true;  // single letter: the two statistics coincide
    if (n == 2 && c <= 7) return true;
    return n == 3 && (c == 3 || c == 4);
}

IdentityReport verify_fmaj_product(int c, int n, std::uint64_t budget, int jobs) {
    Stopwatch timer;
    auto report = make_report(IdentityId::FmajProduct, c, n);
    const IntPolynomial lhs = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            ++counts[static_cast<size_t>(fmaj(w))];
        });
    const IntPolynomial rhs = q_product(c, n, SignPattern::all_plus(n));
    report.pass = (lhs == rhs);
    report.lhs = lhs;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport verify_biagioli_caselli(int c, int n, std::uint64_t budget, int jobs) {
    Stopwatch timer;
    auto report = make_report(IdentityId::SignedUnderlying, c, n);
    const IntPolynomial lhs = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(fmaj(w))] += (inv_underlying(w) % 2 == 0) ? 1 : -1;
        });
    const IntPolynomial rhs = q_product(c, n, SignPattern::alternating_plus_first(n));
    report.pass = (lhs == rhs);
    report.lhs = lhs;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport verify_signed_mahonian_even(int c, int n, std::uint64_t budget, int jobs) {
    require_even(c, "verify_signed_mahonian_even");
    Stopwatch timer;
    auto report = make_report(IdentityId::SignedEven, c, n);
    const IntPolynomial lhs = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(fmaj(w))] += (length(w) % 2 == 0) ? 1 : -1;
        });
    const IntPolynomial rhs = q_product(c, n, SignPattern::alternating_minus_first(n));
    const bool product_ok = (lhs == rhs);

    // rational form: lhs = ((1-q)/(1+q))^{floor((n+1)/2)} prod [ic]_q
    const int E = (n + 1) / 2;
    const std::vector<RationalTerm> terms{{1, q_product(c, n, SignPattern::all_plus(n)), E}};
    const bool rational_ok = rational_check(lhs, terms, E);

    report.pass = product_ok && rational_ok;
    report.extra = std::string("product form ") + (product_ok ? "ok" : "FAILED") +
                   ", rational form " + (rational_ok ? "ok" : "FAILED");
    report.lhs = lhs;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport verify_invtilde_even(int c, int n, std::uint64_t budget, int jobs) {
    require_even(c, "verify_invtilde_even");
    Stopwatch timer;
    auto report = make_report(IdentityId::InvTildeEven, c, n);
    const IntPolynomial lhs_fmaj = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(fmaj(w))] += (inv_tilde(w) % 2 == 0) ? 1 : -1;
        });
    const IntPolynomial lhs_invt = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(inv_tilde(w))] += (fmaj(w) % 2 == 0) ? 1 : -1;
        });
    const IntPolynomial rhs = q_product(c, n, SignPattern::all_minus(n));
    report.pass = (lhs_fmaj == rhs) && (lhs_invt == rhs);
    report.extra = "both orientations checked";
    report.lhs = lhs_fmaj;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport verify_invtilde_odd(int c, int n, std::uint64_t budget, int jobs) {
    require_odd(c, "verify_invtilde_odd");
    Stopwatch timer;
    auto report = make_report(IdentityId::InvTildeOdd, c, n);
    const IntPolynomial lhs = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(fmaj(w))] += (inv_tilde(w) % 2 == 0) ? 1 : -1;
        });
    IntPolynomial rhs;
    if (n % 2 == 0) {
        rhs = q_product(c, n, SignPattern::alternating_plus_first(n));
        report.extra = "n even branch";
    } else {
        rhs = q_integer(c).substitute_neg() *
              q_product(c, n - 1, SignPattern::alternating_plus_first(n - 1)) *
              q_integer_power(n, c);
        report.extra = "n odd branch";
    }
    report.pass = (lhs == rhs);
    report.lhs = lhs;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_conjecture(int c, int n, std::uint64_t budget, int jobs) {
    Stopwatch timer;
    auto report = make_report(IdentityId::Conjecture, c, n);
    const BivariateDistribution dist = joint_distribution(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w) { return inv_tilde(w); },
        [](const ColoredPermutation& w) { return fmaj(w); });
    report.pass = dist.is_symmetric();
    if (const auto witness = dist.asymmetry_witness())
        report.extra = "asymmetric at t^" + std::to_string(witness->first) + " q^" +
                       std::to_string(witness->second);
    report.hard = conjecture_paper_confirmed(c, n);
    report.lhs = dist;
    report.rhs = dist.transpose();
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_factorial_form(int c, int n, std::uint64_t budget, int jobs) {
    require_odd(c, "check_factorial_form");
    Stopwatch timer;
    auto report = make_report(IdentityId::FactorialForm, c, n);
    const IntPolynomial lhs = enumerate_poly(
        {c, n}, budget, jobs,
        [](const ColoredPermutation& w, std::vector<std::int64_t>& counts) {
            counts[static_cast<size_t>(fmaj(w))] += (length(w) % 2 == 0) ? 1 : -1;
        });

    std::vector<std::string> matches;
    IntPolynomial matched_product;
    SignPattern pattern = SignPattern::all_plus(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int i = 0; i < n; ++i)
            pattern.signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        const IntPolynomial product = q_product(c, n, pattern);
        if (product == lhs) {
            std::string text;
            for (int s : pattern.signs) text += (s > 0) ? '+' : '-';
            matches.push_back(text.empty() ? "<empty>" : text);
            matched_product = product;
        }
    }

    report.degenerate = (n <= 1);
    if (matches.empty()) {
        report.pass = true;
        report.extra = "no sign pattern matches (" + std::to_string(std::uint64_t{1} << n) +
                       " tried)";
        report.rhs = IntPolynomial::zero();
    } else {
        // a match refutes the no-product-form claim unless degenerate
        report.pass = report.degenerate;
        report.extra = "matched pattern(s): ";
        for (size_t i = 0; i < matches.size(); ++i)
            report.extra += (i ? ", " : "") + matches[i];
        if (report.degenerate) report.extra += " (degenerate, excluded from the claim)";
        report.rhs = matched_product;
    }
    report.hard = (c <= 7 && (n == 2 || n == 3));
    report.lhs = lhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

/// Runs `fn(alpha)` for every derangement alpha of degree k <= n; used by the
/// fiber-family checks. Small groups only, so copies are fine.
void for_each_derangement_upto(int c, int n, std::uint64_t budget,
                               const std::function<void(const ColoredPermutation&)>& fn) {
    for (int k = 0; k <= n; ++k)
        for_each_element({c, k}, budget, [&](const ColoredPermutation& w) {
            if (w.is_derangement()) fn(w);
        });
}

}  // namespace

IdentityReport check_fiber_plain(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    Stopwatch timer;
    auto report = make_report(IdentityId::FiberPlain, c, n);
    IntPolynomial lhs_total, rhs_total;
    std::uint64_t alphas = 0;
    bool all_ok = true;
    for_each_derangement_upto(c, n, budget, [&](const ColoredPermutation& alpha) {
        ++alphas;
        std::vector<std::int64_t> counts(static_cast<size_t>(stat_bound(c, n)) + 1, 0);
        for_each_fiber_element(alpha, n, [&](const ColoredPermutation& w) {
            ++counts[static_cast<size_t>(fmaj(w))];
        });
        const IntPolynomial fiber_sum = IntPolynomial::from_counts(counts);
        const IntPolynomial expected =
            IntPolynomial::monomial(1, fmaj(alpha)) * q_binomial(n, alpha.n(), c);
        if (fiber_sum != expected) {
            if (all_ok) report.extra = "failed at alpha = " + format_word(alpha);
            all_ok = false;
        }
        lhs_total += fiber_sum;
        rhs_total += expected;
    });
    report.pass = all_ok;
    if (all_ok) report.extra = "derangements checked: " + std::to_string(alphas);
    report.lhs = lhs_total;
    report.rhs = rhs_total;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_fiber_signed(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    require_even(c, "check_fiber_signed");
    Stopwatch timer;
    auto report = make_report(IdentityId::FiberSigned, c, n);
    IntPolynomial lhs_total, rhs_total;
    std::uint64_t alphas = 0;
    bool all_ok = true;
    for_each_derangement_upto(c, n, budget, [&](const ColoredPermutation& alpha) {
        ++alphas;
        std::vector<std::int64_t> counts(static_cast<size_t>(stat_bound(c, n)) + 1, 0);
        for_each_fiber_element(alpha, n, [&](const ColoredPermutation& w) {
            counts[static_cast<size_t>(fmaj(w))] += (length(w) % 2 == 0) ? 1 : -1;
        });
        const IntPolynomial fiber_sum = IntPolynomial::from_counts(counts);
        const IntPolynomial expected =
            IntPolynomial::monomial((length(alpha) % 2 == 0) ? 1 : -1, fmaj(alpha)) *
            q_binomial(n, alpha.n(), c);
        if (fiber_sum != expected) {
            if (all_ok) report.extra = "failed at alpha = " + format_word(alpha);
            all_ok = false;
        }
        lhs_total += fiber_sum;
        rhs_total += expected;
    });
    report.pass = all_ok;
    if (all_ok) report.extra = "derangements checked: " + std::to_string(alphas);
    report.lhs = lhs_total;
    report.rhs = rhs_total;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_dp_parity(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    require_even(c, "check_dp_parity");
    Stopwatch timer;
    auto report = make_report(IdentityId::DpParity, c, n);
    std::vector<std::int64_t> lhs_counts(static_cast<size_t>(stat_bound(c, n)) + 1, 0);
    std::vector<std::int64_t> rhs_counts(lhs_counts.size(), 0);
    bool all_ok = true;
    for_each_element({c, n}, budget, [&](const ColoredPermutation& w) {
        const int lw = length(w);
        const int ld = length(derangement_part(w));
        if ((lw - ld) % 2 != 0) {
            if (all_ok) report.extra = "parity broken at " + format_word(w);
            all_ok = false;
        }
        lhs_counts[static_cast<size_t>(fmaj(w))] += (lw % 2 == 0) ? 1 : -1;
        rhs_counts[static_cast<size_t>(fmaj(w))] += (ld % 2 == 0) ? 1 : -1;
    });
    report.pass = all_ok;
    report.lhs = IntPolynomial::from_counts(lhs_counts);
    report.rhs = IntPolynomial::from_counts(rhs_counts);
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_tilde_descent(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    Stopwatch timer;
    auto report = make_report(IdentityId::TildeDescent, c, n);
    std::vector<std::int64_t> lhs_counts(static_cast<size_t>(stat_bound(c, n)) + 1, 0);
    std::vector<std::int64_t> rhs_counts(lhs_counts.size(), 0);
    std::uint64_t words = 0;
    bool all_ok = true;
    for (int k = 0; k <= n; ++k) {
        for_each_element({c, k}, budget, [&](const ColoredPermutation& w) {
            ++words;
            const ColoredWord relabeled = tilde(w, n);
            if (des_set(w) != des_set(relabeled) || col(w) != col(relabeled)) {
                if (all_ok) report.extra = "broken at " + format_word(w) + " (k=" +
                                           std::to_string(k) + ")";
                all_ok = false;
            }
            lhs_counts[static_cast<size_t>(fmaj(w))] += 1;
            rhs_counts[static_cast<size_t>(fmaj(relabeled, c))] += 1;
        });
    }
    report.pass = all_ok;
    if (all_ok) report.extra = "words checked (all degrees k <= n): " + std::to_string(words);
    report.lhs = IntPolynomial::from_counts(lhs_counts);
    report.rhs = IntPolynomial::from_counts(rhs_counts);
    report.group_size = words;
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_phi_bijection(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    Stopwatch timer;
    auto report = make_report(IdentityId::PhiBijection, c, n);
    IntPolynomial lhs_total, rhs_total;
    std::uint64_t alphas = 0;
    bool all_ok = true;
    for_each_derangement_upto(c, n, budget, [&](const ColoredPermutation& alpha) {
        ++alphas;
        const ColoredWord alpha_tilde = tilde(alpha, n);
        const ColoredWord gamma = gamma_word(alpha, n);

        std::vector<std::string> image;
        std::vector<std::int64_t> lhs_counts(static_cast<size_t>(stat_bound(c, n)) + 1, 0);
        bool fmaj_ok = true;
        for_each_fiber_element(alpha, n, [&](const ColoredPermutation& w) {
            const ColoredWord mapped = phi(w);
            image.push_back(format_word(mapped));
            if (fmaj(mapped, c) != fmaj(w)) fmaj_ok = false;
            lhs_counts[static_cast<size_t>(fmaj(w))] += 1;
        });

        std::vector<std::string> target;
        std::vector<std::int64_t> rhs_counts(lhs_counts.size(), 0);
        for_each_shuffle(alpha_tilde, gamma, [&](const ColoredWord& w) {
            target.push_back(format_word(w));
            rhs_counts[static_cast<size_t>(fmaj(w, c))] += 1;
        });

        std::sort(image.begin(), image.end());
        std::sort(target.begin(), target.end());
        const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
        if (!injective || !fmaj_ok || image != target) {
            if (all_ok) report.extra = "failed at alpha = " + format_word(alpha);
            all_ok = false;
        }
        lhs_total += IntPolynomial::from_counts(lhs_counts);
        rhs_total += IntPolynomial::from_counts(rhs_counts);
    });
    report.pass = all_ok;
    if (all_ok) report.extra = "derangements checked: " + std::to_string(alphas);
    report.lhs = lhs_total;
    report.rhs = rhs_total;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_shuffle_weight(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    Stopwatch timer;
    auto report = make_report(IdentityId::ShuffleWeight, c, n);
    const int m = n;
    const int color_cap = std::min(c - 1, 2);
    const int colors = color_cap + 1;

    // ordered pairs per split size: m! orders times colors^m colorings
    std::uint64_t colorings = 1;
    for (int i = 0; i < m; ++i) colorings *= static_cast<std::uint64_t>(colors);
    {
        std::uint64_t orders = 1;
        for (int i = 2; i <= m; ++i) orders *= static_cast<std::uint64_t>(i);
        if (orders > budget / (colorings ? colorings : 1))
            throw BudgetExceeded("shuffle-weight: " + std::to_string(m) +
                                 " letters exceed the element budget");
    }

    IntPolynomial lhs_total, rhs_total;
    bool all_ok = true;
    std::uint64_t pairs = 0;
    const size_t width = static_cast<size_t>(stat_bound(c, m)) + 1;
    std::vector<std::int64_t> counts(width, 0);
    std::vector<ColoredLetter> letters(static_cast<size_t>(m));
    std::vector<int> values(static_cast<size_t>(m));
    for (size_t i = 0; i < values.size(); ++i) values[i] = static_cast<int>(i) + 1;

    for (int j = 0; j <= m; ++j) {
        const IntPolynomial binom = q_binomial(m, m - j, c);
        std::vector<int> order(values);
        do {
            for (std::uint64_t coloring = 0; coloring < colorings; ++coloring) {
                std::uint64_t digits = coloring;
                for (int i = 0; i < m; ++i) {
                    letters[static_cast<size_t>(i)] = {order[static_cast<size_t>(i)],
                                                       static_cast<int>(digits %
                                                                        static_cast<std::uint64_t>(colors))};
                    digits /= static_cast<std::uint64_t>(colors);
                }
                const std::span<const ColoredLetter> tau(letters.data(), static_cast<size_t>(j));
                const std::span<const ColoredLetter> sigma(letters.data() + j,
                                                           static_cast<size_t>(m - j));
                ++pairs;
                std::fill(counts.begin(), counts.end(), 0);
                for_each_shuffle(tau, sigma, [&](const ColoredWord& w) {
                    ++counts[static_cast<size_t>(fmaj(w, c))];
                });
                const IntPolynomial lhs = IntPolynomial::from_counts(counts);
                const IntPolynomial rhs =
                    IntPolynomial::monomial(1, fmaj(tau, c) + fmaj(sigma, c)) * binom;
                if (lhs != rhs) {
                    if (all_ok)
                        report.extra = "failed at tau = " + format_word(tau) +
                                       " | sigma = " + format_word(sigma);
                    all_ok = false;
                }
                lhs_total += lhs;
                rhs_total += rhs;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    report.pass = all_ok;
    if (all_ok)
        report.extra = "word pairs checked: " + std::to_string(pairs) +
                       " (color cap " + std::to_string(color_cap) + ")";
    report.lhs = lhs_total;
    report.rhs = rhs_total;
    report.group_size = pairs;
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_derangement_count(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    Stopwatch timer;
    auto report = make_report(IdentityId::DerangementCount, c, n);
    std::int64_t enumerated = 0;
    for_each_element({c, n}, budget, [&](const ColoredPermutation& w) {
        if (w.is_derangement()) ++enumerated;
    });
    const mpz_class formula = d_count(c, n);
    report.pass = (formula == enumerated);
    report.lhs = IntPolynomial::constant(enumerated);
    report.rhs = IntPolynomial::constant(formula);
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_derangement_count_split(int c, int n, std::uint64_t budget, int jobs) {
    (void)jobs;
    require_even(c, "check_derangement_count_split");
    Stopwatch timer;
    auto report = make_report(IdentityId::DerangementCountSplit, c, n);
    std::int64_t even = 0, odd = 0;
    for_each_element({c, n}, budget, [&](const ColoredPermutation& w) {
        if (!w.is_derangement()) return;
        (length(w) % 2 == 0 ? even : odd) += 1;
    });
    const DerangementCountSplit split = d_counts_split(c, n);
    const int sign = (n % 2 == 0) ? 1 : -1;
    report.pass = (split.even == even) && (split.odd == odd) &&
                  (split.difference == sign) && (even - odd == sign);
    report.extra = "even=" + std::to_string(even) + " odd=" + std::to_string(odd);
    report.lhs = IntPolynomial::constant(even - odd);
    report.rhs = IntPolynomial::constant(split.difference);
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport check_derangement_closed(int c, int n, std::uint64_t budget, int jobs) {
    Stopwatch timer;
    auto report = make_report(IdentityId::DerangementClosed, c, n);
    const IntPolynomial lhs = d_poly_enumerated(c, n, budget, jobs);
    const IntPolynomial rhs = d_poly_closed(c, n);
    report.pass = (lhs == rhs);
    report.lhs = lhs;
    report.rhs = rhs;
    report.group_size = group_order_checked({c, n}, budget);
    report.elapsed_seconds = timer.seconds();
    return report;
}

IdentityReport run_identity(IdentityId id, int c, int n, std::uint64_t budget, int jobs) {
    switch (id) {
        case IdentityId::FmajProduct: return verify_fmaj_product(c, n, budget, jobs);
        case IdentityId::SignedUnderlying: return verify_biagioli_caselli(c, n, budget, jobs);
        case IdentityId::SignedEven: return verify_signed_mahonian_even(c, n, budget, jobs);
        case IdentityId::InvTildeEven: return verify_invtilde_even(c, n, budget, jobs);
        case IdentityId::InvTildeOdd: return verify_invtilde_odd(c, n, budget, jobs);
        case IdentityId::Conjecture: return check_conjecture(c, n, budget, jobs);
        case IdentityId::FactorialForm: return check_factorial_form(c, n, budget, jobs);
        case IdentityId::FiberPlain: return check_fiber_plain(c, n, budget, jobs);
        case IdentityId::FiberSigned: return check_fiber_signed(c, n, budget, jobs);
        case IdentityId::DpParity: return check_dp_parity(c, n, budget, jobs);
        case IdentityId::TildeDescent: return check_tilde_descent(c, n, budget, jobs);
        case IdentityId::PhiBijection: return check_phi_bijection(c, n, budget, jobs);
        case IdentityId::ShuffleWeight: return check_shuffle_weight(c, n, budget, jobs);
        case IdentityId::DerangementClosed: return check_derangement_closed(c, n, budget, jobs);
        case IdentityId::DerangementSigned: return d_signed_closed_check(c, n, budget, jobs);
        case IdentityId::DerangementEvenPart: return even_part_check(c, n, budget, jobs);
        case IdentityId::DerangementCount: return check_derangement_count(c, n, budget, jobs);
        case IdentityId::DerangementCountSplit:
            return check_derangement_count_split(c, n, budget, jobs);
    }
    throw std::logic_error("run_identity: unhandled identity");
}

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
    struct Cell {
        IdentityId id;
        int c;
        int n;
    };
    const std::vector<IdentityId>& selected =
        config.selection.empty() ? all_identities() : config.selection;

    std::vector<Cell> cells;
    for (IdentityId id : selected)
        for (int c = config.c_min; c <= config.c_max; ++c) {
            if (!identity_applicable(id, c)) continue;
            for (int n = config.n_min; n <= config.n_max; ++n) cells.push_back({id, c, n});
        }

    std::vector<IdentityReport> reports(cells.size());
    std::atomic<size_t> next{0};
    const int workers =
        std::max(1, std::min<int>(resolve_jobs(config.jobs), static_cast<int>(cells.size())));
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            const Cell& cell = cells[i];
            try {
                reports[i] = run_identity(cell.id, cell.c, cell.n, config.budget, 1);
            } catch (const BudgetExceeded& err) {
                auto report = make_report(cell.id, cell.c, cell.n);
                report.pass = false;
                report.hard = false;
                report.extra = std::string("skipped: ") + err.what();
                reports[i] = std::move(report);
            } catch (const std::exception& err) {
                auto report = make_report(cell.id, cell.c, cell.n);
                report.pass = false;
                report.extra = std::string("error: ") + err.what();
                reports[i] = std::move(report);
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return reports;
}

}  // namespace colperm
