#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colperm/report.hpp"

namespace colperm {

/// Every identity the suite can verify. Each enumerates its left side from
/// the group and pits it against the published closed form; none is checked
/// symbolically against itself.
enum class IdentityId {
    FmajProduct,           // sum q^fmaj = prod [ic]_q
    SignedUnderlying,      // sum (-1)^{inv|w|} q^fmaj = [c]_q [2c]_{-q} ...
    SignedEven,            // even c: sum (-1)^L q^fmaj, product + rational forms
    InvTildeEven,          // even c: both orientations = prod [ic]_{-q}
    InvTildeOdd,           // odd c: n-parity branches
    Conjecture,            // (inv~, fmaj) joint distribution symmetry
    FactorialForm,         // odd c: no sign-pattern product matches
    FiberPlain,            // fiber sums = q^{fmaj(alpha)} binom(n,k;q^c)
    FiberSigned,           // even c: signed fiber sums
    DpParity,              // even c: L(w) == L(dp(w)) mod 2
    TildeDescent,          // tilde preserves Des and col
    PhiBijection,          // phi: fiber -> shuffles bijection, fmaj-preserving
    ShuffleWeight,         // shuffle fmaj weight = q^{fmaj+fmaj} binom(j+k,k;q^c)
    DerangementClosed,     // derangement polynomial closed form
    DerangementSigned,     // signed derangement polynomial (even c)
    DerangementEvenPart,   // even-length part identity (even c)
    DerangementCount,      // inclusion-exclusion count
    DerangementCountSplit, // even/odd split and the (-1)^n difference
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// Parity gating: identities restricted to even (or odd) c are skipped on a
/// grid and rejected when requested explicitly.
bool identity_applicable(IdentityId id, int c);

std::uint64_t default_budget();  // 10^7 unless GCN_BUDGET overrides

struct SuiteConfig {
    int c_min = 1;
    int c_max = 4;
    int n_min = 0;
    int n_max = 4;
    std::uint64_t budget = 10'000'000;
    int jobs = 0;  // 0 = hardware concurrency
    std::vector<IdentityId> selection;  // empty = all identities
};

IdentityReport verify_fmaj_product(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport verify_biagioli_caselli(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport verify_signed_mahonian_even(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport verify_invtilde_even(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport verify_invtilde_odd(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_conjecture(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_factorial_form(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_fiber_plain(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_fiber_signed(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_dp_parity(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_tilde_descent(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_phi_bijection(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_shuffle_weight(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_derangement_count(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_derangement_count_split(int c, int n, std::uint64_t budget, int jobs = 1);
IdentityReport check_derangement_closed(int c, int n, std::uint64_t budget, int jobs = 1);

/// Dispatches one cell of the grid.
IdentityReport run_identity(IdentityId id, int c, int n, std::uint64_t budget, int jobs = 1);

/// Runs every selected identity over the (c, n) grid, skipping
/// parity-inapplicable cells. Reports come back in deterministic order
/// (identity, then c, then n) regardless of the parallelism degree.
std::vector<IdentityReport> run_suite(const SuiteConfig& config);

/// True when the cell's claim is made by the published results (hard): a
/// failure there is a suite failure rather than a finding.
bool conjecture_paper_confirmed(int c, int n);

}  // namespace colperm
