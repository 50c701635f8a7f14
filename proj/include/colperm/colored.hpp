#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace colperm {

/// Thrown when an enumeration would exceed the configured element budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One letter of a colored word: a value in [1..n] carrying a color in [0..c-1].
struct ColoredLetter {
    int value = 0;
    int color = 0;

    friend bool operator==(ColoredLetter, ColoredLetter) = default;
};

/// Group parameters: c colors, degree n. |G_{c,n}| = c^n * n!.
struct GroupParams {
    int c = 1;
    int n = 0;

    void validate() const {
        if (c < 1) throw std::invalid_argument("GroupParams: c must be >= 1");
        if (n < 0) throw std::invalid_argument("GroupParams: n must be >= 0");
    }

    friend bool operator==(GroupParams, GroupParams) = default;
};

/// Strict total order on colored letters: higher color compares smaller;
/// within a color class, values compare in natural order. This is the chain
///   1^[c-1] < ... < n^[c-1] < ... < 1^[1] < ... < n^[1] < 1 < ... < n.
inline bool letter_less(ColoredLetter a, ColoredLetter b) {
    if (a.color != b.color) return a.color > b.color;
    return a.value < b.value;
}

/// Rank of a letter in the total order above: (c-1-color)*n + (value-1).
/// Ranges over [0, c*n) and is strictly monotone with letter_less.
int letter_rank(ColoredLetter l, const GroupParams& params);

/// An element of G_{c,n}: a word of n colored letters whose values form a
/// permutation of [1..n]. Immutable after construction.
class ColoredPermutation {
public:
    /// Validates the permutation invariants (values a permutation of [1..n],
    /// colors in [0..c-1]); throws std::invalid_argument on violation.
    ColoredPermutation(std::vector<ColoredLetter> letters, int c);

    static ColoredPermutation identity(GroupParams params);

    int c() const { return c_; }
    int n() const { return static_cast<int>(letters_.size()); }
    std::span<const ColoredLetter> letters() const { return letters_; }
    ColoredLetter letter(int pos) const { return letters_[static_cast<size_t>(pos - 1)]; }

    /// Group inverse under wreath composition: if position i holds v^[t],
    /// the inverse's position v holds i^[(c-t) mod c].
    ColoredPermutation inverse() const;

    /// 1-based positions i with value i and color 0. A letter at its own
    /// position with nonzero color is not fixed.
    std::vector<int> fixed_points() const;

    bool is_derangement() const;

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    friend class GroupEnumerator;
    ColoredPermutation() = default;  // enumerator builds in place

    std::vector<ColoredLetter> letters_;
    int c_ = 1;
};

/// Parses the word grammar: whitespace-separated tokens, each `v` (color 0)
/// or `v[t]`. Throws std::invalid_argument with a message naming the first
/// offending token.
ColoredPermutation parse_word(std::string_view text, GroupParams params);

/// Canonical text form; parse_word(format_word(w), params) == w.
std::string format_word(const ColoredPermutation& w);
std::string format_word(std::span<const ColoredLetter> letters);

/// Exact group order c^n * n!.
mpz_class group_order(GroupParams params);

/// Group order as uint64, or throws BudgetExceeded when it exceeds `budget`.
std::uint64_t group_order_checked(GroupParams params, std::uint64_t budget);

/// Deterministic enumeration of G_{c,n}: underlying permutations in
/// lexicographic order; within each, color vectors run as base-c counters
/// with t_1 incrementing fastest (t_n most significant). Restartable from
/// any index, so disjoint index ranges can be enumerated concurrently.
class GroupEnumerator {
public:
    /// Cursor over [begin, end) in enumeration order. `end` defaults to the
    /// group order. Throws BudgetExceeded if the group exceeds `budget`.
    GroupEnumerator(GroupParams params, std::uint64_t budget,
                    std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX);

    /// Current element; valid only while !done().
    const ColoredPermutation& current() const { return word_; }
    bool done() const { return index_ >= end_; }
    std::uint64_t index() const { return index_; }
    void advance();

private:
    void unrank(std::uint64_t index);

    ColoredPermutation word_;
    GroupParams params_;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
    std::uint64_t colors_left_ = 0;  // remaining color vectors for current permutation
};

/// Element at a given enumeration index (0-based).
ColoredPermutation element_at(GroupParams params, std::uint64_t index);

/// Applies fn to every element of G_{c,n} in enumeration order. The reference
/// passed to fn is a reusable buffer; copy it if it must outlive the call.
void for_each_element(GroupParams params, std::uint64_t budget,
                      const std::function<void(const ColoredPermutation&)>& fn);

}  // namespace colperm
