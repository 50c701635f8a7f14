#pragma once

#include <span>
#include <string>
#include <vector>

#include "colperm/colored.hpp"

namespace colperm {

/// Inversions of a plain integer word: pairs i<j with w[i] > w[j].
int inv(std::span<const int> word);

/// Inversions of the underlying (color-stripped) word.
int inv_underlying(std::span<const ColoredLetter> word);

/// Descent set w.r.t. the colored total order: 1-based positions i with
/// letter i greater than letter i+1.
std::vector<int> des_set(std::span<const ColoredLetter> word);

int maj(std::span<const ColoredLetter> word);
int col(std::span<const ColoredLetter> word);

/// Flag major index: c*maj + col.
int fmaj(std::span<const ColoredLetter> word, int c);

/// Bremke-Malle length:
///   col + c * sum over positions j with nonzero color of
///   |{i<j : value_i < value_j}|  +  inv(underlying).
/// The middle term compares underlying values in plain integer order.
int length(std::span<const ColoredLetter> word, int c);

/// Inversion-like statistic c*inv(underlying) + col, equidistributed with fmaj.
int inv_tilde(std::span<const ColoredLetter> word, int c);

inline int maj(const ColoredPermutation& w) { return maj(w.letters()); }
inline int col(const ColoredPermutation& w) { return col(w.letters()); }
inline int fmaj(const ColoredPermutation& w) { return fmaj(w.letters(), w.c()); }
inline int length(const ColoredPermutation& w) { return length(w.letters(), w.c()); }
inline int inv_tilde(const ColoredPermutation& w) { return inv_tilde(w.letters(), w.c()); }
inline int inv_underlying(const ColoredPermutation& w) { return inv_underlying(w.letters()); }
inline std::vector<int> des_set(const ColoredPermutation& w) { return des_set(w.letters()); }

/// Position classification against the colored order. Position i is a
/// subcedant when its letter is below the uncolored letter i, fixed when it
/// equals it (value i, color 0), and an excedant otherwise. The three sets
/// partition [1..k].
struct PositionClasses {
    std::vector<int> subcedants;
    std::vector<int> excedants;
    std::vector<int> fixed;
};

/// Classifies the k positions of a word over values [1..k]; `ambient_n` only
/// bounds k (k <= ambient_n required).
PositionClasses subcedants_excedants(std::span<const ColoredLetter> word, int ambient_n);

/// One row of a statistic table: a computed snapshot, never cached.
struct StatRow {
    std::string word;
    int L = 0;
    int fmaj = 0;
    int inv_tilde = 0;
    int maj = 0;
    int col = 0;
    std::vector<int> des;

    static StatRow compute(const ColoredPermutation& w);

    /// CSV columns: word,L,fmaj,inv_tilde,maj,col,des (des semicolon-joined).
    static std::string csv_header();
    std::string csv_row() const;
};

}  // namespace colperm
