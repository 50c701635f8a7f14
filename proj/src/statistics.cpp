#include "colperm/statistics.hpp"

#include <stdexcept>

namespace colperm {

int inv(std::span<const int> word) {
    int count = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++count;
    return count;
}

int inv_underlying(std::span<const ColoredLetter> word) {
    int count = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i].value > word[j].value) ++count;
    return count;
}

std::vector<int> des_set(std::span<const ColoredLetter> word) {
    std::vector<int> des;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (letter_less(word[i + 1], word[i])) des.push_back(static_cast<int>(i) + 1);
    return des;
}

int maj(std::span<const ColoredLetter> word) {
    int sum = 0;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (letter_less(word[i + 1], word[i])) sum += static_cast<int>(i) + 1;
    return sum;
}

int col(std::span<const ColoredLetter> word) {
    int sum = 0;
    for (const auto& l : word) sum += l.color;
    return sum;
}

int fmaj(std::span<const ColoredLetter> word, int c) { return c * maj(word) + col(word); }

int length(std::span<const ColoredLetter> word, int c) {
    int colored_rises = 0;
    for (size_t j = 0; j < word.size(); ++j) {
        if (word[j].color == 0) continue;
        for (size_t i = 0; i < j; ++i)
            if (word[i].value < word[j].value) ++colored_rises;
    }
    return col(word) + c * colored_rises + inv_underlying(word);
}

int inv_tilde(std::span<const ColoredLetter> word, int c) {
    return c * inv_underlying(word) + col(word);
}

PositionClasses subcedants_excedants(std::span<const ColoredLetter> word, int ambient_n) {
    if (static_cast<int>(word.size()) > ambient_n)
        throw std::invalid_argument("subcedants_excedants: word longer than ambient degree");
    PositionClasses out;
    for (size_t i = 0; i < word.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        const ColoredLetter at_own = {pos, 0};
        if (letter_less(word[i], at_own))
            out.subcedants.push_back(pos);
        else if (word[i] == at_own)
            out.fixed.push_back(pos);
        else
            out.excedants.push_back(pos);
    }
    return out;
}

StatRow StatRow::compute(const ColoredPermutation& w) {
    StatRow row;
    row.word = format_word(w);
    row.L = length(w);
    row.fmaj = colperm::fmaj(w);
    row.inv_tilde = colperm::inv_tilde(w);
    row.maj = colperm::maj(w);
    row.col = colperm::col(w);
    row.des = des_set(w);
    return row;
}

std::string StatRow::csv_header() { return "word,L,fmaj,inv_tilde,maj,col,des"; }

std::string StatRow::csv_row() const {
    std::string out = word;
    out += ',' + std::to_string(L);
    out += ',' + std::to_string(fmaj);
    out += ',' + std::to_string(inv_tilde);
    out += ',' + std::to_string(maj);
    out += ',' + std::to_string(col);
    out += ',';
    for (size_t i = 0; i < des.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(des[i]);
    }
    return out;
}

}  // namespace colperm
