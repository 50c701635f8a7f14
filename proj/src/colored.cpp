#include "colperm/colored.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace colperm {

int letter_rank(ColoredLetter l, const GroupParams& params) {
    return (params.c - 1 - l.color) * params.n + (l.value - 1);
}

ColoredPermutation::ColoredPermutation(std::vector<ColoredLetter> letters, int c)
    : letters_(std::move(letters)), c_(c) {
    if (c_ < 1) throw std::invalid_argument("ColoredPermutation: c must be >= 1");
    const int n = static_cast<int>(letters_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const auto& l : letters_) {
        if (l.value < 1 || l.value > n)
            throw std::invalid_argument("ColoredPermutation: value " +
                                        std::to_string(l.value) + " out of range [1.." +
                                        std::to_string(n) + "]");
        if (seen[static_cast<size_t>(l.value)])
            throw std::invalid_argument("ColoredPermutation: repeated value " +
                                        std::to_string(l.value));
        seen[static_cast<size_t>(l.value)] = true;
        if (l.color < 0 || l.color >= c_)
            throw std::invalid_argument("ColoredPermutation: color " +
                                        std::to_string(l.color) + " out of range [0.." +
                                        std::to_string(c_ - 1) + "]");
    }
}

ColoredPermutation ColoredPermutation::identity(GroupParams params) {
    params.validate();
    std::vector<ColoredLetter> letters(static_cast<size_t>(params.n));
    for (int i = 0; i < params.n; ++i) letters[static_cast<size_t>(i)] = {i + 1, 0};
    return ColoredPermutation(std::move(letters), params.c);
}

ColoredPermutation ColoredPermutation::inverse() const {
    std::vector<ColoredLetter> out(letters_.size());
    for (int i = 1; i <= n(); ++i) {
        const ColoredLetter l = letter(i);
        out[static_cast<size_t>(l.value - 1)] = {i, (c_ - l.color) % c_};
    }
    return ColoredPermutation(std::move(out), c_);
}

std::vector<int> ColoredPermutation::fixed_points() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i) {
        const ColoredLetter l = letter(i);
        if (l.value == i && l.color == 0) out.push_back(i);
    }
    return out;
}

bool ColoredPermutation::is_derangement() const {
    for (int i = 1; i <= n(); ++i) {
        const ColoredLetter l = letter(i);
        if (l.value == i && l.color == 0) return false;
    }
    return true;
}

namespace {

int parse_uint(std::string_view s, std::string_view token, const char* what) {
    int out = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_word: malformed " + std::string(what) +
                                    " in token '" + std::string(token) + "'");
    return out;
}

ColoredLetter parse_token(std::string_view tok, GroupParams params) {
    ColoredLetter l;
    const auto bracket = tok.find('[');
    if (bracket == std::string_view::npos) {
        l.value = parse_uint(tok, tok, "value");
        l.color = 0;
    } else {
        if (tok.back() != ']' || bracket == 0 || bracket + 2 > tok.size() - 1)
            throw std::invalid_argument("parse_word: malformed token '" + std::string(tok) + "'");
        l.value = parse_uint(tok.substr(0, bracket), tok, "value");
        l.color = parse_uint(tok.substr(bracket + 1, tok.size() - bracket - 2), tok, "color");
    }
    if (l.value < 1 || l.value > params.n)
        throw std::invalid_argument("parse_word: value out of range in token '" +
                                    std::string(tok) + "'");
    if (l.color >= params.c)
        throw std::invalid_argument("parse_word: color out of range in token '" +
                                    std::string(tok) + "'");
    return l;
}

}  // namespace

ColoredPermutation parse_word(std::string_view text, GroupParams params) {
    params.validate();
    std::vector<ColoredLetter> letters;
    letters.reserve(static_cast<size_t>(params.n));
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        letters.push_back(parse_token(text.substr(pos, end - pos), params));
        pos = end;
    }
    if (static_cast<int>(letters.size()) != params.n)
        throw std::invalid_argument("parse_word: expected " + std::to_string(params.n) +
                                    " letters, got " + std::to_string(letters.size()));
    return ColoredPermutation(std::move(letters), params.c);
}

std::string format_word(std::span<const ColoredLetter> letters) {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters[i].value);
        if (letters[i].color != 0) {
            out += '[';
            out += std::to_string(letters[i].color);
            out += ']';
        }
    }
    return out;
}

std::string format_word(const ColoredPermutation& w) { return format_word(w.letters()); }

mpz_class group_order(GroupParams params) {
    params.validate();
    mpz_class order = 1;
    for (int i = 1; i <= params.n; ++i) order *= i;
    mpz_class colors;
    mpz_ui_pow_ui(colors.get_mpz_t(), static_cast<unsigned long>(params.c),
                  static_cast<unsigned long>(params.n));
    return order * colors;
}

std::uint64_t group_order_checked(GroupParams params, std::uint64_t budget) {
    const mpz_class order = group_order(params);
    if (!order.fits_ulong_p() || order.get_ui() > budget)
        throw BudgetExceeded("group G_{" + std::to_string(params.c) + "," +
                             std::to_string(params.n) + "} has " + order.get_str() +
                             " elements, exceeding the budget of " + std::to_string(budget));
    return static_cast<std::uint64_t>(order.get_ui());
}

GroupEnumerator::GroupEnumerator(GroupParams params, std::uint64_t budget,
                                 std::uint64_t begin, std::uint64_t end)
    : params_(params) {
    params_.validate();
    const std::uint64_t size = group_order_checked(params_, budget);
    end_ = std::min(end, size);
    index_ = std::min(begin, end_);
    word_.c_ = params_.c;
    word_.letters_.resize(static_cast<size_t>(params_.n));
    if (!done()) unrank(index_);
}

void GroupEnumerator::unrank(std::uint64_t index) {
    const int n = params_.n;
    const int c = params_.c;
    std::uint64_t color_block = 1;
    for (int i = 0; i < n; ++i) color_block *= static_cast<std::uint64_t>(c);

    std::uint64_t perm_rank = index / color_block;
    std::uint64_t color_rank = index % color_block;
    colors_left_ = color_block - color_rank;

    // Permutation from lexicographic rank via the factorial number system.
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t block = fact[static_cast<size_t>(n - 1 - i)];
        const auto digit = static_cast<size_t>(perm_rank / block);
        perm_rank %= block;
        word_.letters_[static_cast<size_t>(i)].value = pool[digit];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }

    // Color digits, t_1 fastest.
    for (int i = 0; i < n; ++i) {
        word_.letters_[static_cast<size_t>(i)].color =
            static_cast<int>(color_rank % static_cast<std::uint64_t>(c));
        color_rank /= static_cast<std::uint64_t>(c);
    }
}

void GroupEnumerator::advance() {
    ++index_;
    if (done()) return;
    if (--colors_left_ > 0) {
        // base-c increment of the color vector, t_1 least significant
        for (auto& l : word_.letters_) {
            if (++l.color < params_.c) break;
            l.color = 0;
        }
        return;
    }
    // next underlying permutation, colors reset to all zero
    std::next_permutation(word_.letters_.begin(), word_.letters_.end(),
                          [](ColoredLetter a, ColoredLetter b) { return a.value < b.value; });
    for (auto& l : word_.letters_) l.color = 0;
    std::uint64_t color_block = 1;
    for (int i = 0; i < params_.n; ++i) color_block *= static_cast<std::uint64_t>(params_.c);
    colors_left_ = color_block;
}

ColoredPermutation element_at(GroupParams params, std::uint64_t index) {
    GroupEnumerator cursor(params, UINT64_MAX, index, index + 1);
    if (cursor.done()) throw std::out_of_range("element_at: index beyond group order");
    return cursor.current();
}

void for_each_element(GroupParams params, std::uint64_t budget,
                      const std::function<void(const ColoredPermutation&)>& fn) {
    for (GroupEnumerator cursor(params, budget); !cursor.done(); cursor.advance())
        fn(cursor.current());
}

}  // namespace colperm
