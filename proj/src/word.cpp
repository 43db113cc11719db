#include "injwords/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace injwords {

namespace {

void check_alphabet(int n)
{
    if (n < 1 || n > kMaxAlphabet)
        throw std::invalid_argument("alphabet size " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxAlphabet) + "]");
}

constexpr std::uint64_t letter_bits(int letter, int pos)
{
    return static_cast<std::uint64_t>(letter) << (64 - 4 * pos);
}

} // namespace

InjWord::InjWord(int n, std::span<const int> letters)
{
    check_alphabet(n);
    if (letters.empty()) throw std::invalid_argument("injective words are non-empty");
    if (static_cast<int>(letters.size()) > n)
        throw std::invalid_argument("word longer than the alphabet");
    std::uint32_t seen = 0;
    int pos = 0;
    for (int a : letters) {
        if (a < 1 || a > n)
            throw std::invalid_argument("letter " + std::to_string(a) + " out of range [1, " +
                                        std::to_string(n) + "]");
        if (seen & (1u << a)) throw std::invalid_argument("duplicate letter " + std::to_string(a));
        seen |= 1u << a;
        code_ |= letter_bits(a, ++pos);
    }
    code_ |= static_cast<std::uint64_t>(pos);
    n_ = static_cast<std::uint8_t>(n);
}

InjWord InjWord::from_code(int n, std::uint64_t code)
{
    InjWord w;
    w.code_ = code;
    w.n_ = static_cast<std::uint8_t>(n);
    return w;
}

InjWord InjWord::parse(std::string_view text, int n)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("expected a bracketed word like [3,1,2], got '" +
                                    std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<int> letters;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("malformed letter '" + std::string(token) + "'");
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return InjWord(n, letters);
}

int InjWord::at(int pos) const
{
    if (pos < 1 || pos > size())
        throw std::out_of_range("position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(size()) + "]");
    return (*this)[pos];
}

std::uint32_t InjWord::letter_mask() const
{
    std::uint32_t mask = 0;
    for (int p = 1, k = size(); p <= k; ++p) mask |= 1u << (*this)[p];
    return mask;
}

std::vector<int> InjWord::letters() const
{
    std::vector<int> out(static_cast<std::size_t>(size()));
    for (int p = 1; p <= size(); ++p) out[static_cast<std::size_t>(p - 1)] = (*this)[p];
    return out;
}

std::string InjWord::str() const
{
    std::string s = "[";
    for (int p = 1; p <= size(); ++p) {
        if (p > 1) s += ',';
        s += std::to_string((*this)[p]);
    }
    s += ']';
    return s;
}

InjWord delete_at(const InjWord& w, int pos)
{
    const int k = w.size();
    if (k < 2) throw std::out_of_range("deleting from a length-1 word leaves the empty word");
    if (pos < 1 || pos > k)
        throw std::out_of_range("deletion position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(k) + "]");
    const std::uint64_t body = w.code() & ~std::uint64_t{0xF};
    const int shift = 64 - 4 * (pos - 1);
    const std::uint64_t head = shift == 64 ? 0 : (body >> shift) << shift;
    const std::uint64_t tail = (body << (4 * pos)) >> (4 * (pos - 1));
    return InjWord::from_code(w.alphabet(), (head | (tail & ~std::uint64_t{0xF})) |
                                                static_cast<std::uint64_t>(k - 1));
}

InjWord insert_at(const InjWord& w, int pos, int letter)
{
    const int k = w.size();
    if (pos < 1 || pos > k + 1)
        throw std::out_of_range("insertion position " + std::to_string(pos) + " outside [1, " +
                                std::to_string(k + 1) + "]");
    if (k + 1 > w.alphabet()) throw std::invalid_argument("word already uses every letter");
    if (letter < 1 || letter > w.alphabet() || w.contains(letter))
        throw std::invalid_argument("letter " + std::to_string(letter) + " cannot be inserted");
    const std::uint64_t body = w.code() & ~std::uint64_t{0xF};
    const int shift = 64 - 4 * (pos - 1);
    const std::uint64_t head = shift == 64 ? 0 : (body >> shift) << shift;
    const std::uint64_t tail = shift == 64 ? body >> 4 : ((body << (4 * (pos - 1))) >> (4 * pos));
    return InjWord::from_code(w.alphabet(), head | letter_bits(letter, pos) |
                                                (tail & ~std::uint64_t{0xF}) |
                                                static_cast<std::uint64_t>(k + 1));
}

std::vector<InjWord> subwords(const InjWord& w)
{
    const int k = w.size();
    const auto letters = w.letters();
    std::vector<InjWord> out;
    out.reserve((std::size_t{1} << k) - 1);
    std::vector<int> buf;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        buf.clear();
        for (int p = 0; p < k; ++p)
            if (mask & (1u << p)) buf.push_back(letters[static_cast<std::size_t>(p)]);
        out.emplace_back(w.alphabet(), buf);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subword(const InjWord& v, const InjWord& w)
{
    if (v.alphabet() != w.alphabet()) throw std::invalid_argument("alphabet sizes differ");
    int p = 1;
    for (int q = 1; q <= w.size() && p <= v.size(); ++q)
        if (w[q] == v[p]) ++p;
    return p > v.size();
}

int missing_letter(const InjWord& t)
{
    const int n = t.alphabet();
    if (t.size() != n - 1)
        throw std::invalid_argument("missing_letter needs a word of length n-1, got " + t.str());
    const std::uint32_t full = ((1u << (n + 1)) - 1) & ~1u;
    return std::countr_zero(full & ~t.letter_mask());
}

Permutation insert_missing(const InjWord& t, int i)
{
    const int k = missing_letter(t);
    if (i < 1 || i > t.alphabet())
        throw std::out_of_range("insertion position " + std::to_string(i) + " outside [1, " +
                                std::to_string(t.alphabet()) + "]");
    return insert_at(t, i, k);
}

bool has_fixed_point(const Permutation& s)
{
    for (int j = 1; j <= s.size(); ++j)
        if (s[j] == j) return true;
    return false;
}

std::vector<InjWord> injective_words(int n, int length)
{
    check_alphabet(n);
    if (length < 1 || length > n) throw std::invalid_argument("word length outside [1, n]");
    std::vector<InjWord> out;
    std::vector<int> buf(static_cast<std::size_t>(length));
    // depth-first in lexicographic order
    auto rec = [&](auto&& self, int depth, std::uint32_t used) -> void {
        if (depth == length) {
            out.emplace_back(n, buf);
            return;
        }
        for (int a = 1; a <= n; ++a) {
            if (used & (1u << a)) continue;
            buf[static_cast<std::size_t>(depth)] = a;
            self(self, depth + 1, used | (1u << a));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<Permutation> permutations(int n) { return injective_words(n, n); }

std::vector<Permutation> derangements(int n)
{
    if (n < 2 || n > kMaxAlphabet) throw std::invalid_argument("derangements: n outside [2, 12]");
    std::vector<Permutation> out;
    for (const auto& s : permutations(n))
        if (!has_fixed_point(s)) out.push_back(s);
    return out;
}

std::vector<Permutation> non_derangements(int n)
{
    if (n < 1 || n > kMaxAlphabet) throw std::invalid_argument("non_derangements: n outside [1, 12]");
    std::vector<Permutation> out;
    for (const auto& s : permutations(n))
        if (has_fixed_point(s)) out.push_back(s);
    return out;
}

mpz_class derangement_count(int n)
{
    if (n < 1 || n > 20) throw std::invalid_argument("derangement_count: n outside [1, 20]");
    mpz_class d = 0; // D_1
    for (int m = 2; m <= n; ++m) d = m * d + (m % 2 == 0 ? 1 : -1);
    return d;
}

mpz_class falling_factorial(int n, int k)
{
    mpz_class r = 1;
    for (int j = 0; j < k; ++j) r *= n - j;
    return r;
}

} // namespace injwords
