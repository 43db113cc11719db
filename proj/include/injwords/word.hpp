#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace injwords {

/// Largest supported alphabet. A word packs into one 64-bit code: four bits
/// per letter (most significant letter first) and the length in the low nibble.
inline constexpr int kMaxAlphabet = 12;

/**
 * A non-empty injective word over the alphabet [1, n].
 *
 * Positions and letters are 1-indexed. Within a fixed alphabet the ordering
 * of the packed code is the lexicographic order of the letter sequences
 * (a proper prefix sorts first), so words can be sorted by code directly.
 */
class InjWord {
public:
    InjWord() = default;
    InjWord(int n, std::span<const int> letters);
    InjWord(int n, std::initializer_list<int> letters)
        : InjWord(n, std::span<const int>(letters.begin(), letters.size())) {}

    /// Parses the canonical form "[3,1,2]". Whitespace around tokens is ignored.
    static InjWord parse(std::string_view text, int n);

    /// Rebuilds a word from its packed code; no validation beyond the length.
    static InjWord from_code(int n, std::uint64_t code);

    int alphabet() const { return n_; }
    int size() const { return static_cast<int>(code_ & 0xF); }
    std::uint64_t code() const { return code_; }

    /// Letter at 1-indexed position `pos`. Unchecked.
    int operator[](int pos) const
    {
        return static_cast<int>((code_ >> (64 - 4 * pos)) & 0xF);
    }

    /// Letter at 1-indexed position `pos`; throws std::out_of_range.
    int at(int pos) const;

    /// Bit j set iff letter j occurs.
    std::uint32_t letter_mask() const;
    bool contains(int letter) const { return (letter_mask() >> letter) & 1u; }

    std::vector<int> letters() const;
    std::string str() const;

    friend bool operator==(const InjWord&, const InjWord&) = default;
    friend auto operator<=>(const InjWord& a, const InjWord& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.code_ <=> b.code_;
    }

private:
    std::uint64_t code_ = 0;
    std::uint8_t n_ = 0;
};

using Permutation = InjWord;

struct InjWordHash {
    std::size_t operator()(const InjWord& w) const noexcept
    {
        std::uint64_t x = w.code() ^ (static_cast<std::uint64_t>(w.alphabet()) << 4);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

/// The deletion map: drops the letter at 1-indexed position `pos`.
/// Throws std::out_of_range for a bad position or a length-1 word.
InjWord delete_at(const InjWord& w, int pos);

/// Inserts `letter` so that it lands at 1-indexed position `pos`.
InjWord insert_at(const InjWord& w, int pos, int letter);

/// All non-empty subsequences, sorted.
std::vector<InjWord> subwords(const InjWord& w);

/// True iff `v` is a subsequence of `w`.
bool is_subword(const InjWord& v, const InjWord& w);

/// The unique letter absent from a word of length n-1.
int missing_letter(const InjWord& t);

/// Inserts the missing letter of `t` (length n-1) at position `i` in [1, n].
Permutation insert_missing(const InjWord& t, int i);

bool has_fixed_point(const Permutation& s);

/// All injective words of the given length over [1, n], lexicographically.
std::vector<InjWord> injective_words(int n, int length);

/// All permutations of [1, n], lexicographically.
std::vector<Permutation> permutations(int n);

/// Fixed-point-free permutations, lexicographically. Requires 2 <= n <= 12.
std::vector<Permutation> derangements(int n);

/// Permutations with at least one fixed point.
std::vector<Permutation> non_derangements(int n);

/// Derangement count via D_n = n D_{n-1} + (-1)^n. Requires 1 <= n <= 20.
mpz_class derangement_count(int n);

/// n! / (n - k)!
mpz_class falling_factorial(int n, int k);

} // namespace injwords
