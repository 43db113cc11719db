#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "injwords/ring.hpp"
#include "injwords/sparse_matrix.hpp"
#include "injwords/word.hpp"

namespace injwords {

/**
 * A subword-closed set of injective words, stored level by level.
 *
 * Level l holds the words of length l (the (l-1)-cells), sorted
 * lexicographically; a word's ordinal is its rank within its level. The
 * object is immutable once built.
 */
class GeneratedComplex {
public:
    /// Empty complex over [1, n].
    explicit GeneratedComplex(int n);

    /// Builds from an explicit cell list. Throws std::invalid_argument if the
    /// cells are not closed under deletion or use a different alphabet.
    static GeneratedComplex from_cells(int n, std::vector<InjWord> cells);

    int alphabet() const { return n_; }

    /// Longest word length present, 0 when empty.
    int top_level() const;

    /// Words of length `l`, l in [1, n].
    std::span<const InjWord> level(int l) const;
    std::size_t level_size(int l) const { return level(l).size(); }
    std::vector<std::size_t> level_sizes() const;
    std::size_t cell_count() const;
    bool empty() const { return cell_count() == 0; }

    std::optional<std::uint32_t> ordinal(const InjWord& w) const;
    bool contains(const InjWord& w) const { return ordinal(w).has_value(); }

    /// Number of stored words of length |w| + 1 containing w. Throws if w is absent.
    std::uint32_t coface_count(const InjWord& w) const;

    /// All stored words, shortest level first.
    std::vector<InjWord> cells() const;

    /// Recomputes closure, ordering, and coface counts from scratch; throws
    /// std::logic_error on the first violation.
    void check_invariants() const;

private:
    void rebuild_index();

    int n_;
    std::vector<std::vector<InjWord>> levels_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> coface_counts_;
};

/// Downward closure of `generators` under deletion.
GeneratedComplex generate_complex(std::span<const InjWord> generators, int n);

/// d_l : C[X_l] -> C[X_{l-1}], d = sum_j (-1)^(j-1) (delete at j).
/// Rows follow level l-1 ordinals, columns level l ordinals.
SparseMatrix boundary_matrix(const GeneratedComplex& c, int level, RingSpec ring);

/// Alternating count sum_l (-1)^(l-1) |X_l|.
std::int64_t euler_characteristic(const GeneratedComplex& c);

struct Coface {
    InjWord word;
    int position; ///< 1-indexed position of the inserted letter

    friend bool operator==(const Coface&, const Coface&) = default;
};

/// Stored words one letter longer than t that contain it, sorted by word.
std::vector<Coface> coface_list(const GeneratedComplex& c, const InjWord& t);

/// One word per line in canonical form, ordinal order.
void write_legend(std::ostream& out, std::span<const InjWord> words);

} // namespace injwords
