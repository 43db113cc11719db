#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "injwords/ring.hpp"

namespace injwords {

struct SparseEntry {
    std::uint32_t row;
    std::int64_t value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/**
 * Column-major sparse matrix with coefficients tagged by a RingSpec.
 *
 * Integer and rational matrices store plain integers; prime-field matrices
 * store canonical residues in [0, p). Within a column rows are strictly
 * increasing and no stored value is zero.
 */
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols, RingSpec ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const RingSpec& ring() const { return ring_; }

    std::span<const SparseEntry> column(std::size_t c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    /// Replaces column `c`. Entries are sorted, merged, reduced into the ring,
    /// and zeros dropped.
    void set_column(std::size_t c, std::vector<SparseEntry> entries);

    /// Coefficient at (r, c); zero when absent.
    std::int64_t coeff(std::size_t r, std::size_t c) const;

    /// Reduces a plain integer into this matrix's coefficient ring.
    std::int64_t reduce(std::int64_t value) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_;
    std::vector<std::vector<SparseEntry>> columns_;
    RingSpec ring_;
};

/// Product a * b over the common ring. Throws on a shape or ring mismatch,
/// and with std::overflow_error if an integer coefficient leaves int64.
SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b);

bool is_zero(const SparseMatrix& m);

/// Coordinate export: header "<level> <rows> <cols> <ring>" then one
/// "row col value" line per entry, 1-indexed, column-major.
void write_coordinates(std::ostream& out, const SparseMatrix& m, int level);

} // namespace injwords
