#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "injwords/ring.hpp"
#include "injwords/sparse_matrix.hpp"

namespace injwords {

/// Thrown by checked machine-integer arithmetic; callers retry with mpz_class.
struct ArithmeticOverflow : std::overflow_error {
    ArithmeticOverflow() : std::overflow_error("int64 coefficient overflow") {}
};

/// F_p arithmetic on canonical residues, p < 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {}

    std::uint32_t modulus() const { return p_; }
    value_type from_int(std::int64_t v) const
    {
        v %= static_cast<std::int64_t>(p_);
        return static_cast<value_type>(v < 0 ? v + p_ : v);
    }
    static bool is_zero(value_type a) { return a == 0; }
    value_type add(value_type a, value_type b) const
    {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type inv(value_type a) const;

private:
    std::uint32_t p_;
};

struct RankNullity {
    std::size_t rank;
    std::size_t nullity;

    friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

/// Rank and nullity (column count minus rank) over a field ring. Stored
/// coefficients are read as integers and mapped into `ring`. Throws
/// std::invalid_argument for the integer ring.
RankNullity rank_nullity(const SparseMatrix& m, RingSpec ring);

/// Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
/// Throws std::invalid_argument unless m is over the integers.
std::vector<mpz_class> smith_normal_form(const SparseMatrix& m);

/// Invariant factors of a dense row-major integer matrix (no sparse phase).
std::vector<mpz_class> dense_smith_normal_form(std::vector<mpz_class> entries, std::size_t rows,
                                               std::size_t cols);

} // namespace injwords
