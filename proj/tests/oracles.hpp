#pragma once

// Slow, obviously-correct reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "injwords/complex.hpp"
#include "injwords/redundancy.hpp"
#include "injwords/sparse_matrix.hpp"
#include "injwords/word.hpp"

namespace oracle {

using injwords::InjWord;

/// Row-major dense copy of a sparse matrix.
inline std::vector<mpz_class> dense(const injwords::SparseMatrix& m)
{
    std::vector<mpz_class> out(m.rows() * m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) out[e.row * m.cols() + c] = static_cast<long>(e.value);
    return out;
}

/// Textbook Smith normal form: move the smallest entry to the corner, clear its
/// row and column by division with remainder, and fold in any entry it fails
/// to divide. Returns the nonzero diagonal, which then divides down the chain.
inline std::vector<mpz_class> naive_snf(std::vector<mpz_class> a, std::size_t rows, std::size_t cols)
{
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (at(r, c) != 0 && (pr == rows || abs(at(r, c)) < abs(at(pr, pc)))) pr = r, pc = c;
            if (pr == rows) return diag;
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(t, c), at(pr, c));
            for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, t), at(r, pc));
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (at(r, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), at(r, t).get_mpz_t(), at(t, t).get_mpz_t());
                for (std::size_t c = t; c < cols; ++c) at(r, c) -= q * at(t, c);
                if (at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (at(t, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), at(t, c).get_mpz_t(), at(t, t).get_mpz_t());
                for (std::size_t r = t; r < rows; ++r) at(r, c) -= q * at(r, t);
                if (at(t, c) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: pull in a row holding an entry the pivot does not divide
            bool folded = false;
            for (std::size_t r = t + 1; r < rows && !folded; ++r)
                for (std::size_t c = t + 1; c < cols && !folded; ++c)
                    if (at(r, c) % at(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) at(t, k) += at(r, k);
                        folded = true;
                    }
            if (!folded) break;
        }
        diag.push_back(abs(at(t, t)));
    }
    return diag;
}

/// Rank over Q by fraction-bearing Gaussian elimination on a dense copy.
inline std::size_t rational_rank(const injwords::SparseMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(rows * cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& e : m.column(c)) a[e.row * cols + c] = static_cast<long>(e.value);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a[rank * cols + k], a[p * cols + k]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r * cols + c] == 0) continue;
            const mpq_class f = a[r * cols + c] / a[rank * cols + c];
            for (std::size_t k = c; k < cols; ++k) a[r * cols + k] -= f * a[rank * cols + k];
        }
        ++rank;
    }
    return rank;
}

/// Rational Betti numbers of X(S), degree d on words of length d + 1.
inline std::vector<std::int64_t> rational_betti(const injwords::GeneratedComplex& c)
{
    const int n = c.alphabet();
    std::vector<std::size_t> rank(static_cast<std::size_t>(n + 2), 0);
    for (int l = 2; l <= n; ++l)
        if (c.level_size(l) > 0)
            rank[static_cast<std::size_t>(l)] =
                rational_rank(injwords::boundary_matrix(c, l, injwords::RingSpec::rationals()));
    std::vector<std::int64_t> betti;
    for (int d = 0; d < n; ++d)
        betti.push_back(static_cast<std::int64_t>(c.level_size(d + 1)) -
                        static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 1)]) -
                        static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 2)]));
    return betti;
}

/// Number of permutations of [1,n] without a fixed point, by enumeration.
inline std::int64_t count_derangements(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::int64_t count = 0;
    do {
        bool fixed = false;
        for (int j = 0; j < n; ++j) fixed |= p[static_cast<std::size_t>(j)] == j + 1;
        count += !fixed;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

/// A random nonempty generator set of injective words over [1,n].
inline std::vector<InjWord> random_generators(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count_dist(1, 2 * n);
    std::uniform_int_distribution<int> len_dist(1, n);
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::iota(letters.begin(), letters.end(), 1);
    std::vector<InjWord> gens;
    const int count = count_dist(rng);
    for (int g = 0; g < count; ++g) {
        std::shuffle(letters.begin(), letters.end(), rng);
        const auto len = static_cast<std::size_t>(len_dist(rng));
        gens.emplace_back(n, std::span<const int>(letters.data(), len));
    }
    return gens;
}

/// One randomized J-intersect-K trial for both two-interval shapes over [1, n-1].
/// Returns false if either gap-word inequality fails.
inline bool jk_trial(int n, std::mt19937_64& rng)
{
    std::vector<int> j;
    std::bernoulli_distribution coin(0.5);
    while (j.empty())
        for (int x = 1; x <= n - 1; ++x)
            if (coin(rng)) j.push_back(x);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto meet = [&](int a1, int a2, int b1, int b2) {
        std::vector<int> out;
        for (int x : j)
            if ((a1 <= x && x <= a2) || (b1 <= x && x <= b2)) out.push_back(x);
        return out;
    };
    bool ok = true;
    const int hi = j.back(), lo = j.front();
    if (hi >= 2) { // K = [1,a] u [b, max J], 1 <= a < b <= max J
        const int a = pick(1, hi - 1), b = pick(a + 1, hi);
        ok &= injwords::delta_left(j) <= injwords::delta_left(meet(1, a, b, hi));
    }
    if (lo <= n - 2) { // K = [min J, a] u [b, n-1], min J <= a < b <= n-1
        const int a = pick(lo, n - 2), b = pick(a + 1, n - 1);
        ok &= injwords::delta_right(j, n) <= injwords::delta_right(meet(lo, a, b, n - 1), n);
    }
    return ok;
}

} // namespace oracle
