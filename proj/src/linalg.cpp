#include "injwords/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace injwords {

PrimeField::value_type PrimeField::inv(value_type a) const
{
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<value_type>(result);
}

namespace {

// Arithmetic policies for the sparse eliminator. `pivot_ok` restricts pivots
// (integers only accept units so every step stays unimodular).

struct FieldArith {
    using value_type = PrimeField::value_type;
    PrimeField f;

    value_type from_int(std::int64_t v) const { return f.from_int(v); }
    static bool is_zero(value_type a) { return a == 0; }
    static bool pivot_ok(value_type) { return true; }
    value_type factor(value_type a, value_type pivot) const { return f.mul(a, f.inv(pivot)); }
    value_type sub_mul(value_type x, value_type fac, value_type y) const
    {
        return f.sub(x, f.mul(fac, y));
    }
    value_type neg_mul(value_type fac, value_type y) const { return f.sub(0, f.mul(fac, y)); }
};

struct RationalArith {
    using value_type = mpq_class;

    value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool pivot_ok(const value_type&) { return true; }
    value_type factor(const value_type& a, const value_type& pivot) const { return a / pivot; }
    value_type sub_mul(const value_type& x, const value_type& fac, const value_type& y) const
    {
        return x - fac * y;
    }
    value_type neg_mul(const value_type& fac, const value_type& y) const { return -(fac * y); }
};

struct CheckedInt {
    using value_type = std::int64_t;

    static value_type from_int(std::int64_t v) { return v; }
    static bool is_zero(value_type a) { return a == 0; }
    static bool pivot_ok(value_type a) { return a == 1 || a == -1; }
    // pivot is a unit, so a / pivot == a * pivot
    static value_type factor(value_type a, value_type pivot) { return a * pivot; }
    static value_type sub_mul(value_type x, value_type fac, value_type y)
    {
        value_type t = 0, r = 0;
        if (__builtin_mul_overflow(fac, y, &t) || __builtin_sub_overflow(x, t, &r))
            throw ArithmeticOverflow();
        return r;
    }
    static value_type neg_mul(value_type fac, value_type y) { return sub_mul(0, fac, y); }
};

struct BigInt {
    using value_type = mpz_class;

    static value_type from_int(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool pivot_ok(const value_type& a) { return abs(a) == 1; }
    static value_type factor(const value_type& a, const value_type& pivot) { return a * pivot; }
    static value_type sub_mul(const value_type& x, const value_type& fac, const value_type& y)
    {
        return x - fac * y;
    }
    static value_type neg_mul(const value_type& fac, const value_type& y) { return -(fac * y); }
};

/**
 * Right-looking sparse elimination with Markowitz-style pivot choice.
 *
 * Repeatedly takes a shortest active column holding an admissible pivot,
 * chooses the admissible entry whose row is sparsest, clears that row from
 * every other column by column operations and retires the pivot row and
 * column. What remains (active rows x active columns) is the Schur
 * complement; over a field it is zero when elimination stops.
 */
template <class Arith>
class SparseEliminator {
public:
    using T = typename Arith::value_type;
    struct Entry {
        std::uint32_t row;
        T value;
    };

    SparseEliminator(const SparseMatrix& m, Arith arith)
        : arith_(std::move(arith)),
          cols_(m.cols()),
          row_cols_(m.rows()),
          row_count_(m.rows(), 0),
          row_done_(m.rows(), false),
          col_done_(m.cols(), false),
          version_(m.cols(), 0),
          stamp_(m.cols(), 0)
    {
        for (std::uint32_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) {
                T v = arith_.from_int(e.value);
                if (Arith::is_zero(v)) continue;
                cols_[c].push_back({e.row, std::move(v)});
                row_cols_[e.row].push_back(c);
                ++row_count_[e.row];
            }
            queue_.push({cols_[c].size(), c, 0});
        }
    }

    /// Runs to completion and returns the number of pivots.
    std::size_t run()
    {
        std::size_t pivots = 0;
        while (!queue_.empty()) {
            const auto [len, c, ver] = queue_.top();
            queue_.pop();
            if (col_done_[c] || ver != version_[c]) continue;
            auto& col = cols_[c];
            if (col.empty()) {
                col_done_[c] = true;
                continue;
            }
            std::size_t best = col.size();
            for (std::size_t k = 0; k < col.size(); ++k) {
                if (!Arith::pivot_ok(col[k].value)) continue;
                if (best == col.size() || row_count_[col[k].row] < row_count_[col[best].row]) best = k;
            }
            if (best == col.size()) continue; // parked until a later update touches it
            eliminate(c, best);
            ++pivots;
        }
        return pivots;
    }

    /// Active rows/columns after run(), as a dense row-major block.
    template <class Out, class Convert>
    std::vector<Out> residual(std::size_t& rows, std::size_t& cols, Convert convert) const
    {
        std::vector<std::uint32_t> row_id(row_done_.size(), UINT32_MAX);
        std::uint32_t nr = 0;
        std::vector<std::uint32_t> active_cols;
        for (std::uint32_t c = 0; c < cols_.size(); ++c) {
            if (col_done_[c] || cols_[c].empty()) continue;
            active_cols.push_back(c);
            for (const auto& e : cols_[c])
                if (row_id[e.row] == UINT32_MAX) row_id[e.row] = nr++;
        }
        rows = nr;
        cols = active_cols.size();
        std::vector<Out> dense(rows * cols, Out(0));
        for (std::size_t j = 0; j < active_cols.size(); ++j)
            for (const auto& e : cols_[active_cols[j]]) dense[row_id[e.row] * cols + j] = convert(e.value);
        return dense;
    }

private:
    struct QueueItem {
        std::size_t len;
        std::uint32_t col;
        std::uint32_t version;
        bool operator>(const QueueItem& o) const
        {
            return len != o.len ? len > o.len : col > o.col;
        }
    };

    void eliminate(std::uint32_t c, std::size_t pivot_index)
    {
        const std::uint32_t r = cols_[c][pivot_index].row;
        const T pivot = cols_[c][pivot_index].value;
        col_done_[c] = true;
        ++epoch_;
        stamp_[c] = epoch_;
        for (std::uint32_t other : row_cols_[r]) {
            if (col_done_[other] || stamp_[other] == epoch_) continue;
            stamp_[other] = epoch_;
            auto& target = cols_[other];
            auto it = std::lower_bound(target.begin(), target.end(), r,
                                       [](const Entry& e, std::uint32_t row) { return e.row < row; });
            if (it == target.end() || it->row != r) continue;
            const T fac = arith_.factor(it->value, pivot);
            axpy(other, fac, cols_[c]);
            ++version_[other];
            queue_.push({target.size(), other, version_[other]});
        }
        for (const auto& e : cols_[c]) --row_count_[e.row];
        row_done_[r] = true;
        row_cols_[r].clear();
        row_cols_[r].shrink_to_fit();
    }

    // target -= fac * source, both sorted by row
    void axpy(std::uint32_t target_col, const T& fac, const std::vector<Entry>& source)
    {
        auto& target = cols_[target_col];
        scratch_.clear();
        scratch_.reserve(target.size() + source.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < source.size()) {
            if (b == source.size() || (a < target.size() && target[a].row < source[b].row)) {
                scratch_.push_back(std::move(target[a++]));
            } else if (a == target.size() || source[b].row < target[a].row) {
                const auto row = source[b].row;
                scratch_.push_back({row, arith_.neg_mul(fac, source[b].value)});
                ++row_count_[row];
                row_cols_[row].push_back(target_col);
                ++b;
            } else {
                const auto row = target[a].row;
                T v = arith_.sub_mul(target[a].value, fac, source[b].value);
                if (Arith::is_zero(v))
                    --row_count_[row];
                else
                    scratch_.push_back({row, std::move(v)});
                ++a;
                ++b;
            }
        }
        target.swap(scratch_);
    }

    Arith arith_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<std::uint32_t> row_count_;
    std::vector<bool> row_done_;
    std::vector<bool> col_done_;
    std::vector<std::uint32_t> version_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<Entry> scratch_;
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue_;
};

// Dense SNF policies: exact int64 with overflow detection, or mpz_class.
struct DenseChecked {
    using T = std::int64_t;
    static T abs(T a)
    {
        if (a == INT64_MIN) throw ArithmeticOverflow();
        return a < 0 ? -a : a;
    }
    static T sub_mul(T x, T q, T y) { return CheckedInt::sub_mul(x, q, y); }
    static T div(T a, T b) { return a / b; }
    static mpz_class to_mpz(T a) { return mpz_class(static_cast<long>(a)); }
};

struct DenseBig {
    using T = mpz_class;
    static T abs(const T& a) { return ::abs(a); }
    static T sub_mul(const T& x, const T& q, const T& y) { return x - q * y; }
    static T div(const T& a, const T& b)
    {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static mpz_class to_mpz(const T& a) { return a; }
};

template <class D>
std::vector<mpz_class> dense_snf(std::vector<typename D::T> a, std::size_t rows, std::size_t cols)
{
    using T = typename D::T;
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    std::vector<mpz_class> diag;
    const std::size_t limit = std::min(rows, cols);
    for (std::size_t k = 0; k < limit; ++k) {
        while (true) {
            // smallest nonzero |entry| in the trailing block
            std::size_t pr = rows, pc = cols;
            T best = 0;
            for (std::size_t r = k; r < rows; ++r)
                for (std::size_t c = k; c < cols; ++c) {
                    if (at(r, c) == 0) continue;
                    T v = D::abs(at(r, c));
                    if (pr == rows || v < best) {
                        best = v;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr == rows) return diag;
            if (pr != k)
                for (std::size_t c = 0; c < cols; ++c) std::swap(at(pr, c), at(k, c));
            if (pc != k)
                for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, k));
            const T pivot = at(k, k);
            bool clean = true;
            for (std::size_t r = k + 1; r < rows; ++r) {
                if (at(r, k) == 0) continue;
                const T q = D::div(at(r, k), pivot);
                for (std::size_t c = k; c < cols; ++c) at(r, c) = D::sub_mul(at(r, c), q, at(k, c));
                if (at(r, k) != 0) clean = false;
            }
            for (std::size_t c = k + 1; c < cols; ++c) {
                if (at(k, c) == 0) continue;
                const T q = D::div(at(k, c), pivot);
                for (std::size_t r = k; r < rows; ++r) at(r, c) = D::sub_mul(at(r, c), q, at(r, k));
                if (at(k, c) != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(D::to_mpz(D::abs(at(k, k))));
    }
    return diag;
}

std::vector<mpz_class> sorted_invariants(std::vector<mpz_class> diag)
{
    // gcd/lcm sweep turns any diagonal into a divisibility chain
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            mpz_class g = gcd(diag[i], diag[j]);
            mpz_class l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

template <class Arith, class Dense>
std::vector<mpz_class> snf_with(const SparseMatrix& m)
{
    SparseEliminator<Arith> elim(m, Arith{});
    const std::size_t units = elim.run();
    std::size_t rows = 0, cols = 0;
    auto block = elim.template residual<typename Dense::T>(
        rows, cols, [](const typename Arith::value_type& v) { return typename Dense::T(v); });
    std::vector<mpz_class> diag(units, mpz_class(1));
    auto rest = dense_snf<Dense>(std::move(block), rows, cols);
    diag.insert(diag.end(), rest.begin(), rest.end());
    return sorted_invariants(std::move(diag));
}

} // namespace

RankNullity rank_nullity(const SparseMatrix& m, RingSpec ring)
{
    std::size_t rank = 0;
    switch (ring.kind()) {
    case RingSpec::Kind::integers:
        throw std::invalid_argument("rank_nullity needs a field; use smith_normal_form over z");
    case RingSpec::Kind::prime_field:
        rank = SparseEliminator<FieldArith>(m, FieldArith{PrimeField(ring.modulus())}).run();
        break;
    case RingSpec::Kind::rationals:
        rank = SparseEliminator<RationalArith>(m, RationalArith{}).run();
        break;
    }
    return {rank, m.cols() - rank};
}

std::vector<mpz_class> smith_normal_form(const SparseMatrix& m)
{
    if (m.ring().kind() != RingSpec::Kind::integers)
        throw std::invalid_argument("smith_normal_form needs an integer matrix, got ring " +
                                    m.ring().str());
    try {
        return snf_with<CheckedInt, DenseChecked>(m);
    } catch (const ArithmeticOverflow&) {
        return snf_with<BigInt, DenseBig>(m);
    }
}

std::vector<mpz_class> dense_smith_normal_form(std::vector<mpz_class> entries, std::size_t rows,
                                               std::size_t cols)
{
    if (entries.size() != rows * cols) throw std::invalid_argument("dense matrix size mismatch");
    return sorted_invariants(dense_snf<DenseBig>(std::move(entries), rows, cols));
}

} // namespace injwords
