#include "injwords/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace injwords {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, RingSpec ring)
    : rows_(rows), columns_(cols), ring_(ring)
{
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
}

std::int64_t SparseMatrix::reduce(std::int64_t value) const
{
    if (ring_.kind() != RingSpec::Kind::prime_field) return value;
    const std::int64_t p = ring_.modulus();
    value %= p;
    return value < 0 ? value + p : value;
}

void SparseMatrix::set_column(std::size_t c, std::vector<SparseEntry> entries)
{
    if (c >= columns_.size()) throw std::out_of_range("column index out of range");
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    std::vector<SparseEntry> merged;
    merged.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.row >= rows_) throw std::out_of_range("row index out of range");
        if (!merged.empty() && merged.back().row == e.row)
            merged.back().value += e.value;
        else
            merged.push_back(e);
    }
    std::erase_if(merged, [&](SparseEntry& e) {
        e.value = reduce(e.value);
        return e.value == 0;
    });
    columns_[c] = std::move(merged);
}

std::int64_t SparseMatrix::coeff(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const SparseEntry& e, std::size_t row) { return e.row < row; });
    return it != col.end() && it->row == r ? it->value : 0;
}

SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("product: inner dimensions differ");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("product: rings differ");
    SparseMatrix out(a.rows(), b.cols(), a.ring());
    std::vector<std::int64_t> acc(a.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        touched.clear();
        for (const auto& eb : b.column(c)) {
            for (const auto& ea : a.column(eb.row)) {
                std::int64_t term = 0;
                if (__builtin_mul_overflow(ea.value, eb.value, &term) ||
                    __builtin_add_overflow(acc[ea.row], term, &acc[ea.row]))
                    throw std::overflow_error("product: coefficient overflow");
                acc[ea.row] = out.reduce(acc[ea.row]);
                touched.push_back(ea.row);
            }
        }
        std::vector<SparseEntry> col;
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (auto r : touched) {
            if (acc[r] != 0) col.push_back({r, acc[r]});
            acc[r] = 0;
        }
        out.set_column(c, std::move(col));
    }
    return out;
}

bool is_zero(const SparseMatrix& m)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.column(c).empty()) return false;
    return true;
}

void write_coordinates(std::ostream& out, const SparseMatrix& m, int level)
{
    out << level << ' ' << m.rows() << ' ' << m.cols() << ' ' << m.ring().str() << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) out << e.row + 1 << ' ' << c + 1 << ' ' << e.value << '\n';
}

} // namespace injwords
