#include "injwords/complex.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace injwords {

namespace {

void sort_unique(std::vector<InjWord>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

GeneratedComplex::GeneratedComplex(int n)
    : n_(n), levels_(static_cast<std::size_t>(n)), coface_counts_(static_cast<std::size_t>(n))
{
    if (n < 1 || n > kMaxAlphabet) throw std::invalid_argument("alphabet size outside [1, 12]");
}

GeneratedComplex GeneratedComplex::from_cells(int n, std::vector<InjWord> cells)
{
    GeneratedComplex c(n);
    for (auto& w : cells) {
        if (w.alphabet() != n) throw std::invalid_argument("cell " + w.str() + " uses another alphabet");
        c.levels_[static_cast<std::size_t>(w.size() - 1)].push_back(w);
    }
    for (auto& lvl : c.levels_) sort_unique(lvl);
    c.rebuild_index();
    for (int l = 2; l <= n; ++l)
        for (const auto& w : c.level(l))
            for (int j = 1; j <= l; ++j)
                if (!c.contains(delete_at(w, j)))
                    throw std::invalid_argument("cells not closed under deletion: " + w.str() +
                                                " lacks face " + delete_at(w, j).str());
    return c;
}

void GeneratedComplex::rebuild_index()
{
    index_.clear();
    index_.reserve(cell_count());
    for (auto& lvl : levels_)
        for (std::uint32_t i = 0; i < lvl.size(); ++i) index_.emplace(lvl[i].code(), i);
    for (int l = 1; l <= n_; ++l) {
        auto& counts = coface_counts_[static_cast<std::size_t>(l - 1)];
        counts.assign(level_size(l), 0);
        if (l == n_) continue;
        for (const auto& s : level(l + 1))
            for (int j = 1; j <= l + 1; ++j) {
                auto it = index_.find(delete_at(s, j).code());
                if (it != index_.end()) ++counts[it->second];
            }
    }
}

int GeneratedComplex::top_level() const
{
    for (int l = n_; l >= 1; --l)
        if (!levels_[static_cast<std::size_t>(l - 1)].empty()) return l;
    return 0;
}

std::span<const InjWord> GeneratedComplex::level(int l) const
{
    if (l < 1 || l > n_) throw std::out_of_range("level " + std::to_string(l) + " outside [1, n]");
    return levels_[static_cast<std::size_t>(l - 1)];
}

std::vector<std::size_t> GeneratedComplex::level_sizes() const
{
    std::vector<std::size_t> out;
    for (const auto& lvl : levels_) out.push_back(lvl.size());
    return out;
}

std::size_t GeneratedComplex::cell_count() const
{
    std::size_t total = 0;
    for (const auto& lvl : levels_) total += lvl.size();
    return total;
}

std::optional<std::uint32_t> GeneratedComplex::ordinal(const InjWord& w) const
{
    if (w.alphabet() != n_) return std::nullopt;
    auto it = index_.find(w.code());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t GeneratedComplex::coface_count(const InjWord& w) const
{
    auto ord = ordinal(w);
    if (!ord) throw std::invalid_argument("word " + w.str() + " is not in the complex");
    return coface_counts_[static_cast<std::size_t>(w.size() - 1)][*ord];
}

std::vector<InjWord> GeneratedComplex::cells() const
{
    std::vector<InjWord> out;
    out.reserve(cell_count());
    for (const auto& lvl : levels_) out.insert(out.end(), lvl.begin(), lvl.end());
    return out;
}

void GeneratedComplex::check_invariants() const
{
    for (int l = 1; l <= n_; ++l) {
        const auto lvl = level(l);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            if (lvl[i].size() != l || lvl[i].alphabet() != n_)
                throw std::logic_error("word " + lvl[i].str() + " stored at the wrong level");
            if (i > 0 && !(lvl[i - 1] < lvl[i]))
                throw std::logic_error("level " + std::to_string(l) + " not strictly sorted");
            if (ordinal(lvl[i]) != i) throw std::logic_error("index out of sync at " + lvl[i].str());
            if (l >= 2)
                for (int j = 1; j <= l; ++j)
                    if (!contains(delete_at(lvl[i], j)))
                        throw std::logic_error("closure broken: " + lvl[i].str());
            std::uint32_t brute = 0;
            if (l < n_)
                for (const auto& s : level(l + 1))
                    if (is_subword(lvl[i], s)) ++brute;
            if (brute != coface_count(lvl[i]))
                throw std::logic_error("coface count mismatch at " + lvl[i].str());
        }
    }
    if (index_.size() != cell_count()) throw std::logic_error("index size mismatch");
}

GeneratedComplex generate_complex(std::span<const InjWord> generators, int n)
{
    GeneratedComplex c(n);
    std::vector<std::vector<InjWord>> levels(static_cast<std::size_t>(n));
    for (const auto& g : generators) {
        if (g.alphabet() != n)
            throw std::invalid_argument("generator " + g.str() + " has alphabet " +
                                        std::to_string(g.alphabet()) + ", expected " +
                                        std::to_string(n));
        levels[static_cast<std::size_t>(g.size() - 1)].push_back(g);
    }
    // top-down: each level is complete once every longer level has been deleted from
    for (int l = n; l >= 1; --l) {
        auto& lvl = levels[static_cast<std::size_t>(l - 1)];
        sort_unique(lvl);
        if (l == 1) break;
        auto& below = levels[static_cast<std::size_t>(l - 2)];
        for (const auto& w : lvl)
            for (int j = 1; j <= l; ++j) below.push_back(delete_at(w, j));
    }
    std::vector<InjWord> cells;
    for (auto& lvl : levels) cells.insert(cells.end(), lvl.begin(), lvl.end());
    return GeneratedComplex::from_cells(n, std::move(cells));
}

SparseMatrix boundary_matrix(const GeneratedComplex& c, int level, RingSpec ring)
{
    if (level < 2 || level > c.alphabet())
        throw std::out_of_range("boundary level " + std::to_string(level) + " outside [2, n]");
    const auto cols = c.level(level);
    SparseMatrix d(c.level_size(level - 1), cols.size(), ring);
    std::vector<SparseEntry> entries;
    for (std::size_t col = 0; col < cols.size(); ++col) {
        entries.clear();
        for (int j = 1; j <= level; ++j) {
            const auto row = c.ordinal(delete_at(cols[col], j));
            entries.push_back({*row, (j % 2 == 1) ? 1 : -1});
        }
        d.set_column(col, std::move(entries));
    }
    return d;
}

std::int64_t euler_characteristic(const GeneratedComplex& c)
{
    std::int64_t chi = 0;
    for (int l = 1; l <= c.alphabet(); ++l) {
        const auto size = static_cast<std::int64_t>(c.level_size(l));
        chi += (l % 2 == 1) ? size : -size;
    }
    return chi;
}

std::vector<Coface> coface_list(const GeneratedComplex& c, const InjWord& t)
{
    if (!c.contains(t)) throw std::invalid_argument("word " + t.str() + " is not in the complex");
    std::vector<Coface> out;
    if (t.size() == c.alphabet()) return out;
    const auto mask = t.letter_mask();
    for (int a = 1; a <= c.alphabet(); ++a) {
        if (mask & (1u << a)) continue;
        for (int pos = 1; pos <= t.size() + 1; ++pos) {
            auto s = insert_at(t, pos, a);
            if (c.contains(s)) out.push_back({s, pos});
        }
    }
    std::sort(out.begin(), out.end(), [](const Coface& x, const Coface& y) { return x.word < y.word; });
    return out;
}

void write_legend(std::ostream& out, std::span<const InjWord> words)
{
    for (const auto& w : words) out << w.str() << '\n';
}

} // namespace injwords
