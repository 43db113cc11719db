#include "injwords/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "injwords/linalg.hpp"
#include "injwords/parallel.hpp"

namespace injwords {

bool HomologySummary::torsion_free() const
{
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

std::vector<std::size_t> boundary_ranks(const GeneratedComplex& c, RingSpec ring,
                                        std::vector<std::vector<mpz_class>>* invariants)
{
    const int n = c.alphabet();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::vector<mpz_class>> factors(static_cast<std::size_t>(n + 1));

    // each level's reduction owns its matrix; levels are independent
    std::vector<int> levels;
    for (int l = 2; l <= n; ++l)
        if (c.level_size(l) > 0) levels.push_back(l);
    // largest matrices first so the slowest job starts earliest
    std::sort(levels.begin(), levels.end(),
              [&](int a, int b) { return c.level_size(a) > c.level_size(b); });

    parallel_for(levels.size(), [&](std::size_t k) {
        const int l = levels[k];
        const auto idx = static_cast<std::size_t>(l);
        if (ring.kind() == RingSpec::Kind::integers) {
            factors[idx] = smith_normal_form(boundary_matrix(c, l, ring));
            ranks[idx] = factors[idx].size();
        } else {
            ranks[idx] = rank_nullity(boundary_matrix(c, l, ring), ring).rank;
        }
    });
    if (invariants) *invariants = std::move(factors);
    return ranks;
}

HomologySummary homology(const GeneratedComplex& c, RingSpec ring)
{
    const int n = c.alphabet();
    std::vector<std::vector<mpz_class>> factors;
    const auto ranks = boundary_ranks(c, ring, &factors);
    auto rank_of = [&](int l) -> std::int64_t {
        return l >= 2 && l <= n ? static_cast<std::int64_t>(ranks[static_cast<std::size_t>(l)]) : 0;
    };

    HomologySummary h;
    h.ring = ring;
    h.betti.resize(static_cast<std::size_t>(n));
    h.torsion.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        // degree d lives on words of length d + 1
        const auto cells = static_cast<std::int64_t>(c.level_size(d + 1));
        h.betti[static_cast<std::size_t>(d)] = cells - rank_of(d + 1) - rank_of(d + 2);
        if (ring.kind() == RingSpec::Kind::integers && d + 2 <= n)
            for (const auto& f : factors[static_cast<std::size_t>(d + 2)])
                if (f > 1) h.torsion[static_cast<std::size_t>(d)].push_back(f);
    }
    return h;
}

std::size_t top_cycle_dimension(const GeneratedComplex& c, RingSpec ring)
{
    if (!ring.is_field()) throw std::invalid_argument("top_cycle_dimension needs a field ring");
    const int n = c.alphabet();
    if (n < 2 || c.level_size(n) == 0)
        throw std::invalid_argument("top_cycle_dimension: the top level is empty");
    return rank_nullity(boundary_matrix(c, n, ring), ring).nullity;
}

nlohmann::json to_json(const mpz_class& v)
{
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json to_json(const HomologySummary& h)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : h.torsion) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& f : t) row.push_back(to_json(f));
        torsion.push_back(std::move(row));
    }
    return {{"ring", h.ring.str()}, {"betti", h.betti}, {"torsion", std::move(torsion)}};
}

} // namespace injwords
