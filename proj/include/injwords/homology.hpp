#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

#include "injwords/complex.hpp"
#include "injwords/ring.hpp"

namespace injwords {

/**
 * Homology of |X| in degrees 0 .. n-1.
 *
 * Degree 0 is unreduced, so a contractible complex reports betti
 * (1, 0, ..., 0). Over the integers `betti` holds free ranks and `torsion`
 * the invariant factors > 1 in divisibility order; over a field torsion
 * lists are always empty.
 */
struct HomologySummary {
    RingSpec ring = RingSpec::integers();
    std::vector<std::int64_t> betti;
    std::vector<std::vector<mpz_class>> torsion;

    bool torsion_free() const;
    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Ranks of d_2 .. d_n (index l holds rank d_l; entries 0 and 1 unused).
/// Over the integers the invariant factors of each d_l are written to
/// `invariants` when it is non-null.
std::vector<std::size_t> boundary_ranks(const GeneratedComplex& c, RingSpec ring,
                                        std::vector<std::vector<mpz_class>>* invariants = nullptr);

HomologySummary homology(const GeneratedComplex& c, RingSpec ring);

/// dim ker d_n over a field: the space of top-dimensional cycles.
/// Throws std::invalid_argument for the integer ring or an empty top level.
std::size_t top_cycle_dimension(const GeneratedComplex& c, RingSpec ring);

/// {"ring": "...", "betti": [...], "torsion": [[...], ...]}
nlohmann::json to_json(const HomologySummary& h);

/// Integer as a JSON number when it fits in int64, else as a decimal string.
nlohmann::json to_json(const mpz_class& v);

} // namespace injwords
