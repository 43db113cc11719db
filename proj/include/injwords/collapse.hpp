#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "injwords/complex.hpp"
#include "injwords/word.hpp"

namespace injwords {

/// An elementary collapse: `face` lies in `coface` and in no other stored word.
struct CollapsePair {
    InjWord face;
    InjWord coface;

    friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
    friend auto operator<=>(const CollapsePair&, const CollapsePair&) = default;
};

enum class CollapsePolicy {
    lexicographic,           ///< smallest free face, then smallest coface
    highest_dimension_first, ///< longest coface first, then lexicographic
};

CollapsePolicy parse_policy(std::string_view text); ///< "lex" or "topdim"
std::string to_string(CollapsePolicy p);

struct CollapseTrace {
    std::vector<CollapsePair> pairs;
    GeneratedComplex residual;
    bool success = false; ///< residual is a single vertex
};

/// Every (t, s) where s is the only stored word strictly containing t.
/// Sorted by face, then coface.
std::vector<CollapsePair> free_faces(const GeneratedComplex& c);

/// Removes a free pair. Throws std::invalid_argument if the pair is not
/// currently free in `c`.
GeneratedComplex collapse_step(const GeneratedComplex& c, const CollapsePair& p);

/// Collapses free pairs chosen by `policy` until none is left.
CollapseTrace greedy_collapse(const GeneratedComplex& c, CollapsePolicy policy);

struct TopCollapseReport {
    int n = 0;
    CollapsePolicy policy = CollapsePolicy::lexicographic;
    std::size_t initial_top_cells = 0;
    std::size_t steps = 0;
    bool success = false; ///< every top cell was removed
    std::vector<std::size_t> residual_sizes;
};

/**
 * Collapses X(Sigma_n \ D_n) using only free faces of length-n cells, the
 * restricted process of removing top cells with exposed faces. Reports
 * whether it runs until no top cell is left; a stall is a result, not an error.
 */
TopCollapseReport top_collapse_experiment(int n, CollapsePolicy policy);

nlohmann::json to_json(const CollapseTrace& trace);
nlohmann::json to_json(const TopCollapseReport& report);

/**
 * Text incidence tables for the collapse sequence starting at
 * X(Sigma_n \ D_n): each stage collapses every top cell that has a free
 * face, and tables stop once at most one top cell remains. Top cells are
 * labelled s1, s2, ... in lexicographic order of the starting complex.
 */
std::string incidence_tables(int n);

} // namespace injwords
