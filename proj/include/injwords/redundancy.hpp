#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "injwords/word.hpp"

namespace injwords {

/// A word over the positive integers, ordered lexicographically (a proper
/// prefix sorts first). std::vector's ordering is exactly that order.
using GapWord = std::vector<int>;

/// A pair of gap-words under the product of two lexicographic orders.
struct GapPair {
    GapWord left;
    GapWord right;

    friend bool operator==(const GapPair&, const GapPair&) = default;
};

enum class OrderRelation { less, greater, equal, incomparable };

std::string to_string(OrderRelation r);

/// Product-order comparison of two gap pairs.
OrderRelation omega_compare(const GapPair& a, const GapPair& b);

/// Descending differences of J u {0}. Requires J within [1, n-1] for the
/// caller's n; only positivity is checked here.
GapWord delta_left(std::span<const int> positions);

/// Ascending differences of J u {n}. Throws unless J lies in [1, n-1].
GapWord delta_right(std::span<const int> positions, int n);

/**
 * Fixed-point data of a face t of length n-1 missing the letter k.
 *
 * fixed = {j : t_j = j}, shifted = {j : t_j = j + 1}, both ascending;
 * lambda = max(shifted u {0}), rho = min(fixed u {n}), excess = lambda - rho,
 * omega = (delta_left(shifted), delta_right(fixed)).
 */
struct Profile {
    InjWord t;
    int k = 0;
    std::vector<int> fixed;
    std::vector<int> shifted;
    int lambda = 0;
    int rho = 0;
    int excess = 0;
    GapPair omega;
};

Profile profile(const InjWord& t);

/// Positions i with insert_missing(t, i) having a fixed point, from the
/// interval law [1, lambda] u [rho + 1, n] u {k}. Ascending.
std::vector<int> m_set(const InjWord& t);

/// The same set by testing each of the n insertions directly.
std::vector<int> m_set_brute_force(const InjWord& t);

enum class WitnessSide { left, right };
enum class Progress { excess, omega };

/**
 * Why sigma_i(t) is incident with a face that is already settled.
 *
 * Left side (i <= lambda): b = min(shifted n [i, n-1]) and
 * t_prime = delete_at(sigma_i(t), b + 1). Right side (i >= rho + 1):
 * b = max(fixed n [1, i-1]) and t_prime = delete_at(sigma_i(t), b).
 * Either the excess strictly drops from t to t_prime, or it is equal and
 * omega strictly rises.
 */
struct WitnessRecord {
    InjWord t;
    int i = 0;
    WitnessSide side = WitnessSide::left;
    int b = 0;
    InjWord t_prime;
    Progress progress = Progress::excess;

    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

/// Builds and self-checks the witness for (t, i). Throws std::invalid_argument
/// when i is not in M(t) or equals the missing letter; throws CertificateError
/// if the intersection formulas or the progress guarantee fail.
WitnessRecord witness(const InjWord& t, int i);

} // namespace injwords
