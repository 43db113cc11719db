#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "injwords/redundancy.hpp"
#include "injwords/word.hpp"

namespace injwords {

/// A witness or certificate that fails verification. Never recoverable: it
/// would mean the redundancy argument is false for the instance at hand.
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Proof that every face of X(Sigma_n \ D_n) of length n-1 is homologically
 * redundant.
 *
 * `records` holds one witness per (t, i) with i in M(t) \ {k}, grouped by t
 * in lexicographic order of t and ascending i. Each record is an edge
 * t -> t_prime. `order` lists every face so that all edges point backwards:
 * processing faces in this order settles each t after everything it
 * depends on.
 */
struct Certificate {
    int n = 0;
    std::vector<WitnessRecord> records;
    std::vector<InjWord> order;

    std::size_t face_count() const { return order.size(); }
};

/// Builds witnesses for all n! faces (in parallel) and the induction order:
/// excess ascending, then omega descending. Requires 3 <= n <= 8.
/// Throws CertificateError on any failed record.
Certificate build_certificate(int n);

/**
 * Checks a certificate from first principles: recomputes insertions,
 * deletions and fixed-point sets without the witness builder, checks that
 * every required (t, i) is discharged exactly once, and that every edge
 * points backwards in `order`. Throws CertificateError describing the first
 * violation.
 */
void verify_certificate(const Certificate& cert);

/// JSON-lines: one record per line, then a footer {"n", "faces", "acyclic"}.
void write_certificate_jsonl(std::ostream& out, const Certificate& cert);

/// Reads records and footer back. The induction order is not stored, so it
/// is rebuilt from the faces with the same ranking the builder uses.
Certificate read_certificate_jsonl(std::istream& in);

nlohmann::json to_json(const WitnessRecord& rec);

struct FixedPointResult {
    int n = 0;
    std::size_t faces = 0;
    /// Faces newly marked in each round; rounds = size().
    std::vector<std::size_t> marked_per_round;
    std::vector<InjWord> marked;

    std::size_t rounds() const { return marked_per_round.size(); }
    bool complete() const { return marked.size() == faces; }
};

/**
 * Marks faces round by round: t is marked when, for some exempt l in M(t),
 * every sigma_i(t) with i in M(t) \ {l} has a face marked in an earlier
 * round. Stops at the first round that marks nothing new. Requires
 * 3 <= n <= 8.
 */
FixedPointResult fred_fixed_point(int n);

} // namespace injwords
