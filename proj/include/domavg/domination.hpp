#pragma once

#include <vector>

#include "domavg/graph.hpp"
#include "domavg/numbers.hpp"

namespace domavg {

// Exact number of dominating sets per cardinality: d[k] is the count of
// dominating sets of size k, i.e. the k-th domination polynomial coefficient.
struct DominationTally {
    int n = 0;
    std::vector<BigInt> d; // size n+1

    // Domination number: smallest k with d[k] > 0.
    int gamma() const;
    BigInt total() const;          // Gamma
    BigInt weighted_total() const; // Gamma'
};

struct AvdSummary {
    int n = 0;
    BigInt gamma_total;       // Gamma: number of dominating sets
    BigInt gamma_weighted;    // Gamma': sum of their cardinalities
    Rational average;         // Gamma'/Gamma in lowest terms
};

enum class BoundVerdict { holds_strict, holds_equality, violated, not_applicable };

const char* to_string(BoundVerdict v);

// Outcome of comparing avg order against the 2n/3 bound (or (2n+r)/3 when
// r vertices are isolated), with the star-like equality cross-check.
struct BoundReport {
    BoundVerdict verdict = BoundVerdict::not_applicable;
    int n = 0;
    int isolated_count = 0;
    Rational average;
    Rational bound;
    bool star_like = false;
    // In the isolated-free case, equality must hold exactly for star-like
    // graphs; true vacuously otherwise.
    bool equality_matches_star_like = true;
};

inline constexpr int kDefaultOracleCap = 24;
inline constexpr int kDefaultFastCap = 64;

bool is_dominating(const Graph& g, VertexSet s);

// Oracle: walks all 2^n subsets in lexicographic mask order and tests each
// one. Refuses orders above the cap.
DominationTally tally_bruteforce(const Graph& g, int cap = kDefaultOracleCap, int workers = 1);

// Independent fast path: inclusion-exclusion over undominated witness sets
// T, with terms grouped by |T| parity and |N[T]| so that the only
// big-integer work is the final binomial combination. Shares no enumeration
// code with the oracle.
DominationTally tally_fast(const Graph& g, int cap = kDefaultFastCap, int workers = 1);

AvdSummary average_order(const DominationTally& tally);
AvdSummary average_order(const Graph& g, int workers = 1);

BoundReport check_bound(const Graph& g, int workers = 1);

// Throws std::logic_error on any violated tally invariant (binomial bound,
// d[n] = 1, support contiguity). Used by tests and debug paths.
void validate_tally(const DominationTally& tally);

} // namespace domavg
