#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domavg/domination.hpp"
#include "domavg/graph.hpp"
#include "domavg/numbers.hpp"

namespace domavg {

// Per-dominating-set decomposition. For a dominating set S:
//   a   = critical vertices: v in S with S-v no longer dominating,
//   N1  = vertices outside S with exactly one closed neighbour in S,
//   N2  = vertices outside S with at least two,
//   a1  = critical vertices with a neighbour in N1, a2 = the rest.
struct SetProfile {
    VertexSet s;
    VertexSet a, a1, a2;
    VertexSet n1, n2;
};

SetProfile profile(const Graph& g, VertexSet s);

// Restriction of an aggregate run to the stem family X_I: dominating sets S
// with L[s] not contained in S exactly for the stems s in I.
struct StemFamily {
    VertexSet stems_in_i;   // I, as a set of stem vertices
    VertexSet excluded;     // union of L[s] over s in I
    VertexSet v_i;          // V minus that union
};

StemFamily make_family(const Graph& g, const StemStructure& stems, VertexSet stems_in_i);

// Pair counts summed over a family of dominating sets, each intersected
// with a fixed window X: sum |a1(S) & X|, |a2(S) & X|, |N1(S) & X|, ...
struct CriticalAggregates {
    BigInt sum_a, sum_a1, sum_a2;
    BigInt sum_n, sum_n1, sum_n2;
    BigInt family_size;
};

CriticalAggregates aggregates(const Graph& g, VertexSet window,
                              const std::optional<StemFamily>& family = std::nullopt,
                              int cap = kDefaultOracleCap, int workers = 1);

// Uniform result of one verification run. lhs/rhs are the two exactly
// computed sides being compared; a violating dominating set (when one
// exists) is carried for auditability.
struct CheckReport {
    std::string check;
    bool holds = true;
    bool applicable = true;
    BigInt lhs, rhs;
    std::optional<SetProfile> witness;
    std::string note;
};

// sum |a(S)| == 2*Gamma' - n*Gamma and sum |N(S)| == n*Gamma - Gamma',
// both summed over every dominating set.
std::vector<CheckReport> verify_critical_sum_identities(const Graph& g,
                                                        int cap = kDefaultOracleCap,
                                                        int workers = 1);

// |a1(S)| <= |N1(S)| for every dominating set.
CheckReport verify_a1_le_n1(const Graph& g, int cap = kDefaultOracleCap);

// (2^deg(v) - deg(v) - 1) * #{S : v in a2(S)} < #{S : v in N2(S)} for
// deg(v) >= 2; not applicable below degree 2.
CheckReport verify_deg2_inequality(const Graph& g, int v, int cap = kDefaultOracleCap,
                                   int workers = 1);

struct StemFamilyIndex {
    StemFamily family;
    BigInt size;
};

// All 2^omega families X_I with their sizes; the sizes sum to Gamma.
std::vector<StemFamilyIndex> stem_families(const Graph& g, int cap = kDefaultOracleCap);

// Pair counts over X_I restricted to L[s] for a k-stem s in I: <= always,
// strict when k >= 3 and the family is nonempty.
CheckReport verify_kstem_inequality(const Graph& g, VertexSet stems_in_i, int stem_vertex,
                                    int cap = kDefaultOracleCap, int workers = 1);

// Type-1 pair counts over X_I restricted to V_I.
CheckReport verify_restricted_a1(const Graph& g, VertexSet stems_in_i,
                                 int cap = kDefaultOracleCap, int workers = 1);

// sum |a(S)| <= sum |N(S)|  <=>  avg order <= 2n/3, as exact integers.
CheckReport verify_equivalence_avd_bound(const Graph& g, int cap = kDefaultOracleCap,
                                         int workers = 1);

} // namespace domavg
