#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domavg/domination.hpp"
#include "domavg/graph.hpp"
#include "domavg/numbers.hpp"

namespace domavg {

struct SearchConstraint {
    int n = 0;
    int min_degree = 0;
    bool connected = false;
    bool no_isolated = false;

    // min_degree >= 1 subsumes no_isolated.
    bool admits(const Graph& g) const;
    std::string describe() const;
};

struct ExtremalResult {
    Rational best_avd;
    std::vector<std::string> argmax; // graph6, in stream order
    std::uint64_t examined = 0;      // graphs surviving the filter
};

// Exact-rational argmax of the average dominating-set order over the
// filtered stream. Throws if nothing survives the constraint.
ExtremalResult search(const std::vector<Graph>& stream, const SearchConstraint& constraint,
                      int workers = 1);

// One representative per isomorphism class, by vertex augmentation with
// canonical-code dedup. Supported for n <= 7 only; larger orders should be
// fed from an external graph6 stream. Class counts are verified against
// the known enumeration (1, 2, 4, 11, 34, 156, 1044) before returning.
const std::vector<Graph>& generate_all_nonisomorphic(int n);

// Smallest upper-triangle adjacency code over all vertex relabelings; equal
// codes mean isomorphic graphs. Supported for n <= 9.
std::uint64_t canonical_code(const Graph& g);

struct TheoremReport {
    int n = 0;
    std::uint64_t examined = 0;
    bool bound_holds_all = false;
    bool equality_set_is_star_like = false;
    std::vector<std::string> equality_graph6;
    std::vector<std::string> connected_equality_graph6;
};

// Exhaustive check over all isolated-vertex-free graphs of order n <= 7:
// the 2n/3 bound holds and the equality class is exactly the star-like one.
TheoremReport verify_main_theorem(int n, int workers = 1);

} // namespace domavg
