#pragma once

#include <vector>

#include "domavg/graph.hpp"

namespace domavg {

enum class GraphKind { path, cycle, complete, star, empty };

Graph generate(GraphKind kind, int n);

Graph path_graph(int n);
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);      // K_{1,n-1}, centre at vertex 0
Graph empty_graph(int n);

// G stays on 0..|G|-1, H is relabelled by offset |G|.
Graph disjoint_union(const Graph& g, const Graph& h);

// Attaches leaf_counts[v] pendant vertices (each value 1 or 2) to every
// vertex of the base; the result satisfies the star-like predicate.
Graph star_like_from_base(const Graph& base, const std::vector<int>& leaf_counts);

} // namespace domavg
