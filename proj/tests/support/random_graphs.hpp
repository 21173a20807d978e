#pragma once

#include <random>
#include <utility>
#include <vector>

#include "domavg/graph.hpp"

namespace domavg::testing {

// Erdos-Renyi sample; edge probability in [lo_p, hi_p] drawn per graph so a
// fixed seed covers sparse and dense instances.
inline Graph random_graph(std::mt19937_64& rng, int n, double lo_p = 0.15, double hi_p = 0.85) {
    std::uniform_real_distribution<double> pick_p(lo_p, hi_p);
    const double p = pick_p(rng);
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

} // namespace domavg::testing
