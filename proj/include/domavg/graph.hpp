#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domavg/vertex_set.hpp"

namespace domavg {

// Immutable simple graph on at most 64 vertices. Stores the open
// neighbourhood adj(v) and the closed neighbourhood cn(v) = adj(v) | {v}
// per vertex; all queries are pure, so instances are freely shareable
// across threads.
class Graph {
public:
    Graph() = default;

    // Builds from an explicit edge list. Duplicate edges collapse; self-loops
    // and out-of-range endpoints are rejected.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    // Builds from an adjacency-mask vector (one open-neighbourhood mask per
    // vertex). Symmetry and irreflexivity are enforced.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return n_; }
    VertexSet vertices() const { return full_; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return cn_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const;

    // Minimum degree; 0 for the order-0 graph.
    int min_degree() const;
    VertexSet isolated_vertices() const;

    // N[S]: union of closed neighbourhoods over S.
    VertexSet closed_neighborhood(VertexSet s) const;

    // Reachability from vertex 0; the order-0 and order-1 graphs count as
    // connected.
    bool connected() const;

    // Throws std::invalid_argument if s has bits outside the vertex range.
    void require_subset(VertexSet s) const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> cn_;
    VertexSet full_;
};

struct Stem {
    int vertex = 0;
    VertexSet leaves;   // L(s)
    int leaf_count = 0; // k for a k-stem
    VertexSet closed_leaves() const { return leaves | VertexSet::single(vertex); } // L[s]
};

// Leaf/stem decomposition. A vertex may be both a leaf and a stem (K2), and
// the star-like test follows the literal definition: every vertex is a leaf
// or a k-stem with k <= 2.
struct StemStructure {
    VertexSet leaves;
    std::vector<Stem> stems;
    VertexSet stem_vertices;
    int omega = 0; // number of stems
    bool star_like = false;
    std::optional<int> witness; // a violating vertex when not star-like

    const Stem* stem_at(int v) const {
        for (const Stem& s : stems)
            if (s.vertex == v) return &s;
        return nullptr;
    }
};

StemStructure stem_structure(const Graph& g);

} // namespace domavg
