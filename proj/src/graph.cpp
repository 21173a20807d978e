#include "domavg/graph.hpp"

#include <string>

namespace domavg {

namespace {

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (n > VertexSet::max_vertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds the " +
                                    std::to_string(VertexSet::max_vertices) +
                                    "-vertex bitmask kernel limit");
}

} // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    check_order(n);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for order " +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                        " not allowed in a simple graph");
        adj[static_cast<std::size_t>(u)].add(v);
        adj[static_cast<std::size_t>(v)].add(u);
    }
    return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    Graph g;
    g.n_ = n;
    g.full_ = VertexSet::first_n(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet row = adj[static_cast<std::size_t>(v)];
        if (!row.subset_of(g.full_))
            throw std::invalid_argument("adjacency row " + std::to_string(v) +
                                        " has bits outside the vertex range");
        if (row.contains(v))
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (int u : row)
            if (!adj[static_cast<std::size_t>(u)].contains(v))
                throw std::invalid_argument("adjacency not symmetric at edge (" +
                                            std::to_string(v) + "," + std::to_string(u) + ")");
    }
    g.adj_ = std::move(adj);
    g.cn_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        g.cn_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)] | VertexSet::single(v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
            if (v < u) out.emplace_back(v, u);
    return out;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = VertexSet::max_vertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

VertexSet Graph::isolated_vertices() const {
    VertexSet out;
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(v)].empty()) out.add(v);
    return out;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
    require_subset(s);
    VertexSet out;
    for (int v : s) out |= cn_[static_cast<std::size_t>(v)];
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    VertexSet reach = VertexSet::single(0);
    for (;;) {
        VertexSet next = reach;
        for (int v : reach) next |= adj_[static_cast<std::size_t>(v)];
        if (next == reach) break;
        reach = next;
    }
    return reach == full_;
}

void Graph::require_subset(VertexSet s) const {
    if (!s.subset_of(full_))
        throw std::invalid_argument("vertex set " + s.to_string() +
                                    " not contained in a graph of order " + std::to_string(n_));
}

StemStructure stem_structure(const Graph& g) {
    StemStructure out;
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) out.leaves.add(v);
    for (int v = 0; v < n; ++v) {
        const VertexSet lv = g.neighbors(v) & out.leaves;
        if (!lv.empty())
            out.stems.push_back(Stem{v, lv, lv.count()});
    }
    for (const Stem& s : out.stems) out.stem_vertices.add(s.vertex);
    out.omega = static_cast<int>(out.stems.size());

    out.star_like = true;
    for (int v = 0; v < n && out.star_like; ++v) {
        if (out.leaves.contains(v)) continue;
        const Stem* s = out.stem_at(v);
        if (s == nullptr || s->leaf_count > 2) {
            out.star_like = false;
            out.witness = v;
        }
    }
    return out;
}

} // namespace domavg
