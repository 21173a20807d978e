#include "domavg/generators.hpp"

#include <stdexcept>
#include <string>

namespace domavg {

Graph generate(GraphKind kind, int n) {
    switch (kind) {
        case GraphKind::path: return path_graph(n);
        case GraphKind::cycle: return cycle_graph(n);
        case GraphKind::complete: return complete_graph(n);
        case GraphKind::star: return star_graph(n);
        case GraphKind::empty: return empty_graph(n);
    }
    throw std::invalid_argument("unknown graph kind");
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int off = g.order();
    std::vector<std::pair<int, int>> edges = g.edge_list();
    for (const auto& [u, v] : h.edge_list()) edges.emplace_back(u + off, v + off);
    return Graph::from_edge_list(off + h.order(), edges);
}

Graph star_like_from_base(const Graph& base, const std::vector<int>& leaf_counts) {
    const int nb = base.order();
    if (static_cast<int>(leaf_counts.size()) != nb)
        throw std::invalid_argument("leaf_counts must have one entry per base vertex");
    int total = nb;
    for (int c : leaf_counts) {
        if (c != 1 && c != 2)
            throw std::invalid_argument("leaf count " + std::to_string(c) +
                                        " outside {1,2}");
        total += c;
    }
    std::vector<std::pair<int, int>> edges = base.edge_list();
    int next = nb;
    for (int v = 0; v < nb; ++v)
        for (int i = 0; i < leaf_counts[static_cast<std::size_t>(v)]; ++i)
            edges.emplace_back(v, next++);
    return Graph::from_edge_list(total, edges);
}

} // namespace domavg
