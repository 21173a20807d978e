// Standalone data-prep tool: enumerates one representative per isomorphism
// class for orders up to 9 by vertex augmentation, and writes the graph6
// streams consumed by the extremal acceptance runs (orders 8 and 9 with
// minimum degree 2). Class totals are validated against the known counts
// 1, 2, 4, 11, 34, 156, 1044, 12346, 274668 before anything is written, so
// a canonicalisation bug cannot silently produce a wrong stream.
//
// The canonical form is the minimum upper-triangle adjacency code over all
// vertex orderings, found by a position-by-position DFS with two prunes:
// branches whose partial code exceeds the incumbent are cut, and at each
// position only one representative per twin class of interchangeable
// vertices is tried (vertices whose rows agree outside the pair swap by an
// automorphism, so they generate identical subtrees).

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "domavg/graph.hpp"
#include "domavg/graph6.hpp"

using domavg::Graph;

namespace {

constexpr int kMaxOrder = 9;
constexpr std::uint64_t kKnownCounts[] = {1,    1,    2,     4,     11,
                                          34,   156,  1044,  12346, 274668};

struct Canonizer {
    int n = 0;
    std::array<std::uint64_t, kMaxOrder> adj{};
    std::array<int, kMaxOrder> twin_rep{};
    std::array<int, kMaxOrder> placed{};
    std::uint64_t used = 0;
    std::uint64_t best = 0;
    int total_bits = 0;

    void compute_twin_classes() {
        for (int v = 0; v < n; ++v) {
            twin_rep[static_cast<std::size_t>(v)] = v;
            for (int u = 0; u < v; ++u) {
                const std::uint64_t ignore =
                    (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                if (((adj[static_cast<std::size_t>(u)] ^ adj[static_cast<std::size_t>(v)]) &
                     ~ignore) == 0) {
                    twin_rep[static_cast<std::size_t>(v)] = twin_rep[static_cast<std::size_t>(u)];
                    break;
                }
            }
        }
    }

    std::uint64_t run() {
        total_bits = n * (n - 1) / 2;
        if (total_bits == 0) return 0;
        best = ~std::uint64_t{0} >> (64 - total_bits);
        used = 0;
        compute_twin_classes();
        dfs(0, 0, 0);
        return best;
    }

    void dfs(int depth, std::uint64_t code, int bits) {
        if (depth == n) {
            if (code < best) best = code;
            return;
        }
        struct Candidate {
            std::uint64_t column;
            int vertex;
        };
        std::array<Candidate, kMaxOrder> cands{};
        int count = 0;
        std::uint64_t tried_classes = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            const std::uint64_t rep_bit =
                std::uint64_t{1} << twin_rep[static_cast<std::size_t>(v)];
            if (tried_classes & rep_bit) continue;
            tried_classes |= rep_bit;
            std::uint64_t column = 0;
            for (int i = 0; i < depth; ++i)
                column = (column << 1) |
                         ((adj[static_cast<std::size_t>(placed[static_cast<std::size_t>(i)])] >>
                           v) &
                          1u);
            cands[static_cast<std::size_t>(count++)] = Candidate{column, v};
        }
        // Smaller columns first: the first completed leaf is then a strong
        // incumbent and later branches prune early.
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Candidate& a, const Candidate& b) {
                      return a.column != b.column ? a.column < b.column : a.vertex < b.vertex;
                  });
        const int new_bits = bits + depth;
        for (int c = 0; c < count; ++c) {
            const std::uint64_t new_code = (code << depth) | cands[static_cast<std::size_t>(c)].column;
            if (new_bits > 0 && new_code > (best >> (total_bits - new_bits))) continue;
            const int v = cands[static_cast<std::size_t>(c)].vertex;
            placed[static_cast<std::size_t>(depth)] = v;
            used |= std::uint64_t{1} << v;
            dfs(depth + 1, new_code, new_bits);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

std::uint64_t canonical_code_of_rows(const std::array<std::uint64_t, kMaxOrder>& rows, int n) {
    Canonizer c;
    c.n = n;
    c.adj = rows;
    return c.run();
}

std::array<std::uint64_t, kMaxOrder> rows_from_code(std::uint64_t code, int n) {
    std::array<std::uint64_t, kMaxOrder> rows{};
    int bit = n * (n - 1) / 2;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            --bit;
            if ((code >> bit) & 1) {
                rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
        }
    }
    return rows;
}

std::vector<std::uint64_t> augment_level(const std::vector<std::uint64_t>& parents, int k,
                                         int workers) {
    std::vector<std::unordered_set<std::uint64_t>> partial(
        static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::size_t chunk = (parents.size() + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = static_cast<std::size_t>(w) * chunk;
            const std::size_t hi = std::min(parents.size(), lo + chunk);
            auto& local = partial[static_cast<std::size_t>(w)];
            for (std::size_t idx = lo; idx < hi; ++idx) {
                auto rows = rows_from_code(parents[idx], k - 1);
                for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                    auto child = rows;
                    child[static_cast<std::size_t>(k - 1)] = nb;
                    for (std::uint64_t rest = nb; rest != 0; rest &= rest - 1)
                        child[static_cast<std::size_t>(std::countr_zero(rest))] |=
                            std::uint64_t{1} << (k - 1);
                    local.insert(canonical_code_of_rows(child, k));
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    std::unordered_set<std::uint64_t> merged;
    for (const auto& p : partial) merged.insert(p.begin(), p.end());
    std::vector<std::uint64_t> out(merged.begin(), merged.end());
    std::sort(out.begin(), out.end());
    return out;
}

Graph graph_of_code(std::uint64_t code, int n) {
    const auto rows = rows_from_code(code, n);
    std::vector<domavg::VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj.emplace_back(rows[static_cast<std::size_t>(v)]);
    return Graph::from_adjacency(std::move(adj));
}

} // namespace

int main(int argc, char** argv) {
    int max_order = 9;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    std::string out_dir = "data";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* flag) {
            if (++i >= argc) {
                std::cerr << "missing value for " << flag << "\n";
                std::exit(1);
            }
            return std::string(argv[i]);
        };
        if (arg == "--max-order") max_order = std::stoi(next("--max-order"));
        else if (arg == "--workers") workers = std::stoi(next("--workers"));
        else if (arg == "--out-dir") out_dir = next("--out-dir");
        else {
            std::cerr << "usage: enumerate-classes [--max-order N<=9] [--workers K] [--out-dir DIR]\n";
            return 1;
        }
    }
    if (max_order < 1 || max_order > kMaxOrder) {
        std::cerr << "max order must be between 1 and " << kMaxOrder << "\n";
        return 1;
    }
    if (workers < 1) workers = 1;

    std::vector<std::uint64_t> level{0}; // the order-1 graph
    for (int k = 2; k <= max_order; ++k) {
        const auto start = std::chrono::steady_clock::now();
        level = augment_level(level, k, workers);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "order " << k << ": " << level.size() << " classes (" << secs << " s)\n";
        if (level.size() != kKnownCounts[k]) {
            std::cerr << "FATAL: expected " << kKnownCounts[k] << " classes of order " << k
                      << "; the canonical enumeration is broken\n";
            return 1;
        }
        if (k >= 8) {
            const std::string path =
                out_dir + "/graphs" + std::to_string(k) + "_min2.g6";
            std::ofstream out(path);
            if (!out) {
                std::cerr << "cannot write " << path << "\n";
                return 1;
            }
            std::uint64_t kept = 0;
            for (std::uint64_t code : level) {
                const Graph g = graph_of_code(code, k);
                if (g.min_degree() < 2) continue;
                out << domavg::encode_graph6(g) << "\n";
                ++kept;
            }
            std::cerr << "wrote " << path << ": " << kept << " graphs with min degree >= 2\n";
        }
    }
    return 0;
}
