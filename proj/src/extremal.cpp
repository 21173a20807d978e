#include "domavg/extremal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "domavg/graph6.hpp"
#include "domavg/parallel.hpp"

namespace domavg {

bool SearchConstraint::admits(const Graph& g) const {
    if (g.order() != n) return false;
    if (g.min_degree() < min_degree) return false;
    if ((no_isolated || min_degree >= 1) && !g.isolated_vertices().empty()) return false;
    if (connected && !g.connected()) return false;
    return true;
}

std::string SearchConstraint::describe() const {
    std::string out = "n=" + std::to_string(n) + ", min_degree=" + std::to_string(min_degree);
    if (connected) out += ", connected";
    if (no_isolated) out += ", no isolated vertices";
    return out;
}

namespace {

constexpr int kGeneratorCap = 7;
constexpr int kCanonicalCap = 9;

// Known counts of isomorphism classes for orders 1..7.
constexpr std::uint64_t kClassCounts[] = {1, 2, 4, 11, 34, 156, 1044};

const std::vector<std::vector<int>>& permutations_of(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> all;
    do {
        all.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(n, std::move(all)).first->second;
}

// Upper-triangle pairs in the graph6 column order (0,1),(0,2),(1,2),(0,3),...
const std::vector<std::pair<int, int>>& pair_order(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::pair<int, int>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<int, int>> pairs;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) pairs.emplace_back(row, col);
    return cache.emplace(n, std::move(pairs)).first->second;
}

std::uint64_t canonical_code_rows(const std::vector<std::uint64_t>& rows, int n) {
    const auto& perms = permutations_of(n);
    const auto& pairs = pair_order(n);
    const int nbits = static_cast<int>(pairs.size());
    if (nbits == 0) return 0;

    std::uint64_t best = ~std::uint64_t{0} >> (64 - nbits);
    for (const auto& perm : perms) {
        std::uint64_t code = 0;
        int t = 0;
        bool worse = false;
        for (const auto& [row, col] : pairs) {
            const std::uint64_t bit =
                (rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(row)])] >>
                 perm[static_cast<std::size_t>(col)]) &
                1u;
            code = (code << 1) | bit;
            ++t;
            // A strictly larger prefix can never recover.
            if (code > (best >> (nbits - t))) {
                worse = true;
                break;
            }
        }
        if (!worse && code < best) best = code;
    }
    return best;
}

Graph graph_from_code(std::uint64_t code, int n) {
    const auto& pairs = pair_order(n);
    const int nbits = static_cast<int>(pairs.size());
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < nbits; ++b)
        if ((code >> (nbits - 1 - b)) & 1) edges.push_back(pairs[static_cast<std::size_t>(b)]);
    return Graph::from_edge_list(n, edges);
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw std::domain_error("canonical_code supports order <= " +
                                std::to_string(kCanonicalCap));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    return canonical_code_rows(rows, g.order());
}

const std::vector<Graph>& generate_all_nonisomorphic(int n) {
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    if (n > kGeneratorCap)
        throw std::domain_error(
            "the built-in generator is capped at order " + std::to_string(kGeneratorCap) +
            "; supply an external graph6 stream for larger orders");

    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Grow order by order: every class of order k arises from some class of
    // order k-1 by attaching a new vertex with some neighbourhood.
    std::vector<std::set<std::uint64_t>> codes(static_cast<std::size_t>(n) + 1);
    codes[0].insert(0);
    for (int k = 1; k <= n; ++k) {
        for (std::uint64_t parent_code : codes[static_cast<std::size_t>(k - 1)]) {
            const Graph parent = graph_from_code(parent_code, k - 1);
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
            for (int v = 0; v < k - 1; ++v)
                rows[static_cast<std::size_t>(v)] = parent.neighbors(v).bits();
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                for (int v = 0; v < k - 1; ++v) {
                    if ((nb >> v) & 1)
                        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (k - 1);
                    else
                        rows[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << (k - 1));
                }
                rows[static_cast<std::size_t>(k - 1)] = nb;
                codes[static_cast<std::size_t>(k)].insert(canonical_code_rows(rows, k));
            }
        }
        if (k >= 1 && codes[static_cast<std::size_t>(k)].size() != kClassCounts[k - 1])
            throw std::logic_error("class enumeration mismatch at order " + std::to_string(k) +
                                   ": got " +
                                   std::to_string(codes[static_cast<std::size_t>(k)].size()) +
                                   ", expected " + std::to_string(kClassCounts[k - 1]));
    }

    std::vector<Graph> out;
    out.reserve(codes[static_cast<std::size_t>(n)].size());
    for (std::uint64_t code : codes[static_cast<std::size_t>(n)])
        out.push_back(graph_from_code(code, n));
    return cache.emplace(n, std::move(out)).first->second;
}

ExtremalResult search(const std::vector<Graph>& stream, const SearchConstraint& constraint,
                      int workers) {
    struct Local {
        bool any = false;
        Rational best;
        std::vector<std::uint64_t> argmax_indices;
        std::uint64_t examined = 0;
    };
    auto parts = run_partitioned<Local>(
        stream.size(), resolve_workers(workers), [&](int, std::uint64_t lo, std::uint64_t hi) {
            Local local;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const Graph& g = stream[static_cast<std::size_t>(i)];
                if (!constraint.admits(g)) continue;
                ++local.examined;
                const Rational value = average_order(g).average;
                if (!local.any || value > local.best) {
                    local.any = true;
                    local.best = value;
                    local.argmax_indices.assign(1, i);
                } else if (value == local.best) {
                    local.argmax_indices.push_back(i);
                }
            }
            return local;
        });

    Local merged;
    for (const Local& part : parts) {
        merged.examined += part.examined;
        if (!part.any) continue;
        if (!merged.any || part.best > merged.best) {
            merged.any = part.any;
            merged.best = part.best;
            merged.argmax_indices = part.argmax_indices;
        } else if (part.best == merged.best) {
            merged.argmax_indices.insert(merged.argmax_indices.end(), part.argmax_indices.begin(),
                                         part.argmax_indices.end());
        }
    }
    if (!merged.any)
        throw std::runtime_error("no graph in the stream satisfies the constraint (" +
                                 constraint.describe() + ")");

    ExtremalResult result;
    result.best_avd = merged.best;
    result.examined = merged.examined;
    std::sort(merged.argmax_indices.begin(), merged.argmax_indices.end());
    for (std::uint64_t i : merged.argmax_indices)
        result.argmax.push_back(encode_graph6(stream[static_cast<std::size_t>(i)]));
    return result;
}

TheoremReport verify_main_theorem(int n, int workers) {
    const std::vector<Graph>& all = generate_all_nonisomorphic(n);
    struct Local {
        std::uint64_t examined = 0;
        bool all_hold = true;
        bool equality_matches = true;
        std::vector<std::string> equality, connected_equality;
    };
    auto parts = run_partitioned<Local>(
        all.size(), resolve_workers(workers), [&](int, std::uint64_t lo, std::uint64_t hi) {
            Local local;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const Graph& g = all[static_cast<std::size_t>(i)];
                if (!g.isolated_vertices().empty()) continue;
                ++local.examined;
                const BoundReport report = check_bound(g);
                if (report.verdict == BoundVerdict::violated) local.all_hold = false;
                if (!report.equality_matches_star_like) local.equality_matches = false;
                if (report.verdict == BoundVerdict::holds_equality) {
                    local.equality.push_back(encode_graph6(g));
                    if (g.connected()) local.connected_equality.push_back(encode_graph6(g));
                }
            }
            return local;
        });

    TheoremReport report;
    report.n = n;
    report.bound_holds_all = true;
    report.equality_set_is_star_like = true;
    for (Local& part : parts) {
        report.examined += part.examined;
        report.bound_holds_all = report.bound_holds_all && part.all_hold;
        report.equality_set_is_star_like =
            report.equality_set_is_star_like && part.equality_matches;
        for (std::string& s : part.equality) report.equality_graph6.push_back(std::move(s));
        for (std::string& s : part.connected_equality)
            report.connected_equality_graph6.push_back(std::move(s));
    }
    return report;
}

} // namespace domavg
