#include "domavg/domination.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

#include "domavg/parallel.hpp"

namespace domavg {

const BigInt& binomial(int n, int k) {
    static const BigInt zero = 0;
    static std::array<std::array<BigInt, VertexSet::max_vertices + 1>, VertexSet::max_vertices + 1> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 0; i <= VertexSet::max_vertices; ++i) {
            table[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    });
    if (n < 0 || k < 0 || k > n || n > VertexSet::max_vertices) return zero;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

int DominationTally::gamma() const {
    for (int k = 0; k <= n; ++k)
        if (d[static_cast<std::size_t>(k)] > 0) return k;
    throw std::logic_error("empty domination tally");
}

BigInt DominationTally::total() const {
    BigInt sum = 0;
    for (const BigInt& c : d) sum += c;
    return sum;
}

BigInt DominationTally::weighted_total() const {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += k * d[static_cast<std::size_t>(k)];
    return sum;
}

const char* to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::holds_strict: return "holds_strict";
        case BoundVerdict::holds_equality: return "holds_equality";
        case BoundVerdict::violated: return "violated";
        case BoundVerdict::not_applicable: return "not_applicable";
    }
    return "?";
}

bool is_dominating(const Graph& g, VertexSet s) {
    g.require_subset(s);
    return g.closed_neighborhood(s) == g.vertices();
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (cap > VertexSet::max_vertices) cap = VertexSet::max_vertices;
    if (g.order() > cap)
        throw std::domain_error(std::string(what) + " refuses order " +
                                std::to_string(g.order()) + " (cap " + std::to_string(cap) +
                                "); raise the cap explicitly if the runtime is acceptable");
}

} // namespace

DominationTally tally_bruteforce(const Graph& g, int cap, int workers) {
    if (cap > 62) cap = 62; // the mask walk itself needs 2^n to fit a word
    check_cap(g, cap, "tally_bruteforce");
    const int n = g.order();

    DominationTally tally;
    tally.n = n;
    tally.d.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
        tally.d[0] = 1; // the empty set dominates the empty graph
        return tally;
    }

    std::array<std::uint64_t, VertexSet::max_vertices + 1> cn{};
    for (int v = 0; v < n; ++v) cn[static_cast<std::size_t>(v)] = g.closed_neighbors(v).bits();

    // Gray-code walk over all subsets with incremental cover counts: each
    // step toggles one vertex and touches only its closed neighbourhood.
    // Ranges of the walk partition cleanly across workers.
    const std::uint64_t total = std::uint64_t{1} << n;
    using Counts = std::vector<std::uint64_t>;
    auto counts = run_partitioned<Counts>(
        total, resolve_workers(workers), [&](int, std::uint64_t lo, std::uint64_t hi) {
            Counts local(static_cast<std::size_t>(n) + 1, 0);
            if (lo >= hi) return local;
            std::array<std::uint8_t, VertexSet::max_vertices> cover{};
            int covered = 0;
            std::uint64_t subset = lo ^ (lo >> 1);
            for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                for (std::uint64_t r2 = cn[static_cast<std::size_t>(v)]; r2 != 0; r2 &= r2 - 1)
                    if (cover[static_cast<std::size_t>(std::countr_zero(r2))]++ == 0) ++covered;
            }
            if (covered == n) ++local[static_cast<std::size_t>(std::popcount(subset))];
            for (std::uint64_t index = lo + 1; index < hi; ++index) {
                const int v = std::countr_zero(index);
                const std::uint64_t vbit = std::uint64_t{1} << v;
                if (subset & vbit) {
                    for (std::uint64_t r2 = cn[static_cast<std::size_t>(v)]; r2 != 0;
                         r2 &= r2 - 1)
                        if (--cover[static_cast<std::size_t>(std::countr_zero(r2))] == 0)
                            --covered;
                } else {
                    for (std::uint64_t r2 = cn[static_cast<std::size_t>(v)]; r2 != 0;
                         r2 &= r2 - 1)
                        if (cover[static_cast<std::size_t>(std::countr_zero(r2))]++ == 0)
                            ++covered;
                }
                subset ^= vbit;
                if (covered == n) ++local[static_cast<std::size_t>(std::popcount(subset))];
            }
            return local;
        });

    for (const Counts& local : counts)
        for (int k = 0; k <= n; ++k) tally.d[static_cast<std::size_t>(k)] += local[static_cast<std::size_t>(k)];
    return tally;
}

namespace {

// Parity-split histogram of |N[T]| over witness sets T with N[T] != V.
// Buckets with |N[T]| = n are never materialised: they cancel for k >= 1
// and only feed d_0, which is 0 for any nonempty graph.
struct WitnessBuckets {
    std::vector<std::uint64_t> even, odd;

    WitnessBuckets() = default;
    explicit WitnessBuckets(int n)
        : even(static_cast<std::size_t>(n) + 1, 0), odd(static_cast<std::size_t>(n) + 1, 0) {}

    WitnessBuckets& operator+=(const WitnessBuckets& o) {
        for (std::size_t i = 0; i < even.size(); ++i) {
            even[i] += o.even[i];
            odd[i] += o.odd[i];
        }
        return *this;
    }
};

void witness_dfs(const std::array<std::uint64_t, VertexSet::max_vertices>& cn, int n,
                 std::uint64_t full, int v, int parity, std::uint64_t nbhd,
                 WitnessBuckets& out) {
    if (nbhd == full) return; // every superset stays saturated and cancels
    if (v == n) {
        auto& bucket = parity == 0 ? out.even : out.odd;
        ++bucket[static_cast<std::size_t>(std::popcount(nbhd))];
        return;
    }
    witness_dfs(cn, n, full, v + 1, parity, nbhd, out);
    witness_dfs(cn, n, full, v + 1, parity ^ 1, nbhd | cn[static_cast<std::size_t>(v)], out);
}

} // namespace

DominationTally tally_fast(const Graph& g, int cap, int workers) {
    check_cap(g, cap, "tally_fast");
    const int n = g.order();

    DominationTally tally;
    tally.n = n;
    tally.d.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
        tally.d[0] = 1;
        return tally;
    }

    const std::uint64_t full = g.vertices().bits();
    std::array<std::uint64_t, VertexSet::max_vertices> cn{};
    for (int v = 0; v < n; ++v) cn[static_cast<std::size_t>(v)] = g.closed_neighbors(v).bits();

    workers = resolve_workers(workers);
    int prefix_bits = 0;
    while (prefix_bits < n && (1 << prefix_bits) < 4 * workers) ++prefix_bits;
    const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;

    auto parts = run_partitioned<WitnessBuckets>(
        prefixes, workers, [&](int, std::uint64_t lo, std::uint64_t hi) {
            WitnessBuckets local(n);
            for (std::uint64_t p = lo; p < hi; ++p) {
                std::uint64_t nbhd = 0;
                for (std::uint64_t rest = p; rest != 0; rest &= rest - 1)
                    nbhd |= cn[static_cast<std::size_t>(std::countr_zero(rest))];
                if (nbhd == full) continue;
                witness_dfs(cn, n, full, prefix_bits, std::popcount(p) & 1, nbhd, local);
            }
            return local;
        });
    WitnessBuckets buckets(n);
    for (const WitnessBuckets& part : parts) buckets += part;

    // d_k = sum over covered-size m of (even - odd counts) * C(n - m, k).
    for (int m = 0; m < n; ++m) {
        const BigInt signed_count =
            BigInt(buckets.even[static_cast<std::size_t>(m)]) - BigInt(buckets.odd[static_cast<std::size_t>(m)]);
        if (signed_count == 0) continue;
        for (int k = 1; k <= n - m; ++k)
            tally.d[static_cast<std::size_t>(k)] += signed_count * binomial(n - m, k);
    }
    return tally;
}

AvdSummary average_order(const DominationTally& tally) {
    if (tally.n == 0)
        throw std::domain_error("average order undefined for the order-0 graph");
    AvdSummary s;
    s.n = tally.n;
    s.gamma_total = tally.total();
    s.gamma_weighted = tally.weighted_total();
    s.average = Rational(s.gamma_weighted, s.gamma_total);
    return s;
}

AvdSummary average_order(const Graph& g, int workers) {
    return average_order(tally_fast(g, kDefaultFastCap, workers));
}

BoundReport check_bound(const Graph& g, int workers) {
    BoundReport report;
    report.n = g.order();
    report.isolated_count = g.isolated_vertices().count();
    if (g.order() < 2) {
        report.verdict = BoundVerdict::not_applicable;
        return report;
    }
    const AvdSummary avd = average_order(g, workers);
    report.average = avd.average;
    const int n = g.order();
    const int r = report.isolated_count;
    report.bound = Rational(2 * n + r, 3);

    // Exact comparison: 3*Gamma' vs (2n+r)*Gamma.
    const BigInt lhs = 3 * avd.gamma_weighted;
    const BigInt rhs = BigInt(2 * n + r) * avd.gamma_total;
    if (lhs < rhs)
        report.verdict = BoundVerdict::holds_strict;
    else if (lhs == rhs)
        report.verdict = BoundVerdict::holds_equality;
    else
        report.verdict = BoundVerdict::violated;

    if (r == 0) {
        report.star_like = stem_structure(g).star_like;
        report.equality_matches_star_like =
            (report.verdict == BoundVerdict::holds_equality) == report.star_like;
    }
    return report;
}

void validate_tally(const DominationTally& tally) {
    const int n = tally.n;
    if (static_cast<int>(tally.d.size()) != n + 1)
        throw std::logic_error("tally size mismatch");
    for (int k = 0; k <= n; ++k) {
        const BigInt& c = tally.d[static_cast<std::size_t>(k)];
        if (c < 0 || c > binomial(n, k))
            throw std::logic_error("tally d[" + std::to_string(k) + "] outside [0, C(n,k)]");
    }
    if (tally.d[static_cast<std::size_t>(n)] != 1)
        throw std::logic_error("d[n] must be 1: the whole vertex set dominates");
    bool seen = false;
    for (int k = 0; k <= n; ++k) {
        const bool pos = tally.d[static_cast<std::size_t>(k)] > 0;
        if (seen && !pos)
            throw std::logic_error("tally support not contiguous at k=" + std::to_string(k));
        seen = seen || pos;
    }
}

} // namespace domavg
