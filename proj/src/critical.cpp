#include "domavg/critical.hpp"

#include <stdexcept>

#include "domavg/parallel.hpp"

namespace domavg {

namespace {

void check_enumeration_cap(const Graph& g, int cap, const char* what) {
    if (cap > 62) cap = 62;
    if (g.order() > cap)
        throw std::domain_error(std::string(what) + " refuses order " +
                                std::to_string(g.order()) + " (enumeration cap " +
                                std::to_string(cap) + ")");
}

bool in_family(const StemStructure& stems, const StemFamily& family, VertexSet s) {
    for (const Stem& st : stems.stems) {
        const bool should_break = family.stems_in_i.contains(st.vertex);
        const bool broken = !st.closed_leaves().subset_of(s);
        if (should_break != broken) return false;
    }
    return true;
}

} // namespace

SetProfile profile(const Graph& g, VertexSet s) {
    g.require_subset(s);
    if (!is_dominating(g, s))
        throw std::invalid_argument("profile requires a dominating set, got " + s.to_string());
    SetProfile p;
    p.s = s;
    for (int v : s) {
        VertexSet without = s;
        without.remove(v);
        if (!is_dominating(g, without)) p.a.add(v);
    }
    for (int v : g.vertices() - s) {
        const int c = (g.closed_neighbors(v) & s).count();
        (c == 1 ? p.n1 : p.n2).add(v);
    }
    for (int v : p.a) (g.neighbors(v).intersects(p.n1) ? p.a1 : p.a2).add(v);
    return p;
}

StemFamily make_family(const Graph& g, const StemStructure& stems, VertexSet stems_in_i) {
    g.require_subset(stems_in_i);
    if (!stems_in_i.subset_of(stems.stem_vertices))
        throw std::invalid_argument("family index " + stems_in_i.to_string() +
                                    " contains non-stem vertices");
    StemFamily f;
    f.stems_in_i = stems_in_i;
    for (const Stem& st : stems.stems)
        if (stems_in_i.contains(st.vertex)) f.excluded |= st.closed_leaves();
    f.v_i = g.vertices() - f.excluded;
    return f;
}

CriticalAggregates aggregates(const Graph& g, VertexSet window,
                              const std::optional<StemFamily>& family, int cap, int workers) {
    check_enumeration_cap(g, cap, "aggregates");
    g.require_subset(window);
    const StemStructure stems = stem_structure(g);
    const int n = g.order();
    const std::uint64_t total = std::uint64_t{1} << n;

    auto parts = run_partitioned<CriticalAggregates>(
        total, resolve_workers(workers), [&](int, std::uint64_t lo, std::uint64_t hi) {
            CriticalAggregates acc;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                const VertexSet s{mask};
                if (!is_dominating(g, s)) continue;
                if (family && !in_family(stems, *family, s)) continue;
                const SetProfile p = profile(g, s);
                acc.sum_a += (p.a & window).count();
                acc.sum_a1 += (p.a1 & window).count();
                acc.sum_a2 += (p.a2 & window).count();
                acc.sum_n1 += (p.n1 & window).count();
                acc.sum_n2 += (p.n2 & window).count();
                acc.sum_n += ((p.n1 | p.n2) & window).count();
                acc.family_size += 1;
            }
            return acc;
        });

    CriticalAggregates out;
    for (const CriticalAggregates& p : parts) {
        out.sum_a += p.sum_a;
        out.sum_a1 += p.sum_a1;
        out.sum_a2 += p.sum_a2;
        out.sum_n += p.sum_n;
        out.sum_n1 += p.sum_n1;
        out.sum_n2 += p.sum_n2;
        out.family_size += p.family_size;
    }
    return out;
}

std::vector<CheckReport> verify_critical_sum_identities(const Graph& g, int cap, int workers) {
    const CriticalAggregates agg = aggregates(g, g.vertices(), std::nullopt, cap, workers);
    const DominationTally tally = tally_fast(g, kDefaultFastCap, workers);
    const BigInt gamma_total = tally.total();
    const BigInt gamma_weighted = tally.weighted_total();
    const int n = g.order();

    CheckReport sum_a;
    sum_a.check = "critical_sum";
    sum_a.lhs = agg.sum_a;
    sum_a.rhs = 2 * gamma_weighted - n * gamma_total;
    sum_a.holds = sum_a.lhs == sum_a.rhs;

    CheckReport sum_n;
    sum_n.check = "neighborhood_sum";
    sum_n.lhs = agg.sum_n;
    sum_n.rhs = n * gamma_total - gamma_weighted;
    sum_n.holds = sum_n.lhs == sum_n.rhs;

    return {sum_a, sum_n};
}

CheckReport verify_a1_le_n1(const Graph& g, int cap) {
    check_enumeration_cap(g, cap, "verify_a1_le_n1");
    CheckReport report;
    report.check = "a1_le_n1";
    const int n = g.order();
    BigInt total_a1 = 0, total_n1 = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s{mask};
        if (!is_dominating(g, s)) continue;
        const SetProfile p = profile(g, s);
        if (p.a1.count() > p.n1.count()) {
            report.holds = false;
            report.lhs = p.a1.count();
            report.rhs = p.n1.count();
            report.witness = p;
            return report;
        }
        total_a1 += p.a1.count();
        total_n1 += p.n1.count();
    }
    report.lhs = total_a1;
    report.rhs = total_n1;
    return report;
}

CheckReport verify_deg2_inequality(const Graph& g, int v, int cap, int workers) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    CheckReport report;
    report.check = "deg2_pair_count";
    const int deg = g.degree(v);
    if (deg < 2) {
        report.applicable = false;
        report.note = "vertex degree below 2";
        return report;
    }
    const VertexSet window = VertexSet::single(v);
    const CriticalAggregates agg = aggregates(g, window, std::nullopt, cap, workers);
    const BigInt multiplier = (BigInt(1) << deg) - deg - 1;
    report.lhs = multiplier * agg.sum_a2;
    report.rhs = agg.sum_n2;
    report.holds = report.lhs < report.rhs;
    return report;
}

std::vector<StemFamilyIndex> stem_families(const Graph& g, int cap) {
    check_enumeration_cap(g, cap, "stem_families");
    const StemStructure stems = stem_structure(g);
    const int omega = stems.omega;
    if (omega > 20)
        throw std::domain_error("stem_families refuses " + std::to_string(omega) +
                                " stems (2^omega families)");

    // Count family sizes in one scan: each dominating set lands in the
    // unique I = {s : L[s] not in S}.
    std::vector<BigInt> sizes(std::size_t{1} << omega, 0);
    const int n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s{mask};
        if (!is_dominating(g, s)) continue;
        std::size_t index = 0;
        for (int i = 0; i < omega; ++i)
            if (!stems.stems[static_cast<std::size_t>(i)].closed_leaves().subset_of(s))
                index |= std::size_t{1} << i;
        sizes[index] += 1;
    }

    std::vector<StemFamilyIndex> out;
    out.reserve(sizes.size());
    for (std::size_t index = 0; index < sizes.size(); ++index) {
        VertexSet in_i;
        for (int i = 0; i < omega; ++i)
            if ((index >> i) & 1) in_i.add(stems.stems[static_cast<std::size_t>(i)].vertex);
        out.push_back(StemFamilyIndex{make_family(g, stems, in_i), sizes[index]});
    }
    return out;
}

CheckReport verify_kstem_inequality(const Graph& g, VertexSet stems_in_i, int stem_vertex,
                                    int cap, int workers) {
    const StemStructure stems = stem_structure(g);
    const Stem* st = stems.stem_at(stem_vertex);
    if (st == nullptr)
        throw std::invalid_argument("vertex " + std::to_string(stem_vertex) + " is not a stem");
    if (!stems_in_i.contains(stem_vertex))
        throw std::invalid_argument("stem " + std::to_string(stem_vertex) +
                                    " must belong to the family index I");
    const StemFamily family = make_family(g, stems, stems_in_i);
    const CriticalAggregates agg =
        aggregates(g, st->closed_leaves(), family, cap, workers);

    CheckReport report;
    report.check = "kstem_pair_count";
    report.lhs = agg.sum_a;
    report.rhs = agg.sum_n1 + agg.sum_n2;
    const int k = st->leaf_count;
    if (agg.family_size == 0) {
        report.holds = true;
        report.note = "family X_I is empty; holds vacuously";
    } else if (k >= 3) {
        report.holds = report.lhs < report.rhs;
        report.note = "strict inequality required for a " + std::to_string(k) + "-stem";
    } else {
        report.holds = report.lhs <= report.rhs;
    }
    return report;
}

CheckReport verify_restricted_a1(const Graph& g, VertexSet stems_in_i, int cap, int workers) {
    const StemStructure stems = stem_structure(g);
    const StemFamily family = make_family(g, stems, stems_in_i);
    const CriticalAggregates agg = aggregates(g, family.v_i, family, cap, workers);
    CheckReport report;
    report.check = "restricted_a1_pair_count";
    report.lhs = agg.sum_a1;
    report.rhs = agg.sum_n1;
    report.holds = report.lhs <= report.rhs;
    if (agg.family_size == 0) report.note = "family X_I is empty; holds vacuously";
    return report;
}

CheckReport verify_equivalence_avd_bound(const Graph& g, int cap, int workers) {
    const CriticalAggregates agg = aggregates(g, g.vertices(), std::nullopt, cap, workers);
    const AvdSummary avd = average_order(g, workers);
    const int n = g.order();

    const bool sum_side = agg.sum_a <= agg.sum_n;
    const bool avd_side = 3 * avd.gamma_weighted <= BigInt(2 * n) * avd.gamma_total;

    CheckReport report;
    report.check = "critical_vs_bound_equivalence";
    report.lhs = agg.sum_a;
    report.rhs = agg.sum_n;
    report.holds = sum_side == avd_side;
    report.note = sum_side ? "both sides affirm avd <= 2n/3" : "both sides deny avd <= 2n/3";
    if (!report.holds) report.note = "equivalence broken between pair sums and the exact bound";
    return report;
}

} // namespace domavg
