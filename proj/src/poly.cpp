#include "domavg/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "domavg/graph6.hpp"
#include "domavg/parallel.hpp"

namespace domavg {

namespace {

// Little-endian rational polynomials for the Sturm machinery. Degrees stay
// at most the graph order, so plain Euclid with monic remainders is plenty.
using RatPoly = std::vector<Rational>;

void strip_leading_zeros(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(i) * p[i]);
    strip_leading_zeros(out);
    return out;
}

void make_monic(RatPoly& p) {
    if (p.empty()) return;
    const Rational lead = p.back();
    for (Rational& c : p) c /= lead;
}

// Remainder of a by b (b nonzero).
RatPoly poly_mod(RatPoly a, const RatPoly& b) {
    while (degree(a) >= degree(b) && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        strip_leading_zeros(a);
    }
    return a;
}

// Exact quotient; throws if the division leaves a remainder.
RatPoly poly_div_exact(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (degree(a) >= degree(b) && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        strip_leading_zeros(a);
    }
    if (!a.empty()) throw std::logic_error("polynomial division expected to be exact");
    strip_leading_zeros(q);
    return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    strip_leading_zeros(a);
    strip_leading_zeros(b);
    while (!b.empty()) {
        RatPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

int sign_of(const Rational& r) {
    if (r == 0) return 0;
    return r < 0 ? -1 : 1;
}

// Number of distinct real roots of a squarefree polynomial, from the sign
// variations of its Sturm chain at -infinity and +infinity.
int sturm_distinct_real_roots(const RatPoly& squarefree) {
    if (degree(squarefree) <= 0) return 0;
    std::vector<RatPoly> chain;
    chain.push_back(squarefree);
    chain.push_back(derivative(squarefree));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
        for (Rational& c : r) c = -c;
        if (r.empty()) throw std::logic_error("Sturm chain hit a zero remainder on squarefree input");
        chain.push_back(std::move(r));
    }

    int variations_neg = 0, variations_pos = 0;
    int prev_neg = 0, prev_pos = 0;
    for (const RatPoly& p : chain) {
        const int lead = sign_of(p.back());
        const int at_pos = lead;
        const int at_neg = degree(p) % 2 == 0 ? lead : -lead;
        if (prev_pos != 0 && at_pos != prev_pos) ++variations_pos;
        if (prev_neg != 0 && at_neg != prev_neg) ++variations_neg;
        prev_pos = at_pos;
        prev_neg = at_neg;
    }
    return variations_neg - variations_pos;
}

RatPoly to_rat_poly(const std::vector<BigInt>& coeffs) {
    RatPoly p;
    p.reserve(coeffs.size());
    for (const BigInt& c : coeffs) p.push_back(Rational(c));
    strip_leading_zeros(p);
    return p;
}

// Splits x^t * r with r(0) != 0; returns t and replaces p by r.
int strip_zero_roots(RatPoly& p) {
    int t = 0;
    while (!p.empty() && p.front() == 0) {
        p.erase(p.begin());
        ++t;
    }
    return t;
}

RatPoly squarefree_part(const RatPoly& p) {
    const RatPoly g = poly_gcd(p, derivative(p));
    if (degree(g) <= 0) return p;
    return poly_div_exact(p, g);
}

} // namespace

bool real_rooted_exact(const std::vector<BigInt>& coeffs) {
    RatPoly p = to_rat_poly(coeffs);
    if (p.empty()) throw std::invalid_argument("real-rootedness undefined for the zero polynomial");
    strip_zero_roots(p); // roots at 0 are real
    if (degree(p) <= 1) return true;
    const RatPoly q = squarefree_part(p);
    return sturm_distinct_real_roots(q) == degree(q);
}

int count_real_roots_with_multiplicity(const std::vector<BigInt>& coeffs) {
    RatPoly p = to_rat_poly(coeffs);
    if (p.empty()) throw std::invalid_argument("root count undefined for the zero polynomial");
    int total = 0;
    while (degree(p) > 0) {
        total += strip_zero_roots(p);
        if (degree(p) <= 0) break;
        const RatPoly g = poly_gcd(p, derivative(p));
        const RatPoly q = degree(g) <= 0 ? p : poly_div_exact(p, g);
        total += sturm_distinct_real_roots(q);
        p = g;
    }
    return total;
}

std::vector<int> mode_indices_of(const std::vector<BigInt>& coeffs) {
    BigInt best = -1;
    for (const BigInt& c : coeffs) best = std::max(best, c);
    std::vector<int> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] == best) out.push_back(static_cast<int>(k));
    return out;
}

bool is_unimodal(const std::vector<BigInt>& coeffs) {
    bool descending = false;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k] < coeffs[k - 1]) descending = true;
        else if (coeffs[k] > coeffs[k - 1] && descending) return false;
    }
    return true;
}

PolyReport analyze(const Graph& g, int cap, int workers) {
    PolyReport report;
    report.coefficients = tally_fast(g, cap, workers);
    report.mode_indices = mode_indices_of(report.coefficients.d);
    report.unimodal = is_unimodal(report.coefficients.d);
    report.real_rooted = real_rooted_exact(report.coefficients.d);
    if (report.real_rooted && g.order() >= 1) {
        const AvdSummary avd = average_order(report.coefficients);
        const BigInt lo = floor_of(avd.average);
        const BigInt hi = ceil_of(avd.average);
        bool hit = false;
        for (int k : report.mode_indices)
            if (BigInt(k) == lo || BigInt(k) == hi) hit = true;
        report.darroch_consistent = hit;
    }
    return report;
}

bool avd_equals_logderivative(const Graph& g, int workers) {
    const DominationTally tally = tally_fast(g, kDefaultFastCap, workers);
    Rational weighted = 0, total = 0;
    for (int k = 0; k <= tally.n; ++k) {
        weighted += Rational(k) * Rational(tally.d[static_cast<std::size_t>(k)]);
        total += Rational(tally.d[static_cast<std::size_t>(k)]);
    }
    return weighted / total == average_order(g, workers).average;
}

ModeSurveyReport max_mode_survey(const std::vector<Graph>& graphs, int n, int workers) {
    if (graphs.empty())
        throw std::invalid_argument("max_mode_survey requires a nonempty graph stream");
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() != n)
            throw std::invalid_argument("stream graph " + std::to_string(i) + " has order " +
                                        std::to_string(graphs[i].order()) + ", expected " +
                                        std::to_string(n));
        if (!graphs[i].isolated_vertices().empty())
            throw std::invalid_argument("stream graph " + std::to_string(i) +
                                        " has an isolated vertex");
    }

    using Rows = std::vector<ModeSurveyRow>;
    auto parts = run_partitioned<Rows>(
        graphs.size(), resolve_workers(workers), [&](int, std::uint64_t lo, std::uint64_t hi) {
            Rows rows;
            rows.reserve(static_cast<std::size_t>(hi - lo));
            for (std::uint64_t i = lo; i < hi; ++i) {
                const Graph& g = graphs[static_cast<std::size_t>(i)];
                ModeSurveyRow row;
                row.graph6 = encode_graph6(g);
                row.mode_indices = mode_indices_of(tally_fast(g).d);
                row.largest_mode = row.mode_indices.back();
                row.star_like = stem_structure(g).star_like;
                rows.push_back(std::move(row));
            }
            return rows;
        });

    ModeSurveyReport report;
    report.n = n;
    for (Rows& part : parts)
        for (ModeSurveyRow& row : part) report.rows.push_back(std::move(row));
    report.max_mode_index = 0;
    for (const ModeSurveyRow& row : report.rows)
        report.max_mode_index = std::max(report.max_mode_index, row.largest_mode);
    for (const ModeSurveyRow& row : report.rows) {
        if (row.largest_mode == report.max_mode_index) {
            report.attaining.push_back(row.graph6);
            if (row.star_like) report.star_like_attains = true;
        }
    }
    return report;
}

} // namespace domavg
