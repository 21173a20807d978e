#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domavg/domination.hpp"
#include "domavg/graph.hpp"
#include "domavg/numbers.hpp"

namespace domavg {

// Coefficient analytics for the domination polynomial sum d_k x^k.
struct PolyReport {
    DominationTally coefficients;
    std::vector<int> mode_indices; // full argmax set of the coefficients
    bool unimodal = false;
    bool real_rooted = false;
    // Present iff real_rooted: whether some mode index lies in
    // {floor(avd), ceil(avd)}.
    std::optional<bool> darroch_consistent;
};

PolyReport analyze(const Graph& g, int cap = kDefaultFastCap, int workers = 1);

// Confirms sum k*d_k / sum d_k equals the reported average order exactly.
bool avd_equals_logderivative(const Graph& g, int workers = 1);

struct ModeSurveyRow {
    std::string graph6;
    int largest_mode = 0;
    std::vector<int> mode_indices;
    bool star_like = false;
};

struct ModeSurveyReport {
    int n = 0;
    int max_mode_index = 0;
    std::vector<std::string> attaining; // graph6 of graphs reaching the max
    bool star_like_attains = false;
    std::vector<ModeSurveyRow> rows;
};

// Largest mode index over a stream of graphs of order n without isolated
// vertices; ties within one polynomial resolve to the largest index.
ModeSurveyReport max_mode_survey(const std::vector<Graph>& graphs, int n, int workers = 1);

// Exact decision procedures on integer polynomials (little-endian
// coefficients). Exposed so tests can exercise them directly.
bool real_rooted_exact(const std::vector<BigInt>& coeffs);
int count_real_roots_with_multiplicity(const std::vector<BigInt>& coeffs);

bool is_unimodal(const std::vector<BigInt>& coeffs);
std::vector<int> mode_indices_of(const std::vector<BigInt>& coeffs);

} // namespace domavg
