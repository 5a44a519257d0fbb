#ifndef NDL_ANOMALY_HPP
#define NDL_ANOMALY_HPP

#include <vector>

#include "ndl/graph.hpp"
#include "ndl/profiles.hpp"

namespace ndl {

// Per-vertex shell profile: shells[k-1] = N_kDL(v) for k = 1..k_max
// (empty past the eccentricity). BFS only; scales past canonicalization
// sizes.
struct FeatureVector {
    int vertex = 0;
    std::vector<DegreeList> shells;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct AnomalyScore {
    int vertex = 0;
    int degree = 0;
    double score = 0.0;  // 0 when the vertex has no same-degree peers
    int cohort_size = 0; // vertices sharing this degree, the vertex included
};

FeatureVector feature(const Graph& g, int v, int k_max);

// Zero-pad the shorter list, then sum |a_i - b_i| / (1 + max length).
// Symmetric, zero iff the lists are equal.
double shell_distance(const DegreeList& a, const DegreeList& b);

// score(v) = median over same-degree peers u of
//   sum_k 2^(1-k) * shell_distance(shells_v[k], shells_u[k]).
// Output sorted by (score descending, vertex ascending).
std::vector<AnomalyScore> anomaly_scores(const Graph& g, int k_max);

} // namespace ndl

#endif
