#include "ndl/anomaly.hpp"

#include <algorithm>
#include <cmath>

namespace ndl {

FeatureVector feature(const Graph& g, int v, int k_max) {
    if (k_max < 1)
        throw Error(ErrorCode::out_of_range, "k_max must be >= 1");
    auto d = bfs_distances(g, v); // single pass; shells bucketed from it
    std::vector<std::vector<int>> buckets(k_max);
    for (int u = 0; u < g.vertex_count(); ++u) {
        int dist = d.dist[u];
        if (dist >= 1 && dist <= k_max)
            buckets[dist - 1].push_back(g.degree(u));
    }
    FeatureVector f;
    f.vertex = v;
    f.shells.reserve(k_max);
    for (auto& b : buckets)
        f.shells.push_back(DegreeList::from_unsorted(std::move(b)));
    return f;
}

double shell_distance(const DegreeList& a, const DegreeList& b) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    size_t len = std::max(x.size(), y.size());
    if (len == 0)
        return 0.0;
    long long sum = 0;
    for (size_t i = 0; i < len; ++i) {
        int xi = i < x.size() ? x[i] : 0;
        int yi = i < y.size() ? y[i] : 0;
        sum += std::abs(xi - yi);
    }
    return static_cast<double>(sum) / (1.0 + static_cast<double>(len));
}

namespace {

double feature_distance(const FeatureVector& a, const FeatureVector& b) {
    double total = 0.0;
    double weight = 1.0; // 2^(1-k)
    for (size_t k = 0; k < a.shells.size(); ++k) {
        total += weight * shell_distance(a.shells[k], b.shells[k]);
        weight *= 0.5;
    }
    return total;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    size_t m = values.size() / 2;
    if (values.size() % 2 == 1)
        return values[m];
    return 0.5 * (values[m - 1] + values[m]);
}

} // namespace

std::vector<AnomalyScore> anomaly_scores(const Graph& g, int k_max) {
    if (k_max < 1)
        throw Error(ErrorCode::out_of_range, "k_max must be >= 1");
    int n = g.vertex_count();

    std::vector<FeatureVector> features;
    features.reserve(n);
    for (int v = 0; v < n; ++v)
        features.push_back(feature(g, v, k_max));

    std::vector<std::vector<int>> cohorts; // vertices grouped by degree
    {
        int max_deg = 0;
        for (int v = 0; v < n; ++v)
            max_deg = std::max(max_deg, g.degree(v));
        cohorts.assign(max_deg + 1, {});
        for (int v = 0; v < n; ++v)
            cohorts[g.degree(v)].push_back(v);
    }

    std::vector<AnomalyScore> scores;
    scores.reserve(n);
    for (int v = 0; v < n; ++v) {
        const auto& cohort = cohorts[g.degree(v)];
        AnomalyScore s;
        s.vertex = v;
        s.degree = g.degree(v);
        s.cohort_size = static_cast<int>(cohort.size());
        if (cohort.size() > 1) {
            std::vector<double> dists;
            dists.reserve(cohort.size() - 1);
            for (int u : cohort)
                if (u != v)
                    dists.push_back(feature_distance(features[v], features[u]));
            s.score = median(std::move(dists));
        }
        scores.push_back(s);
    }
    std::sort(scores.begin(), scores.end(), [](const AnomalyScore& a, const AnomalyScore& b) {
        if (a.score != b.score)
            return a.score > b.score;
        return a.vertex < b.vertex;
    });
    return scores;
}

} // namespace ndl
