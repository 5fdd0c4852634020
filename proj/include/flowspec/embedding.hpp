#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "flowspec/metric.hpp"
#include "flowspec/partition.hpp"

namespace flowspec {

/// Non-expansive map into the reals with average-distortion guarantees.
/// |f(u) - f(v)| <= d(u,v) holds for all pairs, checked exactly on return.
struct LineEmbedding {
    Eigen::VectorXd f;
    const Metric* metric_ref = nullptr; ///< the metric f was built from
    double delta_p = 0.0;               ///< the spread scale Delta_p used
    int p = 2;
    bool case_one = false;  ///< dense-ball case fired (deterministic f)
    bool degenerate = false;///< all-zero metric or single point: f == 0
    int best_trial = -1;    ///< argmax trial in the randomized case
    std::vector<double> trial_objectives; ///< per-trial sum over pairs of |df|^p
    double objective = 0.0; ///< sum over pairs of |f(u)-f(v)|^p for returned f
};

/// Sum over unordered pairs of |f(u)-f(v)|^p.
double embedding_objective(const Eigen::VectorXd& f, int p);

/// Embeds (X, d) into the line. Computes the spread scale
/// Delta_p = (2/n^2 * sum_{u<v} d(u,v)^p)^(1/p). If some point has at least
/// n/10 others within Delta_p/4, returns the distance to that ball
/// deterministically; otherwise draws `trials` partitions at scale Delta_p/4
/// with i.i.d. 0/1 cluster signs, takes f = d(., union of sign-0 clusters),
/// and keeps the trial maximizing the objective (ties to the earliest trial).
LineEmbedding line_embed(const Metric& m, int p, int trials, std::uint64_t seed,
                         const PartitionSampler& sampler);

/// Verifies |f(u)-f(v)| <= d(u,v) for every pair, in the float-exact
/// one-sided form f(u) <= d(u,v) + f(v). Throws InternalError on violation.
void check_non_expansive(const Metric& m, const Eigen::VectorXd& f);

} // namespace flowspec
