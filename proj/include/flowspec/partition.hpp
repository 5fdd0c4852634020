#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flowspec/graph.hpp"
#include "flowspec/metric.hpp"

namespace flowspec {

/// Delta-bounded partition of the point set of a metric.
struct PaddedPartition {
    std::vector<std::vector<int>> clusters; ///< disjoint cover, members sorted
    std::vector<int> assignment;            ///< vertex -> cluster index
    double delta = 0.0;                     ///< diameter bound
    double alpha = 0.0;                     ///< padding parameter targeted (nominal)

    /// Checks the partition property and that every cluster has diameter
    /// at most delta under m.
    void validate(const Metric& m) const;
};

/// Draws a partition: radius uniform in [delta/4, delta/2], a uniform random
/// permutation of the points, and each point joins the first permuted center
/// within the radius. Diameters are at most delta by construction.
PaddedPartition ckr_partition(const Metric& m, double delta, std::uint64_t seed);

/// Iterated annulus chopping: each round picks a random root and slices the
/// weighted-BFS layering of d_s into width-delta shells whose offsets
/// stagger by delta/rounds across rounds, so the union of the cuts refines
/// the layering at granularity delta/rounds. The innermost shell absorbs
/// the offset and cells split into connected components each round. Final
/// clusters are clipped to diameter <= delta by greedy ball carving.
/// Heuristic stand-in for decompositions of minor-free graphs; padding is
/// measured, not asserted.
PaddedPartition chop_partition(const Graph& g, const WeightFunction& s, double delta,
                               int rounds, std::uint64_t seed);

/// Same, reusing a precomputed metric of (g, s) for the clipping step.
PaddedPartition chop_partition(const Graph& g, const WeightFunction& s, const Metric& m,
                               double delta, int rounds, std::uint64_t seed);

/// A seeded source of delta-bounded partitions over a fixed metric.
using PartitionSampler = std::function<PaddedPartition(double delta, std::uint64_t seed)>;

/// Sampler backed by ckr_partition over m. The metric must outlive the sampler.
PartitionSampler make_ckr_sampler(const Metric& m);

/// Sampler backed by chop_partition over (g, s); the induced metric is
/// computed once up front. g must outlive the sampler.
PartitionSampler make_chop_sampler(const Graph& g, const WeightFunction& s, int rounds);

/// Empirical padding of a partition source at scale delta.
struct PaddingEstimate {
    double alpha_hat = 0.0; ///< delta / rho_hat; +inf when nothing is padded
    double rho_hat = 0.0;   ///< largest radius whose min-over-x padding probability is >= 1/2
    int samples = 0;
};

/// Samples `samples` partitions and estimates the largest radius rho such
/// that every point keeps its closed rho-ball inside its own cluster in at
/// least half the samples.
PaddingEstimate measure_padding(const PartitionSampler& sampler, const Metric& m,
                                double delta, int samples, std::uint64_t seed);

} // namespace flowspec
