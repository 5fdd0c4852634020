#pragma once

#include <Eigen/Dense>
#include <vector>

#include "flowspec/graph.hpp"

namespace flowspec {

/// Single-source result of the vertex-weighted shortest-path problem.
/// Path cost is the sum of s(x) over ALL vertices of the path, both
/// endpoints included; dist[source] is 0 by the semi-metric convention
/// even though the raw vertex-sum of the trivial path would be s(source).
struct DistanceTree {
    int source = -1;
    Eigen::VectorXd dist;       ///< dist[v] = d_s(source, v)
    std::vector<int> parent;    ///< predecessor on a shortest path; -1 at source
};

/// Dijkstra under vertex costs s (all entries >= 0). Ties between equal-cost
/// predecessors resolve to the smaller vertex index, so results are
/// deterministic even with zero-weight vertices.
DistanceTree vertex_weighted_distances(const Graph& g, const WeightFunction& s, int source);

/// Reconstructs the (source -> v) path from a DistanceTree.
std::vector<int> extract_path(const DistanceTree& tree, int v);

/// Semi-metric on the vertex set: symmetric, zero diagonal, triangle
/// inequality within 1e-9 (zero off-diagonal entries are allowed).
class Metric {
public:
    enum class Origin { vertex_weighted, explicit_table };

    /// Validates and canonicalizes `d`: symmetrizes within 1e-9, then runs
    /// float min-plus closure passes until a fixpoint so that
    /// d(u,v) <= fl(d(u,w) + d(w,v)) holds exactly for every triple; the
    /// closure may lower entries by at most 1e-9, otherwise the input is
    /// rejected as violating the triangle inequality.
    Metric(Eigen::MatrixXd d, Origin origin);

    int size() const { return static_cast<int>(table_.rows()); }
    double operator()(int u, int v) const { return table_(u, v); }
    const Eigen::MatrixXd& table() const { return table_; }
    Origin origin() const { return origin_; }

    double max_distance() const;

    /// min_{w in set} d(u, w); set must be non-empty.
    double distance_to_set(int u, const std::vector<int>& set) const;

    /// Sum of d(u,v) over unordered pairs u < v.
    double sum_pairs() const;
    /// Sum of d(u,v)^p over unordered pairs u < v.
    double sum_pairs_pow(int p) const;

private:
    Eigen::MatrixXd table_;
    Origin origin_;
};

/// Runs vertex_weighted_distances from every source (parallel over sources,
/// reduced in source order) and packages the table as a Metric.
Metric all_pairs_metric(const Graph& g, const WeightFunction& s);

/// Unweighted shortest-path (hop count) metric of g.
Metric hop_metric(const Graph& g);

} // namespace flowspec
