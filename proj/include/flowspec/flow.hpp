#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "flowspec/graph.hpp"

namespace flowspec {

/// Per-vertex congestion C_F(v) = total weight of stored paths containing v.
using CongestionProfile = Eigen::VectorXd;

/// One fractional routing option: a simple path with its share of the demand.
struct RouteEntry {
    std::vector<int> path; ///< vertex sequence, demand endpoints first/last
    double weight = 0.0;
};

/// Path-based unit multicommodity flow: for each demand {u,v} the stored
/// route weights are non-negative and sum to 1 (within 1e-9).
struct FractionalFlow {
    int n = 0; ///< vertex count of the host graph
    std::vector<std::pair<int, int>> demands;      ///< unordered pairs, u < v, sorted
    std::vector<std::vector<RouteEntry>> routes;   ///< parallel to demands

    /// All unordered pairs of g's vertices with empty routes.
    static FractionalFlow all_pairs_demands(const Graph& g);

    /// Checks the type invariants against g: every path is simple, connects
    /// its demand's endpoints, and per-demand weights sum to 1.
    void validate(const Graph& g) const;
};

/// Exact congestion profile of a flow.
CongestionProfile congestion(const FractionalFlow& flow);

/// Vertex p-congestion (sum_v C(v)^p)^(1/p) for p in {1, 2}.
double con_norm(const CongestionProfile& profile, int p);

} // namespace flowspec
