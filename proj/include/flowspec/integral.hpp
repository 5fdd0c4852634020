#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flowspec/flow.hpp"
#include "flowspec/graph.hpp"

namespace flowspec {

/// Demand graph H = (U, D) with an injective terminal map U -> V(G).
struct DemandGraph {
    std::vector<int> terminals;                    ///< demand vertex i -> graph vertex
    std::vector<std::pair<int, int>> demand_edges; ///< unordered pairs of demand vertices, a < b
    /// Optional L/R split; when present every demand edge must cross it.
    struct Bipartition {
        std::vector<int> left, right; ///< demand-vertex ids
    };
    std::optional<Bipartition> bipartition;

    int num_terminals() const { return static_cast<int>(terminals.size()); }
    int num_demands() const { return static_cast<int>(demand_edges.size()); }
    int degree(int demand_vertex) const;

    /// Complete demand graph on all vertices of g (identity terminal map).
    static DemandGraph complete(const Graph& g);

    void validate(const Graph& g) const;
};

/// Unit integral flow: exactly one simple path per demand edge.
struct IntegralFlow {
    std::vector<std::vector<int>> routes; ///< parallel to demand_edges

    void validate(const Graph& g, const DemandGraph& h) const;
};

/// Integer congestion counts of an integral flow.
Eigen::VectorXi integral_congestion(int n, const IntegralFlow& flow);

/// con_2 of an integral flow (exact integer arithmetic under the root).
double integral_con2(int n, const IntegralFlow& flow);

struct RoundingResult {
    DemandGraph demands;  ///< demand graph induced by the fractional flow
    IntegralFlow flow;    ///< the best of the sampled roundings
    std::vector<double> trial_con2; ///< con_2 of every trial, in trial order
};

/// Randomized rounding: per demand, pick one stored path with probability
/// equal to its weight; repeat `trials` times with derived seeds and keep
/// the rounding of smallest con_2 (ties to the earlier trial).
RoundingResult round_integral(const Graph& g, const FractionalFlow& flow,
                              int trials, std::uint64_t seed);

/// Number of unordered pairs of vertex-disjoint demand edges (all four
/// terminals distinct) whose routed paths share at least one graph vertex.
/// Checks con_2(flow)^2 >= inter on every call (exact, no tolerance).
std::int64_t intersection_number(const Graph& g, const DemandGraph& h,
                                 const IntegralFlow& flow);

/// Restriction of a complete-demand integral flow to the demand edges whose
/// terminals both survive independent sampling with probability p.
struct SubsampleResult {
    DemandGraph demands;
    IntegralFlow flow;
    std::vector<int> kept_terminals; ///< demand-vertex ids of the original
};

SubsampleResult subsample_terminals(const DemandGraph& h, const IntegralFlow& flow,
                                    double p, std::uint64_t seed);

/// Greedy terminal removal trace: repeatedly drop the terminal participating
/// in the most counted intersections, recording inter after each removal.
/// While inter > 0 each step decreases it by at least 1; the counts are an
/// upper-bound trace, not a certified quantity.
std::vector<std::int64_t> greedy_removal_trace(const Graph& g, DemandGraph h,
                                               IntegralFlow flow);

} // namespace flowspec
