#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flowspec/flow.hpp"
#include "flowspec/graph.hpp"

namespace flowspec {

/// Lambda_s(G) = sum over unordered pairs of d_s(u,v), divided by ||s||_2.
/// A lower bound on min con_2 over unit all-pairs flows for every
/// non-negative s (weak duality). Throws on s identically zero.
double lambda_s(const Graph& g, const WeightFunction& s);

struct SolverConfig {
    int max_iters = 500;
    double tol = 1e-3; ///< relative duality gap target
    std::uint64_t seed = 0;
    /// Whether the solver materializes the path mixture. `automatic` keeps
    /// paths for n <= 256 and tracks only the congestion profile above that
    /// (an all-pairs mixture on large graphs is memory-prohibitive).
    enum class StorePaths { automatic, on, off };
    StorePaths store_paths = StorePaths::automatic;
};

/// One feasible primal/dual pair produced at an iteration.
struct IterationStats {
    double primal = 0.0; ///< Lambda_s at that iteration's candidate weights
    double dual = 0.0;   ///< con_2 of that iteration's flow
};

struct DualitySolution {
    /// Flow of the best dual iterate; absent when path storage is disabled.
    std::optional<FractionalFlow> flow;
    WeightFunction weights;            ///< best primal candidate s (unit 2-norm)
    CongestionProfile best_congestion; ///< congestion profile of the best flow
    double primal_value = 0.0;         ///< best Lambda_s seen
    double dual_value = 0.0;           ///< best con_2 seen
    double gap = 0.0;                  ///< dual_value - primal_value
    int iterations = 0;                ///< Frank-Wolfe blend steps performed
    bool converged = false;            ///< gap/dual_value <= tol reached
    std::vector<IterationStats> trace; ///< per-iteration feasible pairs
};

/// Minimizes the vertex 2-congestion of a unit all-pairs flow by
/// Frank-Wolfe on con_2(F)^2. Each iteration routes every demand along a
/// vertex-cost shortest path under the current congestion profile and blends
/// with step 2/(k+2); candidate weights s = c/||c||_2 give the primal side.
/// The returned dual_value is a true upper bound on min con_2 and
/// primal_value a true lower bound, whether or not tolerance was met.
DualitySolution solve_min_con2(const Graph& g, const SolverConfig& cfg = {});

} // namespace flowspec
