#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flowspec/metric.hpp"
#include "flowspec/spectral.hpp"

namespace flowspec {

/// Vertex separator V = A + B + S with no A-B edges.
/// alpha = |S| / (|A u S| * |B u S|).
struct VertexSeparator {
    std::vector<int> a, b, s;
    double alpha = 0.0;
    double bound = 0.0;     ///< 2 sum(s) / sum over pairs of |f(u)-f(v)|
    bool degenerate = false;///< constant f: only S = V is available
};

/// Interval sweep over a non-expansive embedding f of d_s: thresholds run
/// over all breakpoints f(v), f(v) +- s(v) and the midpoints between
/// consecutive breakpoints (the separator is piecewise constant between
/// breakpoints, so midpoints realize the open intervals). Each candidate
/// sets A = {f+s < t}, B = {f-s > t}, S = rest; E(A,B) is verified empty by
/// an edge scan and the best alpha is checked against the sweep bound.
VertexSeparator fhl_sweep(const Graph& g, const WeightFunction& s, const Metric& m,
                          const Eigen::VectorXd& f);

/// A routine producing a ratio cut of a connected graph.
using EdgeCutter = std::function<CutResult(const Graph&)>;

struct BalancedEdgeSeparator {
    std::vector<int> side;       ///< S with min(|S|, |S-bar|) >= delta * n
    std::int64_t cut_edges = 0;  ///< exact |E(S, S-bar)| recount
    std::int64_t cut_budget = 0; ///< sum of per-level cut costs
    int levels = 0;              ///< number of cutter invocations
};

/// Recursive quotient cuts: repeatedly cut the largest remaining piece with
/// `cutter` until every piece has at most (1 - delta) n vertices, then packs
/// pieces into two sides of size >= delta n each. Requires delta in (0, 1/3].
BalancedEdgeSeparator recursive_edge_separator(const Graph& g, const EdgeCutter& cutter,
                                               double delta = 1.0 / 3.0);

} // namespace flowspec
