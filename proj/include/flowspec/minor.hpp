#pragma once

#include <utility>
#include <vector>

#include "flowspec/integral.hpp"

namespace flowspec {

/// Witnessed minor model: one connected branch set per demand vertex and a
/// host-graph edge realizing every demand edge.
struct BranchDecomposition {
    std::vector<std::vector<int>> branch_sets;       ///< per demand vertex, sorted
    std::vector<std::pair<int, int>> witness_edges;  ///< per demand edge: (u in set a, v in set b)
};

/// Checks the three minor conditions: branch sets non-empty, pairwise
/// disjoint and connected in g; every witness edge exists in g and joins its
/// two branch sets. Throws InternalError on failure.
void verify_branch_decomposition(const Graph& g, const DemandGraph& h,
                                 const BranchDecomposition& bd);

/// Builds a branch decomposition from an intersection-free integral flow
/// over a bipartite demand graph with minimum degree 2.
///
/// Left-side sets are unions of path prefixes scanned from the left
/// terminal, cut at the first vertex lying on another left vertex's paths;
/// right-side sets take the leftovers of their incident paths. The result
/// is verified before it is returned.
BranchDecomposition extract_minor(const Graph& g, const DemandGraph& h,
                                  const IntegralFlow& flow);

/// Largest hop diameter of any branch set, measured in the whole graph.
/// When every routed path of the source flow has at most L/2 edges this is
/// at most L (the depth-L minor certificate).
int branch_set_depth(const Graph& g, const BranchDecomposition& bd);

} // namespace flowspec
