#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "flowspec/errors.hpp"

namespace flowspec {

/// Non-negative per-vertex length weights; entry v is the weight s(v).
using WeightFunction = Eigen::VectorXd;

/// Undirected simple connected graph. Immutable after construction;
/// all operations on it are pure and thread-safe.
class Graph {
public:
    /// Builds from an edge list. Rejects self-loops, duplicate edges,
    /// out-of-range endpoints and disconnected graphs.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int max_degree() const { return max_degree_; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    /// Edges as pairs (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    bool has_edge(int u, int v) const;

    /// Dense Laplacian D - A. Intended for small instances; large ones
    /// should go through laplacian_apply.
    Eigen::MatrixXd laplacian_dense() const;

    /// y = L x without materializing L.
    void laplacian_apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;

    /// Induced subgraph on `vertices`; `back_map[i]` is the original id of
    /// new vertex i. Must be connected (callers split into components first).
    Graph induced_subgraph(const std::vector<int>& vertices,
                           std::vector<int>* back_map = nullptr) const;

    /// Connected components of the subgraph induced by `vertices`.
    std::vector<std::vector<int>>
    components_within(const std::vector<int>& vertices) const;

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Validates a weight function against a graph: size n, all entries >= 0.
void check_weights(const Graph& g, const WeightFunction& s);

/// Rayleigh quotient sum_{uv in E} (f(u)-f(v))^2 / sum_u (f(u)-mean)^2.
/// An upper bound on lambda_2 for any non-constant f; +infinity when f
/// is constant (degenerate direction).
double rayleigh_quotient(const Graph& g, const Eigen::VectorXd& f);

// ---------------------------------------------------------------------------
// Generators. All return connected simple graphs or throw PreconditionError.
// ---------------------------------------------------------------------------

enum class GraphFamily { path, cycle, grid2d, torus2d, grid3d, knn_random_points, complete, star };

GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily f);

struct GenerateParams {
    int size = 0;       ///< vertex count, or side length for grid/torus families
    int k = 3;          ///< neighbor count for knn_random_points
    int dim = 2;        ///< point dimension for knn_random_points
    std::uint64_t seed = 0;
};

Graph generate(GraphFamily family, const GenerateParams& params);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid2d(int side);
Graph make_torus2d(int side);
Graph make_grid3d(int side);
Graph make_complete(int n);
/// Star on n vertices: center 0, leaves 1..n-1.
Graph make_star(int n);
/// n points uniform in the unit dim-cube; each joined to its k nearest,
/// edge set symmetrized. Throws if the result is disconnected.
Graph make_knn_random_points(int n, int k, int dim, std::uint64_t seed);

} // namespace flowspec
