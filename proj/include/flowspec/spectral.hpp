#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "flowspec/graph.hpp"

namespace flowspec {

/// Second Laplacian eigenpair. fiedler has unit norm and zero mean
/// (orthogonal to the constant eigenvector); residual = ||L v - lambda2 v||.
struct SpectrumResult {
    double lambda2 = 0.0;
    Eigen::VectorXd fiedler;
    enum class Method { dense_oracle, iterative };
    Method method = Method::dense_oracle;
    double residual = 0.0;
    bool converged = true;
};

enum class EigenMethod { automatic, dense, iterative };

/// lambda_2 of the Laplacian. Dense full eigendecomposition for n <= 64
/// (the oracle path), a ones-deflated Lanczos iteration with full
/// reorthogonalization otherwise. Non-convergence returns the best pair
/// found, flagged, rather than throwing.
SpectrumResult lambda2_solve(const Graph& g, double tol = 1e-8,
                             EigenMethod method = EigenMethod::automatic);

/// Prefix cut of the sweep over a vertex ordering by value.
struct CutResult {
    std::vector<int> side;  ///< the prefix S achieving the best ratio
    double ratio = 0.0;     ///< |E(S, S-bar)| / min(|S|, |S-bar|)
    double bound = 0.0;     ///< sqrt(2 d_max <v,Lv> / ||v||^2) for centered v
    std::int64_t crossing_edges = 0;
};

/// Sorts vertices by v (ties by index), scans all n-1 prefix cuts and
/// returns the best. v is centered internally; the returned ratio is
/// checked against the spectral sweep bound. Throws on constant v.
CutResult sweep_cut(const Graph& g, const Eigen::VectorXd& v);

} // namespace flowspec
