#pragma once

#include <cstdint>
#include <optional>

#include "flowspec/duality.hpp"
#include "flowspec/embedding.hpp"
#include "flowspec/spectral.hpp"

namespace flowspec {

enum class PartitionSource { ckr, chop };

PartitionSource parse_partition_source(const std::string& name);

struct CertificateConfig {
    SolverConfig solver;
    int embed_trials = 128;
    std::uint64_t embed_seed = 0;
    PartitionSource partition_source = PartitionSource::ckr;
    int chop_rounds = 3;
    int padding_samples = 200;
    double eigen_tol = 1e-8;
};

/// Constructive eigenvalue certificate: upper_bound is the Rayleigh quotient
/// of the centered embedding vector, hence a true bound on lambda_2
/// independent of every estimate below it. The closed-form value replays the
/// congestion -> metric -> embedding chain with the measured padding
/// parameter, for comparison only.
struct CertificateResult {
    double upper_bound = 0.0;
    WeightFunction s;
    Eigen::VectorXd f;
    double achieved_lambda2 = 0.0; ///< eigensolver value for reference
    double primal_value = 0.0, dual_value = 0.0, gap = 0.0;
    double lambda_s_value = 0.0;
    double sum_d_sq_pairs = 0.0;  ///< sum over pairs of d_s^2
    double sum_d_sq_edges = 0.0;  ///< sum over edges of d_s^2
    double sum_s_sq = 0.0;        ///< sum of s(v)^2
    double embed_objective = 0.0; ///< sum over pairs of |f(u)-f(v)|^2
    double distortion_ratio = 0.0;///< sum_d_sq_pairs / embed_objective
    double alpha_hat = 0.0;       ///< measured padding at the embedding scale
    double closed_form_bound = 0.0; ///< d_max n^3 alpha_hat^2 / lambda_s^2
    bool case_one = false;
    bool degenerate = false; ///< no usable embedding direction; upper_bound is +inf
};

/// End-to-end pipeline: congestion solver -> induced metric -> line
/// embedding (p = 2) -> Rayleigh quotient.
CertificateResult lambda2_certificate(const Graph& g, const CertificateConfig& cfg = {});

/// Same, reusing an existing solver run.
CertificateResult lambda2_certificate(const Graph& g, const DualitySolution& solution,
                                      const CertificateConfig& cfg = {});

} // namespace flowspec
