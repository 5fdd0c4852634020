#include "flowspec/certificate.hpp"

#include <cmath>
#include <limits>

#include "flowspec/metric.hpp"
#include "flowspec/parallel.hpp"
#include "flowspec/partition.hpp"

namespace flowspec {

PartitionSource parse_partition_source(const std::string& name) {
    if (name == "ckr") return PartitionSource::ckr;
    if (name == "chop") return PartitionSource::chop;
    throw ParseError("unknown partition source: " + name);
}

CertificateResult lambda2_certificate(const Graph& g, const CertificateConfig& cfg) {
    return lambda2_certificate(g, solve_min_con2(g, cfg.solver), cfg);
}

CertificateResult lambda2_certificate(const Graph& g, const DualitySolution& solution,
                                      const CertificateConfig& cfg) {
    require(g.num_vertices() >= 2, "certificate needs n >= 2");

    CertificateResult out;
    out.s = solution.weights;
    out.primal_value = solution.primal_value;
    out.dual_value = solution.dual_value;
    out.gap = solution.gap;
    out.lambda_s_value = solution.primal_value;
    out.sum_s_sq = out.s.squaredNorm();

    Metric m = all_pairs_metric(g, out.s);
    out.sum_d_sq_pairs = m.sum_pairs_pow(2);
    for (auto [u, v] : g.edges()) out.sum_d_sq_edges += m(u, v) * m(u, v);

    PartitionSampler sampler = cfg.partition_source == PartitionSource::ckr
                                   ? make_ckr_sampler(m)
                                   : make_chop_sampler(g, out.s, cfg.chop_rounds);

    LineEmbedding emb = line_embed(m, 2, cfg.embed_trials, cfg.embed_seed, sampler);
    out.f = emb.f;
    out.case_one = emb.case_one;
    out.embed_objective = emb.objective;

    SpectrumResult spectrum = lambda2_solve(g, cfg.eigen_tol);
    out.achieved_lambda2 = spectrum.lambda2;

    if (emb.degenerate || emb.objective == 0.0) {
        out.degenerate = true;
        out.upper_bound = std::numeric_limits<double>::infinity();
        return out;
    }

    out.distortion_ratio = out.sum_d_sq_pairs / out.embed_objective;
    out.upper_bound = rayleigh_quotient(g, emb.f);
    check_internal(out.upper_bound >= spectrum.lambda2 - 1e-9,
                   "certificate undercut the eigensolver value");

    if (!emb.degenerate) {
        PaddingEstimate pad = measure_padding(sampler, m, emb.delta_p / 4.0,
                                              cfg.padding_samples, derive_seed(cfg.embed_seed, 77));
        out.alpha_hat = pad.alpha_hat;
        double n3 = std::pow(static_cast<double>(g.num_vertices()), 3.0);
        if (out.lambda_s_value > 0.0)
            out.closed_form_bound = g.max_degree() * n3 * pad.alpha_hat * pad.alpha_hat /
                                    (out.lambda_s_value * out.lambda_s_value);
    }
    return out;
}

} // namespace flowspec
