// flowspec command line: graph generation, congestion duality, rounding,
// line embeddings, eigenvalues, sweep cuts, separators, certificates and
// the scaling experiment ladder.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flowspec/certificate.hpp"
#include "flowspec/duality.hpp"
#include "flowspec/embedding.hpp"
#include "flowspec/io.hpp"
#include "flowspec/metric.hpp"
#include "flowspec/parallel.hpp"
#include "flowspec/partition.hpp"
#include "flowspec/scaling.hpp"
#include "flowspec/separator.hpp"
#include "flowspec/spectral.hpp"
#include "flowspec/version.hpp"

namespace fs = flowspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNonConvergence = 4;
constexpr int kExitInternal = 5;

struct Options {
    std::string graph_file;
    std::string weights_file;
    std::string family = "grid2d";
    std::vector<int> sizes;
    std::uint64_t seed = 0;
    double tol = 1e-3;
    int iters = 500;
    int trials = 128;
    int knn_k = 3;
    int knn_dim = 2;
    std::string partition = "ckr";
    int chop_rounds = 3;
    int p_norm = 2;
    std::string out_dir;
    std::string csv_file;
    int experiment_iters = 48;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int size_or(const Options& opt, int fallback) {
    return opt.sizes.empty() ? fallback : opt.sizes.front();
}

fs::Graph load_graph(const Options& opt) {
    if (!opt.graph_file.empty()) return fs::read_graph_file(opt.graph_file);
    fs::GenerateParams params;
    params.size = size_or(opt, 8);
    params.k = opt.knn_k;
    params.dim = opt.knn_dim;
    params.seed = opt.seed;
    return fs::generate(fs::parse_family(opt.family), params);
}

void emit(const fs::Report& report, const Options& opt, const std::string& name,
          double elapsed) {
    std::cout << report.to_string();
    std::cerr << "# " << name << " took " << fs::format_double(elapsed) << " s\n";
    if (!opt.out_dir.empty()) report.write_file(opt.out_dir + "/" + name + ".report.txt");
}

void describe_input(fs::Report& report, const Options& opt, const fs::Graph& g) {
    report.put("meta.version", fs::kVersion);
    report.put("meta.seed", static_cast<std::int64_t>(opt.seed));
    if (!opt.graph_file.empty())
        report.put("input.graph", opt.graph_file);
    else
        report.put("input.family", opt.family);
    report.put("input.n", g.num_vertices());
    report.put("input.m", g.num_edges());
    report.put("input.max_degree", g.max_degree());
}

fs::SolverConfig solver_config(const Options& opt) {
    fs::SolverConfig cfg;
    cfg.max_iters = opt.iters;
    cfg.tol = opt.tol;
    cfg.seed = opt.seed;
    return cfg;
}

fs::WeightFunction solved_or_loaded_weights(const Options& opt, const fs::Graph& g,
                                            fs::Report& report) {
    if (!opt.weights_file.empty()) {
        report.put("weights.source", opt.weights_file);
        return fs::read_weights_file(opt.weights_file, g.num_vertices());
    }
    fs::DualitySolution sol = fs::solve_min_con2(g, solver_config(opt));
    report.add_duality("solver", sol);
    report.stamp("solver", opt.seed);
    return sol.weights;
}

int cmd_gen(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    std::string path = opt.out_dir.empty() ? "graph.txt" : opt.out_dir + "/graph.txt";
    fs::write_graph_file(path, g);
    fs::Report report;
    describe_input(report, opt, g);
    report.put("gen.path", path);
    emit(report, opt, "gen", timer.seconds());
    return kExitOk;
}

int cmd_eigen(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::SpectrumResult r = fs::lambda2_solve(g, 1e-8);
    fs::Report report;
    describe_input(report, opt, g);
    report.put("eigen.lambda2", r.lambda2);
    report.put("eigen.residual", r.residual);
    report.put("eigen.method", r.method == fs::SpectrumResult::Method::dense_oracle
                                   ? "dense_oracle"
                                   : "iterative");
    report.put("eigen.converged", r.converged);
    report.stamp("eigen", opt.seed);
    emit(report, opt, "eigen", timer.seconds());
    return r.converged ? kExitOk : kExitNonConvergence;
}

int cmd_solve(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::DualitySolution sol = fs::solve_min_con2(g, solver_config(opt));
    fs::Report report;
    describe_input(report, opt, g);
    report.add_duality("solver", sol);
    report.stamp("solver", opt.seed);
    emit(report, opt, "solve", timer.seconds());
    return sol.converged ? kExitOk : kExitNonConvergence;
}

int cmd_round(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::DualitySolution sol = fs::solve_min_con2(g, solver_config(opt));
    if (!sol.flow)
        throw fs::PreconditionError("rounding needs stored paths; graph too large for "
                                    "automatic path storage");
    int trials = std::max(1, opt.trials);
    fs::RoundingResult rounding = fs::round_integral(g, *sol.flow, trials, opt.seed);
    double frac2 = fs::con_norm(sol.best_congestion, 2);
    double frac1 = fs::con_norm(sol.best_congestion, 1);
    double integral2 = fs::integral_con2(g.num_vertices(), rounding.flow);

    fs::Report report;
    describe_input(report, opt, g);
    report.put("round.trials", trials);
    report.put("round.fractional_con2", frac2);
    report.put("round.integral_con2", integral2);
    report.put("round.bound", frac2 + std::sqrt(frac1));
    report.stamp("round", opt.seed);
    if (integral2 > frac2 + std::sqrt(frac1) + 1e-9)
        throw fs::InternalError("rounding exceeded the con2 + sqrt(con1) bound");
    if (!opt.out_dir.empty()) {
        std::ofstream out(opt.out_dir + "/flow.txt");
        fs::write_integral_flow(out, rounding.demands, rounding.flow);
    }
    emit(report, opt, "round", timer.seconds());
    return kExitOk;
}

int cmd_embed(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::Report report;
    describe_input(report, opt, g);
    fs::WeightFunction s = solved_or_loaded_weights(opt, g, report);
    fs::Metric m = fs::all_pairs_metric(g, s);
    fs::PartitionSampler sampler = opt.partition == "chop"
                                       ? fs::make_chop_sampler(g, s, opt.chop_rounds)
                                       : fs::make_ckr_sampler(m);
    fs::parse_partition_source(opt.partition); // validate the name
    fs::LineEmbedding emb =
        fs::line_embed(m, opt.p_norm, std::max(1, opt.trials), opt.seed, sampler);
    report.put("embed.p", opt.p_norm);
    report.put("embed.trials", std::max(1, opt.trials));
    report.put("embed.partition", opt.partition);
    report.put("embed.delta_p", emb.delta_p);
    report.put("embed.case_one", emb.case_one);
    report.put("embed.degenerate", emb.degenerate);
    report.put("embed.objective", emb.objective);
    report.put("embed.sum_d_pow_pairs", m.sum_pairs_pow(opt.p_norm));
    report.stamp("embed", opt.seed);
    if (!opt.out_dir.empty()) {
        std::ofstream out(opt.out_dir + "/embedding.txt");
        fs::write_embedding(out, emb.f);
        std::ofstream csv(opt.out_dir + "/metric.csv");
        fs::write_metric_csv(csv, m);
    }
    emit(report, opt, "embed", timer.seconds());
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::SpectrumResult spec = fs::lambda2_solve(g, 1e-8);
    fs::CutResult cut = fs::sweep_cut(g, spec.fiedler);
    fs::Report report;
    describe_input(report, opt, g);
    report.put("eigen.lambda2", spec.lambda2);
    report.put("sweep.ratio", cut.ratio);
    report.put("sweep.bound", cut.bound);
    report.put("sweep.crossing_edges", cut.crossing_edges);
    report.put("sweep.side_size", static_cast<int>(cut.side.size()));
    report.stamp("sweep", opt.seed);
    emit(report, opt, "sweep", timer.seconds());
    return kExitOk;
}

int cmd_separate(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::Report report;
    describe_input(report, opt, g);
    fs::WeightFunction s = solved_or_loaded_weights(opt, g, report);
    fs::Metric m = fs::all_pairs_metric(g, s);
    fs::PartitionSampler sampler = opt.partition == "chop"
                                       ? fs::make_chop_sampler(g, s, opt.chop_rounds)
                                       : fs::make_ckr_sampler(m);
    fs::LineEmbedding emb = fs::line_embed(m, 1, std::max(1, opt.trials), opt.seed, sampler);
    fs::VertexSeparator sep = fs::fhl_sweep(g, s, m, emb.f);
    report.put("separator.alpha", sep.alpha);
    report.put("separator.bound", sep.bound);
    report.put("separator.size_a", static_cast<int>(sep.a.size()));
    report.put("separator.size_b", static_cast<int>(sep.b.size()));
    report.put("separator.size_s", static_cast<int>(sep.s.size()));
    report.put("separator.degenerate", sep.degenerate);
    report.stamp("separator", opt.seed);
    if (!opt.out_dir.empty()) {
        std::ofstream out(opt.out_dir + "/separator.txt");
        fs::write_separator(out, sep);
    }
    emit(report, opt, "separate", timer.seconds());
    return kExitOk;
}

void add_certificate(fs::Report& report, const fs::CertificateResult& cert) {
    report.put("certificate.upper_bound", cert.upper_bound);
    report.put("certificate.lambda2", cert.achieved_lambda2);
    report.put("certificate.primal", cert.primal_value);
    report.put("certificate.dual", cert.dual_value);
    report.put("certificate.gap", cert.gap);
    report.put("certificate.lambda_s", cert.lambda_s_value);
    report.put("certificate.sum_d_sq_pairs", cert.sum_d_sq_pairs);
    report.put("certificate.sum_d_sq_edges", cert.sum_d_sq_edges);
    report.put("certificate.sum_s_sq", cert.sum_s_sq);
    report.put("certificate.embed_objective", cert.embed_objective);
    report.put("certificate.distortion_ratio", cert.distortion_ratio);
    report.put("certificate.alpha_hat", cert.alpha_hat);
    report.put("certificate.closed_form_bound", cert.closed_form_bound);
    report.put("certificate.case_one", cert.case_one);
    report.put("certificate.degenerate", cert.degenerate);
}

fs::CertificateConfig certificate_config(const Options& opt) {
    fs::CertificateConfig cfg;
    cfg.solver = solver_config(opt);
    cfg.embed_trials = std::max(1, opt.trials);
    cfg.embed_seed = opt.seed;
    cfg.partition_source = fs::parse_partition_source(opt.partition);
    cfg.chop_rounds = opt.chop_rounds;
    return cfg;
}

int cmd_certify(const Options& opt) {
    Timer timer;
    fs::Graph g = load_graph(opt);
    fs::CertificateResult cert = fs::lambda2_certificate(g, certificate_config(opt));
    fs::Report report;
    describe_input(report, opt, g);
    add_certificate(report, cert);
    report.stamp("certificate", opt.seed);
    emit(report, opt, "certify", timer.seconds());
    return cert.degenerate ? kExitNonConvergence : kExitOk;
}

int cmd_experiment(const Options& opt) {
    Timer timer;
    std::vector<int> sizes = opt.sizes.empty() ? std::vector<int>{8, 16, 32} : opt.sizes;
    fs::GraphFamily family = fs::parse_family(opt.family);

    struct Row {
        int n;
        double con2, lambda_s, gap, lambda2, certificate, cut_ratio, separator_alpha;
    };
    std::vector<Row> rows;

    for (int size : sizes) {
        fs::GenerateParams params;
        params.size = size;
        params.k = opt.knn_k;
        params.dim = opt.knn_dim;
        params.seed = opt.seed;
        fs::Graph g = fs::generate(family, params);

        fs::SolverConfig scfg = solver_config(opt);
        scfg.max_iters = opt.experiment_iters;
        fs::DualitySolution sol = fs::solve_min_con2(g, scfg);

        fs::CertificateConfig ccfg = certificate_config(opt);
        fs::CertificateResult cert = fs::lambda2_certificate(g, sol, ccfg);

        fs::SpectrumResult spec = fs::lambda2_solve(g, 1e-8);
        fs::CutResult cut = fs::sweep_cut(g, spec.fiedler);

        fs::Metric m = fs::all_pairs_metric(g, sol.weights);
        fs::PartitionSampler sampler =
            ccfg.partition_source == fs::PartitionSource::chop
                ? fs::make_chop_sampler(g, sol.weights, opt.chop_rounds)
                : fs::make_ckr_sampler(m);
        fs::LineEmbedding emb1 =
            fs::line_embed(m, 1, ccfg.embed_trials, fs::derive_seed(opt.seed, 1), sampler);
        fs::VertexSeparator sep = fs::fhl_sweep(g, sol.weights, m, emb1.f);

        rows.push_back({g.num_vertices(), sol.dual_value, sol.primal_value, sol.gap,
                        spec.lambda2, cert.upper_bound, cut.ratio, sep.alpha});
        std::cerr << "# ladder point n=" << g.num_vertices() << " done at "
                  << fs::format_double(timer.seconds()) << " s\n";
    }

    std::ostringstream csv;
    csv << "n,con2,lambda_s,gap,lambda2,certificate,cut_ratio,separator_alpha\n";
    for (const Row& r : rows) {
        csv << r.n << ',' << fs::format_double(r.con2) << ',' << fs::format_double(r.lambda_s)
            << ',' << fs::format_double(r.gap) << ',' << fs::format_double(r.lambda2) << ','
            << fs::format_double(r.certificate) << ',' << fs::format_double(r.cut_ratio) << ','
            << fs::format_double(r.separator_alpha) << '\n';
    }

    fs::Report report;
    report.put("meta.version", fs::kVersion);
    report.put("meta.seed", static_cast<std::int64_t>(opt.seed));
    report.put("experiment.family", opt.family);
    report.put("experiment.iters", opt.experiment_iters);
    auto fit_column = [&](const char* name, auto getter) {
        std::vector<std::pair<double, double>> pts;
        for (const Row& r : rows) {
            double v = getter(r);
            if (v > 0.0) pts.emplace_back(r.n, v);
        }
        if (pts.size() >= 2) {
            fs::ScalingFit fit = fs::fit_scaling(pts);
            report.put(std::string("experiment.slope.") + name, fit.slope);
            csv << "# slope." << name << ": " << fs::format_double(fit.slope) << '\n';
        }
    };
    if (rows.size() >= 2) {
        fit_column("con2", [](const Row& r) { return r.con2; });
        fit_column("lambda2", [](const Row& r) { return r.lambda2; });
        fit_column("certificate", [](const Row& r) { return r.certificate; });
        fit_column("cut_ratio", [](const Row& r) { return r.cut_ratio; });
        fit_column("separator_alpha", [](const Row& r) { return r.separator_alpha; });
    }

    std::string csv_path = opt.csv_file.empty()
                               ? (opt.out_dir.empty() ? "experiment.csv"
                                                      : opt.out_dir + "/experiment.csv")
                               : opt.csv_file;
    std::ofstream out(csv_path);
    if (!out) throw fs::ParseError("cannot open CSV for writing: " + csv_path);
    out << csv.str();
    report.put("experiment.csv", csv_path);
    emit(report, opt, "experiment", timer.seconds());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"congestion-driven metric deformation, line embeddings and "
                 "spectral certificates"};
    app.require_subcommand(1);

    Options opt;
    std::string positional_family;
    int positional_size = 0;

    auto add_common = [&](CLI::App* cmd, bool family_flags = true) {
        cmd->add_option("--graph", opt.graph_file, "graph file (text format)");
        if (family_flags) {
            cmd->add_option("--family", opt.family, "generator family");
            cmd->add_option("--size", opt.sizes, "size (or comma list for experiment)")
                ->delimiter(',');
        }
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--tol", opt.tol, "solver relative gap tolerance");
        cmd->add_option("--iters", opt.iters, "solver iteration cap");
        cmd->add_option("--trials", opt.trials, "embedding/rounding trials");
        cmd->add_option("--partition", opt.partition, "partition source: ckr|chop");
        cmd->add_option("--rounds", opt.chop_rounds, "chop rounds");
        cmd->add_option("--p", opt.p_norm, "embedding norm: 1|2");
        cmd->add_option("--k", opt.knn_k, "knn neighbor count");
        cmd->add_option("--dim", opt.knn_dim, "knn point dimension");
        cmd->add_option("--weights", opt.weights_file, "vertex weight file");
        cmd->add_option("--out", opt.out_dir, "output directory");
        cmd->add_option("--csv", opt.csv_file, "CSV output path");
        cmd->add_option("--experiment-iters", opt.experiment_iters,
                        "solver iteration cap per ladder point");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("family", positional_family, "generator family");
    gen->add_option("size", positional_size, "size parameter");
    add_common(gen, /*family_flags=*/false);
    CLI::App* solve = app.add_subcommand("solve", "minimize vertex 2-congestion");
    add_common(solve);
    CLI::App* round = app.add_subcommand("round", "randomized rounding to an integral flow");
    add_common(round);
    CLI::App* embed = app.add_subcommand("embed", "line embedding of the deformed metric");
    add_common(embed);
    CLI::App* eigen = app.add_subcommand("eigen", "second Laplacian eigenvalue");
    add_common(eigen);
    CLI::App* sweep = app.add_subcommand("sweep", "sweep cut over the Fiedler vector");
    add_common(sweep);
    CLI::App* separate = app.add_subcommand("separate", "FHL vertex separator sweep");
    add_common(separate);
    CLI::App* certify = app.add_subcommand("certify", "end-to-end eigenvalue certificate");
    add_common(certify);
    CLI::App* experiment = app.add_subcommand("experiment", "scaling ladder with CSV output");
    add_common(experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (gen->parsed()) {
            if (!positional_family.empty()) opt.family = positional_family;
            if (positional_size > 0) opt.sizes = {positional_size};
            return cmd_gen(opt);
        }
        if (solve->parsed()) return cmd_solve(opt);
        if (round->parsed()) return cmd_round(opt);
        if (embed->parsed()) return cmd_embed(opt);
        if (eigen->parsed()) return cmd_eigen(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (separate->parsed()) return cmd_separate(opt);
        if (certify->parsed()) return cmd_certify(opt);
        if (experiment->parsed()) return cmd_experiment(opt);
    } catch (const fs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const fs::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const fs::ConvergenceError& e) {
        std::cerr << "did not converge: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const fs::InternalError& e) {
        std::cerr << "internal assertion failed: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitParse;
}
