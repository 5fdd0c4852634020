#include "flowspec/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flowspec/metric.hpp"
#include "flowspec/parallel.hpp"

namespace flowspec {

double lambda_s(const Graph& g, const WeightFunction& s) {
    check_weights(g, s);
    const int n = g.num_vertices();
    double norm = s.norm();
    require(norm > 0.0, "lambda_s undefined for identically zero weights");
    std::vector<double> partial(n, 0.0);
    parallel_for(n, [&](int u) {
        DistanceTree t = vertex_weighted_distances(g, s, u);
        double acc = 0.0;
        for (int v = u + 1; v < n; ++v) acc += t.dist[v];
        partial[u] = acc;
    });
    double total = 0.0;
    for (int u = 0; u < n; ++u) total += partial[u];
    return total / norm;
}

namespace {

constexpr double kPruneWeight = 1e-12;

struct Routing {
    CongestionProfile profile;            // congestion of the fresh routing
    double pair_distance_sum = 0.0;       // sum over u<v of dist under the cost vector
    std::vector<std::vector<int>> paths;  // per demand, only when requested
};

// Routes every unordered pair along a shortest path under vertex costs.
// Trees are computed in parallel; accumulation runs in ascending source
// order so the result is independent of the thread count.
Routing route_all_pairs(const Graph& g, const WeightFunction& cost, bool want_paths) {
    const int n = g.num_vertices();
    std::vector<DistanceTree> trees(n);
    parallel_for(n, [&](int u) { trees[u] = vertex_weighted_distances(g, cost, u); });

    Routing r;
    r.profile = Eigen::VectorXd::Zero(n);
    if (want_paths) r.paths.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            r.pair_distance_sum += trees[u].dist[v];
            std::vector<int> path = extract_path(trees[u], v);
            for (int x : path) r.profile[x] += 1.0;
            if (want_paths) r.paths.push_back(std::move(path));
        }
    }
    return r;
}

void blend_flow(FractionalFlow& flow, const std::vector<std::vector<int>>& new_paths,
                double gamma) {
    for (std::size_t i = 0; i < flow.routes.size(); ++i) {
        auto& entries = flow.routes[i];
        for (RouteEntry& e : entries) e.weight *= (1.0 - gamma);
        bool merged = false;
        for (RouteEntry& e : entries) {
            if (e.path == new_paths[i]) {
                e.weight += gamma;
                merged = true;
                break;
            }
        }
        if (!merged) entries.push_back({new_paths[i], gamma});
        std::erase_if(entries, [](const RouteEntry& e) { return e.weight < kPruneWeight; });
    }
}

} // namespace

DualitySolution solve_min_con2(const Graph& g, const SolverConfig& cfg) {
    const int n = g.num_vertices();
    require(n >= 2, "solver needs n >= 2");
    require(cfg.max_iters >= 0 && cfg.tol >= 0.0, "bad solver settings");

    bool store = cfg.store_paths == SolverConfig::StorePaths::on ||
                 (cfg.store_paths == SolverConfig::StorePaths::automatic && n <= 256);

    // Initial feasible point: hop-style routing under unit vertex costs.
    FractionalFlow flow = FractionalFlow::all_pairs_demands(g);
    Routing init = route_all_pairs(g, Eigen::VectorXd::Ones(n), store);
    CongestionProfile c = init.profile;
    if (store) {
        for (std::size_t i = 0; i < init.paths.size(); ++i)
            flow.routes[i].push_back({std::move(init.paths[i]), 1.0});
    }

    DualitySolution out;
    out.primal_value = 0.0;
    out.dual_value = std::numeric_limits<double>::infinity();

    int k = 0;
    for (;; ++k) {
        double dual_k = c.norm();
        if (dual_k < out.dual_value) {
            out.dual_value = dual_k;
            out.best_congestion = c;
            if (store) out.flow = flow;
        }

        // The routing trees under c serve double duty: distances give
        // Lambda_s at s = c/||c|| (1-homogeneous numerator), and the paths
        // are the linear minimization oracle for the next blend.
        bool last = (k >= cfg.max_iters);
        Routing step = route_all_pairs(g, c, store && !last);
        double primal_k = step.pair_distance_sum / dual_k;
        if (primal_k > out.primal_value) {
            out.primal_value = primal_k;
            out.weights = c / dual_k;
        }
        out.trace.push_back({primal_k, dual_k});

        check_internal(primal_k <= dual_k + 1e-9, "weak duality violated");
        if (out.dual_value - out.primal_value <= cfg.tol * out.dual_value) {
            out.converged = true;
            break;
        }
        if (last) break;

        double gamma = 2.0 / (k + 2.0);
        if (store) {
            blend_flow(flow, step.paths, gamma);
            c = congestion(flow);
        } else {
            c = (1.0 - gamma) * c + gamma * step.profile;
        }
    }

    out.iterations = k;
    out.gap = out.dual_value - out.primal_value;
    check_internal(out.gap >= -1e-9, "negative duality gap");
    return out;
}

} // namespace flowspec
