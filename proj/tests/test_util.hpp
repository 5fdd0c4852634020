// Shared test fixtures and independent oracles. Everything here stays off
// the library's code paths so oracle comparisons remain meaningful.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "flowspec/flow.hpp"
#include "flowspec/graph.hpp"

namespace testutil {

/// Every simple path between u and v, found by exhaustive DFS.
inline std::vector<std::vector<int>> all_simple_paths(const flowspec::Graph& g, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack{u};
    std::vector<char> used(g.num_vertices(), 0);
    used[u] = 1;
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == v) {
            out.push_back(stack);
            return;
        }
        for (int nb : g.neighbors(cur)) {
            if (used[nb]) continue;
            used[nb] = 1;
            stack.push_back(nb);
            self(self, nb);
            stack.pop_back();
            used[nb] = 0;
        }
    };
    dfs(dfs, u);
    return out;
}

/// Vertex-weighted distance by brute-force path enumeration.
inline double oracle_distance(const flowspec::Graph& g, const flowspec::WeightFunction& s,
                              int u, int v) {
    if (u == v) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& path : all_simple_paths(g, u, v)) {
        double cost = 0.0;
        for (int x : path) cost += s[x];
        best = std::min(best, cost);
    }
    return best;
}

/// Connected Erdos-Renyi-style graph; bumps the seed until connected.
inline flowspec::Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + 0x100000 * attempt);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unif(rng) < edge_prob) edges.emplace_back(u, v);
        try {
            return flowspec::Graph(n, std::move(edges));
        } catch (const flowspec::PreconditionError&) {
            continue;
        }
    }
}

/// Independent convex solve of min con_2 over unit all-pairs flows:
/// enumerates the whole path polytope explicitly and runs projected
/// gradient (with Nesterov momentum and a monotone restart) on
/// ||P^T f||_2^2 with per-demand simplex projections. No shortest-path
/// oracle is involved, unlike the production solver.
class BruteForceCon2 {
public:
    explicit BruteForceCon2(const flowspec::Graph& g) : g_(g), n_(g.num_vertices()) {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                std::vector<std::vector<int>> paths = all_simple_paths(g, u, v);
                group_start_.push_back(static_cast<int>(paths_.size()));
                group_size_.push_back(static_cast<int>(paths.size()));
                for (auto& p : paths) paths_.push_back(std::move(p));
            }
        group_start_.push_back(static_cast<int>(paths_.size()));
    }

    double solve(int iterations = 20000) const {
        const int m = static_cast<int>(paths_.size());
        const int demands = static_cast<int>(group_size_.size());
        std::vector<double> f(m, 0.0), y(m, 0.0), prev(m, 0.0);
        for (int d = 0; d < demands; ++d) {
            // start uniform on each simplex
            for (int i = group_start_[d]; i < group_start_[d + 1]; ++i)
                f[i] = 1.0 / group_size_[d];
        }
        y = f;

        double step = 1.0 / lipschitz_estimate();
        double t = 1.0;
        double last_value = objective(f);
        for (int it = 0; it < iterations; ++it) {
            prev = f;
            std::vector<double> grad = gradient(y);
            for (int i = 0; i < m; ++i) f[i] = y[i] - step * grad[i];
            for (int d = 0; d < demands; ++d)
                project_simplex(f.data() + group_start_[d], group_size_[d]);

            double value = objective(f);
            if (value > last_value) { // restart momentum on non-monotone steps
                t = 1.0;
                y = f;
            } else {
                double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
                double beta = (t - 1.0) / t_next;
                for (int i = 0; i < m; ++i) y[i] = f[i] + beta * (f[i] - prev[i]);
                t = t_next;
            }
            last_value = std::min(last_value, value);
        }
        return std::sqrt(last_value);
    }

private:
    std::vector<double> congestion_of(const std::vector<double>& f) const {
        std::vector<double> c(n_, 0.0);
        for (std::size_t p = 0; p < paths_.size(); ++p)
            for (int v : paths_[p]) c[v] += f[p];
        return c;
    }

    double objective(const std::vector<double>& f) const {
        std::vector<double> c = congestion_of(f);
        double acc = 0.0;
        for (double x : c) acc += x * x;
        return acc;
    }

    std::vector<double> gradient(const std::vector<double>& f) const {
        std::vector<double> c = congestion_of(f);
        std::vector<double> grad(paths_.size(), 0.0);
        for (std::size_t p = 0; p < paths_.size(); ++p) {
            double acc = 0.0;
            for (int v : paths_[p]) acc += c[v];
            grad[p] = 2.0 * acc;
        }
        return grad;
    }

    double lipschitz_estimate() const {
        // power iteration on 2 P P^T
        std::vector<double> x(paths_.size(), 1.0);
        double lambda = 1.0;
        for (int it = 0; it < 40; ++it) {
            std::vector<double> c(n_, 0.0);
            for (std::size_t p = 0; p < paths_.size(); ++p)
                for (int v : paths_[p]) c[v] += x[p];
            std::vector<double> nx(paths_.size(), 0.0);
            double norm = 0.0;
            for (std::size_t p = 0; p < paths_.size(); ++p) {
                for (int v : paths_[p]) nx[p] += c[v];
                norm += nx[p] * nx[p];
            }
            norm = std::sqrt(norm);
            if (norm == 0.0) break;
            lambda = norm;
            for (auto& xi : nx) xi /= norm;
            x = nx;
        }
        return 2.0 * lambda * 1.5; // safety margin
    }

    static void project_simplex(double* w, int k) {
        std::vector<double> u(w, w + k);
        std::sort(u.begin(), u.end(), std::greater<double>());
        double css = 0.0, theta = 0.0;
        for (int i = 0; i < k; ++i) {
            css += u[i];
            double cand = (css - 1.0) / (i + 1);
            if (u[i] - cand > 0) theta = cand; // valid prefix; the last one is rho
        }
        for (int i = 0; i < k; ++i) w[i] = std::max(0.0, w[i] - theta);
    }

    const flowspec::Graph& g_;
    int n_;
    std::vector<std::vector<int>> paths_;
    std::vector<int> group_start_, group_size_;
};

} // namespace testutil
