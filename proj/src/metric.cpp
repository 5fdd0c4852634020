#include "flowspec/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "flowspec/parallel.hpp"

namespace flowspec {

DistanceTree vertex_weighted_distances(const Graph& g, const WeightFunction& s, int source) {
    check_weights(g, s);
    const int n = g.num_vertices();
    require(source >= 0 && source < n, "source out of range");

    DistanceTree t;
    t.source = source;
    t.dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    t.parent.assign(n, -1);

    // Internal labels carry the full vertex-sum cost including s(source);
    // the convention d_s(source, source) = 0 is applied on output.
    std::vector<double> label(n, std::numeric_limits<double>::infinity());
    std::vector<char> settled(n, 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    label[source] = s[source];
    heap.push({label[source], source});

    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (settled[u] || du > label[u]) continue;
        settled[u] = 1;
        for (int v : g.neighbors(u)) {
            double nd = label[u] + s[v];
            if (nd < label[v]) {
                label[v] = nd;
                t.parent[v] = u;
                heap.push({nd, v});
            } else if (nd == label[v] && u < t.parent[v]) {
                t.parent[v] = u; // smaller-index predecessor wins ties
            }
        }
    }

    for (int v = 0; v < n; ++v) t.dist[v] = label[v];
    t.dist[source] = 0.0;
    t.parent[source] = -1;
    return t;
}

std::vector<int> extract_path(const DistanceTree& tree, int v) {
    std::vector<int> path;
    for (int x = v; x != -1; x = tree.parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    check_internal(path.front() == tree.source, "broken predecessor chain");
    return path;
}

namespace {

// Float min-plus closure. Returns the largest decrease applied by a closure
// step; symmetry is restored after each pass and the loop reruns until the
// table is a true fixpoint of both operations.
double tighten_table(Eigen::MatrixXd& d) {
    const int n = static_cast<int>(d.rows());
    double worst = 0.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < n; ++w) {
            for (int v = 0; v < n; ++v) {
                const double dwv = d(w, v);
                auto col_v = d.col(v);
                auto col_w = d.col(w);
                for (int u = 0; u < n; ++u) {
                    double via = col_w[u] + dwv;
                    if (via < col_v[u]) {
                        worst = std::max(worst, col_v[u] - via);
                        col_v[u] = via;
                        changed = true;
                    }
                }
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double m = std::min(d(u, v), d(v, u));
                if (d(u, v) != m || d(v, u) != m) {
                    d(u, v) = m;
                    d(v, u) = m;
                    changed = true;
                }
            }
    }
    return worst;
}

} // namespace

Metric::Metric(Eigen::MatrixXd d, Origin origin) : table_(std::move(d)), origin_(origin) {
    const int n = static_cast<int>(table_.rows());
    require(n >= 1 && table_.cols() == n, "metric table must be square");
    for (int u = 0; u < n; ++u) {
        require(table_(u, u) == 0.0, "metric diagonal must be zero");
        for (int v = u + 1; v < n; ++v) {
            require(std::isfinite(table_(u, v)) && table_(u, v) >= 0.0,
                    "metric entries must be finite and non-negative");
            require(std::abs(table_(u, v) - table_(v, u)) <= 1e-9, "metric must be symmetric");
            double sym = std::min(table_(u, v), table_(v, u));
            table_(u, v) = sym;
            table_(v, u) = sym;
        }
    }
    double slack = tighten_table(table_);
    require(slack <= 1e-9, "triangle inequality violated beyond tolerance");
}

double Metric::max_distance() const {
    return table_.maxCoeff();
}

double Metric::distance_to_set(int u, const std::vector<int>& set) const {
    require(!set.empty(), "distance to empty set");
    double best = std::numeric_limits<double>::infinity();
    for (int w : set) best = std::min(best, table_(u, w));
    return best;
}

double Metric::sum_pairs() const {
    const int n = size();
    double acc = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) acc += table_(u, v);
    return acc;
}

double Metric::sum_pairs_pow(int p) const {
    const int n = size();
    double acc = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = table_(u, v);
            acc += (p == 1) ? x : x * x;
        }
    return acc;
}

Metric all_pairs_metric(const Graph& g, const WeightFunction& s) {
    const int n = g.num_vertices();
    Eigen::MatrixXd table(n, n);
    parallel_for(n, [&](int u) {
        DistanceTree t = vertex_weighted_distances(g, s, u);
        table.row(u) = t.dist.transpose();
    });
    return Metric(std::move(table), Metric::Origin::vertex_weighted);
}

Metric hop_metric(const Graph& g) {
    const int n = g.num_vertices();
    Eigen::MatrixXd table = Eigen::MatrixXd::Zero(n, n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) table(s, v) = dist[v];
    }
    return Metric(std::move(table), Metric::Origin::explicit_table);
}

} // namespace flowspec
