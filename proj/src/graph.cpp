#include "flowspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace flowspec {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    require(n >= 1, "graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        require(u != v, "self-loop rejected: vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        require(edges[i] != edges[i - 1], "duplicate edge rejected");
    edges_ = std::move(edges);

    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
    }

    // Connectivity check via BFS from vertex 0.
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    require(reached == n_, "graph is disconnected");
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Eigen::MatrixXd Graph::laplacian_dense() const {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [u, v] : edges_) {
        L(u, u) += 1.0;
        L(v, v) += 1.0;
        L(u, v) -= 1.0;
        L(v, u) -= 1.0;
    }
    return L;
}

void Graph::laplacian_apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y.resize(n_);
    for (int u = 0; u < n_; ++u) {
        double acc = static_cast<double>(adjacency_[u].size()) * x[u];
        for (int v : adjacency_[u]) acc -= x[v];
        y[u] = acc;
    }
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices,
                              std::vector<int>* back_map) const {
    std::vector<int> fwd(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) fwd[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_) {
        if (fwd[u] >= 0 && fwd[v] >= 0) sub_edges.emplace_back(fwd[u], fwd[v]);
    }
    if (back_map) *back_map = vertices;
    return Graph(static_cast<int>(vertices.size()), std::move(sub_edges));
}

std::vector<std::vector<int>>
Graph::components_within(const std::vector<int>& vertices) const {
    std::vector<char> inside(n_, 0), seen(n_, 0);
    for (int v : vertices) inside[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int start : vertices) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : adjacency_[u])
                if (inside[v] && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

void check_weights(const Graph& g, const WeightFunction& s) {
    require(s.size() == g.num_vertices(), "weight vector size mismatch");
    for (Eigen::Index i = 0; i < s.size(); ++i)
        require(s[i] >= 0.0 && std::isfinite(s[i]), "weights must be non-negative and finite");
}

double rayleigh_quotient(const Graph& g, const Eigen::VectorXd& f) {
    require(f.size() == g.num_vertices(), "vector size mismatch");
    if (f.maxCoeff() == f.minCoeff())
        return std::numeric_limits<double>::infinity(); // degenerate direction
    double num = 0.0;
    for (auto [u, v] : g.edges()) {
        double d = f[u] - f[v];
        num += d * d;
    }
    Eigen::VectorXd centered = f.array() - f.mean();
    double den = centered.squaredNorm();
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

GraphFamily parse_family(const std::string& name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "grid2d") return GraphFamily::grid2d;
    if (name == "torus2d") return GraphFamily::torus2d;
    if (name == "grid3d") return GraphFamily::grid3d;
    if (name == "knn" || name == "knn_random_points") return GraphFamily::knn_random_points;
    if (name == "complete") return GraphFamily::complete;
    if (name == "star") return GraphFamily::star;
    throw ParseError("unknown graph family: " + name);
}

std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::grid2d: return "grid2d";
        case GraphFamily::torus2d: return "torus2d";
        case GraphFamily::grid3d: return "grid3d";
        case GraphFamily::knn_random_points: return "knn_random_points";
        case GraphFamily::complete: return "complete";
        case GraphFamily::star: return "star";
    }
    return "?";
}

Graph generate(GraphFamily family, const GenerateParams& p) {
    switch (family) {
        case GraphFamily::path: return make_path(p.size);
        case GraphFamily::cycle: return make_cycle(p.size);
        case GraphFamily::grid2d: return make_grid2d(p.size);
        case GraphFamily::torus2d: return make_torus2d(p.size);
        case GraphFamily::grid3d: return make_grid3d(p.size);
        case GraphFamily::knn_random_points:
            return make_knn_random_points(p.size, p.k, p.dim, p.seed);
        case GraphFamily::complete: return make_complete(p.size);
        case GraphFamily::star: return make_star(p.size);
    }
    throw PreconditionError("unknown family");
}

Graph make_path(int n) {
    require(n >= 2, "path needs size >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs size >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph make_grid2d(int side) {
    require(side >= 2, "grid2d needs side >= 2");
    std::vector<std::pair<int, int>> e;
    auto id = [side](int r, int c) { return r * side + c; };
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            if (c + 1 < side) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < side) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(side * side, std::move(e));
}

Graph make_torus2d(int side) {
    require(side >= 3, "torus2d needs side >= 3 (smaller sides create parallel edges)");
    std::vector<std::pair<int, int>> e;
    auto id = [side](int r, int c) { return r * side + c; };
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            e.emplace_back(id(r, c), id(r, (c + 1) % side));
            e.emplace_back(id(r, c), id((r + 1) % side, c));
        }
    return Graph(side * side, std::move(e));
}

Graph make_grid3d(int side) {
    require(side >= 2, "grid3d needs side >= 2");
    std::vector<std::pair<int, int>> e;
    auto id = [side](int x, int y, int z) { return (x * side + y) * side + z; };
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            for (int z = 0; z < side; ++z) {
                if (x + 1 < side) e.emplace_back(id(x, y, z), id(x + 1, y, z));
                if (y + 1 < side) e.emplace_back(id(x, y, z), id(x, y + 1, z));
                if (z + 1 < side) e.emplace_back(id(x, y, z), id(x, y, z + 1));
            }
    return Graph(side * side * side, std::move(e));
}

Graph make_complete(int n) {
    require(n >= 2, "complete needs size >= 2");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph make_star(int n) {
    require(n >= 2, "star needs size >= 2");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, std::move(e));
}

Graph make_knn_random_points(int n, int k, int dim, std::uint64_t seed) {
    require(k >= 1 && dim >= 1, "knn needs k >= 1 and dim >= 1");
    require(n >= k + 1, "knn needs point count >= k+1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (double& x : p) x = unif(rng);

    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<double, int>> cand;
    for (int u = 0; u < n; ++u) {
        cand.clear();
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            double d2 = 0.0;
            for (int t = 0; t < dim; ++t) {
                double dx = pts[u][t] - pts[v][t];
                d2 += dx * dx;
            }
            cand.emplace_back(d2, v);
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        for (int i = 0; i < k; ++i) {
            int v = cand[i].second;
            edge_set.insert({std::min(u, v), std::max(u, v)});
        }
    }
    std::vector<std::pair<int, int>> e(edge_set.begin(), edge_set.end());
    try {
        return Graph(n, std::move(e));
    } catch (const PreconditionError&) {
        throw PreconditionError("knn_random_points produced a disconnected graph; "
                                "increase k or change the seed");
    }
}

} // namespace flowspec
