#include "flowspec/flow.hpp"

#include <cmath>
#include <set>

namespace flowspec {

FractionalFlow FractionalFlow::all_pairs_demands(const Graph& g) {
    FractionalFlow f;
    f.n = g.num_vertices();
    for (int u = 0; u < f.n; ++u)
        for (int v = u + 1; v < f.n; ++v) f.demands.emplace_back(u, v);
    f.routes.resize(f.demands.size());
    return f;
}

void FractionalFlow::validate(const Graph& g) const {
    require(n == g.num_vertices(), "flow/graph size mismatch");
    require(demands.size() == routes.size(), "demand/route arity mismatch");
    for (std::size_t i = 0; i < demands.size(); ++i) {
        auto [u, v] = demands[i];
        require(u >= 0 && u < n && v > u && v < n, "bad demand pair");
        double total = 0.0;
        for (const RouteEntry& r : routes[i]) {
            require(r.weight >= 0.0, "negative route weight");
            require(r.path.size() >= 2 && r.path.front() == u && r.path.back() == v,
                    "route does not connect its demand endpoints");
            std::set<int> seen(r.path.begin(), r.path.end());
            require(seen.size() == r.path.size(), "route is not a simple path");
            for (std::size_t t = 0; t + 1 < r.path.size(); ++t)
                require(g.has_edge(r.path[t], r.path[t + 1]), "route uses a non-edge");
            total += r.weight;
        }
        require(std::abs(total - 1.0) <= 1e-9, "route weights must sum to 1");
    }
}

CongestionProfile congestion(const FractionalFlow& flow) {
    CongestionProfile c = Eigen::VectorXd::Zero(flow.n);
    for (const auto& entries : flow.routes)
        for (const RouteEntry& r : entries)
            for (int v : r.path) c[v] += r.weight;
    return c;
}

double con_norm(const CongestionProfile& profile, int p) {
    require(p == 1 || p == 2, "con_norm supports p in {1, 2}");
    if (p == 1) return profile.lpNorm<1>();
    return profile.norm();
}

} // namespace flowspec
