#include "flowspec/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "flowspec/parallel.hpp"

namespace flowspec {

int DemandGraph::degree(int demand_vertex) const {
    int d = 0;
    for (auto [a, b] : demand_edges)
        if (a == demand_vertex || b == demand_vertex) ++d;
    return d;
}

DemandGraph DemandGraph::complete(const Graph& g) {
    DemandGraph h;
    const int n = g.num_vertices();
    h.terminals.resize(n);
    for (int i = 0; i < n; ++i) h.terminals[i] = i;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) h.demand_edges.emplace_back(a, b);
    return h;
}

void DemandGraph::validate(const Graph& g) const {
    std::set<int> image;
    for (int v : terminals) {
        require(v >= 0 && v < g.num_vertices(), "terminal out of range");
        require(image.insert(v).second, "terminal map must be injective");
    }
    for (auto [a, b] : demand_edges) {
        require(a >= 0 && a < num_terminals() && b >= 0 && b < num_terminals() && a < b,
                "bad demand edge");
    }
    if (bipartition) {
        std::vector<int> side(num_terminals(), -1);
        for (int i : bipartition->left) side[i] = 0;
        for (int i : bipartition->right) side[i] = 1;
        for (int i = 0; i < num_terminals(); ++i)
            require(side[i] >= 0, "bipartition must cover all demand vertices");
        for (auto [a, b] : demand_edges)
            require(side[a] != side[b], "demand edge does not cross the bipartition");
    }
}

void IntegralFlow::validate(const Graph& g, const DemandGraph& h) const {
    require(routes.size() == h.demand_edges.size(), "route/demand arity mismatch");
    for (std::size_t i = 0; i < routes.size(); ++i) {
        const auto& p = routes[i];
        auto [a, b] = h.demand_edges[i];
        require(p.size() >= 1, "empty route");
        require(p.front() == h.terminals[a] && p.back() == h.terminals[b],
                "route does not connect its mapped terminals");
        std::set<int> seen(p.begin(), p.end());
        require(seen.size() == p.size(), "route is not a simple path");
        for (std::size_t t = 0; t + 1 < p.size(); ++t)
            require(g.has_edge(p[t], p[t + 1]), "route uses a non-edge");
    }
}

Eigen::VectorXi integral_congestion(int n, const IntegralFlow& flow) {
    Eigen::VectorXi c = Eigen::VectorXi::Zero(n);
    for (const auto& p : flow.routes)
        for (int v : p) c[v] += 1;
    return c;
}

double integral_con2(int n, const IntegralFlow& flow) {
    Eigen::VectorXi c = integral_congestion(n, flow);
    std::int64_t sq = 0;
    for (int v = 0; v < n; ++v) sq += static_cast<std::int64_t>(c[v]) * c[v];
    return std::sqrt(static_cast<double>(sq));
}

RoundingResult round_integral(const Graph& g, const FractionalFlow& flow,
                              int trials, std::uint64_t seed) {
    require(trials >= 1, "need at least one rounding trial");
    flow.validate(g);

    RoundingResult out;
    // Demand graph induced by the flow: terminals are the vertices that
    // appear in some demand, in ascending order.
    std::set<int> terms;
    for (auto [u, v] : flow.demands) {
        terms.insert(u);
        terms.insert(v);
    }
    std::vector<int> term_list(terms.begin(), terms.end());
    std::vector<int> to_demand_vertex(g.num_vertices(), -1);
    for (std::size_t i = 0; i < term_list.size(); ++i) to_demand_vertex[term_list[i]] = static_cast<int>(i);
    out.demands.terminals = term_list;
    for (auto [u, v] : flow.demands)
        out.demands.demand_edges.emplace_back(to_demand_vertex[u], to_demand_vertex[v]);

    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        IntegralFlow trial;
        trial.routes.reserve(flow.routes.size());
        for (const auto& entries : flow.routes) {
            require(!entries.empty(), "demand without routes cannot be rounded");
            double x = unif(rng) ;
            const RouteEntry* pick = &entries.back();
            for (const RouteEntry& e : entries) {
                if (x < e.weight) {
                    pick = &e;
                    break;
                }
                x -= e.weight;
            }
            trial.routes.push_back(pick->path);
        }
        double c2 = integral_con2(g.num_vertices(), trial);
        out.trial_con2.push_back(c2);
        if (c2 < best) {
            best = c2;
            out.flow = std::move(trial);
        }
    }
    return out;
}

std::int64_t intersection_number(const Graph& g, const DemandGraph& h,
                                 const IntegralFlow& flow) {
    flow.validate(g, h);
    const int m = h.num_demands();
    const int n = g.num_vertices();
    std::vector<std::vector<char>> on_path(m, std::vector<char>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int v : flow.routes[i]) on_path[i][v] = 1;

    std::int64_t inter = 0;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = h.demand_edges[i];
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = h.demand_edges[j];
            if (a == c || a == d || b == c || b == d) continue; // < 4 distinct terminals
            bool meet = false;
            for (int v : flow.routes[j])
                if (on_path[i][v]) {
                    meet = true;
                    break;
                }
            if (meet) ++inter;
        }
    }

    // Lemma-level sanity: con_2(flow)^2 >= inter, exactly.
    Eigen::VectorXi c = integral_congestion(n, flow);
    std::int64_t sq = 0;
    for (int v = 0; v < n; ++v) sq += static_cast<std::int64_t>(c[v]) * c[v];
    check_internal(sq >= inter, "con_2^2 >= inter violated");
    return inter;
}

SubsampleResult subsample_terminals(const DemandGraph& h, const IntegralFlow& flow,
                                    double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, "sampling probability out of [0,1]");
    require(flow.routes.size() == h.demand_edges.size(), "route/demand arity mismatch");
    // Demand completeness: every terminal pair present.
    const int u = h.num_terminals();
    require(h.num_demands() == u * (u - 1) / 2, "subsampling requires complete demands");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<char> keep(u, 0);
    SubsampleResult out;
    for (int i = 0; i < u; ++i) {
        keep[i] = unif(rng) < p;
        if (keep[i]) out.kept_terminals.push_back(i);
    }
    std::vector<int> remap(u, -1);
    for (std::size_t i = 0; i < out.kept_terminals.size(); ++i) {
        remap[out.kept_terminals[i]] = static_cast<int>(i);
        out.demands.terminals.push_back(h.terminals[out.kept_terminals[i]]);
    }
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        if (keep[a] && keep[b]) {
            out.demands.demand_edges.emplace_back(remap[a], remap[b]);
            out.flow.routes.push_back(flow.routes[e]);
        }
    }
    return out;
}

std::vector<std::int64_t> greedy_removal_trace(const Graph& g, DemandGraph h,
                                               IntegralFlow flow) {
    std::vector<std::int64_t> trace;
    trace.push_back(intersection_number(g, h, flow));
    while (trace.back() > 0) {
        const int m = h.num_demands();
        const int n = g.num_vertices();
        std::vector<std::vector<char>> on_path(m, std::vector<char>(n, 0));
        for (int i = 0; i < m; ++i)
            for (int v : flow.routes[i]) on_path[i][v] = 1;
        std::vector<std::int64_t> participation(h.num_terminals(), 0);
        for (int i = 0; i < m; ++i) {
            auto [a, b] = h.demand_edges[i];
            for (int j = i + 1; j < m; ++j) {
                auto [c, d] = h.demand_edges[j];
                if (a == c || a == d || b == c || b == d) continue;
                bool meet = false;
                for (int v : flow.routes[j])
                    if (on_path[i][v]) {
                        meet = true;
                        break;
                    }
                if (meet) {
                    ++participation[a];
                    ++participation[b];
                    ++participation[c];
                    ++participation[d];
                }
            }
        }
        int worst = static_cast<int>(std::max_element(participation.begin(), participation.end()) -
                                     participation.begin());

        // Drop `worst`, its incident demands, and relabel.
        DemandGraph nh;
        IntegralFlow nf;
        std::vector<int> remap(h.num_terminals(), -1);
        for (int i = 0, next = 0; i < h.num_terminals(); ++i) {
            if (i == worst) continue;
            remap[i] = next++;
            nh.terminals.push_back(h.terminals[i]);
        }
        for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
            auto [a, b] = h.demand_edges[e];
            if (a == worst || b == worst) continue;
            nh.demand_edges.emplace_back(remap[a], remap[b]);
            nf.routes.push_back(std::move(flow.routes[e]));
        }
        h = std::move(nh);
        flow = std::move(nf);
        trace.push_back(intersection_number(g, h, flow));
    }
    return trace;
}

} // namespace flowspec
