// Integral-flow fixtures shared by the unit and acceptance suites.
#pragma once

#include <random>

#include "flowspec/integral.hpp"
#include "flowspec/metric.hpp"

namespace testutil {

struct IntegralFixture {
    flowspec::Graph graph;
    flowspec::DemandGraph demands;
    flowspec::IntegralFlow flow;
};

/// K6 terminals spread over grid2d(5), all 15 demands routed along
/// deterministic shortest paths. Intersections abound.
inline IntegralFixture k6_in_grid() {
    using namespace flowspec;
    Graph g = make_grid2d(5);
    std::vector<int> terminals = {0, 4, 10, 12, 20, 24};
    DemandGraph h;
    h.terminals = terminals;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) h.demand_edges.emplace_back(a, b);
    IntegralFlow flow;
    WeightFunction ones = Eigen::VectorXd::Ones(g.num_vertices());
    for (auto [a, b] : h.demand_edges) {
        DistanceTree t = vertex_weighted_distances(g, ones, terminals[a]);
        flow.routes.push_back(extract_path(t, terminals[b]));
    }
    return {std::move(g), std::move(h), std::move(flow)};
}

/// K_{2,2} on the four corners of grid2d(side): the diagonal corner pair is
/// one side of the bipartition, so the four routes run along the boundary
/// rows and columns and never cross away from shared terminals.
inline IntegralFixture k22_in_grid(int side) {
    using namespace flowspec;
    Graph g = make_grid2d(side);
    int tl = 0, tr = side - 1, bl = side * (side - 1), br = side * side - 1;
    DemandGraph h;
    h.terminals = {tl, tr, bl, br}; // demand ids 0..3
    h.demand_edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    h.bipartition = DemandGraph::Bipartition{{0, 3}, {1, 2}};
    IntegralFlow flow;
    auto row_path = [&](int from, int to, int step) {
        std::vector<int> p;
        for (int v = from;; v += step) {
            p.push_back(v);
            if (v == to) break;
        }
        return p;
    };
    flow.routes.push_back(row_path(tl, tr, 1));        // top row
    flow.routes.push_back(row_path(tl, bl, side));     // left column
    flow.routes.push_back(row_path(tr, br, side));     // right column
    flow.routes.push_back(row_path(bl, br, 1));        // bottom row
    return {std::move(g), std::move(h), std::move(flow)};
}

/// Demand 2k-cycle whose terminals sit in cyclic order on a host cycle
/// (plus optional chords); each demand edge routes along its forward arc,
/// so vertex-disjoint demands get vertex-disjoint paths.
inline IntegralFixture ring_fixture(int n, int k, std::uint64_t seed) {
    using namespace flowspec;
    std::mt19937_64 rng(seed);
    // place 2k distinct positions on the n-cycle
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<int> terminals(pos.begin(), pos.begin() + 2 * k);
    std::sort(terminals.begin(), terminals.end());

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    // random chords keep the host graph interesting but carry no flow
    int chords = static_cast<int>(rng() % 4);
    for (int c = 0; c < chords; ++c) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (v - u <= 1 || (u == 0 && v == n - 1)) continue;
        if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end())
            edges.emplace_back(u, v);
    }
    Graph g(n, std::move(edges));

    DemandGraph h;
    h.terminals = terminals;
    DemandGraph::Bipartition split;
    for (int i = 0; i < 2 * k; ++i)
        (i % 2 == 0 ? split.left : split.right).push_back(i);
    h.bipartition = std::move(split);

    IntegralFlow flow;
    std::vector<std::vector<int>> routes_by_edge;
    for (int i = 0; i < 2 * k; ++i) {
        int j = (i + 1) % (2 * k);
        // forward arc from terminals[i] to terminals[j]
        std::vector<int> arc;
        for (int v = terminals[i];; v = (v + 1) % n) {
            arc.push_back(v);
            if (v == terminals[j]) break;
        }
        int a = std::min(i, j), b = std::max(i, j);
        if (arc.front() != h.terminals[a]) std::reverse(arc.begin(), arc.end());
        h.demand_edges.emplace_back(a, b);
        routes_by_edge.push_back(std::move(arc));
    }
    // demand edges must be sorted consistently with their routes
    std::vector<std::size_t> order(h.demand_edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return h.demand_edges[x] < h.demand_edges[y];
    });
    DemandGraph sorted = h;
    sorted.demand_edges.clear();
    for (std::size_t i : order) {
        sorted.demand_edges.push_back(h.demand_edges[i]);
        flow.routes.push_back(std::move(routes_by_edge[i]));
    }
    return {std::move(g), std::move(sorted), std::move(flow)};
}

} // namespace testutil
