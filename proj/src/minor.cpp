#include "flowspec/minor.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace flowspec {

void verify_branch_decomposition(const Graph& g, const DemandGraph& h,
                                 const BranchDecomposition& bd) {
    check_internal(bd.branch_sets.size() == h.terminals.size(),
                   "one branch set per demand vertex required");
    check_internal(bd.witness_edges.size() == h.demand_edges.size(),
                   "one witness edge per demand edge required");

    std::vector<int> owner(g.num_vertices(), -1);
    for (std::size_t i = 0; i < bd.branch_sets.size(); ++i) {
        check_internal(!bd.branch_sets[i].empty(), "empty branch set");
        for (int v : bd.branch_sets[i]) {
            check_internal(v >= 0 && v < g.num_vertices(), "branch member out of range");
            check_internal(owner[v] == -1, "branch sets are not disjoint");
            owner[v] = static_cast<int>(i);
        }
    }
    for (const auto& set : bd.branch_sets) {
        // connectivity by BFS within the set
        std::set<int> members(set.begin(), set.end());
        std::queue<int> q;
        std::set<int> seen;
        q.push(set.front());
        seen.insert(set.front());
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (members.count(v) && !seen.count(v)) {
                    seen.insert(v);
                    q.push(v);
                }
        }
        check_internal(seen.size() == members.size(), "branch set is not connected");
    }
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        auto [u, v] = bd.witness_edges[e];
        check_internal(g.has_edge(u, v), "witness is not a graph edge");
        check_internal(owner[u] == a && owner[v] == b, "witness edge joins the wrong sets");
    }
}

BranchDecomposition extract_minor(const Graph& g, const DemandGraph& h,
                                  const IntegralFlow& flow) {
    h.validate(g);
    flow.validate(g, h);
    require(h.bipartition.has_value(), "extract_minor needs a bipartite demand graph");
    std::int64_t inter = intersection_number(g, h, flow);
    require(inter == 0, "extract_minor needs an intersection-free flow, inter = " +
                            std::to_string(inter));
    for (int i = 0; i < h.num_terminals(); ++i)
        require(h.degree(i) >= 2,
                "extract_minor needs minimum demand degree 2 (vertex " + std::to_string(i) + ")");

    const int n = g.num_vertices();
    const int u_count = h.num_terminals();
    std::vector<char> in_left(u_count, 0);
    for (int i : h.bipartition->left) in_left[i] = 1;

    // V_i = union of flow paths incident to demand vertex i.
    std::vector<std::vector<char>> incident(u_count, std::vector<char>(n, 0));
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        for (int v : flow.routes[e]) {
            incident[a][v] = 1;
            incident[b][v] = 1;
        }
    }
    // other_left[i][v] = 1 iff v lies on V_r for some left vertex r != i.
    std::vector<int> left_cover_count(n, 0);
    for (int i = 0; i < u_count; ++i)
        if (in_left[i])
            for (int v = 0; v < n; ++v) left_cover_count[v] += incident[i][v];

    BranchDecomposition bd;
    bd.branch_sets.assign(u_count, {});
    bd.witness_edges.assign(h.demand_edges.size(), {-1, -1});

    std::vector<std::vector<char>> member(u_count, std::vector<char>(n, 0));
    std::vector<std::size_t> prefix_len(h.demand_edges.size(), 0);

    // Left sets: per incident demand, take the prefix scanned from the left
    // terminal until a vertex covered by some other left vertex's paths.
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        int li = in_left[a] ? a : b;
        std::vector<int> path = flow.routes[e];
        if (path.front() != h.terminals[li]) std::reverse(path.begin(), path.end());
        std::size_t t = path.size();
        for (std::size_t idx = 0; idx < path.size(); ++idx) {
            int v = path[idx];
            int others = left_cover_count[v] - (incident[li][v] ? 1 : 0);
            if (others > 0) {
                t = idx;
                break;
            }
        }
        prefix_len[e] = t;
        for (std::size_t idx = 0; idx < t; ++idx) member[li][path[idx]] = 1;
    }
    // Right sets: leftovers of the incident paths.
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        int ri = in_left[a] ? b : a;
        for (int v : flow.routes[e]) {
            bool in_some_left = false;
            for (int i = 0; i < u_count && !in_some_left; ++i)
                if (in_left[i] && member[i][v]) in_some_left = true;
            if (!in_some_left) member[ri][v] = 1;
        }
    }
    for (int i = 0; i < u_count; ++i)
        for (int v = 0; v < n; ++v)
            if (member[i][v]) bd.branch_sets[i].push_back(v);

    // Witness edges: the prefix/suffix split point of each routed path.
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        int li = in_left[a] ? a : b;
        std::vector<int> path = flow.routes[e];
        if (path.front() != h.terminals[li]) std::reverse(path.begin(), path.end());
        std::size_t t = prefix_len[e];
        check_internal(t >= 1 && t < path.size(),
                       "flow path fully absorbed by one side; cannot witness demand edge");
        int u = path[t - 1], v = path[t];
        bd.witness_edges[e] = in_left[a] ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    verify_branch_decomposition(g, h, bd);
    return bd;
}

int branch_set_depth(const Graph& g, const BranchDecomposition& bd) {
    const int n = g.num_vertices();
    int depth = 0;
    for (const auto& set : bd.branch_sets) {
        for (int src : set) {
            std::vector<int> dist(n, -1);
            std::queue<int> q;
            q.push(src);
            dist[src] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : g.neighbors(u))
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        q.push(v);
                    }
            }
            for (int other : set) depth = std::max(depth, dist[other]);
        }
    }
    return depth;
}

} // namespace flowspec
