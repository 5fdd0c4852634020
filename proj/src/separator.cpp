#include "flowspec/separator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flowspec/embedding.hpp"

namespace flowspec {

VertexSeparator fhl_sweep(const Graph& g, const WeightFunction& s, const Metric& m,
                          const Eigen::VectorXd& f) {
    const int n = g.num_vertices();
    check_weights(g, s);
    require(m.size() == n && static_cast<int>(f.size()) == n, "size mismatch");
    check_non_expansive(m, f);

    std::vector<double> breakpoints;
    breakpoints.reserve(3 * n);
    for (int v = 0; v < n; ++v) {
        breakpoints.push_back(f[v] - s[v]);
        breakpoints.push_back(f[v]);
        breakpoints.push_back(f[v] + s[v]);
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    std::vector<double> thresholds = breakpoints;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        thresholds.push_back(breakpoints[i] + 0.5 * (breakpoints[i + 1] - breakpoints[i]));

    // The interval endpoints f(v) +- s(v) are rounded independently, so two
    // endpoints that coincide in exact arithmetic can land one ulp apart and
    // open a spurious A-B window. Shrinking both sides by a noise-scale
    // margin keeps every candidate a true separator.
    double scale = 0.0;
    for (double b : breakpoints) scale = std::max(scale, std::abs(b));
    const double eta = 1e-12 * std::max(1.0, scale);

    // One-sided thresholds (A or B empty) always score exactly 1/n, the same
    // as the whole-set fallback below, so only two-sided candidates compete.
    VertexSeparator best;
    best.alpha = std::numeric_limits<double>::infinity();
    for (double t : thresholds) {
        VertexSeparator cand;
        for (int v = 0; v < n; ++v) {
            if (f[v] + s[v] < t - eta)
                cand.a.push_back(v);
            else if (f[v] - s[v] > t + eta)
                cand.b.push_back(v);
            else
                cand.s.push_back(v);
        }
        if (cand.a.empty() || cand.b.empty()) continue;
        double na = static_cast<double>(cand.a.size());
        double nb = static_cast<double>(cand.b.size());
        double ns = static_cast<double>(cand.s.size());
        cand.alpha = ns / ((na + ns) * (nb + ns));

        // no A-B edge can exist since |f(u)-f(v)| <= d_s(u,v) <= s(u)+s(v)
        std::vector<char> in_a(n, 0), in_b(n, 0);
        for (int v : cand.a) in_a[v] = 1;
        for (int v : cand.b) in_b[v] = 1;
        for (auto [u, v] : g.edges())
            check_internal(!((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])),
                           "separator candidate has an A-B edge");

        if (cand.alpha < best.alpha) best = std::move(cand);
    }
    double fallback_alpha = 1.0 / n; // S = V
    if (best.alpha > fallback_alpha) {
        best = VertexSeparator{};
        for (int v = 0; v < n; ++v) best.s.push_back(v);
        best.alpha = fallback_alpha;
    }

    double spread = embedding_objective(f, 1);
    if (spread > 0.0) {
        best.bound = 2.0 * s.sum() / spread;
        check_internal(best.alpha <= best.bound + 1e-9, "separator sweep bound violated");
    } else {
        best.bound = std::numeric_limits<double>::infinity();
        best.degenerate = true;
    }
    return best;
}

namespace {

struct Piece {
    std::vector<int> vertices; // sorted
};

} // namespace

BalancedEdgeSeparator recursive_edge_separator(const Graph& g, const EdgeCutter& cutter,
                                               double delta) {
    const int n = g.num_vertices();
    require(n >= 2, "separator needs n >= 2");
    require(delta > 0.0 && delta <= 1.0 / 3.0 + 1e-12, "delta must lie in (0, 1/3]");

    std::vector<Piece> pieces;
    {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        pieces.push_back({std::move(all)});
    }

    BalancedEdgeSeparator out;
    const double piece_cap = (1.0 - delta) * n;
    for (;;) {
        std::size_t largest = 0;
        for (std::size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].vertices.size() > pieces[largest].vertices.size()) largest = i;
        if (static_cast<double>(pieces[largest].vertices.size()) <= piece_cap) break;

        std::vector<int> back;
        Graph sub = g.induced_subgraph(pieces[largest].vertices, &back);
        CutResult cut = cutter(sub);
        ++out.levels;
        out.cut_budget += cut.crossing_edges;

        std::vector<char> in_cut(sub.num_vertices(), 0);
        for (int v : cut.side) in_cut[v] = 1;
        std::vector<int> side_a, side_b;
        for (int v = 0; v < sub.num_vertices(); ++v)
            (in_cut[v] ? side_a : side_b).push_back(back[v]);
        check_internal(!side_a.empty() && !side_b.empty(), "cutter returned a trivial cut");

        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(largest));
        for (const auto& comp : g.components_within(side_a)) pieces.push_back({comp});
        for (const auto& comp : g.components_within(side_b)) pieces.push_back({comp});
    }

    // Pack pieces into two sides with min size >= delta n. Any piece that is
    // already large enough can stand alone; otherwise all pieces are small
    // and greedy balancing leaves the sides within one piece of each other.
    std::vector<int> side;
    std::size_t big = pieces.size();
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (static_cast<double>(pieces[i].vertices.size()) >= delta * n) {
            big = i;
            break;
        }
    if (big < pieces.size()) {
        side = pieces[big].vertices;
    } else {
        std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
            if (x.vertices.size() != y.vertices.size())
                return x.vertices.size() > y.vertices.size();
            return x.vertices < y.vertices;
        });
        std::size_t sa = 0, sb = 0;
        std::vector<int> other;
        for (const auto& p : pieces) {
            if (sa <= sb) {
                side.insert(side.end(), p.vertices.begin(), p.vertices.end());
                sa += p.vertices.size();
            } else {
                other.insert(other.end(), p.vertices.begin(), p.vertices.end());
                sb += p.vertices.size();
            }
        }
        if (sb < sa) side = std::move(other); // return the smaller side
    }
    std::sort(side.begin(), side.end());

    std::vector<char> in_side(n, 0);
    for (int v : side) in_side[v] = 1;
    for (auto [u, v] : g.edges())
        if (in_side[u] != in_side[v]) ++out.cut_edges;
    if (2 * static_cast<int>(side.size()) > n) {
        side.clear();
        for (int v = 0; v < n; ++v)
            if (!in_side[v]) side.push_back(v);
    }
    out.side = std::move(side);

    int small = std::min<int>(static_cast<int>(out.side.size()),
                              n - static_cast<int>(out.side.size()));
    check_internal(small >= delta * n - 1e-9, "separator balance violated");
    check_internal(out.cut_edges <= out.cut_budget, "cut accounting violated");
    return out;
}

} // namespace flowspec
