#include "flowspec/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <random>

#include "flowspec/parallel.hpp"

namespace flowspec {

void PaddedPartition::validate(const Metric& m) const {
    const int n = m.size();
    require(static_cast<int>(assignment.size()) == n, "assignment size mismatch");
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        require(!clusters[c].empty(), "empty cluster");
        for (int v : clusters[c]) {
            require(v >= 0 && v < n && !seen[v], "clusters must partition the points");
            require(assignment[v] == static_cast<int>(c), "assignment/cluster mismatch");
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < clusters[c].size(); ++i)
            for (std::size_t j = i + 1; j < clusters[c].size(); ++j)
                require(m(clusters[c][i], clusters[c][j]) <= delta,
                        "cluster diameter exceeds delta");
    }
    for (int v = 0; v < n; ++v) require(seen[v], "point not covered by any cluster");
}

namespace {

PaddedPartition from_assignment(std::vector<int> raw, double delta, double alpha) {
    // Compact cluster ids in order of first appearance.
    PaddedPartition p;
    p.delta = delta;
    p.alpha = alpha;
    const int n = static_cast<int>(raw.size());
    std::vector<int> compact(raw.size(), -1);
    p.assignment.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int id = raw[v];
        if (compact[id] < 0) {
            compact[id] = next++;
            p.clusters.emplace_back();
        }
        p.assignment[v] = compact[id];
        p.clusters[compact[id]].push_back(v);
    }
    return p;
}

} // namespace

PaddedPartition ckr_partition(const Metric& m, double delta, std::uint64_t seed) {
    require(delta > 0.0, "ckr_partition needs delta > 0");
    const int n = m.size();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius_dist(delta / 4.0, delta / 2.0);
    double r = radius_dist(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<int> raw(n, -1);
    for (int v = 0; v < n; ++v) {
        for (int center : perm) {
            if (m(center, v) <= r) {
                raw[v] = center;
                break;
            }
        }
        // every point is within distance 0 <= r of itself
        check_internal(raw[v] >= 0, "ckr left a point unassigned");
    }
    double alpha = 8.0 * std::log(std::max(n, 2));
    return from_assignment(std::move(raw), delta, alpha);
}

namespace {

// Splits every cell of `raw` into graph components and renumbers.
std::vector<int> split_components(const Graph& g, const std::vector<int>& raw) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> groups;
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return raw[a] < raw[b]; });
        for (int v : order) {
            if (groups.empty() || raw[groups.back().front()] != raw[v]) groups.emplace_back();
            groups.back().push_back(v);
        }
    }
    std::vector<int> out(n, -1);
    int next = 0;
    for (const auto& grp : groups)
        for (const auto& comp : g.components_within(grp)) {
            for (int v : comp) out[v] = next;
            ++next;
        }
    return out;
}

} // namespace

PaddedPartition chop_partition(const Graph& g, const WeightFunction& s, double delta,
                               int rounds, std::uint64_t seed) {
    return chop_partition(g, s, all_pairs_metric(g, s), delta, rounds, seed);
}

PaddedPartition chop_partition(const Graph& g, const WeightFunction& s, const Metric& m,
                               double delta, int rounds, std::uint64_t seed) {
    require(delta > 0.0, "chop_partition needs delta > 0");
    require(rounds >= 1, "chop_partition needs rounds >= 1");
    check_weights(g, s);
    const int n = g.num_vertices();
    const double width = delta / rounds;

    std::mt19937_64 rng(seed);
    std::vector<int> cell(n, 0);
    for (int round = 0; round < rounds; ++round) {
        int root = std::uniform_int_distribution<int>(0, n - 1)(rng);
        double jitter = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        // Each round cuts width-delta shells; offsets stagger by
        // delta/rounds across rounds, so the union of the cuts refines the
        // layering at granularity delta/rounds. The innermost shell absorbs
        // the offset, which keeps a single cluster whenever delta reaches
        // the weighted diameter.
        double offset = (round + jitter) * width;
        DistanceTree t = vertex_weighted_distances(g, s, root);
        std::vector<int> refined(n);
        int stride = n; // cells are < n after renumbering
        for (int v = 0; v < n; ++v) {
            double d = t.dist[v];
            int shell = d < offset + delta ? 0 : static_cast<int>(std::floor((d - offset) / delta));
            refined[v] = cell[v] + stride * shell;
        }
        // renumber compactly, then split into graph components
        {
            std::vector<int> ids = refined;
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            for (int v = 0; v < n; ++v)
                refined[v] = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), refined[v]) -
                                              ids.begin());
        }
        cell = split_components(g, refined);
    }

    // Clip and pack: within every cell, grow maximal diameter-delta pieces
    // breadth-first from anchors drawn in random order, admitting a vertex
    // only while the piece diameter stays within delta. Ball carving at
    // radius delta/2 would shatter everything to near-singletons once delta
    // drops under two hop costs, which wrecks both the measured padding and
    // the embedding quality downstream.
    std::vector<std::vector<int>> pending;
    {
        std::vector<std::vector<int>> by_cell;
        for (int v = 0; v < n; ++v) {
            if (cell[v] >= static_cast<int>(by_cell.size())) by_cell.resize(cell[v] + 1);
            by_cell[cell[v]].push_back(v);
        }
        for (auto& c : by_cell)
            if (!c.empty()) pending.push_back(std::move(c));
    }
    std::vector<int> raw(n, -1);
    int next = 0;
    std::vector<char> in_cluster(n, 0), taken(n, 0);
    for (auto& cluster : pending) {
        std::vector<int> anchors = cluster;
        std::shuffle(anchors.begin(), anchors.end(), rng);
        for (int v : cluster) in_cluster[v] = 1;
        for (int anchor : anchors) {
            if (taken[anchor]) continue;
            std::vector<int> grown{anchor};
            taken[anchor] = 1;
            std::vector<int> frontier{anchor};
            while (!frontier.empty()) {
                std::vector<int> nextfrontier;
                for (int u : frontier) {
                    for (int v : g.neighbors(u)) {
                        if (!in_cluster[v] || taken[v]) continue;
                        bool fits = true;
                        for (int w : grown)
                            if (m(w, v) > delta) {
                                fits = false;
                                break;
                            }
                        if (!fits) continue;
                        taken[v] = 1;
                        grown.push_back(v);
                        nextfrontier.push_back(v);
                    }
                }
                frontier = std::move(nextfrontier);
            }
            for (int v : grown) raw[v] = next;
            ++next;
        }
        for (int v : cluster) in_cluster[v] = 0;
    }

    // Repack: the annulus intersections leave shards far below the
    // diameter budget. Merging graph-adjacent clusters while the union
    // stays within delta only increases every escape distance, so the
    // measured padding improves monotonically.
    {
        std::vector<std::vector<int>> members;
        {
            std::vector<int> ids = raw;
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            members.resize(ids.size());
            for (int v = 0; v < n; ++v) {
                int id = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), raw[v]) -
                                          ids.begin());
                raw[v] = id;
                members[id].push_back(v);
            }
        }
        auto union_fits = [&](const std::vector<int>& a, const std::vector<int>& b) {
            for (int u : a)
                for (int v : b)
                    if (m(u, v) > delta) return false;
            return true;
        };
        const int k = static_cast<int>(members.size());
        bool merged = true;
        while (merged) {
            merged = false;
            for (int a = 0; a < k; ++a) {
                if (members[a].empty()) continue;
                for (int b = a + 1; b < k; ++b) {
                    if (members[b].empty()) continue;
                    if (!union_fits(members[a], members[b])) continue;
                    for (int w : members[b]) raw[w] = a;
                    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
                    members[b].clear();
                    merged = true;
                }
            }
        }
    }

    double alpha = static_cast<double>(rounds) * rounds; // nominal KPR-style target
    PaddedPartition p = from_assignment(std::move(raw), delta, alpha);
    p.validate(m);
    return p;
}

PartitionSampler make_ckr_sampler(const Metric& m) {
    return [&m](double delta, std::uint64_t seed) { return ckr_partition(m, delta, seed); };
}

PartitionSampler make_chop_sampler(const Graph& g, const WeightFunction& s, int rounds) {
    auto weights = std::make_shared<WeightFunction>(s);
    auto metric = std::make_shared<Metric>(all_pairs_metric(g, s));
    return [&g, weights, metric, rounds](double delta, std::uint64_t seed) {
        return chop_partition(g, *weights, *metric, delta, rounds, seed);
    };
}

PaddingEstimate measure_padding(const PartitionSampler& sampler, const Metric& m,
                                double delta, int samples, std::uint64_t seed) {
    require(samples >= 1, "need at least one sample");
    const int n = m.size();
    // mu[x][t]: distance from x to the nearest point outside x's cluster in
    // sample t (infinity for a single cluster).
    std::vector<std::vector<double>> mu(n, std::vector<double>(samples));
    std::vector<PaddedPartition> parts(samples);
    parallel_for(samples, [&](int t) {
        parts[t] = sampler(delta, derive_seed(seed, static_cast<std::uint64_t>(t)));
    });
    for (int t = 0; t < samples; ++t) {
        const auto& part = parts[t];
        for (int x = 0; x < n; ++x) {
            double out = std::numeric_limits<double>::infinity();
            for (int y = 0; y < n; ++y)
                if (part.assignment[y] != part.assignment[x]) out = std::min(out, m(x, y));
            mu[x][t] = out;
        }
    }

    // For each x, the K-th largest escape distance with K = ceil(samples/2):
    // the closed rho-ball stays inside the cluster with probability >= 1/2
    // exactly when rho is strictly below that value.
    const int K = (samples + 1) / 2;
    double min_u = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
        std::nth_element(mu[x].begin(), mu[x].begin() + (K - 1), mu[x].end(),
                         std::greater<double>());
        min_u = std::min(min_u, mu[x][K - 1]);
    }

    PaddingEstimate est;
    est.samples = samples;
    if (min_u <= 0.0) {
        est.rho_hat = 0.0;
        est.alpha_hat = std::numeric_limits<double>::infinity();
    } else if (std::isinf(min_u)) {
        // everything always lands in one cluster: padded at any radius
        est.rho_hat = m.max_distance();
        est.alpha_hat = est.rho_hat > 0.0 ? delta / est.rho_hat : 1.0;
    } else {
        est.rho_hat = min_u * (1.0 - 1e-12);
        est.alpha_hat = delta / est.rho_hat;
    }
    return est;
}

} // namespace flowspec
