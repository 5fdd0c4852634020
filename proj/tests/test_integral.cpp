#include <doctest.h>

#include "flowspec/duality.hpp"
#include "flowspec/integral.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace flowspec;

namespace {

FractionalFlow c4_flow_with_split_diagonals() {
    // cycle 0-1-2-3: adjacent demands on their edges, both diagonals split
    // half/half over the two two-edge routes
    FractionalFlow f;
    f.n = 4;
    f.demands = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    f.routes = {
        {{{0, 1}, 1.0}},
        {{{0, 1, 2}, 0.5}, {{0, 3, 2}, 0.5}},
        {{{0, 3}, 1.0}},
        {{{1, 2}, 1.0}},
        {{{1, 0, 3}, 0.5}, {{1, 2, 3}, 0.5}},
        {{{2, 3}, 1.0}},
    };
    return f;
}

} // namespace

TEST_CASE("rounding an already integral flow keeps it") {
    Graph g = make_path(3);
    FractionalFlow f;
    f.n = 3;
    f.demands = {{0, 1}, {0, 2}, {1, 2}};
    f.routes = {{{{0, 1}, 1.0}}, {{{0, 1, 2}, 1.0}}, {{{1, 2}, 1.0}}};
    RoundingResult r = round_integral(g, f, 8, 3);
    CHECK(integral_con2(3, r.flow) == doctest::Approx(std::sqrt(17.0)));
    for (double v : r.trial_con2) CHECK(v == doctest::Approx(std::sqrt(17.0)));
}

TEST_CASE("C4 rounding: every rounding hits sqrt(50), under the bound") {
    Graph g = make_cycle(4);
    FractionalFlow f = c4_flow_with_split_diagonals();
    f.validate(g);
    CongestionProfile c = congestion(f);
    double frac2 = con_norm(c, 2);
    double frac1 = con_norm(c, 1);
    CHECK(frac2 == doctest::Approx(7.0));
    CHECK(frac1 == doctest::Approx(14.0));

    RoundingResult r = round_integral(g, f, 20, 11);
    double best = integral_con2(4, r.flow);
    // all four roundings of the two diagonals give congestion {4,4,3,3}
    CHECK(best == doctest::Approx(std::sqrt(50.0)));
    CHECK(best <= frac2 + std::sqrt(frac1) + 1e-9);
    for (double v : r.trial_con2) CHECK(best <= v + 1e-12);
}

TEST_CASE("rounding bound holds on solver flows") {
    for (std::uint64_t seed : {61u, 62u, 63u}) {
        Graph g = testutil::random_connected_graph(9, 0.4, seed);
        SolverConfig cfg;
        cfg.max_iters = 40;
        DualitySolution sol = solve_min_con2(g, cfg);
        REQUIRE(sol.flow.has_value());
        double frac2 = con_norm(sol.best_congestion, 2);
        double frac1 = con_norm(sol.best_congestion, 1);
        RoundingResult r = round_integral(g, *sol.flow, 64, seed);
        CHECK(integral_con2(g.num_vertices(), r.flow) <= frac2 + std::sqrt(frac1) + 1e-9);
    }
}

TEST_CASE("intersection number of the star fixture") {
    Graph g = make_star(5);
    DemandGraph h;
    h.terminals = {1, 2, 3, 4};
    h.demand_edges = {{0, 1}, {2, 3}};
    IntegralFlow flow;
    flow.routes = {{1, 0, 2}, {3, 0, 4}};
    CHECK(intersection_number(g, h, flow) == 1);
    CHECK(integral_con2(5, flow) == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("three vertices cannot produce an intersection") {
    Graph g = make_path(3);
    DemandGraph h = DemandGraph::complete(g);
    IntegralFlow flow;
    flow.routes = {{0, 1}, {0, 1, 2}, {1, 2}};
    CHECK(intersection_number(g, h, flow) == 0);
}

TEST_CASE("con2 squared dominates inter on sampled roundings") {
    testutil::IntegralFixture fix = testutil::k6_in_grid();
    std::int64_t inter = intersection_number(fix.graph, fix.demands, fix.flow);
    CHECK(inter > 0);
    double c2 = integral_con2(fix.graph.num_vertices(), fix.flow);
    CHECK(c2 * c2 >= static_cast<double>(inter));
}

TEST_CASE("subsampling at the extremes") {
    testutil::IntegralFixture fix = testutil::k6_in_grid();
    SubsampleResult all = subsample_terminals(fix.demands, fix.flow, 1.0, 5);
    CHECK(all.flow.routes.size() == fix.flow.routes.size());
    CHECK(intersection_number(fix.graph, all.demands, all.flow) ==
          intersection_number(fix.graph, fix.demands, fix.flow));

    SubsampleResult none = subsample_terminals(fix.demands, fix.flow, 0.0, 5);
    CHECK(none.flow.routes.empty());
    CHECK(intersection_number(fix.graph, none.demands, none.flow) == 0);
}

TEST_CASE("subsampling is deterministic in the seed") {
    testutil::IntegralFixture fix = testutil::k6_in_grid();
    SubsampleResult a = subsample_terminals(fix.demands, fix.flow, 0.5, 17);
    SubsampleResult b = subsample_terminals(fix.demands, fix.flow, 0.5, 17);
    CHECK(a.kept_terminals == b.kept_terminals);
    CHECK(a.flow.routes == b.flow.routes);
    CHECK_THROWS_AS(subsample_terminals(fix.demands, fix.flow, 1.5, 0), PreconditionError);
}

TEST_CASE("greedy terminal removal strictly shrinks inter") {
    testutil::IntegralFixture fix = testutil::k6_in_grid();
    std::vector<std::int64_t> trace = greedy_removal_trace(fix.graph, fix.demands, fix.flow);
    REQUIRE(trace.size() >= 2);
    CHECK(trace.back() == 0);
    for (std::size_t i = 0; i + 1 < trace.size(); ++i)
        CHECK(trace[i + 1] <= trace[i] - 1);
}
