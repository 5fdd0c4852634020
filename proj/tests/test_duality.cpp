#include <doctest.h>

#include <random>

#include "flowspec/duality.hpp"
#include "flowspec/scaling.hpp"
#include "test_util.hpp"

using namespace flowspec;

TEST_CASE("lambda_s on the 3-path") {
    Graph g = make_path(3);
    CHECK(lambda_s(g, Eigen::Vector3d(2, 3, 2)) ==
          doctest::Approx(std::sqrt(17.0)).epsilon(1e-12));
    CHECK(lambda_s(g, Eigen::Vector3d(1, 1, 1)) ==
          doctest::Approx(7.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(lambda_s(g, Eigen::Vector3d(0, 0, 0)), PreconditionError);
}

TEST_CASE("lambda_s is scale invariant") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.01, 2.0);
    for (std::uint64_t seed : {41u, 42u, 43u}) {
        Graph g = testutil::random_connected_graph(8, 0.4, seed);
        WeightFunction s(8);
        for (int v = 0; v < 8; ++v) s[v] = unif(rng);
        double base = lambda_s(g, s);
        for (double t : {0.25, 3.0, 1e4}) {
            WeightFunction scaled = t * s;
            CHECK(lambda_s(g, scaled) == doctest::Approx(base).epsilon(1e-12));
        }
    }
}

TEST_CASE("P3 strong duality at the forced flow") {
    Graph g = make_path(3);
    SolverConfig cfg;
    cfg.tol = 1e-6;
    DualitySolution sol = solve_min_con2(g, cfg);
    CHECK(sol.converged);
    CHECK(sol.primal_value == doctest::Approx(std::sqrt(17.0)).epsilon(1e-6));
    CHECK(sol.dual_value == doctest::Approx(std::sqrt(17.0)).epsilon(1e-6));
    REQUIRE(sol.flow.has_value());
    CHECK(con_norm(congestion(*sol.flow), 2) == doctest::Approx(sol.dual_value).epsilon(1e-12));
}

TEST_CASE("K2 duality: single demand") {
    Graph g = make_complete(2);
    DualitySolution sol = solve_min_con2(g);
    CHECK(sol.dual_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sol.primal_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sol.weights[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("weak duality and monotone best values along the trace") {
    for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
        Graph g = testutil::random_connected_graph(9, 0.4, seed);
        SolverConfig cfg;
        cfg.max_iters = 120;
        DualitySolution sol = solve_min_con2(g, cfg);
        REQUIRE(!sol.trace.empty());
        double best_primal = 0.0, best_dual = std::numeric_limits<double>::infinity();
        for (const IterationStats& it : sol.trace) {
            CHECK(it.primal <= it.dual + 1e-9);
            CHECK(std::max(best_primal, it.primal) >= best_primal);   // non-decreasing
            CHECK(std::min(best_dual, it.dual) <= best_dual);         // non-increasing
            best_primal = std::max(best_primal, it.primal);
            best_dual = std::min(best_dual, it.dual);
        }
        CHECK(sol.primal_value == doctest::Approx(best_primal));
        CHECK(sol.dual_value == doctest::Approx(best_dual));
        CHECK(sol.gap >= -1e-9);
        // the reported primal is reproducible from the reported weights
        CHECK(lambda_s(g, sol.weights) == doctest::Approx(sol.primal_value).epsilon(1e-9));
    }
}

TEST_CASE("solver matches the explicit-polytope brute force on small graphs") {
    std::vector<Graph> fixtures;
    fixtures.push_back(make_path(4));
    fixtures.push_back(make_cycle(4));
    fixtures.push_back(make_cycle(5));
    fixtures.push_back(make_star(5));
    fixtures.push_back(make_complete(4));
    fixtures.push_back(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));            // paw
    fixtures.push_back(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}}));    // diamond
    fixtures.push_back(testutil::random_connected_graph(6, 0.5, 71));
    fixtures.push_back(testutil::random_connected_graph(6, 0.45, 72));

    for (const Graph& g : fixtures) {
        SolverConfig cfg;
        cfg.max_iters = 4000;
        cfg.tol = 1e-7;
        DualitySolution sol = solve_min_con2(g, cfg);
        double oracle = testutil::BruteForceCon2(g).solve();
        CHECK(sol.dual_value == doctest::Approx(oracle).epsilon(1e-4));
    }
}

TEST_CASE("tolerance-not-met runs still return valid bounds") {
    Graph g = make_grid2d(3);
    SolverConfig cfg;
    cfg.max_iters = 1;
    cfg.tol = 1e-12;
    DualitySolution sol = solve_min_con2(g, cfg);
    CHECK(!sol.converged);
    CHECK(sol.iterations <= 1);
    CHECK(sol.primal_value <= sol.dual_value + 1e-9);
}

TEST_CASE("grid ladder keeps con2 near n^2") {
    std::vector<std::pair<double, double>> points;
    for (int side : {4, 6, 8}) {
        Graph g = make_grid2d(side);
        SolverConfig cfg;
        cfg.max_iters = 60;
        DualitySolution sol = solve_min_con2(g, cfg);
        double n = g.num_vertices();
        double ratio = sol.dual_value / (n * n);
        CHECK(ratio >= 0.05);
        CHECK(ratio <= 5.0);
        points.emplace_back(n, sol.dual_value);
    }
    double slope = fit_scaling(points).slope;
    CHECK(slope >= 1.7);
    CHECK(slope <= 2.3);
}
