#include <doctest.h>

#include <random>

#include "flowspec/metric.hpp"
#include "test_util.hpp"

using namespace flowspec;

TEST_CASE("all-pairs metric on the weighted 3-path") {
    Graph g = make_path(3);
    WeightFunction s = Eigen::Vector3d(2, 3, 2);
    Metric m = all_pairs_metric(g, s);
    CHECK(m(0, 1) == doctest::Approx(5.0));
    CHECK(m(1, 2) == doctest::Approx(5.0));
    CHECK(m(0, 2) == doctest::Approx(7.0));
    CHECK(m(0, 0) == 0.0);
}

TEST_CASE("complete graph with unit weights is uniform") {
    Graph g = make_complete(4);
    Metric m = all_pairs_metric(g, Eigen::VectorXd::Ones(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(m(u, v) == (u == v ? 0.0 : 2.0));
}

TEST_CASE("star distances") {
    Graph g = make_star(5); // center 0
    Metric m = all_pairs_metric(g, Eigen::VectorXd::Ones(5));
    CHECK(m(0, 3) == 2.0);
    CHECK(m(1, 4) == 3.0);
}

TEST_CASE("metric invariants hold on random weighted graphs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 3.0);
    for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
        Graph g = testutil::random_connected_graph(9, 0.35, seed);
        const int n = g.num_vertices();
        WeightFunction s(n);
        for (int v = 0; v < n; ++v) s[v] = unif(rng);
        Metric m = all_pairs_metric(g, s);

        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                CHECK(m(u, v) == m(v, u));
                for (int w = 0; w < n; ++w)
                    CHECK(m(u, v) <= m(u, w) + m(w, v) + 1e-9);
            }
        for (auto [u, v] : g.edges()) CHECK(m(u, v) <= s[u] + s[v] + 1e-12);
    }
}

TEST_CASE("explicit tables are validated") {
    Eigen::MatrixXd bad(2, 2);
    bad << 0, 1, 2, 0; // asymmetric
    CHECK_THROWS_AS(Metric(bad, Metric::Origin::explicit_table), PreconditionError);

    Eigen::MatrixXd tri(3, 3);
    tri << 0, 1, 9, 1, 0, 1, 9, 1, 0; // 9 > 1 + 1
    CHECK_THROWS_AS(Metric(tri, Metric::Origin::explicit_table), PreconditionError);

    Eigen::MatrixXd ok(3, 3);
    ok << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    Metric m(ok, Metric::Origin::explicit_table);
    CHECK(m.max_distance() == 2.0);
    CHECK(m.sum_pairs() == 4.0);
    CHECK(m.sum_pairs_pow(2) == 6.0);
}

TEST_CASE("zero off-diagonal entries are allowed") {
    Graph g = make_path(3);
    Metric m = all_pairs_metric(g, Eigen::VectorXd::Zero(3));
    CHECK(m.max_distance() == 0.0);
}

TEST_CASE("hop metric matches unit-length BFS") {
    Graph g = make_grid2d(3);
    Metric m = hop_metric(g);
    CHECK(m(0, 8) == 4.0);
    CHECK(m(0, 1) == 1.0);
    CHECK(m(3, 5) == 2.0);
}

TEST_CASE("all-pairs table is independent of the thread cap") {
    Graph g = make_grid2d(5);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    WeightFunction s(25);
    for (int v = 0; v < 25; ++v) s[v] = unif(rng);

    setenv("FLOWSPEC_THREADS", "1", 1);
    Metric serial = all_pairs_metric(g, s);
    unsetenv("FLOWSPEC_THREADS");
    Metric parallel = all_pairs_metric(g, s);
    CHECK((serial.table() - parallel.table()).cwiseAbs().maxCoeff() == 0.0);
}
