#include <doctest.h>

#include <sstream>

#include "flowspec/io.hpp"
#include "flowspec/scaling.hpp"

using namespace flowspec;

TEST_CASE("fit_scaling on exact power laws") {
    CHECK(fit_scaling({{10, 10}, {100, 100}}).slope == doctest::Approx(1.0));
    CHECK(fit_scaling({{10, 100}, {100, 10000}}).slope == doctest::Approx(2.0));
    ScalingFit fit = fit_scaling({{2, 12}, {4, 3}, {8, 0.75}});
    CHECK(fit.slope == doctest::Approx(-2.0));
    CHECK(fit.residual == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("fit_scaling rejects bad input") {
    CHECK_THROWS_AS(fit_scaling({{10, 10}}), PreconditionError);
    CHECK_THROWS_AS(fit_scaling({{10, 10}, {10, 20}}), PreconditionError);
    CHECK_THROWS_AS(fit_scaling({{10, -1}, {100, 10}}), PreconditionError);
}

TEST_CASE("graph file round trip with comments") {
    std::istringstream in("# fixture\n3 2  # header\n0 1\n1 2\n");
    Graph g = read_graph(in);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);

    std::ostringstream out;
    write_graph(out, g);
    std::istringstream back(out.str());
    Graph g2 = read_graph(back);
    CHECK(g2.edges() == g.edges());
}

TEST_CASE("graph parse failures carry ParseError") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_graph(empty), ParseError);
    std::istringstream header("x y\n");
    CHECK_THROWS_AS(read_graph(header), ParseError);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(truncated), ParseError);
    std::istringstream disconnected("4 1\n0 1\n");
    CHECK_THROWS_AS(read_graph(disconnected), ParseError);
}

TEST_CASE("weight file round trip") {
    std::istringstream in("1.5\n0\n2.25\n");
    WeightFunction s = read_weights(in, 3);
    CHECK(s[0] == 1.5);
    CHECK(s[2] == 2.25);
    std::istringstream bad("1.5\n-2\n0\n");
    CHECK_THROWS_AS(read_weights(bad, 3), ParseError);
    std::istringstream few("1.0\n");
    CHECK_THROWS_AS(read_weights(few, 3), ParseError);
}

TEST_CASE("reports are byte-stable") {
    auto build = [] {
        Report r;
        r.put("meta.version", "0.1.0");
        r.put("solver.dual", 4.123105625618);
        r.put("solver.iterations", 17);
        r.put("solver.converged", true);
        r.put_vector("solver.weights", Eigen::Vector3d(0.25, 0.5, 0.25));
        return r.to_string();
    };
    CHECK(build() == build());
    CHECK(build() == "meta.version: 0.1.0\n"
                     "solver.dual: 4.12310562562\n"
                     "solver.iterations: 17\n"
                     "solver.converged: true\n"
                     "solver.weights: 0.25 0.5 0.25\n");
}

TEST_CASE("integral flow serialization shape") {
    DemandGraph h;
    h.terminals = {1, 2, 3, 4};
    h.demand_edges = {{0, 1}, {2, 3}};
    IntegralFlow flow;
    flow.routes = {{1, 0, 2}, {3, 0, 4}};
    std::ostringstream out;
    write_integral_flow(out, h, flow);
    CHECK(out.str() == "1 2 : 1 0 2\n3 4 : 3 0 4\n");
}

TEST_CASE("metric csv dump") {
    Eigen::MatrixXd d(2, 2);
    d << 0, 1.5, 1.5, 0;
    Metric m(std::move(d), Metric::Origin::explicit_table);
    std::ostringstream out;
    write_metric_csv(out, m);
    CHECK(out.str() == "0,1.5\n1.5,0\n");
}

TEST_CASE("embedding, partition and separator writers") {
    std::ostringstream emb;
    write_embedding(emb, Eigen::Vector3d(0, 0.5, 1.25));
    CHECK(emb.str() == "0 0\n1 0.5\n2 1.25\n");

    PaddedPartition p;
    p.clusters = {{0, 2}, {1}};
    p.assignment = {0, 1, 0};
    std::ostringstream part;
    write_partition(part, p);
    CHECK(part.str() == "0 : 0 2\n1 : 1\n");

    VertexSeparator sep;
    sep.a = {0};
    sep.s = {1};
    sep.b = {2};
    std::ostringstream sout;
    write_separator(sout, sep);
    CHECK(sout.str() == "A : 0\nB : 2\nS : 1\n");
}

TEST_CASE("branch decomposition writer") {
    DemandGraph h;
    h.terminals = {0, 3};
    h.demand_edges = {{0, 1}};
    BranchDecomposition bd;
    bd.branch_sets = {{0, 1}, {2, 3}};
    bd.witness_edges = {{1, 2}};
    std::ostringstream out;
    write_branch_decomposition(out, h, bd);
    CHECK(out.str() == "0 : 0 1\n1 : 2 3\nwitness 0 1 : 1 2\n");
}
