#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "flowspec/duality.hpp"
#include "flowspec/graph.hpp"
#include "flowspec/integral.hpp"
#include "flowspec/metric.hpp"
#include "flowspec/minor.hpp"
#include "flowspec/partition.hpp"
#include "flowspec/separator.hpp"

namespace flowspec {

// Graph text format: first line "n m", then m lines "u v" with 0-based
// indices. '#' starts a comment; blank lines are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Weight file: n lines, one decimal per vertex.
WeightFunction read_weights(std::istream& in, int n);
WeightFunction read_weights_file(const std::string& path, int n);
void write_weights(std::ostream& out, const WeightFunction& s);

// Metric dumps as CSV, one row per vertex.
void write_metric_csv(std::ostream& out, const Metric& m);

// Integral flows: one line "u v : v0 v1 ... vk" per demand edge, endpoints
// given as graph vertices.
void write_integral_flow(std::ostream& out, const DemandGraph& h, const IntegralFlow& flow);

// Branch decompositions: "<demand-vertex> : members", then witness lines.
void write_branch_decomposition(std::ostream& out, const DemandGraph& h,
                                const BranchDecomposition& bd);

// Embeddings: n lines "vertex f-value".
void write_embedding(std::ostream& out, const Eigen::VectorXd& f);

// Partitions: "cluster-id : member list".
void write_partition(std::ostream& out, const PaddedPartition& p);

// Separators: three vertex lists.
void write_separator(std::ostream& out, const VertexSeparator& sep);

/// Deterministic fixed-precision rendering used by every text output.
std::string format_double(double x);

/// Ordered key-value document, one "key: value" line each, nested sections
/// via dotted keys. Identical inputs produce byte-identical text.
class Report {
public:
    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, const char* value);
    void put(const std::string& key, double value);
    void put(const std::string& key, std::int64_t value);
    void put(const std::string& key, int value);
    void put(const std::string& key, bool value);
    void put_vector(const std::string& key, const Eigen::VectorXd& v);

    /// Adds <section>.version and <section>.seed tags.
    void stamp(const std::string& section, std::uint64_t seed);

    std::string to_string() const;
    void write_file(const std::string& path) const;

    /// Serializes a solver result under the given section prefix.
    void add_duality(const std::string& section, const DualitySolution& sol);

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

} // namespace flowspec
