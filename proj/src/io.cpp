#include "flowspec/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flowspec/version.hpp"

namespace flowspec {

namespace {

// Strips comments and yields the next non-empty line.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) return true;
    }
    return false;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    return out;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty graph file");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m) || n < 1 || m < 0) throw ParseError("bad graph header, expected 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) throw ParseError("truncated edge list");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw ParseError("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

WeightFunction read_weights(std::istream& in, int n) {
    WeightFunction s(n);
    std::string line;
    for (int i = 0; i < n; ++i) {
        if (!next_data_line(in, line)) throw ParseError("weight file has too few lines");
        try {
            s[i] = std::stod(line);
        } catch (const std::exception&) {
            throw ParseError("bad weight line: " + line);
        }
        if (!(s[i] >= 0.0)) throw ParseError("negative weight: " + line);
    }
    return s;
}

WeightFunction read_weights_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weight file: " + path);
    return read_weights(in, n);
}

void write_weights(std::ostream& out, const WeightFunction& s) {
    for (Eigen::Index i = 0; i < s.size(); ++i) out << format_double(s[i]) << '\n';
}

void write_metric_csv(std::ostream& out, const Metric& m) {
    for (int u = 0; u < m.size(); ++u) {
        for (int v = 0; v < m.size(); ++v) {
            if (v) out << ',';
            out << format_double(m(u, v));
        }
        out << '\n';
    }
}

void write_integral_flow(std::ostream& out, const DemandGraph& h, const IntegralFlow& flow) {
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        out << h.terminals[a] << ' ' << h.terminals[b] << " :";
        for (int v : flow.routes[e]) out << ' ' << v;
        out << '\n';
    }
}

void write_branch_decomposition(std::ostream& out, const DemandGraph& h,
                                const BranchDecomposition& bd) {
    for (std::size_t i = 0; i < bd.branch_sets.size(); ++i) {
        out << i << " :";
        for (int v : bd.branch_sets[i]) out << ' ' << v;
        out << '\n';
    }
    for (std::size_t e = 0; e < h.demand_edges.size(); ++e) {
        auto [a, b] = h.demand_edges[e];
        out << "witness " << a << ' ' << b << " : " << bd.witness_edges[e].first << ' '
            << bd.witness_edges[e].second << '\n';
    }
}

void write_embedding(std::ostream& out, const Eigen::VectorXd& f) {
    for (Eigen::Index v = 0; v < f.size(); ++v)
        out << v << ' ' << format_double(f[v]) << '\n';
}

void write_partition(std::ostream& out, const PaddedPartition& p) {
    for (std::size_t c = 0; c < p.clusters.size(); ++c) {
        out << c << " :";
        for (int v : p.clusters[c]) out << ' ' << v;
        out << '\n';
    }
}

void write_separator(std::ostream& out, const VertexSeparator& sep) {
    auto row = [&](const char* tag, const std::vector<int>& part) {
        out << tag << " :";
        for (int v : part) out << ' ' << v;
        out << '\n';
    };
    row("A", sep.a);
    row("B", sep.b);
    row("S", sep.s);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void Report::put(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
}
void Report::put(const std::string& key, const char* value) {
    items_.emplace_back(key, std::string(value));
}
void Report::put(const std::string& key, double value) {
    items_.emplace_back(key, format_double(value));
}
void Report::put(const std::string& key, std::int64_t value) {
    items_.emplace_back(key, std::to_string(value));
}
void Report::put(const std::string& key, int value) {
    items_.emplace_back(key, std::to_string(value));
}
void Report::put(const std::string& key, bool value) {
    items_.emplace_back(key, value ? "true" : "false");
}

void Report::put_vector(const std::string& key, const Eigen::VectorXd& v) {
    std::string joined;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) joined += ' ';
        joined += format_double(v[i]);
    }
    items_.emplace_back(key, joined);
}

void Report::stamp(const std::string& section, std::uint64_t seed) {
    put(section + ".version", kVersion);
    put(section + ".seed", static_cast<std::int64_t>(seed));
}

std::string Report::to_string() const {
    std::string out;
    for (const auto& [k, v] : items_) {
        out += k;
        out += ": ";
        out += v;
        out += '\n';
    }
    return out;
}

void Report::write_file(const std::string& path) const {
    auto out = open_out(path);
    out << to_string();
}

void Report::add_duality(const std::string& s, const DualitySolution& sol) {
    put(s + ".primal", sol.primal_value);
    put(s + ".dual", sol.dual_value);
    put(s + ".gap", sol.gap);
    put(s + ".iterations", sol.iterations);
    put(s + ".converged", sol.converged);
    if (!sol.converged) put(s + ".flag", "tolerance not met");
    put_vector(s + ".weights", sol.weights);
    put_vector(s + ".congestion", sol.best_congestion);
}

} // namespace flowspec
