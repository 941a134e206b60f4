#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperbanana/graph.hpp"

namespace hb {

/// On-disk graph: header line "d n m", then m lines "u v" with 0-based
/// labels. Lines starting with '#' and blank lines are ignored on parse;
/// serialization emits edges in canonical sorted order, so
/// parse(serialize(x)) == x and the text round-trips byte-identically.
struct GraphFile {
    int d = 0;
    Graph graph;

    bool operator==(const GraphFile&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline bool significant_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace detail

inline GraphFile parse_graph_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    int d = 0, n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::significant_line(line)) continue;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> d >> n >> m) || d < 1 || n < 0 || m < 0)
                throw ParseError(line_no, "expected header 'd n m' with d >= 1");
            std::string extra;
            if (fields >> extra) throw ParseError(line_no, "trailing data after header");
            have_header = true;
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the declared edge count " + std::to_string(m));
        int u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError(line_no, "expected edge line 'u v'");
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing data after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex label out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.push_back(canonical_edge(u, v));
    }
    if (!have_header) throw ParseError(line_no, "missing header line 'd n m'");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges but found " +
                                      std::to_string(edges.size()));
    try {
        return GraphFile{d, Graph(n, std::move(edges))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

inline void serialize_graph_file(const GraphFile& file, std::ostream& out) {
    out << file.d << ' ' << file.graph.vertex_count() << ' ' << file.graph.edge_count() << '\n';
    for (const auto& [u, v] : file.graph.edges()) out << u << ' ' << v << '\n';
}

inline std::string serialize_graph_file(const GraphFile& file) {
    std::ostringstream out;
    serialize_graph_file(file, out);
    return out.str();
}

inline GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph_file(in);
}

inline void save_graph_file(const GraphFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    serialize_graph_file(file, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hb
