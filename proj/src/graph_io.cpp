#include "minex/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minex {

using nlohmann::json;

GraphDoc io_load(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        fail(errc::parse_error, "document must be an object with integer field 'n'");
    int n = doc["n"].get<int>();
    if (n < 0) fail(errc::parse_error, "'n' must be nonnegative");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(errc::parse_error, "missing 'edges' array");

    GraphBuilder b(n);
    size_t idx = 0;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(errc::parse_error, "edge #" + std::to_string(idx) + " is not a pair of ints");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::parse_error,
                 "edge #" + std::to_string(idx) + " references vertex outside 0.." +
                     std::to_string(n - 1));
        if (u == v) fail(errc::parse_error, "edge #" + std::to_string(idx) + " is a loop");
        if (!b.try_add_edge(u, v))
            fail(errc::parse_error, "edge #" + std::to_string(idx) + " duplicates an earlier edge");
        ++idx;
    }

    GraphDoc out;
    out.graph = b.build();
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) fail(errc::parse_error, "'labels' must be an object");
        for (const auto& [k, v] : doc["labels"].items())
            out.labels[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

GraphDoc io_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    return io_load(in);
}

void io_save(std::ostream& out, const Graph& g, const std::map<std::string, std::string>& labels) {
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    auto edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = edges;
    if (!labels.empty()) {
        nlohmann::ordered_json lb;
        for (const auto& [k, v] : labels) lb[k] = v;
        doc["labels"] = lb;
    }
    out << doc.dump(2) << "\n";
}

void io_save_file(const std::string& path, const Graph& g,
                  const std::map<std::string, std::string>& labels) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    io_save(out, g, labels);
}

std::string to_dot(const Graph& g, const std::map<int, std::string>& vertex_color) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        out << "  " << v;
        auto it = vertex_color.find(v);
        if (it != vertex_color.end())
            out << " [style=filled, fillcolor=\"" << it->second << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace minex
