#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "minex/graph.hpp"

namespace minex {

// JSON graph document: {"n": int, "edges": [[u,v],...], "labels": {...}}.
// Loading rejects malformed documents, out-of-range endpoints, loops and
// duplicate edges with a ParseError naming the offending entry.

struct GraphDoc {
    Graph graph;
    std::map<std::string, std::string> labels;
};

GraphDoc io_load(std::istream& in);
GraphDoc io_load_file(const std::string& path);

void io_save(std::ostream& out, const Graph& g,
             const std::map<std::string, std::string>& labels = {});
void io_save_file(const std::string& path, const Graph& g,
                  const std::map<std::string, std::string>& labels = {});

// DOT export for visualization; vertex_color may assign fill colors.
std::string to_dot(const Graph& g, const std::map<int, std::string>& vertex_color = {});

} // namespace minex
