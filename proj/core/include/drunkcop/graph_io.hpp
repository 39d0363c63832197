#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "drunkcop/graph.hpp"

namespace drunkcop {

// Edge-list text:
//   n <count>
//   u v
//   ...
// 0-indexed, '#' starts a comment, blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

// Format chosen by extension: ".json" is structured, anything else is the
// edge-list text format.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace drunkcop
