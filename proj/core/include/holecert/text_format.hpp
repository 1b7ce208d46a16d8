#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

// Graph text format, one record per line:
//   # comment
//   v <id>          declare a vertex
//   e <id> <id>     edge (declares both endpoints)
// Digraph text format uses `v <id>` and `a <id> > <id>`.
// Serializers emit `v` lines for vertices without incident edges/arcs only,
// followed by the sorted `e`/`a` lines.

Graph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);

std::string serialize_graph(const Graph& g);
std::string serialize_digraph(const Digraph& d);

// Splits on ASCII whitespace.
std::vector<std::string_view> split_tokens(std::string_view line);

// Reads the whole file; throws ParseError(0, ...) when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace holecert
