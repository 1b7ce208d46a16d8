#pragma once

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "holecert/graph.hpp"
#include "holecert/text_format.hpp"

#ifndef HOLECERT_TEST_DATA
#error "HOLECERT_TEST_DATA must point at tests/data"
#endif

namespace holecert::testing {

inline std::filesystem::path data_path(std::string_view name) {
  return std::filesystem::path(HOLECERT_TEST_DATA) / name;
}

inline Graph fixture(std::string_view stem) {
  return parse_graph(read_text_file(data_path(std::string(stem) + ".graph")));
}

// "e a b; e b c" style inline graphs, ';' standing for a newline.
inline Graph graph(std::string text) {
  for (auto& ch : text) {
    if (ch == ';') ch = '\n';
  }
  return parse_graph(text);
}

inline Digraph digraph(std::string text) {
  for (auto& ch : text) {
    if (ch == ';') ch = '\n';
  }
  return parse_digraph(text);
}

inline std::vector<VertexId> ids(std::string_view text) {
  std::vector<VertexId> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.emplace_back(tok);
  return out;
}

inline VertexSet idset(std::string_view text) {
  auto v = ids(text);
  return VertexSet(v.begin(), v.end());
}

inline VertexId id(std::string_view text) { return VertexId(std::string(text)); }

// Competition graph by the textbook double loop: for each pair x, y scan
// every vertex for a common out-neighbour. Deliberately naive and separate
// from the library's version.
inline Graph naive_competition_graph(const Digraph& d) {
  const auto& vs = d.vertices();
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < vs.size(); ++x) {
    for (std::size_t y = x + 1; y < vs.size(); ++y) {
      for (std::size_t v = 0; v < vs.size(); ++v) {
        if (d.has_arc(vs[x], vs[v]) && d.has_arc(vs[y], vs[v])) {
          edges.emplace_back(vs[x], vs[y]);
          break;
        }
      }
    }
  }
  return Graph(vs, edges);
}

}  // namespace holecert::testing
