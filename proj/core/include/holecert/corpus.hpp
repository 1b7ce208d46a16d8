#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert::corpus {

// Exact probability num/den; parses "0.35", "7/20", "1".
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  static Rational parse(std::string_view text);
};

// Vertex ids "<prefix>0" ... "<prefix><n-1>".
std::vector<VertexId> numbered_vertices(std::size_t n, std::string_view prefix = "v");

std::size_t pair_count(std::size_t n);

// Labeled graph on v0..v{n-1}; bit b of mask is the b-th pair (i, j), i < j,
// in lexicographic order. n <= 11.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// G(n, p): each pair independently, edge iff rng() % den < num. Stable for a
// given engine state on every platform.
Graph random_graph(std::size_t n, Rational p, std::mt19937_64& rng);

// Compact rendering of a labeled graph on v0..v{n-1}: "0-1,0-3,...".
std::string edge_code(const Graph& g);

Graph cycle_graph(std::size_t m, std::string_view prefix = "c");
// Cycle r0..r{m-1} plus hub h adjacent to all of it.
Graph wheel_graph(std::size_t m);

// Two cycles of lengths m1 >= m2 glued along a path of `shared` edges. When
// shared >= 2 the outer cycle is triangulated by rungs between the two
// private sides. Only the two given cycles remain holes when m2 = shared + 2;
// otherwise some rung closes a further hole through the shared path.
Graph fused_cycles(std::size_t m1, std::size_t m2, std::size_t shared);

// Adds, for every edge uv of `cycle`, a new vertex t_<u>_<v> adjacent to u, v.
Graph with_triangle_ears(const Graph& g, const std::vector<VertexId>& cycle);

struct Named {
  std::string name;
  Graph graph;
};

// Cycles, wheels, fused cycles with and without ears. Every member has
// exactly one or two holes (checked).
std::vector<Named> named_families();

// Rejection-samples G(n, p) with n in [n_min, n_max] until `count` graphs
// with hole count in [min_holes, max_holes] are found.
std::vector<Graph> sample_with_holes(std::size_t count, std::size_t n_min, std::size_t n_max,
                                     Rational p, std::size_t min_holes, std::size_t max_holes,
                                     std::uint64_t seed);

}  // namespace holecert::corpus
