#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holecert/certificate.hpp"
#include "holecert/graph.hpp"

// Independent checking. Nothing here depends on how certificates are built.
namespace holecert::verify {

// Same vertex set as d; x and y adjacent iff they share an out-neighbour.
Graph competition_graph(const Digraph& d);

// A topological order (sources first, ties to the least id) or nullopt.
std::optional<std::vector<VertexId>> topological_order(const Digraph& d);

// A directed cycle v0 -> v1 -> ... -> v0 as a vertex list; empty if acyclic.
std::vector<VertexId> find_cycle(const Digraph& d);

struct Verdict {
  bool accepted = false;
  int failed_clause = 0;  // 1 vertex sets, 2 acyclicity, 3 competition graph
  std::string diagnostic;

  explicit operator bool() const { return accepted; }
};

// Accepts iff (1) V(D) = V(g) + isolated with |isolated| = k and isolated
// disjoint from V(g); (2) D is acyclic; (3) C(D) equals g plus the isolated
// vertices as labeled graphs.
Verdict verify_certificate(const Graph& g, const Certificate& cert);

// Same three clauses for a bare digraph and isolated set.
Verdict verify_witness(const Graph& g, const Digraph& d, const VertexSet& isolated,
                       std::size_t k);

}  // namespace holecert::verify
