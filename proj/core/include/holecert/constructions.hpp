#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holecert/certificate.hpp"
#include "holecert/error.hpp"
#include "holecert/exact.hpp"
#include "holecert/graph.hpp"
#include "holecert/holes.hpp"

namespace holecert {

struct ChordalWitness {
  Digraph digraph;  // V(g) plus prey
  VertexId prey;    // the one extra vertex
};

// Acyclic D with C(D) = g + {prey} in which every vertex of `clique` has
// indegree 0. Built from a perfect elimination order that ends with the
// clique: each position whose clique K_i = {v_i} + later neighbours covers a
// new edge sends K_i to v_{i-1} (to prey for i = 1). Positions past the first
// clique vertex are skipped, since the clique itself covers their edges.
// Throws PreconditionError if g is not chordal or `clique` is not a clique.
ChordalWitness chordal_witness(const Graph& g, const VertexSet& clique, FreshNames& names);
ChordalWitness chordal_witness(const Graph& g, const VertexSet& clique);

// Union of D1 (certifying G_1 + isolated) and D2 (certifying G_2 + {prey})
// glued along `shared` = V(G_1) & V(G_2), whose vertices must have indegree
// 0 in D2. Throws PreconditionError when the vertex sets do not line up.
Digraph compose(const Digraph& d1, const VertexSet& isolated, const Digraph& d2,
                const VertexId& prey, const VertexSet& shared);

// First hole edge (in edge order) with no C-avoiding path between its ends.
std::optional<Edge> find_removable_edge(const Graph& g, const Hole& c);

struct CutDecomposition {
  Graph g1;                     // V(Q) + cut, minus edge v_j v_{j+1}
  Graph g2;                     // induced on V(g) - V(Q); chordal
  VertexSet cut;                // X_1 + {v_j, v_{j+1}}
  VertexSet component;          // V(Q)
  std::vector<VertexId> cycle;  // C_1 labeled v_0 ... v_{m-1}
  std::size_t j = 0;
  VertexId ear;                 // interior vertex of the length-2 avoiding path
  std::size_t shared_len = 0;   // edges shared with C_2 (0 for one hole)
};

// Vertex-cut decomposition for a graph with exactly two holes sharing an edge
// path, where every edge of c1 (the longer hole) has a c1-avoiding path.
// Throws PreconditionError when those hypotheses fail and StructuralViolation
// when a re-checked conclusion fails.
CutDecomposition avoid2_decompose(const Graph& g, const Hole& c1, const Hole& c2);

// One-hole analogue: cut at hole edge v_j v_{j+1} (cycle in canonical order);
// G_1 must come out chordal.
CutDecomposition avoid1_decompose(const Graph& g, const Hole& c, std::size_t j);

struct CertifyOptions {
  std::size_t hole_cap = 3;
  SolveBudget budget;
};

// Raised when the exact fallback runs out of budget.
class CertifyBudgetExhausted : public BudgetExhausted {
 public:
  CertifyBudgetExhausted(const std::string& what, std::string partial)
      : BudgetExhausted(what), partial_(std::move(partial)) {}
  // Derivation lines for the pieces finished before the failure.
  const std::string& partial_derivation() const { return partial_; }

 private:
  std::string partial_;
};

// Builds a verifier-checked certificate that k(g) <= cert.k, using the
// chordal/edge-split/cut-split pipeline for graphs with at most two holes and
// the exact solver otherwise or whenever a re-checked step fails.
Certificate certify(const Graph& g, const CertifyOptions& options = {});

}  // namespace holecert
