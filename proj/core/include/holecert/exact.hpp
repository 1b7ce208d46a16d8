#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "holecert/graph.hpp"

namespace holecert {

struct SolveBudget {
  std::size_t max_k = 16;
  std::uint64_t node_limit = 20'000'000;  // search nodes, summed over all k tried
  double time_hint = 0.0;                 // advisory only; not enforced
};

// The exact search handles at most this many graph vertices.
inline constexpr std::size_t kExactMaxVertices = 16;

enum class Feasibility { Feasible, Infeasible, BudgetExhausted };

struct FeasibleResult {
  Feasibility status = Feasibility::Infeasible;
  std::optional<Digraph> witness;  // set iff Feasible
  VertexSet isolated;              // the k added vertices, "_z0"... avoiding V(g)
  std::uint64_t nodes = 0;
};

// Is g plus k isolated vertices the competition graph of an acyclic digraph?
// Searches elimination orders bottom-up: each prey receives a maximal clique
// of the vertices still above it. Graphs over kExactMaxVertices report
// BudgetExhausted.
FeasibleResult feasible(const Graph& g, std::size_t k, const SolveBudget& budget = {});

struct ExactResult {
  std::size_t k = 0;
  Digraph witness;
  VertexSet isolated;
  std::uint64_t nodes = 0;
};

// Smallest feasible k in [0, budget.max_k]. Throws BudgetExhausted when the
// node limit runs out or no k up to max_k is feasible.
ExactResult exact_k(const Graph& g, const SolveBudget& budget = {});

}  // namespace holecert
