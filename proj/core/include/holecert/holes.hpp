#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

// An induced cycle of length >= 4, stored in canonical form: the least vertex
// first, its lesser cycle neighbour second. Construction canonicalizes but
// does not consult a graph; use is_hole() for that.
class Hole {
 public:
  explicit Hole(std::vector<VertexId> cycle);

  const std::vector<VertexId>& cycle() const { return cycle_; }
  std::size_t length() const { return cycle_.size(); }
  bool contains(const VertexId& v) const;
  // The cycle's edges, sorted.
  std::vector<Edge> edges() const;

  auto operator<=>(const Hole&) const = default;
  bool operator==(const Hole&) const = default;

 private:
  std::vector<VertexId> cycle_;
};

std::ostream& operator<<(std::ostream& os, const Hole& h);

// Perfect elimination ordering: every vertex's later neighbours form a clique.
struct Peo {
  std::vector<VertexId> order;
};

// True iff `cycle` lists >= 4 distinct vertices of g forming an induced cycle.
bool is_hole(const Graph& g, std::span<const VertexId> cycle);
bool is_peo(const Graph& g, std::span<const VertexId> order);

// Maximum cardinality search. Vertices of `first` are visited first (in id
// order), the rest by maximum weight with ties to the least id. Returns the
// elimination order (reverse visit order), so `first` ends up at the back.
// The result is a Peo iff g is chordal and `first` is a clique.
std::vector<VertexId> mcs_elimination_order(const Graph& g, const VertexSet& first = {});

// A Peo if g is chordal, otherwise one hole.
std::variant<Peo, Hole> chordality(const Graph& g);

struct HoleList {
  std::vector<Hole> holes;  // canonical-form order
  bool capped = false;      // more than `cap` holes exist; holes has cap + 1
};

// Throws PreconditionError when cap == 0.
HoleList enumerate_holes(const Graph& g, std::size_t cap);

// Vertices outside c adjacent to every vertex of c. Throws PreconditionError
// unless c is a hole of g.
VertexSet x_set(const Graph& g, const Hole& c);

// Shortest c-avoiding (u,v)-path, lexicographically least among the shortest.
// Internal vertices avoid V(c) and X_c; a single edge uv counts only when an
// endpoint lies outside V(c) and X_c.
std::optional<std::vector<VertexId>> c_avoiding_path(const Graph& g, const Hole& c,
                                                     const VertexId& u, const VertexId& v);

struct SharedPath {
  std::vector<VertexId> path;  // starts at the lesser endpoint
  std::size_t edge_count = 0;
};

// The subgraph formed by E(c1) and E(c2) in common, which must be a path.
// nullopt when no edge is shared. Throws StructuralViolation when the shared
// edges do not form a path.
std::optional<SharedPath> shared_edge_path(const Hole& c1, const Hole& c2, const Graph& g);

struct LemmaFlags {
  bool x_clique = true;         // every X_C is a clique
  bool shared_is_path = true;   // shared edges of the two holes form a path
  bool x_equal = true;          // X_1 == X_2 when >= 2 edges are shared
  bool wheel_dichotomy = true;  // all-of-C adjacency xor a second overlapping hole
  bool avoiding_length = true;  // ear vertices reach the rest of C only by length >= 2
  std::vector<std::string> diagnostics;

  bool all() const {
    return x_clique && shared_is_path && x_equal && wheel_dichotomy && avoiding_length;
  }
};

struct HoleReport {
  std::vector<Hole> holes;
  bool capped = false;
  std::size_t cap = 0;
  std::vector<VertexSet> x_sets;  // parallel to holes
  std::optional<SharedPath> shared;
  std::optional<LemmaFlags> flags;  // present when the hole list is complete and has <= 2 holes
};

LemmaFlags validate_two_hole_lemmas(const Graph& g, const HoleReport& report);

HoleReport analyze(const Graph& g, std::size_t cap = 3);

// Line-oriented rendering: `holes <n|>cap>`, then `hole ...`, `xset <i> ...`,
// `shared ...`, `flag <name> <true|false>`.
std::string render_report(const HoleReport& report);

}  // namespace holecert
