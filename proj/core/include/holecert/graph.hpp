#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holecert {

// Vertex identifier: a nonempty token over [A-Za-z0-9_]. Ordered by the
// token's byte order; every tie-break in the library uses this order.
class VertexId {
 public:
  explicit VertexId(std::string token);

  static bool valid_token(std::string_view token);

  const std::string& str() const { return token_; }

  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;

 private:
  std::string token_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

using VertexSet = std::set<VertexId>;

// Unordered pair of distinct vertices, stored with first() < second().
class Edge {
 public:
  Edge(VertexId a, VertexId b);

  const VertexId& first() const { return first_; }
  const VertexId& second() const { return second_; }
  bool touches(const VertexId& v) const { return v == first_ || v == second_; }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;

 private:
  VertexId first_;
  VertexId second_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

struct Arc {
  VertexId from;
  VertexId to;

  auto operator<=>(const Arc&) const = default;
  bool operator==(const Arc&) const = default;
};

// Finite simple undirected graph. Vertices are kept sorted, so the dense
// index of a vertex (its position in vertices()) follows the VertexId order.
// Dense indices are only meaningful for one Graph value.
class Graph {
 public:
  Graph() = default;

  // Edge endpoints missing from `vertices` are added. Duplicate vertices and
  // duplicate edges collapse.
  Graph(std::vector<VertexId> vertices, std::span<const Edge> edges);

  static Graph from_edges(std::span<const Edge> edges) { return Graph({}, edges); }

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  const std::vector<VertexId>& vertices() const { return ids_; }
  // Sorted by (first, second).
  std::vector<Edge> edges() const;

  bool contains(const VertexId& v) const { return find(v).has_value(); }
  bool contains(const Edge& e) const;
  std::optional<std::size_t> find(const VertexId& v) const;
  // Throws PreconditionError when v is not a vertex.
  std::size_t index_of(const VertexId& v) const;
  const VertexId& id(std::size_t i) const { return ids_[i]; }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * ids_.size() + j] != 0; }
  bool adjacent(const VertexId& a, const VertexId& b) const;
  // Sorted dense indices.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }
  std::size_t degree(std::size_t i) const { return nbrs_[i].size(); }

  bool operator==(const Graph& other) const {
    return ids_ == other.ids_ && adj_ == other.adj_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<std::uint8_t> adj_;
  std::size_t edge_count_ = 0;
};

// Finite simple digraph. Acyclicity is a checked property, not an invariant.
class Digraph {
 public:
  Digraph() = default;
  // Loops are rejected; arc endpoints missing from `vertices` are added.
  Digraph(std::vector<VertexId> vertices, std::span<const Arc> arcs);

  std::size_t size() const { return ids_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const std::vector<VertexId>& vertices() const { return ids_; }
  // Sorted by (from, to).
  std::vector<Arc> arcs() const;

  bool contains(const VertexId& v) const { return find(v).has_value(); }
  std::optional<std::size_t> find(const VertexId& v) const;
  std::size_t index_of(const VertexId& v) const;
  const VertexId& id(std::size_t i) const { return ids_[i]; }

  bool has_arc(const VertexId& from, const VertexId& to) const;
  const std::vector<std::size_t>& out_neighbors(std::size_t i) const { return out_[i]; }
  const std::vector<std::size_t>& in_neighbors(std::size_t i) const { return in_[i]; }
  std::size_t in_degree(const VertexId& v) const { return in_[index_of(v)].size(); }

  bool operator==(const Digraph& other) const {
    return ids_ == other.ids_ && out_ == other.out_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::size_t arc_count_ = 0;
};

// Throws PreconditionError unless S is a subset of V(G).
Graph induced_subgraph(const Graph& g, const VertexSet& s);
// Throws PreconditionError unless e is an edge of G.
Graph remove_edge(const Graph& g, const Edge& e);
// Adds e (and its endpoints).
Graph add_edge(const Graph& g, const Edge& e);
Graph add_vertices(const Graph& g, const VertexSet& extra);
Graph graph_union(const Graph& a, const Graph& b);

// Components ordered by their least vertex; each component sorted.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

Digraph digraph_union(const Digraph& a, const Digraph& b);
Digraph add_vertices(const Digraph& d, const VertexSet& extra);

VertexSet vertex_set(const Graph& g);
VertexSet vertex_set(const Digraph& d);

// Hands out "_z0", "_z1", ... in sequence, skipping reserved names and names
// already handed out.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(VertexSet reserved) : reserved_(std::move(reserved)) {}

  void reserve(const VertexId& v) { reserved_.insert(v); }
  VertexId next();

 private:
  VertexSet reserved_;
  std::size_t counter_ = 0;
};

}  // namespace holecert
