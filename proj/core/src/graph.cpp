#include "holecert/graph.hpp"

#include <algorithm>
#include <deque>

#include "holecert/error.hpp"

namespace holecert {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::optional<std::size_t> find_sorted(const std::vector<VertexId>& ids, const VertexId& v) {
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

VertexId::VertexId(std::string token) : token_(std::move(token)) {
  if (!valid_token(token_)) {
    throw PreconditionError("invalid vertex id '" + token_ + "'");
  }
}

bool VertexId::valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.str(); }

Edge::Edge(VertexId a, VertexId b) : first_(std::move(a)), second_(std::move(b)) {
  if (first_ == second_) throw PreconditionError("self-loop on " + first_.str());
  if (second_ < first_) std::swap(first_, second_);
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.first() << '-' << e.second();
}

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges) {
  for (const auto& e : edges) {
    vertices.push_back(e.first());
    vertices.push_back(e.second());
  }
  ids_ = sorted_unique(std::move(vertices));
  const std::size_t n = ids_.size();
  adj_.assign(n * n, 0);
  nbrs_.assign(n, {});
  for (const auto& e : edges) {
    std::size_t i = *find_sorted(ids_, e.first());
    std::size_t j = *find_sorted(ids_, e.second());
    if (adj_[i * n + j]) continue;
    adj_[i * n + j] = adj_[j * n + i] = 1;
    nbrs_[i].push_back(j);
    nbrs_[j].push_back(i);
    ++edge_count_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j : nbrs_[i]) {
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  return out;
}

bool Graph::contains(const Edge& e) const { return adjacent(e.first(), e.second()); }

std::optional<std::size_t> Graph::find(const VertexId& v) const { return find_sorted(ids_, v); }

std::size_t Graph::index_of(const VertexId& v) const {
  auto i = find(v);
  if (!i) throw PreconditionError("vertex " + v.str() + " not in graph");
  return *i;
}

bool Graph::adjacent(const VertexId& a, const VertexId& b) const {
  auto i = find(a);
  auto j = find(b);
  return i && j && adjacent(*i, *j);
}

Digraph::Digraph(std::vector<VertexId> vertices, std::span<const Arc> arcs) {
  for (const auto& a : arcs) {
    if (a.from == a.to) throw PreconditionError("loop arc on " + a.from.str());
    vertices.push_back(a.from);
    vertices.push_back(a.to);
  }
  ids_ = sorted_unique(std::move(vertices));
  out_.assign(ids_.size(), {});
  in_.assign(ids_.size(), {});
  for (const auto& a : arcs) {
    std::size_t i = *find_sorted(ids_, a.from);
    std::size_t j = *find_sorted(ids_, a.to);
    out_[i].push_back(j);
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    auto& list = out_[i];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t j : list) in_[j].push_back(i);
    arc_count_ += list.size();
  }
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j : out_[i]) out.push_back({ids_[i], ids_[j]});
  }
  return out;
}

std::optional<std::size_t> Digraph::find(const VertexId& v) const {
  return find_sorted(ids_, v);
}

std::size_t Digraph::index_of(const VertexId& v) const {
  auto i = find(v);
  if (!i) throw PreconditionError("vertex " + v.str() + " not in digraph");
  return *i;
}

bool Digraph::has_arc(const VertexId& from, const VertexId& to) const {
  auto i = find(from);
  auto j = find(to);
  if (!i || !j) return false;
  const auto& list = out_[*i];
  return std::binary_search(list.begin(), list.end(), *j);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<std::size_t> keep;
  keep.reserve(s.size());
  for (const auto& v : s) {
    auto i = g.find(v);
    if (!i) throw PreconditionError("induced_subgraph: " + v.str() + " not in graph");
    keep.push_back(*i);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (g.adjacent(keep[a], keep[b])) edges.emplace_back(g.id(keep[a]), g.id(keep[b]));
    }
  }
  return Graph(std::vector<VertexId>(s.begin(), s.end()), edges);
}

Graph remove_edge(const Graph& g, const Edge& e) {
  if (!g.contains(e)) {
    throw PreconditionError("remove_edge: " + e.first().str() + "-" + e.second().str() +
                            " is not an edge");
  }
  std::vector<Edge> edges = g.edges();
  edges.erase(std::find(edges.begin(), edges.end(), e));
  return Graph(g.vertices(), edges);
}

Graph add_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.vertices(), edges);
}

Graph add_vertices(const Graph& g, const VertexSet& extra) {
  std::vector<VertexId> vs = g.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  return Graph(std::move(vs), g.edges());
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<VertexId> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Edge> es = a.edges();
  auto more = b.edges();
  es.insert(es.end(), more.begin(), more.end());
  return Graph(std::move(vs), es);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (std::size_t w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<VertexId> comp;
    comp.reserve(members.size());
    for (std::size_t i : members) comp.push_back(g.id(i));
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  std::vector<std::size_t> idx;
  for (const auto& v : s) {
    auto i = g.find(v);
    if (!i) return false;
    idx.push_back(*i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (!g.adjacent(idx[a], idx[b])) return false;
    }
  }
  return true;
}

Digraph digraph_union(const Digraph& a, const Digraph& b) {
  std::vector<VertexId> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Arc> arcs = a.arcs();
  auto more = b.arcs();
  arcs.insert(arcs.end(), more.begin(), more.end());
  return Digraph(std::move(vs), arcs);
}

Digraph add_vertices(const Digraph& d, const VertexSet& extra) {
  std::vector<VertexId> vs = d.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  return Digraph(std::move(vs), d.arcs());
}

VertexSet vertex_set(const Graph& g) { return {g.vertices().begin(), g.vertices().end()}; }
VertexSet vertex_set(const Digraph& d) { return {d.vertices().begin(), d.vertices().end()}; }

VertexId FreshNames::next() {
  for (;;) {
    VertexId candidate("_z" + std::to_string(counter_++));
    if (reserved_.insert(candidate).second) return candidate;
  }
}

}  // namespace holecert
