#include "holecert/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "holecert/error.hpp"
#include "holecert/verifier.hpp"

namespace holecert {

ChordalWitness chordal_witness(const Graph& g, const VertexSet& clique) {
  FreshNames names(vertex_set(g));
  return chordal_witness(g, clique, names);
}

ChordalWitness chordal_witness(const Graph& g, const VertexSet& clique, FreshNames& names) {
  for (const auto& x : clique) {
    if (!g.contains(x)) throw PreconditionError("chordal_witness: " + x.str() + " not in graph");
  }
  if (!is_clique(g, clique)) throw PreconditionError("chordal_witness: X is not a clique");
  auto order = mcs_elimination_order(g, clique);
  if (!is_peo(g, order)) throw PreconditionError("chordal_witness: graph is not chordal");
  for (const auto& v : g.vertices()) names.reserve(v);
  VertexId prey = names.next();

  const std::size_t n = order.size();
  const std::size_t first_x = n - clique.size();
  std::vector<std::size_t> idx(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) {
    idx[p] = g.index_of(order[p]);
    pos[idx[p]] = p;
  }

  std::vector<std::uint8_t> covered(n * n, 0);
  std::vector<Arc> arcs;
  for (std::size_t p = n; p-- > 0;) {
    std::vector<std::size_t> members{idx[p]};
    for (std::size_t w : g.neighbors(idx[p])) {
      if (pos[w] > p) members.push_back(w);
    }
    bool covers_new = false;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        auto& cell = covered[members[a] * n + members[b]];
        if (!cell) covers_new = true;
        cell = covered[members[b] * n + members[a]] = 1;
      }
    }
    if (!covers_new || p > first_x) continue;
    const VertexId& target = p == 0 ? prey : order[p - 1];
    for (std::size_t m : members) arcs.push_back({g.id(m), target});
  }
  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(prey);
  return {Digraph(std::move(vertices), arcs), std::move(prey)};
}

Digraph compose(const Digraph& d1, const VertexSet& isolated, const Digraph& d2,
                const VertexId& prey, const VertexSet& shared) {
  for (const auto& i : isolated) {
    if (!d1.contains(i)) throw PreconditionError("compose: isolated " + i.str() + " not in D1");
    if (d2.contains(i)) throw PreconditionError("compose: isolated " + i.str() + " also in D2");
  }
  if (!d2.contains(prey)) throw PreconditionError("compose: prey " + prey.str() + " not in D2");
  if (d1.contains(prey)) throw PreconditionError("compose: prey " + prey.str() + " also in D1");

  VertexSet overlap;
  for (const auto& v : d1.vertices()) {
    if (!isolated.contains(v) && d2.contains(v)) overlap.insert(v);
  }
  if (overlap != shared) {
    throw PreconditionError("compose: V(G1) and V(G2) do not meet exactly in X");
  }
  for (const auto& x : shared) {
    if (d2.in_degree(x) != 0) {
      throw PreconditionError("compose: " + x.str() + " has positive indegree in D2");
    }
  }
  return digraph_union(d1, d2);
}

std::optional<Edge> find_removable_edge(const Graph& g, const Hole& c) {
  for (const auto& e : c.edges()) {
    if (!c_avoiding_path(g, c, e.first(), e.second())) return e;
  }
  return std::nullopt;
}

namespace {

std::vector<VertexId> label_from(const Hole& c, const VertexId& start, const VertexId& next) {
  const auto& cyc = c.cycle();
  const std::size_t m = cyc.size();
  std::size_t s = std::find(cyc.begin(), cyc.end(), start) - cyc.begin();
  bool forward = cyc[(s + 1) % m] == next;
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(cyc[forward ? (s + i) % m : (s + m - i) % m]);
  return out;
}

void require_all_edges_avoidable(const Graph& g, const Hole& c,
                                 const std::vector<VertexId>& labeled) {
  const std::size_t m = labeled.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!c_avoiding_path(g, c, labeled[i], labeled[(i + 1) % m])) {
      throw PreconditionError("edge " + labeled[i].str() + "-" + labeled[(i + 1) % m].str() +
                              " has no hole-avoiding path");
    }
  }
}

CutDecomposition cut_decompose(const Graph& g, const Hole& c1, std::vector<VertexId> labeled,
                               std::size_t j, const Hole* c2, std::size_t max_g1_holes) {
  const std::size_t m = labeled.size();
  const VertexId vj = labeled[j];
  const VertexId vk = labeled[(j + 1) % m];

  auto ear_path = c_avoiding_path(g, c1, vj, vk);
  if (!ear_path) throw PreconditionError("no avoiding path for the cut edge");
  if (ear_path->size() != 3) {
    throw StructuralViolation("ear-length", "shortest avoiding path has " +
                                                std::to_string(ear_path->size() - 1) + " edges");
  }
  const VertexId ear = (*ear_path)[1];
  if (c2 && c2->contains(ear)) {
    throw StructuralViolation("ear-off-second-hole", ear.str() + " lies on the second hole");
  }

  VertexSet cut = x_set(g, c1);
  cut.insert(vj);
  cut.insert(vk);

  VertexSet rest;
  for (const auto& v : g.vertices()) {
    if (!cut.contains(v)) rest.insert(v);
  }
  const VertexId& anchor = labeled[(j + 2) % m];
  VertexSet component;
  for (const auto& comp : connected_components(induced_subgraph(g, rest))) {
    if (std::find(comp.begin(), comp.end(), anchor) != comp.end()) {
      component.insert(comp.begin(), comp.end());
    }
  }
  for (const auto& v : labeled) {
    if (v != vj && v != vk && !component.contains(v)) {
      throw StructuralViolation("cut-component", "hole vertex " + v.str() +
                                                     " is not in the component Q");
    }
  }
  if (component.contains(ear)) {
    throw StructuralViolation("vertex-cut", "ear " + ear.str() + " reaches Q around the cut");
  }

  VertexSet outside;
  for (const auto& v : g.vertices()) {
    if (!component.contains(v)) outside.insert(v);
  }
  Graph g2 = induced_subgraph(g, outside);
  if (!enumerate_holes(g2, 1).holes.empty()) {
    throw StructuralViolation("g2-chordal", "G2 has a hole");
  }

  VertexSet inside = component;
  inside.insert(cut.begin(), cut.end());
  Graph g1 = remove_edge(induced_subgraph(g, inside), Edge(vj, vk));
  // Removing v_j v_{j+1} can destroy both holes when that edge is shared, so
  // only an upper bound is guaranteed; a chordal G1 is fine for the bound.
  auto g1_holes = enumerate_holes(g1, max_g1_holes + 1);
  if (g1_holes.capped || g1_holes.holes.size() > max_g1_holes) {
    throw StructuralViolation("g1-holes", "G1 has more than " + std::to_string(max_g1_holes) +
                                              " holes");
  }

  VertexSet meet;
  for (const auto& v : g1.vertices()) {
    if (g2.contains(v)) meet.insert(v);
  }
  if (meet != cut) throw StructuralViolation("intersection", "V(G1) & V(G2) != X");
  if (!is_clique(g2, cut)) throw StructuralViolation("cut-clique", "X is not a clique of G2");
  if (!(graph_union(g1, g2) == g)) {
    throw StructuralViolation("edge-union", "E(G1) + E(G2) != E(G)");
  }

  return CutDecomposition{std::move(g1), std::move(g2), std::move(cut), std::move(component),
                          std::move(labeled), j, ear, 0};
}

}  // namespace

CutDecomposition avoid2_decompose(const Graph& g, const Hole& c1, const Hole& c2) {
  if (!is_hole(g, c1.cycle()) || !is_hole(g, c2.cycle()) || c1 == c2) {
    throw PreconditionError("avoid2_decompose: needs two distinct holes of the graph");
  }
  if (c1.length() < c2.length()) {
    throw PreconditionError("avoid2_decompose: first hole must be the longer one");
  }
  auto all = enumerate_holes(g, 2);
  std::vector<Hole> given{c1, c2};
  std::sort(given.begin(), given.end());
  if (all.capped || all.holes != given) {
    throw PreconditionError("avoid2_decompose: graph must have exactly these two holes");
  }
  auto shared = shared_edge_path(c1, c2, g);
  if (!shared) throw PreconditionError("avoid2_decompose: holes share no edge");

  auto labeled = label_from(c1, shared->path[0], shared->path[1]);
  require_all_edges_avoidable(g, c1, labeled);
  std::size_t j = shared->edge_count == 1 ? 2 : 0;
  auto out = cut_decompose(g, c1, std::move(labeled), j, &c2, 1);
  out.shared_len = shared->edge_count;
  return out;
}

CutDecomposition avoid1_decompose(const Graph& g, const Hole& c, std::size_t j) {
  if (!is_hole(g, c.cycle())) throw PreconditionError("avoid1_decompose: not a hole");
  if (j >= c.length()) throw PreconditionError("avoid1_decompose: j out of range");
  auto all = enumerate_holes(g, 1);
  if (all.capped || all.holes.size() != 1) {
    throw PreconditionError("avoid1_decompose: graph must have exactly one hole");
  }
  require_all_edges_avoidable(g, c, c.cycle());
  return cut_decompose(g, c, c.cycle(), j, nullptr, 0);
}

namespace {

struct Piece {
  Digraph digraph;
  VertexSet isolated;
  DerivationNode node;
  bool fallback = false;
};

std::vector<VertexId> sorted_ids(const VertexSet& s) { return {s.begin(), s.end()}; }

class Driver {
 public:
  Driver(const Graph& root, const CertifyOptions& options)
      : names_(vertex_set(root)), options_(options) {}

  Piece run(const Graph& g) {
    auto list = enumerate_holes(g, options_.hole_cap);
    if (list.capped || list.holes.size() > 2) return fallback(g);
    switch (list.holes.size()) {
      case 0:
        return chordal_leaf(g, {});
      case 1:
        return one_hole(g, list.holes[0]);
      default:
        return two_holes(g, list.holes[0], list.holes[1]);
    }
  }

  Piece fallback(const Graph& g) {
    ExactResult exact;
    try {
      exact = exact_k(g, options_.budget);
    } catch (const BudgetExhausted& e) {
      std::ostringstream partial;
      for (std::size_t d = 0; d < in_progress_.size(); ++d) {
        partial << std::string(2 * d, ' ') << in_progress_[d] << '\n';
      }
      partial << std::string(2 * in_progress_.size(), ' ') << "exact_fallback n=" << g.size()
              << " m=" << g.edge_count() << " (budget exhausted)\n";
      throw CertifyBudgetExhausted(e.what(), partial.str());
    }
    std::map<VertexId, VertexId> rename;
    Piece piece;
    for (const auto& i : exact.isolated) {
      auto fresh = names_.next();
      rename.emplace(i, fresh);
      piece.isolated.insert(fresh);
    }
    auto mapped = [&](const VertexId& v) {
      auto it = rename.find(v);
      return it == rename.end() ? v : it->second;
    };
    std::vector<Arc> arcs;
    for (const auto& a : exact.witness.arcs()) arcs.push_back({mapped(a.from), mapped(a.to)});
    std::vector<VertexId> vertices = g.vertices();
    vertices.insert(vertices.end(), piece.isolated.begin(), piece.isolated.end());
    piece.digraph = Digraph(std::move(vertices), arcs);
    piece.node = node(DerivationKind::ExactFallback, g, piece.isolated.size());
    piece.node.prey = sorted_ids(piece.isolated);
    piece.fallback = true;
    return piece;
  }

 private:
  static DerivationNode node(DerivationKind kind, const Graph& g, std::size_t k) {
    DerivationNode n;
    n.kind = kind;
    n.vertices = g.size();
    n.edges = g.edge_count();
    n.k = k;
    return n;
  }

  Piece chordal_leaf(const Graph& g, const VertexSet& clique) {
    Piece piece;
    if (g.edge_count() == 0 && clique.empty()) {
      piece.digraph = Digraph(g.vertices(), {});
      piece.node = node(DerivationKind::Chordal, g, 0);
      return piece;
    }
    auto w = chordal_witness(g, clique, names_);
    piece.digraph = std::move(w.digraph);
    piece.isolated = {w.prey};
    piece.node = node(DerivationKind::Chordal, g, 1);
    piece.node.prey = {w.prey};
    return piece;
  }

  // Gluing of a certified G1 and a chordal G2 along `shared`.
  Piece glue(const Graph& whole, Piece left, const Graph& g2, const VertexSet& shared) {
    Piece right = chordal_leaf(g2, shared);
    const VertexId prey = right.node.prey.at(0);
    Piece out;
    out.digraph = compose(left.digraph, left.isolated, right.digraph, prey, shared);
    out.isolated = left.isolated;
    out.isolated.insert(prey);
    out.fallback = left.fallback;
    auto verdict = verify::verify_witness(whole, out.digraph, out.isolated, out.isolated.size());
    if (!verdict) throw StructuralViolation("compose-check", verdict.diagnostic);
    out.node = node(DerivationKind::Compose, whole, out.isolated.size());
    out.node.shared = sorted_ids(shared);
    out.node.prey = {prey};
    out.node.children.push_back(std::move(left.node));
    out.node.children.push_back(std::move(right.node));
    return out;
  }

  Piece edge_split(const Graph& g, const Hole& c, const Edge& e, std::size_t holes_before) {
    Graph rest = remove_edge(g, e);
    auto rest_holes = enumerate_holes(rest, options_.hole_cap);
    if (rest_holes.capped || rest_holes.holes.size() >= holes_before) {
      throw StructuralViolation("edge-split-holes",
                                "G - " + e.first().str() + e.second().str() + " did not lose a hole");
    }
    Scope scope(*this, "edge_split edge=" + e.first().str() + "," + e.second().str());
    Piece sub = run(rest);
    Graph piece2 = Graph::from_edges(std::vector<Edge>{e});
    Piece glued = glue(g, std::move(sub), piece2, {e.first(), e.second()});
    Piece out;
    out.node = node(DerivationKind::EdgeSplit, g, glued.isolated.size());
    out.node.edge = e;
    out.node.hole = c.cycle();
    out.node.children.push_back(std::move(glued.node));
    out.digraph = std::move(glued.digraph);
    out.isolated = std::move(glued.isolated);
    out.fallback = glued.fallback;
    return out;
  }

  Piece cut_split(const Graph& g, const Hole& c, const CutDecomposition& d) {
    Scope scope(*this, "cut_split j=" + std::to_string(d.j) + " ear=" + d.ear.str());
    Piece sub = run(d.g1);
    Piece glued = glue(g, std::move(sub), d.g2, d.cut);
    Piece out;
    out.node = node(DerivationKind::CutSplit, g, glued.isolated.size());
    out.node.hole = c.cycle();
    out.node.j = d.j;
    out.node.ear = d.ear;
    if (d.shared_len > 0) out.node.shared_len = d.shared_len;
    out.node.cut = sorted_ids(d.cut);
    out.node.component = sorted_ids(d.component);
    out.node.children.push_back(std::move(glued.node));
    out.digraph = std::move(glued.digraph);
    out.isolated = std::move(glued.isolated);
    out.fallback = glued.fallback;
    return out;
  }

  // Runs `attempt`; on a structural failure restores the fresh-name pool so
  // that the next attempt numbers its vertices from the same point.
  template <typename Fn>
  std::optional<Piece> attempt(Fn&& fn) {
    FreshNames saved = names_;
    auto depth = in_progress_.size();
    try {
      return fn();
    } catch (const StructuralViolation&) {
      names_ = std::move(saved);
      in_progress_.resize(depth);
      return std::nullopt;
    }
  }

  Piece one_hole(const Graph& g, const Hole& c) {
    if (auto e = find_removable_edge(g, c)) {
      if (auto p = attempt([&] { return edge_split(g, c, *e, 1); })) return std::move(*p);
      return fallback(g);
    }
    for (std::size_t j = 0; j < c.length(); ++j) {
      auto p = attempt([&] { return cut_split(g, c, avoid1_decompose(g, c, j)); });
      if (p) return std::move(*p);
    }
    return fallback(g);
  }

  Piece two_holes(const Graph& g, Hole c1, Hole c2) {
    if (c1.length() < c2.length()) std::swap(c1, c2);
    std::optional<SharedPath> shared;
    try {
      shared = shared_edge_path(c1, c2, g);
    } catch (const StructuralViolation&) {
      return fallback(g);
    }
    auto try_edge = [&](const Hole& c) -> std::optional<Piece> {
      auto e = find_removable_edge(g, c);
      if (!e) return std::nullopt;
      return attempt([&] { return edge_split(g, c, *e, 2); });
    };
    if (auto p = try_edge(c1)) return std::move(*p);
    if (shared && !find_removable_edge(g, c1)) {
      if (auto p = attempt([&] { return cut_split(g, c1, avoid2_decompose(g, c1, c2)); })) {
        return std::move(*p);
      }
    }
    if (auto p = try_edge(c2)) return std::move(*p);
    return fallback(g);
  }

  // Names the step currently being built, for partial-derivation reports.
  class Scope {
   public:
    Scope(Driver& d, std::string what) : d_(d) { d_.in_progress_.push_back(std::move(what)); }
    ~Scope() {
      if (!d_.in_progress_.empty()) d_.in_progress_.pop_back();
    }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Driver& d_;
  };

  FreshNames names_;
  CertifyOptions options_;
  std::vector<std::string> in_progress_;
};

}  // namespace

Certificate certify(const Graph& g, const CertifyOptions& options) {
  Driver driver(g, options);
  Piece piece = driver.run(g);
  auto make = [&](Piece p) {
    Certificate cert;
    cert.target = g;
    cert.k = p.isolated.size();
    cert.digraph = std::move(p.digraph);
    cert.isolated = std::move(p.isolated);
    cert.derivation = std::move(p.node);
    cert.fallback_used = p.fallback;
    return cert;
  };
  Certificate cert = make(std::move(piece));
  if (verify::verify_certificate(g, cert)) return cert;
  Driver retry(g, options);
  cert = make(retry.fallback(g));
  auto verdict = verify::verify_certificate(g, cert);
  if (!verdict) throw StructuralViolation("certificate", verdict.diagnostic);
  return cert;
}

}  // namespace holecert
