#include "holecert/holes.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "holecert/error.hpp"

namespace holecert {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> to_indices(const Graph& g, std::span<const VertexId> vs) {
  std::vector<std::size_t> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(g.index_of(v));
  return out;
}

std::vector<VertexId> to_ids(const Graph& g, std::span<const std::size_t> idx) {
  std::vector<VertexId> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(g.id(i));
  return out;
}

bool is_hole_indices(const Graph& g, std::span<const std::size_t> c) {
  const std::size_t k = c.size();
  if (k < 4) return false;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (c[a] == c[b]) return false;
      bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
      if (g.adjacent(c[a], c[b]) != consecutive) return false;
    }
  }
  return true;
}

void require_hole(const Graph& g, const Hole& c, const char* op) {
  for (const auto& v : c.cycle()) {
    if (!g.contains(v)) {
      throw PreconditionError(std::string(op) + ": hole vertex " + v.str() + " not in graph");
    }
  }
  if (!is_hole(g, c.cycle())) {
    throw PreconditionError(std::string(op) + ": cycle is not a hole of the graph");
  }
}

// Shortest path from `from` to `to` whose internal vertices are all allowed.
// Ties go to the lexicographically least index sequence.
std::optional<std::vector<std::size_t>> shortest_path(const Graph& g, std::size_t from,
                                                      std::size_t to,
                                                      const std::vector<bool>& allowed) {
  std::vector<std::size_t> dist(g.size(), kNone);
  std::deque<std::size_t> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : g.neighbors(x)) {
      if (dist[y] != kNone || !allowed[y] || y == from) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  std::size_t best = kNone;
  for (std::size_t y : g.neighbors(from)) {
    if (dist[y] != kNone && (best == kNone || dist[y] + 1 < best)) best = dist[y] + 1;
  }
  if (best == kNone) return std::nullopt;
  std::vector<std::size_t> path{from};
  std::size_t cur = from;
  std::size_t remaining = best;
  while (cur != to) {
    for (std::size_t y : g.neighbors(cur)) {
      if (dist[y] == remaining - 1 && (y == to || allowed[y]) && y != from) {
        cur = y;
        break;
      }
    }
    path.push_back(cur);
    --remaining;
  }
  return path;
}

}  // namespace

Hole::Hole(std::vector<VertexId> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) throw PreconditionError("hole needs at least 4 vertices");
  {
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("hole vertices must be distinct");
    }
  }
  std::size_t start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  const auto& next = cycle[(start + 1) % k];
  const auto& prev = cycle[(start + k - 1) % k];
  cycle_.reserve(k);
  if (next < prev) {
    for (std::size_t i = 0; i < k; ++i) cycle_.push_back(cycle[(start + i) % k]);
  } else {
    for (std::size_t i = 0; i < k; ++i) cycle_.push_back(cycle[(start + k - i) % k]);
  }
}

bool Hole::contains(const VertexId& v) const {
  return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
}

std::vector<Edge> Hole::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    out.emplace_back(cycle_[i], cycle_[(i + 1) % cycle_.size()]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Hole& h) {
  for (std::size_t i = 0; i < h.length(); ++i) os << (i ? " " : "") << h.cycle()[i];
  return os;
}

bool is_hole(const Graph& g, std::span<const VertexId> cycle) {
  std::vector<std::size_t> idx;
  for (const auto& v : cycle) {
    auto i = g.find(v);
    if (!i) return false;
    idx.push_back(*i);
  }
  return is_hole_indices(g, idx);
}

bool is_peo(const Graph& g, std::span<const VertexId> order) {
  if (order.size() != g.size()) return false;
  std::vector<std::size_t> pos(g.size(), kNone);
  for (std::size_t p = 0; p < order.size(); ++p) {
    auto i = g.find(order[p]);
    if (!i || pos[*i] != kNone) return false;
    pos[*i] = p;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

std::vector<VertexId> mcs_elimination_order(const Graph& g, const VertexSet& first) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> forced;
  for (const auto& v : first) forced.push_back(g.index_of(v));
  std::vector<VertexId> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = kNone;
    if (step < forced.size()) {
      pick = forced[step];
    } else {
      for (std::size_t v = 0; v < n; ++v) {
        if (!visited[v] && (pick == kNone || weight[v] > weight[pick])) pick = v;
      }
    }
    visited[pick] = true;
    visit.push_back(g.id(pick));
    for (std::size_t w : g.neighbors(pick)) {
      if (!visited[w]) ++weight[w];
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

std::variant<Peo, Hole> chordality(const Graph& g) {
  auto order = mcs_elimination_order(g);
  const std::size_t n = g.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[g.index_of(order[p])] = p;

  // First violating triple: v with two non-adjacent later neighbours.
  std::optional<std::array<std::size_t, 3>> triple;
  for (std::size_t p = 0; p < n && !triple; ++p) {
    std::size_t v = g.index_of(order[p]);
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(v)) {
      if (pos[w] > p) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size() && !triple; ++a) {
      for (std::size_t b = a + 1; b < later.size() && !triple; ++b) {
        if (!g.adjacent(later[a], later[b])) triple = {{v, later[a], later[b]}};
      }
    }
  }
  if (!triple) return Peo{std::move(order)};

  // A shortest u-w path avoiding the rest of N[v] closes an induced cycle
  // through v. Some triple on any hole admits one, so the scan terminates.
  auto try_triple = [&](std::size_t v, std::size_t u,
                        std::size_t w) -> std::optional<std::vector<std::size_t>> {
    std::vector<bool> allowed(n, true);
    allowed[v] = false;
    for (std::size_t x : g.neighbors(v)) allowed[x] = false;
    auto path = shortest_path(g, u, w, allowed);
    if (!path) return std::nullopt;
    path->insert(path->begin(), v);
    return path;
  };

  auto cycle = try_triple((*triple)[0], (*triple)[1], (*triple)[2]);
  for (std::size_t v = 0; v < n && !cycle; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size() && !cycle; ++a) {
      for (std::size_t b = a + 1; b < nb.size() && !cycle; ++b) {
        if (!g.adjacent(nb[a], nb[b])) cycle = try_triple(v, nb[a], nb[b]);
      }
    }
  }
  if (!cycle || !is_hole_indices(g, *cycle)) {
    throw StructuralViolation("chordality", "hole extraction failed on a non-chordal graph");
  }
  return Hole(to_ids(g, *cycle));
}

HoleList enumerate_holes(const Graph& g, std::size_t cap) {
  if (cap == 0) throw PreconditionError("enumerate_holes: cap must be positive");
  const std::size_t n = g.size();
  const std::size_t limit = cap + 1;
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // Extends the induced path `path` (path[0] is the least vertex of any hole
  // it completes); stops once `limit` holes are known.
  auto extend = [&](auto&& self) -> void {
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t x : g.neighbors(last)) {
      if (found.size() >= limit) return;
      if (x <= s || on_path[x]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(x, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g.adjacent(x, s)) {
        if (path.size() >= 3 && x > path[1]) {
          found.push_back(path);
          found.back().push_back(x);
        }
        continue;
      }
      path.push_back(x);
      on_path[x] = true;
      self(self);
      on_path[x] = false;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n && found.size() < limit; ++s) {
    for (std::size_t a : g.neighbors(s)) {
      if (a <= s || found.size() >= limit) continue;
      path = {s, a};
      on_path[s] = on_path[a] = true;
      extend(extend);
      on_path[s] = on_path[a] = false;
    }
  }

  HoleList out;
  out.capped = found.size() > cap;
  for (const auto& c : found) out.holes.emplace_back(to_ids(g, c));
  std::sort(out.holes.begin(), out.holes.end());
  return out;
}

VertexSet x_set(const Graph& g, const Hole& c) {
  require_hole(g, c, "x_set");
  auto idx = to_indices(g, c.cycle());
  VertexSet out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (std::find(idx.begin(), idx.end(), x) != idx.end()) continue;
    if (std::all_of(idx.begin(), idx.end(), [&](std::size_t h) { return g.adjacent(x, h); })) {
      out.insert(g.id(x));
    }
  }
  return out;
}

std::optional<std::vector<VertexId>> c_avoiding_path(const Graph& g, const Hole& c,
                                                     const VertexId& u, const VertexId& v) {
  if (u == v) throw PreconditionError("c_avoiding_path: endpoints must differ");
  std::size_t ui = g.index_of(u);
  std::size_t vi = g.index_of(v);
  VertexSet blocked = x_set(g, c);
  blocked.insert(c.cycle().begin(), c.cycle().end());

  if (g.adjacent(ui, vi) && (!blocked.contains(u) || !blocked.contains(v))) {
    return std::vector<VertexId>{u, v};
  }
  std::vector<bool> allowed(g.size(), true);
  for (const auto& b : blocked) allowed[g.index_of(b)] = false;
  allowed[ui] = allowed[vi] = false;

  // Length >= 2 routes only: drop the direct edge from the search.
  std::vector<std::size_t> dist(g.size(), kNone);
  std::deque<std::size_t> queue;
  for (std::size_t y : g.neighbors(vi)) {
    if (allowed[y]) {
      dist[y] = 1;
      queue.push_back(y);
    }
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : g.neighbors(x)) {
      if (allowed[y] && dist[y] == kNone) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::size_t first = kNone;
  for (std::size_t y : g.neighbors(ui)) {
    if (dist[y] != kNone && (first == kNone || dist[y] < dist[first])) first = y;
  }
  if (first == kNone) return std::nullopt;
  std::vector<VertexId> path{u};
  std::size_t cur = first;
  for (;;) {
    path.push_back(g.id(cur));
    if (dist[cur] == 1) break;
    for (std::size_t y : g.neighbors(cur)) {
      if (dist[y] == dist[cur] - 1 && allowed[y]) {
        cur = y;
        break;
      }
    }
  }
  path.push_back(v);
  return path;
}

std::optional<SharedPath> shared_edge_path(const Hole& c1, const Hole& c2, const Graph& g) {
  if (c1 == c2) throw PreconditionError("shared_edge_path: holes must differ");
  require_hole(g, c1, "shared_edge_path");
  require_hole(g, c2, "shared_edge_path");
  auto e1 = c1.edges();
  auto e2 = c2.edges();
  std::vector<Edge> common;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;

  Graph shared = Graph::from_edges(common);
  std::size_t start = kNone;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    if (shared.degree(i) > 2) {
      throw StructuralViolation("shared-path", "vertex " + shared.id(i).str() +
                                                   " has degree > 2 in the shared edges");
    }
    if (shared.degree(i) == 1 && start == kNone) start = i;
  }
  if (start == kNone || shared.size() != common.size() + 1 ||
      connected_components(shared).size() != 1) {
    throw StructuralViolation("shared-path", "shared edges do not form a path");
  }
  SharedPath out;
  out.edge_count = common.size();
  std::size_t prev = kNone;
  std::size_t cur = start;
  while (cur != kNone) {
    out.path.push_back(shared.id(cur));
    std::size_t next = kNone;
    for (std::size_t y : shared.neighbors(cur)) {
      if (y != prev) next = y;
    }
    prev = cur;
    cur = next;
  }
  return out;
}

namespace {

// Edges of one (x,y)-section of c: walk from position a to position b.
std::vector<Edge> section_edges(const Hole& c, std::size_t a, std::size_t b) {
  std::vector<Edge> out;
  const std::size_t k = c.length();
  for (std::size_t i = a; i != b; i = (i + 1) % k) {
    out.emplace_back(c.cycle()[i], c.cycle()[(i + 1) % k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of(const std::vector<Edge>& small, const std::vector<Edge>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

LemmaFlags validate_two_hole_lemmas(const Graph& g, const HoleReport& report) {
  LemmaFlags flags;
  if (report.capped) {
    throw PreconditionError("validate_two_hole_lemmas: hole list is incomplete");
  }
  const auto& holes = report.holes;
  std::vector<VertexSet> xs;
  for (const auto& c : holes) xs.push_back(x_set(g, c));

  for (std::size_t t = 0; t < holes.size(); ++t) {
    if (!is_clique(g, xs[t])) {
      flags.x_clique = false;
      flags.diagnostics.push_back("X set of hole " + std::to_string(t) + " is not a clique");
    }
  }

  if (holes.size() == 2) {
    try {
      auto shared = shared_edge_path(holes[0], holes[1], g);
      if (shared && shared->edge_count >= 2 && xs[0] != xs[1]) {
        flags.x_equal = false;
        flags.diagnostics.push_back("X_1 != X_2 with >= 2 shared edges");
      }
    } catch (const StructuralViolation& e) {
      flags.shared_is_path = false;
      flags.diagnostics.push_back(e.what());
    }
  }

  VertexSet on_some_hole;
  for (const auto& c : holes) on_some_hole.insert(c.cycle().begin(), c.cycle().end());

  for (std::size_t t = 0; t < holes.size(); ++t) {
    const Hole& c = holes[t];
    const auto& cyc = c.cycle();
    const std::size_t k = c.length();
    auto cedges = c.edges();
    for (std::size_t vi = 0; vi < g.size(); ++vi) {
      const VertexId& v = g.id(vi);
      if (c.contains(v)) continue;
      std::vector<std::size_t> touched;  // positions on c adjacent to v
      for (std::size_t p = 0; p < k; ++p) {
        if (g.adjacent(v, cyc[p])) touched.push_back(p);
      }

      // Wheel dichotomy for every non-adjacent pair of touched hole vertices.
      for (std::size_t a = 0; a < touched.size(); ++a) {
        for (std::size_t b = a + 1; b < touched.size(); ++b) {
          std::size_t pa = touched[a];
          std::size_t pb = touched[b];
          if (g.adjacent(cyc[pa], cyc[pb])) continue;
          bool all_of_c = xs[t].contains(v);
          bool overlapping = false;
          auto sec1 = section_edges(c, pa, pb);
          auto sec2 = section_edges(c, pb, pa);
          for (std::size_t s = 0; s < holes.size(); ++s) {
            if (s == t || !holes[s].contains(v)) continue;
            auto other = holes[s].edges();
            std::vector<Edge> common;
            std::set_intersection(cedges.begin(), cedges.end(), other.begin(), other.end(),
                                  std::back_inserter(common));
            if (common.size() >= 2 && (subset_of(common, sec1) != subset_of(common, sec2))) {
              overlapping = true;
            }
          }
          if (all_of_c == overlapping) {
            flags.wheel_dichotomy = false;
            flags.diagnostics.push_back("wheel dichotomy fails for " + v.str() + " on hole " +
                                        std::to_string(t));
          }
        }
      }

      // Ear vertices: on no hole, outside X_C, adjacent to consecutive v_i v_{i+1}.
      if (xs[t].contains(v) || on_some_hole.contains(v)) continue;
      for (std::size_t p = 0; p < k; ++p) {
        const auto& vp = cyc[p];
        const auto& vq = cyc[(p + 1) % k];
        if (!g.adjacent(v, vp) || !g.adjacent(v, vq)) continue;
        for (const auto& w : cyc) {
          if (w == vp || w == vq) continue;
          auto path = c_avoiding_path(g, c, v, w);
          if (path && path->size() < 3) {
            flags.avoiding_length = false;
            flags.diagnostics.push_back("length-1 avoiding path " + v.str() + "-" + w.str());
          }
        }
      }
    }
  }
  return flags;
}

HoleReport analyze(const Graph& g, std::size_t cap) {
  HoleReport r;
  auto list = enumerate_holes(g, cap);
  r.holes = std::move(list.holes);
  r.capped = list.capped;
  r.cap = cap;
  for (const auto& c : r.holes) r.x_sets.push_back(x_set(g, c));
  if (r.capped) return r;
  if (r.holes.size() == 2) {
    try {
      r.shared = shared_edge_path(r.holes[0], r.holes[1], g);
    } catch (const StructuralViolation&) {
      // surfaced through the shared_is_path flag
    }
  }
  if (r.holes.size() <= 2) r.flags = validate_two_hole_lemmas(g, r);
  return r;
}

std::string render_report(const HoleReport& report) {
  std::ostringstream out;
  out << "holes ";
  if (report.capped) {
    out << '>' << report.cap;
  } else {
    out << report.holes.size();
  }
  out << '\n';
  for (const auto& h : report.holes) out << "hole " << h << '\n';
  for (std::size_t i = 0; i < report.x_sets.size(); ++i) {
    out << "xset " << i;
    for (const auto& v : report.x_sets[i]) out << ' ' << v;
    out << '\n';
  }
  if (report.shared) {
    out << "shared";
    for (const auto& v : report.shared->path) out << ' ' << v;
    out << '\n';
  }
  if (report.flags) {
    const auto& f = *report.flags;
    auto flag = [&](const char* name, bool value) {
      out << "flag " << name << ' ' << (value ? "true" : "false") << '\n';
    };
    flag("x_clique", f.x_clique);
    flag("shared_is_path", f.shared_is_path);
    flag("x_equal", f.x_equal);
    flag("wheel_dichotomy", f.wheel_dichotomy);
    flag("avoiding_length", f.avoiding_length);
  }
  return out.str();
}

}  // namespace holecert
