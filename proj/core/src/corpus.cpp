#include "holecert/corpus.hpp"

#include <charconv>

#include "holecert/error.hpp"
#include "holecert/holes.hpp"

namespace holecert::corpus {

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError("bad number '" + std::string(s) + "'");
  }
  return v;
}

VertexId vid(const std::string& s) { return VertexId(s); }

}  // namespace

Rational Rational::parse(std::string_view text) {
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_u64(text.substr(0, slash));
    r.den = parse_u64(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) throw PreconditionError("bad probability");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_u64(whole)) * r.den + parse_u64(frac);
  } else {
    r.num = parse_u64(text);
    r.den = 1;
  }
  if (r.den == 0 || r.num > r.den) throw PreconditionError("probability must lie in [0, 1]");
  return r;
}

std::vector<VertexId> numbered_vertices(std::size_t n, std::string_view prefix) {
  std::vector<VertexId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(vid(std::string(prefix) + std::to_string(i)));
  return out;
}

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  if (pair_count(n) > 64) throw PreconditionError("graph_from_mask: n too large");
  auto vs = numbered_vertices(n);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(vs, edges);
}

Graph random_graph(std::size_t n, Rational p, std::mt19937_64& rng) {
  auto vs = numbered_vertices(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % p.den < p.num) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(vs, edges);
}

std::string edge_code(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += e.first().str().substr(1) + "-" + e.second().str().substr(1);
  }
  return out.empty() ? "-" : out;
}

Graph cycle_graph(std::size_t m, std::string_view prefix) {
  auto vs = numbered_vertices(m, prefix);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(vs[i], vs[(i + 1) % m]);
  return Graph(vs, edges);
}

Graph wheel_graph(std::size_t m) {
  Graph rim = cycle_graph(m, "r");
  std::vector<Edge> edges = rim.edges();
  for (const auto& v : rim.vertices()) edges.emplace_back(vid("h"), v);
  return Graph::from_edges(edges);
}

Graph fused_cycles(std::size_t m1, std::size_t m2, std::size_t shared) {
  if (m1 < m2 || m2 < shared + 2 || shared == 0) {
    throw PreconditionError("fused_cycles: need m1 >= m2 >= shared + 2, shared >= 1");
  }
  auto p = numbered_vertices(shared + 1, "p");
  auto a = numbered_vertices(m1 - shared - 1, "a");
  auto b = numbered_vertices(m2 - shared - 1, "b");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < shared; ++i) edges.emplace_back(p[i], p[i + 1]);
  // Private sides run from p_shared back to p_0.
  auto side = [&](const std::vector<VertexId>& s) {
    edges.emplace_back(p.back(), s.front());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) edges.emplace_back(s[i], s[i + 1]);
    edges.emplace_back(s.back(), p.front());
  };
  side(a);
  side(b);
  if (shared >= 2) {
    // Zigzag rungs triangulate the outer cycle p_s a.. p_0 ..b p_s.
    std::size_t i = 0;
    std::size_t j = 0;
    edges.emplace_back(a[0], b[0]);
    while (i + 1 < a.size() || j + 1 < b.size()) {
      if (i + 1 < a.size() && (j + 1 == b.size() || i <= j)) {
        ++i;
      } else {
        ++j;
      }
      edges.emplace_back(a[i], b[j]);
    }
  }
  return Graph::from_edges(edges);
}

Graph with_triangle_ears(const Graph& g, const std::vector<VertexId>& cycle) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& u = cycle[i];
    const auto& v = cycle[(i + 1) % cycle.size()];
    VertexId t("t_" + u.str() + "_" + v.str());
    edges.emplace_back(t, u);
    edges.emplace_back(t, v);
  }
  return Graph(g.vertices(), edges);
}

std::vector<Named> named_families() {
  std::vector<Named> out;
  auto keep = [&](std::string name, Graph g, std::size_t lo, std::size_t hi) {
    auto h = enumerate_holes(g, 3);
    if (!h.capped && h.holes.size() >= lo && h.holes.size() <= hi) {
      out.push_back({std::move(name), std::move(g)});
    }
  };
  for (std::size_t m = 4; m <= 8; ++m) {
    keep("cycle" + std::to_string(m), cycle_graph(m), 1, 1);
    keep("wheel" + std::to_string(m), wheel_graph(m), 1, 1);
    Graph c = cycle_graph(m);
    keep("eared_cycle" + std::to_string(m), with_triangle_ears(c, c.vertices()), 1, 1);
  }
  for (std::size_t m1 = 4; m1 <= 7; ++m1) {
    for (std::size_t m2 = 4; m2 <= m1; ++m2) {
      for (std::size_t s = 1; s + 2 <= m2; ++s) {
        std::string tag = std::to_string(m1) + "_" + std::to_string(m2) + "_" + std::to_string(s);
        Graph fused = fused_cycles(m1, m2, s);
        keep("fused" + tag, fused, 2, 2);
        auto holes = enumerate_holes(fused, 3);
        if (holes.capped || holes.holes.size() != 2) continue;
        // Ears on the longer hole (first in canonical order on ties).
        const Hole* longer = &holes.holes[0];
        if (holes.holes[1].length() > longer->length()) longer = &holes.holes[1];
        keep("eared_fused" + tag, with_triangle_ears(fused, longer->cycle()), 2, 2);
      }
    }
  }
  return out;
}

std::vector<Graph> sample_with_holes(std::size_t count, std::size_t n_min, std::size_t n_max,
                                     Rational p, std::size_t min_holes, std::size_t max_holes,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  const std::size_t span = n_max - n_min + 1;
  while (out.size() < count) {
    std::size_t n = n_min + rng() % span;
    Graph g = random_graph(n, p, rng);
    auto h = enumerate_holes(g, max_holes);
    if (!h.capped && h.holes.size() >= min_holes) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace holecert::corpus
