#include "holecert/verifier.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace holecert::verify {

Graph competition_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (std::size_t prey = 0; prey < d.size(); ++prey) {
    const auto& preds = d.in_neighbors(prey);
    for (std::size_t a = 0; a < preds.size(); ++a) {
      for (std::size_t b = a + 1; b < preds.size(); ++b) {
        edges.emplace_back(d.id(preds[a]), d.id(preds[b]));
      }
    }
  }
  return Graph(d.vertices(), edges);
}

std::optional<std::vector<VertexId>> topological_order(const Digraph& d) {
  std::vector<std::size_t> indeg(d.size());
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < d.size(); ++v) {
    indeg[v] = d.in_neighbors(v).size();
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(d.id(v));
    for (std::size_t w : d.out_neighbors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != d.size()) return std::nullopt;
  return order;
}

std::vector<VertexId> find_cycle(const Digraph& d) {
  enum Color : unsigned char { kWhite, kGrey, kBlack };
  std::vector<Color> color(d.size(), kWhite);
  std::vector<std::size_t> stack;
  std::vector<VertexId> cycle;

  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    color[v] = kGrey;
    stack.push_back(v);
    for (std::size_t w : d.out_neighbors(v)) {
      if (color[w] == kGrey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle.push_back(d.id(*it));
        return true;
      }
      if (color[w] == kWhite && dfs(w)) return true;
    }
    stack.pop_back();
    color[v] = kBlack;
    return false;
  };
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (color[v] == kWhite && dfs(v)) break;
  }
  return cycle;
}

Verdict verify_witness(const Graph& g, const Digraph& d, const VertexSet& isolated,
                       std::size_t k) {
  Verdict verdict;
  std::ostringstream why;

  if (isolated.size() != k) {
    why << "declared k=" << k << " but " << isolated.size() << " isolated vertices listed";
    verdict.failed_clause = 1;
    verdict.diagnostic = why.str();
    return verdict;
  }
  for (const auto& v : isolated) {
    if (g.contains(v)) {
      why << "isolated vertex " << v << " is a vertex of the graph";
      verdict.failed_clause = 1;
      verdict.diagnostic = why.str();
      return verdict;
    }
  }
  VertexSet expected(g.vertices().begin(), g.vertices().end());
  expected.insert(isolated.begin(), isolated.end());
  VertexSet actual(d.vertices().begin(), d.vertices().end());
  if (expected != actual) {
    std::vector<VertexId> missing;
    std::vector<VertexId> extra;
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                        std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    if (!missing.empty()) {
      why << "digraph lacks vertex " << missing.front();
    } else {
      why << "digraph has unexpected vertex " << extra.front();
    }
    verdict.failed_clause = 1;
    verdict.diagnostic = why.str();
    return verdict;
  }

  if (!topological_order(d)) {
    auto cycle = find_cycle(d);
    why << "digraph has a cycle:";
    for (const auto& v : cycle) why << ' ' << v;
    verdict.failed_clause = 2;
    verdict.diagnostic = why.str();
    return verdict;
  }

  Graph produced = competition_graph(d);
  Graph wanted = add_vertices(g, isolated);
  if (!(produced == wanted)) {
    auto have = produced.edges();
    auto want = wanted.edges();
    std::vector<Edge> extra;
    std::vector<Edge> missing;
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                        std::back_inserter(extra));
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                        std::back_inserter(missing));
    if (!extra.empty()) {
      why << "competition graph has extra edge " << extra.front();
    } else {
      why << "competition graph is missing edge " << missing.front();
    }
    verdict.failed_clause = 3;
    verdict.diagnostic = why.str();
    return verdict;
  }

  verdict.accepted = true;
  return verdict;
}

Verdict verify_certificate(const Graph& g, const Certificate& cert) {
  return verify_witness(g, cert.digraph, cert.isolated, cert.k);
}

}  // namespace holecert::verify
