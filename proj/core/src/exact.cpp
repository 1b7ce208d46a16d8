#include "holecert/exact.hpp"

#include <bit>
#include <bitset>
#include <deque>
#include <unordered_set>
#include <vector>

#include "holecert/error.hpp"

namespace holecert {

namespace {

using Mask = std::uint32_t;
using EdgeBits = std::bitset<kExactMaxVertices*(kExactMaxVertices - 1) / 2>;

struct State {
  Mask above;
  EdgeBits uncovered;
  std::size_t slots;

  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = std::hash<EdgeBits>{}(s.uncovered);
    h ^= std::hash<std::uint64_t>{}((std::uint64_t{s.above} << 16) | s.slots) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
    return h;
  }
};

class Search {
 public:
  Search(const Graph& g, std::uint64_t node_limit) : g_(g), n_(g.size()), limit_(node_limit) {
    adj_.assign(n_, 0);
    edge_id_.assign(n_ * n_, 0);
    incident_.assign(n_, EdgeBits{});
    std::size_t e = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j : g.neighbors(i)) adj_[i] |= Mask{1} << j;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!g.adjacent(i, j)) continue;
        edge_id_[i * n_ + j] = edge_id_[j * n_ + i] = e;
        incident_[i].set(e);
        incident_[j].set(e);
        all_edges_.set(e);
        ++e;
      }
    }
  }

  // Runs the search with k isolated prey at the bottom.
  bool run(std::size_t k) {
    exhausted_ = false;
    failed_.clear();
    assignments_.clear();
    placed_.clear();
    Mask all = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    return solve(all, all_edges_, k);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  // Prey slots in creation order: k isolated slots, then placed graph vertices.
  // Slot i takes the i-th assigned clique.
  const std::vector<Mask>& assignments() const { return assignments_; }
  const std::vector<std::size_t>& placed() const { return placed_; }

 private:
  EdgeBits clique_edges(Mask clique) const {
    EdgeBits out;
    for (Mask a = clique; a; a &= a - 1) {
      std::size_t i = std::countr_zero(a);
      for (Mask b = clique & adj_[i] & ~((Mask{2} << i) - 1); b; b &= b - 1) {
        out.set(edge_id_[i * n_ + std::countr_zero(b)]);
      }
    }
    return out;
  }

  void maximal_cliques(Mask r, Mask p, Mask x, std::vector<Mask>& out) const {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    Mask px = p | x;
    std::size_t pivot = std::countr_zero(px);
    int best = -1;
    for (Mask m = px; m; m &= m - 1) {
      std::size_t u = std::countr_zero(m);
      int c = std::popcount(p & adj_[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~adj_[pivot]; cand; cand &= cand - 1) {
      std::size_t v = std::countr_zero(cand);
      Mask bit = Mask{1} << v;
      maximal_cliques(r | bit, p & adj_[v], x & adj_[v], out);
      p &= ~bit;
      x |= bit;
    }
  }

  bool solve(Mask above, EdgeBits uncovered, std::size_t slots) {
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return false;
    }
    if (uncovered.none()) return true;

    // Vertices whose edges are all covered can sit at the bottom of what is
    // left; each one becomes a new prey slot.
    std::size_t placed_before = placed_.size();
    for (Mask m = above; m; m &= m - 1) {
      std::size_t v = std::countr_zero(m);
      if ((incident_[v] & uncovered).none()) placed_.push_back(v);
    }
    for (std::size_t i = placed_before; i < placed_.size(); ++i) {
      above &= ~(Mask{1} << placed_[i]);
      ++slots;
    }
    auto undo = [&] { placed_.resize(placed_before); };

    State key{above, uncovered, slots};
    if (slots == 0 || failed_.contains(key)) {
      undo();
      return false;
    }

    std::vector<Mask> cliques;
    maximal_cliques(0, above, 0, cliques);
    std::vector<std::pair<Mask, EdgeBits>> useful;
    std::size_t best_cover = 0;
    for (Mask c : cliques) {
      EdgeBits cov = clique_edges(c) & uncovered;
      if (cov.none()) continue;
      best_cover = std::max(best_cover, cov.count());
      useful.emplace_back(c, cov);
    }
    // Drop cliques whose newly covered edges are a subset of another's.
    std::vector<std::pair<Mask, EdgeBits>> kept;
    for (std::size_t a = 0; a < useful.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < useful.size() && !dominated; ++b) {
        if (a == b) continue;
        const auto& ca = useful[a].second;
        const auto& cb = useful[b].second;
        if ((ca & ~cb).none() && (ca != cb || b < a)) dominated = true;
      }
      if (!dominated) kept.push_back(useful[a]);
    }

    // Prey slots still obtainable: the pending ones plus one per vertex above,
    // except the topmost.
    std::size_t obtainable = slots + (std::popcount(above) > 0 ? std::popcount(above) - 1 : 0);
    std::size_t needed = (uncovered.count() + best_cover - 1) / best_cover;
    if (needed > obtainable) {
      failed_.insert(key);
      undo();
      return false;
    }

    for (const auto& [clique, cov] : kept) {
      assignments_.push_back(clique);
      if (solve(above, uncovered & ~cov, slots - 1)) return true;
      assignments_.pop_back();
      if (exhausted_) break;
    }
    if (!exhausted_) failed_.insert(key);
    undo();
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Mask> adj_;
  std::vector<std::size_t> edge_id_;
  std::vector<EdgeBits> incident_;
  EdgeBits all_edges_;
  std::unordered_set<State, StateHash> failed_;
  std::vector<Mask> assignments_;
  std::vector<std::size_t> placed_;
};

}  // namespace

FeasibleResult feasible(const Graph& g, std::size_t k, const SolveBudget& budget) {
  FeasibleResult result;
  FreshNames names(vertex_set(g));
  std::vector<VertexId> isolated;
  for (std::size_t i = 0; i < k; ++i) isolated.push_back(names.next());
  result.isolated = VertexSet(isolated.begin(), isolated.end());

  if (g.size() > kExactMaxVertices) {
    result.status = Feasibility::BudgetExhausted;
    return result;
  }
  Search search(g, budget.node_limit);
  bool ok = search.run(k);
  result.nodes = search.nodes();
  if (!ok) {
    result.status = search.exhausted() ? Feasibility::BudgetExhausted : Feasibility::Infeasible;
    return result;
  }

  // Slot i is isolated[i] for i < k, then the placed graph vertices in order.
  std::vector<VertexId> prey = isolated;
  for (std::size_t v : search.placed()) prey.push_back(g.id(v));
  std::vector<Arc> arcs;
  const auto& cliques = search.assignments();
  for (std::size_t s = 0; s < cliques.size(); ++s) {
    for (Mask m = cliques[s]; m; m &= m - 1) {
      arcs.push_back({g.id(std::countr_zero(m)), prey[s]});
    }
  }
  std::vector<VertexId> vertices = g.vertices();
  vertices.insert(vertices.end(), isolated.begin(), isolated.end());
  result.witness = Digraph(std::move(vertices), arcs);
  result.status = Feasibility::Feasible;
  return result;
}

ExactResult exact_k(const Graph& g, const SolveBudget& budget) {
  if (g.size() > kExactMaxVertices) {
    throw BudgetExhausted("exact search is limited to " + std::to_string(kExactMaxVertices) +
                          " vertices");
  }
  std::uint64_t used = 0;
  for (std::size_t k = 0; k <= budget.max_k; ++k) {
    SolveBudget left = budget;
    left.node_limit = budget.node_limit - used;
    auto r = feasible(g, k, left);
    used += r.nodes;
    if (r.status == Feasibility::Feasible) {
      return ExactResult{k, std::move(*r.witness), std::move(r.isolated), used};
    }
    if (r.status == Feasibility::BudgetExhausted || used >= budget.node_limit) {
      throw BudgetExhausted("node limit " + std::to_string(budget.node_limit) +
                            " reached while deciding k=" + std::to_string(k));
    }
  }
  throw BudgetExhausted("no witness with k <= " + std::to_string(budget.max_k));
}

}  // namespace holecert
