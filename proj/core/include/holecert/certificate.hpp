#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holecert/graph.hpp"

namespace holecert {

enum class DerivationKind { Chordal, EdgeSplit, CutSplit, ExactFallback, Compose };

std::string_view kind_name(DerivationKind kind);
std::optional<DerivationKind> parse_kind(std::string_view name);

// One step of the decomposition that produced a certificate.
//
//   Chordal        leaf; prey = the fresh vertex (empty for edgeless pieces)
//   EdgeSplit      edge = removed hole edge; one Compose child
//   CutSplit       cut = X_1 + {v_j, v_j+1}, component = Q, j, ear, shared_len;
//                  one Compose child
//   Compose        shared = V(G_1) & V(G_2), prey = the chordal side's fresh
//                  vertex; children = [G_1 derivation, G_2 chordal leaf]
//   ExactFallback  leaf; prey = isolated vertices of the solver witness
struct DerivationNode {
  DerivationKind kind = DerivationKind::Chordal;
  std::size_t k = 0;  // isolated vertices added by this subtree
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<Edge> edge;
  std::vector<VertexId> hole;
  std::vector<VertexId> cut;
  std::vector<VertexId> component;
  std::vector<VertexId> shared;
  std::optional<std::size_t> j;
  std::optional<VertexId> ear;
  std::optional<std::size_t> shared_len;
  std::vector<VertexId> prey;
  std::vector<DerivationNode> children;

  bool operator==(const DerivationNode&) const = default;
};

// Proof that k(target) <= k: target plus `isolated` is the competition
// graph of the acyclic `digraph`.
struct Certificate {
  Graph target;
  std::size_t k = 0;
  Digraph digraph;
  VertexSet isolated;
  DerivationNode derivation;
  bool fallback_used = false;
};

// File layout:
//   certificate k=<k> fallback=<0|1>
//   <digraph in Digraph text format>
//   isolated <id> ...
//   derivation
//   <one node per line, two spaces of indent per depth>
std::string serialize_certificate(const Certificate& cert);
std::string serialize_derivation(const DerivationNode& root);

// The file does not carry the target graph; it is taken from the caller.
Certificate parse_certificate(std::string_view text, Graph target = {});

}  // namespace holecert
