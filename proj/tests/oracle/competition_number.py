#!/usr/bin/env python3
"""Brute-force competition numbers for tiny labeled graphs.

Test-only oracle. Tries every total order of the graph vertices with the k
extra isolated vertices at the bottom, and for each prey every clique drawn
from the vertices above it. Shares nothing with the C++ solver.
"""
import itertools
import sys
from functools import lru_cache


def cliques_of(vertices, adj):
    out = []
    vs = sorted(vertices)
    for r in range(2, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            if all(b in adj[a] for a, b in itertools.combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


def feasible(vertices, edges, k):
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    all_edges = frozenset(frozenset(e) for e in edges)
    if not all_edges:
        return True
    for order in itertools.permutations(sorted(vertices)):
        # prey slots bottom-up: k isolated (domain = all), then order[t] with domain order[t+1:]
        domains = [tuple(order)] * k + [order[t + 1:] for t in range(len(order))]

        @lru_cache(maxsize=None)
        def go(slot, uncovered):
            if not uncovered:
                return True
            if slot == len(domains):
                return False
            if go(slot + 1, uncovered):
                return True
            for cl in cliques_of(domains[slot], adj):
                cov = frozenset(frozenset(p) for p in itertools.combinations(cl, 2))
                if cov & uncovered and go(slot + 1, uncovered - cov):
                    return True
            return False

        if go(0, all_edges):
            return True
    return False


def competition_number(vertices, edges):
    k = 0
    while not feasible(vertices, edges, k):
        k += 1
    return k


def parse(text):
    vertices, edges = set(), []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "v":
            vertices.add(parts[1])
        elif parts[0] == "e":
            vertices.update(parts[1:3])
            edges.append((parts[1], parts[2]))
    return vertices, edges


if __name__ == "__main__":
    for path in sys.argv[1:]:
        with open(path) as f:
            v, e = parse(f.read())
        print(f"{path} k={competition_number(v, e)}")
