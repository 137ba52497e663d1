"""Small exhaustive graph catalogues and seeded random instances for checks."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations, product

from chromsym.graphs import WeightedGraph, is_connected


def _relabelled_edges(edges, perm):
    return tuple(sorted((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges))


def connected_multigraphs(n: int, max_edges: int, loops: bool = True) -> list[tuple]:
    """Unweighted connected multigraphs on n vertices, one per isomorphism class."""
    slots = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
    perms = list(permutations(range(n)))
    seen: set = set()
    out = []
    for k in range(max_edges + 1):
        for edges in combinations_with_replacement(slots, k):
            if not is_connected(WeightedGraph((1,) * n, edges)):
                continue
            key = min(_relabelled_edges(edges, perm) for perm in perms)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return out


def weighted_catalogue(max_order: int = 4, max_edges: int = 5, max_weight: int = 3,
                       loops: bool = True) -> list[WeightedGraph]:
    """Connected weighted multigraphs up to isomorphism, within the given bounds."""
    out = []
    for n in range(1, max_order + 1):
        perms = list(permutations(range(n)))
        for edges in connected_multigraphs(n, max_edges, loops):
            autos = [perm for perm in perms if _relabelled_edges(edges, perm) == edges]
            seen: set = set()
            for weights in product(range(1, max_weight + 1), repeat=n):
                key = min(tuple(weights[perm.index(v)] for v in range(n)) for perm in autos)
                if key not in seen:
                    seen.add(key)
                    out.append(WeightedGraph(key, edges))
    return out


def random_graph(rng: random.Random, order: int, extra_edges: int, max_weight: int = 3,
                 loop_prob: float = 0.0, connected: bool = True) -> WeightedGraph:
    """Random spanning tree (when ``connected``) plus ``extra_edges`` random edges.

    Extra edges may repeat existing ones; each is a loop with probability
    ``loop_prob``.
    """
    edges = []
    if connected:
        for v in range(1, order):
            edges.append((rng.randrange(v), v))
    for _ in range(extra_edges):
        i = rng.randrange(order)
        if rng.random() < loop_prob or order == 1:
            edges.append((i, i))
        else:
            j = rng.choice([u for u in range(order) if u != i])
            edges.append((min(i, j), max(i, j)))
    perm = list(range(order))
    rng.shuffle(perm)
    weights = tuple(rng.randint(1, max_weight) for _ in range(order))
    return WeightedGraph(weights, tuple((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges))


def random_simple_graph(rng: random.Random, order: int, edge_prob: float, max_weight: int = 3) -> WeightedGraph:
    edges = tuple((i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < edge_prob)
    return WeightedGraph(tuple(rng.randint(1, max_weight) for _ in range(order)), edges)
