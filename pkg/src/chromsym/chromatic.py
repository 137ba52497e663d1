"""Extended chromatic symmetric functions X_(G,w) in the power-sum basis.

Three independent routes are provided and cross-checked by the tests:
signed sum over edge subsets, deletion-contraction, and a Moebius sum over
the lattice of contractions.  Two brute-force colouring oracles sit beside
them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from chromsym.errors import DomainError, PreconditionError, ResourceError
from chromsym.graphs import (
    Edge,
    ExpansionError,
    WeightedGraph,
    _norm,
    add_edges,
    connected_components,
    contract_edge,
    delete_edges,
    expansion_check,
)
from chromsym.symfunc import SymFunc, as_polynomial_in_k, evaluate_all_ones, p

EDGE_SUBSET_MAX_EDGES = 24
MOBIUS_MAX_ORDER = 8
COLOURING_MAX_ORDER = 8
COLOURING_MAX_K = 6
ORACLE_MAX_K = 4


# ---------------------------------------------------------------------------
# Edge-subset expansion
# ---------------------------------------------------------------------------

def x_edge_subsets(g: WeightedGraph) -> SymFunc:
    """sum over S in E(G) of (-1)^|S| p_(component weights of (V, S))."""
    if len(g.edges) > EDGE_SUBSET_MAX_EDGES:
        raise ResourceError(f"edge-subset sum limited to {EDGE_SUBSET_MAX_EDGES} edges, got {len(g.edges)}")
    parent = list(range(g.order))
    size = [1] * g.order
    weight = list(g.weights)
    roots = set(range(g.order))
    counts: Counter = Counter()

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(k: int, sign: int) -> None:
        if k == len(g.edges):
            counts[tuple(sorted((weight[r] for r in roots), reverse=True))] += sign
            return
        walk(k + 1, sign)
        i, j = g.edges[k]
        ri, rj = find(i), find(j)
        if ri == rj:
            walk(k + 1, -sign)
            return
        if size[ri] < size[rj]:
            ri, rj = rj, ri
        parent[rj] = ri
        size[ri] += size[rj]
        weight[ri] += weight[rj]
        roots.discard(rj)
        walk(k + 1, -sign)
        roots.add(rj)
        weight[ri] -= weight[rj]
        size[ri] -= size[rj]
        parent[rj] = rj

    walk(0, 1)
    return SymFunc((lam, c) for lam, c in counts.items() if c)


# ---------------------------------------------------------------------------
# Deletion-contraction
# ---------------------------------------------------------------------------

def _pick_edge(g: WeightedGraph) -> Edge:
    mult = g.multiplicity()
    for e in mult:
        if e[0] == e[1]:
            return e
    return min(mult, key=lambda e: (-mult[e], e))


def x_deletion_contraction(g: WeightedGraph, memo: dict | None = None) -> SymFunc:
    """X(G) = X(G - e) - X(G / e), one edge copy at a time.

    A loop gives zero; an edgeless graph gives p of its weights.  Results are
    memoized per call on the labelled graph itself.
    """
    memo = {} if memo is None else memo

    def rec(h: WeightedGraph) -> SymFunc:
        hit = memo.get(h)
        if hit is not None:
            return hit
        if not h.edges:
            out = p(h.weights)
        elif h.has_loop():
            out = SymFunc.zero()
        else:
            e = _pick_edge(h)
            out = rec(delete_edges(h, [e])) - rec(contract_edge(h, e))
        memo[h] = out
        return out

    return rec(g)


# ---------------------------------------------------------------------------
# Moebius expansion over the lattice of contractions
# ---------------------------------------------------------------------------

def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(labels)
            return
        for b in range(top + 2):
            labels[i] = b
            yield from rec(i + 1, max(top, b))

    labels[0] = 0
    yield from rec(1, 0)


def contraction_lattice(g: WeightedGraph) -> list[tuple[int, ...]]:
    """Connected set partitions of V(G) as block-label tuples (finest first)."""
    if g.order > MOBIUS_MAX_ORDER:
        raise ResourceError(f"contraction lattice limited to {MOBIUS_MAX_ORDER} vertices, got {g.order}")
    adj = [set() for _ in range(g.order)]
    for i, j in g.edges:
        if i != j:
            adj[i].add(j)
            adj[j].add(i)
    out = []
    for labels in _set_partitions(g.order):
        if all(_block_connected(adj, [v for v in range(g.order) if labels[v] == b])
               for b in range(max(labels, default=-1) + 1)):
            out.append(labels)
    out.sort(key=lambda lab: (-(max(lab, default=-1) + 1), lab))
    return out


def _block_connected(adj: list[set[int]], block: list[int]) -> bool:
    members = set(block)
    seen = {block[0]}
    stack = [block[0]]
    while stack:
        v = stack.pop()
        for u in adj[v] & members:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == members


def _refines(sigma: tuple[int, ...], pi: tuple[int, ...]) -> bool:
    seen: dict[int, int] = {}
    for s, t in zip(sigma, pi):
        if seen.setdefault(s, t) != t:
            return False
    return True


def mobius_values(g: WeightedGraph) -> list[tuple[tuple[int, ...], int]]:
    """Pairs (pi, mu(0, pi)) over the lattice of contractions."""
    lattice = contraction_lattice(g)
    mu: list[int] = []
    nblocks = [max(lab, default=-1) + 1 for lab in lattice]
    for k, pi in enumerate(lattice):
        if k == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[j] for j in range(k) if nblocks[j] > nblocks[k] and _refines(lattice[j], pi)))
    return list(zip(lattice, mu))


def partition_type(g: WeightedGraph, labels: Sequence[int]) -> tuple[int, ...]:
    sums: Counter = Counter()
    for v, b in enumerate(labels):
        sums[b] += g.weights[v]
    return tuple(sorted(sums.values(), reverse=True))


def x_mobius(g: WeightedGraph) -> SymFunc:
    """sum over pi in L_G of mu(0, pi) p_type(pi).

    The Moebius sum only sees the simple graph underneath, so a graph with
    a loop (no proper colourings) is answered directly with zero.
    """
    if g.order > MOBIUS_MAX_ORDER:
        raise ResourceError(f"Moebius expansion limited to {MOBIUS_MAX_ORDER} vertices, got {g.order}")
    if g.has_loop():
        return SymFunc.zero()
    acc: Counter = Counter()
    for labels, m in mobius_values(g):
        acc[partition_type(g, labels)] += m
    return SymFunc((lam, c) for lam, c in acc.items() if c)


ALGORITHMS = {
    "subsets": x_edge_subsets,
    "delcon": x_deletion_contraction,
    "mobius": x_mobius,
}


def xfn(g: WeightedGraph, algo: str = "delcon") -> SymFunc:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise DomainError(f"unknown algorithm {algo!r}; choose from {sorted(ALGORITHMS)}") from None
    return fn(g)


# ---------------------------------------------------------------------------
# Colourings
# ---------------------------------------------------------------------------

def _colourings(g: WeightedGraph, k: int):
    for kappa in product(range(k), repeat=g.order):
        if all(kappa[i] != kappa[j] for i, j in g.edges):
            yield kappa


def count_proper_colourings(g: WeightedGraph, k: int) -> int:
    if g.order > COLOURING_MAX_ORDER or k > COLOURING_MAX_K:
        raise ResourceError(
            f"brute-force colouring limited to {COLOURING_MAX_ORDER} vertices and k <= {COLOURING_MAX_K}"
        )
    return sum(1 for _ in _colourings(g, k))


def x_oracle_colourings(g: WeightedGraph, k: int) -> Counter:
    """Monomials of X_(G,w) in x_1..x_k straight from the proper colourings."""
    if g.order > COLOURING_MAX_ORDER or k > ORACLE_MAX_K:
        raise ResourceError(f"colouring oracle limited to {COLOURING_MAX_ORDER} vertices and k <= {ORACLE_MAX_K}")
    out: Counter = Counter()
    for kappa in _colourings(g, k):
        vec = [0] * k
        for v, c in enumerate(kappa):
            vec[c] += g.weights[v]
        out[tuple(vec)] += 1
    return out


def chromatic_polynomial(g: WeightedGraph, k: int, algo: str = "delcon") -> int:
    value = evaluate_all_ones(xfn(g, algo), k)
    assert value.denominator == 1
    return int(value)


def chromatic_poly_coeffs(g: WeightedGraph, algo: str = "delcon") -> list[int]:
    """Coefficients of chi_G(k), constant term first."""
    return [int(c) for c in as_polynomial_in_k(xfn(g, algo))]


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

@dataclass
class Report:
    ok: bool
    lhs: SymFunc
    rhs: SymFunc
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"ok": self.ok, "detail": {**self.detail, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}}


def _signed_subset_sum(edges: list[Edge], term) -> SymFunc:
    acc = SymFunc.zero()
    for r in range(len(edges) + 1):
        for idx in combinations(range(len(edges)), r):
            x = term([edges[i] for i in idx])
            acc = acc + (x if r % 2 == 0 else -x)
    return acc


def verify_inclusion_exclusion(coarse: WeightedGraph, fine: WeightedGraph,
                               eprime: Sequence[Sequence[int]]) -> Report:
    """X(coarse) == sum over S in E' of (-1)^|S| X(fine + S)."""
    blocking = expansion_check(coarse, fine)
    eprime = [_norm(e) for e in eprime]
    for i, j in eprime:
        if not (0 <= i < fine.order and 0 <= j < fine.order):
            raise PreconditionError(f"E' edge {(i, j)} is not on the fine graph's vertices")
    comps = connected_components(WeightedGraph(fine.weights, tuple(eprime)))
    if sorted(map(tuple, comps)) != sorted(blocking.blocks):
        raise ExpansionError(
            f"components of (V(H), E') are {comps}, but the blocking is {list(blocking.blocks)}",
            clause="components",
        )
    lhs = x_edge_subsets(coarse)
    rhs = _signed_subset_sum(eprime, lambda s: x_edge_subsets(add_edges(fine, s)))
    return Report(lhs == rhs, lhs, rhs, {"blocks": [list(b) for b in blocking.blocks]})


def _check_cycle(g: WeightedGraph, cycle_edges: list[Edge], eps: Edge) -> None:
    if not cycle_edges:
        raise DomainError("a cycle needs at least one edge")
    try:
        delete_edges(g, cycle_edges)
    except DomainError:
        raise DomainError(f"cycle edges {cycle_edges} are not a sub-multiset of E(G)") from None
    if eps not in cycle_edges:
        raise DomainError(f"edge {eps} is not on the cycle")
    deg: Counter = Counter()
    for i, j in cycle_edges:
        deg[i] += 1
        deg[j] += 1
    verts = sorted(deg)
    if any(d != 2 for d in deg.values()) or len(cycle_edges) != len(verts):
        raise DomainError(f"edges {cycle_edges} do not form a cycle")
    index = {v: k for k, v in enumerate(verts)}
    sub = WeightedGraph((1,) * len(verts), tuple((index[i], index[j]) for i, j in cycle_edges))
    if len(connected_components(sub)) != 1:
        raise DomainError(f"edges {cycle_edges} do not form a single cycle")


def verify_k_deletion(g: WeightedGraph, cycle_edges: Sequence[Sequence[int]], eps: Sequence[int],
                      algo: str = "delcon") -> Report:
    """sum over S in E(C) - eps of (-1)^|S| X(G - S) vanishes."""
    cycle_edges = [_norm(e) for e in cycle_edges]
    eps = _norm(eps)
    _check_cycle(g, cycle_edges, eps)
    rest = list(cycle_edges)
    rest.remove(eps)
    total = _signed_subset_sum(rest, lambda s: xfn(delete_edges(g, s), algo))
    return Report(total.is_zero(), total, SymFunc.zero(), {"cycle_length": len(cycle_edges)})
