"""Vertex-weighted labelled multigraphs with loops.

Vertices are ``0..N-1`` (so ``v_1`` is index 0).  Edges are a
sorted tuple of pairs ``(i, j)`` with ``i <= j``; a pair repeated ``m`` times
is an ``m``-fold edge and ``(i, i)`` is a loop.  All surgery returns new
graphs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from chromsym.compositions import Composition, complement, composition, set_of
from chromsym.errors import DomainError, PreconditionError, ResourceError

Edge = tuple[int, int]


def _norm(edge: Sequence[int]) -> Edge:
    i, j = edge
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class WeightedGraph:
    weights: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        weights = tuple(self.weights)
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise DomainError(f"vertex weights must be positive integers, got {weights}")
        edges = tuple(sorted(_norm(e) for e in self.edges))
        for i, j in edges:
            if not (0 <= i < len(weights) and 0 <= j < len(weights)):
                raise DomainError(f"edge ({i}, {j}) has an endpoint outside 0..{len(weights) - 1}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", edges)

    @property
    def order(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def has_loop(self) -> bool:
        return any(i == j for i, j in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loop() and len(set(self.edges)) == len(self.edges)

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def degree(self, v: int) -> int:
        return sum((i == v) + (j == v) for i, j in self.edges)

    def __or__(self, other: WeightedGraph) -> WeightedGraph:
        return disjoint_union(self, other)

    def to_json(self) -> dict:
        return {"weights": list(self.weights), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping) -> WeightedGraph:
        try:
            weights = data["weights"]
            edges = data.get("edges", [])
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError(f"graph JSON needs 'weights' and 'edges': {exc}") from None
        if not isinstance(weights, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
            raise DomainError("graph JSON: weights must be a list and edges a list of pairs")
        return cls(tuple(weights), tuple(tuple(e) for e in edges))


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _check_order(n: int, least: int = 1) -> None:
    if n < least:
        raise DomainError(f"graph order must be >= {least}, got {n}")


def null(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    _check_order(n)
    return WeightedGraph(tuple(weights) if weights else (1,) * n, ())


def path(n: int) -> WeightedGraph:
    _check_order(n)
    return WeightedGraph((1,) * n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> WeightedGraph:
    """Star with centre at the last label, as ``v_i v_n`` for i < n."""
    _check_order(n)
    return WeightedGraph((1,) * n, tuple((i, n - 1) for i in range(n - 1)))


def cycle(n: int) -> WeightedGraph:
    _check_order(n, 3)
    return WeightedGraph((1,) * n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def complete(n: int) -> WeightedGraph:
    _check_order(n)
    return WeightedGraph((1,) * n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def with_weights(g: WeightedGraph, weights: Sequence[int]) -> WeightedGraph:
    if len(weights) != g.order:
        raise DomainError(f"need {g.order} weights, got {len(weights)}")
    return WeightedGraph(tuple(weights), g.edges)


def weighted_path(alpha: Composition) -> WeightedGraph:
    alpha = composition(alpha)
    if not alpha:
        raise DomainError("weighted_path requires a nonempty composition")
    return with_weights(path(len(alpha)), alpha)


FAMILIES: dict[str, Callable[[int], WeightedGraph]] = {"paths": path, "stars": star}


def graph_of_composition(family: str | Callable[[int], WeightedGraph], alpha: Composition) -> WeightedGraph:
    """The labelled union ``G_(alpha_1) | ... | G_(alpha_l)``."""
    member = FAMILIES[family] if isinstance(family, str) else family
    alpha = composition(alpha)
    if not alpha:
        raise DomainError("graph_of_composition requires a nonempty composition")
    out = member(alpha[0])
    for part in alpha[1:]:
        out = disjoint_union(out, member(part))
    return out


# ---------------------------------------------------------------------------
# Surgery
# ---------------------------------------------------------------------------

def disjoint_union(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    shift = g.order
    return WeightedGraph(g.weights + h.weights, g.edges + tuple((i + shift, j + shift) for i, j in h.edges))


def add_edges(g: WeightedGraph, edges: Iterable[Sequence[int]]) -> WeightedGraph:
    return WeightedGraph(g.weights, g.edges + tuple(_norm(e) for e in edges))


def delete_edges(g: WeightedGraph, edges: Iterable[Sequence[int]]) -> WeightedGraph:
    remaining = Counter(g.edges)
    for e in map(_norm, edges):
        if remaining[e] <= 0:
            raise DomainError(f"edge {e} is not present (enough times) to delete")
        remaining[e] -= 1
    return WeightedGraph(g.weights, tuple(remaining.elements()))


def contract_edges(g: WeightedGraph, edges: Iterable[Sequence[int]]) -> WeightedGraph:
    """Contract one copy of each listed edge.

    Each merged vertex takes the summed weight and sits at the position of
    its smallest original label; surviving edges inside a merged vertex
    become loops and parallel edges are kept.
    """
    edges = [_norm(e) for e in edges]
    g = delete_edges(g, edges)
    parent = list(range(g.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = sorted({find(v) for v in range(g.order)})
    label = {r: k for k, r in enumerate(roots)}
    new = [label[find(v)] for v in range(g.order)]
    weights = [0] * len(roots)
    for v, w in enumerate(g.weights):
        weights[new[v]] += w
    return WeightedGraph(tuple(weights), tuple((new[i], new[j]) for i, j in g.edges))


def contract_edge(g: WeightedGraph, edge: Sequence[int]) -> WeightedGraph:
    return contract_edges(g, [edge])


def connected_components(g: WeightedGraph) -> list[list[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.order)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    out = []
    for s in range(g.order):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: WeightedGraph) -> bool:
    return g.order > 0 and len(connected_components(g)) == 1


def lambda_of(g: WeightedGraph) -> tuple[int, ...]:
    """Partition of component weight sums."""
    return tuple(sorted((sum(g.weights[v] for v in c) for c in connected_components(g)), reverse=True))


def induced_subgraph(g: WeightedGraph, vertices: Sequence[int]) -> WeightedGraph:
    index = {v: k for k, v in enumerate(vertices)}
    return WeightedGraph(
        tuple(g.weights[v] for v in vertices),
        tuple((index[i], index[j]) for i, j in g.edges if i in index and j in index),
    )


# ---------------------------------------------------------------------------
# Expansions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexBlocking:
    """Consecutive blocks of fine vertices; block k collapses to coarse vertex k."""

    blocks: tuple[tuple[int, ...], ...]

    def block_of(self) -> dict[int, int]:
        return {v: k for k, blk in enumerate(self.blocks) for v in blk}

    def related(self, a: int, b: int) -> bool:
        lookup = self.block_of()
        return lookup[a] == lookup[b]


class ExpansionError(PreconditionError):
    def __init__(self, message: str, clause: str, pair: tuple | None = None):
        super().__init__(message)
        self.clause = clause
        self.pair = pair


def expansion_check(coarse: WeightedGraph, fine: WeightedGraph) -> VertexBlocking:
    """Blocking witnessing ``fine`` as an expansion of ``coarse``; raises ExpansionError."""
    blocks: list[tuple[int, ...]] = []
    v = 0
    for target in coarse.weights:
        acc, blk = 0, []
        while acc < target and v < fine.order:
            acc += fine.weights[v]
            blk.append(v)
            v += 1
        if acc != target or not blk:
            raise ExpansionError(
                f"fine weights {fine.weights} do not refine coarse weights {coarse.weights}",
                clause="refinement",
            )
        blocks.append(tuple(blk))
    if v != fine.order:
        raise ExpansionError(
            f"fine weights {fine.weights} do not refine coarse weights {coarse.weights}",
            clause="refinement",
        )
    blocking = VertexBlocking(tuple(blocks))
    lookup = blocking.block_of()
    covered = {_norm((lookup[a], lookup[b])) for a, b in fine.edges}
    present = set(coarse.edges)
    for u in range(coarse.order):
        for w in range(u, coarse.order):
            if ((u, w) in present) != ((u, w) in covered):
                what = "has" if (u, w) in present else "lacks"
                raise ExpansionError(
                    f"coarse graph {what} edge {(u, w)} but the fine graph "
                    f"{'does not cover' if (u, w) in present else 'covers'} it",
                    clause="edge",
                    pair=(u, w),
                )
    return blocking


# ---------------------------------------------------------------------------
# Composition of a graph by a composition
# ---------------------------------------------------------------------------

def compose_graph(alpha: Composition, g: WeightedGraph, a: int, z: int) -> WeightedGraph:
    """|alpha| copies of g, bridged z_i -- a_(i+1), bridges in set(alpha^c) contracted.

    Copy i occupies labels ``i*N .. i*N+N-1`` before contraction.
    """
    alpha = composition(alpha)
    if not alpha:
        raise DomainError("compose_graph requires a nonempty composition")
    for name, v in (("a", a), ("z", z)):
        if not (0 <= v < g.order):
            raise DomainError(f"vertex {name}={v} outside 0..{g.order - 1}")
    n, size = g.order, sum(alpha)
    out = g
    for _ in range(size - 1):
        out = disjoint_union(out, g)
    bridges = {i: (i - 1) * n + z for i in range(1, size)}
    bridge_edges = [_norm((bridges[i], i * n + a)) for i in range(1, size)]
    out = add_edges(out, bridge_edges)
    return contract_edges(out, [bridge_edges[i - 1] for i in sorted(set_of(complement(alpha)))])


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

ISOMORPHISM_MAX_ORDER = 10


def _adjacency(g: WeightedGraph) -> list[list[int]]:
    m = [[0] * g.order for _ in range(g.order)]
    for i, j in g.edges:
        m[i][j] += 1
        if i != j:
            m[j][i] += 1
    return m


def _invariant(g: WeightedGraph, adj: list[list[int]], v: int) -> tuple:
    nbrs = sorted((g.weights[u], adj[v][u]) for u in range(g.order) if u != v and adj[v][u])
    return (g.weights[v], adj[v][v], tuple(nbrs))


def find_isomorphism(g: WeightedGraph, h: WeightedGraph) -> list[int] | None:
    """A weight- and multiplicity-preserving bijection g -> h, by backtracking."""
    for x in (g, h):
        if x.order > ISOMORPHISM_MAX_ORDER:
            raise ResourceError(f"brute-force isomorphism limited to {ISOMORPHISM_MAX_ORDER} vertices")
    if g.order != h.order or sorted(g.weights) != sorted(h.weights) or len(g.edges) != len(h.edges):
        return None
    ag, ah = _adjacency(g), _adjacency(h)
    inv_g = [_invariant(g, ag, v) for v in range(g.order)]
    inv_h = [_invariant(h, ah, v) for v in range(h.order)]
    if sorted(inv_g) != sorted(inv_h):
        return None
    order = sorted(range(g.order), key=lambda v: (sum(1 for x in inv_g if x == inv_g[v]), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for cand in range(h.order):
            if cand in used or inv_h[cand] != inv_g[v]:
                continue
            if all(ag[u][v] == ah[mapping[u]][cand] for u in mapping):
                mapping[v] = cand
                used.add(cand)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(cand)
        return False

    if not extend(0):
        return None
    return [mapping[v] for v in range(g.order)]


def is_isomorphic(g: WeightedGraph, h: WeightedGraph) -> bool:
    return find_isomorphism(g, h) is not None


def relabel(g: WeightedGraph, perm: Sequence[int]) -> WeightedGraph:
    """Move vertex v to label perm[v]."""
    weights = [0] * g.order
    for v, w in enumerate(g.weights):
        weights[perm[v]] = w
    return WeightedGraph(tuple(weights), tuple((perm[i], perm[j]) for i, j in g.edges))
