"""Chromatic bases of Sym built from graph families.

Two kinds of family are supported:

* ``nifty``: one connected simple weighted graph per total weight n; the
  basis element for a partition is the disjoint union of its parts' members.
* ``table``: an arbitrary simple labelled graph ``H_lambda`` on ``l(lambda)``
  vertices per partition, weighted by ``lambda`` in order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Mapping, Sequence

from chromsym.chromatic import x_deletion_contraction
from chromsym.compositions import (
    Composition,
    Partition,
    coarsenings,
    complement,
    compositions_of,
    contained_in,
    partition_key,
    partitions_of,
    refinements,
    underlying_partition,
)
from chromsym.errors import DomainError, InvariantViolation, PreconditionError, ResourceError
from chromsym.graphs import (
    WeightedGraph,
    compose_graph,
    connected_components,
    delete_edges,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    path,
    star,
    weighted_path,
)
from chromsym.linalg import determinant, is_lower_triangular, transpose
from chromsym.symfunc import SymFunc, p, ribbon_to_h, substitute_p

NEAT_MAX_EDGES = 20


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphFamily:
    name: str
    kind: str  # "nifty" or "table"
    generator: Callable

    def member(self, n: int) -> WeightedGraph:
        if self.kind != "nifty":
            raise DomainError(f"family {self.name!r} has no single members")
        g = self.generator(n)
        if g is None:
            raise DomainError(f"family {self.name!r} is not defined at n={n}")
        return g

    def graph(self, lam: Partition) -> WeightedGraph:
        if self.kind == "table":
            g = self.generator(tuple(lam))
            if g is None:
                raise DomainError(f"table {self.name!r} has no graph for {lam}")
            return g
        if not lam:
            return WeightedGraph((), ())
        out = self.member(lam[0])
        for part in lam[1:]:
            out = disjoint_union(out, self.member(part))
        return out

    def x(self, lam: Partition) -> SymFunc:
        return x_deletion_contraction(self.graph(lam))


def paths_family() -> GraphFamily:
    return GraphFamily("paths", "nifty", path)


def stars_family() -> GraphFamily:
    return GraphFamily("stars", "nifty", star)


def wpath_table() -> GraphFamily:
    """H_lambda = P_l(lambda) weighted by lambda."""
    return GraphFamily("wpath", "table", weighted_path)


def _check_nifty_member(g: WeightedGraph, n: int) -> None:
    if g.total_weight != n:
        raise DomainError(f"member {n} has total weight {g.total_weight}")
    if not g.is_simple():
        raise DomainError(f"member {n} is not simple")
    if not is_connected(g):
        raise DomainError(f"member {n} is not connected")


def nifty_family(members: Sequence[WeightedGraph], name: str = "custom") -> GraphFamily:
    """Family whose n-th member is ``members[n-1]``; validated eagerly."""
    members = list(members)
    for n, g in enumerate(members, start=1):
        _check_nifty_member(g, n)
    return GraphFamily(name, "nifty", lambda n: members[n - 1] if 1 <= n <= len(members) else None)


def mixed_family() -> GraphFamily:
    """P1, P2, P3, S4, P5: nifty but not neat."""
    return nifty_family([path(1), path(2), path(3), star(4), path(5)], name="mixed")


def table_family(graphs: Mapping[Partition, WeightedGraph], name: str = "table") -> GraphFamily:
    table: dict[Partition, WeightedGraph] = {}
    for lam, g in graphs.items():
        lam = tuple(lam)
        if g.weights != lam:
            raise DomainError(f"H_{lam} must be weighted by {lam} in order, got {g.weights}")
        if not g.is_simple():
            raise DomainError(f"H_{lam} is not simple")
        table[lam] = g
    return GraphFamily(name, "table", table.get)


def family_from_json(data: Mapping, name: str = "table") -> GraphFamily:
    """Load ``{"kind": "nifty"|"table", "graphs": [...]}``.

    Nifty entries are graph objects listed by total weight 1, 2, ...; table
    entries carry ``partition`` and ``edges`` (weights default to the partition).
    """
    kind = data.get("kind")
    graphs = data.get("graphs")
    if kind not in ("nifty", "table") or not isinstance(graphs, list):
        raise DomainError("family JSON needs kind 'nifty' or 'table' and a list 'graphs'")
    if kind == "nifty":
        return nifty_family([WeightedGraph.from_json(g) for g in graphs], name=name)
    table = {}
    for entry in graphs:
        lam = tuple(entry["partition"])
        weights = tuple(entry.get("weights", lam))
        table[lam] = WeightedGraph(weights, tuple(tuple(e) for e in entry.get("edges", [])))
    return table_family(table, name=name)


def load_family(name: str) -> GraphFamily:
    """``paths``, ``stars``, ``wpath``, ``mixed`` or ``table:FILE``."""
    builtin = {"paths": paths_family, "stars": stars_family, "wpath": wpath_table, "mixed": mixed_family}
    if name in builtin:
        return builtin[name]()
    if name.startswith("table:"):
        with open(name[len("table:"):]) as fh:
            return family_from_json(json.load(fh), name=name)
    raise DomainError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# Change-of-basis matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisMatrix:
    degree: int
    order: tuple[Partition, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "order": [list(lam) for lam in self.order],
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    def as_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def family_matrix(fam: GraphFamily, n: int) -> BasisMatrix:
    """Rows: X of each family graph of degree n; columns: p, both in canonical order.

    A table family must come out unit lower triangular.  A nifty family
    comes out upper triangular with a nonzero diagonal, because its
    basis elements carry p_lambda plus terms with more parts.
    """
    order = tuple(partitions_of(n))
    rows = []
    for lam in order:
        x = fam.x(lam)
        if x.degrees() - {n}:
            raise InvariantViolation(f"X for {lam} is not homogeneous of degree {n}")
        rows.append(tuple(x.coefficient(mu) for mu in order))
    mat = [list(r) for r in rows]
    if fam.kind == "table" and not is_lower_triangular(mat, unit=True):
        raise InvariantViolation(f"table family {fam.name!r} is not unit lower triangular in degree {n}")
    if fam.kind == "nifty" and not is_lower_triangular(transpose(mat)):
        raise InvariantViolation(f"nifty family {fam.name!r} is not upper triangular in degree {n}")
    return BasisMatrix(n, order, tuple(rows))


def independence_check(fam: GraphFamily, n: int) -> bool:
    """True when the degree-n family elements form a basis; raises otherwise."""
    m = family_matrix(fam, n)
    if determinant(m.as_lists()) == 0:
        raise InvariantViolation(f"family {fam.name!r} is singular in degree {n}")
    return True


# ---------------------------------------------------------------------------
# Path and star expansions
# ---------------------------------------------------------------------------

def weighted_path_to_p(alpha: Composition) -> SymFunc:
    """Signed sum of p over the coarsenings of ``alpha``."""
    if not alpha:
        raise DomainError("weighted_path_to_p requires a nonempty composition")
    return SymFunc(
        (underlying_partition(beta), (-1) ** (len(alpha) - len(beta))) for beta in coarsenings(tuple(alpha))
    )


def _collect(pairs) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for lam, c in pairs:
        out[lam] = out.get(lam, 0) + c
    return {lam: out[lam] for lam in sorted(out, key=partition_key) if out[lam]}


def weighted_path_in_path_basis(alpha: Composition) -> dict[Partition, int]:
    """Coefficients of the weighted path in the basis X_(P_lambda) of unweighted paths."""
    if not alpha:
        raise DomainError("weighted_path_in_path_basis requires a nonempty composition")
    comp = complement(tuple(alpha))
    return _collect((underlying_partition(beta), (-1) ** (len(comp) - len(beta))) for beta in coarsenings(comp))


def path_to_p(n: int) -> SymFunc:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return SymFunc((underlying_partition(beta), (-1) ** (n - len(beta))) for beta in compositions_of(n))


def star_to_p(n: int) -> SymFunc:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return SymFunc(((r,) + (1,) * (n - r), (-1) ** (r - 1) * comb(n - 1, r - 1)) for r in range(1, n + 1))


def p_in_path_basis(lam: Partition) -> dict[Partition, int]:
    if not lam:
        raise DomainError("p_in_path_basis requires a nonempty partition")
    size = sum(lam)
    return _collect((underlying_partition(a), (-1) ** (size - len(a))) for a in refinements(tuple(lam)))


def p_in_star_basis(lam: Partition) -> dict[Partition, int]:
    if not lam:
        raise DomainError("p_in_star_basis requires a nonempty partition")
    size = sum(lam)
    terms = []
    for a in contained_in(tuple(lam)):
        coef = (-1) ** (sum(a) - len(lam))
        for li, ai in zip(lam, a):
            coef *= comb(li - 1, ai - 1)
        index = underlying_partition(tuple(a) + (1,) * (size - sum(a)))
        terms.append((index, coef))
    return _collect(terms)


def product_to_p(single: Callable[[int], SymFunc], lam: Partition) -> SymFunc:
    out = SymFunc.one()
    for part in lam:
        out = out * single(part)
    return out


def back_substitute(combo: Mapping[Partition, int], single: Callable[[int], SymFunc]) -> SymFunc:
    """Evaluate sum c_lambda X_lambda with X_lambda = prod single(lambda_i)."""
    acc = SymFunc.zero()
    for lam, c in combo.items():
        acc = acc + product_to_p(single, lam).scale(c)
    return acc


# ---------------------------------------------------------------------------
# Neatness and chromatic reciprocity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NeatResult:
    ok: bool
    degree: int | None = None
    removed: tuple[tuple[int, int], ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"neat": True}
        return {"neat": False, "degree": self.degree, "removed": [list(e) for e in self.removed],
                "reason": self.reason}


def is_neat(fam: GraphFamily, n: int) -> NeatResult:
    """Check every edge deletion of members 1..n against the family's unions."""
    if fam.kind != "nifty":
        raise PreconditionError("neatness is defined for nifty families only")
    members = {}
    for m in range(1, n + 1):
        members[m] = fam.member(m)
        _check_nifty_member(members[m], m)
    for m in range(1, n + 1):
        g = members[m]
        if len(g.edges) > NEAT_MAX_EDGES:
            raise ResourceError(f"member {m} has {len(g.edges)} edges; limit is {NEAT_MAX_EDGES}")
        for r in range(len(g.edges) + 1):
            for removed in combinations(g.edges, r):
                h = delete_edges(g, removed)
                for comp in connected_components(h):
                    piece = induced_subgraph(h, comp)
                    if not is_isomorphic(piece, members[piece.total_weight]):
                        return NeatResult(
                            False, m, tuple(removed),
                            f"component on vertices {comp} is not isomorphic to member {piece.total_weight}",
                        )
    return NeatResult(True)


def reciprocity_map(fam: GraphFamily) -> Callable[[SymFunc], SymFunc]:
    """The algebra map p_lambda -> X of the family graph for lambda."""
    cache: dict[int, SymFunc] = {}

    def image(i: int) -> SymFunc:
        if i not in cache:
            cache[i] = fam.x((i,))
        return cache[i]

    return lambda f: substitute_p(f, image)


def reciprocity_check(fam: GraphFamily, n: int) -> bool:
    """phi(X_lambda) == p_lambda for every partition of every m <= n."""
    if not is_neat(fam, n):
        raise PreconditionError(f"family {fam.name!r} is not neat through n={n}")
    phi = reciprocity_map(fam)
    for m in range(1, n + 1):
        for lam in partitions_of(m):
            if phi(fam.x(lam)) != p(lam):
                return False
    return True


# ---------------------------------------------------------------------------
# Composed graphs
# ---------------------------------------------------------------------------

def graph_ribbon_image(alpha: Composition, g: WeightedGraph, a: int, z: int) -> SymFunc:
    """Image of the ribbon r_alpha under h_i -> X((i) o (G, w))."""
    cache: dict[int, SymFunc] = {}

    def gen(i: int) -> SymFunc:
        if i not in cache:
            cache[i] = x_deletion_contraction(compose_graph((i,), g, a, z))
        return cache[i]

    acc = SymFunc.zero()
    for lam, c in ribbon_to_h(tuple(alpha)).items():
        acc = acc + product_to_p(gen, lam).scale(c)
    return acc
