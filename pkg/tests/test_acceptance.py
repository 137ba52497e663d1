"""Acceptance gate: thirteen exact criteria, each with a wall-clock budget.

Run through pytest (one PASS/FAIL line per criterion is printed in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass
from typing import Callable

import pytest

from chromsym import bases as B
from chromsym import chromatic as X
from chromsym import compositions as C
from chromsym import graphs as G
from chromsym.catalogue import random_graph, weighted_catalogue
from chromsym.config import CheckConfig
from chromsym.symfunc import monomial_oracle, omega, p, ribbon_to_p

CFG = CheckConfig()


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget: float  # seconds
    check: Callable[[], str]


_CATALOGUE: list = []


def catalogue() -> list[G.WeightedGraph]:
    if not _CATALOGUE:
        c = CFG.catalogue
        _CATALOGUE.extend(weighted_catalogue(c.max_order, c.max_edges, c.max_weight, c.loops))
    return _CATALOGUE


# --- criteria -----------------------------------------------------------------

def c01_example_matrix() -> str:
    expected = [
        [1, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0],
        [-1, 0, 1, 0, 0],
        [1, -1, -1, 1, 0],
        [-1, 2, 1, -3, 1],
    ]
    m = B.family_matrix(B.wpath_table(), 4)
    assert m.order == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert m.as_lists() == expected
    return "5x5 matrix matches entry for entry"


def c02_weighted_path_pair() -> str:
    a, b = (1, 2, 1, 3, 2), (1, 3, 2, 1, 2)
    assert B.weighted_path_to_p(a) == B.weighted_path_to_p(b)
    assert X.xfn(G.weighted_path(a)) == X.xfn(G.weighted_path(b))
    cls = C.equivalence_class(a)
    assert len(cls) == 4
    assert C.path_class_count(a) == 2
    # independent count: weighted paths up to reversal with the same X
    target = B.weighted_path_to_p(a)
    hits = {min(c, C.reversal(c)) for c in C.compositions_of(9)
            if len(c) == 5 and B.weighted_path_to_p(c) == target}
    assert len(hits) == 2
    return f"class size {len(cls)}, {len(hits)} paths up to isomorphism"


def c03_tree_pair() -> str:
    g = G.weighted_path((1, 2, 1))
    t1, t2 = G.compose_graph((1, 2), g, 0, 1), G.compose_graph((2, 1), g, 0, 1)
    assert t1.order == t2.order == 8 and len(t1.edges) == len(t2.edges) == 7
    assert G.is_connected(t1) and G.is_connected(t2)
    assert X.xfn(t1) == X.xfn(t2)
    assert not G.is_isomorphic(t1, t2)
    return "equal X, not isomorphic"


def c04_classification() -> str:
    pairs = 0
    for n in range(1, CFG.classify_max_size + 1):
        cs = C.compositions_of(n)
        values = {a: B.weighted_path_to_p(a) for a in cs}
        for a in cs:
            for b in cs:
                assert (values[a] == values[b]) == C.equivalent(a, b), (a, b)
                pairs += 1
    return f"{pairs} pairs, zero mismatches"


def _random_instances(cfg) -> list[G.WeightedGraph]:
    rng = random.Random(cfg.seed)
    return [
        random_graph(rng, rng.choice(cfg.orders), rng.randint(*cfg.extra_edges),
                     cfg.max_weight, cfg.loop_prob, connected=True)
        for _ in range(cfg.count)
    ]


def c05_three_way() -> str:
    graphs = catalogue() + _random_instances(CFG.random_graphs)
    for g in graphs:
        a = X.x_edge_subsets(g)
        assert a == X.x_deletion_contraction(g) == X.x_mobius(g), g
    return f"{len(catalogue())} catalogue + {CFG.random_graphs.count} random graphs"


def c06_colouring_oracle() -> str:
    small = [g for g in catalogue() if g.total_weight <= CFG.oracle_max_weight]
    for g in small:
        f = X.xfn(g)
        for k in CFG.oracle_ks:
            assert monomial_oracle(f, k) == X.x_oracle_colourings(g, k), (g, k)
    return f"{len(small)} graphs x k in {list(CFG.oracle_ks)}"


def _random_cycle_host(rng: random.Random):
    length = rng.randint(3, 6)
    order = rng.randint(length, CFG.kdeletion_max_order)
    verts = rng.sample(range(order), length)
    cycle = [tuple(sorted((verts[i], verts[(i + 1) % length]))) for i in range(length)]
    extra = []
    for _ in range(rng.randint(0, 4)):
        i, j = rng.sample(range(order), 2)
        extra.append((min(i, j), max(i, j)))
    for v in range(order):
        if v not in verts and rng.random() < 0.8:
            extra.append(tuple(sorted((v, rng.choice(verts)))))
    g = G.WeightedGraph(tuple(rng.randint(1, 3) for _ in range(order)), tuple(cycle + extra))
    return g, cycle, rng.choice(cycle)


def c07_k_deletion() -> str:
    rng = random.Random(CFG.random_graphs.seed + 7)
    lengths = []
    for _ in range(CFG.kdeletion_cases):
        g, cycle, eps = _random_cycle_host(rng)
        rep = X.verify_k_deletion(g, cycle, eps)
        assert rep.ok and rep.lhs.is_zero(), (g, cycle, eps)
        lengths.append(len(cycle))
    return f"{len(lengths)} cases, cycle lengths {sorted(set(lengths))}"


def _random_expansion(rng: random.Random):
    coarse_order = rng.randint(1, 3)
    splits = []
    for _ in range(coarse_order):
        parts = rng.randint(1, 2 if coarse_order == 3 else 3)
        splits.append(tuple(rng.randint(1, 3) for _ in range(parts)))
    blocks, v = [], 0
    for s in splits:
        blocks.append(list(range(v, v + len(s))))
        v += len(s)
    fine_weights = tuple(w for s in splits for w in s)
    coarse_weights = tuple(sum(s) for s in splits)
    coarse_edges, fine_edges = [], []
    for u in range(coarse_order):
        if rng.random() < 0.1:
            coarse_edges.append((u, u))
            fine_edges.append(tuple(sorted(rng.choices(blocks[u], k=2))))
        for w in range(u + 1, coarse_order):
            if rng.random() < 0.6:
                coarse_edges.append((u, w))
                cross = [(a, b) for a in blocks[u] for b in blocks[w]]
                fine_edges.extend(rng.sample(cross, rng.randint(1, min(2, len(cross)))))
    eprime = []
    for blk in blocks:
        for i in range(1, len(blk)):
            eprime.append((rng.choice(blk[:i]), blk[i]))
        if len(blk) > 1 and rng.random() < 0.5:
            eprime.append(tuple(sorted(rng.sample(blk, 2))))
    coarse = G.WeightedGraph(coarse_weights, tuple(coarse_edges))
    fine = G.WeightedGraph(fine_weights, tuple(fine_edges))
    return coarse, fine, eprime


def c08_inclusion_exclusion() -> str:
    g = G.WeightedGraph((3, 5), ((0, 1),))
    h = G.WeightedGraph((3, 2, 3), ((0, 1), (0, 2)))
    assert X.verify_inclusion_exclusion(g, h, [(1, 2), (1, 2)]).ok
    rng = random.Random(CFG.random_graphs.seed + 8)
    sizes = []
    for _ in range(CFG.incexc_cases):
        coarse, fine, eprime = _random_expansion(rng)
        assert X.verify_inclusion_exclusion(coarse, fine, eprime).ok, (coarse, fine, eprime)
        sizes.append(fine.order)
    return f"worked example + {len(sizes)} random triples (fine orders {min(sizes)}..{max(sizes)})"


def c09_reciprocity() -> str:
    n = CFG.reciprocity_degree
    for fam in (B.paths_family(), B.stars_family()):
        assert B.reciprocity_check(fam, n), fam.name
    count = 0
    for m in range(1, n + 1):
        for lam in C.partitions_of(m):
            assert B.back_substitute(B.p_in_path_basis(lam), B.path_to_p) == p(lam)
            assert B.back_substitute(B.p_in_star_basis(lam), B.star_to_p) == p(lam)
            count += 1
    return f"involution through degree {n}; {count} partitions back-substituted"


def c10_neatness() -> str:
    n = CFG.neat_degree
    assert B.is_neat(B.paths_family(), n)
    assert B.is_neat(B.stars_family(), n)
    assert B.is_neat(B.mixed_family(), 4)
    res = B.is_neat(B.mixed_family(), 5)
    assert not res and res.degree == 5 and res.removed
    return f"paths and stars neat through {n}; mixed fails at 5 removing {list(res.removed)}"


def c11_ribbons() -> str:
    lhs = ribbon_to_p((2, 1, 3)) + ribbon_to_p((3, 3))
    rhs = ribbon_to_p((2, 3, 1)) + ribbon_to_p((1, 5))
    assert lhs == rhs
    count = 0
    for n in range(1, CFG.omega_max_size + 1):
        for alpha in C.compositions_of(n):
            assert omega(ribbon_to_p(alpha)) == ribbon_to_p(C.complement(alpha)), alpha
            count += 1
    return f"relation holds; omega checked on {count} compositions"


def c12_composed_graphs() -> str:
    g = G.weighted_path((1, 2, 1))
    assert X.xfn(G.compose_graph((1, 2), g, 0, 1)) == X.xfn(G.compose_graph((2, 1), g, 0, 1))
    rng = random.Random(CFG.random_graphs.seed + 12)
    shapes = [((0, 1), (1, 2)), ((0, 1), (0, 2), (1, 2))]
    done = 0
    while done < CFG.composed_pairs:
        n = rng.randint(2, 4)
        a, b = rng.sample(C.compositions_of(n), 2)
        if C.equivalent(a, b):
            continue
        h = G.WeightedGraph(tuple(rng.randint(1, 3) for _ in range(3)), rng.choice(shapes))
        va, vz = rng.randrange(3), rng.randrange(3)
        xa = X.xfn(G.compose_graph(a, h, va, vz))
        xb = X.xfn(G.compose_graph(b, h, va, vz))
        assert xa != xb, (a, b, h, va, vz)
        assert xa == B.graph_ribbon_image(a, h, va, vz)
        done += 1
    return f"example pair equal; {done} non-equivalent pairs differ"


def c13_chromatic_polynomial() -> str:
    for g in catalogue():
        for k in CFG.chromatic_ks:
            assert X.chromatic_polynomial(g, k) == X.count_proper_colourings(g, k), (g, k)
    return f"{len(catalogue())} graphs x k in {list(CFG.chromatic_ks)}"


CRITERIA = [
    Criterion(1, "weighted-path table matrix, degree 4", 1.0, c01_example_matrix),
    Criterion(2, "weighted paths (1,2,1,3,2) ~ (1,3,2,1,2), 2 paths", 1.0, c02_weighted_path_pair),
    Criterion(3, "8-vertex tree pair: equal X, nonisomorphic", 5.0, c03_tree_pair),
    Criterion(4, "equivalence <=> equal weighted-path X, sizes <= 8", 300.0, c04_classification),
    Criterion(5, "three X algorithms agree on catalogue + random", 300.0, c05_three_way),
    Criterion(6, "monomial expansion matches colourings, k <= 3", 120.0, c06_colouring_oracle),
    Criterion(7, "k-deletion sums vanish, 50 random cycles", 300.0, c07_k_deletion),
    Criterion(8, "inclusion-exclusion over expansions", 300.0, c08_inclusion_exclusion),
    Criterion(9, "chromatic reciprocity and back-substitution, degree <= 8", 300.0, c09_reciprocity),
    Criterion(10, "neatness of paths/stars; mixed family fails at 5", 60.0, c10_neatness),
    Criterion(11, "ribbon relation and omega on ribbons", 300.0, c11_ribbons),
    Criterion(12, "composed graphs: equal iff equivalent", 300.0, c12_composed_graphs),
    Criterion(13, "chromatic polynomial vs colouring counts, k <= 4", 300.0, c13_chromatic_polynomial),
]


def evaluate(crit: Criterion) -> tuple[bool, str, float]:
    start = time.perf_counter()
    try:
        detail = crit.check()
        ok = True
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    elapsed = time.perf_counter() - start
    if ok and elapsed > crit.budget:
        ok, detail = False, f"over budget ({elapsed:.2f}s > {crit.budget:.0f}s)"
    return ok, detail, elapsed


def format_line(crit: Criterion, ok: bool, detail: str, elapsed: float) -> str:
    tag = "PASS" if ok else "FAIL"
    return f"{tag}  C{crit.number:02d}  {crit.title:<58} {elapsed:7.2f}s  {detail}"


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"C{c.number:02d}" for c in CRITERIA])
def test_criterion(crit, record_property):
    ok, detail, elapsed = evaluate(crit)
    record_property("acceptance_line", format_line(crit, ok, detail, elapsed))
    assert ok, detail


def main() -> int:
    failures = 0
    for crit in CRITERIA:
        ok, detail, elapsed = evaluate(crit)
        failures += not ok
        print(format_line(crit, ok, detail, elapsed), flush=True)
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
