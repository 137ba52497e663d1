import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym import compositions as C
from chromsym import graphs as G
from chromsym.catalogue import random_graph
from chromsym.errors import DomainError, ResourceError

H_EXAMPLE = G.WeightedGraph((3, 2, 3), ((0, 1), (0, 2)))
G_EXAMPLE = G.WeightedGraph((3, 5), ((0, 1),))


@st.composite
def weighted_graphs(draw, max_order=6, max_extra=4, loops=True):
    seed = draw(st.integers(0, 2**32 - 1))
    order = draw(st.integers(1, max_order))
    extra = draw(st.integers(0, max_extra))
    connected = draw(st.booleans())
    return random_graph(random.Random(seed), order, extra, 3, 0.2 if loops else 0.0, connected)


# --- construction -------------------------------------------------------------

def test_families():
    assert G.path(3) == G.WeightedGraph((1, 1, 1), ((0, 1), (1, 2)))
    assert G.weighted_path((3, 2, 1)) == G.WeightedGraph((3, 2, 1), ((0, 1), (1, 2)))
    assert G.star(4).degree(3) == 3
    assert len(G.cycle(5).edges) == 5
    assert len(G.complete(4).edges) == 6
    assert G.null(2, (2, 1)).edges == ()
    with pytest.raises(DomainError):
        G.cycle(2)


def test_graph_of_composition():
    g = G.graph_of_composition("paths", (2, 3, 1))
    assert g.order == 6
    assert set(g.edges) == {(0, 1), (2, 3), (3, 4)}


def test_validation():
    with pytest.raises(DomainError):
        G.WeightedGraph((1, 0))
    with pytest.raises(DomainError):
        G.WeightedGraph((1, 1), ((0, 2),))
    with pytest.raises(DomainError):
        G.WeightedGraph.from_json({"edges": []})
    with pytest.raises(DomainError):
        G.WeightedGraph.from_json({"weights": [1, 1], "edges": [[0, 1, 2]]})


@given(weighted_graphs())
def test_json_round_trip(g):
    assert G.WeightedGraph.from_json(g.to_json()) == g


def test_disjoint_union():
    assert G.null(1) | G.null(1) == G.null(2)
    assert (G.path(2) | G.path(3)).edges == ((0, 1), (2, 3), (3, 4))
    assert G.weighted_path((3,)) | G.weighted_path((1,)) == G.WeightedGraph((3, 1))


def test_add_and_delete_edges():
    tri = G.with_weights(G.cycle(3), (3, 2, 1))
    assert G.delete_edges(tri, [(1, 2)]) == G.WeightedGraph((3, 2, 1), ((0, 1), (0, 2)))
    assert G.delete_edges(tri, tri.edges) == G.null(3, (3, 2, 1))
    doubled = G.add_edges(G.path(2), [(0, 1)])
    assert doubled.multiplicity()[(0, 1)] == 2
    with pytest.raises(DomainError):
        G.delete_edges(G.path(2), [(0, 1), (0, 1)])


def test_contract_examples():
    tri = G.with_weights(G.cycle(3), (3, 2, 1))
    assert G.contract_edge(tri, (1, 2)) == G.WeightedGraph((3, 3), ((0, 1), (0, 1)))
    assert G.contract_edge(G.weighted_path((2, 5)), (0, 1)) == G.WeightedGraph((7,))
    looped = G.WeightedGraph((1, 1), ((0, 0), (0, 0), (0, 1)))
    assert G.contract_edge(looped, (0, 0)) == G.WeightedGraph((1, 1), ((0, 0), (0, 1)))


@given(weighted_graphs(), st.data())
def test_contraction_invariants(g, data):
    if not g.edges:
        return
    e = data.draw(st.sampled_from(g.edges))
    h = G.contract_edge(g, e)
    assert h.total_weight == g.total_weight
    assert len(h.edges) == len(g.edges) - 1
    assert h.order == g.order - (e[0] != e[1])
    assert len(G.connected_components(h)) == len(G.connected_components(g))


def test_components_and_lambda():
    assert G.lambda_of(G.null(3, (2, 2, 1))) == (2, 2, 1)
    assert G.lambda_of(G.path(2) | G.path(3)) == (3, 2)
    assert G.lambda_of(G.weighted_path((1, 4, 2))) == (7,)
    assert G.connected_components(G.path(2) | G.path(1)) == [[0, 1], [2]]


# --- expansions ---------------------------------------------------------------

def test_expansion_example():
    blocking = G.expansion_check(G_EXAMPLE, H_EXAMPLE)
    assert blocking.blocks == ((0,), (1, 2))
    assert blocking.related(1, 2) and not blocking.related(0, 1)
    assert G.expansion_check(G_EXAMPLE, G_EXAMPLE).blocks == ((0,), (1,))
    for keep in ((0, 1), (0, 2)):
        G.expansion_check(G_EXAMPLE, G.WeightedGraph((3, 2, 3), (keep,)))


def test_expansion_failures():
    with pytest.raises(G.ExpansionError) as info:
        G.expansion_check(G_EXAMPLE, G.null(3, (3, 2, 3)))
    assert info.value.clause == "edge" and info.value.pair == (0, 1)
    with pytest.raises(G.ExpansionError) as info:
        G.expansion_check(G_EXAMPLE, G.add_edges(H_EXAMPLE, [(1, 2)]))
    assert info.value.pair == (1, 1)
    with pytest.raises(G.ExpansionError) as info:
        G.expansion_check(G_EXAMPLE, G.WeightedGraph((2, 6), ((0, 1),)))
    assert info.value.clause == "refinement"


def test_blocking_of_coarsening():
    blocking = G.expansion_check(G.null(3, (5, 3, 9)), G.null(5, (1, 4, 3, 7, 2)))
    assert blocking.blocks == ((0, 1), (2,), (3, 4))


# --- composition of a graph -----------------------------------------------------

def test_compose_graph_tree_pair():
    p3 = G.weighted_path((1, 2, 1))
    t1 = G.compose_graph((1, 2), p3, 0, 1)
    t2 = G.compose_graph((2, 1), p3, 0, 1)
    assert t1.order == t2.order == 8
    assert sorted(t1.weights) == sorted(t2.weights) == [1, 1, 1, 1, 1, 2, 2, 3]
    assert len(t1.edges) == 7 and G.is_connected(t1)
    assert not G.is_isomorphic(t1, t2)
    for t in (t1, t2):
        hubs = [v for v in range(8) if t.degree(v) == 3]
        assert len(hubs) == 2
    assert not _hubs_adjacent(t1)
    assert _hubs_adjacent(t2)


def _hubs_adjacent(t):
    hubs = [v for v in range(t.order) if t.degree(v) == 3]
    return (hubs[0], hubs[1]) in t.edges


def test_compose_graph_trivial_cases():
    g = G.weighted_path((1, 2, 1))
    assert G.compose_graph((1,), g, 0, 2) == g
    assert G.compose_graph((2,), G.null(1), 0, 0) == G.WeightedGraph((2,))
    assert G.compose_graph((1, 1), G.null(1), 0, 0) == G.path(2)
    with pytest.raises(DomainError):
        G.compose_graph((1, 2), g, 0, 5)


@settings(max_examples=40)
@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(C.compositions_of(n))),
       st.sampled_from([(0, 1), (0, 2), (1, 1), (2, 0)]))
def test_compose_graph_shape(alpha, az):
    g = G.WeightedGraph((1, 2, 1), ((0, 1), (1, 2)))
    h = G.compose_graph(alpha, g, *az)
    assert h.total_weight == sum(alpha) * g.total_weight
    # every copy survives; contracted bridges each merge two vertices
    assert h.order == sum(alpha) * g.order - (sum(alpha) - len(alpha))
    assert len(h.edges) == sum(alpha) * len(g.edges) + len(alpha) - 1
    assert G.is_connected(h)


# --- isomorphism --------------------------------------------------------------

def test_isomorphism_examples():
    assert G.is_isomorphic(G.weighted_path((1, 2)), G.weighted_path((2, 1)))
    assert not G.is_isomorphic(G.weighted_path((1, 2, 3)), G.weighted_path((2, 1, 3)))
    assert not G.is_isomorphic(G.path(4), G.star(4))
    double = G.WeightedGraph((1, 1), ((0, 1), (0, 1)))
    assert not G.is_isomorphic(double, G.path(2))


@given(weighted_graphs(max_order=7), st.randoms(use_true_random=False))
def test_relabelling_is_an_isomorphism(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = G.relabel(g, perm)
    iso = G.find_isomorphism(g, h)
    assert iso is not None
    assert G.relabel(g, iso) == h
    assert G.is_isomorphic(h, g)


def test_isomorphism_guard():
    with pytest.raises(ResourceError):
        G.is_isomorphic(G.path(11), G.path(11))


def _to_nx(g):
    import networkx as nx

    h = nx.MultiGraph()
    for v, w in enumerate(g.weights):
        h.add_node(v, w=w)
    h.add_edges_from(g.edges)
    return h


def test_isomorphism_agrees_with_networkx():
    import networkx as nx
    from networkx.algorithms.isomorphism import categorical_node_match

    rng = random.Random(11)
    match = categorical_node_match("w", None)
    verdicts = set()
    for _ in range(300):
        order = rng.randint(1, 6)
        extra = rng.randint(0, 3)
        g = random_graph(rng, order, extra, 2, 0.1)
        h = random_graph(rng, order, extra, 2, 0.1)
        ours = G.is_isomorphic(g, h)
        assert ours == nx.is_isomorphic(_to_nx(g), _to_nx(h), node_match=match), (g, h)
        verdicts.add(ours)
    assert verdicts == {True, False}
