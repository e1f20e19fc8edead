import math

import networkx as nx
import pytest
from hypothesis import given, settings

from atdiam import generators as gen
from atdiam import oracles
from atdiam.atfree import atfree_all_eccentricities, atfree_diameter, hitter_sets, scan_clique
from atdiam.graph import DisconnectedGraphError, Graph, eccentricities_naive, layers
from atdiam.lexbfs import VertexOrdering, lexbfs
from atdiam.splitov import SetFamily
import support
from test_graph import graphs


def test_examples():
    assert atfree_all_eccentricities(gen.path(5)).ecc == (4, 3, 2, 3, 4)
    assert atfree_all_eccentricities(gen.cycle(5)).ecc == (2,) * 5
    prof = atfree_all_eccentricities(gen.complete(4))
    assert prof.ecc == (1,) * 4 and all(prof.universal)
    assert atfree_diameter(gen.path(5)) == 4
    assert atfree_diameter(gen.complete(7)) == 1


def test_tiny_graphs():
    assert atfree_all_eccentricities(Graph.from_edges(1, [])).ecc == (0,)
    assert atfree_all_eccentricities(gen.path(2)).ecc == (1, 1)
    with pytest.raises(DisconnectedGraphError):
        atfree_all_eccentricities(Graph.from_edges(3, [(0, 1)]))


def test_gadget_diameters():
    # one disjoint pair across the families: distance 3 through the universe clique
    fams = gen.OVFamilies(SetFamily(2, [[0]]), SetFamily(2, [[1]]))
    g = gen.h_abc(fams)
    assert (g.n, sorted(g.edges())) == (4, [(0, 2), (1, 3), (2, 3)])
    assert atfree_diameter(g) == 3 == nx.diameter(nx.Graph(list(g.edges())))
    fams = gen.OVFamilies(SetFamily(2, [[0, 1]]), SetFamily(2, [[0]]))
    assert atfree_diameter(gen.h_abc(fams)) == 2


def _ordering(order):
    return VertexOrdering.from_visit_order(list(reversed(order)))


def test_scan_clique_examples():
    k3 = gen.complete(3)
    assert scan_clique(k3, {0, 1, 2}, lexbfs(k3, 0)) == {0, 1, 2}
    p3 = gen.path(3)
    # 0 comes first in the numbering, so 2 is dropped at its turn
    assert scan_clique(p3, {0, 2}, _ordering([0, 1, 2])) == {0}
    c5 = gen.cycle(5)
    assert scan_clique(c5, layers(c5, 0)[1], _ordering([1, 4, 0, 2, 3])) == {1}


def test_hitter_invariants_and_threads(monkeypatch):
    for g in support.atfree_corpus(60, 4, 80, seed=21):
        hit = hitter_sets(g)
        lay = layers(g, hit.source)
        d = lay.d
        assert hit.source in hit.A and hit.A <= lay[1] | {hit.source}
        assert hit.B <= lay[d - 1] and hit.C <= lay[d]
        bound = 1 + math.sqrt(2 * g.m)
        for S in (hit.A, hit.B, hit.C):
            assert all(g.has_edge(a, b) for a in S for b in S if a != b)
            assert len(S) <= bound
        assert hit.sigma.start == lexbfs(g, 0).last and hit.sigma.last == hit.source
        assert hit.tau.start == hit.source
    g = support.atfree_corpus(60, 4, 80, seed=21)[-1]
    serial = atfree_all_eccentricities(g)
    monkeypatch.setenv("ATDIAM_THREADS", "4")
    assert atfree_all_eccentricities(g).ecc == serial.ecc


def test_exact_on_atfree_corpus():
    for g in support.atfree_corpus(150, 3, 90, seed=22):
        prof = atfree_all_eccentricities(g)
        assert list(prof.ecc) == eccentricities_naive(g)
        assert prof.diameter == max(prof.ecc)
        for w in range(g.n):
            assert (prof.ecc[w] == 1) == prof.universal[w]


@settings(max_examples=300, deadline=None)
@given(graphs(n_max=14, connected=True))
def test_lower_bounds_on_any_connected_graph(g):
    prof = atfree_all_eccentricities(g)
    truth = eccentricities_naive(g)
    for w in range(g.n):
        assert prof.ecc[w] <= truth[w]
    if g.n >= 2:
        assert all(e >= 1 for e in prof.ecc)


@settings(max_examples=200, deadline=None)
@given(graphs(n_max=11, connected=True))
def test_exact_whenever_oracle_says_atfree(g):
    if oracles.is_at_free(g).at_free:
        assert list(atfree_all_eccentricities(g).ecc) == eccentricities_naive(g)


@pytest.mark.parametrize("check", [
    support.dominating_prefix_violations,
    support.lower_neighbourhood_violations,
    support.layer_order_violations,
    support.far_layer_violations,
])
def test_sweep_properties(check):
    for g in support.atfree_corpus(80, 4, 35, seed=23):
        assert check(g) == []


def test_near_pair_ecc_with_any_dominating_pair():
    # holds for every graph once (u, v) is dominating; search such pairs on small random graphs
    checked = 0
    for seed in range(120):
        h = nx.gnp_random_graph(9, 0.35, seed=seed)
        if not nx.is_connected(h):
            continue
        g = Graph.from_edges(9, h.edges())
        comps = oracles.avoid_components(g)
        for u in range(g.n):
            for v in range(u, g.n):
                if oracles.is_dominating_pair(g, u, v, comps):
                    assert support.near_pair_ecc_violations(g, u, v) == []
                    checked += 1
    assert checked > 100


def test_property_checkers_detect_violations():
    # a long cycle is not AT-free and breaks the layer properties
    g = gen.cycle(9)
    assert support.dominating_prefix_violations(g)
    assert support.lower_neighbourhood_violations(g)
    assert support.layer_order_violations(g)
    assert support.far_layer_violations(g)
