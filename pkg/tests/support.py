"""Instance corpora and structural property checkers shared by the test modules."""

from __future__ import annotations

import functools
import random

import numpy as np

from atdiam import generators as gen
from atdiam import oracles
from atdiam.graph import Graph, _bfs
from atdiam.lexbfs import lexbfs


@functools.lru_cache(maxsize=None)
def atfree_corpus(count: int, n_min: int, n_max: int, seed: int = 0) -> tuple[Graph, ...]:
    """Seeded AT-free graphs, each re-verified by the oracle."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        g = gen.random_atfree(rng.randint(n_min, n_max), seed * 100_003 + i)
        assert oracles.is_at_free(g).at_free
        out.append(g)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def chordal_corpus(count: int, n_min: int, n_max: int, seed: int = 0) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    return tuple(
        gen.random_chordal(rng.randint(n_min, n_max), seed * 100_003 + i,
                           locality=rng.choice((0.3, 0.6, 0.9)), max_attach=rng.randint(1, 4))
        for i in range(count)
    )


@functools.lru_cache(maxsize=None)
def split_corpus(count: int, n_min: int, n_max: int, seed: int = 0) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    return tuple(
        gen.random_split(rng.randint(n_min, n_max), rng.uniform(0.15, 0.6), seed * 100_003 + i)
        for i in range(count)
    )


def dist_matrix(g: Graph) -> np.ndarray:
    return np.array([_bfs(g.adj, s) for s in range(g.n)], dtype=np.int64)


def _sweep(g: Graph):
    u = lexbfs(g, 0).last
    sigma = lexbfs(g, u)
    return u, sigma


def _same_layer_pairs(g: Graph, dist_row: np.ndarray, pos):
    """Nonadjacent (x, y) with equal distance from the root and pos[x] < pos[y]."""
    for x in range(g.n):
        for y in range(g.n):
            if x != y and dist_row[x] == dist_row[y] and pos[x] < pos[y] and not g.has_edge(x, y):
                yield x, y


def dominating_prefix_violations(g: Graph) -> list:
    """(u, y) dominates the subgraph induced by vertices numbered at least as high as y."""
    u, sigma = _sweep(g)
    bad = []
    if not oracles.is_dominating_pair(g, u, sigma.last):
        bad.append(("pair", u, sigma.last))
    visit = sigma.visit
    for k in range(1, len(visit) + 1):
        prefix = visit[:k]  # exactly the vertices z with sigma_inv(z) >= sigma_inv(visit[k-1])
        h, labels = g.induced_subgraph(prefix)
        index = {w: i for i, w in enumerate(labels)}
        if not oracles.is_dominating_pair(h, index[u], index[visit[k - 1]]):
            bad.append(("prefix", u, visit[k - 1]))
    return bad


def lower_neighbourhood_violations(g: Graph, D: np.ndarray | None = None) -> list:
    """Same-layer nonadjacent x before y: lower-layer neighbourhood of x inside that of y, dist <= 2."""
    D = dist_matrix(g) if D is None else D
    u, sigma = _sweep(g)
    du = D[u]
    bad = []
    for x, y in _same_layer_pairs(g, du, sigma.position):
        i = du[x]
        nx_ = {w for w in g.adj[x] if du[w] == i - 1}
        ny = {w for w in g.adj[y] if du[w] == i - 1}
        if not nx_ <= ny or D[x, y] > 2:
            bad.append((x, y))
    return bad


def near_pair_ecc_violations(g: Graph, u: int, v: int, D: np.ndarray | None = None) -> list:
    """For a dominating pair (u, v): every x with e(x) >= 3 reaches e(x) inside N[u] + N[v]."""
    D = dist_matrix(g) if D is None else D
    near = sorted(g.closed_neighborhood(u) | g.closed_neighborhood(v))
    ecc = D.max(axis=1)
    reach = D[:, near].max(axis=1)
    return [x for x in range(g.n) if ecc[x] >= 3 and reach[x] != ecc[x]]


def layer_order_violations(g: Graph, D: np.ndarray | None = None) -> list:
    """x before y in the same layer from u: y is no farther than x from lower layers;
    with no universal vertex and both in the top layer, e(x) >= e(y)."""
    D = dist_matrix(g) if D is None else D
    u, sigma = _sweep(g)
    du = D[u]
    ecc = D.max(axis=1)
    top = du.max()
    no_universal = not any(g.is_universal(w) for w in range(g.n))
    bad = []
    for x, y in _same_layer_pairs(g, du, sigma.position):
        lower = du < du[x]
        if np.any(D[y, lower] > D[x, lower]):
            bad.append(("lower", x, y))
        if no_universal and du[x] == top and ecc[x] < ecc[y]:
            bad.append(("ecc", x, y))
    return bad


def far_layer_violations(g: Graph, D: np.ndarray | None = None) -> list:
    """Layers from v = sigma(1); x before y (in sigma) in layer i: for z beyond layer i,
    dist(y, z) <= max(dist(x, z), 2)."""
    D = dist_matrix(g) if D is None else D
    _, sigma = _sweep(g)
    v = sigma.last
    dv = D[v]
    bad = []
    for x, y in _same_layer_pairs(g, dv, sigma.position):
        beyond = dv > dv[x]
        if np.any(D[y, beyond] > np.maximum(D[x, beyond], 2)):
            bad.append((x, y))
    return bad


def minimal_by_definition(sets) -> list[int]:
    """Indices of sets with no proper subset elsewhere in the family."""
    fs = [frozenset(s) for s in sets]
    return [i for i, s in enumerate(fs) if not any(t < s for t in fs)]


def random_family_sets(rng: random.Random, count: int, universe: int, p: float) -> list[list[int]]:
    return [[e for e in range(universe) if rng.random() < p] for _ in range(count)]


# acceptance results, keyed by criterion number; printed by the conftest summary hook
ACCEPTANCE: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> str:
    line = f"[{number:02d}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return line
