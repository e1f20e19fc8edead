"""All eccentricities of an AT-free graph in O(m^{3/2}) time.

Three LexBFS sweeps locate a vertex ``v`` whose first and last two BFS
layers contain every vertex a farthest vertex can be chosen from.  Each of
those layers is pruned to a clique, so only O(sqrt(m)) BFS runs remain.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, _bfs, layers
from .lexbfs import VertexOrdering, lexbfs


@dataclass(frozen=True)
class HitterSets:
    source: int
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    sigma: VertexOrdering
    tau: VertexOrdering

    @property
    def union(self) -> list[int]:
        return sorted(self.A | self.B | self.C)


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    universal: tuple[bool, ...]
    hitters: HitterSets | None = None

    @property
    def diameter(self) -> int:
        return max(self.ecc, default=0)

    def __getitem__(self, v: int) -> int:
        return self.ecc[v]

    def __len__(self) -> int:
        return len(self.ecc)


def scan_clique(g: Graph, candidates: Iterable[int], ordering: VertexOrdering) -> frozenset[int]:
    """Greedy clique of ``candidates`` in increasing ``ordering`` position.

    Every candidate still present when its turn comes deletes the remaining
    candidates outside its closed neighbourhood.  Cost is O(sum of degrees).
    """
    pos = ordering.position
    present = set(candidates)
    for c in sorted(present, key=pos.__getitem__):
        if c in present:
            keep = {w for w in g.adj[c] if w in present}
            keep.add(c)
            present = keep
    return frozenset(present)


def hitter_sets(g: Graph, start: int = 0) -> HitterSets:
    u = lexbfs(g, start).last
    sigma = lexbfs(g, u)
    v = sigma.last
    tau = lexbfs(g, v)
    lay = layers(g, v)
    d = lay.d
    A = scan_clique(g, lay[1] | {v} if d >= 1 else {v}, sigma)
    B = scan_clique(g, lay[d - 1] if d >= 1 else (), tau)
    C = scan_clique(g, lay[d], tau)
    return HitterSets(v, A, B, C, sigma, tau)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ATDIAM_THREADS", "1")))
    except ValueError:
        return 1


def atfree_all_eccentricities(g: Graph, start: int = 0) -> EccentricityProfile:
    """Eccentricities of every vertex; exact when ``g`` is AT-free.

    On other connected graphs each value is still a lower bound on the true
    eccentricity, except that non-universal vertices are clamped to at least 2
    (which is also a true lower bound).
    """
    g.require_connected()
    n = g.n
    if n == 1:
        return EccentricityProfile((0,), (False,))
    universal = tuple(len(nbrs) == n - 1 for nbrs in g.adj)
    hit = hitter_sets(g, start)
    sources = hit.union
    ecc = [2] * n
    workers = _threads()
    if workers > 1 and len(sources) > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = pool.map(lambda x: _bfs(g.adj, x), sources)
            for row in rows:
                ecc = list(map(max, ecc, row))
    else:
        for x in sources:
            ecc = list(map(max, ecc, _bfs(g.adj, x)))
    for w in range(n):
        if universal[w]:
            ecc[w] = 1
    return EccentricityProfile(tuple(ecc), universal, hit)


def atfree_diameter(g: Graph) -> int:
    return atfree_all_eccentricities(g).diameter
