"""Immutable simple undirected graphs and BFS primitives.

Vertices are dense integers ``0..n-1``.  Unreachable vertices are reported
as ``None`` in distance vectors, never as a large integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from numbers import Integral
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid input: bad vertex id, non-simple edge list, or a violated precondition."""


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Simple undirected graph stored as sorted adjacency tuples.

    Build with :meth:`from_edges` (validates simplicity) or pass an adjacency
    sequence directly (validates symmetry and simplicity).
    """

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        n = len(adjacency)
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        total = 0
        for v, nbrs in enumerate(adj):
            prev = -1
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"vertex {v} has out-of-range neighbour {w}")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if w == prev:
                    raise GraphError(f"duplicate edge {v}-{w}")
                prev = w
            total += len(nbrs)
        sets = self.adj_sets = tuple(frozenset(nbrs) for nbrs in adj)
        for v, nbrs in enumerate(adj):
            for w in nbrs:
                if v not in sets[w]:
                    raise GraphError(f"asymmetric adjacency: {v}->{w} without {w}->{v}")
        self.n = n
        self.adj = adj
        self.m = total // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        adjacency: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def is_universal(self, v: int) -> bool:
        return len(self.adj[v]) == self.n - 1

    @cached_property
    def connected(self) -> bool:
        if self.n == 0:
            return True
        return None not in bfs_distances(self, 0).dist

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError("graph is not connected")

    def check_vertex(self, v: int) -> None:
        if isinstance(v, bool) or not isinstance(v, Integral) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, labels)``; vertex ``i`` of ``H`` is ``labels[i]`` in ``self``."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        adjacency = [[index[w] for w in self.adj[v] if w in index] for v in labels]
        return Graph(adjacency), labels

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceVector:
    source: int
    dist: list  # list[int | None]

    @property
    def eccentricity(self) -> int:
        """Largest finite distance from the source."""
        return max(d for d in self.dist if d is not None)

    @property
    def all_reachable(self) -> bool:
        return None not in self.dist

    def __getitem__(self, v: int):
        return self.dist[v]


@dataclass(frozen=True)
class DistanceLayers:
    source: int
    layers: tuple[frozenset[int], ...]
    dist: list

    @property
    def d(self) -> int:
        return len(self.layers) - 1

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.layers[i]


def _bfs(adj: Sequence[Sequence[int]], s: int) -> list:
    dist: list = [None] * len(adj)
    dist[s] = 0
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        if len(frontier) < 8:
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if dist[w] is None:
                        dist[w] = d
                        nxt.append(w)
        else:
            # wide layers: let set.update do the per-edge work
            cand: set[int] = set()
            for x in frontier:
                cand.update(adj[x])
            nxt = [w for w in cand if dist[w] is None]
            for w in nxt:
                dist[w] = d
        frontier = nxt
    return dist


def bfs_distances(g: Graph, s: int) -> DistanceVector:
    g.check_vertex(s)
    return DistanceVector(s, _bfs(g.adj, s))


def layers(g: Graph, s: int) -> DistanceLayers:
    g.check_vertex(s)
    dist = _bfs(g.adj, s)
    if None in dist:
        raise DisconnectedGraphError("graph is not connected")
    buckets: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        buckets[d].append(v)
    return DistanceLayers(s, tuple(frozenset(b) for b in buckets), dist)


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        members = [v for v, d in enumerate(_bfs(g.adj, s)) if d is not None]
        for v in members:
            comp[v] = len(out)
        out.append(members)
    return out


def all_pairs_distances(g: Graph) -> list[list]:
    """n BFS runs; row ``u`` is the distance vector from ``u``."""
    return [_bfs(g.adj, s) for s in range(g.n)]


def eccentricities_naive(g: Graph) -> list[int]:
    g.require_connected()
    return [max(_bfs(g.adj, s)) for s in range(g.n)]


def diameter_naive(g: Graph) -> int:
    return max(eccentricities_naive(g), default=0)
