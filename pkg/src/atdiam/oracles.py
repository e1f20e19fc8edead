"""Brute-force checkers for the structural predicates the fast algorithms rely on.

Everything here is written for desk-scale inputs.  Exponential searches take
an explicit cap and refuse larger inputs instead of running forever.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, _bfs, all_pairs_distances


class CapExceeded(GraphError):
    """Input larger than the cap an exponential oracle was given."""


def _require_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"input size {n} exceeds cap {cap}")


# -- components of G minus a ball -------------------------------------------

def avoid_components(g: Graph, radius: int = 1) -> list[list[int]]:
    """``comps[x][w]``: component label of w in G - N^radius[x], or -1 if w is in the ball."""
    n = g.n
    adj = g.adj
    comps = []
    for x in range(n):
        if radius == 1:
            blocked = [False] * n
            blocked[x] = True
            for w in adj[x]:
                blocked[w] = True
        else:
            dx = _bfs(adj, x)
            blocked = [d is not None and d <= radius for d in dx]
        comp = [-1] * n
        remaining = {w for w in range(n) if not blocked[w]}
        label = 0
        while remaining:
            seed = remaining.pop()
            comp[seed] = label
            frontier = [seed]
            while frontier:
                cand: set[int] = set()
                for y in frontier:
                    cand.update(adj[y])
                cand &= remaining
                remaining -= cand
                for w in cand:
                    comp[w] = label
                frontier = cand
            label += 1
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class ATResult:
    at_free: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.at_free


def _find_asteroidal_triple(comps: list[list[int]]) -> tuple[int, int, int] | None:
    """Triple x,y,z with each pair in one component of G minus the third's ball.

    ``S_x[y,z]`` says y and z share a component of G - ball(x).  For fixed x
    the other two conditions are ``R_x[y,z] = S_y[x,z]`` and ``R_x[z,y]``.
    """
    C = np.asarray(comps, dtype=np.int64)
    n = C.shape[0]
    if n < 3:
        return None
    off = ~np.eye(n, dtype=bool)
    for x in range(n):
        row = C[x]
        S = (row[:, None] == row[None, :]) & (row >= 0)[:, None] & off
        if not S.any():
            continue
        col = C[:, x]
        R = (col[:, None] == C) & (col >= 0)[:, None]
        R[:, x] = False
        hit = S & R & R.T
        if hit.any():
            y, z = map(int, np.argwhere(hit)[0])
            return tuple(sorted((x, y, z)))
    return None


def is_at_free(g: Graph) -> ATResult:
    witness = _find_asteroidal_triple(avoid_components(g, 1))
    return ATResult(witness is None, witness)


def is_k_at_free(g: Graph, k: int) -> ATResult:
    """No triple where each pair is joined by a path avoiding the radius-k ball of the third."""
    if k < 1:
        raise GraphError("k must be at least 1")
    witness = _find_asteroidal_triple(avoid_components(g, k))
    return ATResult(witness is None, witness)


def is_asteroidal_triple_bruteforce(g: Graph, x: int, y: int, z: int, radius: int = 1) -> bool:
    """Literal definition, one BFS per pair; for cross-checking."""
    def avoiding_path(a, b, c):
        dc = _bfs(g.adj, c)
        ball = {w for w, d in enumerate(dc) if d is not None and d <= radius}
        if a in ball or b in ball:
            return False
        seen = {a}
        stack = [a]
        while stack:
            p = stack.pop()
            if p == b:
                return True
            for w in g.adj[p]:
                if w not in seen and w not in ball:
                    seen.add(w)
                    stack.append(w)
        return False

    return avoiding_path(x, y, z) and avoiding_path(y, z, x) and avoiding_path(z, x, y)


def is_asteroidal_set(g: Graph, A: Iterable[int], comps: list[list[int]] | None = None) -> bool:
    A = sorted(set(A))
    for i, a in enumerate(A):
        for b in A[i + 1:]:
            if g.has_edge(a, b):
                return False
    if comps is None:
        comps = avoid_components(g, 1)
    for v in A:
        labels = {comps[v][w] for w in A if w != v}
        if len(labels) > 1:
            return False
    return True


def asteroidal_number(g: Graph, cap: int = 24) -> int:
    """Largest asteroidal set, by backtracking over independent sets.

    Asteroidal sets are closed under taking subsets, so every branch that
    stops being asteroidal is pruned.
    """
    _require_cap(g.n, cap)
    n = g.n
    if n == 0:
        return 0
    comps = avoid_components(g, 1)
    best = 1
    chosen: list[int] = []

    def extend(start: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        for w in range(start, n):
            if any(g.has_edge(w, a) for a in chosen):
                continue
            if chosen:
                # w must share the component of the others in G - N[v] for each chosen v,
                # and the chosen set must lie in one component of G - N[w]
                ok = True
                if len(chosen) >= 2:
                    for v in chosen:
                        other = chosen[0] if chosen[0] != v else chosen[1]
                        if comps[v][w] != comps[v][other]:
                            ok = False
                            break
                if ok:
                    ok = len({comps[w][a] for a in chosen}) == 1
                if not ok:
                    continue
            chosen.append(w)
            extend(w + 1)
            chosen.pop()

    extend(0)
    return best


# -- dominating pairs and targets -------------------------------------------

def is_dominating_target(g: Graph, D: Iterable[int], comps: list[list[int]] | None = None) -> bool:
    """Every connected subgraph containing D is a dominating set.

    A connected subgraph containing D misses N[x] exactly when D avoids N[x]
    and D lies inside one component of G - N[x].
    """
    D = sorted(set(D))
    if not D:
        raise GraphError("dominating target must be nonempty")
    for v in D:
        g.check_vertex(v)
    if comps is None:
        comps = avoid_components(g, 1)
    for x in range(g.n):
        comp = comps[x]
        label = comp[D[0]]
        if label < 0:
            continue
        for d in D[1:]:
            if comp[d] != label:
                break
        else:
            return False
    return True


def is_dominating_pair(g: Graph, u: int, v: int, comps: list[list[int]] | None = None) -> bool:
    return is_dominating_target(g, (u, v), comps)


def _masks(g: Graph) -> tuple[list[int], list[int]]:
    nbr = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    closed = [m | (1 << v) for v, m in enumerate(nbr)]
    return nbr, closed


def _connected_mask(W: int, nbr: list[int]) -> bool:
    if W == 0:
        return False
    seen = W & -W
    frontier = seen
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = grow & W & ~seen
        seen |= frontier
    return seen == W


def is_dominating_target_bruteforce(g: Graph, D: Iterable[int], cap: int = 14) -> bool:
    """Enumerate every vertex set W containing D with G[W] connected and check domination."""
    _require_cap(g.n, cap)
    n = g.n
    nbr, closed = _masks(g)
    full = (1 << n) - 1
    dmask = sum(1 << v for v in set(D))
    rest = [v for v in range(n) if not dmask >> v & 1]
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            W = dmask | sum(1 << v for v in extra)
            if not _connected_mask(W, nbr):
                continue
            cover = 0
            f = W
            while f:
                low = f & -f
                cover |= closed[low.bit_length() - 1]
                f ^= low
            if cover != full:
                return False
    return True


@dataclass(frozen=True)
class DSPResult:
    status: str  # "yes" | "no" | "unknown"
    path: tuple[int, ...] | None = None
    paths_checked: int = 0


def has_dominating_shortest_path(
    g: Graph, path_cap: int = 100_000, pairs: Iterable[tuple[int, int]] | None = None
) -> DSPResult:
    """Search all shortest paths (between ``pairs``, default every pair) for a dominating one.

    Paths are enumerated by depth-first traversal of the BFS predecessor DAG,
    with incremental coverage counts.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return DSPResult("no")
    if pairs is None:
        pairs = ((s, t) for s in range(n) for t in range(s, n))
    cover = [0] * n
    covered = 0
    checked = 0
    dist_cache: dict[int, list] = {}

    def add(v: int, delta: int) -> None:
        nonlocal covered
        for w in (v, *adj[v]):
            before = cover[w]
            cover[w] = before + delta
            if before == 0 and delta > 0:
                covered += 1
            elif before + delta == 0 and delta < 0:
                covered -= 1

    for s, t in pairs:
        ds = dist_cache.get(s)
        if ds is None:
            ds = dist_cache[s] = _bfs(adj, s)
        if ds[t] is None:
            continue
        trail = [t]
        add(t, 1)
        # stack of iterators over predecessors
        stack = [iter([w for w in adj[t] if ds[w] == ds[t] - 1])]
        if t == s:
            checked += 1
            if covered == n:
                return DSPResult("yes", (s,), checked)
            stack = []
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                add(trail.pop(), -1)
                continue
            trail.append(nxt)
            add(nxt, 1)
            if nxt == s:
                checked += 1
                if covered == n:
                    return DSPResult("yes", tuple(reversed(trail)), checked)
                add(trail.pop(), -1)
                if checked >= path_cap:
                    return DSPResult("unknown", None, checked)
                continue
            stack.append(iter([w for w in adj[nxt] if ds[w] == ds[nxt] - 1]))
        for v in trail:
            add(v, -1)
    return DSPResult("no", None, checked)


# -- hypergraphs -------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        for e in self.edges:
            if any(not 0 <= v < self.n for v in e):
                raise GraphError("hyperedge element out of range")


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, tuple(g.closed_neighborhood(v) for v in range(g.n)))


def _edge_masks(h: Hypergraph) -> list[int]:
    return sorted({sum(1 << v for v in e) for e in h.edges})


def shatters(h: Hypergraph, X: Iterable[int]) -> bool:
    X = sorted(set(X))
    xmask = sum(1 << v for v in X)
    traces = {e & xmask for e in _edge_masks(h)}
    return len(traces) == 1 << len(X)


def vc_dimension(h: Hypergraph, cap: int = 8) -> int:
    """Size of the largest shattered vertex set, searching sizes up to ``cap``.

    Shattered sets are closed under subsets, so candidates of size k+1 are
    grown only from shattered sets of size k.
    """
    masks = _edge_masks(h)
    if not masks:
        return 0
    level = {0}
    best = 0
    for k in range(1, cap + 1):
        if 1 << k > len(masks):
            break
        nxt = set()
        for X in level:
            top = X.bit_length()
            for v in range(top, h.n):
                Y = X | (1 << v)
                if len({e & Y for e in masks}) == 1 << k:
                    nxt.add(Y)
        if not nxt:
            break
        best = k
        level = nxt
    return best


@dataclass(frozen=True)
class HellyResult:
    value: int | None  # None means larger than the cap
    cap: int
    witness: tuple[int, ...] | None = None  # vertex set violating (value-1)-Helly

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f">{self.cap}"


def helly_number(h: Hypergraph, cap: int = 6) -> HellyResult:
    """Smallest k <= cap such that every k-wise intersecting subfamily has a common point.

    Uses the Berge-Duchet criterion: the family is k-Helly iff for every set
    Y of k+1 vertices, the edges containing at least k vertices of Y have a
    common vertex.  Empty hyperedges are ignored.
    """
    masks = [e for e in _edge_masks(h) if e]
    full = (1 << h.n) - 1
    witness = None
    for k in range(1, cap + 1):
        bad = None
        for Y in itertools.combinations(range(h.n), k + 1):
            ymask = sum(1 << v for v in Y)
            common = full
            for e in masks:
                if (e & ymask).bit_count() >= k:
                    common &= e
                    if not common:
                        break
            if not common:
                bad = Y
                break
        if bad is None:
            return HellyResult(k, cap, witness)
        witness = bad
    return HellyResult(None, cap, witness)


def helly_number_bruteforce(h: Hypergraph, cap: int = 12) -> int:
    """Largest subfamily with empty intersection whose proper subfamilies all intersect."""
    masks = [e for e in _edge_masks(h) if e]
    _require_cap(len(masks), cap)
    full = (1 << h.n) - 1
    best = 1
    for r in range(2, len(masks) + 1):
        for fam in itertools.combinations(masks, r):
            total = full
            for e in fam:
                total &= e
            if total:
                continue
            minimal = True
            for skip in range(r):
                inter = full
                for i, e in enumerate(fam):
                    if i != skip:
                        inter &= e
                if not inter:
                    minimal = False
                    break
            if minimal:
                best = max(best, r)
    return best


# -- metric triangles, quasi-medians, slimness -------------------------------

def distance_matrix(g: Graph) -> np.ndarray:
    g.require_connected()
    return np.asarray(all_pairs_distances(g), dtype=np.int64)


@dataclass(frozen=True)
class MetricTriple:
    x: int
    y: int
    z: int
    sides: tuple[int, int, int]  # d(x,y), d(y,z), d(z,x)

    @property
    def equilateral(self) -> bool:
        return self.sides[0] == self.sides[1] == self.sides[2]

    @property
    def size(self) -> int | None:
        return self.sides[0] if self.equilateral else None


def interval_mask(D: np.ndarray, a: int, b: int) -> np.ndarray:
    """Boolean mask of I(a,b), the vertices on some shortest a-b path."""
    return D[a] + D[b] == D[a, b]


def is_metric_triangle(g: Graph, x: int, y: int, z: int, D: np.ndarray | None = None) -> bool:
    if D is None:
        D = distance_matrix(g)
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        common = interval_mask(D, a, b) & interval_mask(D, a, c)
        if int(common.sum()) != 1:
            return False
    return True


def _shortest_paths(adj, D: np.ndarray, a: int, b: int, limit: int | None = None) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    trail = [a]

    def walk(v):
        if limit is not None and len(out) >= limit:
            return
        if v == b:
            out.append(tuple(trail))
            return
        for w in adj[v]:
            if D[w, b] == D[v, b] - 1:
                trail.append(w)
                walk(w)
                trail.pop()

    walk(a)
    return out


def is_metric_triangle_bruteforce(g: Graph, x: int, y: int, z: int, D: np.ndarray | None = None) -> bool:
    """Literal definition: every choice of three shortest paths meets only at the corners."""
    if D is None:
        D = distance_matrix(g)
    pxy = _shortest_paths(g.adj, D, x, y)
    pyz = _shortest_paths(g.adj, D, y, z)
    pzx = _shortest_paths(g.adj, D, z, x)
    for corner, P, Q in ((y, pxy, pyz), (z, pyz, pzx), (x, pzx, pxy)):
        for p in P:
            sp = set(p)
            for q in Q:
                if sp & set(q) != {corner}:
                    return False
    return True


def enumerate_metric_triangles(g: Graph, D: np.ndarray | None = None) -> list[MetricTriple]:
    """All metric triangles on three distinct vertices, x < y < z.

    ``cnt[x, y, z] = |I(x,y) & I(x,z)|``; the corner condition at x is cnt == 1.
    """
    if D is None:
        D = distance_matrix(g)
    n = D.shape[0]
    if n < 3:
        return []
    M = (D[:, None, :] + D.T[None, :, :]) == D[:, :, None]  # M[x, y, w]: w in I(x, y)
    Mi = M.astype(np.int32)
    cnt = np.einsum("xyw,xzw->xyz", Mi, Mi)
    ok = cnt == 1
    tri = ok & ok.transpose(1, 0, 2) & ok.transpose(1, 2, 0)
    out = []
    for x, y, z in np.argwhere(tri):
        if x < y < z:
            out.append(MetricTriple(int(x), int(y), int(z), (int(D[x, y]), int(D[y, z]), int(D[z, x]))))
    return out


def quasi_median(g: Graph, x: int, y: int, z: int, D: np.ndarray | None = None) -> tuple[int, int, int]:
    """A quasi-median of (x, y, z) that is also a metric triangle.

    Exhaustive: x* ranges over I(x,y) & I(x,z) and likewise for y*, z*;
    among valid triples the one closest to (x, y, z) in total is returned.
    """
    if D is None:
        D = distance_matrix(g)

    def cands(a, b, c):
        idx = np.flatnonzero(interval_mask(D, a, b) & interval_mask(D, a, c))
        return sorted(map(int, idx), key=lambda w: (D[a, w], w))

    cx, cy, cz = cands(x, y, z), cands(y, z, x), cands(z, x, y)
    found = []
    for xs in cx:
        for ys in cy:
            if D[x, y] != D[x, xs] + D[xs, ys] + D[ys, y]:
                continue
            for zs in cz:
                if D[y, z] != D[y, ys] + D[ys, zs] + D[zs, z]:
                    continue
                if D[z, x] != D[z, zs] + D[zs, xs] + D[xs, x]:
                    continue
                found.append((int(D[x, xs] + D[y, ys] + D[z, zs]), xs, ys, zs))
    for _, xs, ys, zs in sorted(found):
        if is_metric_triangle(g, xs, ys, zs, D):
            return xs, ys, zs
    raise GraphError(f"no metric quasi-median for {(x, y, z)}")


@dataclass(frozen=True)
class SlimResult:
    ok: bool
    triangles_checked: int
    counterexample: tuple | None = None  # (corners, sides, offending vertex, its distance)


def check_slim(g: Graph, delta: int, budget: int = 2000, seed: int = 0, paths_per_side: int = 2) -> SlimResult:
    """Look for a geodesic triangle with a side vertex farther than ``delta`` from the other sides.

    Corner triples are taken in a seeded random order; for each side the
    first ``paths_per_side`` shortest paths of the predecessor DAG are used.
    """
    D = distance_matrix(g)
    n = g.n
    rng = random.Random(seed)
    triples = list(itertools.combinations(range(n), 3))
    rng.shuffle(triples)
    checked = 0
    for x, y, z in triples:
        sides_xy = _shortest_paths(g.adj, D, x, y, paths_per_side)
        sides_yz = _shortest_paths(g.adj, D, y, z, paths_per_side)
        sides_zx = _shortest_paths(g.adj, D, z, x, paths_per_side)
        for sides in itertools.product(sides_xy, sides_yz, sides_zx):
            if checked >= budget:
                return SlimResult(True, checked)
            checked += 1
            for i in range(3):
                side = list(sides[i])
                others = list(set(sides[(i + 1) % 3]) | set(sides[(i + 2) % 3]))
                gaps = D[np.ix_(side, others)].min(axis=1)
                worst = int(gaps.argmax())
                if gaps[worst] > delta:
                    return SlimResult(False, checked, ((x, y, z), sides, side[worst], int(gaps[worst])))
    return SlimResult(True, checked)


# -- split graphs and B1 -----------------------------------------------------

@dataclass(frozen=True)
class SplitResult:
    is_split: bool
    clique: tuple[int, ...] = ()
    stable: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.is_split


def is_split(g: Graph) -> SplitResult:
    """Hammer-Simeone degree test; the partition it yields is verified directly."""
    n = g.n
    if n == 0:
        return SplitResult(True)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    k = max(i + 1 for i in range(n) if deg[i] >= i)
    lhs = sum(deg[:k])
    rhs = k * (k - 1) + sum(deg[k:])
    if lhs != rhs:
        return SplitResult(False)
    clique = sorted(order[:k])
    stable = sorted(order[k:])
    for i, a in enumerate(clique):
        for b in clique[i + 1:]:
            if not g.has_edge(a, b):
                return SplitResult(False)
    for i, a in enumerate(stable):
        for b in stable[i + 1:]:
            if g.has_edge(a, b):
                return SplitResult(False)
    return SplitResult(True, tuple(clique), tuple(stable))


@dataclass(frozen=True)
class B1Result:
    free: bool
    witness: tuple[int, ...] | None = None  # triangle a, b, c then pendants on a, b, c

    def __bool__(self) -> bool:
        return self.free


def is_b1_free(g: Graph, cap: int = 200) -> B1Result:
    """Search for an induced triangle with one private pendant per corner."""
    _require_cap(g.n, cap)
    S = g.adj_sets
    for a in range(g.n):
        for b in g.adj[a]:
            if b <= a:
                continue
            for c in S[a] & S[b]:
                if c <= b:
                    continue
                pa = [w for w in g.adj[a] if w not in S[b] and w not in S[c] and w not in (b, c)]
                if not pa:
                    continue
                pb = [w for w in g.adj[b] if w not in S[a] and w not in S[c] and w not in (a, c)]
                if not pb:
                    continue
                pc = [w for w in g.adj[c] if w not in S[a] and w not in S[b] and w not in (a, b)]
                for x in pa:
                    for y in pb:
                        if y in S[x]:
                            continue
                        for z in pc:
                            if z not in S[x] and z not in S[y]:
                                return B1Result(False, (a, b, c, x, y, z))
    return B1Result(True)


asteroidal_set_check = is_asteroidal_set
