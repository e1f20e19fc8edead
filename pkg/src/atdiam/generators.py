"""Seeded constructions of the graph families used by tests and benchmarks.

Every random generator takes an explicit ``seed`` and uses its own
``random.Random`` instance; there is no global random state.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import DisconnectedGraphError, Graph, GraphError
from .splitov import SetFamily

MAX_RETRIES = 1000


@dataclass(frozen=True)
class OVFamilies:
    A: SetFamily
    B: SetFamily

    def __post_init__(self):
        if self.A.universe_size != self.B.universe_size:
            raise GraphError("families must share a universe")

    @property
    def universe_size(self) -> int:
        return self.A.universe_size


def _positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise GraphError(f"{name} must be positive, got {value}")


def path(n: int) -> Graph:
    _positive(n=n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _positive(n=n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre as vertex 0."""
    _positive(leaves=leaves)
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def spider(legs: int, length: int) -> Graph:
    """Centre 0; leg ``i`` is ``1 + i*length, ..., (i+1)*length`` outwards, tip last."""
    _positive(legs=legs, length=length)
    edges = []
    for i in range(legs):
        prev = 0
        for j in range(length):
            v = 1 + i * length + j
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(1 + legs * length, edges)


def spider_tips(legs: int, length: int) -> list[int]:
    return [(i + 1) * length for i in range(legs)]


def three_sun() -> Graph:
    """Inner triangle a,b,c = 0,1,2; outer x,y,z = 3,4,5 with x~a,b  y~b,c  z~c,a."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])


def b1() -> Graph:
    """Triangle 0,1,2 with pendant 3 on 0, 4 on 1 and 5 on 2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


BASIC = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "spider": spider,
    "three_sun": three_sun,
    "b1": b1,
}


def basic(kind: str, *params: int) -> Graph:
    try:
        build = BASIC[kind.replace("-", "_")]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {kind}: {exc}") from None


# -- interval graphs ---------------------------------------------------------

def interval_graph(intervals: Sequence[tuple[float, float]]) -> Graph:
    """Intersection graph of closed intervals, built by a sweep over left ends."""
    for lo, hi in intervals:
        if lo > hi:
            raise GraphError(f"interval [{lo}, {hi}] has lo > hi")
    n = len(intervals)
    order = sorted(range(n), key=lambda i: (intervals[i][0], i))
    edges = []
    for a in range(n):
        i = order[a]
        hi = intervals[i][1]
        for b in range(a + 1, n):
            j = order[b]
            if intervals[j][0] > hi:
                break
            edges.append((i, j))
    return Graph.from_edges(n, edges)


def random_intervals(n: int, rng: random.Random, mean_length: float) -> list[tuple[float, float]]:
    out = []
    for _ in range(n):
        lo = rng.uniform(0, n)
        out.append((lo, lo + rng.uniform(0, 2 * mean_length)))
    return out


def random_interval(n: int, seed: int, mean_length: float | None = None) -> Graph:
    """Connected random interval graph.

    Left ends are uniform on ``[0, n)`` and lengths uniform on
    ``[0, 2*mean_length]``; disconnected samples are redrawn.  A point is
    left uncovered with probability about exp(-mean_length), so the default
    length grows like log n to keep rejections rare.
    """
    _positive(n=n)
    rng = random.Random(seed)
    if mean_length is None:
        mean_length = math.log(n) + 2.0 + 2.0 * rng.random()
    for _ in range(MAX_RETRIES):
        g = interval_graph(random_intervals(n, rng, mean_length))
        if g.connected:
            return g
    raise DisconnectedGraphError(f"no connected interval graph after {MAX_RETRIES} draws")


# -- OV gadgets --------------------------------------------------------------

def h_abc(fams: OVFamilies, check_connected: bool = True) -> Graph:
    """The OV gadget: A-block, then B-block, then one vertex per universe element.

    A, B and C are cliques; a set vertex is adjacent to the element vertices
    it contains; there are no A-B edges.
    """
    na, nb, nc = len(fams.A.sets), len(fams.B.sets), fams.universe_size
    n = na + nb + nc
    if n == 0:
        raise GraphError("empty gadget")
    edges = []
    for lo, hi in ((0, na), (na, na + nb), (na + nb, n)):
        edges.extend(itertools.combinations(range(lo, hi), 2))
    c0 = na + nb
    for i, s in enumerate(fams.A.sets):
        edges.extend((i, c0 + e) for e in s)
    for i, s in enumerate(fams.B.sets):
        edges.extend((na + i, c0 + e) for e in s)
    g = Graph.from_edges(n, edges)
    if check_connected and not g.connected:
        raise DisconnectedGraphError("H_{A,B,C} is disconnected for these families")
    return g


def vc_family(d: int) -> OVFamilies:
    """All 2^d subsets of a d-element universe in A (bitmask order); B empty."""
    _positive(d=d)
    sets = [[e for e in range(d) if mask >> e & 1] for mask in range(1 << d)]
    return OVFamilies(SetFamily(d, sets), SetFamily(d, []))


def helly_family(k: int) -> OVFamilies:
    """All k-subsets of a (k+1)-element universe; the first goes to A, the rest to B."""
    _positive(k=k)
    sets = [list(c) for c in itertools.combinations(range(k + 1), k)]
    return OVFamilies(SetFamily(k + 1, sets[:1]), SetFamily(k + 1, sets[1:]))


def random_ov_families(rng: random.Random, na: int, nb: int, universe: int, p: float) -> OVFamilies:
    def draw(count):
        return [[e for e in range(universe) if rng.random() < p] for _ in range(count)]

    return OVFamilies(SetFamily(universe, draw(na)), SetFamily(universe, draw(nb)))


# -- split-graph constructions ----------------------------------------------

def _split_parts(g: Graph, keep_in_stable: Iterable[int] = ()) -> tuple[list[int], list[int]]:
    from .oracles import is_split

    res = is_split(g)
    if not res.is_split:
        raise GraphError("graph is not split")
    keep = set(keep_in_stable)
    clique = [v for v in res.clique if v not in keep]
    cset = set(clique)
    stable = [v for v in range(g.n) if v not in cset]
    for i, a in enumerate(stable):
        for b in stable[i + 1:]:
            if g.has_edge(a, b):
                raise GraphError("requested vertices cannot all lie in the stable set")
    return clique, stable


def bichromatic_gadget(g: Graph, A: Iterable[int], B: Iterable[int]) -> Graph:
    """Add ``a = n`` and ``b = n+1`` with N[a] = A+K+{a,b} and N[b] = B+K+{a,b}."""
    A, B = sorted(set(A)), sorted(set(B))
    if not A or not B:
        raise GraphError("A and B must be nonempty")
    for v in A + B:
        g.check_vertex(v)
    clique, _ = _split_parts(g, A + B)
    a, b = g.n, g.n + 1
    edges = list(g.edges())
    edges.append((a, b))
    edges.extend((a, x) for x in sorted(set(A) | set(clique)))
    edges.extend((b, x) for x in sorted(set(B) | set(clique)))
    return Graph.from_edges(g.n + 2, edges)


def subdivide_stable(g: Graph, d: int, stable: Iterable[int] | None = None) -> Graph:
    """Hang a pendant path of ``d - 1`` new edges from every stable vertex."""
    _positive(d=d)
    if stable is None:
        _, stable = _split_parts(g)
    edges = list(g.edges())
    n = g.n
    for s in sorted(stable):
        prev = s
        for _ in range(d - 1):
            edges.append((prev, n))
            prev = n
            n += 1
    return Graph.from_edges(n, edges)


# -- random class samplers ---------------------------------------------------

def random_chordal(n: int, seed: int, locality: float = 0.5, max_attach: int = 3) -> Graph:
    """Random chordal graph grown along a random clique tree.

    Each new vertex picks a bag (maximal clique so far) and joins a random
    nonempty subset of it; the subset plus the vertex becomes a new bag.
    With probability ``locality`` the bag is one of the three newest, which
    stretches the clique tree and raises the diameter.
    """
    _positive(n=n)
    rng = random.Random(seed)
    bags: list[list[int]] = [[0]]
    edges = []
    for v in range(1, n):
        if rng.random() < locality:
            bag = bags[-1 - rng.randrange(min(3, len(bags)))]
        else:
            bag = bags[rng.randrange(len(bags))]
        k = rng.randint(1, min(len(bag), max_attach))
        attach = rng.sample(bag, k)
        edges.extend((u, v) for u in attach)
        if k == len(bag):
            bag.append(v)
        else:
            bags.append(attach + [v])
    return Graph.from_edges(n, edges)


def random_split(n: int, density: float, seed: int, clique_size: int | None = None) -> Graph:
    """Random connected split graph: clique ``0..k-1``, stable set ``k..n-1``."""
    if n < 2:
        raise GraphError("random_split needs n >= 2")
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        k = clique_size if clique_size is not None else rng.randint(1, n - 1)
        edges = list(itertools.combinations(range(k), 2))
        for s in range(k, n):
            edges.extend((c, s) for c in range(k) if rng.random() < density)
        g = Graph.from_edges(n, edges)
        if g.connected:
            return g
    raise DisconnectedGraphError(f"no connected split graph after {MAX_RETRIES} draws")


def random_atfree(n: int, seed: int) -> Graph:
    """Random AT-free graph: a random interval graph or an OV gadget, verified."""
    from .oracles import is_at_free

    _positive(n=n)
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        if n < 3 or rng.random() < 0.5:
            g = random_interval(n, rng.randrange(1 << 30), mean_length=math.log(n) + 2.0 + 4.0 * rng.random())
        else:
            universe = rng.randint(1, max(1, n // 2))
            na = rng.randint(0, n - universe)
            fams = random_ov_families(rng, na, n - universe - na, universe, rng.uniform(0.1, 0.7))
            try:
                g = h_abc(fams)
            except DisconnectedGraphError:
                continue
        if is_at_free(g).at_free:
            return g
    raise GraphError(f"no AT-free sample after {MAX_RETRIES} draws")


def random_chordal_spider(legs: int, length: int, seed: int, fatness: float = 0.5) -> tuple[Graph, list[int]]:
    """Chordal spider whose legs are random chains of overlapping cliques.

    Returns the graph and one tip vertex per leg.  Pendant vertices hang off
    random leg cliques, so the tips need not form a dominating target; the
    caller verifies that with the oracle.
    """
    _positive(legs=legs, length=length)
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    n = 1
    tips = []
    bags: list[list[int]] = []
    for _ in range(legs):
        front = [0]
        for _ in range(length):
            # joining only the previous front keeps each step one hop long
            keep = rng.sample(front, rng.randint(1, len(front)))
            new = list(range(n, n + 1 + (rng.random() < fatness)))
            n += len(new)
            edges.extend(itertools.combinations(new, 2))
            edges.extend((u, w) for u in keep for w in new)
            bags.append(keep + new)
            front = new
        tips.append(front[-1])
    for bag in rng.sample(bags, rng.randint(0, len(bags) // 2)):
        attach = rng.sample(bag, rng.randint(1, len(bag)))
        edges.extend((u, n) for u in attach)
        n += 1
    return Graph.from_edges(n, edges), tips
