"""Lexicographic BFS, multi-sweep drivers and chordality recognition.

Ties between vertices with equal labels are broken towards the smallest
vertex id, so every search is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DisconnectedGraphError, Graph, GraphError, _bfs, connected_components


@dataclass(frozen=True)
class VertexOrdering:
    """A LexBFS numbering.

    ``visit`` is the order in which vertices were visited.  The numbering
    ``sigma`` is its reverse: ``sigma(1)`` is the last visited vertex and
    ``sigma(n)`` the start vertex.
    """

    visit: tuple[int, ...]
    position: tuple[int, ...]  # position[v] == sigma_inv(v)

    @classmethod
    def from_visit_order(cls, visit) -> "VertexOrdering":
        visit = tuple(visit)
        n = len(visit)
        position = [0] * n
        for i, v in enumerate(visit):
            position[v] = n - i
        return cls(visit, tuple(position))

    @property
    def n(self) -> int:
        return len(self.visit)

    def sigma(self, i: int) -> int:
        if not 1 <= i <= len(self.visit):
            raise IndexError(i)
        return self.visit[len(self.visit) - i]

    def sigma_inv(self, v: int) -> int:
        return self.position[v]

    @property
    def start(self) -> int:
        return self.visit[0]

    @property
    def last(self) -> int:
        return self.visit[-1]


@dataclass(frozen=True)
class SweepTrace:
    starts: tuple[int, ...]
    terminals: tuple[int, ...]
    terminal_ecc: tuple[int, ...]
    orderings: tuple[VertexOrdering, ...]


def lexbfs(g: Graph, start: int = 0) -> VertexOrdering:
    """Linear-time LexBFS by partition refinement over a list of cells.

    Cells are kept in decreasing label order and each cell keeps its vertices
    sorted by id, so the next vertex is always the head of the first cell.
    """
    g.check_vertex(start)
    n = g.n
    adj = g.adj
    NIL = -1
    # per-vertex doubly linked list inside its cell
    v_next = [NIL] * n
    v_prev = [NIL] * n
    cell_of = [0] * n
    # cell storage, grown on demand
    head: list[int] = []
    tail: list[int] = []
    size: list[int] = []
    c_next: list[int] = []
    c_prev: list[int] = []
    stamp: list[int] = []
    split_to: list[int] = []

    def new_cell() -> int:
        head.append(NIL)
        tail.append(NIL)
        size.append(0)
        c_next.append(NIL)
        c_prev.append(NIL)
        stamp.append(-1)
        split_to.append(NIL)
        return len(head) - 1

    first = new_cell()
    rest = new_cell()
    c_next[first] = rest
    c_prev[rest] = first
    head[first] = tail[first] = start
    size[first] = 1
    cell_of[start] = first
    prev = NIL
    for v in range(n):
        if v == start:
            continue
        cell_of[v] = rest
        v_prev[v] = prev
        if prev == NIL:
            head[rest] = v
        else:
            v_next[prev] = v
        prev = v
        size[rest] += 1
    tail[rest] = prev
    if size[rest] == 0:
        c_next[first] = NIL

    visited = [False] * n
    reached = [False] * n
    reached[start] = True
    visit = []
    for step in range(n):
        p = head[first]
        if not reached[p]:
            raise DisconnectedGraphError("graph is not connected")
        # unlink p from the head of the first cell
        nx_ = v_next[p]
        head[first] = nx_
        if nx_ == NIL:
            tail[first] = NIL
        else:
            v_prev[nx_] = NIL
        size[first] -= 1
        if size[first] == 0:
            first = c_next[first]
            if first != NIL:
                c_prev[first] = NIL
        visited[p] = True
        visit.append(p)

        touched = []
        for w in adj[p]:
            if visited[w]:
                continue
            reached[w] = True
            x = cell_of[w]
            if stamp[x] != step:
                stamp[x] = step
                y = new_cell()
                split_to[x] = y
                # insert y just before x
                py = c_prev[x]
                c_prev[y] = py
                c_next[y] = x
                c_prev[x] = y
                if py == NIL:
                    first = y
                else:
                    c_next[py] = y
                touched.append(x)
            else:
                y = split_to[x]
            # remove w from x
            a, b = v_prev[w], v_next[w]
            if a == NIL:
                head[x] = b
            else:
                v_next[a] = b
            if b == NIL:
                tail[x] = a
            else:
                v_prev[b] = a
            size[x] -= 1
            # append w to y
            t = tail[y]
            v_prev[w] = t
            v_next[w] = NIL
            if t == NIL:
                head[y] = w
            else:
                v_next[t] = w
            tail[y] = w
            size[y] += 1
            cell_of[w] = y
        for x in touched:
            if size[x] == 0:
                a, b = c_prev[x], c_next[x]
                if a == NIL:
                    first = b
                else:
                    c_next[a] = b
                if b != NIL:
                    c_prev[b] = a
        if first == NIL:
            break
    return VertexOrdering.from_visit_order(visit)


def lexbfs_reference(g: Graph, start: int = 0) -> VertexOrdering:
    """Quadratic LexBFS with explicit labels; used to validate :func:`lexbfs`."""
    g.check_vertex(start)
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    visit = []
    for i in range(n):
        if i == 0:
            p = start
        else:
            p = max(unvisited, key=lambda v: (labels[v], -v))
            if not labels[p]:
                raise DisconnectedGraphError("graph is not connected")
        unvisited.discard(p)
        visit.append(p)
        for w in g.adj[p]:
            if w in unvisited:
                labels[w].append(n - i)
    return VertexOrdering.from_visit_order(visit)


def multi_sweep(g: Graph, c: int, start: int = 0) -> SweepTrace:
    """Run ``c`` chained LexBFS searches, each from the previous terminal."""
    if c < 1:
        raise GraphError("sweep count must be at least 1")
    starts, terminals, eccs, orders = [], [], [], []
    s = start
    for _ in range(c):
        order = lexbfs(g, s)
        t = order.last
        starts.append(s)
        terminals.append(t)
        eccs.append(max(_bfs(g.adj, t)))
        orders.append(order)
        s = t
    return SweepTrace(tuple(starts), tuple(terminals), tuple(eccs), tuple(orders))


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    peo: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def _peo_violation(g: Graph, peo: tuple[int, ...]) -> tuple[int, int, int] | None:
    """Return ``(v, p, w)`` with p, w later neighbours of v and pw not an edge."""
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        nbrs = g.adj_sets[p]
        for w in later:
            if w != p and w not in nbrs:
                return v, p, w
    return None


def _chordless_path(g: Graph, a: int, b: int, blocked: set[int]) -> list[int] | None:
    """Shortest a-b path avoiding ``blocked``; shortest paths are induced."""
    parent = {a: a}
    frontier = [a]
    while frontier and b not in parent:
        nxt = []
        for x in frontier:
            for w in g.adj[x]:
                if w not in parent and w not in blocked:
                    parent[w] = x
                    nxt.append(w)
        frontier = nxt
    if b not in parent:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _cycle_through(g: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    blocked = set(g.adj[v]) - {a, b}
    blocked.add(v)
    path = _chordless_path(g, a, b, blocked)
    if path is None:
        return None
    return (v, *path)


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """Exhaustive search for an induced cycle of length >= 4."""
    for v in range(g.n):
        nbrs = g.adj[v]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not g.has_edge(a, b):
                    cyc = _cycle_through(g, v, a, b)
                    if cyc is not None:
                        return cyc
    return None


def is_chordal(g: Graph) -> ChordalityResult:
    """Chordality test: the reversed LexBFS visit order is a PEO iff g is chordal.

    Disconnected graphs are handled component by component.
    """
    if g.n == 0:
        return ChordalityResult(True, ())
    if g.connected:
        visit = list(lexbfs(g, 0).visit)
    else:
        visit = []
        for comp in connected_components(g):
            h, labels = g.induced_subgraph(comp)
            visit.extend(labels[x] for x in lexbfs(h, 0).visit)
    peo = tuple(reversed(visit))
    bad = _peo_violation(g, peo)
    if bad is None:
        return ChordalityResult(True, peo)
    v, p, w = bad
    cycle = _cycle_through(g, v, p, w) or find_chordless_cycle(g)
    return ChordalityResult(False, cycle=cycle)
