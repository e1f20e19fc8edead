"""Split-OV: find a in S_A, b in S_B with disjoint neighbour sets.

The solver is output-sensitive: it reduces family A to its twin classes,
keeps only the inclusion-minimal sets, and scans family B once per minimal
set.  With k minimal sets the total cost is O(k * ell), ell being the sum of
set sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .graph import Graph, GraphError


class FamilyFormatError(GraphError):
    pass


@dataclass(frozen=True)
class SetFamily:
    universe_size: int
    sets: tuple[tuple[int, ...], ...]
    ell: int = field(init=False)

    def __init__(self, universe_size: int, sets: Iterable[Iterable[int]]):
        if universe_size < 0:
            raise GraphError("negative universe size")
        clean = []
        total = 0
        for i, s in enumerate(sets):
            t = tuple(sorted(s))
            for a, b in zip(t, t[1:]):
                if a == b:
                    raise GraphError(f"set {i} repeats element {a}")
            if t and not (0 <= t[0] and t[-1] < universe_size):
                raise GraphError(f"set {i} has an element outside the universe")
            clean.append(t)
            total += len(t)
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "sets", tuple(clean))
        object.__setattr__(self, "ell", total)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.sets[i]

    def subfamily(self, indices: Iterable[int]) -> "SetFamily":
        return SetFamily(self.universe_size, (self.sets[i] for i in indices))


@dataclass(frozen=True)
class SplitOVInstance:
    clique_size: int
    family_a: SetFamily
    family_b: SetFamily

    def __post_init__(self):
        if not (self.family_a.universe_size == self.family_b.universe_size == self.clique_size):
            raise GraphError("families must live on the same universe as the clique")

    @classmethod
    def from_families(cls, a: SetFamily, b: SetFamily) -> "SplitOVInstance":
        if a.universe_size != b.universe_size:
            raise GraphError(f"universe mismatch: {a.universe_size} vs {b.universe_size}")
        return cls(a.universe_size, a, b)

    @classmethod
    def from_split_graph(cls, g: Graph, clique: Sequence[int], s_a: Sequence[int], s_b: Sequence[int]):
        """Sparse representation: neighbour sets of stable vertices, over clique indices."""
        index = {c: i for i, c in enumerate(clique)}
        def fam(vertices):
            try:
                return SetFamily(len(clique), ([index[w] for w in g.adj[s]] for s in vertices))
            except KeyError:
                raise GraphError("stable vertex adjacent to a non-clique vertex") from None
        return cls(len(clique), fam(s_a), fam(s_b))


def twin_reduce(family: SetFamily) -> tuple[SetFamily, list[int]]:
    """Keep one representative per class of identical sets.

    Partition refinement: start from one class holding every set, then for
    each universe element split off the sets that contain it.  Identical sets
    are never separated, distinct sets end in different classes once an
    element of their symmetric difference is processed (sets of different
    size differ on some element, except for the empty set, which stays with
    nothing but other empty sets).

    Returns the representatives, in order of first occurrence, and a map
    from every original index to its representative's index.
    """
    m = len(family.sets)
    if m == 0:
        return SetFamily(family.universe_size, []), []
    containing: list[list[int]] = [[] for _ in range(family.universe_size)]
    for i, s in enumerate(family.sets):
        for e in s:
            containing[e].append(i)
    cls = [0] * m
    n_classes = 1
    for members in containing:
        if not members:
            continue
        fresh: dict[int, int] = {}
        for i in members:
            c = cls[i]
            nc = fresh.get(c)
            if nc is None:
                nc = fresh[c] = n_classes
                n_classes += 1
            cls[i] = nc
    rep_of_class: dict[int, int] = {}
    reps: list[int] = []
    class_map = []
    for i in range(m):
        r = rep_of_class.get(cls[i])
        if r is None:
            r = rep_of_class[cls[i]] = len(reps)
            reps.append(i)
        class_map.append(r)
    return family.subfamily(reps), class_map


def _minimal_indices(family: SetFamily, k_hint: int | None = None) -> list[int]:
    sets = family.sets
    by_size: list[list[int]] = [[] for _ in range(max((len(s) for s in sets), default=0) + 1)]
    for i, s in enumerate(sets):
        by_size[len(s)].append(i)
    order = [i for bucket in by_size for i in bucket]
    alive = [True] * len(sets)
    mark = [-1] * family.universe_size
    minimal = []
    for i in order:
        if not alive[i]:
            continue
        # the smallest surviving set is inclusion-minimal
        minimal.append(i)
        if k_hint is not None and len(minimal) > k_hint:
            raise GraphError(f"more than {k_hint} inclusion-minimal sets")
        for e in sets[i]:
            mark[e] = i
        size = len(sets[i])
        for j in order:
            if alive[j] and len(sets[j]) >= size:
                hits = 0
                for e in sets[j]:
                    if mark[e] == i:
                        hits += 1
                if hits == size:
                    alive[j] = False
    return sorted(minimal)


def inclusion_minimal(family: SetFamily, k_hint: int | None = None) -> SetFamily:
    """Inclusion-minimal members of a family of pairwise distinct sets.

    Each round takes a smallest surviving set (lowest index on ties), marks
    its elements and deletes all of its supersets with one scan.  ``k_hint``
    bounds the number of minimal sets; exceeding it raises.
    """
    return family.subfamily(_minimal_indices(family, k_hint))


def split_ov_solve(inst: SplitOVInstance) -> tuple[int, int] | None:
    """Indices ``(a, b)`` into the two families with disjoint sets, or None."""
    fa, fb = inst.family_a, inst.family_b
    if fa.universe_size != fb.universe_size:
        raise GraphError("universe mismatch")
    if not fa.sets or not fb.sets:
        return None
    reduced, class_map = twin_reduce(fa)
    rep_to_orig = {}
    for orig, rep in enumerate(class_map):
        rep_to_orig.setdefault(rep, orig)
    mark = [-1] * fa.universe_size
    for r in _minimal_indices(reduced):
        a = reduced.sets[r]
        if not a:
            return rep_to_orig[r], 0
        for e in a:
            mark[e] = r
        for j, b in enumerate(fb.sets):
            for e in b:
                if mark[e] == r:
                    break
            else:
                return rep_to_orig[r], j
    return None


def split_ov_bruteforce(inst: SplitOVInstance) -> tuple[int, int] | None:
    """Quadratic all-pairs disjointness check."""
    bsets = [set(b) for b in inst.family_b.sets]
    for i, a in enumerate(inst.family_a.sets):
        for j, b in enumerate(bsets):
            if b.isdisjoint(a):
                return i, j
    return None


def split_asteroidal_check(g: Graph, A: Iterable[int]) -> bool:
    """True iff the open neighbourhoods of the stable vertices in A are pairwise incomparable.

    For |A| >= 3 inside the stable set of a split graph, this is exactly the
    asteroidal-set condition.
    """
    A = sorted(set(A))
    if len(A) < 3:
        raise GraphError("need at least three vertices")
    for v in A:
        g.check_vertex(v)
    for i, a in enumerate(A):
        for b in A[i + 1:]:
            if g.has_edge(a, b):
                raise GraphError(f"{a} and {b} are adjacent; A must be independent")
    nbrs = [g.adj_sets[a] for a in A]
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            if nbrs[i] <= nbrs[j] or nbrs[j] <= nbrs[i]:
                return False
    return True


# -- file format -------------------------------------------------------------

def write_family(family: SetFamily, out: TextIO) -> None:
    out.write(f"{family.universe_size} {len(family.sets)}\n")
    for s in family.sets:
        out.write(" ".join(map(str, (len(s), *s))) + "\n")


def format_family(family: SetFamily) -> str:
    import io

    buf = io.StringIO()
    write_family(family, buf)
    return buf.getvalue()


def read_family(stream: TextIO | Iterable[str]) -> SetFamily:
    """Parse ``universe_size num_sets`` then one ``size e1 e2 ...`` line per set."""
    rows = []
    header = None
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise FamilyFormatError(f"line {lineno}: non-integer token") from None
        if header is None:
            if len(nums) != 2 or min(nums) < 0:
                raise FamilyFormatError(f"line {lineno}: expected 'universe_size num_sets'")
            header = nums
            continue
        if not nums or nums[0] != len(nums) - 1:
            raise FamilyFormatError(f"line {lineno}: set size does not match element count")
        rows.append((lineno, nums[1:]))
    if header is None:
        raise FamilyFormatError("missing header")
    universe, count = header
    if len(rows) != count:
        raise FamilyFormatError(f"header announces {count} sets, found {len(rows)}")
    for lineno, elems in rows:
        if len(set(elems)) != len(elems) or any(not 0 <= e < universe for e in elems):
            raise FamilyFormatError(f"line {lineno}: invalid elements")
    return SetFamily(universe, (e for _, e in rows))
