"""Certified 2-/3-sweep diameter procedures for chordal graphs.

Every verdict names the class hypothesis it relies on.  The hypotheses
beyond chordality (a dominating shortest path, a dominating triple) are not
checked here; see :mod:`atdiam.oracles` for exhaustive checkers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, _bfs, diameter_naive
from .lexbfs import is_chordal, lexbfs

EXACT = "exact"
AMBIGUOUS = "ambiguous"
INCONCLUSIVE = "inconclusive"

CHORDAL = "chordal"
DOM_SP = "chordal+dom-shortest-path"
DOM_TRIPLE = "chordal+dom-triple"
BRUTE_FORCE = "brute-force"

# eccentricity from which the dominating-triple certificate is exact
TRIPLE_THRESHOLD = 10


class NotChordalError(GraphError):
    pass


@dataclass(frozen=True)
class DiameterVerdict:
    kind: str
    value: int | None = None
    candidates: tuple[int, ...] = ()
    witness: int | None = None
    witness_ecc: int | None = None
    assumption: str = CHORDAL
    note: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == EXACT:
            if self.value is None:
                raise ValueError("exact verdict needs a value")
            object.__setattr__(self, "candidates", (self.value,))
        elif self.kind in (AMBIGUOUS, INCONCLUSIVE):
            if not 1 <= len(self.candidates) <= 2:
                raise ValueError("candidate set must have one or two elements")
        else:
            raise ValueError(f"unknown verdict kind {self.kind!r}")

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    def contains(self, d: int) -> bool:
        return d in self.candidates

    def to_dict(self) -> dict:
        out = {"verdict": self.kind}
        if self.kind == EXACT:
            out["value"] = self.value
        else:
            out["candidates"] = list(self.candidates)
        out.update(witness=self.witness, witness_ecc=self.witness_ecc, assumption=self.assumption)
        if self.note:
            out["note"] = self.note
        return out


def _exact(value, witness, ecc, assumption, note=None):
    return DiameterVerdict(EXACT, value, witness=witness, witness_ecc=ecc, assumption=assumption, note=note)


def _require_chordal(g: Graph) -> None:
    res = is_chordal(g)
    if not res.chordal:
        raise NotChordalError(f"graph is not chordal (induced cycle {list(res.cycle or ())})")


def _ecc(g: Graph, v: int) -> int:
    return max(_bfs(g.adj, v))


def two_sweep_estimate(g: Graph, unchecked: bool = False, start: int = 0) -> tuple[int, int, DiameterVerdict]:
    """u = terminal of one LexBFS; on chordal graphs e(u) is diam or diam - 1."""
    g.require_connected()
    if not unchecked:
        _require_chordal(g)
    u = lexbfs(g, start).last
    e_u = _ecc(g, u)
    if e_u % 2 == 1 or e_u == 0:
        verdict = _exact(e_u, u, e_u, CHORDAL)
    else:
        verdict = DiameterVerdict(AMBIGUOUS, candidates=(e_u, e_u + 1), witness=u, witness_ecc=e_u,
                                  assumption=CHORDAL)
    return u, e_u, verdict


def three_sweep_estimate(g: Graph, start: int = 0) -> tuple[int, int]:
    """v = terminal of LexBFS(u) where u is the terminal of LexBFS(start); returns (v, e(v))."""
    g.require_connected()
    u = lexbfs(g, start).last
    v = lexbfs(g, u).last
    return v, _ecc(g, v)


def _resolved(g: Graph, v: int, e_v: int) -> DiameterVerdict:
    return _exact(diameter_naive(g), v, e_v, BRUTE_FORCE)


def diameter_dominating_sp(g: Graph, resolve: bool = False, unchecked: bool = False) -> DiameterVerdict:
    """Exact once e(v) >= 3; the 2-versus-3 case is left open unless ``resolve``."""
    g.require_connected()
    if not unchecked:
        _require_chordal(g)
    v, e_v = three_sweep_estimate(g)
    if e_v >= 3:
        # odd values are exact from chordality alone
        return _exact(e_v, v, e_v, CHORDAL if e_v % 2 else DOM_SP)
    if e_v <= 1:
        # a LexBFS terminal is universal only in a complete graph
        return _exact(e_v, v, e_v, CHORDAL)
    if resolve:
        return _resolved(g, v, e_v)
    return DiameterVerdict(
        AMBIGUOUS, candidates=(2, 3), witness=v, witness_ecc=e_v, assumption=DOM_SP,
        note="telling diameter 2 from 3 needs brute force (use resolve)",
    )


def diameter_dominating_triple(g: Graph, resolve: bool = False, unchecked: bool = False) -> DiameterVerdict:
    """Exact once e(v) >= 10, or whenever e(v) is odd."""
    g.require_connected()
    if not unchecked:
        _require_chordal(g)
    v, e_v = three_sweep_estimate(g)
    if e_v >= TRIPLE_THRESHOLD:
        return _exact(e_v, v, e_v, CHORDAL if e_v % 2 else DOM_TRIPLE)
    if e_v % 2 == 1 or e_v <= 1:
        return _exact(e_v, v, e_v, CHORDAL)
    if resolve:
        return _resolved(g, v, e_v)
    return DiameterVerdict(INCONCLUSIVE, candidates=(e_v, e_v + 1), witness=v, witness_ecc=e_v,
                           assumption=DOM_TRIPLE)


@dataclass(frozen=True)
class Decision:
    answer: bool
    threshold: int
    verdict: DiameterVerdict


def decide_diameter_at_least(g: Graph, d: int, unchecked: bool = False) -> Decision:
    """Is diam(g) >= d, for d >= 10, on chordal graphs with a dominating triple."""
    if d < TRIPLE_THRESHOLD:
        raise GraphError(f"threshold must be at least {TRIPLE_THRESHOLD}, got {d}")
    if d == TRIPLE_THRESHOLD:
        # e(u) >= 10 settles it; e(u) = 9 is odd hence exact; e(u) <= 8 bounds diam by 9
        _, e_u, verdict = two_sweep_estimate(g, unchecked)
        return Decision(e_u >= d, d, verdict)
    verdict = diameter_dominating_triple(g, unchecked=unchecked)
    if verdict.exact:
        return Decision(verdict.value >= d, d, verdict)
    # inconclusive means e(v) <= 9, so diam <= 10 < d
    return Decision(False, d, verdict)
