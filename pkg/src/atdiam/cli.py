"""Command-line front end: one JSON object per computation on stdout.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from . import generators as gen
from . import oracles
from .atfree import atfree_all_eccentricities
from .chordal import (
    DiameterVerdict,
    diameter_dominating_sp,
    diameter_dominating_triple,
    two_sweep_estimate,
)
from .graph import Graph, GraphError, diameter_naive, eccentricities_naive
from .io import parse_graph, parse_labeled_edges, write_graph
from .lexbfs import is_chordal
from .splitov import SplitOVInstance, read_family, split_ov_bruteforce, split_ov_solve, write_family

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

# class checks under --verify are cubic; skip them above this order
VERIFY_CLASS_LIMIT = 400
VERIFY_DSP_LIMIT = 20


@dataclass
class RunResult:
    op: str
    input: dict
    result: dict
    verdict: str | None = None
    assumption: str | None = None
    wall_time: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "RunResult":
        return cls(**json.loads(line))


@dataclass
class _Ctx:
    quiet: bool = False
    mismatches: list[str] = field(default_factory=list)

    def emit(self, res: RunResult, summary: str) -> None:
        print(res.to_json(), flush=True)
        if not self.quiet:
            print(summary, file=sys.stderr)

    def mismatch(self, msg: str) -> None:
        self.mismatches.append(msg)
        print(f"verify: {msg}", file=sys.stderr)


# -- input -------------------------------------------------------------------

def _load(args) -> tuple[Graph, dict]:
    src = sys.stdin if args.file == "-" else args.file
    if args.format == "labeled":
        g, _ = parse_labeled_edges(src)
    else:
        g = parse_graph(src, args.format)
    return g, {"file": args.file, "n": g.n, "m": g.m}


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("auto", "edgelist", "dimacs", "labeled"), default="auto")


# -- gen ---------------------------------------------------------------------

RANDOM_FAMILIES = {"interval", "chordal", "split", "atfree", "chordal-spider", "ovfams"}
FAMILY_ARITY = {
    "path": 1, "cycle": 1, "complete": 1, "star": 1, "spider": 2, "three_sun": 0, "b1": 0,
    "interval": 1, "chordal": 1, "split": 1, "atfree": 1, "chordal-spider": 2,
    "hvc": 1, "hhelly": 1, "ovfams": 3,
}


def _cmd_gen(args, ctx: _Ctx) -> int:
    fam = args.family
    arity = FAMILY_ARITY[fam]
    if len(args.params) != arity:
        raise GraphError(f"{fam} takes {arity} integer parameter(s), got {len(args.params)}")
    if fam in RANDOM_FAMILIES and args.seed is None:
        raise GraphError(f"--seed is required for {fam}")
    p, seed = args.params, args.seed
    t0 = time.perf_counter()
    extra: dict[str, Any] = {}
    if fam == "ovfams":
        if not args.output:
            raise GraphError("ovfams needs -o PREFIX")
        import random

        fams = gen.random_ov_families(random.Random(seed), p[0], p[1], p[2], args.density)
        for tag, f in (("A", fams.A), ("B", fams.B)):
            with open(f"{args.output}.{tag}.fam", "w") as fh:
                write_family(f, fh)
        res = RunResult("gen", {"family": fam, "params": p, "seed": seed},
                        {"files": [f"{args.output}.A.fam", f"{args.output}.B.fam"]},
                        wall_time=time.perf_counter() - t0)
        ctx.emit(res, f"wrote {args.output}.A.fam and {args.output}.B.fam")
        return EXIT_OK
    if fam in gen.BASIC:
        g = gen.basic(fam, *p)
    elif fam == "interval":
        g = gen.random_interval(p[0], seed)
    elif fam == "chordal":
        g = gen.random_chordal(p[0], seed)
    elif fam == "split":
        g = gen.random_split(p[0], args.density, seed)
    elif fam == "atfree":
        g = gen.random_atfree(p[0], seed)
    elif fam == "chordal-spider":
        g, tips = gen.random_chordal_spider(p[0], p[1], seed)
        extra["tips"] = tips
    elif fam == "hvc":
        g = gen.h_abc(gen.vc_family(p[0]))
    else:
        g = gen.h_abc(gen.helly_family(p[0]))
    if not args.output:
        write_graph(g, sys.stdout)
        return EXIT_OK
    with open(args.output, "w") as fh:
        write_graph(g, fh)
    res = RunResult("gen", {"family": fam, "params": p, "seed": seed},
                    {"file": args.output, "n": g.n, "m": g.m, **extra},
                    wall_time=time.perf_counter() - t0)
    ctx.emit(res, f"{fam}{tuple(p)}: n={g.n} m={g.m} -> {args.output}")
    return EXIT_OK


# -- ecc / diam ----------------------------------------------------------------

def _check_at_free(g: Graph, ctx: _Ctx) -> None:
    if g.n <= VERIFY_CLASS_LIMIT:
        at = oracles.is_at_free(g)
        if not at.at_free:
            ctx.mismatch(f"input is not AT-free, asteroidal triple {list(at.witness)}")


def _cmd_ecc(args, ctx: _Ctx) -> int:
    g, desc = _load(args)
    t0 = time.perf_counter()
    if args.algo == "atfree":
        ecc = list(atfree_all_eccentricities(g).ecc)
    else:
        ecc = eccentricities_naive(g)
    elapsed = time.perf_counter() - t0
    if args.verify:
        if args.algo == "atfree":
            _check_at_free(g, ctx)
        truth = eccentricities_naive(g)
        bad = [v for v in range(g.n) if ecc[v] != truth[v]]
        if bad:
            ctx.mismatch(f"{len(bad)} eccentricities differ from BFS, first at vertex {bad[0]}")
    res = RunResult("ecc", desc, {"algo": args.algo, "ecc": ecc, "diameter": max(ecc, default=0)},
                    wall_time=elapsed)
    ctx.emit(res, f"ecc[{args.algo}] n={g.n} m={g.m} diameter={max(ecc, default=0)} ({elapsed:.3f}s)")
    return EXIT_MISMATCH if ctx.mismatches else EXIT_OK


def _verify_verdict(g: Graph, verdict: DiameterVerdict, assume: str | None, ctx: _Ctx) -> None:
    truth = diameter_naive(g)
    if not verdict.contains(truth):
        ctx.mismatch(f"verdict {verdict.kind} {list(verdict.candidates)} excludes diameter {truth}")
    if g.n <= VERIFY_CLASS_LIMIT and not is_chordal(g).chordal:
        ctx.mismatch("input is not chordal")
    if assume == "domsp" and g.n <= VERIFY_DSP_LIMIT:
        if oracles.has_dominating_shortest_path(g).status == "no":
            ctx.mismatch("input has no dominating shortest path")


def _cmd_diam(args, ctx: _Ctx) -> int:
    g, desc = _load(args)
    t0 = time.perf_counter()
    assume = None
    if args.algo == "naive":
        d = diameter_naive(g)
        verdict = DiameterVerdict("exact", d, assumption="brute-force")
    elif args.algo == "2sweep":
        verdict = two_sweep_estimate(g, unchecked=args.unchecked)[2]
    else:
        assume = {"domsp": "domsp", "domtriple": "domtriple"}.get(args.algo, args.assume)
        fn = diameter_dominating_sp if assume == "domsp" else diameter_dominating_triple
        verdict = fn(g, resolve=args.resolve, unchecked=args.unchecked)
    elapsed = time.perf_counter() - t0
    if args.verify:
        _verify_verdict(g, verdict, assume, ctx)
    payload = verdict.to_dict()
    res = RunResult("diam", desc, {"algo": args.algo, **payload}, verdict=verdict.kind,
                    assumption=verdict.assumption, wall_time=elapsed)
    shown = verdict.value if verdict.exact else set(verdict.candidates)
    ctx.emit(res, f"diam[{args.algo}] {verdict.kind} {shown} under {verdict.assumption} ({elapsed:.3f}s)")
    return EXIT_MISMATCH if ctx.mismatches else EXIT_OK


# -- check ---------------------------------------------------------------------

def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise GraphError(f"bad vertex list {text!r}") from None


def _cmd_check(args, ctx: _Ctx) -> int:
    g, desc = _load(args)
    t0 = time.perf_counter()
    prop = args.prop
    if prop == "atfree":
        r = oracles.is_at_free(g)
        out = {"value": r.at_free, "witness": list(r.witness) if r.witness else None}
    elif prop == "kat":
        r = oracles.is_k_at_free(g, args.k)
        out = {"k": args.k, "value": r.at_free, "witness": list(r.witness) if r.witness else None}
    elif prop == "chordal":
        r = is_chordal(g)
        out = {"value": r.chordal, "cycle": list(r.cycle) if r.cycle else None}
    elif prop == "split":
        r = oracles.is_split(g)
        out = {"value": r.is_split, "clique": list(r.clique), "stable": list(r.stable)}
    elif prop == "b1free":
        r = oracles.is_b1_free(g, args.cap)
        out = {"value": r.free, "witness": list(r.witness) if r.witness else None}
    elif prop == "dompair":
        g.check_vertex(args.u)
        g.check_vertex(args.v)
        out = {"pair": [args.u, args.v], "value": oracles.is_dominating_pair(g, args.u, args.v)}
    elif prop == "domtarget":
        D = _vertex_list(args.vertices)
        out = {"target": D, "value": oracles.is_dominating_target(g, D)}
    else:
        out = {"value": oracles.asteroidal_number(g, args.cap)}
    elapsed = time.perf_counter() - t0
    res = RunResult("check", desc, {"property": prop, **out}, wall_time=elapsed)
    ctx.emit(res, f"check {prop}: {out['value']}")
    return EXIT_OK


# -- splitov / hyper -----------------------------------------------------------

def _cmd_splitov(args, ctx: _Ctx) -> int:
    with open(args.family_a) as fa, open(args.family_b) as fb:
        inst = SplitOVInstance.from_families(read_family(fa), read_family(fb))
    t0 = time.perf_counter()
    pair = split_ov_solve(inst)
    elapsed = time.perf_counter() - t0
    if args.verify and (pair is None) != (split_ov_bruteforce(inst) is None):
        ctx.mismatch("solver and all-pairs check disagree on existence")
    if pair is not None and set(inst.family_a[pair[0]]) & set(inst.family_b[pair[1]]):
        ctx.mismatch(f"reported pair {pair} is not disjoint")
    out: dict[str, Any] = {"found": pair is not None}
    if pair is not None:
        out.update(a=pair[0], b=pair[1], set_a=list(inst.family_a[pair[0]]), set_b=list(inst.family_b[pair[1]]))
    desc = {"family_a": args.family_a, "family_b": args.family_b, "universe": inst.clique_size,
            "ell": inst.family_a.ell + inst.family_b.ell}
    res = RunResult("splitov", desc, out, wall_time=elapsed)
    ctx.emit(res, f"splitov: {'pair ' + str(pair) if pair else 'no disjoint pair'}")
    return EXIT_MISMATCH if ctx.mismatches else EXIT_OK


def _cmd_hyper(args, ctx: _Ctx) -> int:
    g, desc = _load(args)
    h = oracles.neighborhood_hypergraph(g)
    t0 = time.perf_counter()
    if args.param == "vc":
        value: Any = oracles.vc_dimension(h, args.cap)
        shown = str(value)
    else:
        r = oracles.helly_number(h, args.cap)
        value = r.value if r.value is not None else f">{args.cap}"
        shown = str(r)
    res = RunResult("hyper", desc, {"param": args.param, "cap": args.cap, "value": value},
                    wall_time=time.perf_counter() - t0)
    ctx.emit(res, f"{args.param} of the neighbourhood hypergraph: {shown}")
    return EXIT_OK


# -- bench ---------------------------------------------------------------------

def _cmd_bench(args, ctx: _Ctx) -> int:
    from . import bench

    if args.suite == "atfree":
        sizes = args.sizes or [25_000, 100_000, 400_000]
        rows = bench.atfree_ladder(sizes, seed=args.seed or 0, repeat=args.repeat)
        for r in rows:
            ctx.emit(RunResult("bench", {"suite": "atfree", "m_target": r["m_target"]}, r, wall_time=r["atfree_s"]),
                     f"m={r['m']}: atfree {r['atfree_s']:.2f}s, naive~{r['naive_s_est']:.1f}s")
    else:
        sizes = args.sizes or [2_000, 4_000, 8_000, 16_000]
        rows = bench.splitov_ladder(sizes, k=args.k, seed=args.seed or 0, repeat=args.repeat)
        for r in rows:
            ctx.emit(RunResult("bench", {"suite": "splitov", "sets": r["sets"]}, r, wall_time=r["solve_s"]),
                     f"ell={r['ell']}: {r['solve_s'] * 1e3:.1f}ms")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="atdiam", description=__doc__.splitlines()[0])
    ap.add_argument("-q", "--quiet", action="store_true", help="no summary on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph or a pair of set families")
    p.add_argument("family", choices=sorted(FAMILY_ARITY))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("ecc", help="all eccentricities")
    p.add_argument("--algo", choices=("atfree", "naive"), default="atfree")
    p.add_argument("--verify", action="store_true")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_ecc)

    p = sub.add_parser("diam", help="diameter with a certified verdict")
    p.add_argument("--algo", choices=("naive", "2sweep", "3sweep", "domsp", "domtriple"), default="naive")
    p.add_argument("--assume", choices=("domsp", "domtriple"), default="domtriple",
                   help="class hypothesis behind a 3sweep verdict")
    p.add_argument("--resolve", action="store_true", help="settle open cases by brute force")
    p.add_argument("--unchecked", action="store_true", help="skip the chordality precheck")
    p.add_argument("--verify", action="store_true")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_diam)

    p = sub.add_parser("check", help="structural predicates")
    csub = p.add_subparsers(dest="prop", required=True)
    for name in ("atfree", "chordal", "split"):
        _add_graph_input(csub.add_parser(name))
    q = csub.add_parser("b1free")
    q.add_argument("--cap", type=int, default=500)
    _add_graph_input(q)
    q = csub.add_parser("dompair")
    q.add_argument("u", type=int)
    q.add_argument("v", type=int)
    _add_graph_input(q)
    q = csub.add_parser("domtarget")
    q.add_argument("vertices", help="comma-separated vertex ids")
    _add_graph_input(q)
    q = csub.add_parser("kat")
    q.add_argument("k", type=int)
    _add_graph_input(q)
    q = csub.add_parser("astnum")
    q.add_argument("--cap", type=int, default=30)
    _add_graph_input(q)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("splitov", help="find a disjoint pair across two set families")
    p.add_argument("family_a")
    p.add_argument("family_b")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_splitov)

    p = sub.add_parser("hyper", help="VC-dimension or Helly number of the neighbourhood hypergraph")
    p.add_argument("param", choices=("vc", "helly"))
    p.add_argument("--cap", type=int, default=6)
    _add_graph_input(p)
    p.set_defaults(func=_cmd_hyper)

    p = sub.add_parser("bench", help="timing ladders")
    p.add_argument("suite", choices=("atfree", "splitov"))
    p.add_argument("--sizes", type=int, nargs="+")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--k", type=int, default=4, help="minimal-set count for the splitov suite")
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    ctx = _Ctx(quiet=args.quiet)
    try:
        return args.func(args, ctx)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
