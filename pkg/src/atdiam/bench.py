"""Timing ladders shared by the CLI bench command and the acceptance suite."""

from __future__ import annotations

import gc
import random
import statistics
import time
from typing import Callable

from .atfree import atfree_all_eccentricities
from .generators import random_interval
from .graph import Graph, _bfs
from .splitov import SetFamily, SplitOVInstance, split_ov_solve

# edges per vertex of random_interval at this mean length is about 12.5
LADDER_MEAN_LENGTH = 12.5
EDGES_PER_VERTEX = 12.5


def median_time(fn: Callable[[], object], repeat: int = 1) -> float:
    """Median wall time of ``repeat`` calls, collector paused as timeit does."""
    times = []
    enabled = gc.isenabled()
    try:
        for _ in range(repeat):
            gc.collect()
            gc.disable()
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
            if enabled:
                gc.enable()
    finally:
        if enabled:
            gc.enable()
    return statistics.median(times)


def interval_for_edges(m_target: int, seed: int) -> Graph:
    n = max(2, round(m_target / EDGES_PER_VERTEX))
    return random_interval(n, seed, mean_length=LADDER_MEAN_LENGTH)


def naive_time_estimate(g: Graph, sample: int, seed: int = 0) -> float:
    """Time of n BFS runs, extrapolated from ``sample`` random sources."""
    rng = random.Random(seed)
    sources = rng.sample(range(g.n), min(sample, g.n))
    t0 = time.perf_counter()
    for s in sources:
        max(_bfs(g.adj, s))
    return (time.perf_counter() - t0) * g.n / len(sources)


def atfree_ladder(sizes, seed: int = 0, repeat: int = 1, naive_sample: int = 40) -> list[dict]:
    rows = []
    for m_target in sizes:
        g = interval_for_edges(m_target, seed)
        prof = None

        def run():
            nonlocal prof
            prof = atfree_all_eccentricities(g)

        t = median_time(run, repeat)
        rows.append({
            "m_target": m_target, "n": g.n, "m": g.m, "atfree_s": t,
            "sources": len(prof.hitters.union), "diameter": prof.diameter,
            "naive_s_est": naive_time_estimate(g, naive_sample, seed),
        })
    return rows


def splitov_instance(k: int, n_sets: int, universe: int, seed: int) -> SplitOVInstance:
    """k minimal A-sets plus supersets of them; every B-set meets every A-set.

    The answer is always "none", so the solver scans all of B once per
    minimal set and its cost is governed by k and the total size.
    """
    rng = random.Random(seed)
    if universe <= k:
        raise ValueError("universe must exceed k")
    extra = list(range(k, universe))
    a_sets = [[i] for i in range(k)]
    seen = {(i,) for i in range(k)}
    while len(a_sets) < n_sets:
        s = tuple(sorted({rng.randrange(k)} | set(rng.sample(extra, rng.randint(1, 4)))))
        if s not in seen:
            seen.add(s)
            a_sets.append(list(s))
    b_sets = [list(range(k)) + rng.sample(extra, rng.randint(0, 4)) for _ in range(n_sets)]
    return SplitOVInstance.from_families(SetFamily(universe, a_sets), SetFamily(universe, b_sets))


def splitov_ladder(sizes, k: int = 4, seed: int = 0, repeat: int = 5) -> list[dict]:
    """Median solve time per size; runs are interleaved across sizes so that
    machine jitter spreads over the whole ladder instead of one rung."""
    instances = [splitov_instance(k, n_sets, universe=max(64, n_sets // 4), seed=seed) for n_sets in sizes]
    times: list[list[float]] = [[] for _ in instances]
    for _ in range(repeat):
        for inst, bucket in zip(instances, times):
            bucket.append(median_time(lambda: split_ov_solve(inst)))
    return [
        {"sets": n_sets, "k": k, "ell": inst.family_a.ell + inst.family_b.ell, "solve_s": statistics.median(ts)}
        for n_sets, inst, ts in zip(sizes, instances, times)
    ]
