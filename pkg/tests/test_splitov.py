import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atdiam import generators as gen
from atdiam import oracles
from atdiam.graph import Graph, GraphError
from atdiam.splitov import (
    FamilyFormatError,
    SetFamily,
    SplitOVInstance,
    format_family,
    inclusion_minimal,
    read_family,
    split_asteroidal_check,
    split_ov_bruteforce,
    split_ov_solve,
    twin_reduce,
)
from support import minimal_by_definition, random_family_sets, split_corpus

families = st.integers(1, 8).flatmap(
    lambda u: st.builds(
        SetFamily, st.just(u), st.lists(st.frozensets(st.integers(0, u - 1)), max_size=12)
    )
)


def inst(a, b, universe):
    return SplitOVInstance.from_families(SetFamily(universe, a), SetFamily(universe, b))


def test_set_family_validation():
    f = SetFamily(5, [[3, 1], [], [4]])
    assert f.sets == ((1, 3), (), (4,)) and f.ell == 3 and len(f) == 3
    with pytest.raises(GraphError):
        SetFamily(3, [[3]])
    with pytest.raises(GraphError):
        SetFamily(3, [[1, 1]])


def test_twin_reduce_examples():
    reps, cmap = twin_reduce(SetFamily(4, [[1, 2], [1, 2], [3]]))
    assert reps.sets == ((1, 2), (3,)) and cmap == [0, 0, 1]
    distinct = SetFamily(4, [[0], [1], [0, 1], []])
    assert twin_reduce(distinct)[0] == distinct
    reps, cmap = twin_reduce(SetFamily(3, [[0, 2]] * 5))
    assert reps.sets == ((0, 2),) and cmap == [0] * 5
    assert twin_reduce(SetFamily(3, []))[0].sets == ()


@settings(max_examples=300, deadline=None)
@given(families)
def test_twin_reduce_properties(f):
    reps, cmap = twin_reduce(f)
    assert len(set(reps.sets)) == len(reps.sets) == len(set(f.sets))
    for i, r in enumerate(cmap):
        assert reps.sets[r] == f.sets[i]


def test_inclusion_minimal_examples():
    assert inclusion_minimal(SetFamily(4, [[1], [1, 2], [2, 3]])).sets == ((1,), (2, 3))
    anti = SetFamily(4, [[1, 2], [2, 3], [1, 3]])
    assert inclusion_minimal(anti) == anti
    assert inclusion_minimal(SetFamily(4, [[1], [1, 2], [1, 2, 3]])).sets == ((1,),)
    with pytest.raises(GraphError):
        inclusion_minimal(anti, k_hint=2)


@settings(max_examples=300, deadline=None)
@given(families)
def test_inclusion_minimal_matches_definition(f):
    reps, _ = twin_reduce(f)
    got = inclusion_minimal(reps).sets
    assert list(got) == [reps.sets[i] for i in minimal_by_definition(reps.sets)]


def test_solve_examples():
    assert split_ov_solve(inst([[1], [1, 2]], [[2, 3]], 4)) == (0, 0)
    assert split_ov_solve(inst([[1], [2]], [[1, 2]], 4)) is None
    assert split_ov_solve(inst([[0]], [[1]], 3)) == (0, 0)
    assert split_ov_solve(inst([[0, 1], []], [[0]], 2)) == (1, 0)
    assert split_ov_solve(inst([], [[0]], 2)) is None
    with pytest.raises(GraphError):
        SplitOVInstance.from_families(SetFamily(2, []), SetFamily(3, []))


def test_solve_agrees_with_all_pairs():
    rng = random.Random(41)
    found = 0
    for _ in range(300):
        u = rng.randint(1, 12)
        p = rng.uniform(0.1, 0.7)
        i = inst(random_family_sets(rng, rng.randint(0, 15), u, p), random_family_sets(rng, rng.randint(0, 15), u, p), u)
        got = split_ov_solve(i)
        assert (got is None) == (split_ov_bruteforce(i) is None)
        if got is not None:
            assert not set(i.family_a[got[0]]) & set(i.family_b[got[1]])
            found += 1
    assert 30 < found < 270


def test_subset_restriction():
    # a subset of a set disjoint from b is disjoint from b
    rng = random.Random(42)
    for _ in range(500):
        u = rng.randint(1, 10)
        a = {e for e in range(u) if rng.random() < 0.5}
        b = {e for e in range(u) if rng.random() < 0.5}
        sub = {e for e in a if rng.random() < 0.5}
        if not a & b:
            assert not sub & b


def test_from_split_graph():
    g = gen.random_split(12, 0.4, seed=5)
    sp = oracles.is_split(g)
    S = list(sp.stable)
    i = SplitOVInstance.from_split_graph(g, sp.clique, S[:2], S[2:])
    assert i.clique_size == len(sp.clique) and len(i.family_a) == 2
    with pytest.raises(GraphError):
        SplitOVInstance.from_split_graph(gen.path(4), [1, 2], [0], [3, 2])


def _split_from_sets(clique_size, sets):
    edges = [(a, b) for a in range(clique_size) for b in range(a + 1, clique_size)]
    n = clique_size
    for s in sets:
        edges += [(c, n) for c in s]
        n += 1
    return Graph.from_edges(n, edges)


def test_split_asteroidal_examples():
    g = _split_from_sets(4, [[1], [2], [3]])
    assert split_asteroidal_check(g, [4, 5, 6])
    g = _split_from_sets(4, [[1], [1, 2], [3]])
    assert not split_asteroidal_check(g, [4, 5, 6])
    with pytest.raises(GraphError):
        split_asteroidal_check(g, [4, 5])
    with pytest.raises(GraphError):
        split_asteroidal_check(g, [0, 1, 4])


def test_split_asteroidal_agrees_with_oracle():
    rng = random.Random(43)
    checked = 0
    for g in split_corpus(120, 6, 16, seed=44):
        S = list(oracles.is_split(g).stable)
        comps = oracles.avoid_components(g)
        for _ in range(5):
            if len(S) < 3:
                break
            A = rng.sample(S, rng.randint(3, len(S)))
            assert split_asteroidal_check(g, A) == oracles.asteroidal_set_check(g, A, comps)
            checked += 1
    assert checked > 200


def test_minimal_count_bounded_by_asteroidal_number():
    for g in split_corpus(60, 5, 14, seed=45):
        sp = oracles.is_split(g)
        i = SplitOVInstance.from_split_graph(g, sp.clique, sp.stable, [])
        k = len(inclusion_minimal(twin_reduce(i.family_a)[0]))
        if k >= 3:
            assert k <= oracles.asteroidal_number(g)


def test_family_format_roundtrip():
    f = SetFamily(6, [[0, 5], [], [3]])
    text = format_family(f)
    assert text == "6 3\n2 0 5\n0\n1 3\n"
    assert read_family(io.StringIO(text)) == f
    assert format_family(read_family(io.StringIO("# c\n6 3\n2 5 0\n0\n1 3\n"))) == text


@pytest.mark.parametrize("text", ["", "3\n", "3 1\n2 0\n", "3 1\n1 3\n", "3 1\n2 1 1\n", "3 2\n1 0\n", "3 1\n1 a\n"])
def test_family_format_errors(text):
    with pytest.raises(FamilyFormatError):
        read_family(io.StringIO(text))


@settings(max_examples=100, deadline=None)
@given(families)
def test_family_roundtrip_property(f):
    assert read_family(io.StringIO(format_family(f))) == f
