import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_case
from drawiso.characteristics import characteristics
from drawiso.generate import all_drawings
from drawiso.isomorphism import (
    _PREDICATES,
    KINDS,
    GraphMismatch,
    GraphShapeMismatch,
    admissible_relabelings,
    ce_iso,
    co_iso,
    cr_iso,
    ers_iso,
    iso_report,
    labeled_iso,
    pruned_relabelings,
    rs_iso,
    strong_iso,
    strong_iso_by_maps,
    unlabeled_iso,
)
from drawiso.model import PartitionedGraph, invert, relabel


@pytest.fixture(scope="module")
def k23_all():
    return all_drawings(PartitionedGraph.from_sizes(r=2, b=3))


def test_rs_examples(corpus):
    assert rs_iso(corpus["fig10/left"], corpus["fig10/right"])
    assert not rs_iso(corpus["fig18/left"], corpus["fig18/right"])


def test_ce_examples(corpus):
    assert not ce_iso(corpus["fig10/left"], corpus["fig10/right"])
    assert ce_iso(corpus["fig18/left"], corpus["fig18/right"])


def test_cr_examples(corpus):
    assert cr_iso(corpus["fig13/left"], corpus["fig13/right"])
    assert not cr_iso(corpus["fig15/left"], corpus["fig15/right"])


def test_ers_examples(corpus):
    assert not ers_iso(corpus["fig13/left"], corpus["fig13/right"])
    assert ers_iso(corpus["fig17/left"], corpus["fig17/right"])


def test_co_examples(corpus):
    assert co_iso(corpus["fig20/left"], corpus["fig20/right"])
    assert not co_iso(corpus["fig17/left"], corpus["fig17/right"])


def test_strong_examples(corpus):
    assert not strong_iso(corpus["fig13/left"], corpus["fig13/right"])
    assert not strong_iso(corpus["fig05/e"], corpus["fig05/f"])


def test_self_and_mirror_pairs(corpus):
    for d in corpus.values():
        for other in (d, invert(d)):
            assert all(labeled_iso(d, other, k) for k in KINDS)


def test_graph_mismatch(corpus):
    with pytest.raises(GraphMismatch):
        rs_iso(corpus["fig13/left"], corpus["fig17/left"])
    with pytest.raises(GraphShapeMismatch):
        unlabeled_iso(corpus["fig13/left"], corpus["fig17/left"], "ce")


@pytest.mark.parametrize("sizes, count", [
    ({"r": 3, "b": 3}, 72),
    ({"r": 2, "b": 3}, 12),
    ({"r": 1, "b": 1}, 2),
    ({"r": 1, "b": 1, "c": 2}, 4),
    ({"a": 1, "b": 1, "c": 1, "d": 1}, 24),
])
def test_admissible_relabelings(sizes, count):
    g = PartitionedGraph.from_sizes(**sizes)
    maps = list(admissible_relabelings(g))
    assert len(maps) == count
    assert len({tuple(sorted(m.items())) for m in maps}) == count
    for m in maps:
        assert sorted(m.values()) == sorted(g.vertices)
        for _, vs in g.classes:
            assert len({g.class_of(m[v]) for v in vs}) == 1


def test_unlabeled_fig05_pair(corpus):
    e, f = corpus["fig05/e"], corpus["fig05/f"]
    ok, witness = unlabeled_iso(e, f, "ce")
    assert ok and witness is not None
    assert ce_iso(e, relabel(f, witness, e.graph))
    assert unlabeled_iso(e, f, "co") == (False, None)
    # no labeling at all, not only no crossing-degree preserving one
    for m in admissible_relabelings(f.graph, e.graph):
        assert not co_iso(e, relabel(f, m, e.graph))


def test_unlabeled_fig13_strong(corpus):
    ok, witness = unlabeled_iso(corpus["fig13/left"], corpus["fig13/right"], "strong")
    assert ok


@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_unlabeled_relabel_is_strong(seed, rnd):
    d = random_case(seed)
    maps = list(admissible_relabelings(d.graph))
    m = rnd.choice(maps)
    x = relabel(d, m)
    ok, witness = unlabeled_iso(d, x, "strong")
    assert ok
    assert strong_iso(d, relabel(x, witness, d.graph))


@given(st.integers(0, 10_000))
def test_cone_on_random_pairs(seed):
    rng = random.Random(seed)
    d = random_case(seed)
    e = relabel(d, rng.choice(list(admissible_relabelings(d.graph))))
    rep = iso_report(d, e)
    assert rep.cone_violations() == []


def test_iso_report_examples(corpus):
    r19 = iso_report(corpus["fig19/left"], corpus["fig19/right"])
    assert (r19.cr, r19.ce, r19.rs, r19.co) == (True, True, False, False)
    r16 = iso_report(corpus["fig16/left"], corpus["fig16/right"])
    assert (r16.ce, r16.rs, r16.cr, r16.co) == (True, True, False, False)
    same = iso_report(corpus["fig16/left"], corpus["fig16/left"])
    assert all(same.as_dict().values())
    assert same.lines()[0] == "rs=true"


def test_iso_report_unlabeled_witnesses(corpus):
    rep = iso_report(corpus["fig05/e"], corpus["fig05/f"], labeled=False)
    assert set(rep.witnesses) == {k for k, v in rep.as_dict().items() if v}
    assert rep.cone_violations() == []


def test_predicates_are_equivalences(k23_all):
    chars = [characteristics(d) for d in k23_all[:40]]
    for kind, pred in _PREDICATES.items():
        for a, b, c in itertools.combinations(chars, 3):
            if pred(a, b) and pred(b, c):
                assert pred(a, c), kind
        for a, b in itertools.combinations(chars, 2):
            assert pred(a, b) == pred(b, a)


def test_maps_oracle_on_all_k23(k23_all):
    # every labeled drawing of K2,3 against every other with the same crossing pairs
    chars = [characteristics(d) for d in k23_all]
    checked = 0
    for (d1, c1), (d2, c2) in itertools.combinations(zip(k23_all, chars), 2):
        if c1.ce != c2.ce:
            continue
        checked += 1
        assert strong_iso_by_maps(d1, d2) == _PREDICATES["strong"](c1, c2)
    assert checked > 100


def test_pruned_stream_is_complete_for_ce(k23_all):
    rng = random.Random(7)
    for _ in range(60):
        d1, d2 = rng.sample(k23_all, 2)
        want = any(ce_iso(d1, relabel(d2, m, d1.graph))
                   for m in admissible_relabelings(d2.graph, d1.graph))
        assert unlabeled_iso(d1, d2, "ce")[0] == want
        assert len(list(pruned_relabelings(d2, d1))) <= 12


@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_unlabeled_invariant_under_relabeling(seed, rnd):
    d1 = random_case(seed)
    d2 = random_case(seed + 1)
    if sorted(d1.graph.sizes) != sorted(d2.graph.sizes) or len(d1.vertices) > 6:
        return
    m = rnd.choice(list(admissible_relabelings(d2.graph)))
    for kind in ("ce", "cr", "co"):
        assert unlabeled_iso(d1, d2, kind)[0] == unlabeled_iso(d1, relabel(d2, m), kind)[0]
