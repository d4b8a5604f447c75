import random

import pytest
from hypothesis import given, strategies as st

from conftest import graph_of
from drawiso import reconstruction as rec
from drawiso.characteristics import crossing_pairs, rotation_system
from drawiso.generate import random_drawing
from drawiso.isomorphism import admissible_relabelings
from drawiso.model import DrawingSyntaxError, invert, relabel
from drawiso.reconstruction import (
    K33,
    BranchConflict,
    InconsistentSort,
    K33CeCatalog,
    Lemma3Violation,
    UnknownCeConfiguration,
    bipartite_rs_from_ce,
    build_k33_catalog,
    format_ce,
    format_rotations,
    k33_entries,
    k33_rs_from_ce,
    k33_subdrawings,
    multipartite_rs_from_ce,
    parse_ce,
    same_up_to_inversion,
)


def _reconstructs(d, cat, stats=None):
    rs = multipartite_rs_from_ce(d.graph, crossing_pairs(d), cat, stats)
    return same_up_to_inversion(d.graph, rs, rotation_system(d))


def test_single_drawing_catalog(corpus):
    cat = build_k33_catalog([corpus["fig17/left"]])
    assert cat.processed == 72
    assert 0 < len(cat) <= 72
    assert len(K33CeCatalog()) == 0


def test_entries_are_pinned(corpus):
    for key, rs in k33_entries(corpus["fig11/left"]):
        assert rs["r1"] == ("b1", "b2", "b3")


@pytest.mark.parametrize("name", ["fig17/left", "fig17/right", "fig11/left", "fig11/right"])
def test_k33_from_ce(name, corpus, full_catalog):
    d = corpus[name]
    rs = k33_rs_from_ce(crossing_pairs(d), full_catalog, d.graph)
    assert same_up_to_inversion(d.graph, rs, rotation_system(d))
    assert rs[d.graph.classes[0][1][0]] == d.graph.classes[1][1]


def test_plane_k33_is_unknown(full_catalog):
    # every drawing of K3,3 has a crossing, so no entry has empty CE
    with pytest.raises(UnknownCeConfiguration):
        k33_rs_from_ce(frozenset(), full_catalog)


def test_unknown_ce_raises(corpus):
    cat = build_k33_catalog([corpus["fig17/left"]])
    other = corpus["fig11/left"]
    if any(k == rec._as_standard(other)[0] for k, _ in k33_entries(corpus["fig17/left"])):
        pytest.skip("both drawings share a CE class")
    with pytest.raises(UnknownCeConfiguration):
        k33_rs_from_ce(crossing_pairs(other), cat, other.graph)


def test_mirror_gives_same_output(corpus, full_catalog):
    d = corpus["derived/k44"]
    a = multipartite_rs_from_ce(d.graph, crossing_pairs(d), full_catalog)
    b = multipartite_rs_from_ce(d.graph, crossing_pairs(invert(d)), full_catalog)
    assert a == b


def test_two_classes_delegate(corpus, full_catalog):
    d = corpus["derived/k44"]
    ce = crossing_pairs(d)
    assert multipartite_rs_from_ce(d.graph, ce, full_catalog) == bipartite_rs_from_ce(d.graph, ce, full_catalog)


@pytest.mark.parametrize("name", ["derived/k44", "derived/k333"])
def test_derived_fixtures(name, corpus, fixture_catalog):
    stats = {}
    assert _reconstructs(corpus[name], fixture_catalog, stats)
    assert stats["queries"] > 0


@given(st.integers(0, 10_000), st.sampled_from([(3, 3), (3, 4), (4, 4), (3, 5), (3, 3, 3)]))
def test_random_drawings(full_catalog, seed, sizes):
    d = random_drawing(graph_of(sizes), random.Random(seed))
    assert _reconstructs(d, full_catalog)


def test_query_count_is_small(full_catalog):
    d = random_drawing(graph_of((5, 5)), random.Random(3))
    stats = {}
    assert _reconstructs(d, full_catalog, stats)
    # far fewer than the 100 * 2 K3,3 subconfigurations
    assert stats["queries"] <= 30


def test_rejects_small_classes(corpus, full_catalog):
    d = corpus["fig13/left"]
    with pytest.raises(ValueError):
        multipartite_rs_from_ce(d.graph, crossing_pairs(d), full_catalog)
    with pytest.raises(ValueError):
        k33_rs_from_ce(crossing_pairs(d), full_catalog, d.graph)


def test_catalog_conflict_raises(corpus):
    d = corpus["fig17/left"]
    key, rs = k33_entries(d)[0]
    cat = K33CeCatalog()
    cat.add(key, rs, "a")
    cat.add(key, dict(rs), "b")
    bad = dict(rs)
    bad["r2"] = tuple(reversed(rs["r2"]))
    with pytest.raises(Lemma3Violation) as info:
        cat.add(key, bad, "c")
    assert "a" in str(info.value) and "c" in str(info.value)


def test_enumerated_catalog_is_consistent(k33_enumerated, full_catalog):
    cat = build_k33_catalog(k33_enumerated)
    assert cat.processed == 102 * 72
    assert cat.entries == full_catalog.entries


def test_parallel_build_matches(k33_enumerated):
    one = build_k33_catalog(k33_enumerated[:20])
    two = build_k33_catalog(k33_enumerated[:20], jobs=2)
    assert one.entries == two.entries and one.processed == two.processed


def test_subdrawing_count(corpus):
    d = corpus["derived/k333"]
    # 3 classes, C(3,3) reds against C(6,3) blues
    assert len(list(k33_subdrawings(d))) == 3 * 20


def test_sort_detects_cycles():
    beats = {("a", "b"), ("b", "c"), ("c", "a")}
    with pytest.raises(InconsistentSort):
        rec._sort_around("r", ["a", "b", "c"], lambda x, y: (x, y) in beats)


def test_branch_conflict(corpus, full_catalog, monkeypatch):
    d = corpus["derived/k333"]
    real = rec._bipartite
    calls = []

    def corrupt(reds, blues, oracle):
        rot = real(reds, blues, oracle)
        calls.append(reds)
        if len(calls) == 2:
            v = reds[0]
            r = list(rot[v])
            r[0], r[1] = r[1], r[0]
            rot = dict(rot, **{v: tuple(r)})
        return rot

    monkeypatch.setattr(rec, "_bipartite", corrupt)
    with pytest.raises(BranchConflict):
        multipartite_rs_from_ce(d.graph, crossing_pairs(d), full_catalog)


@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_relabeled_input(full_catalog, seed, rnd):
    d = random_drawing(graph_of((3, 4)), random.Random(seed))
    m = rnd.choice(list(admissible_relabelings(d.graph)))
    assert _reconstructs(relabel(d, m), full_catalog)


def test_ce_text_round_trip(corpus):
    d = corpus["fig17/left"]
    text = format_ce(d.graph, crossing_pairs(d))
    g, ce = parse_ce(text)
    assert g == d.graph
    assert ce == crossing_pairs(d)
    assert format_ce(g, ce) == text
    assert text.splitlines()[0] == "classes: r=3 b=3"


@pytest.mark.parametrize("text", ["x r1-b1 r2-b2\n", "classes: r=3 b=3\nx r1-b1\n",
                                  "classes: r=3 b=3\ny r1-b2 r2-b1\n", ""])
def test_parse_ce_errors(text):
    with pytest.raises(DrawingSyntaxError):
        parse_ce(text)


def test_format_rotations():
    rs = {v: K33.neighbors(v) for v in K33.vertices}
    assert format_rotations(K33, rs)[0] == "rot r1: b1 b2 b3"


def test_same_up_to_inversion(corpus):
    d = corpus["fig17/left"]
    rs = rotation_system(d)
    assert same_up_to_inversion(d.graph, rs, rotation_system(invert(d)))
    a, b = corpus["fig18/left"], corpus["fig18/right"]
    assert not same_up_to_inversion(a.graph, rotation_system(a), rotation_system(b))
