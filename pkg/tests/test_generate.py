import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import graph_of
from drawiso.characteristics import crossing_pairs, rotation_system
from drawiso.generate import (
    all_drawings,
    ce_complete,
    ce_may_cross,
    connected_edge_order,
    copy_extensions,
    grow,
    make_accept,
    random_drawing,
)
from drawiso.isomorphism import admissible_relabelings
from drawiso.model import PartitionedGraph, induced_subdrawing, invert, relabel, validate


# counts of labeled simple drawings, produced by the exhaustive generator and
# cross-checked below by closure under relabeling and mirroring
@pytest.mark.parametrize("sizes, count", [
    ((1, 3), 2),
    ((2, 2), 5),
    ((1, 1, 2), 6),
    ((1, 1, 1, 1), 8),
    ((2, 3), 86),
])
def test_all_drawings_counts(sizes, count):
    g = graph_of(sizes)
    ds = all_drawings(g)
    assert len(ds) == count
    assert len(set(ds)) == count
    assert all(validate(d).realizable for d in ds)
    closed = set(ds)
    for d in ds:
        assert invert(d) in closed
        for m in admissible_relabelings(g):
            assert relabel(d, m) in closed


def test_k4_drawings_have_at_most_one_crossing():
    ds = all_drawings(graph_of((1, 1, 1, 1)))
    assert sorted(d.crossing_count for d in ds) == [0, 0, 1, 1, 1, 1, 1, 1]


def test_enumerated_k33_orbits(k33_enumerated):
    # the shipped representatives: pairwise distinct orbits covering every labeled drawing
    g = PartitionedGraph.from_sizes(r=3, b=3)
    maps = list(admissible_relabelings(g))
    seen = set()
    for d in k33_enumerated:
        orbit = {relabel(x, m) for x in (d, invert(d)) for m in maps}
        assert not orbit & seen
        seen |= orbit
    assert len(k33_enumerated) == 102
    assert len(seen) == 12228
    counts = {}
    for d in k33_enumerated:
        counts[d.crossing_count] = counts.get(d.crossing_count, 0) + 1
    assert counts == {1: 1, 3: 9, 5: 33, 7: 48, 9: 11}


def test_connected_edge_order():
    g = graph_of((2, 2, 3))
    order = connected_edge_order(g)
    assert sorted(order) == sorted(g.edges)
    placed = set(order[0])
    for e in order[1:]:
        assert placed & set(e)
        placed |= set(e)


@given(st.integers(0, 10_000), st.sampled_from([(2, 3), (3, 3), (2, 2, 2), (1, 2, 3), (4, 3)]))
def test_random_drawing_is_valid(seed, sizes):
    d = random_drawing(graph_of(sizes), random.Random(seed))
    assert validate(d).realizable


def test_random_drawing_is_reproducible():
    g = graph_of((3, 3, 2))
    assert random_drawing(g, random.Random(4)) == random_drawing(g, random.Random(4))


def test_random_drawing_crossing_cap():
    g = graph_of((3, 4))
    for seed in range(10):
        d = random_drawing(g, random.Random(seed), detour=0.6, max_crossings_per_edge=2)
        assert max(len(x) for x in d.crossings.values()) <= 2


def test_ce_constrained_growth(corpus):
    target = corpus["fig17/left"]
    g = target.graph
    ce = crossing_pairs(target)
    found = list(grow(g, may_cross=ce_may_cross(ce), accept=ce_complete(ce)))
    assert found
    assert target in found
    assert all(crossing_pairs(d) == ce for d in found)


def test_make_accept_pins_rotations(corpus):
    target = corpus["fig15/left"]
    g = target.graph
    ce = crossing_pairs(target)
    accept = make_accept(g, rotations=rotation_system(target),
                         crossing_rots=target.crossing_map(), extra=ce_complete(ce))
    found = list(grow(g, may_cross=ce_may_cross(ce), accept=accept))
    assert target in found
    for d in found:
        assert d.rotations == target.rotations
        assert d.crossing_map() == target.crossing_map()


def test_copy_extensions(corpus):
    d = corpus["fig13/left"]
    exts = list(itertools.islice(copy_extensions(d, "b3"), 5))
    assert exts
    for x in exts:
        assert validate(x).realizable
        assert x.graph.sizes == (2, 4)
        assert induced_subdrawing(x, d.vertices) == d
