from collections import Counter

from hypothesis import given, strategies as st

from conftest import random_case
from drawiso.characteristics import (
    characteristics,
    crossing_orders,
    crossing_pairs,
    crossing_rotations,
    extended_rotation_system,
    format_characteristic,
    inverse_rotations,
    rotation_system,
)
from drawiso.model import invert, parse_drawing


def _pairs(*items):
    out = set()
    for item in items:
        e, f = item.split("x")
        out.add((tuple(e.split("-")), tuple(f.split("-"))))
    return frozenset(out)


def test_rotation_system_fig17(corpus):
    assert rotation_system(corpus["fig17/left"]) == {
        "r1": ("b1", "b2", "b3"),
        "r2": ("b1", "b3", "b2"),
        "r3": ("b1", "b3", "b2"),
        "b1": ("r1", "r3", "r2"),
        "b2": ("r1", "r2", "r3"),
        "b3": ("r1", "r2", "r3"),
    }


def test_rotation_system_plane_star():
    d = parse_drawing("classes: r=1 b=3\nrot r1: b2 b1 b3\nrot b1: r1\nrot b2: r1\nrot b3: r1\n"
                      "edge r1-b1:\nedge r1-b2:\nedge r1-b3:\n")
    rs = rotation_system(d)
    assert rs["r1"] == ("b1", "b3", "b2")
    assert all(len(rs[b]) == 1 for b in ("b1", "b2", "b3"))


def test_crossing_pairs_fig17(corpus):
    assert crossing_pairs(corpus["fig17/left"]) == _pairs(
        "r1-b2xr2-b1", "r1-b3xr2-b2", "r1-b3xr3-b1", "r1-b3xr3-b2",
        "r2-b2xr3-b1", "r2-b3xr3-b1", "r2-b3xr3-b2")


def test_crossing_pairs_fig15(corpus):
    assert crossing_pairs(corpus["fig15/left"]) == _pairs("r1-b2xr2-b1", "r1-b3xr2-b1", "r1-b3xr2-b2")


def test_crossing_pairs_plane(corpus):
    assert crossing_pairs(corpus["fig05/a"]) == frozenset()


def test_crossing_rotation_fig13(corpus):
    cr = crossing_rotations(corpus["fig13/left"])
    assert cr[(("r1", "b2"), ("r2", "b1"))] == ("r1", "b1", "b2", "r2")


def test_crossing_order_fig20(corpus):
    assert crossing_orders(corpus["fig20/left"])[("r1", "b5")] == (("r2", "b4"), ("r2", "b6"))


def test_format_characteristic_is_sorted(corpus):
    d = corpus["fig17/left"]
    assert format_characteristic(d, "ce") == sorted(format_characteristic(d, "ce"))
    assert format_characteristic(d, "rs")[0] == "r1: b1 b2 b3"
    assert format_characteristic(d, "cr") == sorted(format_characteristic(d, "cr"))


@given(st.integers(0, 10_000))
def test_projection_consistency(seed):
    d = random_case(seed)
    ers = extended_rotation_system(d)
    assert dict(ers.rotation_system) == rotation_system(d)
    assert dict(ers.crossing_rotations) == crossing_rotations(d)
    assert set(crossing_rotations(d)) == crossing_pairs(d)
    flat = Counter()
    for e, seq in crossing_orders(d).items():
        assert len(set(seq)) == len(seq)
        for f in seq:
            flat[d.graph.crossing_key(e, f)] += 1
    assert set(flat) == crossing_pairs(d)
    assert set(flat.values()) <= {2}


@given(st.integers(0, 10_000))
def test_inversion(seed):
    d = random_case(seed)
    c, ci = characteristics(d), characteristics(invert(d))
    assert ci.rs == inverse_rotations(d.graph, c.rs)
    assert ci.cr == inverse_rotations(d.graph, c.cr)
    assert ci.ce == c.ce
    assert ci.co == c.co
