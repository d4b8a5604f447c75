"""Rebuild the shipped fixture corpus from per-fixture constraints.

Each fixture fixes some of: the rotation system, the crossing edge pairs, some
crossing rotations, some crossing orders and a few adjacency facts about
rotations (two neighbors consecutive around a vertex, say). The drawing
generator enumerates every realizable drawing consistent with them; the first
left/right pair whose isomorphism vector matches the expected one is written
out.

Run from the repository root:  python scripts/build_fixtures.py
"""
from __future__ import annotations

import argparse
import itertools
import random
from pathlib import Path
from typing import Callable, Dict, List, Optional

from drawiso.generate import (ce_complete, ce_may_cross, copy_extensions, grow, make_accept,
                              random_drawing)
from drawiso.isomorphism import KINDS, iso_report
from drawiso.model import Drawing, PartitionedGraph, serialize, validate

OUT = Path(__file__).resolve().parent.parent / "src" / "drawiso" / "data" / "fixtures"


def _edge(g, s):
    return g.edge(*s.split("-"))


def _pair(g, s):
    a, b = s.split(" x ")
    return g.crossing_key(_edge(g, a), _edge(g, b))


def consecutive(d: Drawing, v: str, a: str, b: str) -> bool:
    r = d.rotations[v]
    n = len(r)
    return (r.index(a) - r.index(b)) % n in (1, n - 1)


def complete(g: PartitionedGraph, rot: Dict[str, str], ce: List[str],
             cr: Optional[Dict[str, str]] = None, orders: Optional[Dict[str, List[str]]] = None,
             final: Optional[Callable[[Drawing], bool]] = None) -> List[Drawing]:
    """All realizable drawings with the given partial data.

    ``orders`` constrain the relative order of the listed partners only.
    """
    pairs = [_pair(g, s) for s in ce]
    accept = make_accept(
        g,
        rotations={v: r.split() for v, r in rot.items()},
        crossing_rots={_pair(g, k): r.split() for k, r in (cr or {}).items()},
        orders={_edge(g, e): [_edge(g, f) for f in fs] for e, fs in (orders or {}).items()},
        extra=ce_complete(pairs),
    )
    out = list(grow(g, may_cross=ce_may_cross(pairs), accept=accept))
    return [d for d in out if final is None or final(d)]


def vector(**bits) -> Dict[str, bool]:
    return {k: bool(bits.get(k, False)) for k in KINDS}


def pick(name, lefts, rights, want):
    for left, right in itertools.product(lefts, rights):
        if iso_report(left, right).as_dict() == want:
            return left, right
    raise SystemExit(f"{name}: no completion pair matches {want} "
                     f"({len(lefts)} left, {len(rights)} right)")


# --------------------------------------------------------------------------
# fixture constraints

K23 = PartitionedGraph.from_sizes(r=2, b=3)
K33 = PartitionedGraph.from_sizes(r=3, b=3)


def fig05():
    g = K23
    plane = {"r1": "b1 b2 b3", "r2": "b1 b3 b2"}
    same = {"r1": "b1 b2 b3", "r2": "b1 b2 b3"}
    drawings = {
        "a": complete(g, plane, []),
        "b": complete(g, same, ["r1-b1 x r2-b2"], {"r1-b1 x r2-b2": "r1 r2 b1 b2"}),
        "c": complete(g, plane, ["r1-b3 x r2-b1", "r1-b3 x r2-b2"],
                      {"r1-b3 x r2-b1": "r1 r2 b3 b1", "r1-b3 x r2-b2": "r1 r2 b3 b2"},
                      {"r1-b3": ["r2-b1", "r2-b2"]}),
        "d": complete(g, plane, ["r1-b1 x r2-b3", "r1-b2 x r2-b1"],
                      {"r1-b1 x r2-b3": "r1 b3 b1 r2", "r1-b2 x r2-b1": "r1 r2 b2 b1"}),
    }
    e, f = fig15_pair()
    drawings["e"], drawings["f"] = [e], [f]
    return {k: v[0] for k, v in drawings.items()}


FIG15_CE = ["r1-b2 x r2-b1", "r1-b3 x r2-b1", "r1-b3 x r2-b2"]


def fig15_pair():
    rot = {"r1": "b1 b2 b3", "r2": "b1 b2 b3"}
    left = complete(K23, rot, FIG15_CE,
                    {"r1-b2 x r2-b1": "r1 b1 b2 r2", "r1-b3 x r2-b1": "r1 b1 b3 r2",
                     "r1-b3 x r2-b2": "r1 b2 b3 r2"},
                    {"r1-b3": ["r2-b1", "r2-b2"], "r2-b1": ["r1-b3", "r1-b2"]})
    right = complete(K23, rot, FIG15_CE,
                     {"r1-b2 x r2-b1": "r1 b1 b2 r2", "r1-b3 x r2-b1": "r1 r2 b3 b1",
                      "r1-b3 x r2-b2": "r1 r2 b3 b2"},
                     {"r1-b3": ["r2-b2", "r2-b1"], "r2-b1": ["r1-b3", "r1-b2"]})
    return pick("fig15", left, right, vector(rs=1, ce=1))


def _partners_are(g, edge, partners):
    e = _edge(g, edge)
    want = {_edge(g, f) for f in partners}
    return lambda d: {f for f, _ in d.crossings[e]} == want


def _rs_only(name, g, rot):
    """Left: the bold edge crosses exactly the two named edges; right: it is uncrossed."""
    every = sorted(_all_with_rotations(g, rot), key=lambda d: d.crossing_count)
    left = [d for d in every if _partners_are(g, "r1-b3", ["r2-b1", "r2-b2"])(d)]
    right = [d for d in every if _partners_are(g, "r1-b3", [])(d)]
    return pick(name, left, right, vector(rs=1))


def fig10():
    return _rs_only("fig10", K23, {"r1": "b1 b2 b3", "r2": "b1 b2 b3"})


def _all_with_rotations(g, rot):
    accept = make_accept(g, rotations={v: r.split() for v, r in rot.items()})
    return list(grow(g, accept=accept))


FIG11_ROT = {"r1": "b1 b2 b3", "r2": "b1 b2 b3", "r3": "b1 b3 b2",
             "b1": "r1 r3 r2", "b2": "r1 r3 r2", "b3": "r1 r3 r2"}


def fig11():
    return _rs_only("fig11", K33, FIG11_ROT)


def fig13():
    rot = {"r1": "b1 b2 b3", "r2": "b1 b3 b2"}
    ce = ["r1-b2 x r2-b1", "r1-b3 x r2-b1"]
    left = complete(K23, rot, ce, {ce[0]: "r1 b1 b2 r2", ce[1]: "r1 b1 b3 r2"})
    right = complete(K23, rot, ce, {ce[0]: "r1 r2 b2 b1", ce[1]: "r1 r2 b3 b1"})
    return pick("fig13", left, right, vector(rs=1, ce=1, cr=1))


def fig14():
    g = PartitionedGraph.from_sizes(r=2, b=7)
    ce = ["r1-b2 x r2-b1", "r1-b5 x r2-b7", "r1-b6 x r2-b7", "r1-b6 x r2-b5"]
    orders = {"r1-b6": ["r2-b5", "r2-b7"], "r2-b7": ["r1-b6", "r1-b5"]}

    def side(c2, together):
        def final(d):
            return (consecutive(d, "r1", "b1", "b5") == together
                    and consecutive(d, "r1", "b3", "b4") == together)
        return complete(g, {}, ce, {ce[0]: "r1 b1 b2 r2", ce[1]: c2}, orders, final)

    left = side("r1 b7 b5 r2", True)
    right = side("r1 r2 b5 b7", False)
    return pick("fig14", left, right, vector(ce=1, co=1))


FIG16_CE = ["r1-b2 x r2-b1", "r1-b2 x r3-b1", "r1-b3 x r2-b1", "r1-b3 x r2-b2",
            "r1-b3 x r3-b1", "r1-b3 x r3-b2", "r2-b2 x r3-b1", "r2-b3 x r3-b1",
            "r2-b3 x r3-b2"]


def fig16():
    rot = {"r1": "b1 b2 b3", "r2": "b1 b2 b3", "r3": "b1 b2 b3",
           "b1": "r1 r3 r2", "b2": "r1 r3 r2", "b3": "r1 r3 r2"}
    left = complete(K33, rot, FIG16_CE,
                    {"r1-b2 x r2-b1": "r1 b1 b2 r2", "r1-b3 x r2-b1": "r1 b1 b3 r2"},
                    {"r1-b3": ["r2-b1", "r2-b2"]})
    right = complete(K33, rot, FIG16_CE,
                     {"r1-b2 x r2-b1": "r1 b1 b2 r2", "r1-b3 x r2-b1": "r1 r2 b3 b1"},
                     {"r1-b3": ["r2-b2", "r2-b1"]})
    return pick("fig16", left, right, vector(rs=1, ce=1))


FIG17_ROT = {"r1": "b1 b2 b3", "r2": "b1 b3 b2", "r3": "b1 b3 b2",
             "b1": "r1 r3 r2", "b2": "r1 r2 r3", "b3": "r1 r2 r3"}
FIG17_CR = {"r1-b2 x r2-b1": "r1 b1 b2 r2", "r1-b3 x r2-b2": "r1 r2 b3 b2",
            "r1-b3 x r3-b1": "r1 r3 b3 b1", "r1-b3 x r3-b2": "r1 r3 b3 b2",
            "r2-b2 x r3-b1": "r2 r3 b2 b1", "r2-b3 x r3-b1": "r2 r3 b3 b1",
            "r2-b3 x r3-b2": "r2 r3 b3 b2"}


def fig17():
    every = complete(K33, FIG17_ROT, list(FIG17_CR), FIG17_CR)
    e = K33.edge("r1", "b3")
    c1, c3 = K33.edge("r2", "b2"), K33.edge("r3", "b1")

    def first(d, x):
        return d.crossings[e][0][0] == x

    left = [d for d in every if first(d, c1)]
    right = [d for d in every if first(d, c3)]
    return pick("fig17", left, right, vector(rs=1, ce=1, cr=1, ers=1))


def fig18():
    g = PartitionedGraph.from_sizes(r=2, b=5)
    ce = ["r1-b2 x r2-b1", "r1-b4 x r2-b3", "r1-b5 x r2-b4", "r1-b5 x r2-b3"]

    def side(c1, left_side):
        def final(d):
            return (consecutive(d, "r1", "b3", "b5") == left_side
                    and consecutive(d, "r1", "b1", "b3") != left_side)
        if left_side:
            orders = {"r1-b5": ["r2-b4", "r2-b3"]}
        else:
            orders = {"r1-b5": ["r2-b3", "r2-b4"], "r2-b3": ["r1-b5", "r1-b4"]}
        return complete(g, {}, ce, {ce[0]: c1, ce[1]: "r1 b3 b4 r2"}, orders, final)

    left = side("r1 b1 b2 r2", True)
    right = side("r1 r2 b2 b1", False)
    return pick("fig18", left, right, vector(ce=1))


def fig19():
    g = PartitionedGraph.from_sizes(r=2, b=4)
    cr = {"r1-b4 x r2-b1": "r1 b1 b4 r2", "r1-b4 x r2-b2": "r1 b2 b4 r2",
          "r1-b4 x r2-b3": "r1 b3 b4 r2", "r1-b3 x r2-b2": "r1 b2 b3 r2"}
    e = g.edge("r1", "b4")
    c1 = g.edge("r2", "b1")

    def side(together, c1_first):
        def final(d):
            seq = [f for f, _ in d.crossings[e]]
            return (consecutive(d, "r1", "b1", "b3") == together
                    and (seq[0] == c1) == c1_first and (seq[-1] == c1) != c1_first)
        return complete(g, {}, list(cr), cr, final=final)

    return pick("fig19", side(True, True), side(False, False), vector(ce=1, cr=1))


def fig20():
    g = PartitionedGraph.from_sizes(r=2, b=6)
    cr = {"r1-b2 x r2-b3": "r1 r2 b2 b3", "r1-b5 x r2-b4": "r1 b4 b5 r2",
          "r1-b5 x r2-b6": "r1 b6 b5 r2"}
    orders = {"r1-b5": ["r2-b4", "r2-b6"]}

    def side(together):
        return complete(g, {}, list(cr), cr, orders,
                        lambda d: consecutive(d, "r1", "b3", "b6") == together)

    return pick("fig20", side(True), side(False), vector(ce=1, cr=1, co=1))


# --------------------------------------------------------------------------
# writing

FIG21 = """\
# Six vertices and a general (not complete multipartite) edge set: the format
# has no way to express it, so a single-class declaration is the closest
# encoding and the parser must reject it.
classes: v=6
edge v1-v2:
edge v2-v3:
"""

META = {
    "fig05": dict(name="six-k23-drawings", unlabeled="rs ce", extend="b1",
                  note="drawings a-f of K2,3; e/f is the only CE-isomorphic pair"),
    "fig10": dict(name="rs-only-k2n", extend="b1"),
    "fig11": dict(name="rs-only-kmn", extend="b1"),
    "fig13": dict(name="cr-rs-not-ers", unlabeled="rs ce cr ers co strong", extend="b3"),
    "fig14": dict(name="ce-co-only", extend="b4"),
    "fig15": dict(name="ce-rs-small", unlabeled="rs ce", extend="b1"),
    "fig16": dict(name="ce-rs-big", extend="b1"),
    "fig17": dict(name="ers-not-co", extend="b3"),
    "fig18": dict(name="ce-only", extend="b1"),
    "fig19": dict(name="ce-cr-only", extend="b4"),
    "fig20": dict(name="ce-cr-co", extend="b4"),
}


def extension_pair(fid, left, right, vertex):
    """First pair of copies of ``vertex`` (one per side) keeping the vector."""
    want = iso_report(left, right).as_dict()
    rights = list(copy_extensions(right, vertex))
    for a in copy_extensions(left, vertex):
        for b in rights:
            if iso_report(a, b).as_dict() == want:
                return a, b
    raise SystemExit(f"{fid}: no copy of {vertex} keeps the vector")


def write_pair(fid: str, left: Drawing, right: Drawing, extra_files=None, lr_names=None):
    d = OUT / fid
    d.mkdir(parents=True, exist_ok=True)
    for old in d.glob("*.sdraw"):
        old.unlink()
    for label, drawing in (extra_files or {}).items():
        (d / f"{label}.sdraw").write_text(serialize(drawing))
    ln, rn = lr_names or ("left", "right")
    if lr_names is None:
        (d / "left.sdraw").write_text(serialize(left))
        (d / "right.sdraw").write_text(serialize(right))
    for x in (left, right):
        assert validate(x).realizable, fid
    meta = META[fid]
    rep = iso_report(left, right)
    lines = [f"name={meta['name']}", f"left={ln}.sdraw", f"right={rn}.sdraw"]
    lines += rep.lines()
    unl = set((meta.get("unlabeled") or "").split())
    if unl:
        for k in KINDS:
            lines.append(f"unlabeled.{k}={'true' if k in unl else 'false'}")
    if meta.get("extend"):
        le, re_ = extension_pair(fid, left, right, meta["extend"])
        (d / "left_ext.sdraw").write_text(serialize(le))
        (d / "right_ext.sdraw").write_text(serialize(re_))
        lines.append(f"extend={meta['extend']}")
        lines.append("extended_left=left_ext.sdraw")
        lines.append("extended_right=right_ext.sdraw")
    lines.append("tags=derived-completion")
    if meta.get("note"):
        lines.append(f"note={meta['note']}")
    (d / "expected.txt").write_text("\n".join(lines) + "\n")
    print(fid, " ".join(rep.lines()))


def write_derived(fig11_left: Drawing):
    """Larger drawings for reconstruction: K4,4 and K3,3,3."""
    k44 = next(copy_extensions(next(copy_extensions(fig11_left, "r1")), "b1"))
    k333 = random_drawing(PartitionedGraph.from_sizes(a=3, b=3, c=3), random.Random(333))
    d = OUT / "derived"
    d.mkdir(parents=True, exist_ok=True)
    for name, x in (("k44", k44), ("k333", k333)):
        assert validate(x).realizable, name
        (d / f"{name}.sdraw").write_text(serialize(x))
        print(name, x.graph.signature(), "crossings", x.crossing_count)
    (d / "expected.txt").write_text(
        "name=derived-large\n"
        "note=k44 copies r1 and b1 of the fig11 left drawing; k333 is a seeded random drawing\n"
        "tags=derived\n")


def main(argv=None):
    global OUT
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args(argv)
    OUT = args.out
    five = fig05()
    write_pair("fig05", five["e"], five["f"], extra_files=five, lr_names=("e", "f"))
    for fid, fn in [("fig10", fig10), ("fig11", fig11), ("fig13", fig13), ("fig14", fig14),
                    ("fig15", fig15_pair), ("fig16", fig16), ("fig17", fig17),
                    ("fig18", fig18), ("fig19", fig19), ("fig20", fig20)]:
        write_pair(fid, *fn())
    write_derived(fig11()[0])
    rej = OUT / "fig21"
    rej.mkdir(parents=True, exist_ok=True)
    (rej / "general.sdraw").write_text(FIG21)
    (rej / "expected.txt").write_text("name=general-graph\nreject=SingleClassGraph\n")


if __name__ == "__main__":
    main()
