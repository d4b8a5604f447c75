"""Enumerate every simple drawing of K3,3 and keep one per unlabeled class.

The generator produces each labeled drawing once; two drawings are the same
unlabeled drawing when a relabeling, possibly combined with a mirror image,
turns one into the other. The representatives are written, sorted by crossing
count, to src/drawiso/data/k33_enumerated.sdraw.

Run from the repository root:  python scripts/enumerate_k33.py
"""
from __future__ import annotations

import argparse
import collections
import time
from pathlib import Path

from drawiso.generate import grow
from drawiso.isomorphism import admissible_relabelings
from drawiso.model import PartitionedGraph, invert, relabel, serialize, validate

OUT = Path(__file__).resolve().parent.parent / "src" / "drawiso" / "data" / "k33_enumerated.sdraw"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()

    g = PartitionedGraph.from_sizes(r=3, b=3)
    maps = list(admissible_relabelings(g))
    seen, reps, total = set(), [], 0
    t = time.time()
    for d in grow(g):
        total += 1
        if d in seen:
            continue
        assert validate(d).realizable
        reps.append(d)
        for x in (d, invert(d)):
            for m in maps:
                seen.add(relabel(x, m))
    reps.sort(key=lambda d: (d.crossing_count, serialize(d)))
    print(f"labeled drawings: {total}, unlabeled: {len(reps)}, {time.time() - t:.1f}s")
    print("by crossings:", dict(sorted(collections.Counter(d.crossing_count for d in reps).items())))
    args.out.write_text("---\n".join(serialize(d) for d in reps))


if __name__ == "__main__":
    main()
