"""Recover the rotation system of a random drawing from its crossing pairs alone.

    python demos/reconstruct_rotations.py [SEED]

A random drawing of K3,3,3 is generated, its rotations are thrown away and
rebuilt from K3,3 catalog lookups. The answer can only be fixed up to a
global mirror image, so it is compared that way.
"""
import random
import sys

from drawiso.catalog import enumerated_k33_path, load_catalog
from drawiso.characteristics import crossing_pairs, rotation_system
from drawiso.generate import random_drawing
from drawiso.model import PartitionedGraph
from drawiso.reconstruction import (format_rotations, multipartite_rs_from_ce, same_up_to_inversion,
                                    seed_catalog_from_drawings)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
g = PartitionedGraph.from_sizes(a=3, b=3, c=3)
d = random_drawing(g, random.Random(seed))
print(f"drawing with {d.crossing_count} crossings, {len(crossing_pairs(d))} crossing pairs")

reps = load_catalog(enumerated_k33_path())
cat = seed_catalog_from_drawings({f"k33/{i}": x for i, x in enumerate(reps)})

stats = {}
rs = multipartite_rs_from_ce(g, crossing_pairs(d), cat, stats)
for line in format_rotations(g, rs):
    print(line)
print(f"catalog lookups: {stats['queries']}")
print("matches the drawing up to mirror image:", same_up_to_inversion(g, rs, rotation_system(d)))
