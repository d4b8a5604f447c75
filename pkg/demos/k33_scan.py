"""All-pairs scan over every labeling of the 102 unlabeled drawings of K3,3.

    python demos/k33_scan.py [--jobs N]

Uses the enumeration that ships with the package (built by
scripts/enumerate_k33.py). Prints the pair counts and whether crossing pairs
determined the rotation system, and crossing rotations the extended one, in
every case.
"""
import argparse

from drawiso.catalog import enumerated_k33_path, load_catalog, verify_lemma3

ap = argparse.ArgumentParser()
ap.add_argument("--jobs", type=int, default=1)
args = ap.parse_args()

counts = verify_lemma3(load_catalog(enumerated_k33_path()), jobs=args.jobs)
for line in counts.lines(timing=True):
    print(line)
