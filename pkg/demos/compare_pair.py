"""Compare two drawings of the same graph, labeled and up to relabeling.

    python demos/compare_pair.py [LEFT.sdraw RIGHT.sdraw]

Without arguments the shipped fig05 e/f pair is used: the two drawings have
the same crossing pairs under a suitable labeling but different crossing
orders under every labeling.
"""
import sys

from drawiso import iso_report, parse_drawing
from drawiso.fixtures import fixture_root


def main(argv):
    if len(argv) == 2:
        left, right = (parse_drawing(open(p).read()) for p in argv)
    else:
        root = fixture_root() / "fig05"
        left = parse_drawing((root / "e.sdraw").read_text())
        right = parse_drawing((root / "f.sdraw").read_text())

    print("labeled:")
    for line in iso_report(left, right).lines():
        print("  " + line)
    print("unlabeled:")
    for line in iso_report(left, right, labeled=False).lines():
        print("  " + line)


if __name__ == "__main__":
    main(sys.argv[1:])
