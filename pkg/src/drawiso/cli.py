"""Command line interface: ``drawiso <verb> ...``.

Exit codes: 0 on a completed analysis, 1 when a violation is found, 2 on bad
input or usage.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .catalog import (CatalogError, check_theorems, enumerated_k33_path, load_catalog_lenient,
                      load_named_catalog, verify_lemma3)
from .characteristics import crossing_pairs, format_characteristic
from .fixtures import fixture_root, fixture_suite
from .isomorphism import KINDS, GraphMismatch, GraphShapeMismatch, iso_report
from .model import DrawingError, parse_drawing, validate
from .reconstruction import (BranchConflict, InconsistentSort, Lemma3Violation, UnknownCeConfiguration,
                             format_rotations, multipartite_rs_from_ce, parse_ce,
                             seed_catalog_from_drawings)

CATALOG_ENV = "DRAWISO_CATALOG"
OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    return p.read_text()


def _drawing(path: str):
    try:
        return parse_drawing(_read(path))
    except DrawingError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from exc


def _catalog_path(args) -> Optional[Path]:
    value = getattr(args, "catalog", None) or os.environ.get(CATALOG_ENV)
    if not value:
        return None
    p = Path(value)
    if not p.exists():
        raise InputError(f"no such catalog: {value}")
    return p


# --------------------------------------------------------------------------
# verbs


def cmd_extract(args) -> int:
    d = _drawing(args.file)
    kinds = ("rs", "ce", "cr", "co") if args.kind == "all" else (args.kind,)
    for k in kinds:
        if len(kinds) > 1:
            print(f"[{k}]")
        _emit(format_characteristic(d, k))
    return OK


def cmd_check(args) -> int:
    d1, d2 = _drawing(args.left), _drawing(args.right)
    try:
        report = iso_report(d1, d2, labeled=not args.unlabeled)
    except (GraphMismatch, GraphShapeMismatch) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc
    _emit(report.lines())
    return OK


def cmd_validate(args) -> int:
    code = OK
    for path in args.files:
        report = validate(_read(path))
        prefix = f"{path}: " if len(args.files) > 1 else ""
        _emit(prefix + line for line in report.lines())
        if not report.realizable:
            code = VIOLATION
    return code


def cmd_reconstruct(args) -> int:
    text = _read(args.ce_file)
    try:
        if any(line.lstrip().startswith(("rot ", "edge ")) for line in text.splitlines()):
            d = parse_drawing(text)
            g, ce = d.graph, crossing_pairs(d)
        else:
            g, ce = parse_ce(text)
    except DrawingError as exc:
        raise InputError(f"{args.ce_file}: {type(exc).__name__}: {exc}") from exc
    path = _catalog_path(args) or enumerated_k33_path()
    named = dict(load_named_catalog(path))
    cat = seed_catalog_from_drawings(named, jobs=args.jobs)
    stats = {}
    try:
        rs = multipartite_rs_from_ce(g, ce, cat, stats)
    except (UnknownCeConfiguration, InconsistentSort, BranchConflict, ValueError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc
    print("classes: " + g.signature())
    _emit(format_rotations(g, rs))
    if args.stats:
        print(f"# catalog_entries={len(cat)} queries={stats['queries']}", file=sys.stderr)
    return OK


def cmd_verify_lemma3(args) -> int:
    path = _catalog_path(args)
    if path is None:
        raise InputError("no catalog given (argument or DRAWISO_CATALOG)")
    good, skipped = load_catalog_lenient(path)
    k33 = [(n, d) for n, d in good if d.graph.sizes == (3, 3)]
    skipped += [(n, f"not K3,3 ({d.graph.signature()})") for n, d in good if d.graph.sizes != (3, 3)]
    counts = verify_lemma3([d for _, d in k33], jobs=args.jobs, strict=False,
                           names=[n for n, _ in k33])
    _emit(counts.lines(timing=args.timing))
    print(f"skipped={len(skipped)}")
    _emit(f"violation={kind} {a} {b}" for kind, a, b in counts.violations)
    return VIOLATION if counts.violations else OK


def cmd_check_theorems(args) -> int:
    path = _catalog_path(args)
    if path is None:
        raise InputError("no catalog given (argument or DRAWISO_CATALOG)")
    good, skipped = load_catalog_lenient(path)
    report = check_theorems(good, unlabeled_max_vertices=args.unlabeled_max_vertices,
                            map_oracle=not args.no_maps, skipped=skipped)
    _emit(report.lines())
    return OK if report.ok else VIOLATION


def cmd_selftest(args) -> int:
    root = Path(args.root) if args.root else fixture_root()
    failures = 0
    for fp in fixture_suite(root):
        problems = []
        drawings = fp.drawings() + list(fp.extras.values()) + list(fp.extended or ())
        if not all(validate(d).realizable for d in drawings):
            problems.append("unrealizable")
        want = fp.expected.as_dict()
        got = iso_report(fp.left, fp.right).as_dict()
        problems += [f"{k}={str(got[k]).lower()}" for k in KINDS if got[k] != want[k]]
        if fp.extended:
            ext = iso_report(*fp.extended).as_dict()
            problems += [f"extended.{k}" for k in KINDS if ext[k] != want[k]]
        if fp.expected_unlabeled and not args.labeled_only:
            want_un = fp.expected_unlabeled.as_dict()
            un = iso_report(fp.left, fp.right, labeled=False).as_dict()
            problems += [f"unlabeled.{k}={str(un[k]).lower()}" for k in KINDS if un[k] != want_un[k]]
        print(f"{fp.id}={'ok' if not problems else 'FAIL ' + ' '.join(problems)}")
        failures += bool(problems)
    print(f"failures={failures}")
    return VIOLATION if failures else OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="drawiso", description="Isomorphism checks for simple drawings "
                                "of complete multipartite graphs.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    s = sub.add_parser("extract", help="print characteristics of a drawing")
    s.add_argument("file")
    which = s.add_mutually_exclusive_group()
    which.add_argument("--kind", choices=("rs", "ce", "cr", "co", "ers", "all"), default="all")
    for k in ("rs", "ce", "cr", "co", "ers"):
        which.add_argument(f"--{k}", dest="kind", action="store_const", const=k)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("check", help="compare two drawings")
    s.add_argument("left")
    s.add_argument("right")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--labeled", action="store_true", help="compare as labeled drawings (default)")
    mode.add_argument("--unlabeled", action="store_true", help="search over relabelings")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("validate", help="structural and sphere checks")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("reconstruct", help="rotation system from crossing pairs")
    s.add_argument("ce_file", help="CE file ('classes:' plus 'x u-v w-z' lines) or .sdraw")
    s.add_argument("--catalog", help="K3,3 catalog (default: $DRAWISO_CATALOG or the built-in one)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--stats", action="store_true", help="print query counts to stderr")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("verify-lemma3", help="all-pairs scan over every labeling of K3,3 drawings")
    s.add_argument("catalog", nargs="?")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_verify_lemma3)

    s = sub.add_parser("check-theorems", help="implication battery over a catalog")
    s.add_argument("catalog", nargs="?")
    s.add_argument("--unlabeled-max-vertices", type=int, default=8)
    s.add_argument("--no-maps", action="store_true", help="skip the planar-map oracle")
    s.set_defaults(func=cmd_check_theorems)

    s = sub.add_parser("selftest", help="run the shipped fixture corpus")
    s.add_argument("--root", help="fixture directory (default: built-in)")
    s.add_argument("--labeled-only", action="store_true")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, CatalogError, FileNotFoundError) as exc:
        print(f"drawiso: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except Lemma3Violation as exc:
        print(f"drawiso: violation: {exc}", file=sys.stderr)
        return VIOLATION


def main() -> None:
    sys.exit(run())
