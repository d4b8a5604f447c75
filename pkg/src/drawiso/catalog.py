"""Catalog loading, the all-pairs K3,3 scan and the theorem property battery."""
from __future__ import annotations

import itertools
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .characteristics import Characteristics, characteristics
from .isomorphism import _PREDICATES, admissible_relabelings, pruned_relabelings, strong_iso_by_maps
from .model import Drawing, DrawingError, iter_sdraw_blocks, parse_drawing, relabel, serialize, validate
from .reconstruction import Lemma3Violation

__all__ = [
    "CatalogError",
    "VerificationCounts",
    "TheoremReport",
    "load_catalog",
    "load_named_catalog",
    "load_catalog_lenient",
    "enumerated_k33_path",
    "harborth_path",
    "verify_lemma3",
    "check_theorems",
    "THEOREMS",
]

HARBORTH_ENV = "DRAWISO_HARBORTH"


class CatalogError(ValueError):
    """A catalog entry failed to parse or is not realizable."""

    def __init__(self, source: str, line: Optional[int], message: str):
        self.source = source
        self.line = line
        self.reason = message
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")


def _blocks(path: Path) -> Iterable[Tuple[str, int, str]]:
    if path.is_dir():
        for p in sorted(path.rglob("*.sdraw")):
            for start, text in iter_sdraw_blocks(p.read_text()):
                yield str(p), start, text
    else:
        for start, text in iter_sdraw_blocks(path.read_text()):
            yield str(path), start, text


def _parse(source: str, start: int, text: str) -> Drawing:
    try:
        d = parse_drawing(text)
    except DrawingError as exc:
        line = start + exc.line - 1 if exc.line else start
        raise CatalogError(source, line, f"{type(exc).__name__}: {exc.message}") from exc
    report = validate(d)
    if not report.realizable:
        raise CatalogError(source, start, "not realizable: " + "; ".join(report.errors))
    return d


def _name(source: str, start: int, root: Path) -> str:
    p = Path(source)
    try:
        rel = p.relative_to(root) if root.is_dir() else Path(p.name)
    except ValueError:
        rel = p
    return f"{rel}" if start == 1 else f"{rel}@{start}"


def load_named_catalog(path) -> List[Tuple[str, Drawing]]:
    """``(name, drawing)`` for every block in a directory tree or ``---`` separated file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))
    return [(_name(src, start, path), _parse(src, start, text)) for src, start, text in _blocks(path)]


def load_catalog(path) -> List[Drawing]:
    """All drawings of a catalog; the first bad entry raises CatalogError."""
    return [d for _, d in load_named_catalog(path)]


def load_catalog_lenient(path) -> Tuple[List[Tuple[str, Drawing]], List[Tuple[str, str]]]:
    """Like load_named_catalog, but bad entries are returned as ``(name, reason)``."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(str(path))
    good, skipped = [], []
    for src, start, text in _blocks(path):
        try:
            good.append((_name(src, start, path), _parse(src, start, text)))
        except CatalogError as exc:
            skipped.append((_name(src, start, path), exc.reason))
    return good, skipped


def enumerated_k33_path() -> Path:
    """Shipped file with one drawing of K3,3 per unlabeled class (102 in total)."""
    return Path(str(resources.files("drawiso") / "data" / "k33_enumerated.sdraw"))


def harborth_path() -> Optional[Path]:
    """Location of the external K3,3 dataset, if the user supplied one.

    Set ``DRAWISO_HARBORTH`` to a directory of ``.sdraw`` files or a single
    ``---`` separated ``.sdraw`` file holding the 102 unlabeled drawings.
    """
    value = os.environ.get(HARBORTH_ENV)
    if not value:
        return None
    p = Path(value)
    return p if p.exists() else None


# --------------------------------------------------------------------------
# K3,3 all-pairs scan


@dataclass
class VerificationCounts:
    labeled_drawings: int = 0
    pairs_checked: int = 0
    ce_pairs: int = 0
    cr_pairs: int = 0
    lemma3_rs_ok: bool = True
    lemma3_ers_ok: bool = True
    elapsed: float = 0.0
    violations: List[Tuple[str, str, str]] = field(default_factory=list)

    def lines(self, timing: bool = False) -> List[str]:
        out = [
            f"labeled_drawings={self.labeled_drawings}",
            f"pairs_checked={self.pairs_checked}",
            f"ce_pairs={self.ce_pairs}",
            f"cr_pairs={self.cr_pairs}",
            f"lemma3_rs_ok={str(self.lemma3_rs_ok).lower()}",
            f"lemma3_ers_ok={str(self.lemma3_ers_ok).lower()}",
        ]
        if timing:
            out.append(f"elapsed={self.elapsed:.3f}")
        return out


def _scan_groups(groups: Sequence[List[Tuple[str, Characteristics]]]):
    ce = cr = 0
    bad = []
    rs_ok = ers_ok = True
    for group in groups:
        for (n1, c1), (n2, c2) in itertools.combinations(group, 2):
            ce += 1
            if not _PREDICATES["rs"](c1, c2):
                rs_ok = False
                bad.append(("ce=>rs", n1, n2))
            if _PREDICATES["cr"](c1, c2):
                cr += 1
                if not _PREDICATES["ers"](c1, c2):
                    ers_ok = False
                    bad.append(("cr=>ers", n1, n2))
    return ce, cr, rs_ok, ers_ok, bad


def _labeled(catalog, names, label: str) -> Drawing:
    name, _, i = label.rpartition("/")
    d = catalog[list(names).index(name)]
    return relabel(d, list(admissible_relabelings(d.graph))[int(i)])


def verify_lemma3(catalog: Sequence[Drawing], jobs: int = 1, strict: bool = True,
                  names: Optional[Sequence[str]] = None) -> VerificationCounts:
    """All labelings of the K3,3 drawings, compared pairwise.

    Pairs are grouped by their crossing-pair set first: only pairs inside a
    group can be CE-isomorphic, so only those are compared. With ``strict`` the
    first violation raises Lemma3Violation; otherwise it is recorded.
    """
    t0 = time.perf_counter()
    names = list(names) if names is not None else [f"#{i}" for i in range(len(catalog))]
    groups: Dict[frozenset, List[Tuple[str, Characteristics]]] = defaultdict(list)
    n = 0
    for name, d in zip(names, catalog):
        if d.graph.sizes != (3, 3):
            raise ValueError(f"{name}: not a K3,3 drawing ({d.graph.signature()})")
        for i, m in enumerate(admissible_relabelings(d.graph)):
            c = characteristics(relabel(d, m))
            groups[c.ce].append((f"{name}/{i}", c))
            n += 1
    ordered = sorted(groups.values(), key=lambda g: g[0][0])
    if jobs > 1 and len(ordered) > 1:
        chunks = [ordered[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_scan_groups, chunks))
    else:
        parts = [_scan_groups(ordered)]
    counts = VerificationCounts(labeled_drawings=n, pairs_checked=n * (n - 1) // 2)
    for ce, cr, rs_ok, ers_ok, bad in parts:
        counts.ce_pairs += ce
        counts.cr_pairs += cr
        counts.lemma3_rs_ok &= rs_ok
        counts.lemma3_ers_ok &= ers_ok
        counts.violations.extend(bad)
    counts.violations.sort()
    counts.elapsed = time.perf_counter() - t0
    if strict and counts.violations:
        kind, a, b = counts.violations[0]
        raise Lemma3Violation(f"{kind} fails for {a} and {b}",
                              serialize(_labeled(catalog, names, a)),
                              serialize(_labeled(catalog, names, b)))
    return counts


# --------------------------------------------------------------------------
# theorem battery


def _all_at_least(sizes, k):
    return all(s >= k for s in sizes)


def _is_k2n(sizes):
    return len(sizes) == 2 and min(sizes) == 2


# (name, statement, applies(sizes, vertex count), holds(bits))
THEOREMS = [
    ("cone.ers_rs", "ers => rs", lambda s, n: True, lambda b: not b["ers"] or b["rs"]),
    ("cone.ers_cr", "ers => cr", lambda s, n: True, lambda b: not b["ers"] or b["cr"]),
    ("cone.cr_ce", "cr => ce", lambda s, n: True, lambda b: not b["cr"] or b["ce"]),
    ("cone.co_ce", "co => ce", lambda s, n: True, lambda b: not b["co"] or b["ce"]),
    ("cone.strong", "strong <=> co and ers", lambda s, n: True,
     lambda b: b["strong"] == (b["co"] and b["ers"])),
    ("theorem2", "rs and co => strong", lambda s, n: n >= 5,
     lambda b: not (b["rs"] and b["co"]) or b["strong"]),
    ("theorem3", "ce => rs", lambda s, n: _all_at_least(s, 3), lambda b: not b["ce"] or b["rs"]),
    ("theorem4", "cr => ers", lambda s, n: _all_at_least(s, 3), lambda b: not b["cr"] or b["ers"]),
    ("corollary5", "co => strong", lambda s, n: _all_at_least(s, 3),
     lambda b: not b["co"] or b["strong"]),
    ("theorem6", "ers => strong on K2,n", lambda s, n: _is_k2n(s),
     lambda b: not b["ers"] or b["strong"]),
]


@dataclass
class TheoremReport:
    drawings: int = 0
    labeled_pairs: int = 0
    unlabeled_pairs: int = 0
    relabeled_pairs: int = 0
    map_checks: int = 0
    applicable: Dict[str, int] = field(default_factory=lambda: {t[0]: 0 for t in THEOREMS})
    violations: List[str] = field(default_factory=list)
    skipped: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        out = [
            f"drawings={self.drawings}",
            f"labeled_pairs={self.labeled_pairs}",
            f"unlabeled_pairs={self.unlabeled_pairs}",
            f"relabeled_pairs={self.relabeled_pairs}",
            f"map_checks={self.map_checks}",
        ]
        out += [f"checked.{k}={v}" for k, v in self.applicable.items()]
        out.append(f"violations={len(self.violations)}")
        out += [f"violation={v}" for v in self.violations]
        out.append(f"skipped={len(self.skipped)}")
        out += [f"skipped.{name}={reason}" for name, reason in self.skipped]
        return out


def _battery(report: TheoremReport, c1: Characteristics, c2: Characteristics, label: str) -> None:
    bits = {k: p(c1, c2) for k, p in _PREDICATES.items()}
    sizes, n = c1.graph.sizes, len(c1.graph.vertices)
    for name, statement, applies, holds in THEOREMS:
        if applies(sizes, n):
            report.applicable[name] += 1
            if not holds(bits):
                report.violations.append(f"{name} ({statement}): {label}")


def check_theorems(catalog: Sequence[Tuple[str, Drawing]], unlabeled_max_vertices: int = 8,
                   map_oracle: bool = True,
                   skipped: Sequence[Tuple[str, str]] = ()) -> TheoremReport:
    """Run the implication battery over every pair of drawings of the same graph.

    Labeled pairs compare drawings of the identical labeled graph. For graphs
    with at most ``unlabeled_max_vertices`` vertices, pairs with the same class
    sizes are also compared under every relabeling that keeps crossing degrees,
    which covers every labeling under which the pair could be CE-isomorphic.
    With ``map_oracle`` each CE-isomorphic labeled pair also has its strong
    isomorphism decided from the planarized maps and compared.
    """
    report = TheoremReport(drawings=len(catalog), skipped=list(skipped))
    chars = [(name, d, characteristics(d)) for name, d in catalog]

    by_graph = defaultdict(list)
    for item in chars:
        by_graph[item[1].graph].append(item)
    for items in by_graph.values():
        for (n1, d1, c1), (n2, d2, c2) in itertools.combinations(items, 2):
            report.labeled_pairs += 1
            _battery(report, c1, c2, f"{n1} vs {n2}")
            if map_oracle and c1.ce == c2.ce:
                report.map_checks += 1
                if strong_iso_by_maps(d1, d2) != _PREDICATES["strong"](c1, c2):
                    report.violations.append(f"theorem1 (maps agree with co and ers): {n1} vs {n2}")

    by_shape = defaultdict(list)
    for item in chars:
        g = item[1].graph
        if len(g.vertices) <= unlabeled_max_vertices:
            by_shape[tuple(sorted(g.sizes))].append(item)
    for items in by_shape.values():
        for (n1, d1, c1), (n2, d2, _) in itertools.combinations(items, 2):
            report.unlabeled_pairs += 1
            for m in pruned_relabelings(d2, d1):
                c = characteristics(relabel(d2, m, d1.graph))
                if c.ce != c1.ce:
                    continue
                report.relabeled_pairs += 1
                w = " ".join(f"{a}->{b}" for a, b in m.items())
                _battery(report, c1, c, f"{n1} vs {n2} under {w}")
    return report
