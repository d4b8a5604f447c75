"""The shipped corpus of example drawings with their expected isomorphism vectors.

Each fixture directory under ``data/fixtures`` holds ``.sdraw`` files and an
``expected.txt`` of ``key=value`` lines: the six labeled bits, optional
``unlabeled.<kind>`` bits, the file names of the pair and of a one-vertex
extension of it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .isomorphism import KINDS, IsoReport
from .model import Drawing, parse_drawing

__all__ = [
    "FixturePair",
    "RejectionFixture",
    "fixture_root",
    "read_expected",
    "fixture_suite",
    "fixture_drawings",
    "rejection_fixtures",
    "derived_drawings",
]


def fixture_root() -> Path:
    return Path(str(resources.files("drawiso") / "data" / "fixtures"))


def read_expected(path: Path) -> Dict[str, str]:
    out = {}
    for line in path.read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _report(meta: Dict[str, str], prefix: str = "") -> Optional[IsoReport]:
    if f"{prefix}rs" not in meta:
        return None
    return IsoReport(**{k: meta[f"{prefix}{k}"] == "true" for k in KINDS}, labeled=not prefix)


@dataclass
class FixturePair:
    id: str
    name: str
    left: Drawing
    right: Drawing
    expected: IsoReport
    expected_unlabeled: Optional[IsoReport] = None
    extended: Optional[Tuple[Drawing, Drawing]] = None
    extend_vertex: Optional[str] = None
    tags: Tuple[str, ...] = ()
    extras: Dict[str, Drawing] = field(default_factory=dict)
    files: Tuple[str, str] = ("left.sdraw", "right.sdraw")

    @property
    def source(self) -> str:
        return self.id

    def drawings(self) -> List[Drawing]:
        return [self.left, self.right]


@dataclass
class RejectionFixture:
    id: str
    path: Path
    error: str


def _load(path: Path) -> Drawing:
    return parse_drawing(path.read_text())


def fixture_suite(root: Optional[Path] = None) -> List[FixturePair]:
    """All fixture pairs, sorted by id."""
    root = Path(root) if root else fixture_root()
    out = []
    for d in sorted(p for p in root.iterdir() if p.is_dir()):
        meta = read_expected(d / "expected.txt")
        if "reject" in meta or "rs" not in meta:
            continue
        left_file, right_file = meta.get("left", "left.sdraw"), meta.get("right", "right.sdraw")
        extras = {p.stem: _load(p) for p in sorted(d.glob("*.sdraw"))
                  if p.name not in (left_file, right_file) and not p.stem.endswith("_ext")}
        extended = None
        if "extended_left" in meta:
            extended = (_load(d / meta["extended_left"]), _load(d / meta["extended_right"]))
        out.append(FixturePair(
            id=d.name,
            name=meta.get("name", d.name),
            left=_load(d / left_file),
            right=_load(d / right_file),
            expected=_report(meta),
            expected_unlabeled=_report(meta, "unlabeled."),
            extended=extended,
            extend_vertex=meta.get("extend"),
            tags=tuple(meta.get("tags", "").split(",")) if meta.get("tags") else (),
            extras=extras,
            files=(left_file, right_file),
        ))
    return out


def derived_drawings(root: Optional[Path] = None) -> Dict[str, Drawing]:
    """Larger implementer-built drawings (K4,4 and K3,3,3)."""
    root = Path(root) if root else fixture_root()
    d = root / "derived"
    return {p.stem: _load(p) for p in sorted(d.glob("*.sdraw"))}


def fixture_drawings(root: Optional[Path] = None, extended: bool = True,
                     derived: bool = True) -> Dict[str, Drawing]:
    """Every distinct drawing of the corpus keyed by ``<id>/<file stem>``."""
    root = Path(root) if root else fixture_root()
    out: Dict[str, Drawing] = {}
    for fp in fixture_suite(root):
        out[f"{fp.id}/{Path(fp.files[0]).stem}"] = fp.left
        out[f"{fp.id}/{Path(fp.files[1]).stem}"] = fp.right
        for k, x in fp.extras.items():
            out[f"{fp.id}/{k}"] = x
        if extended and fp.extended:
            out[f"{fp.id}/left_ext"], out[f"{fp.id}/right_ext"] = fp.extended
    if derived:
        for k, x in derived_drawings(root).items():
            out[f"derived/{k}"] = x
    return out


def rejection_fixtures(root: Optional[Path] = None) -> List[RejectionFixture]:
    root = Path(root) if root else fixture_root()
    out = []
    for d in sorted(p for p in root.iterdir() if p.is_dir()):
        meta = read_expected(d / "expected.txt")
        if "reject" in meta:
            for p in sorted(d.glob("*.sdraw")):
                out.append(RejectionFixture(d.name, p, meta["reject"]))
    return out
