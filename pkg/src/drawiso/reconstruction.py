"""Recover the rotation system of a drawing from its crossing edge pairs.

Every K3,3 subconfiguration is looked up in a catalog that maps labeled
crossing-pair sets of K3,3 to their rotation system (unique up to mirror
image). Rotations around larger vertex sets are then assembled from triples
of such lookups, and finally the per-class results of a multipartite graph
are glued along their shared bipartite parts.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Dict, FrozenSet, Iterable, List, Mapping, MutableMapping, Optional, Sequence, Tuple

from .characteristics import RotationSystem
from .model import (
    Drawing,
    DrawingSyntaxError,
    Edge,
    PartitionedGraph,
    Vertex,
    _parse_edge_token,
    bipartite_subdrawing,
    crossing_str,
    parse_graph_line,
)

__all__ = [
    "K33",
    "Lemma3Violation",
    "UnknownCeConfiguration",
    "InconsistentSort",
    "BranchConflict",
    "K33CeCatalog",
    "k33_entries",
    "build_k33_catalog",
    "k33_subdrawings",
    "seed_catalog_from_drawings",
    "k33_rs_from_ce",
    "bipartite_rs_from_ce",
    "multipartite_rs_from_ce",
    "same_up_to_inversion",
    "parse_ce",
    "format_ce",
    "format_rotations",
]

K33 = PartitionedGraph.from_sizes(r=3, b=3)
_R = K33.classes[0][1]
_B = K33.classes[1][1]

UEdge = FrozenSet[Vertex]
UPair = FrozenSet[UEdge]
Key = FrozenSet[UPair]


class Lemma3Violation(Exception):
    """Two drawings share a crossing-pair set but have different rotation systems."""

    def __init__(self, key, first: str = "", second: str = ""):
        self.key = key
        self.first = first
        self.second = second
        what = key if isinstance(key, str) else f"conflicting rotation systems for CE {{{_key_str(key)}}}"
        super().__init__(what + (f" ({first} vs {second})" if first or second else ""))


class UnknownCeConfiguration(KeyError):
    def __init__(self, key):
        self.key = key
        super().__init__(f"CE configuration not in catalog: {{{_key_str(key)}}}")


class InconsistentSort(ValueError):
    """The pairwise orders around a vertex admit no cyclic order."""


class BranchConflict(ValueError):
    """Two per-class results disagree on their shared part under both orientations."""


def _key_str(key) -> str:
    if not key:
        return ""
    try:
        parts = []
        for p in key:
            e, f = sorted(tuple(sorted(x, key=K33.key)) for x in p)
            parts.append(crossing_str((e, f)))
        return " ".join(sorted(parts))
    except Exception:
        return repr(key)


def _unordered(ce: Iterable[Tuple[Edge, Edge]]) -> Key:
    return frozenset(frozenset((frozenset(e), frozenset(f))) for e, f in ce)


def _cyc3(rot: Sequence[Vertex], a: Vertex, b: Vertex, c: Vertex) -> bool:
    """Whether ``a, b, c`` appear in this cyclic order in ``rot``."""
    s = [x for x in rot if x in (a, b, c)]
    i = s.index(a)
    return s[(i + 1) % 3] == b


def _pin(rs: Dict[Vertex, Tuple[Vertex, ...]]) -> Dict[Vertex, Tuple[Vertex, ...]]:
    if _cyc3(rs["r1"], "b1", "b2", "b3"):
        return rs
    return {v: K33.reverse(r) for v, r in rs.items()}


def same_up_to_inversion(graph: PartitionedGraph, a: Mapping, b: Mapping) -> bool:
    """RS equality or equality with the mirror image."""
    a = {v: graph.normalize(r) for v, r in a.items()}
    b = {v: graph.normalize(r) for v, r in b.items()}
    return a == b or a == {v: graph.reverse(r) for v, r in b.items()}


# --------------------------------------------------------------------------
# catalog


@dataclass
class K33CeCatalog:
    """Labeled CE set of K3,3 -> rotation system pinned to ``r1: b1 b2 b3``."""

    entries: Dict[Key, Dict[Vertex, Tuple[Vertex, ...]]] = field(default_factory=dict)
    sources: Dict[Key, str] = field(default_factory=dict)
    processed: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key) -> bool:
        return key in self.entries

    def add(self, key: Key, rs: Dict[Vertex, Tuple[Vertex, ...]], source: str = "") -> None:
        old = self.entries.get(key)
        if old is None:
            self.entries[key] = rs
            self.sources[key] = source
        elif old != rs:
            raise Lemma3Violation(key, self.sources.get(key, ""), source)

    def merge(self, other: "K33CeCatalog") -> None:
        for k, rs in other.entries.items():
            self.add(k, rs, other.sources.get(k, ""))
        self.processed += other.processed

    def lookup(self, key: Key) -> Dict[Vertex, Tuple[Vertex, ...]]:
        try:
            return self.entries[key]
        except KeyError:
            raise UnknownCeConfiguration(key) from None


def _k33_mappings() -> List[Dict[Vertex, Vertex]]:
    out = []
    for swap in (False, True):
        src_r, src_b = (_R, _B) if not swap else (_B, _R)
        for pr in itertools.permutations(_R):
            for pb in itertools.permutations(_B):
                m = dict(zip(src_r, pr))
                m.update(zip(src_b, pb))
                out.append(m)
    return out


_MAPPINGS = _k33_mappings()


def _as_standard(d: Drawing) -> Tuple[Key, Dict[Vertex, Tuple[Vertex, ...]]]:
    g = d.graph
    if g.sizes != (3, 3):
        raise ValueError(f"not a K3,3 drawing: {g.signature()}")
    m = dict(zip(g.classes[0][1], _R))
    m.update(zip(g.classes[1][1], _B))
    pairs = frozenset(
        frozenset((frozenset(m[x] for x in e), frozenset(m[x] for x in f)))
        for e, entries in d.crossings.items() for f, _ in entries)
    rs = {m[v]: tuple(m[w] for w in r) for v, r in d.rotations.items()}
    return pairs, rs


def k33_entries(d: Drawing) -> List[Tuple[Key, Dict[Vertex, Tuple[Vertex, ...]]]]:
    """The 72 labeled (CE key, pinned RS) entries of one K3,3 drawing."""
    pairs, rs = _as_standard(d)
    out = []
    for m in _MAPPINGS:
        key = frozenset(frozenset(frozenset(m[x] for x in e) for e in p) for p in pairs)
        new = {m[v]: K33.normalize([m[w] for w in r]) for v, r in rs.items()}
        out.append((key, _pin(new)))
    return out


def _entries_job(args):
    idx, d = args
    return idx, k33_entries(d)


def build_k33_catalog(drawings: Sequence[Drawing], jobs: int = 1,
                      names: Optional[Sequence[str]] = None) -> K33CeCatalog:
    """Catalog of every relabeling of the given K3,3 drawings.

    Raises Lemma3Violation if two of the labeled drawings share their crossing
    pairs but not their rotation system up to mirror image. Conflicts are
    detected in input order whatever ``jobs`` is.
    """
    cat = K33CeCatalog()
    names = list(names) if names is not None else [f"#{i}" for i in range(len(drawings))]
    if jobs > 1 and len(drawings) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_entries_job, enumerate(drawings), chunksize=8))
    else:
        results = [(i, k33_entries(d)) for i, d in enumerate(drawings)]
    for i, entries in results:
        for key, rs in entries:
            cat.add(key, rs, names[i])
        cat.processed += len(entries)
    return cat


def k33_subdrawings(d: Drawing) -> Iterable[Tuple[str, Drawing]]:
    """All K3,3 subdrawings whose red side lies in one class of ``d``.

    These are the K3,3 configurations that reconstruction asks about: three
    vertices of a class against three vertices from the other classes.
    """
    g = d.graph
    for name, vs in g.classes:
        if len(vs) < 3:
            continue
        others = [v for v in g.vertices if g.class_name(v) != name]
        for reds in itertools.combinations(vs, 3):
            for blues in itertools.combinations(others, 3):
                yield f"{'.'.join(reds)}|{'.'.join(blues)}", bipartite_subdrawing(d, reds, blues)


def seed_catalog_from_drawings(drawings: Mapping[str, Drawing], jobs: int = 1) -> K33CeCatalog:
    """Catalog built from every K3,3 subconfiguration of the given drawings."""
    subs, names = [], []
    seen = set()
    for label, d in drawings.items():
        for sub_label, sub in k33_subdrawings(d):
            key = _as_standard(sub)
            frozen = (key[0], tuple(sorted(key[1].items())))
            if frozen in seen:
                continue
            seen.add(frozen)
            subs.append(sub)
            names.append(f"{label}:{sub_label}")
    return build_k33_catalog(subs, jobs=jobs, names=names)


# --------------------------------------------------------------------------
# queries


class _Oracle:
    """Answers K3,3 queries on the subsets of one drawing's CE set."""

    def __init__(self, pairs: Key, cat: K33CeCatalog,
                 stats: Optional[MutableMapping[str, int]] = None):
        self.cat = cat
        self.partners: Dict[UEdge, set] = {}
        for p in pairs:
            e, f = tuple(p)
            self.partners.setdefault(e, set()).add(f)
            self.partners.setdefault(f, set()).add(e)
        self.cache: Dict[Tuple, Dict[Vertex, Tuple[Vertex, ...]]] = {}
        self.stats = stats if stats is not None else {}
        self.stats.setdefault("queries", 0)

    def query(self, reds: Sequence[Vertex], blues: Sequence[Vertex]) -> Dict[Vertex, Tuple[Vertex, ...]]:
        """RS of the K3,3 on ``reds`` x ``blues`` in original labels, up to inversion."""
        ck = (frozenset(reds), frozenset(blues))
        if ck in self.cache:
            return self.cache[ck]
        m = dict(zip(reds, _R))
        m.update(zip(blues, _B))
        edges = {frozenset((r, b)) for r in reds for b in blues}
        key = frozenset(
            frozenset((frozenset(m[x] for x in e), frozenset(m[x] for x in f)))
            for e in edges for f in self.partners.get(e, ()) if f in edges)
        rs = self.cat.lookup(key)
        back = {s: v for v, s in m.items()}
        out = {back[s]: tuple(back[x] for x in r) for s, r in rs.items()}
        self.cache[ck] = out
        self.stats["queries"] += 1
        return out


def _aligned(q: Dict[Vertex, Tuple[Vertex, ...]], v: Vertex, triple: Tuple[Vertex, Vertex, Vertex],
             want: bool) -> Dict[Vertex, Tuple[Vertex, ...]]:
    """Choose the mirror branch of ``q`` in which ``v`` sees ``triple`` as ``want``."""
    if _cyc3(q[v], *triple) == want:
        return q
    return {u: tuple(reversed(r)) for u, r in q.items()}


def _sort_around(ref: Vertex, others: Sequence[Vertex], before) -> Tuple[Vertex, ...]:
    """Cyclic order starting at ``ref`` from the relation ``before(x, y)``.

    ``before(x, y)`` says that ``ref, x, y`` is clockwise. The relation must be
    a strict total order on ``others``; anything else raises InconsistentSort.
    """
    rel = {}
    for x, y in itertools.combinations(others, 2):
        b = before(x, y)
        rel[(x, y)], rel[(y, x)] = b, not b
    order = sorted(others, key=cmp_to_key(lambda x, y: -1 if rel[(x, y)] else 1))
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            if not rel[(x, y)]:
                raise InconsistentSort(f"pairwise orders around {ref} are not transitive "
                                       f"({x} and {y})")
    return (ref,) + tuple(order)


def _bipartite(reds: Sequence[Vertex], blues: Sequence[Vertex], oracle: _Oracle
               ) -> Dict[Vertex, Tuple[Vertex, ...]]:
    if len(reds) < 3 or len(blues) < 3:
        raise ValueError("both sides need at least three vertices")
    r1, b1 = reds[0], blues[0]
    rot: Dict[Vertex, Tuple[Vertex, ...]] = {}

    # step 1: the base K3,3 fixes the orientation
    base = _aligned(oracle.query(reds[:3], blues[:3]), r1, tuple(blues[:3]), True)
    b1_ref = _cyc3(base[b1], *reds[:3])

    # step 2: all blues around r1, all reds around b1
    def around_r1(x, y):
        q = _aligned(oracle.query(reds[:3], (b1, x, y)), b1, tuple(reds[:3]), b1_ref)
        return _cyc3(q[r1], b1, x, y)

    def around_b1(x, y):
        q = _aligned(oracle.query((r1, x, y), blues[:3]), r1, tuple(blues[:3]), True)
        return _cyc3(q[b1], r1, x, y)

    rot[r1] = _sort_around(b1, blues[1:], around_r1)
    rot[b1] = _sort_around(r1, reds[1:], around_b1)

    # step 3: every other vertex, anchored at r1 and b1
    for ri in reds[1:]:
        rx = reds[1] if ri != reds[1] else reds[2]

        def around_ri(x, y, ri=ri, rx=rx):
            q = _aligned(oracle.query((r1, rx, ri), (b1, x, y)), r1, (b1, x, y),
                         _cyc3(rot[r1], b1, x, y))
            return _cyc3(q[ri], b1, x, y)

        rot[ri] = _sort_around(b1, blues[1:], around_ri)
    for bi in blues[1:]:
        bx = blues[1] if bi != blues[1] else blues[2]

        def around_bi(x, y, bi=bi, bx=bx):
            q = _aligned(oracle.query((r1, x, y), (b1, bx, bi)), b1, (r1, x, y),
                         _cyc3(rot[b1], r1, x, y))
            return _cyc3(q[bi], r1, x, y)

        rot[bi] = _sort_around(r1, reds[1:], around_bi)
    return rot


def k33_rs_from_ce(ce: Iterable[Tuple[Edge, Edge]], cat: K33CeCatalog,
                   graph: PartitionedGraph = K33) -> RotationSystem:
    """Catalog rotation system of a labeled K3,3, pinned so the first red sees
    the blues in declaration order."""
    if graph.sizes != (3, 3):
        raise ValueError(f"not a K3,3: {graph.signature()}")
    reds, blues = graph.classes[0][1], graph.classes[1][1]
    q = _Oracle(_unordered(ce), cat).query(reds, blues)
    q = _aligned(q, reds[0], tuple(blues), True)
    return {v: graph.normalize(q[v]) for v in graph.vertices}


def bipartite_rs_from_ce(g: PartitionedGraph, ce: Iterable[Tuple[Edge, Edge]], cat: K33CeCatalog,
                         stats: Optional[MutableMapping[str, int]] = None) -> RotationSystem:
    """Rotation system of a drawing of K_{m,n} (m, n >= 3) from its crossing pairs.

    The result is the true rotation system or its mirror image, namely the one
    in which the first red vertex sees the first three blue vertices in
    declaration order. ``stats['queries']`` receives the number of distinct
    catalog lookups.
    """
    if len(g.classes) != 2:
        raise ValueError("expected a graph with two classes")
    oracle = _Oracle(_unordered(ce), cat, stats)
    rot = _bipartite(g.classes[0][1], g.classes[1][1], oracle)
    return {v: g.normalize(rot[v]) for v in g.vertices}


def _restricted(rot: Sequence[Vertex], keep) -> Tuple[Vertex, ...]:
    return tuple(x for x in rot if x in keep)


def _agreement(ra: Mapping, rb: Mapping, shared: Iterable[Vertex], side_a, side_b,
               graph: PartitionedGraph) -> Optional[bool]:
    """Compare two partial rotation systems on the bipartite part ``side_a x side_b``.

    Returns False if they agree, True if they agree after mirroring ``rb``,
    None if neither.
    """
    same = flipped = True
    for v in shared:
        keep = side_b if v in side_a else side_a
        x = graph.normalize(_restricted(ra[v], keep))
        y = _restricted(rb[v], keep)
        if len(x) < 3:
            continue
        same &= x == graph.normalize(y)
        flipped &= x == graph.reverse(y)
    if same:
        return False
    if flipped:
        return True
    return None


def multipartite_rs_from_ce(g: PartitionedGraph, ce: Iterable[Tuple[Edge, Edge]], cat: K33CeCatalog,
                            stats: Optional[MutableMapping[str, int]] = None) -> RotationSystem:
    """Rotation system of a complete multipartite drawing from its crossing pairs.

    Each class ``A`` is solved against all remaining vertices, then every
    class is mirrored if needed to agree with the first one on their common
    bipartite part. The first class pins the overall orientation.
    """
    if any(n < 3 for n in g.sizes):
        raise ValueError("every class needs at least three vertices")
    if len(g.classes) == 2:
        return bipartite_rs_from_ce(g, ce, cat, stats)
    oracle = _Oracle(_unordered(ce), cat, stats)
    parts = []
    for name, vs in g.classes:
        others = tuple(v for v in g.vertices if g.class_name(v) != name)
        parts.append((set(vs), _bipartite(vs, others, oracle)))

    a_set, ref = parts[0]
    flips = [False]
    for b_set, rb in parts[1:]:
        f = _agreement(ref, rb, a_set | b_set, a_set, b_set, g)
        if f is None:
            raise BranchConflict(f"classes {g.class_name(next(iter(a_set)))} and "
                                 f"{g.class_name(next(iter(b_set)))} disagree")
        flips.append(f)

    def oriented(i, v):
        r = parts[i][1][v]
        return tuple(reversed(r)) if flips[i] else r

    # the non-reference classes must also agree with each other
    for i, j in itertools.combinations(range(1, len(parts)), 2):
        si, sj = parts[i][0], parts[j][0]
        ri = {v: oriented(i, v) for v in parts[i][1]}
        rj = {v: oriented(j, v) for v in parts[j][1]}
        if _agreement(ri, rj, si | sj, si, sj, g) is not False:
            raise BranchConflict(f"classes {g.class_name(next(iter(si)))} and "
                                 f"{g.class_name(next(iter(sj)))} disagree")

    out = {}
    for i, (vs, _) in enumerate(parts):
        for v in vs:
            out[v] = g.normalize(oriented(i, v))
    return {v: out[v] for v in g.vertices}


# --------------------------------------------------------------------------
# text form of a crossing-pair set


def parse_ce(text: str) -> Tuple[PartitionedGraph, FrozenSet[Tuple[Edge, Edge]]]:
    """Read ``classes: ...`` followed by ``x u-v w-z`` lines (``#`` starts a comment)."""
    g = None
    pairs = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if g is None:
            if not line.startswith("classes:"):
                raise DrawingSyntaxError("the first line must be 'classes: ...'", lineno)
            g = parse_graph_line(line, lineno)
            continue
        toks = line.split()
        if len(toks) != 3 or toks[0] != "x":
            raise DrawingSyntaxError(f"expected 'x u-v w-z', got {line!r}", lineno)
        edges = [g.edge(*_parse_edge_token(g, tok, lineno)) for tok in toks[1:]]
        pairs.add(g.crossing_key(*edges))
    if g is None:
        raise DrawingSyntaxError("missing 'classes:' line", 1)
    return g, frozenset(pairs)


def format_ce(g: PartitionedGraph, ce: Iterable[Tuple[Edge, Edge]]) -> str:
    keys = sorted((g.crossing_key(g.edge(*e), g.edge(*f)) for e, f in ce),
                  key=lambda k: (g.edge_key(k[0]), g.edge_key(k[1])))
    lines = ["classes: " + g.signature()]
    lines += [f"x {e[0]}-{e[1]} {f[0]}-{f[1]}" for e, f in keys]
    return "\n".join(lines) + "\n"


def format_rotations(g: PartitionedGraph, rs: Mapping[Vertex, Sequence[Vertex]]) -> List[str]:
    return [f"rot {v}: {' '.join(rs[v])}" for v in g.vertices]
