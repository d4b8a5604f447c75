"""Labeled and unlabeled isomorphism predicates between drawings."""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .characteristics import Characteristics, characteristics, inverse_rotations
from .model import Drawing, PartitionedGraph, Vertex, planarize, relabel

KINDS = ("rs", "ce", "cr", "ers", "co", "strong")

Relabeling = Dict[Vertex, Vertex]


class GraphMismatch(ValueError):
    """The two drawings are not drawings of the same labeled graph."""


class GraphShapeMismatch(ValueError):
    """The two graphs do not have the same multiset of class sizes."""


def _chars(d1: Drawing, d2: Drawing) -> Tuple[Characteristics, Characteristics]:
    if d1.graph != d2.graph:
        raise GraphMismatch(f"{d1.graph.signature()} vs {d2.graph.signature()}")
    return characteristics(d1), characteristics(d2)


# branch helpers: which of "same" / "inverse" hold for a cyclic-valued map


def _branches(graph: PartitionedGraph, a: Mapping, b: Mapping) -> Tuple[bool, bool]:
    same = dict(a) == dict(b)
    inv = dict(a) == inverse_rotations(graph, b)
    return same, inv


def _rs(c1: Characteristics, c2: Characteristics) -> bool:
    return any(_branches(c1.graph, c1.rs, c2.rs))


def _ce(c1, c2) -> bool:
    return c1.ce == c2.ce


def _cr(c1, c2) -> bool:
    return _ce(c1, c2) and any(_branches(c1.graph, c1.cr, c2.cr))


def _ers(c1, c2) -> bool:
    if not _ce(c1, c2):
        return False
    rs_same, rs_inv = _branches(c1.graph, c1.rs, c2.rs)
    cr_same, cr_inv = _branches(c1.graph, c1.cr, c2.cr)
    return (rs_same and cr_same) or (rs_inv and cr_inv)


def _co(c1, c2) -> bool:
    return _ce(c1, c2) and dict(c1.co) == dict(c2.co)


def _strong(c1, c2) -> bool:
    return _co(c1, c2) and _ers(c1, c2)


_PREDICATES = {"rs": _rs, "ce": _ce, "cr": _cr, "ers": _ers, "co": _co, "strong": _strong}


def rs_iso(d1: Drawing, d2: Drawing) -> bool:
    """Same rotation at every vertex, or inverse rotation at every vertex."""
    return _rs(*_chars(d1, d2))


def ce_iso(d1: Drawing, d2: Drawing) -> bool:
    return _ce(*_chars(d1, d2))


def cr_iso(d1: Drawing, d2: Drawing) -> bool:
    return _cr(*_chars(d1, d2))


def ers_iso(d1: Drawing, d2: Drawing) -> bool:
    """Vertex and crossing rotations all equal, or all inverse."""
    return _ers(*_chars(d1, d2))


def co_iso(d1: Drawing, d2: Drawing) -> bool:
    return _co(*_chars(d1, d2))


def strong_iso(d1: Drawing, d2: Drawing) -> bool:
    """Strong isomorphism of connected labeled drawings via CO and ERS."""
    return _strong(*_chars(d1, d2))


def labeled_iso(d1: Drawing, d2: Drawing, kind: str) -> bool:
    return _PREDICATES[kind](*_chars(d1, d2))


def strong_iso_by_maps(d1: Drawing, d2: Drawing) -> bool:
    """Independent check of strong isomorphism on the planarized maps.

    Searches for a dart bijection that commutes with the pairing and with the
    rotation (or its inverse, for a mirror image) and keeps every dart on the
    same edge and at the same vertex or crossing. Fragment positions along an
    edge are not compared directly, so crossing orders are never consulted.
    """
    if d1.graph != d2.graph:
        raise GraphMismatch(f"{d1.graph.signature()} vs {d2.graph.signature()}")
    m1, m2 = planarize(d1), planarize(d2)
    if len(m1.darts) != len(m2.darts):
        return False
    if not m1.darts:
        return True
    by_tag = defaultdict(list)
    for i, dart in enumerate(m2.darts):
        by_tag[(m2.node_of[i], dart.edge)].append(i)
    inv_sigma2 = [0] * len(m2.sigma)
    for i, j in enumerate(m2.sigma):
        inv_sigma2[j] = i
    g = d1.graph
    root = next(i for i, n in enumerate(m1.node_of) if n in g)
    for sigma2 in (m2.sigma, inv_sigma2):
        for image in by_tag[(m1.node_of[root], m1.darts[root].edge)]:
            phi = {root: image}
            stack = [root]
            ok = True
            while stack and ok:
                x = stack.pop()
                for nx, ny in ((m1.sigma[x], sigma2[phi[x]]), (m1.alpha[x], m2.alpha[phi[x]])):
                    if (m1.node_of[nx], m1.darts[nx].edge) != (m2.node_of[ny], m2.darts[ny].edge):
                        ok = False
                        break
                    if nx in phi:
                        if phi[nx] != ny:
                            ok = False
                            break
                    else:
                        phi[nx] = ny
                        stack.append(nx)
            if ok and len(phi) == len(m1.darts) and len(set(phi.values())) == len(phi):
                return True
    return False


# --------------------------------------------------------------------------
# relabelings


def _class_matchings(src: PartitionedGraph, dst: PartitionedGraph) -> Iterator[Tuple[int, ...]]:
    """Bijections from src classes to dst classes of equal size (dst index per src class)."""
    dsizes = dst.sizes
    for perm in itertools.permutations(range(len(dsizes))):
        if all(len(src.classes[i][1]) == dsizes[j] for i, j in enumerate(perm)):
            yield perm


def admissible_relabelings(src: PartitionedGraph,
                           dst: Optional[PartitionedGraph] = None) -> Iterator[Relabeling]:
    """All class-size preserving bijections from ``src`` vertices to ``dst`` vertices.

    Within-class permutations times permutations of equal-size classes; the
    stream is exhaustive and duplicate-free.
    """
    dst = dst or src
    if sorted(src.sizes) != sorted(dst.sizes):
        raise GraphShapeMismatch(f"{src.signature()} vs {dst.signature()}")
    for perm in _class_matchings(src, dst):
        per_class = [
            [dict(zip(src.classes[i][1], p)) for p in itertools.permutations(dst.classes[j][1])]
            for i, j in enumerate(perm)
        ]
        for parts in itertools.product(*per_class):
            m: Relabeling = {}
            for part in parts:
                m.update(part)
            yield m


def _degree_groups(d: Drawing, vertices: Sequence[Vertex]) -> Dict[int, List[Vertex]]:
    groups: Dict[int, List[Vertex]] = defaultdict(list)
    for v in vertices:
        groups[d.vertex_crossing_degree(v)].append(v)
    return groups


def pruned_relabelings(d2: Drawing, d1: Drawing) -> Iterator[Relabeling]:
    """Relabelings of ``d2`` onto ``d1``'s graph that keep every vertex's crossing degree.

    Only those can make the drawings CE-isomorphic, so this stream suffices for
    every kind except RS.
    """
    src, dst = d2.graph, d1.graph
    if sorted(src.sizes) != sorted(dst.sizes):
        raise GraphShapeMismatch(f"{src.signature()} vs {dst.signature()}")
    for perm in _class_matchings(src, dst):
        per_class = []
        feasible = True
        for i, j in enumerate(perm):
            gs = _degree_groups(d2, src.classes[i][1])
            gd = _degree_groups(d1, dst.classes[j][1])
            if {k: len(v) for k, v in gs.items()} != {k: len(v) for k, v in gd.items()}:
                feasible = False
                break
            for deg, vs in sorted(gs.items()):
                per_class.append([dict(zip(vs, p)) for p in itertools.permutations(gd[deg])])
        if not feasible:
            continue
        for parts in itertools.product(*per_class):
            m: Relabeling = {}
            for part in parts:
                m.update(part)
            yield m


def unlabeled_iso(d1: Drawing, d2: Drawing, kind: str) -> Tuple[bool, Optional[Relabeling]]:
    """Search for a relabeling of ``d2`` that makes the labeled predicate true.

    Returns ``(found, witness)`` where ``witness`` maps ``d2``'s vertices to
    ``d1``'s.
    """
    if kind not in _PREDICATES:
        raise ValueError(f"unknown kind {kind!r}")
    c1 = characteristics(d1)
    stream = admissible_relabelings(d2.graph, d1.graph) if kind == "rs" else pruned_relabelings(d2, d1)
    pred = _PREDICATES[kind]
    for m in stream:
        if pred(c1, characteristics(relabel(d2, m, d1.graph))):
            return True, m
    return False, None


@dataclass
class IsoReport:
    rs: bool
    ce: bool
    cr: bool
    ers: bool
    co: bool
    strong: bool
    labeled: bool = True
    witnesses: Dict[str, Relabeling] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, bool]:
        return {k: getattr(self, k) for k in KINDS}

    def lines(self) -> List[str]:
        out = [f"{k}={'true' if v else 'false'}" for k, v in self.as_dict().items()]
        for k in KINDS:
            if k in self.witnesses:
                m = self.witnesses[k]
                out.append(f"witness.{k}=" + " ".join(f"{a}->{b}" for a, b in m.items()))
        return out

    def cone_violations(self) -> List[str]:
        """Implications that hold by definition (and by the strong-isomorphism characterization)."""
        bad = []
        if self.ers and not (self.rs and self.cr):
            bad.append("ers => rs and cr")
        if (self.cr or self.co) and not self.ce:
            bad.append("cr or co => ce")
        if self.labeled and self.strong != (self.co and self.ers):
            bad.append("strong <=> co and ers")
        if not self.labeled and self.strong and not (self.co and self.ers):
            bad.append("strong => co and ers")
        return bad


def iso_report(d1: Drawing, d2: Drawing, labeled: bool = True) -> IsoReport:
    if labeled:
        c1, c2 = _chars(d1, d2)
        return IsoReport(**{k: _PREDICATES[k](c1, c2) for k in KINDS})
    values = {}
    witnesses = {}
    for k in KINDS:
        ok, w = unlabeled_iso(d1, d2, k)
        values[k] = ok
        if ok:
            witnesses[k] = w
    return IsoReport(**values, labeled=False, witnesses=witnesses)
