"""Combinatorial model of labeled simple drawings of complete multipartite graphs.

A drawing is stored as the data that determines it up to homeomorphism of the
sphere: the clockwise rotation at every vertex, and for every edge the ordered
list of edges it crosses together with the clockwise rotation at each crossing.
Crossing rotations list the far endpoints of the four edge fragments meeting at
the crossing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

Vertex = str
Edge = Tuple[Vertex, Vertex]
CrossingKey = Tuple[Edge, Edge]
Cyclic = Tuple[Vertex, ...]


# --------------------------------------------------------------------------
# errors


class DrawingError(ValueError):
    """Base class of all structural errors; carries an optional line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DrawingSyntaxError(DrawingError):
    pass


class UnknownVertex(DrawingError):
    pass


class SameClassEdge(DrawingError):
    pass


class DuplicateCrossingPair(DrawingError):
    pass


class NonAntipodalCrossing(DrawingError):
    pass


class ReciprocityViolation(DrawingError):
    pass


class AdjacentEdgesCross(DrawingError):
    pass


class SingleClassGraph(DrawingError):
    pass


class InvalidRotation(DrawingError):
    pass


class EmptyInducedGraph(DrawingError):
    pass


# --------------------------------------------------------------------------
# cyclic sequences


def normalize_cyclic(seq: Sequence[Vertex], key=None) -> Cyclic:
    """Rotate ``seq`` so that its minimal element (under ``key``) comes first."""
    seq = tuple(seq)
    if not seq:
        return seq
    i = min(range(len(seq)), key=(lambda j: key(seq[j])) if key else seq.__getitem__)
    return seq[i:] + seq[:i]


def reverse_cyclic(seq: Sequence[Vertex], key=None) -> Cyclic:
    return normalize_cyclic(tuple(reversed(seq)), key)


def cyclic_equal(a: Sequence, b: Sequence) -> bool:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return b[i:] + b[:i] == a


def restrict_cyclic(seq: Sequence[Vertex], keep) -> Cyclic:
    """Sub-sequence of the elements in ``keep``; relative cyclic order is kept."""
    return tuple(x for x in seq if x in keep)


# --------------------------------------------------------------------------
# graph


@dataclass(frozen=True)
class PartitionedGraph:
    """Complete multipartite graph given by its ordered, named classes.

    The order of the classes and of the vertices inside each class is part of
    the graph: it defines the canonical orientation of edges (from the vertex
    that comes first) and the normalized start of cyclic sequences.
    """

    classes: Tuple[Tuple[str, Tuple[Vertex, ...]], ...]
    _order: Dict[Vertex, Tuple[int, int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        classes = tuple((str(name), tuple(vs)) for name, vs in self.classes)
        object.__setattr__(self, "classes", classes)
        order = {}
        names = set()
        for ci, (name, vs) in enumerate(classes):
            if name in names:
                raise DrawingSyntaxError(f"duplicate class name {name!r}")
            names.add(name)
            if not vs:
                raise DrawingSyntaxError(f"class {name!r} is empty")
            for vi, v in enumerate(vs):
                if v in order:
                    raise DrawingSyntaxError(f"vertex label {v!r} used twice")
                order[v] = (ci, vi)
        object.__setattr__(self, "_order", order)

    @classmethod
    def from_sizes(cls, **sizes: int) -> "PartitionedGraph":
        """``PartitionedGraph.from_sizes(r=2, b=3)`` gives classes r1..r2, b1..b3."""
        return cls(tuple((name, tuple(f"{name}{i}" for i in range(1, n + 1)))
                         for name, n in sizes.items()))

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(v for _, vs in self.classes for v in vs)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(vs) for _, vs in self.classes)

    def __contains__(self, v) -> bool:
        return v in self._order

    def key(self, v: Vertex) -> Tuple[int, int]:
        return self._order[v]

    def class_of(self, v: Vertex) -> int:
        return self._order[v][0]

    def class_name(self, v: Vertex) -> str:
        return self.classes[self._order[v][0]][0]

    def neighbors(self, v: Vertex) -> Tuple[Vertex, ...]:
        c = self.class_of(v)
        return tuple(w for w in self.vertices if self.class_of(w) != c)

    def edge(self, u: Vertex, v: Vertex) -> Edge:
        """Canonically oriented edge between ``u`` and ``v``."""
        return (u, v) if self._order[u] < self._order[v] else (v, u)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        vs = self.vertices
        return tuple((u, v) for i, u in enumerate(vs) for v in vs[i + 1:]
                     if self.class_of(u) != self.class_of(v))

    def edge_key(self, e: Edge):
        return (self._order[e[0]], self._order[e[1]])

    def crossing_key(self, e: Edge, f: Edge) -> CrossingKey:
        return (e, f) if self.edge_key(e) < self.edge_key(f) else (f, e)

    def normalize(self, seq: Sequence[Vertex]) -> Cyclic:
        return normalize_cyclic(seq, self.key)

    def reverse(self, seq: Sequence[Vertex]) -> Cyclic:
        return reverse_cyclic(seq, self.key)

    def induced(self, keep: Iterable[Vertex]) -> "PartitionedGraph":
        keep = set(keep)
        return PartitionedGraph(tuple(
            (name, tuple(v for v in vs if v in keep))
            for name, vs in self.classes if any(v in keep for v in vs)))

    def signature(self) -> str:
        return " ".join(f"{name}={len(vs)}" for name, vs in self.classes)


def edge_str(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def crossing_str(k: CrossingKey) -> str:
    return f"{edge_str(k[0])}x{edge_str(k[1])}"


# --------------------------------------------------------------------------
# drawing


@dataclass(frozen=True, eq=False)
class Drawing:
    """A labeled simple drawing.

    ``rotations`` maps each vertex to its normalized clockwise rotation.
    ``crossings`` maps each canonically oriented edge to a tuple of
    ``(partner_edge, crossing_rotation)`` in the order met when walking the edge
    from its canonical source.
    """

    graph: PartitionedGraph
    rotations: Mapping[Vertex, Cyclic]
    crossings: Mapping[Edge, Tuple[Tuple[Edge, Cyclic], ...]]

    def __eq__(self, other):
        if not isinstance(other, Drawing):
            return NotImplemented
        return (self.graph == other.graph and dict(self.rotations) == dict(other.rotations)
                and dict(self.crossings) == dict(other.crossings))

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self.rotations.items())),
                     tuple(sorted(self.crossings.items()))))

    @classmethod
    def build(cls, graph: PartitionedGraph, rotations: Mapping[Vertex, Sequence[Vertex]],
              crossings: Mapping[Edge, Sequence[Tuple[Edge, Sequence[Vertex]]]] = None,
              check: bool = True) -> "Drawing":
        """Normalize raw data into a Drawing.

        Edges may be given in either orientation; an edge given against its
        canonical orientation has its crossing list reversed. Edges missing
        from ``crossings`` are uncrossed. With ``check`` the structural
        invariants are verified and the first violation is raised.
        """
        crossings = crossings or {}
        rot = {v: graph.normalize(rotations[v]) if v in rotations else ()
               for v in graph.vertices}
        clist: Dict[Edge, Tuple[Tuple[Edge, Cyclic], ...]] = {e: () for e in graph.edges}
        for e, entries in crossings.items():
            for v in e:
                if v not in graph:
                    raise UnknownVertex(f"unknown vertex {v!r}")
            ce = graph.edge(*e)
            entries = [(graph.edge(*f), graph.normalize(r)) for f, r in entries]
            if ce != tuple(e):
                entries.reverse()
            clist[ce] = tuple(entries)
        d = cls(graph, rot, clist)
        if check:
            problems = structural_errors(d)
            if problems:
                raise problems[0]
        return d

    # convenience views -------------------------------------------------

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self.graph.vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.graph.edges

    def crossing_map(self) -> Dict[CrossingKey, Cyclic]:
        out = {}
        for e, entries in self.crossings.items():
            for f, r in entries:
                out[self.graph.crossing_key(e, f)] = r
        return out

    @property
    def crossing_count(self) -> int:
        return sum(len(v) for v in self.crossings.values()) // 2

    def edge_crossing_count(self, e: Edge) -> int:
        return len(self.crossings[e])

    def vertex_crossing_degree(self, v: Vertex) -> int:
        return sum(len(self.crossings[self.graph.edge(v, w)]) for w in self.graph.neighbors(v))


def _antipodal(rot: Sequence[Vertex], e: Edge, f: Edge) -> bool:
    if len(rot) != 4 or set(rot) != set(e) | set(f):
        return False
    return {rot[0], rot[2]} in ({e[0], e[1]}, {f[0], f[1]}) and \
        {rot[1], rot[3]} in ({e[0], e[1]}, {f[0], f[1]})


def structural_errors(d: Drawing) -> List[DrawingError]:
    """Every violated structural invariant of ``d`` (planarity excluded)."""
    g = d.graph
    errs: List[DrawingError] = []
    if len(g.classes) < 2:
        errs.append(SingleClassGraph("a complete multipartite graph needs two classes"))
    for v in g.vertices:
        r = d.rotations.get(v, ())
        nb = g.neighbors(v)
        if sorted(r, key=g.key) != list(nb):
            errs.append(InvalidRotation(f"rotation of {v} must be a permutation of {' '.join(nb)}"))
    edges = set(g.edges)
    for e in d.crossings:
        if e not in edges:
            errs.append(SameClassEdge(f"{edge_str(e)} is not an edge of the graph"))
    cmap: Dict[Tuple[Edge, Edge], Cyclic] = {}
    for e in g.edges:
        seen = set()
        for f, r in d.crossings.get(e, ()):
            if any(v not in g for v in f):
                errs.append(UnknownVertex(f"unknown vertex in {edge_str(f)}"))
                continue
            if g.class_of(f[0]) == g.class_of(f[1]):
                errs.append(SameClassEdge(f"{edge_str(f)} joins two vertices of one class"))
                continue
            if set(e) & set(f):
                errs.append(AdjacentEdgesCross(f"adjacent edges {edge_str(e)} and {edge_str(f)} cross"))
                continue
            if f in seen:
                errs.append(DuplicateCrossingPair(f"{edge_str(e)} crosses {edge_str(f)} twice"))
                continue
            seen.add(f)
            if not _antipodal(r, e, f):
                errs.append(NonAntipodalCrossing(
                    f"rotation [{' '.join(r)}] of {crossing_str(g.crossing_key(e, f))} "
                    "does not alternate between the two edges"))
            cmap[(e, f)] = r
    for (e, f), r in cmap.items():
        back = cmap.get((f, e))
        if back is None:
            if (f, e) not in cmap and not any(p == e for p, _ in d.crossings.get(f, ())):
                errs.append(ReciprocityViolation(
                    f"{edge_str(e)} lists {edge_str(f)} but not conversely"))
        elif not cyclic_equal(r, back):
            errs.append(ReciprocityViolation(
                f"{edge_str(e)} and {edge_str(f)} disagree on the crossing rotation"))
    return errs


# --------------------------------------------------------------------------
# text format


_CLASS_RE = re.compile(r"^([A-Za-z_][A-Za-z_']*)=(\d+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph_line(text: str, lineno: Optional[int] = None) -> PartitionedGraph:
    body = text.split(":", 1)[1].split()
    classes = []
    for tok in body:
        m = _CLASS_RE.match(tok)
        if not m:
            raise DrawingSyntaxError(f"bad class declaration {tok!r}", lineno)
        n = int(m.group(2))
        if n < 1:
            raise DrawingSyntaxError(f"class {m.group(1)} must have at least one vertex", lineno)
        classes.append((m.group(1), tuple(f"{m.group(1)}{i}" for i in range(1, n + 1))))
    if len(classes) < 2:
        raise SingleClassGraph("a complete multipartite graph needs two classes", lineno)
    try:
        return PartitionedGraph(tuple(classes))
    except DrawingError as exc:
        raise type(exc)(exc.message, lineno) from None


def _parse_edge_token(g: PartitionedGraph, tok: str, lineno: int) -> Tuple[Vertex, Vertex]:
    parts = tok.split("-")
    if len(parts) != 2 or not all(parts):
        raise DrawingSyntaxError(f"bad edge token {tok!r}", lineno)
    for v in parts:
        if v not in g:
            raise UnknownVertex(f"unknown vertex {v!r}", lineno)
    if g.class_of(parts[0]) == g.class_of(parts[1]):
        raise SameClassEdge(f"{tok} joins two vertices of one class", lineno)
    return parts[0], parts[1]


def _parse_crossing_entries(g, e, rest: str, lineno: int):
    entries = []
    pos = 0
    pattern = re.compile(r"\s*x\s+(\S+)\s*\[([^\]]*)\]\s*")
    while pos < len(rest):
        m = pattern.match(rest, pos)
        if not m:
            raise DrawingSyntaxError(f"cannot parse crossing list near {rest[pos:]!r}", lineno)
        f = _parse_edge_token(g, m.group(1), lineno)
        labels = m.group(2).split()
        for v in labels:
            if v not in g:
                raise UnknownVertex(f"unknown vertex {v!r}", lineno)
        cf = g.edge(*f)
        if set(e) & set(cf):
            raise AdjacentEdgesCross(f"adjacent edges {edge_str(e)} and {edge_str(cf)} cross", lineno)
        if not _antipodal(labels, e, cf):
            raise NonAntipodalCrossing(
                f"rotation [{' '.join(labels)}] does not alternate between "
                f"{edge_str(e)} and {edge_str(cf)}", lineno)
        entries.append((cf, g.normalize(labels)))
        pos = m.end()
    return entries


def parse_drawing(text: str) -> Drawing:
    """Parse ``.sdraw`` text into a structurally validated :class:`Drawing`.

    Crossing lists are read in the direction the edge is written on its line.
    Planarity is not checked here; see :func:`validate`.
    """
    graph: Optional[PartitionedGraph] = None
    rotations: Dict[Vertex, Cyclic] = {}
    crossings: Dict[Edge, list] = {}
    edge_lines: Dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head = line.split(None, 1)[0]
        if line.startswith("classes:"):
            if graph is not None:
                raise DrawingSyntaxError("second classes line", lineno)
            graph = parse_graph_line(line, lineno)
            continue
        if graph is None:
            raise DrawingSyntaxError("expected 'classes:' before anything else", lineno)
        if head == "rot":
            try:
                label, rest = line[3:].split(":", 1)
            except ValueError:
                raise DrawingSyntaxError("rotation line needs ':'", lineno) from None
            v = label.strip()
            if v not in graph:
                raise UnknownVertex(f"unknown vertex {v!r}", lineno)
            if v in rotations:
                raise DrawingSyntaxError(f"second rotation for {v}", lineno)
            order = rest.split()
            for w in order:
                if w not in graph:
                    raise UnknownVertex(f"unknown vertex {w!r}", lineno)
            if sorted(order, key=graph.key) != list(graph.neighbors(v)):
                raise InvalidRotation(
                    f"rotation of {v} must list each of {' '.join(graph.neighbors(v))} once", lineno)
            rotations[v] = graph.normalize(order)
        elif head == "edge":
            try:
                label, rest = line[4:].split(":", 1)
            except ValueError:
                raise DrawingSyntaxError("edge line needs ':'", lineno) from None
            written = _parse_edge_token(graph, label.strip(), lineno)
            e = graph.edge(*written)
            if e in edge_lines:
                raise DrawingSyntaxError(f"second line for edge {edge_str(e)}", lineno)
            entries = _parse_crossing_entries(graph, e, rest, lineno)
            seen = set()
            for f, _ in entries:
                if f in seen:
                    raise DuplicateCrossingPair(f"{edge_str(e)} crosses {edge_str(f)} twice", lineno)
                seen.add(f)
            if written != e:
                entries.reverse()
            crossings[e] = entries
            edge_lines[e] = lineno
        else:
            raise DrawingSyntaxError(f"unknown directive {head!r}", lineno)
    if graph is None:
        raise DrawingSyntaxError("missing 'classes:' line")
    for v in graph.vertices:
        if v not in rotations:
            raise DrawingSyntaxError(f"missing rotation line for {v}")
    for e in graph.edges:
        if e not in crossings:
            raise DrawingSyntaxError(f"missing edge line for {edge_str(e)}")
    for e, entries in crossings.items():
        for f, r in entries:
            back = [rr for ff, rr in crossings[f] if ff == e]
            if not back:
                raise ReciprocityViolation(
                    f"{edge_str(e)} lists {edge_str(f)} but not conversely", edge_lines[e])
            if not cyclic_equal(back[0], r):
                raise ReciprocityViolation(
                    f"{edge_str(e)} and {edge_str(f)} disagree on the crossing rotation",
                    edge_lines[e])
    return Drawing(graph, rotations, {e: tuple(crossings[e]) for e in graph.edges})


def serialize(d: Drawing) -> str:
    """Canonical ``.sdraw`` text; byte-stable for equal drawings."""
    g = d.graph
    lines = ["classes: " + g.signature()]
    for v in g.vertices:
        lines.append(f"rot {v}: " + " ".join(d.rotations[v]))
    for e in g.edges:
        parts = [f"edge {edge_str(e)}:"]
        for f, r in d.crossings[e]:
            parts.append(f"x {edge_str(f)} [{' '.join(r)}]")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def _is_standard_graph(g: PartitionedGraph) -> bool:
    return all(vs == tuple(f"{name}{i}" for i in range(1, len(vs) + 1)) for name, vs in g.classes)


def standardize(d: Drawing) -> Drawing:
    """Rename vertices to ``<class><index>`` so the drawing can be serialized."""
    if _is_standard_graph(d.graph):
        return d
    g = d.graph
    target = PartitionedGraph(tuple((name, tuple(f"{name}{i}" for i in range(1, len(vs) + 1)))
                                    for name, vs in g.classes))
    mapping = {v: w for (_, vs), (_, ws) in zip(g.classes, target.classes) for v, w in zip(vs, ws)}
    return relabel(d, mapping, target)


# --------------------------------------------------------------------------
# transformations


def invert(d: Drawing) -> Drawing:
    """Mirror image: all vertex and crossing rotations reversed."""
    g = d.graph
    return Drawing(
        g,
        {v: g.reverse(r) for v, r in d.rotations.items()},
        {e: tuple((f, g.reverse(r)) for f, r in entries) for e, entries in d.crossings.items()},
    )


def relabel(d: Drawing, mapping: Mapping[Vertex, Vertex],
            target: Optional[PartitionedGraph] = None) -> Drawing:
    """Rename the vertices of ``d`` by ``mapping`` onto graph ``target``.

    ``target`` defaults to ``d.graph`` (a relabeling of the drawing onto its own
    vertex set). Crossing lists are reversed where the mapping flips an edge's
    canonical orientation.
    """
    g = target or d.graph
    rot = {mapping[v]: g.normalize([mapping[w] for w in r]) for v, r in d.rotations.items()}
    cr = {}
    for e, entries in d.crossings.items():
        me = (mapping[e[0]], mapping[e[1]])
        ce = g.edge(*me)
        new = [(g.edge(mapping[f[0]], mapping[f[1]]), g.normalize([mapping[x] for x in r]))
               for f, r in entries]
        if ce != me:
            new.reverse()
        cr[ce] = tuple(new)
    return Drawing(g, rot, cr)


def induced_subdrawing(d: Drawing, vertices: Iterable[Vertex]) -> Drawing:
    """Subdrawing induced by ``vertices``; empty classes are dropped."""
    keep = set(vertices)
    for v in keep:
        if v not in d.graph:
            raise UnknownVertex(f"unknown vertex {v!r}")
    g = d.graph.induced(keep)
    if len(g.classes) < 2:
        raise EmptyInducedGraph("the induced graph has no edges")
    rot = {v: g.normalize(restrict_cyclic(d.rotations[v], keep)) for v in g.vertices}
    cr = {}
    for e in g.edges:
        cr[e] = tuple((f, r) for f, r in d.crossings[e] if f[0] in keep and f[1] in keep)
    return Drawing(g, rot, cr)


def bipartite_subdrawing(d: Drawing, reds: Sequence[Vertex], blues: Sequence[Vertex],
                         names: Tuple[str, str] = ("r", "b")) -> Drawing:
    """Subdrawing formed by the edges between ``reds`` and ``blues`` only.

    Each side may mix vertices from several classes of ``d`` (edges inside a
    side are dropped), so this is not an induced subdrawing in general. The
    result is a drawing of the complete bipartite graph on the two sides,
    keeping the original labels.
    """
    red_set, blue_set = set(reds), set(blues)
    for v in red_set | blue_set:
        if v not in d.graph:
            raise UnknownVertex(f"unknown vertex {v!r}")
    if red_set & blue_set:
        raise ValueError("the two sides overlap")
    for u in red_set:
        for v in blue_set:
            if d.graph.class_of(u) == d.graph.class_of(v):
                raise SameClassEdge(f"{u} and {v} are in the same class")
    g = PartitionedGraph(((names[0], tuple(reds)), (names[1], tuple(blues))))

    def kept(e: Edge) -> bool:
        return (e[0] in red_set and e[1] in blue_set) or (e[0] in blue_set and e[1] in red_set)

    rot = {v: g.normalize(restrict_cyclic(d.rotations[v], blue_set if v in red_set else red_set))
           for v in g.vertices}
    cr = {}
    for e, entries in d.crossings.items():
        if not kept(e):
            continue
        new = tuple((g.edge(*f), g.normalize(r)) for f, r in entries if kept(f))
        cr[g.edge(*e)] = new if g.edge(*e) == e else tuple(reversed(new))
    return Drawing(g, rot, cr)


# --------------------------------------------------------------------------
# planarization


@dataclass(frozen=True)
class Dart:
    """Half of an edge fragment, seen from the node it leaves."""

    edge: Edge
    fragment: int
    end: int  # 0 = at the node nearer the canonical source


@dataclass
class CombinatorialMap:
    """Planarization of a drawing as darts with a rotation and a pairing."""

    darts: List[Dart]
    sigma: List[int]
    alpha: List[int]
    node_of: List[object]  # vertex label or crossing key per dart

    def faces(self) -> List[List[int]]:
        n = len(self.darts)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start]:
                continue
            face = []
            d = start
            while not seen[d]:
                seen[d] = True
                face.append(d)
                d = self.sigma[self.alpha[d]]
            out.append(face)
        return out

    @property
    def face_count(self) -> int:
        return len(self.faces())

    @property
    def node_count(self) -> int:
        return len(set(self.node_of))

    def components(self) -> int:
        n = len(self.darts)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(n):
            for o in (self.sigma[d], self.alpha[d]):
                a, b = find(d), find(o)
                if a != b:
                    parent[a] = b
        return len({find(d) for d in range(n)})


def planarize(d: Drawing) -> CombinatorialMap:
    """Build the combinatorial map whose nodes are vertices and crossings."""
    return planarize_parts(d.graph.edges, d.rotations, d.crossings)


def planarize_parts(edges: Sequence[Edge], rotations: Mapping[Vertex, Sequence[Vertex]],
                    crossings: Mapping[Edge, Sequence[Tuple[Edge, Cyclic]]]) -> CombinatorialMap:
    """Planarize a drawing of an arbitrary edge set.

    ``edges`` are oriented pairs; ``rotations`` lists, per vertex, the other
    endpoints of its edges in ``edges``; ``crossings`` follows each edge's
    orientation.
    """
    darts: List[Dart] = []
    index: Dict[Dart, int] = {}
    alpha: List[int] = []
    oriented: Dict[frozenset, Edge] = {}
    for e in edges:
        oriented[frozenset(e)] = e
        k = len(crossings.get(e, ()))
        for i in range(k + 1):
            a, b = Dart(e, i, 0), Dart(e, i, 1)
            index[a] = len(darts)
            darts.append(a)
            index[b] = len(darts)
            darts.append(b)
            alpha.extend([index[b], index[a]])
    sigma = [0] * len(darts)
    node_of: List[object] = [None] * len(darts)

    def link(cycle, node):
        for j, x in enumerate(cycle):
            sigma[x] = cycle[(j + 1) % len(cycle)]
            node_of[x] = node

    for v, rot in rotations.items():
        cycle = []
        for w in rot:
            e = oriented[frozenset((v, w))]
            if e[0] == v:
                cycle.append(index[Dart(e, 0, 0)])
            else:
                cycle.append(index[Dart(e, len(crossings.get(e, ())), 1)])
        if cycle:
            link(cycle, v)

    position = {}
    rotation_at = {}
    for e in edges:
        for j, (f, r) in enumerate(crossings.get(e, ())):
            position[(e, f)] = j
            if (f, e) not in rotation_at:
                rotation_at[(e, f)] = r
    for key, rot in rotation_at.items():
        cycle = []
        for x in rot:
            e, f = (key[0], key[1]) if x in key[0] else (key[1], key[0])
            j = position[(e, f)]
            if x == e[0]:
                cycle.append(index[Dart(e, j, 1)])
            else:
                cycle.append(index[Dart(e, j + 1, 0)])
        link(cycle, tuple(sorted(key)))
    return CombinatorialMap(darts, sigma, alpha, node_of)


@dataclass
class ValidationReport:
    realizable: bool
    errors: List[str]
    vertices: int = 0
    edges: int = 0
    crossings: int = 0
    faces: Optional[int] = None
    components: Optional[int] = None

    @property
    def euler_characteristic(self) -> Optional[int]:
        if self.faces is None:
            return None
        return (self.vertices + self.crossings) - (self.edges + 2 * self.crossings) + self.faces

    def lines(self) -> List[str]:
        out = [f"realizable={'true' if self.realizable else 'false'}",
               f"vertices={self.vertices}", f"edges={self.edges}", f"crossings={self.crossings}"]
        if self.faces is not None:
            out += [f"faces={self.faces}", f"components={self.components}",
                    f"euler_characteristic={self.euler_characteristic}"]
        out += [f"error={msg}" for msg in self.errors]
        return out


def validate(d) -> ValidationReport:
    """Structural checks plus the sphere test on the planarization.

    Accepts a :class:`Drawing` or ``.sdraw`` text. A drawing is realizable when
    it is structurally sound and its planarization is connected with Euler
    characteristic 2.
    """
    if isinstance(d, str):
        try:
            d = parse_drawing(d)
        except DrawingError as exc:
            return ValidationReport(False, [f"{type(exc).__name__}: {exc}"])
    g = d.graph
    problems = structural_errors(d)
    rep = ValidationReport(False, [f"{type(p).__name__}: {p}" for p in problems],
                           len(g.vertices), len(g.edges), d.crossing_count)
    if problems:
        return rep
    m = planarize(d)
    rep.faces = m.face_count
    rep.components = m.components()
    if rep.components != 1:
        rep.errors.append(f"planarization has {rep.components} components")
    if rep.euler_characteristic != 2:
        rep.errors.append(f"Euler characteristic is {rep.euler_characteristic}, not 2")
    rep.realizable = not rep.errors
    return rep


def is_realizable(d: Drawing) -> bool:
    return validate(d).realizable


def iter_sdraw_blocks(text: str) -> Iterator[Tuple[int, str]]:
    """Split concatenated ``.sdraw`` text at ``---`` lines; yields (first line, block)."""
    block: List[str] = []
    start = 1
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip() == "---":
            if any(_strip(x) for x in block):
                yield start, "\n".join(block) + "\n"
            block, start = [], lineno + 1
        else:
            block.append(line)
    if any(_strip(x) for x in block):
        yield start, "\n".join(block) + "\n"
