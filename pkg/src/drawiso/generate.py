"""Generate simple drawings by inserting edges one at a time through faces.

Restricting a simple drawing to a connected prefix of its edges gives a simple
drawing of that prefix. So every drawing is reached by routing each new edge
through the faces of the current planarization, crossing every existing edge
at most once and never an adjacent one. Callbacks prune partial drawings.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .model import Drawing, Edge, PartitionedGraph, Vertex, planarize_parts

__all__ = [
    "Partial",
    "grow",
    "all_drawings",
    "random_drawing",
    "connected_edge_order",
    "make_accept",
    "ce_may_cross",
    "ce_complete",
    "copy_extensions",
]


@dataclass
class Partial:
    """A drawing of a subset of the edges, in mutable working form."""

    edges: List[Edge]
    rot: Dict[Vertex, List[Vertex]]
    cr: Dict[Edge, List[tuple]]

    def copy(self) -> "Partial":
        return Partial(list(self.edges), {v: list(r) for v, r in self.rot.items()},
                       {e: list(x) for e, x in self.cr.items()})


def _on_sphere(p: Partial) -> bool:
    m = planarize_parts(p.edges, p.rot, p.cr)
    if not m.darts:
        return True
    nodes = len(set(m.node_of))
    return m.components() == 1 and nodes - len(m.darts) // 2 + m.face_count == 2


def _routes(p: Partial, new: Edge, may_cross: Callable[[Edge], bool],
            rng: Optional[random.Random] = None, detour: float = 0.0):
    """Yield ``(map, dart_u, path, dart_v)`` for every way to draw ``new``.

    ``dart_u`` is the dart after which ``new`` leaves ``u`` (None if ``u`` is
    not drawn yet), ``path`` lists the crossed ``(edge, fragment)`` pairs.
    With ``rng`` the search order is shuffled; ``detour`` is the chance of
    trying longer routes before ending in the current face.
    """
    u, v = new
    m = planarize_parts(p.edges, p.rot, p.cr)
    face_of: Dict[int, int] = {}
    for fi, face in enumerate(m.faces()):
        for d in face:
            face_of[d] = fi
    corners: Dict[Vertex, List[Tuple[int, int]]] = {u: [], v: []}
    for d, node in enumerate(m.node_of):
        if node in corners:
            corners[node].append((d, face_of[m.sigma[d]]))
    by_face: Dict[int, List[int]] = {}
    for d, fi in face_of.items():
        by_face.setdefault(fi, []).append(d)
    u_free, v_free = not corners[u], not corners[v]
    if u_free and v_free:
        if m.darts:
            raise ValueError("edge order must keep the drawn part connected")
        yield m, None, (), None
        return
    starts = [(None, f) for f in sorted(by_face)] if u_free else corners[u]

    def shuffled(xs):
        xs = list(xs)
        if rng is not None:
            rng.shuffle(xs)
        return xs

    def deeper(face, crossed, path):
        for d in shuffled(by_face.get(face, ())):
            e = m.darts[d].edge
            if e in crossed or set(e) & set(new) or not may_cross(e):
                continue
            crossed.add(e)
            path.append((e, m.darts[d].fragment))
            yield from dfs(face_of[m.alpha[d]], crossed, path)
            path.pop()
            crossed.discard(e)

    def dfs(face, crossed, path):
        ends = [(None, face)] if v_free else [c for c in corners[v] if c[1] == face]
        late = rng is not None and rng.random() < detour
        if late:
            yield from deeper(face, crossed, path)
        for c in shuffled(ends):
            yield tuple(path), c
        if not late:
            yield from deeper(face, crossed, path)

    for du, face in shuffled(starts):
        for path, (dv, _) in dfs(face, set(), []):
            yield m, du, path, dv


def _other(e: Edge, v: Vertex) -> Vertex:
    return e[1] if e[0] == v else e[0]


def _extend(p: Partial, new: Edge, g: PartitionedGraph,
            may_cross: Callable[[Edge], bool],
            accept: Callable[[Partial], bool],
            rng: Optional[random.Random] = None, detour: float = 0.0,
            tick: Callable[[], None] = lambda: None) -> Iterator[Partial]:
    seen = set()
    for m, du, path, dv in _routes(p, new, may_cross, rng, detour):
        base = p.copy()
        base.edges.append(new)
        for vertex, d in ((new[0], du), (new[1], dv)):
            r = base.rot.setdefault(vertex, [])
            other = _other(new, vertex)
            if d is None:
                r.append(other)
            else:
                r.insert(r.index(_other(m.darts[d].edge, vertex)) + 1, other)
        # each crossing can be traversed with either orientation of the old edge;
        # only the choices that keep the map on the sphere survive
        choices = list(itertools.product((0, 1), repeat=len(path)))
        if rng is not None:
            rng.shuffle(choices)
        for choice in choices:
            tick()
            q = base.copy()
            q.cr[new] = []
            for (e, j), c in zip(path, choice):
                rot = g.normalize((new[0], e[c], new[1], e[1 - c]))
                q.cr[new].append((e, rot))
                q.cr.setdefault(e, []).insert(j, (new, rot))
            if _on_sphere(q) and accept(q):
                key = (tuple(sorted((k, tuple(x)) for k, x in q.rot.items())),
                       tuple(sorted((k, tuple(x)) for k, x in q.cr.items())))
                if key not in seen:
                    seen.add(key)
                    yield q


def connected_edge_order(g: PartitionedGraph, first: Optional[Edge] = None) -> List[Edge]:
    """Edges of ``g`` ordered so that every prefix is connected."""
    rest = list(g.edges)
    order = [first or rest[0]]
    rest.remove(order[0])
    placed = set(order[0])
    while rest:
        e = next(e for e in rest if e[0] in placed or e[1] in placed)
        order.append(e)
        placed.update(e)
        rest.remove(e)
    return order


def _finish(g: PartitionedGraph, p: Partial) -> Drawing:
    rot = {v: g.normalize(r) for v, r in p.rot.items()}
    cr = {e: tuple((f, g.normalize(r)) for f, r in p.cr.get(e, ())) for e in g.edges}
    return Drawing(g, rot, cr)


def grow(g: PartitionedGraph, order: Optional[Sequence[Edge]] = None,
         may_cross: Callable[[Edge, Edge], bool] = lambda new, old: True,
         accept: Callable[[Partial], bool] = lambda p: True) -> Iterator[Drawing]:
    """Depth-first generation of all drawings whose every prefix passes ``accept``.

    ``may_cross(new, old)`` can forbid crossings up front. Every drawing is
    produced exactly once.
    """
    order = list(order or connected_edge_order(g))

    def rec(p: Partial, i: int):
        if i == len(order):
            yield _finish(g, p)
            return
        new = order[i]
        for q in _extend(p, new, g, lambda old: may_cross(new, old), accept):
            yield from rec(q, i + 1)

    yield from rec(Partial([], {}, {}), 0)


def all_drawings(g: PartitionedGraph) -> List[Drawing]:
    """Every labeled simple drawing of ``g`` (feasible up to about K3,3 or K2,4)."""
    return list(grow(g))


class _Restart(Exception):
    pass


def random_drawing(g: PartitionedGraph, rng: Optional[random.Random] = None,
                   detour: float = 0.3, max_crossings_per_edge: Optional[int] = None,
                   budget: int = 2000, restarts: int = 500) -> Drawing:
    """A random simple drawing of ``g`` (not uniformly distributed).

    Edges are inserted along randomly searched routes; a higher ``detour``
    gives more crossings. Dead ends backtrack, and an attempt that spends more
    than ``budget`` search steps starts over.
    """
    rng = rng or random.Random()
    order = connected_edge_order(g)
    steps = 0

    def tick() -> None:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise _Restart

    def may_cross(old: Edge) -> bool:
        tick()
        return True

    def accept(p: Partial) -> bool:
        if max_crossings_per_edge is None:
            return True
        return all(len(x) <= max_crossings_per_edge for x in p.cr.values())

    def rec(p: Partial, i: int) -> Optional[Partial]:
        if i == len(order):
            return p
        for q in _extend(p, order[i], g, may_cross, accept, rng, detour, tick):
            done = rec(q, i + 1)
            if done is not None:
                return done
        return None

    for _ in range(restarts + 1):
        steps = 0
        try:
            p = rec(Partial([], {}, {}), 0)
        except _Restart:
            continue
        if p is None:
            raise ValueError("no drawing satisfies the constraints")
        return _finish(g, p)
    raise ValueError(f"no drawing found within {restarts} restarts")


# constraint helpers -------------------------------------------------------


def _sublist_consistent(partial: Sequence, target: Sequence) -> bool:
    """The elements of ``partial`` named in ``target`` appear in ``target``'s order."""
    t = set(target)
    s = set(partial)
    return [x for x in partial if x in t] == [x for x in target if x in s]


def _cyclic_sub_consistent(partial: Sequence, target: Sequence) -> bool:
    """The elements of ``partial`` named in ``target`` appear in ``target``'s cyclic order."""
    t = set(target)
    part = [x for x in partial if x in t]
    if len(part) <= 2:
        return True
    s = set(part)
    sub = [x for x in target if x in s]
    i = sub.index(part[0])
    return sub[i:] + sub[:i] == part


def make_accept(g: PartitionedGraph,
                rotations: Optional[Dict[Vertex, Sequence[Vertex]]] = None,
                crossing_rots: Optional[Dict] = None,
                orders: Optional[Dict[Edge, Sequence[Edge]]] = None,
                extra: Optional[Callable[[Partial], bool]] = None) -> Callable[[Partial], bool]:
    """Accept partial drawings that agree with the given target data so far."""
    rotations = rotations or {}
    crossing_rots = {frozenset(k): g.normalize(r) for k, r in (crossing_rots or {}).items()}
    orders = orders or {}

    def accept(p: Partial) -> bool:
        for v, r in p.rot.items():
            if v in rotations and not _cyclic_sub_consistent(r, rotations[v]):
                return False
        for e, lst in p.cr.items():
            for f, r in lst:
                want = crossing_rots.get(frozenset((e, f)))
                if want is not None and g.normalize(r) != want:
                    return False
            if e in orders and not _sublist_consistent([f for f, _ in lst], orders[e]):
                return False
        return extra(p) if extra else True

    return accept


def ce_may_cross(ce: Iterable[Tuple[Edge, Edge]]) -> Callable[[Edge, Edge], bool]:
    allowed = {frozenset(k) for k in ce}
    return lambda new, old: frozenset((new, old)) in allowed


def ce_complete(ce: Iterable[Tuple[Edge, Edge]]) -> Callable[[Partial], bool]:
    """Each placed edge must already cross every placed partner from ``ce``."""
    partners: Dict[Edge, set] = {}
    for e, f in ce:
        partners.setdefault(e, set()).add(f)
        partners.setdefault(f, set()).add(e)

    def ok(p: Partial) -> bool:
        placed = set(p.edges)
        for e in p.edges:
            if {f for f, _ in p.cr.get(e, ())} != partners.get(e, set()) & placed:
                return False
        return True

    return ok


def copy_extensions(d: Drawing, original: Vertex, new: Optional[Vertex] = None,
                    beside: bool = True) -> Iterator[Drawing]:
    """Drawings that add a copy of ``original`` to its class.

    The original drawing is kept exactly. Each new edge ``u-new`` may cross the
    edges that ``u-original`` crosses and the edges at ``original``, which is
    how a copy drawn closely alongside ``original`` behaves. With ``beside``
    the new vertex must neighbour ``original`` in every rotation.
    """
    g = d.graph
    ci = g.class_of(original)
    name, vs = g.classes[ci]
    new = new or f"{name}{len(vs) + 1}"
    classes = list(g.classes)
    classes[ci] = (name, vs + (new,))
    ng = PartitionedGraph(tuple(classes))
    order = connected_edge_order(g) + [e for e in ng.edges if new in e]
    cm = d.crossing_map()
    pairs = {frozenset(k) for k in cm}

    def twin(e: Edge) -> Edge:
        return g.edge(_other(e, new), original)

    def may_cross(a: Edge, b: Edge) -> bool:
        if new in a:
            return frozenset((twin(a), b)) in pairs or original in b
        return frozenset((a, b)) in pairs

    old_complete = ce_complete(cm)

    def extra(p: Partial) -> bool:
        old = Partial([e for e in p.edges if new not in e], p.rot,
                      {e: [x for x in lst if new not in x[0]] for e, lst in p.cr.items()})
        return old_complete(old)

    accept = make_accept(ng, rotations=d.rotations, crossing_rots=cm,
                         orders={e: [f for f, _ in d.crossings[e]] for e in g.edges},
                         extra=extra)
    for x in grow(ng, order, may_cross, accept):
        if beside and not all(_adjacent(x.rotations[w], new, original) for w in ng.neighbors(new)):
            continue
        yield x


def _adjacent(rot: Sequence[Vertex], a: Vertex, b: Vertex) -> bool:
    n = len(rot)
    return (rot.index(a) - rot.index(b)) % n in (1, n - 1)
