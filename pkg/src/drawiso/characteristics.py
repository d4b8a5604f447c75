"""The five characteristics of a drawing as detached, comparable values."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from .model import (
    CrossingKey,
    Cyclic,
    Drawing,
    Edge,
    PartitionedGraph,
    Vertex,
    crossing_str,
    edge_str,
    restrict_cyclic,
)

RotationSystem = Dict[Vertex, Cyclic]
CrossingEdgePairs = FrozenSet[CrossingKey]
CrossingRotations = Dict[CrossingKey, Cyclic]
CrossingOrders = Dict[Edge, Tuple[Edge, ...]]


@dataclass(frozen=True)
class ExtendedRotationSystem:
    rotation_system: Mapping[Vertex, Cyclic]
    crossing_rotations: Mapping[CrossingKey, Cyclic]


def rotation_system(d: Drawing) -> RotationSystem:
    return dict(d.rotations)


def inverse_rotations(graph: PartitionedGraph, rot: Mapping) -> dict:
    """Reverse every cyclic sequence in ``rot`` (works for RS and CR alike)."""
    return {k: graph.reverse(r) for k, r in rot.items()}


def crossing_pairs(d: Drawing) -> CrossingEdgePairs:
    g = d.graph
    return frozenset(g.crossing_key(e, f) for e, entries in d.crossings.items() for f, _ in entries)


def crossing_rotations(d: Drawing) -> CrossingRotations:
    return d.crossing_map()


def crossing_orders(d: Drawing) -> CrossingOrders:
    """Partner edges along each edge, walked from its canonical source."""
    return {e: tuple(f for f, _ in entries) for e, entries in d.crossings.items()}


def extended_rotation_system(d: Drawing) -> ExtendedRotationSystem:
    return ExtendedRotationSystem(rotation_system(d), crossing_rotations(d))


@dataclass(frozen=True)
class Characteristics:
    graph: PartitionedGraph
    rs: Mapping[Vertex, Cyclic]
    ce: CrossingEdgePairs
    cr: Mapping[CrossingKey, Cyclic]
    co: Mapping[Edge, Tuple[Edge, ...]]

    @property
    def ers(self) -> ExtendedRotationSystem:
        return ExtendedRotationSystem(self.rs, self.cr)

    def restrict(self, vertices: Iterable[Vertex]) -> "Characteristics":
        """Characteristics of the induced subdrawing, computed from these values alone."""
        keep = set(vertices)
        g = self.graph.induced(keep)

        def inside(e):
            return e[0] in keep and e[1] in keep

        return Characteristics(
            g,
            {v: g.normalize(restrict_cyclic(self.rs[v], keep)) for v in g.vertices},
            frozenset(k for k in self.ce if inside(k[0]) and inside(k[1])),
            {k: r for k, r in self.cr.items() if inside(k[0]) and inside(k[1])},
            {e: tuple(f for f in seq if inside(f)) for e, seq in self.co.items() if inside(e)},
        )


def characteristics(d: Drawing) -> Characteristics:
    return Characteristics(d.graph, rotation_system(d), crossing_pairs(d),
                           crossing_rotations(d), crossing_orders(d))


def format_characteristic(d: Drawing, which: str) -> List[str]:
    """Stable text form of one characteristic: one record per line, sorted keys."""
    g = d.graph
    if which == "rs":
        return [f"{v}: {' '.join(r)}" for v, r in sorted(d.rotations.items(), key=lambda kv: g.key(kv[0]))]
    if which == "ce":
        return sorted(crossing_str(k) for k in crossing_pairs(d))
    if which == "cr":
        return sorted(f"{crossing_str(k)}: {' '.join(r)}" for k, r in crossing_rotations(d).items())
    if which == "co":
        return sorted(f"{edge_str(e)}: {' '.join(edge_str(f) for f in seq)}".rstrip()
                      for e, seq in crossing_orders(d).items())
    if which == "ers":
        return ([f"rot {line}" for line in format_characteristic(d, "rs")]
                + [f"x {line}" for line in format_characteristic(d, "cr")])
    raise ValueError(f"unknown characteristic {which!r}")
