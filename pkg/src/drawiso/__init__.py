"""Simple drawings of complete multipartite graphs and their isomorphism types."""

from .characteristics import (
    Characteristics,
    characteristics,
    crossing_orders,
    crossing_pairs,
    crossing_rotations,
    extended_rotation_system,
    rotation_system,
)
from .isomorphism import (
    KINDS,
    IsoReport,
    admissible_relabelings,
    ce_iso,
    co_iso,
    cr_iso,
    ers_iso,
    iso_report,
    rs_iso,
    strong_iso,
    unlabeled_iso,
)
from .model import (
    Drawing,
    DrawingError,
    PartitionedGraph,
    induced_subdrawing,
    invert,
    parse_drawing,
    relabel,
    serialize,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Characteristics", "characteristics", "crossing_orders", "crossing_pairs",
    "crossing_rotations", "extended_rotation_system", "rotation_system",
    "KINDS", "IsoReport", "admissible_relabelings", "ce_iso", "co_iso", "cr_iso",
    "ers_iso", "iso_report", "rs_iso", "strong_iso", "unlabeled_iso",
    "Drawing", "DrawingError", "PartitionedGraph", "induced_subdrawing", "invert",
    "parse_drawing", "relabel", "serialize", "validate",
]
