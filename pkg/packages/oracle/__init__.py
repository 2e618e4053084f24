from .enumeration import (
    PolySet,
    composition_set,
    exhaustive_decomposables,
    intersection_set,
    oracle_count_D,
    oracle_count_union,
    orbit_enumerate,
)

__all__ = [
    "PolySet",
    "composition_set",
    "exhaustive_decomposables",
    "intersection_set",
    "oracle_count_D",
    "oracle_count_union",
    "orbit_enumerate",
]
