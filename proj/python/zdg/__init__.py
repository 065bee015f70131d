"""Zero-divisor graphs of finite commutative rings."""

from ._zdg import (
    Graph,
    ZdgError,
    alternating_four_cycle,
    are_isomorphic,
    aut_orbits,
    charpoly,
    gcd_classes,
    is_threshold,
    multiplicity,
    normalize_ring,
    quotient,
    ring_size,
    threshold_from_code,
    twin_classes,
    verify,
    zero_divisor_graph,
)

__all__ = [
    "Graph",
    "ZdgError",
    "alternating_four_cycle",
    "are_isomorphic",
    "aut_orbits",
    "charpoly",
    "gcd_classes",
    "is_threshold",
    "multiplicity",
    "normalize_ring",
    "quotient",
    "ring_size",
    "threshold_from_code",
    "twin_classes",
    "verify",
    "zero_divisor_graph",
]
