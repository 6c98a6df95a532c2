"""Short difference families and block designs from fixed-point-free automorphism groups."""

from ._core import (
    AutomorphismGroup,
    Endomorphism,
    Error,
    FiniteField,
    FiniteGroup,
    catalog,
    classification_check,
    closure,
    development,
    ferrero,
    ferrero_with_zero,
    field_mult,
    is_fpf,
    matrix,
    one_minus,
    orbit_family,
    run_cli,
    scalar,
    segments,
    segments_order6,
    transnormal,
    verify_bibd,
    verify_sdf,
)

__all__ = [
    "AutomorphismGroup",
    "Endomorphism",
    "Error",
    "FiniteField",
    "FiniteGroup",
    "catalog",
    "classification_check",
    "closure",
    "development",
    "ferrero",
    "ferrero_with_zero",
    "field_mult",
    "is_fpf",
    "matrix",
    "one_minus",
    "orbit_family",
    "run_cli",
    "scalar",
    "segments",
    "segments_order6",
    "transnormal",
    "verify_bibd",
    "verify_sdf",
]
