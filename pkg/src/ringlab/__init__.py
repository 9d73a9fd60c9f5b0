"""Finite rings with involution: the natural partial order and comparability axioms, by exhaustive search."""

from .report import CheckItem, CheckReport
from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteStarRing,
    RingError,
    SizeCapError,
    ValidationReport,
    build_corner,
    build_matrix_ring,
    build_product,
    build_quotient,
    build_zn,
    center,
    ideal_closure,
    is_central,
    is_commutative,
    is_proper_involution,
    is_star_ideal,
    matrix_index,
    validate,
)
from .spec import build, load_table, parse_spec, save_table

__version__ = "0.1.0"
