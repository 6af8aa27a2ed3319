"""Monomial retractions of polynomial rings and their exponent matrices."""

from .domain import INTEGERS, RATIONALS, Domain, DomainElement, integers_mod, parse_domain
from .errors import InputError, RejectedError
from .matrix import (
    ExponentMatrix,
    characterize_nonzero_rows,
    from_monic_map,
    is_idempotent,
    rank,
    structure_report,
    to_monic_map,
)
from .monomial import ZERO, Monomial, MonomialMap, compose, is_monic, is_nondegenerate, is_retraction, substitute
from .same_retract import count_same_retract, enumerate_same_retract, gamma_sets, same_image
from .structure import associated_monic, decompose, polynomial_ring_witness
from .transform import Permutation, conjugate, is_standard, permute_columns, standardize

__version__ = "0.1.0"
