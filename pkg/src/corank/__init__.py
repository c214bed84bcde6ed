"""Exact computations with right ideals and subalgebras of finite co-rank in free algebras.

The submodules build on one another:

``rings``, ``linalg``
    exact coefficient arithmetic and canonical forms over ZZ, QQ and GF(p)
``free_algebra``, ``membership``
    noncommutative polynomials and capped ideal-membership search
``quotient_rep``
    finite representations of right ideals and subalgebras
``presentation``, ``extension``
    finite presentations of right ideals, restriction and extension of ideals
``generation``
    finite generating sets of subalgebras with explicit rewriting
``documents``, ``cli``
    JSON documents and the ``corank`` command
"""

from .free_algebra import Alphabet, AlgebraHom, Polynomial, apply_hom, format_poly, parse_poly
from .quotient_rep import (
    AlgebraRep,
    CyclicModuleRep,
    IdealClass,
    InvalidRepresentation,
    co_rank_invariants,
    is_member,
    reduce_to_ideal,
    validate_rep,
)
from .rings import GF, QQ, ZZ, Ring

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AlgebraHom", "Polynomial", "apply_hom", "format_poly", "parse_poly",
    "AlgebraRep", "CyclicModuleRep", "IdealClass", "InvalidRepresentation", "co_rank_invariants",
    "is_member", "reduce_to_ideal", "validate_rep", "GF", "QQ", "ZZ", "Ring",
]
