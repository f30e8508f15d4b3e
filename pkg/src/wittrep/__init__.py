"""Exact desk-scale computations for polynomial representations of Witt-type Lie algebras.

Modules:

* ``operad`` and ``freealg``: the operads Trivial, Com, ComNu, As, their free algebras,
  derivations and tensor powers.
* ``wiring``: the wiring category of an operad and its action on tensor powers.
* ``catmod``: finitely presented modules over the wiring category, evaluation and characters.
* ``specialize``: passage to finitely many variables, Schur functors and generation checks.
* ``symfunc``: truncated symmetric functions, series and rational fitting.
* ``charexp``: character exponentials and the shifted power-sum expansion.
"""
from .catmod import ModulePresentation, Relation, evaluate, formal_character, hilbert_specialized
from .charexp import CharExpParams, e_A, expand_identity, rational_form, reconstruct, u_lambda
from .combinatorics import EMPTY, FiniteMap, Partition, partitions_of
from .errors import (
    CapExceeded, DomainError, InvariantViolation, PreconditionError, TruncationOverflow, WittRepError,
)
from .freealg import Derivation, Monomial, TensorElement, apply_derivation, bracket
from .operad import OperadElement, OperadId
from .symfunc import PolySeries, RationalForm, SymFunc, fit_rational, pi_n
from .wiring import WiringMorphism, act, compose_w, hom_basis, hom_dimension, schur_weyl_oracle

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "CharExpParams", "Derivation", "DomainError", "EMPTY", "FiniteMap",
    "InvariantViolation", "ModulePresentation", "Monomial", "OperadElement", "OperadId",
    "Partition", "PolySeries", "PreconditionError", "RationalForm", "Relation", "SymFunc",
    "TensorElement", "TruncationOverflow", "WiringMorphism", "WittRepError", "act",
    "apply_derivation", "bracket", "compose_w", "e_A", "evaluate", "expand_identity",
    "fit_rational", "formal_character", "hilbert_specialized", "hom_basis", "hom_dimension",
    "partitions_of", "pi_n", "rational_form", "reconstruct", "schur_weyl_oracle", "u_lambda",
]
