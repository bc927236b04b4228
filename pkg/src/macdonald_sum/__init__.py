"""Symmetric functions from nested Hecke-operator sums.

Exact arithmetic over Q(q, t) for Macdonald P polynomials and their
Hall-Littlewood, q-Whittaker, Jack and monomial limits, a Gram-Schmidt
oracle, and numeric checks of a matrix-product (Fock trace) formula.
"""

from .combinat import coset_reps, enumerate_partitions
from .field import ParamRing, RationalFunction, parse_rf
from .hecke import apply_T, apply_T_word
from .macdonald import (
    compose_f,
    hall_littlewood,
    jack_P,
    macdonald_P,
    monomial_limit,
    nonsym_f,
    q_whittaker_P,
)
from .oracle import gram_schmidt_P, schur
from .polyring import Polynomial, specialize_params

__version__ = "0.1.0"

__all__ = [
    "ParamRing",
    "Polynomial",
    "RationalFunction",
    "apply_T",
    "apply_T_word",
    "compose_f",
    "coset_reps",
    "enumerate_partitions",
    "gram_schmidt_P",
    "hall_littlewood",
    "jack_P",
    "macdonald_P",
    "monomial_limit",
    "nonsym_f",
    "parse_rf",
    "q_whittaker_P",
    "schur",
    "specialize_params",
]
