"""Polynomial representation of the type A Hecke algebra.

    T_i = t - (t x_i - x_{i+1}) / (x_i - x_{i+1}) (1 - s_i)

is evaluated as ``t f - (t x_i - x_{i+1}) g`` with ``g`` the exact quotient
``(f - s_i f) / (x_i - x_{i+1})``, so no x-denominators ever appear.
"""

from __future__ import annotations

import threading
from typing import Sequence

from .polyring import (
    Polynomial,
    _check_index,
    _pair_quotient,
    combine,
    divide_difference_quotient,
    multiply_linear,
    transpose_vars,
)

HeckeWord = tuple


class Counters:
    """Process-wide count of generator applications (for benchmarks)."""

    def __init__(self):
        self._lock = threading.Lock()
        self.generator_calls = 0

    def bump(self):
        with self._lock:
            self.generator_calls += 1

    def reset(self):
        with self._lock:
            self.generator_calls = 0


counters = Counters()


def apply_T(i: int, f: Polynomial) -> Polynomial:
    """T_i f."""
    _check_index(i, f)
    counters.bump()
    ring = f.ring
    t = ring.gen_poly("t")
    one = ring.poly_const(1)
    neg = ring.poly_const(-1)
    neg_t = -t
    a, b = i - 1, i
    pieces = []
    for m, c in f.terms.items():
        pieces.append((m, c, t))
        # -(t x_i - x_{i+1}) * quotient(m)
        for e, sign in _pair_quotient(m, a, b):
            ea = list(e)
            ea[a] += 1
            eb = list(e)
            eb[b] += 1
            pieces.append((tuple(ea), c, neg_t if sign > 0 else t))
            pieces.append((tuple(eb), c, one if sign > 0 else neg))
    return combine(f.n, ring, pieces)


def apply_T_reference(i: int, f: Polynomial) -> Polynomial:
    """T_i built literally from transpose/quotient/multiply (slower; used in tests)."""
    ring = f.ring
    t = ring.gen_poly("t")
    g = divide_difference_quotient(i, f)
    return f.scale(ring.from_poly(t)) - multiply_linear(g, i, t, i + 1, ring.poly_const(-1))


def _check_word(word: Sequence[int], f: Polynomial):
    for i in word:
        _check_index(i, f)


def apply_T_word(word: Sequence[int], f: Polynomial, cache: dict | None = None) -> Polynomial:
    """T_{w1} T_{w2} ... T_{wk} f, rightmost generator first.

    ``cache`` maps word suffixes to images of this same ``f``; pass one dict
    per input polynomial to share work between words with common suffixes.
    """
    _check_word(word, f)
    return _apply_word(apply_T, word, f, cache)


def _apply_word(op, word, f, cache):
    word = tuple(word)
    if cache is None:
        g = f
        for i in reversed(word):
            g = op(i, g)
        return g
    # longest cached suffix
    start = len(word)
    g = f
    for k in range(len(word)):
        hit = cache.get(word[k:])
        if hit is not None:
            start, g = k, hit
            break
    for k in range(start - 1, -1, -1):
        g = op(word[k], g)
        cache[word[k:]] = g
    return g


def apply_divided_difference(i: int, f: Polynomial) -> Polynomial:
    """D_i f = x_{i+1} (f - s_i f) / (x_i - x_{i+1}), the t = 0 value of T_i."""
    _check_index(i, f)
    counters.bump()
    a, b = i - 1, i
    one = f.ring.poly_const(1)
    neg = f.ring.poly_const(-1)
    pieces = []
    for m, c in f.terms.items():
        for e, sign in _pair_quotient(m, a, b):
            e = list(e)
            e[b] += 1
            pieces.append((tuple(e), c, one if sign > 0 else neg))
    return combine(f.n, f.ring, pieces)


def apply_D_word(word: Sequence[int], f: Polynomial, cache: dict | None = None) -> Polynomial:
    _check_word(word, f)
    return _apply_word(apply_divided_difference, word, f, cache)


def apply_s_word(word: Sequence[int], f: Polynomial) -> Polynomial:
    """Plain transpositions s_{w1} ... s_{wk} f."""
    _check_word(word, f)
    for i in reversed(tuple(word)):
        f = transpose_vars(i, f)
    return f
