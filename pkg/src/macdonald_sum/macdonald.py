"""Symmetric Macdonald polynomials from the nested Hecke-operator sum.

For a partition lam with largest part r, write lam[k] for lam with parts
<= k zeroed and x_mu for the column monomial x_1 ... x_{l(mu)}. Then

    g_r = 1
    g_i = sum_{w in S_{lam[i]}} C_i(lam[i-1], w.lam[i]) T_w (x_{lam[i]} g_{i+1})
    P_lam = sum_{w in S_lam} T_w (x_lam g_1)

and f_lam = x_lam g_1 is the monic non-symmetric polynomial whose
Hecke orbit sums to P_lam. The specializations at t = 1, q = 0, t = 0 and
the Jack limit reuse the same nested loop with other operators and weights.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from . import combinat
from .field import (
    HALL_LITTLEWOOD_SYMBOLS,
    JACK_SYMBOLS,
    MACDONALD_SYMBOLS,
    NO_SYMBOLS,
    Q_WHITTAKER_SYMBOLS,
    ParamRing,
    RationalFunction,
    rf_normalize,
)
from .hecke import apply_D_word, apply_s_word, apply_T_word
from .polyring import Polynomial, combine, divide_linear

MAC = ParamRing.get(MACDONALD_SYMBOLS)
HL = ParamRing.get(HALL_LITTLEWOOD_SYMBOLS)
QW = ParamRing.get(Q_WHITTAKER_SYMBOLS)
JACK = ParamRing.get(JACK_SYMBOLS)

STRATEGIES = ("naive", "memoized", "parallel")


def clear_caches():
    """Drop memoized coefficients and non-symmetric building blocks."""
    _coefficient.cache_clear()
    level_f.cache_clear()


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("MACDONALD_SUM_THREADS", "0")) or (os.cpu_count() or 1))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class CoefficientQuery:
    level: int
    top: tuple
    bottom: tuple
    r: int

    def validate(self):
        if len(self.top) != len(self.bottom):
            raise ValueError(f"length mismatch: {self.top} vs {self.bottom}")
        if not combinat.is_partition(self.top):
            raise ValueError(f"top row {self.top} is not a partition")
        if self.level < 1 or any(p < 0 for p in self.bottom):
            raise ValueError(f"malformed coefficient query {self}")


def _vanishes(top, bottom) -> bool:
    return any(0 < a < b for a, b in zip(top, bottom))


@lru_cache(maxsize=None)
def _coefficient(kind: str, i: int, top: tuple, bottom: tuple, r: int) -> RationalFunction:
    CoefficientQuery(i, top, bottom, r).validate()
    ring = {"macdonald": MAC, "q-whittaker": QW, "jack": JACK}[kind]
    if _vanishes(top, bottom):
        return ring.zero
    conj = combinat.conjugate(top)
    ci = combinat.conjugate_at(conj, i)
    if kind == "jack":
        alpha = ring.gen_poly("alpha")
        num = ring.poly_const(1)
        den = ring.poly_const(1)
        for j in range(i + 1, r + 1):
            shift = ci - combinat.conjugate_at(conj, j)
            for k in range(1, combinat.b_stat(top, bottom, j) + 1):
                num *= k
                den *= (j - i) * alpha + (shift + k)
        return rf_normalize(num, den, ring)
    q = ring.gen_poly("q")
    qexp = sum((j - i) * combinat.a_stat(top, bottom, j) for j in range(i + 1, r + 1))
    if kind == "q-whittaker":
        return ring.from_poly(q**qexp)
    t = ring.gen_poly("t")
    num = q**qexp
    den = ring.poly_const(1)
    for j in range(i + 1, r + 1):
        shift = ci - combinat.conjugate_at(conj, j)
        for k in range(1, combinat.b_stat(top, bottom, j) + 1):
            num *= 1 - t**k
            den *= 1 - q ** (j - i) * t ** (shift + k)
    return rf_normalize(num, den, ring)


def coefficient_C(query: CoefficientQuery) -> RationalFunction:
    """C_i(top, bottom) over Q(q, t); ``query.r`` is the largest part of the original partition."""
    return _coefficient("macdonald", query.level, tuple(query.top), tuple(query.bottom), query.r)


def coefficient(level: int, top, bottom, r: int, kind: str = "macdonald") -> RationalFunction:
    return _coefficient(kind, level, tuple(top), tuple(bottom), r)


# ---------------------------------------------------------------------------
# the nested evaluator


def _normalize_input(lam: Sequence[int], n: int) -> tuple:
    lam = tuple(int(p) for p in lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"partition {lam} needs more than n={n} variables")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    return combinat.as_partition(lam)


def column_monomial(mu: Sequence[int]) -> tuple:
    """Exponent vector of x_mu = x_1 ... x_{l(mu)}."""
    ell = combinat.length(mu)
    return (1,) * ell + (0,) * (len(mu) - ell)


@dataclass(frozen=True)
class _Family:
    ring: ParamRing
    kind: str  # coefficient kind
    word_op: Callable


_FAMILIES = {
    "macdonald": _Family(MAC, "macdonald", apply_T_word),
    "q-whittaker": _Family(QW, "q-whittaker", apply_D_word),
    "jack": _Family(JACK, "jack", lambda w, f, cache=None: apply_s_word(w, f)),
}


def _weighted_sum(n, ring, weighted) -> Polynomial:
    pieces = []
    one = ring.poly_const(1)
    for w, poly in weighted:
        for m, c in poly.terms.items():
            pieces.append((m, c if w is None else c * w, one))
    return combine(n, ring, pieces)


def _orbit_sum(family, lam, h, weight_fn, strategy):
    """sum over coset reps w of lam of weight(w) * T_w h, skipping zero weights."""
    reps = combinat.coset_reps(lam)
    jobs = []
    for c in reps:
        w = weight_fn(c.arrangement) if weight_fn else None
        if w is not None and w.is_zero():
            continue
        jobs.append((w, c.word))
    if strategy == "parallel" and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=_thread_cap()) as pool:
            images = list(pool.map(lambda job: family.word_op(job[1], h), jobs))
    else:
        cache = {} if strategy == "memoized" else None
        images = [family.word_op(word, h, cache) for _, word in jobs]
    return _weighted_sum(h.n, family.ring, [(w, img) for (w, _), img in zip(jobs, images)])


def _inner_accumulator(family, lam, n, strategy) -> Polynomial:
    """g_1 of the nested product (1 when r <= 1)."""
    r = lam[0] if lam else 0
    g = Polynomial.one(n, family.ring)
    for i in range(r - 1, 0, -1):
        lam_i = combinat.truncate(lam, i)
        top = combinat.truncate(lam, i - 1)
        h = g.mul_monomial(column_monomial(lam_i))
        weight = lambda arr, i=i, top=top: _coefficient(family.kind, i, top, tuple(arr), r)
        g = _orbit_sum(family, lam_i, h, weight, strategy)
    return g


def _symmetric(family_name: str, lam, n: int, strategy: str) -> Polynomial:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    family = _FAMILIES[family_name]
    lam = _normalize_input(lam, n)
    if not any(lam):
        return Polynomial.one(n, family.ring)
    g = _inner_accumulator(family, lam, n, strategy)
    h = g.mul_monomial(column_monomial(lam))
    return _orbit_sum(family, lam, h, None, strategy)


def macdonald_P(lam: Sequence[int], n: int, strategy: str = "memoized") -> Polynomial:
    """P_lam(x_1..x_n; q, t) over Q(q, t)."""
    return _symmetric("macdonald", lam, n, strategy)


def q_whittaker_P(lam: Sequence[int], n: int, strategy: str = "memoized") -> Polynomial:
    """P_lam(x; q, 0) via divided differences and the weights q^{sum (j-i) a_j}."""
    return _symmetric("q-whittaker", lam, n, strategy)


def jack_P(lam: Sequence[int], n: int) -> Polynomial:
    """Jack P^(alpha)_lam via plain permutations and the Jack weights."""
    return _symmetric("jack", lam, n, "naive")


# ---------------------------------------------------------------------------
# non-symmetric family


def nonsym_f(lam: Sequence[int], n: int) -> Polynomial:
    """f_lam for a partition lam: monic, with P_lam = sum_w T_w f_lam."""
    lam = tuple(lam)
    if not combinat.is_partition(lam):
        raise ValueError(f"{lam} is not a partition; use compose_f for compositions")
    lam = _normalize_input(lam, n)
    r = lam[0] if lam else 0
    if r == 0:
        return Polynomial.one(n, MAC)
    return level_f(1, lam, r)


@lru_cache(maxsize=None)
def level_f(s: int, lam: tuple, r: int) -> Polynomial:
    """f^{(s)}_lam for a partition with parts in {0, s, ..., r}.

    Iterates f^{(s)}_lam = x_lam sum_mu C_s(lam, mu) f^{(s+1)}_mu, where each
    f^{(s+1)}_mu is the Hecke image of f^{(s+1)}_{mu+}; f^{(r)}_mu = x_mu.
    """
    n = len(lam)
    x_lam = column_monomial(lam)
    if s >= r:
        return Polynomial.monomial(x_lam, MAC)
    below = combinat.truncate(lam, s)
    base = level_f(s + 1, below, r)
    weighted = []
    for c in combinat.coset_reps(below):
        w = _coefficient("macdonald", s, lam, c.arrangement, r)
        if w.is_zero():
            continue
        weighted.append((w, apply_T_word(c.word, base)))
    return _weighted_sum(n, MAC, weighted).mul_monomial(x_lam)


def compose_f(mu: Sequence[int]) -> Polynomial:
    """f_mu for any composition: T_w f_{mu+} with w a reduced word from mu+ to mu."""
    mu = tuple(mu)
    plus = combinat.sort_desc(mu)
    return apply_T_word(combinat.reduced_word(plus, mu), nonsym_f(plus, len(mu)))


# ---------------------------------------------------------------------------
# Hall-Littlewood, monomial


def hall_littlewood(lam: Sequence[int], n: int, mode: str = "hecke_sum") -> Polynomial:
    """Hall-Littlewood P_lam(x; t) over Q(t).

    ``hecke_sum``: sum_w T_w x^lam.
    ``standard_sum``: sum_w w(x^lam prod_{lam_i > lam_j} (x_i - t x_j)/(x_i - x_j)),
    symmetrized over the Vandermonde and divided out exactly.
    """
    lam = _normalize_input(lam, n)
    if mode == "hecke_sum":
        h = Polynomial.monomial(lam, HL)
        return _weighted_sum(n, HL, [(None, apply_T_word(c.word, h)) for c in combinat.coset_reps(lam)])
    if mode == "standard_sum":
        return _hl_standard(lam, n)
    raise ValueError(f"unknown mode {mode!r}")


def _hl_standard(lam, n) -> Polynomial:
    ring = HL
    t = ring.gen_poly("t")
    one = ring.poly_const(1)
    # x^lam prod_{i<j, lam_i > lam_j}(x_i - t x_j) prod_{i<j, lam_i = lam_j}(x_i - x_j)
    base = Polynomial.monomial(lam, ring)
    for i in range(n):
        for j in range(i + 1, n):
            coeff_j = -t if lam[i] > lam[j] else -one
            base = _times_linear(base, i, one, j, coeff_j)
    total = Polynomial.zero(n, ring)
    seen = set()
    for perm in permutations(range(n)):
        image = tuple(lam[perm.index(k)] for k in range(n))
        if image in seen:
            continue
        seen.add(image)
        term = base.permute_variables(perm)
        total = total + (term if _sign(perm) > 0 else -term)
    # divide by the Vandermonde prod_{i<j} (x_i - x_j)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = divide_linear(total, i, j)
    return total


def _times_linear(f, i, ci, j, cj):
    pieces = []
    for m, c in f.terms.items():
        for idx, p in ((i, ci), (j, cj)):
            e = list(m)
            e[idx] += 1
            pieces.append((tuple(e), c, p))
    return combine(f.n, f.ring, pieces)


def _sign(perm) -> int:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


def monomial_limit(lam: Sequence[int], n: int, symbols=NO_SYMBOLS) -> Polynomial:
    """m_lam: the sum of x^mu over distinct rearrangements mu of lam."""
    ring = ParamRing.get(tuple(symbols))
    lam = _normalize_input(lam, n)
    return Polynomial(n, ring, {arr: 1 for arr in combinat.distinct_rearrangements(lam)})
