"""Numerical evaluation of the t-boson matrix product for f_lambda.

Every copy of the t-boson algebra is traced in the Fock representation

    phi |m> = (1 - t^m) |m-1>,  phi^dag |m> = |m+1>,  k |m> = t^m |m>,

truncated to 0 <= m <= M. The twist k^{(l-s)u} with q = t^u is carried as
a diagonal token with eigenvalue q^{(l-s) m}, so u is never needed. Copies
commute, so a trace over all of them is the product of one-copy traces.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import combinat
from .field import rf_eval
from .macdonald import coefficient, column_monomial, compose_f

DEFAULT_CUTOFF = 80


class DivergentTraceError(ValueError):
    pass


@dataclass(frozen=True)
class BosonToken:
    kind: str  # raise | lower | diag
    a: int = 0  # diag: eigenvalue t^{a m} q^{b m}
    b: int = 0

    def __post_init__(self):
        if self.kind not in ("raise", "lower", "diag"):
            raise ValueError(f"unknown token kind {self.kind!r}")
        if self.kind != "diag" and (self.a or self.b):
            raise ValueError("exponents are only meaningful on diag tokens")


RAISE = BosonToken("raise")
LOWER = BosonToken("lower")
K = BosonToken("diag", 1, 0)


@dataclass(frozen=True)
class OperatorString:
    copy: tuple  # (s, l)
    tokens: tuple = ()


@dataclass(frozen=True)
class FockTruncation:
    cutoff: int = DEFAULT_CUTOFF
    t: object = Fraction(1, 2)
    q: object = Fraction(1, 3)

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        if not (abs(self.t) < 1 and abs(self.q) < 1):
            raise ValueError("need |t| < 1 and |q| < 1")


def _exact(x):
    return x if isinstance(x, float) else Fraction(x)


@lru_cache(maxsize=None)
def _trace_tokens(tokens: tuple, t, q, cutoff: int):
    """(truncated trace, tail bound) of one copy's operator string."""
    n_raise = sum(1 for tok in tokens if tok.kind == "raise")
    n_lower = sum(1 for tok in tokens if tok.kind == "lower")
    if n_raise != n_lower:
        return 0, 0.0
    diag = [(tok.a, tok.b) for tok in tokens if tok.kind == "diag"]
    rho = 1.0
    for a, b in diag:
        rho *= abs(float(t)) ** a * abs(float(q)) ** b
    if rho >= 1:
        raise DivergentTraceError(f"trace of {tokens} diverges (|t^a q^b| = {rho})")
    powers: dict = {}

    def power(x, e):
        key = (id(x), e)
        if key not in powers:
            powers[key] = x**e
        return powers[key]

    total = 0
    for m in range(cutoff + 1):
        state, coeff = m, 1
        for tok in reversed(tokens):
            if tok.kind == "raise":
                state += 1
            elif tok.kind == "lower":
                if state == 0:
                    coeff = 0
                    break
                coeff *= 1 - power(t, state)
                state -= 1
            else:
                if tok.a:
                    coeff *= power(t, tok.a * state)
                if tok.b:
                    coeff *= power(q, tok.b * state)
        if coeff and state == m:
            total += coeff
    shift = n_lower
    if cutoff + 1 < shift:
        tail = math.inf
    else:
        scale = (1 + abs(float(t))) ** n_lower
        # the geometric bound is sharp when nothing is lowered; pad for float rounding
        tail = (1 + 1e-9) * scale * rho ** (cutoff + 1 - shift) / (1 - rho)
    return total, tail


def trace_string(tokens: Sequence[BosonToken], trunc: FockTruncation):
    return _trace_tokens(tuple(tokens), _exact(trunc.t), _exact(trunc.q), trunc.cutoff)


def fock_trace(b: int, c: int, d: tuple[int, int], trunc: FockTruncation):
    """Tr[phi^b (phi^dag)^c k^d] truncated at the cutoff, with k^d |m> = t^{a m} q^{b' m} |m>."""
    if b < 0 or c < 0:
        raise ValueError("powers must be nonnegative")
    tokens = (LOWER,) * b + (RAISE,) * c + (BosonToken("diag", *d),)
    if b != c:
        return 0, 0.0
    return trace_string(tokens, trunc)


def fock_trace_closed_form(b: int, c: int, d: tuple[int, int], t, q):
    """delta_{bc} prod_{i=1}^b (1 - t^i) / prod_{i=0}^b (1 - t^i T), T = t^a q^b'."""
    if b != c:
        return 0
    t, q = _exact(t), _exact(q)
    T = t ** d[0] * q ** d[1]
    num = 1
    for i in range(1, b + 1):
        num *= 1 - t**i
    den = 1
    for i in range(0, b + 1):
        den *= 1 - t**i * T
    if den == 0:
        raise DivergentTraceError("closed form has a vanishing denominator")
    return num / den


# ---------------------------------------------------------------------------
# L-matrices


def l_entry(s: int, r: int, i: int, j: int):
    """Entry L^{(s)}_{ij}: None if zero, else (x power, {copy l: tokens}).

    Rows i in {0, s..r}, columns j in {0, s+1..r}; copies are labelled by l.
    """
    if i not in (0, *range(s, r + 1)) or j not in (0, *range(s + 1, r + 1)):
        raise ValueError(f"index ({i}, {j}) outside L^({s}) for r={r}")
    if i == 0:
        if j == 0:
            return 0, {}
        return 0, {j: (LOWER,)}
    ops = {l: (K,) for l in range(i + 1, r + 1)}
    if j == 0:
        if i > s:
            ops[i] = (RAISE,)
        return 1, ops
    if i == j:
        return 1, ops
    if i > j:
        ops[i] = (RAISE,)
        ops[j] = (LOWER,)
        return 1, ops
    return None


def twist_tokens(s: int, r: int) -> dict:
    """S^{(s)} = prod_l k_l^{(l-s)u}; identity for s = r."""
    if s >= r:
        return {}
    return {l: (BosonToken("diag", 0, l - s),) for l in range(s + 1, r + 1)}


def layer_strings(s: int, r: int, lam: Sequence[int], mu: Sequence[int]):
    """Scalar x-degree per site and per-copy operator strings for one layer, or None if zero."""
    degrees = []
    per_copy: dict = {l: [] for l in range(s + 1, r + 1)}
    for i, j in zip(lam, mu):
        entry = l_entry(s, r, i, j)
        if entry is None:
            return None
        deg, ops = entry
        degrees.append(deg)
        for l, toks in ops.items():
            per_copy[l].extend(toks)
    for l, toks in twist_tokens(s, r).items():
        per_copy[l].extend(toks)
    strings = [OperatorString((s, l), tuple(toks)) for l, toks in sorted(per_copy.items())]
    return degrees, strings


def _product_with_error(values):
    """Product of (value, error) pairs and a bound on the product's error."""
    prod = 1
    upper = 1.0
    exact = 1.0
    for v, e in values:
        prod *= v
        upper *= abs(float(v)) + e
        exact *= abs(float(v))
    return prod, max(0.0, upper - exact)


def transition_weight(s: int, r: int, lam: Sequence[int], mu: Sequence[int], xs: Sequence, trunc: FockTruncation):
    """T^{(s)}_{lam,mu}(xs): trace of one layer of L^{(s)} entries with the twist.

    Returns (value, error bound).
    """
    if len(lam) != len(mu) or len(lam) != len(xs):
        raise ValueError("lam, mu and xs must have equal length")
    layer = layer_strings(s, r, lam, mu)
    if layer is None:
        return 0, 0.0
    degrees, strings = layer
    traces = [trace_string(st.tokens, trunc) for st in strings]
    value, err = _product_with_error(traces)
    scalar = 1
    for x, deg in zip(xs, degrees):
        if deg:
            scalar *= _exact(x)
    return value * scalar, err * abs(float(scalar))


# ---------------------------------------------------------------------------
# closed forms


def omega(s: int, r: int, lam_plus: Sequence[int], t, q):
    """Omega^{(s)}_{lam+} = prod_{i=s}^r prod_{j>i}^r 1/(1 - q^{j-i} t^{lam'_i - lam'_j})."""
    t, q = _exact(t), _exact(q)
    conj = combinat.conjugate(lam_plus)
    value = 1
    for i in range(s, r + 1):
        for j in range(i + 1, r + 1):
            e = combinat.conjugate_at(conj, i) - combinat.conjugate_at(conj, j)
            value /= 1 - q ** (j - i) * t**e
    return value


def lemma_rhs(s: int, r: int, lam, mu, xs, t, q):
    """x_lam C_s(lam, mu) Omega^{(s)}_lam / Omega^{(s+1)}_{mu+}."""
    c = coefficient(s, lam, mu, r)
    if c.is_zero():
        return 0
    c_val = rf_eval(c, {"q": _exact(q), "t": _exact(t)})
    x_val = 1
    for x, e in zip(xs, column_monomial(lam)):
        if e:
            x_val *= _exact(x)
    return x_val * c_val * omega(s, r, lam, t, q) / omega(s + 1, r, combinat.sort_desc(mu), t, q)


def _rel_err(lhs, rhs) -> float:
    if rhs == 0:
        return abs(float(lhs))
    return abs(float((lhs - rhs) / rhs))


@dataclass
class Report:
    instance: dict
    point: dict
    lhs: float
    rhs: float
    rel_err: float
    cutoff: int
    tail_bound: float

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "point": self.point,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rel_err": self.rel_err,
            "cutoff": self.cutoff,
            "tail_bound": self.tail_bound,
        }


def _point_dict(xs, t, q):
    return {"x": [str(x) for x in xs], "t": str(t), "q": str(q)}


def lemma_instances(r: int, n: int):
    """All (s, lam, mu) meeting the hypotheses: lam a partition with parts in
    {0, s..r}, mu with parts in {0, s+1..r}, equal multiplicities above s."""
    for s in range(1, r + 1):
        rows = (0, *range(s, r + 1))
        cols = (0, *range(s + 1, r + 1))
        for lam in itertools.product(rows, repeat=n):
            if not combinat.is_partition(lam):
                continue
            for mu in itertools.product(cols, repeat=n):
                if all(combinat.multiplicity(lam, i) == combinat.multiplicity(mu, i) for i in range(s + 1, r + 1)):
                    yield s, lam, mu


def verify_lemma(s: int, r: int, lam, mu, points, cutoff: int = DEFAULT_CUTOFF) -> list[Report]:
    """Compare the traced layer with its closed form at each (xs, t, q) point."""
    out = []
    for xs, t, q in points:
        trunc = FockTruncation(cutoff, t, q)
        lhs, err = transition_weight(s, r, lam, mu, xs, trunc)
        rhs = lemma_rhs(s, r, lam, mu, xs, t, q)
        out.append(
            Report(
                {"s": s, "r": r, "lambda": list(lam), "mu": list(mu)},
                _point_dict(xs, t, q),
                float(lhs),
                float(rhs),
                _rel_err(lhs, rhs),
                cutoff,
                err,
            )
        )
    return out


# ---------------------------------------------------------------------------
# full matrix product


def matrix_product_trace(lam: Sequence[int], xs: Sequence, trunc: FockTruncation, r: int | None = None):
    """Tr[A_{lam_1}(x_1) ... A_{lam_n}(x_n) S] as a sum over intermediate layers.

    Returns (value, error bound).
    """
    lam = tuple(lam)
    n = len(lam)
    if r is None:
        r = max(lam, default=0)
    if r == 0:
        return 1, 0.0
    if r > 3 or n > 3:
        raise ValueError("matrix product simulation is limited to r <= 3, n <= 3")

    def rec(s, row):
        # sum over column compositions of L^{(s)} ... L^{(r)}
        if s == r:
            return transition_weight(s, r, row, (0,) * n, xs, trunc)
        total, err = 0, 0.0
        cols = (0, *range(s + 1, r + 1))
        for mu in itertools.product(cols, repeat=n):
            if layer_strings(s, r, row, mu) is None:
                continue
            w, e1 = transition_weight(s, r, row, mu, xs, trunc)
            if w == 0 and e1 == 0:
                continue
            rest, e2 = rec(s + 1, mu)
            total += w * rest
            err += abs(float(w)) * e2 + e1 * (abs(float(rest)) + e2)
        return total, err

    return rec(1, lam)


def matrix_product_f(lam: Sequence[int], xs: Sequence, trunc: FockTruncation):
    """Trace divided by Omega_{lam+}; returns (value, error bound)."""
    lam = tuple(lam)
    r = max(lam, default=0)
    value, err = matrix_product_trace(lam, xs, trunc, r)
    norm = omega(1, r, combinat.sort_desc(lam), trunc.t, trunc.q)
    return value / norm, err / abs(float(norm))


def verify_matrix_product(lam, points, cutoff: int = DEFAULT_CUTOFF) -> list[Report]:
    lam = tuple(lam)
    exact = compose_f(lam)
    out = []
    for xs, t, q in points:
        trunc = FockTruncation(cutoff, t, q)
        lhs, err = matrix_product_f(lam, xs, trunc)
        rhs = exact.evaluate([_exact(x) for x in xs], {"q": _exact(q), "t": _exact(t)})
        out.append(
            Report({"lambda": list(lam)}, _point_dict(xs, t, q), float(lhs), float(rhs), _rel_err(lhs, rhs), cutoff, err)
        )
    return out


def seeded_points(seed: int, count: int, n: int):
    """Rational sample points: x in (0, 1], t and q in (0, 1/2)."""
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        xs = tuple(Fraction(rng.randint(1, 10), 10) for _ in range(n))
        t = Fraction(rng.randint(1, 5), 11)
        q = Fraction(rng.randint(1, 5), 11)
        pts.append((xs, t, q))
    return pts
