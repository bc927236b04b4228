"""Brute-force reference constructions used to check the sum formula.

Nothing here uses the Hecke operators or the coefficient function: the
Macdonald polynomial is rebuilt from its definition (Gram-Schmidt on the
monomial basis under the power-sum inner product), Schur polynomials from
the Jacobi-Trudi determinant, and the q-difference operator from its
explicit kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from . import combinat
from .field import JACK_SYMBOLS, MACDONALD_SYMBOLS, ParamRing, RationalFunction, rf_normalize
from .polyring import Polynomial, divide_linear, is_symmetric, multiply_linear, shift_var

MAC = ParamRing.get(MACDONALD_SYMBOLS)
JACK = ParamRing.get(JACK_SYMBOLS)

VARIANTS = ("macdonald", "jack")


@dataclass(frozen=True)
class SymmetricBasisElement:
    kind: str  # monomial | powersum | elementary | homogeneous
    index: tuple
    n: int


def _one_part(kind: str, k: int, n: int, ring) -> Polynomial:
    if kind == "powersum":
        return Polynomial(n, ring, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})
    if kind == "elementary":
        if k > n:
            return Polynomial.zero(n, ring)
        return monomial_symmetric((1,) * k + (0,) * (n - k), n, ring)
    if kind == "homogeneous":
        total = Polynomial.zero(n, ring)
        for lam in combinat.enumerate_partitions(k, n):
            total = total + monomial_symmetric(lam, n, ring)
        return total
    raise ValueError(f"unknown basis kind {kind!r}")


def monomial_symmetric(lam: Sequence[int], n: int, ring) -> Polynomial:
    lam = tuple(p for p in lam if p > 0)
    if len(lam) > n:
        return Polynomial.zero(n, ring)
    lam = lam + (0,) * (n - len(lam))
    return Polynomial(n, ring, {arr: 1 for arr in combinat.distinct_rearrangements(lam)})


def basis_polynomial(b: SymmetricBasisElement, ring: ParamRing = MAC) -> Polynomial:
    if b.kind == "monomial":
        return monomial_symmetric(b.index, b.n, ring)
    result = Polynomial.one(b.n, ring)
    for k in b.index:
        if k > 0:
            result = result * _one_part(b.kind, k, b.n, ring)
    return result


# ---------------------------------------------------------------------------
# power sums and the inner product


@lru_cache(maxsize=None)
def _partitions(d: int) -> tuple:
    return tuple(tuple(p for p in lam if p) for lam in combinat.enumerate_partitions(d, d))


@lru_cache(maxsize=None)
def powersum_to_monomial(d: int) -> tuple:
    """Integer matrix L with p_rho = sum_mu L[rho][mu] m_mu (infinitely many variables)."""
    parts = _partitions(d)
    index = {mu: k for k, mu in enumerate(parts)}
    rows = []
    for rho in parts:
        # expand p_rho in d variables; read off coefficients of dominant monomials
        counts: dict = {(0,) * d: 1}
        for k in rho:
            nxt: dict = {}
            for e, c in counts.items():
                for i in range(d):
                    f = list(e)
                    f[i] += k
                    f = tuple(f)
                    nxt[f] = nxt.get(f, 0) + c
            counts = nxt
        row = [0] * len(parts)
        for e, c in counts.items():
            if all(e[i] >= e[i + 1] for i in range(d - 1)):
                row[index[tuple(p for p in e if p)]] = c
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def monomial_to_powersum(d: int) -> tuple:
    """Rational matrix M with m_mu = sum_rho M[mu][rho] p_rho."""
    L = [[Fraction(v) for v in row] for row in powersum_to_monomial(d)]
    size = len(L)
    # invert L by Gauss-Jordan over Q
    aug = [row + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(L)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    inv = [row[size:] for row in aug]  # inv = L^{-1}: p-coords of m
    return tuple(tuple(row) for row in inv)


def powersum_norm(rho: Sequence[int], variant: str = "macdonald") -> RationalFunction:
    """<p_rho, p_rho>."""
    rho = tuple(p for p in rho if p)
    z = combinat.z_factor(rho)
    if variant == "macdonald":
        q, t = MAC.gen_poly("q"), MAC.gen_poly("t")
        num = MAC.poly_const(z)
        den = MAC.poly_const(1)
        for k in rho:
            num *= 1 - q**k
            den *= 1 - t**k
        return rf_normalize(num, den, MAC)
    if variant == "jack":
        return JACK.from_poly(z * JACK.gen_poly("alpha") ** len(rho))
    raise ValueError(f"unknown variant {variant!r}")


def solve_linear(matrix: list[list[RationalFunction]], rhs: list[RationalFunction], ring) -> list[RationalFunction]:
    """Solve A x = b exactly; pivots are chosen with the fewest terms."""
    size = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]

    def weight(c):
        return len(c.num.to_dict()) + len(c.den.to_dict())

    for col in range(size):
        candidates = [r for r in range(col, size) if not a[r][col].is_zero()]
        if not candidates:
            raise ArithmeticError("singular linear system")
        piv = min(candidates, key=lambda r: weight(a[r][col]))
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [v * inv for v in a[col]]
        for r in range(size):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size] for row in a]


def _monomial_coordinates(f: Polynomial, d: int) -> list:
    parts = _partitions(d)
    return [f.coefficient(mu + (0,) * (f.n - len(mu))) for mu in parts]


def powersum_coordinates(f: Polynomial, d: int) -> list[RationalFunction]:
    """Coordinates of a symmetric degree-d polynomial in the power-sum basis (needs n >= d)."""
    if f.n < d:
        raise ValueError(f"need at least {d} variables to expand in power sums, got {f.n}")
    if not is_symmetric(f):
        raise ValueError("inner product needs symmetric input")
    if any(deg != d for deg in f.degrees()):
        raise ValueError(f"input is not homogeneous of degree {d}")
    ring = f.ring
    L = powersum_to_monomial(d)
    size = len(L)
    # m-coords of f = sum_rho c_rho L[rho][.]  ->  L^T c = m-coords
    A = [[ring.from_int(L[rho][mu]) for rho in range(size)] for mu in range(size)]
    return solve_linear(A, _monomial_coordinates(f, d), ring)


def inner_product(f: Polynomial, g: Polynomial, d: int, n: int, variant: str = "macdonald") -> RationalFunction:
    if f.n != n or g.n != n:
        raise ValueError("variable count mismatch")
    cf = powersum_coordinates(f, d)
    cg = powersum_coordinates(g, d)
    total = f.ring.zero
    for rho, a, b in zip(_partitions(d), cf, cg):
        if a.is_zero() or b.is_zero():
            continue
        total = total + a * b * powersum_norm(rho, variant)
    return total


@lru_cache(maxsize=None)
def monomial_gram(d: int, variant: str) -> tuple:
    """<m_mu, m_nu> for all partitions of d."""
    ring = MAC if variant == "macdonald" else JACK
    M = monomial_to_powersum(d)
    parts = _partitions(d)
    norms = [powersum_norm(rho, variant) for rho in parts]
    size = len(parts)
    gram = [[None] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            total = ring.zero
            for k in range(size):
                w = M[a][k] * M[b][k]
                if w:
                    total = total + norms[k] * ring.from_fraction(w)
            gram[a][b] = gram[b][a] = total
    return tuple(tuple(row) for row in gram)


def gram_schmidt_coordinates(lam: Sequence[int], variant: str = "macdonald") -> dict:
    """P_lam in monomial coordinates {mu: coeff}, symmetric functions of degree |lam|.

    Orthogonalizes the monomial basis in increasing lexicographic order, a
    linear extension of dominance.
    """
    lam = tuple(p for p in lam if p)
    d = sum(lam)
    ring = MAC if variant == "macdonald" else JACK
    if d == 0:
        return {(): ring.one}
    parts = _partitions(d)  # reverse lex: (d) first
    order = sorted(range(len(parts)), key=lambda k: parts[k])
    gram = monomial_gram(d, variant)
    done: list[tuple[dict, RationalFunction]] = []  # (coords by index, <P,P>)

    def pair(u: dict, v: dict):
        total = ring.zero
        for a, ca in u.items():
            for b, cb in v.items():
                total = total + ca * cb * gram[a][b]
        return total

    target = parts.index(lam)
    for k in order:
        vec = {k: ring.one}
        for prev, norm in done:
            c = pair({k: ring.one}, prev) / norm
            if c.is_zero():
                continue
            for idx, val in prev.items():
                vec[idx] = vec.get(idx, ring.zero) - c * val
        vec = {i: v for i, v in vec.items() if not v.is_zero()}
        if k == target:
            return {parts[i]: v for i, v in vec.items()}
        done.append((vec, pair(vec, vec)))
    raise AssertionError("unreachable")


def gram_schmidt_P(lam: Sequence[int], n: int, variant: str = "macdonald") -> Polynomial:
    """Monic orthogonal P_lam from the definition, restricted to n variables."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    ring = MAC if variant == "macdonald" else JACK
    lam = tuple(p for p in lam if p)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than n={n} parts")
    total = Polynomial.zero(n, ring)
    for mu, c in gram_schmidt_coordinates(lam, variant).items():
        if len(mu) <= n:
            total = total + monomial_symmetric(mu, n, ring).scale(c)
    return total


# ---------------------------------------------------------------------------
# Schur and the difference operator


def schur(lam: Sequence[int], n: int, ring: ParamRing = MAC) -> Polynomial:
    """Jacobi-Trudi: det(h_{lam_i - i + j})."""
    lam = tuple(p for p in lam if p)
    ell = len(lam)
    if ell == 0:
        return Polynomial.one(n, ring)
    h_cache: dict = {}

    def h(k):
        if k < 0:
            return None
        if k not in h_cache:
            h_cache[k] = _one_part("homogeneous", k, n, ring) if k else Polynomial.one(n, ring)
        return h_cache[k]

    total = Polynomial.zero(n, ring)
    for perm in permutations(range(ell)):
        term = Polynomial.one(n, ring)
        for i, j in enumerate(perm):
            factor = h(lam[i] - i + j)
            if factor is None:
                term = None
                break
            term = term * factor
        if term is None:
            continue
        inv = sum(1 for a in range(ell) for b in range(a + 1, ell) if perm[a] > perm[b])
        total = total + (-term if inv % 2 else term)
    return total


def macdonald_operator(f: Polynomial, n: int | None = None) -> Polynomial:
    """D f = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) f(.., q x_i, ..).

    Computed as (Vandermonde * D f) / Vandermonde with exact linear divisions.
    """
    n = f.n if n is None else n
    if n != f.n:
        raise ValueError("variable count mismatch")
    ring = f.ring
    t = ring.gen_poly("t")
    minus_one = ring.poly_const(-1)
    one = ring.poly_const(1)
    total = Polynomial.zero(n, ring)
    for i in range(1, n + 1):
        term = shift_var(f, i)
        for j in range(1, n + 1):
            if j != i:
                term = multiply_linear(term, i, t, j, minus_one)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if i not in (a, b):
                    term = multiply_linear(term, a, one, b, minus_one)
        total = total + (-term if (i - 1) % 2 else term)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            total = divide_linear(total, a, b)
    return total


def macdonald_eigenvalue(lam: Sequence[int], n: int) -> RationalFunction:
    """sum_i q^{lam_i} t^{n-i}."""
    q, t = MAC.gen_poly("q"), MAC.gen_poly("t")
    lam = tuple(lam) + (0,) * (n - len(lam))
    return MAC.from_poly(sum((q ** lam[i - 1] * t ** (n - i) for i in range(1, n + 1)), MAC.poly_const(0)))
