"""Polynomials in x1..xn with rational-function coefficients."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

from .field import (
    ContextMismatchError,
    ParamPolynomial,
    ParamRing,
    RationalFunction,
    linear_combination,
    parse_rf,
    rf_eval,
)

Monomial = tuple  # exponent vector of length n


class Polynomial:
    """Sparse polynomial ``{exponent tuple: RationalFunction}``; zero terms never stored.

    Treat instances as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n: int, ring: ParamRing, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        self.ring = ring
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not have {n} exponents")
            c = ring.coerce(c)
            if not c.is_zero():
                clean[mono] = c
        self.terms = clean

    @classmethod
    def _from_clean(cls, n, ring, terms):
        self = object.__new__(cls)
        self.n = n
        self.ring = ring
        self.terms = terms
        return self

    # constructors
    @classmethod
    def zero(cls, n, ring):
        return cls._from_clean(n, ring, {})

    @classmethod
    def one(cls, n, ring):
        return cls._from_clean(n, ring, {(0,) * n: ring.one})

    @classmethod
    def monomial(cls, exps, ring, coeff=None):
        exps = tuple(exps)
        c = ring.one if coeff is None else ring.coerce(coeff)
        return cls._from_clean(len(exps), ring, {exps: c} if c else {})

    @classmethod
    def variable(cls, i: int, n: int, ring):
        """The variable x_i, 1-based."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls.monomial(exps, ring)

    # basic protocol
    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps) -> RationalFunction:
        return self.terms.get(tuple(exps), self.ring.zero)

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        if other.ring is not self.ring:
            raise ContextMismatchError(f"cannot mix {self.ring.symbols} with {other.ring.symbols}")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.ring.symbols, frozenset(self.terms.items())))

    # arithmetic
    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            old = terms.get(mono)
            if old is None:
                terms[mono] = c
            else:
                s = old + c
                if s.is_zero():
                    del terms[mono]
                else:
                    terms[mono] = s
        return Polynomial._from_clean(self.n, self.ring, terms)

    def __neg__(self):
        return Polynomial._from_clean(self.n, self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc.setdefault(m, []).append(c1 * c2)
        return Polynomial._from_clean(self.n, self.ring, _sum_buckets(self.ring, acc))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = self.ring.coerce(c)
        if c.is_zero():
            return Polynomial.zero(self.n, self.ring)
        if c.is_one():
            return self
        return Polynomial._from_clean(self.n, self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, exps) -> "Polynomial":
        exps = tuple(exps)
        return Polynomial._from_clean(
            self.n, self.ring, {tuple(a + b for a, b in zip(m, exps)): c for m, c in self.terms.items()}
        )

    def __pow__(self, k: int):
        result = Polynomial.one(self.n, self.ring)
        for _ in range(k):
            result = result * self
        return result

    # structure
    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def map_monomials(self, fn: Callable[[Monomial], Monomial]) -> "Polynomial":
        """Apply a bijection on exponent vectors."""
        return Polynomial._from_clean(self.n, self.ring, {fn(m): c for m, c in self.terms.items()})

    def permute_variables(self, perm) -> "Polynomial":
        """Substitute x_i -> x_{perm[i]} (0-based images)."""

        def fn(m):
            out = [0] * self.n
            for i, e in enumerate(m):
                out[perm[i]] = e
            return tuple(out)

        return self.map_monomials(fn)

    def restrict(self, k: int) -> "Polynomial":
        """Set x_{k+1}, ..., x_n to zero and drop them."""
        return Polynomial._from_clean(
            k, self.ring, {m[:k]: c for m, c in self.terms.items() if not any(m[k:])}
        )

    def extend(self, n: int) -> "Polynomial":
        """View in more variables."""
        pad = (0,) * (n - self.n)
        return Polynomial._from_clean(n, self.ring, {m + pad: c for m, c in self.terms.items()})

    def evaluate(self, xs, assignment: Mapping[str, object]):
        """Numeric value at x = xs and the given parameter values."""
        total = 0
        for m, c in self.terms.items():
            term = rf_eval(c, assignment)
            for x, e in zip(xs, m):
                if e:
                    term = term * x**e
            total = total + term
        return total

    # display
    def sorted_terms(self):
        """Terms in descending graded-lex order (leading monomial first)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial(n={self.n}, {to_text(self)!r})"


def _sum_buckets(ring, acc: dict) -> dict:
    out = {}
    for m, cs in acc.items():
        s = cs[0] if len(cs) == 1 else _sum_rfs(ring, cs)
        if not s.is_zero():
            out[m] = s
    return out


def _sum_rfs(ring, cs):
    one = ring.poly_const(1)
    return linear_combination(ring, ((c, one) for c in cs))


def combine(n: int, ring: ParamRing, pieces: Iterable[tuple[Monomial, RationalFunction, ParamPolynomial]]) -> Polynomial:
    """Build ``sum c * p * x^m`` grouping terms per monomial before adding."""
    acc: dict = {}
    for m, c, p in pieces:
        acc.setdefault(m, []).append((c, p))
    terms = {}
    for m, pairs in acc.items():
        s = linear_combination(ring, pairs)
        if not s.is_zero():
            terms[m] = s
    return Polynomial._from_clean(n, ring, terms)


def p_arith(op: str, a, b) -> Polynomial:
    """``add``/``mul`` on two polynomials, or ``scale`` with ``a`` a coefficient."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return b.scale(a)
    raise ValueError(f"unknown operation {op!r}")


def _check_index(i: int, f: Polynomial):
    if f.n < 2 or not 1 <= i <= f.n - 1:
        raise IndexError(f"transposition index {i} out of range for n={f.n}")


def transpose_vars(i: int, f: Polynomial) -> Polynomial:
    """s_i f: exchange x_i and x_{i+1}."""
    _check_index(i, f)
    a, b = i - 1, i

    def swap(m):
        m = list(m)
        m[a], m[b] = m[b], m[a]
        return tuple(m)

    return f.map_monomials(swap)


def _pair_quotient(m: Monomial, a: int, b: int, sign_flip=False):
    """Exponent vectors of (x^m - s x^m)/(x_a - x_b) for one monomial, with signs."""
    ea, eb = m[a], m[b]
    if ea == eb:
        return []
    lo, hi = min(ea, eb), max(ea, eb)
    sign = 1 if ea > eb else -1
    out = []
    # x^lo y^lo (x^d - y^d)/(x - y) = x^lo y^lo * sum_k x^k y^(d-1-k)
    d = hi - lo
    base = list(m)
    for k in range(d):
        e = list(base)
        e[a] = lo + k
        e[b] = lo + d - 1 - k
        out.append((tuple(e), sign))
    return out


def divide_difference_quotient(i: int, f: Polynomial) -> Polynomial:
    """The polynomial g with g * (x_i - x_{i+1}) = f - s_i f."""
    _check_index(i, f)
    a, b = i - 1, i
    one = f.ring.poly_const(1)
    neg = f.ring.poly_const(-1)
    pieces = []
    for m, c in f.terms.items():
        for e, sign in _pair_quotient(m, a, b):
            pieces.append((e, c, one if sign > 0 else neg))
    return combine(f.n, f.ring, pieces)


def multiply_linear(f: Polynomial, i: int, ca: ParamPolynomial, j: int, cb: ParamPolynomial) -> Polynomial:
    """(ca * x_i + cb * x_j) * f, with integer-polynomial coefficients; 1-based indices."""
    pieces = []
    for m, c in f.terms.items():
        for idx, p in ((i - 1, ca), (j - 1, cb)):
            if p.is_zero():
                continue
            e = list(m)
            e[idx] += 1
            pieces.append((tuple(e), c, p))
    return combine(f.n, f.ring, pieces)


def divide_linear(f: Polynomial, i: int, j: int) -> Polynomial:
    """Exact quotient of f by (x_i - x_j); raises ArithmeticError on a remainder."""
    a, b = i - 1, j - 1
    # group by the exponents of all variables except x_a, x_b
    quotient: dict = {}
    groups: dict = {}
    for m, c in f.terms.items():
        rest = m[:a] + (None,) + m[a + 1 :]
        rest = rest[:b] + (None,) + rest[b + 1 :]
        groups.setdefault(rest, {})[(m[a], m[b])] = c
    for rest, coeffs in groups.items():
        # bivariate homogeneous-by-parts division in (x, y) = (x_a, x_b)
        work = dict(coeffs)
        while work:
            (ea, eb) = max(work)  # highest power of x first
            c = work.pop((ea, eb))
            if ea == 0:
                raise ArithmeticError(f"polynomial is not divisible by (x{i} - x{j})")
            # quotient term c x^(ea-1) y^eb; subtract c x^(ea-1) y^eb (x - y)
            mono = list(rest)
            mono[a], mono[b] = ea - 1, eb
            quotient[tuple(mono)] = c
            nxt = (ea - 1, eb + 1)
            val = work.get(nxt, f.ring.zero) + c
            if val.is_zero():
                work.pop(nxt, None)
            else:
                work[nxt] = val
    return Polynomial._from_clean(f.n, f.ring, quotient)


def specialize_params(f: Polynomial, assignment: Mapping[str, object], target: ParamRing | None = None) -> Polynomial:
    """Substitute parameters; the result lives over the remaining symbols.

    Values may be integers, ``Fraction``s, or rational functions / symbol names
    of the target ring.
    """
    src = f.ring
    if target is None:
        target = ParamRing.get(tuple(s for s in src.symbols if s not in assignment))
    images = []
    for s in src.symbols:
        if s in assignment:
            v = assignment[s]
            images.append(target.gen(v) if isinstance(v, str) else target.coerce(v))
        else:
            images.append(target.gen(s))
    if not src.symbols:
        images = [target.zero]
    subst = _Substituter(src, target, images)
    terms = {}
    for m, c in f.terms.items():
        den = subst(c.den)
        if den.is_zero():
            raise ZeroDivisionError(f"coefficient {c} of {_mono_str(m)} has a vanishing denominator")
        val = subst(c.num) / den
        if not val.is_zero():
            terms[m] = val
    return Polynomial._from_clean(f.n, target, terms)


class _Substituter:
    """Evaluate integer polynomials of one ring at rational-function images."""

    def __init__(self, src, target, images):
        self.target = target
        self.images = images
        self.poly_images = None
        if all(im.is_polynomial() for im in images):
            self.poly_images = [im.num for im in images]
        self._powers: dict = {}

    def __call__(self, p: ParamPolynomial) -> RationalFunction:
        if self.poly_images is not None:
            return self.target.from_poly(p.compose(*self.poly_images, ctx=self.target._ctx))
        total = self.target.zero
        for exps, c in p.terms():
            term = self.target.from_int(int(c))
            for k, e in enumerate(exps):
                if e:
                    term = term * self._power(k, e)
            total = total + term
        return total

    def _power(self, k, e):
        key = (k, e)
        if key not in self._powers:
            self._powers[key] = self.images[k] ** e
        return self._powers[key]


def shift_var(f: Polynomial, i: int) -> Polynomial:
    """Substitute x_i -> q x_i."""
    q = f.ring.gen_poly("q")
    terms = {}
    for m, c in f.terms.items():
        e = m[i - 1]
        terms[m] = c.scale_poly(q**e) if e else c
    return Polynomial._from_clean(f.n, f.ring, terms)


def is_symmetric(f: Polynomial) -> bool:
    if f.n < 2:
        return True
    return all(transpose_vars(i, f) == f for i in range(1, f.n))


# ---------------------------------------------------------------------------
# text / LaTeX / JSON


def _mono_str(m, latex=False):
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 0:
            continue
        v = f"x_{{{k}}}" if latex else f"x{k}"
        if e > 1:
            v += f"^{{{e}}}" if latex else f"^{e}"
        parts.append(v)
    return ("" if latex else "*").join(parts)


def _coeff_parts(c: RationalFunction):
    """Sign and unsigned text of a coefficient; multi-term values parenthesized."""
    single = len(c.num.to_dict()) == 1
    if single and int(c.num.coeffs()[0]) < 0:
        return -1, _coeff_parts(-c)[1]
    if single or not c.is_polynomial():
        return 1, str(c)
    return 1, f"({c})"


def to_text(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for idx, (m, c) in enumerate(f.sorted_terms()):
        sign, body = _coeff_parts(c)
        mono = _mono_str(m)
        if mono:
            if body == "1":
                text = mono
            else:
                text = f"{body}*{mono}"
        else:
            text = body
        if idx == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


def to_latex(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for idx, (m, c) in enumerate(f.sorted_terms()):
        mono = _mono_str(m, latex=True)
        neg = False
        if c.is_polynomial() and len(c.num.to_dict()) == 1:
            lc = int(c.num.coeffs()[0])
            neg = lc < 0
            body = (-c).latex() if neg else c.latex()
            if body == "1" and mono:
                body = ""
        elif c.is_polynomial():
            body = f"\\left({c.latex()}\\right)"
        else:
            body = c.latex()
        text = f"{body}{mono}" or "1"
        if idx == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def to_json_dict(f: Polynomial) -> dict:
    terms = sorted(f.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    return {
        "n": f.n,
        "params": list(f.ring.symbols),
        "terms": [{"exp": list(m), "coeff": str(c)} for m, c in terms],
    }


def to_json(f: Polynomial) -> str:
    return json.dumps(to_json_dict(f))


def from_json_dict(data: Mapping) -> Polynomial:
    ring = ParamRing.get(tuple(data["params"]))
    n = int(data["n"])
    return Polynomial(n, ring, {tuple(t["exp"]): parse_rf(t["coeff"], ring) for t in data["terms"]})


def from_json(text: str) -> Polynomial:
    return from_json_dict(json.loads(text))
