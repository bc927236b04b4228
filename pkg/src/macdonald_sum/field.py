"""Exact rational functions in a small set of parameter symbols.

Numerators and denominators are integer polynomials (``flint.fmpz_mpoly``);
every value is kept in a canonical reduced form so that equality is a
componentwise comparison:

* numerator and denominator are coprime over Z[symbols] (including content),
* the denominator's lowest term in graded-lex order has a positive
  coefficient, which is the first term of the serialized form,
* zero is ``0/1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import flint

ParamPolynomial = flint.fmpz_mpoly

# Symbol sets used by the different families.
MACDONALD_SYMBOLS = ("q", "t")
HALL_LITTLEWOOD_SYMBOLS = ("t",)
Q_WHITTAKER_SYMBOLS = ("q",)
JACK_SYMBOLS = ("alpha",)
NO_SYMBOLS = ()


class ContextMismatchError(ValueError):
    """Raised when values from different parameter rings are combined."""


class ParamRing:
    """The field Q(symbols) with a fixed, ordered symbol list.

    Instances are interned: ``ParamRing.get(("q", "t")) is ParamRing.get(("q", "t"))``.
    """

    _cache: dict[tuple[str, ...], "ParamRing"] = {}

    def __init__(self, symbols: tuple[str, ...]):
        self.symbols = symbols
        # flint needs at least one generator; a dummy one is never used
        self._ctx = flint.fmpz_mpoly_ctx.get(symbols or ("_",), "deglex")
        self._nvars = len(symbols) or 1
        self.zero = RationalFunction._raw(self, self._ctx.from_dict({}), self._ctx.from_dict({(0,) * self._nvars: 1}))
        self.one = self.from_int(1)

    @classmethod
    def get(cls, symbols: Iterable[str]) -> "ParamRing":
        symbols = tuple(symbols)
        ring = cls._cache.get(symbols)
        if ring is None:
            ring = cls._cache[symbols] = cls(symbols)
        return ring

    def __repr__(self):
        return f"ParamRing({self.symbols!r})"

    # constructors
    def poly(self, terms: Mapping[tuple[int, ...], int]) -> ParamPolynomial:
        return self._ctx.from_dict({tuple(e): int(c) for e, c in terms.items() if c})

    def poly_const(self, c: int) -> ParamPolynomial:
        return self._ctx.from_dict({(0,) * self._nvars: int(c)} if c else {})

    def from_int(self, c: int) -> "RationalFunction":
        return RationalFunction._raw(self, self.poly_const(c), self.poly_const(1))

    def from_fraction(self, c) -> "RationalFunction":
        c = Fraction(c)
        return rf_normalize(self.poly_const(c.numerator), self.poly_const(c.denominator), self)

    def from_poly(self, p: ParamPolynomial) -> "RationalFunction":
        return RationalFunction._raw(self, p, self.poly_const(1))

    def gen(self, name: str) -> "RationalFunction":
        return self.from_poly(self.gen_poly(name))

    def gen_poly(self, name: str) -> ParamPolynomial:
        if name not in self.symbols:
            raise ContextMismatchError(f"symbol {name!r} not in {self.symbols}")
        return self._ctx.gens()[self.symbols.index(name)]

    def coerce(self, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            if x.ring is not self:
                raise ContextMismatchError(f"cannot mix {x.ring.symbols} with {self.symbols}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Rational):
            return self.from_fraction(x)
        if isinstance(x, flint.fmpz_mpoly):
            if x.context() is not self._ctx:
                raise ContextMismatchError("polynomial from a different context")
            return self.from_poly(x)
        if isinstance(x, str):
            return parse_rf(x, self)
        raise TypeError(f"cannot convert {type(x).__name__} to a rational function")


def _lowest_coeff(p: ParamPolynomial) -> int:
    # fmpz_mpoly terms come in descending deglex order
    return int(p.coeffs()[-1])


def rf_normalize(num: ParamPolynomial, den: ParamPolynomial, ring: ParamRing) -> "RationalFunction":
    """Return the canonical reduced form of ``num/den``."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero rational function")
    if num.is_zero():
        return ring.zero
    g = num.gcd(den)
    if not g.is_one():
        num = num // g
        den = den // g
    if _lowest_coeff(den) < 0:
        num = -num
        den = -den
    return RationalFunction._raw(ring, num, den)


class RationalFunction:
    """An element of Q(symbols) in canonical form. Immutable."""

    __slots__ = ("ring", "num", "den", "_key")

    @classmethod
    def _raw(cls, ring, num, den):
        self = object.__new__(cls)
        self.ring = ring
        self.num = num
        self.den = den
        self._key = None
        return self

    def __init__(self, *args, **kwargs):
        raise TypeError("use rf_normalize or ParamRing constructors")

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    def key(self) -> tuple:
        if self._key is None:
            self._key = (tuple(sorted(self.num.to_dict().items())), tuple(sorted(self.den.to_dict().items())))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = self.ring.coerce(other)
            except (TypeError, ContextMismatchError):
                return NotImplemented
        return self.ring is other.ring and self.num == other.num and self.den == other.den

    # arithmetic
    def _check(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.ring is not self.ring:
                raise ContextMismatchError(f"cannot mix {self.ring.symbols} with {other.ring.symbols}")
            return other
        return self.ring.coerce(other)

    def __add__(self, other):
        other = self._check(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return rf_normalize(self.num + other.num, self.den, self.ring)
        if self.den.is_one():
            return RationalFunction._raw(self.ring, self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return RationalFunction._raw(self.ring, self.num + other.num * self.den, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return rf_normalize(self.num * other.den + other.num * self.den, self.den * other.den, self.ring)
        d1 = self.den // g
        d2 = other.den // g
        return rf_normalize(self.num * d2 + other.num * d1, d1 * other.den, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(self.ring, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if self.num.is_zero() or other.num.is_zero():
            return self.ring.zero
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if _lowest_coeff(den) < 0:
            num, den = -num, -den
        return RationalFunction._raw(self.ring, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        num, den = self.den, self.num
        if _lowest_coeff(den) < 0:
            num, den = -num, -den
        return RationalFunction._raw(self.ring, num, den)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.ring, self.num**k, self.den**k)

    def scale_poly(self, p: ParamPolynomial) -> "RationalFunction":
        """Multiply by an integer polynomial of the same ring."""
        if p.is_zero() or self.num.is_zero():
            return self.ring.zero
        if self.den.is_one():
            return RationalFunction._raw(self.ring, self.num * p, self.den)
        g = p.gcd(self.den)
        if g.is_one():
            return RationalFunction._raw(self.ring, self.num * p, self.den)
        den = self.den // g
        num = self.num * (p // g)
        if _lowest_coeff(den) < 0:
            num, den = -num, -den
        return RationalFunction._raw(self.ring, num, den)

    # display
    def __str__(self):
        return rf_to_string(self)

    def __repr__(self):
        return f"RationalFunction({rf_to_string(self)!r})"

    def latex(self) -> str:
        if self.den.is_one():
            return poly_to_string(self.num, self.ring.symbols, latex=True)
        return "\\frac{%s}{%s}" % (
            poly_to_string(self.num, self.ring.symbols, latex=True),
            poly_to_string(self.den, self.ring.symbols, latex=True),
        )


def rf_arith(op: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def linear_combination(ring: ParamRing, pairs: Iterable[tuple[RationalFunction, ParamPolynomial]]) -> RationalFunction:
    """Sum of ``c * p`` over pairs of rational functions and integer polynomials.

    Terms sharing a denominator are merged before any gcd is taken.
    """
    by_den: dict[str, list] = {}
    for c, p in pairs:
        if p.is_zero() or c.num.is_zero():
            continue
        k = str(c.den)
        slot = by_den.get(k)
        if slot is None:
            by_den[k] = [c.den, c.num * p]
        else:
            slot[1] += c.num * p
    total = ring.zero
    for den, num in by_den.values():
        if num.is_zero():
            continue
        total = total + (rf_normalize(num, den, ring) if not den.is_one() else ring.from_poly(num))
    return total


def _eval_poly(p: ParamPolynomial, values: Sequence):
    total = 0
    for exps, c in p.terms():
        term = int(c)
        for v, e in zip(values, exps):
            if e:
                term = term * v ** int(e)
        total = total + term
    return total


def rf_eval(f: RationalFunction, assignment: Mapping[str, object]):
    """Evaluate at a point; exact for ``Fraction``/``int`` inputs, float otherwise."""
    missing = [s for s in f.ring.symbols if s not in assignment]
    if missing:
        raise ValueError(f"assignment does not cover {missing}")
    values = [assignment[s] for s in f.ring.symbols] or [0]
    values = [v if isinstance(v, float) else Fraction(v) for v in values]
    den = _eval_poly(f.den, values)
    if den == 0:
        point = ", ".join(f"{s}={assignment[s]}" for s in f.ring.symbols)
        raise ZeroDivisionError(f"denominator of {f} vanishes at {point}")
    num = _eval_poly(f.num, values)
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num) / Fraction(den)


# ---------------------------------------------------------------------------
# serialization


def _grlex_key(exps):
    return (sum(exps), tuple(exps))


def _monomial_string(exps, symbols, latex=False):
    parts = []
    for s, e in zip(symbols, exps):
        if e == 0:
            continue
        name = "\\alpha" if (latex and s == "alpha") else s
        if e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return ("" if latex else "*").join(parts)


def poly_to_string(p: ParamPolynomial, symbols, latex: bool = False) -> str:
    """Terms in ascending graded-lex order, e.g. ``1 - t + q - q*t``."""
    if p.is_zero():
        return "0"
    terms = sorted(p.to_dict().items(), key=lambda kv: _grlex_key(kv[0]))
    out = []
    for i, (exps, c) in enumerate(terms):
        c = int(c)
        mono = _monomial_string(exps, symbols, latex) if symbols else ""
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'' if latex else '*'}{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def rf_to_string(f: RationalFunction) -> str:
    syms = f.ring.symbols
    num = poly_to_string(f.num, syms)
    if f.den.is_one():
        return num
    den = poly_to_string(f.den, syms)
    if len(f.num.to_dict()) > 1:
        num = f"({num})"
    # "1/2*t" would read back as t/2
    if len(f.den.to_dict()) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse_rf(text: str, ring: ParamRing) -> RationalFunction:
    """Parse the serialized form (``+ - * / ^``, parentheses, integers, symbols)."""
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("sym", name))
        elif op is not None and op.strip():
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        value = term()
        value = -value if sign < 0 else value
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term():
        value = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, exp = take()
            if kind != "int":
                raise ValueError(f"bad exponent in {text!r}")
            base = base**exp
        return base

    def atom():
        kind, val = take()
        if kind == "int":
            return ring.from_int(val)
        if kind == "sym":
            return ring.gen(val)
        if (kind, val) == ("op", "("):
            value = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return value
        if (kind, val) == ("op", "-"):
            return -atom()
        raise ValueError(f"cannot parse {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result
