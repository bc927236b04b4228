"""Verification suites driven by the ``verify`` command.

Each suite returns a list of check records ``{"name", "passed", ...}``;
randomized suites draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import itertools
import random

from . import combinat, hecke, macdonald, mpstrace, oracle
from .field import MACDONALD_SYMBOLS, ParamRing, parse_rf
from .polyring import Polynomial, specialize_params

MAC = ParamRing.get(MACDONALD_SYMBOLS)

SUITES = ("hecke", "golden", "oracle", "specialization", "lemma", "mps")

# desk-scale ceilings
MAX_WEIGHT = 6
MAX_N = 4
MAX_R = 3


def _check(name, passed, **extra):
    return {"name": name, "passed": bool(passed), **extra}


def random_coefficient(rng: random.Random, ring=MAC):
    q, t = ring.gen_poly("q"), ring.gen_poly("t")
    num = sum((rng.randint(-3, 3) * q ** rng.randint(0, 2) * t ** rng.randint(0, 2) for _ in range(2)), ring.poly_const(0))
    if num.is_zero():
        num = ring.poly_const(1)
    if rng.random() < 0.5:
        return ring.from_poly(num)
    den = 1 - q ** rng.randint(0, 2) * t ** rng.randint(1, 2)
    return ring.from_poly(num) / ring.from_poly(den)


def random_polynomial(rng: random.Random, n: int, max_degree: int = 5, terms: int = 4, ring=MAC) -> Polynomial:
    data = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        data[tuple(exps)] = random_coefficient(rng, ring)
    return Polynomial(n, ring, data)


# ---------------------------------------------------------------------------


def hecke_suite(seed: int, samples: int = 100, max_n: int = 4) -> list[dict]:
    rng = random.Random(seed)
    t = MAC.gen("t")
    out = []
    for k in range(samples):
        n = rng.randint(2, max_n)
        f = random_polynomial(rng, n)
        for i in range(1, n):
            tf = hecke.apply_T(i, f)
            quad = hecke.apply_T(i, tf) - tf.scale(t - 1) - f.scale(t)
            out.append(_check(f"quadratic[{k}] i={i} n={n}", quad.is_zero()))
        for i in range(1, n - 1):
            lhs = hecke.apply_T_word((i, i + 1, i), f)
            rhs = hecke.apply_T_word((i + 1, i, i + 1), f)
            out.append(_check(f"braid[{k}] i={i} n={n}", lhs == rhs))
        for i in range(1, n):
            for j in range(i + 2, n):
                ok = hecke.apply_T_word((i, j), f) == hecke.apply_T_word((j, i), f)
                out.append(_check(f"commute[{k}] i={i} j={j} n={n}", ok))
    return out


def golden_suite() -> list[dict]:
    a1 = parse_polynomial_text(
        {(3, 1): "1", (2, 2): "(1 - t + q - q*t)/(1 - q*t)", (1, 3): "1"}
    )
    a2_terms = {arr: "1" for arr in combinat.distinct_rearrangements((3, 2, 1))}
    a2_terms[(2, 2, 2)] = "(2 + q + t + 2*q*t)*(1 - t)/(1 - q*t^2)"
    a2 = parse_polynomial_text(a2_terms)
    got1 = macdonald.macdonald_P((3, 1), 2)
    got2 = macdonald.macdonald_P((3, 2, 1), 3)
    C = macdonald.coefficient
    coeffs = [
        ("C2((3,0),(0,3))", C(2, (3, 0), (0, 3), 3), "q*(1 - t)/(1 - q*t)"),
        ("C1((3,1),(0,3))", C(1, (3, 1), (0, 3), 3), "0"),
        ("C1((3,1),(3,0))", C(1, (3, 1), (3, 0), 3), "1"),
        ("C2((3,2,0),(0,0,3))", C(2, (3, 2, 0), (0, 0, 3), 3), "q*(1 - t)/(1 - q*t^2)"),
        ("C2((3,2,0),(0,3,0))", C(2, (3, 2, 0), (0, 3, 0), 3), "0"),
    ]
    out = [
        _check("golden P(3,1), n=2", got1 == a1, got=str(got1)),
        _check("golden P(3,2,1), n=3", got2 == a2, got=str(got2)),
    ]
    for name, value, expected in coeffs:
        out.append(_check(name, value == parse_rf(expected, MAC), got=str(value)))
    return out


def parse_polynomial_text(terms: dict, ring=MAC) -> Polynomial:
    """Polynomial from ``{exponents: coefficient string}``."""
    n = len(next(iter(terms)))
    return Polynomial(n, ring, {m: parse_rf(c, ring) for m, c in terms.items()})


def oracle_suite(max_weight: int = 5, n: int = 4) -> list[dict]:
    out = []
    for d in range(max_weight + 1):
        for lam in combinat.enumerate_partitions(d, n):
            ok = macdonald.macdonald_P(lam, n) == oracle.gram_schmidt_P(lam, n)
            out.append(_check(f"gram-schmidt {lam}", ok))
            P = macdonald.macdonald_P(lam, n)
            eig = oracle.macdonald_eigenvalue(lam, n)
            out.append(_check(f"eigenoperator {lam}", oracle.macdonald_operator(P) == P.scale(eig)))
    return out


def specialization_suite(max_weight: int = 5, max_n: int = 3, jack_weight: int = 4) -> list[dict]:
    out = []
    t_ring = ParamRing.get(("t",))
    for n in range(1, max_n + 1):
        for d in range(max_weight + 1):
            for lam in combinat.enumerate_partitions(d, n):
                P = macdonald.macdonald_P(lam, n)
                mono = macdonald.monomial_limit(lam, n, ("q",))
                out.append(_check(f"t->1 {lam}", specialize_params(P, {"t": 1}) == mono))
                hl_q0 = specialize_params(P, {"q": 0})
                hl1 = macdonald.hall_littlewood(lam, n, "hecke_sum")
                hl2 = macdonald.hall_littlewood(lam, n, "standard_sum")
                out.append(_check(f"q->0 {lam}", hl_q0 == hl1 == hl2))
                out.append(_check(f"t->0 {lam}", specialize_params(P, {"t": 0}) == macdonald.q_whittaker_P(lam, n)))
                schur = oracle.schur(lam, n, t_ring)
                out.append(_check(f"q->t {lam}", specialize_params(P, {"q": "t"}) == schur))
                if d <= jack_weight:
                    ok = macdonald.jack_P(lam, n) == oracle.gram_schmidt_P(lam, n, "jack")
                    out.append(_check(f"jack {lam}", ok))
    return out


def lemma_suite(seed: int, r: int = 3, n: int = 3, samples: int = 5, tol: float = 1e-9) -> list[dict]:
    out = []
    for rr in range(1, r + 1):
        for nn in range(1, n + 1):
            points = mpstrace.seeded_points(seed, samples, nn)
            for s, lam, mu in mpstrace.lemma_instances(rr, nn):
                reports = mpstrace.verify_lemma(s, rr, lam, mu, points)
                worst = max(rep.rel_err for rep in reports)
                out.append(
                    _check(
                        f"lemma s={s} r={rr} {lam}->{mu}",
                        worst < tol,
                        rel_err=worst,
                        reports=[rep.as_dict() for rep in reports],
                    )
                )
    return out


def mps_suite(seed: int, r: int = 3, n: int = 3, samples: int = 3, tol: float = 1e-8) -> list[dict]:
    out = []
    points = mpstrace.seeded_points(seed, samples, n)
    for lam in itertools.product(range(r + 1), repeat=n):
        reports = mpstrace.verify_matrix_product(lam, points)
        worst = max(rep.rel_err for rep in reports)
        out.append(_check(f"matrix-product {lam}", worst < tol, rel_err=worst, reports=[rep.as_dict() for rep in reports]))
    return out


def run_suite(name: str, *, seed: int = 0, max_weight: int = 5, n: int = 4, r: int = 3, samples: int | None = None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if max_weight > MAX_WEIGHT or n > MAX_N or r > MAX_R:
        raise ValueError(f"bounds exceed desk scale (weight <= {MAX_WEIGHT}, n <= {MAX_N}, r <= {MAX_R})")
    if name == "hecke":
        checks = hecke_suite(seed, samples or 100, max_n=n)
    elif name == "golden":
        checks = golden_suite()
    elif name == "oracle":
        checks = oracle_suite(max_weight, n)
    elif name == "specialization":
        checks = specialization_suite(max_weight, min(n, 3))
    elif name == "lemma":
        checks = lemma_suite(seed, r, min(n, 3), samples or 5)
    else:
        checks = mps_suite(seed, r, min(n, 3), samples or 3)
    failures = [c for c in checks if not c["passed"]]
    return {
        "suite": name,
        "seed": seed,
        "passed": not failures,
        "count": len(checks),
        "failures": len(failures),
        "first_failure": failures[0] if failures else None,
        "checks": checks,
    }

