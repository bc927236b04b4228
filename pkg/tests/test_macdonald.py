import pytest

from macdonald_sum import combinat, hecke, macdonald as M
from macdonald_sum.field import ParamRing, parse_rf
from macdonald_sum.hecke import apply_T_word
from macdonald_sum.oracle import gram_schmidt_P
from macdonald_sum.polyring import Polynomial, is_symmetric

from conftest import MAC

QR = ParamRing.get(("q",))
JR = ParamRing.get(("alpha",))
TR = ParamRing.get(("t",))


def poly(ring, terms):
    return Polynomial(len(next(iter(terms))), ring, terms)


def rf(s, ring=MAC):
    return parse_rf(s, ring)


# coefficients


@pytest.mark.parametrize(
    "level,top,bottom,expected",
    [
        (2, (3, 0), (0, 3), "q*(1 - t)/(1 - q*t)"),
        (1, (3, 1), (0, 3), "0"),
        (1, (3, 1), (3, 0), "1"),
        (2, (3, 2, 0), (0, 0, 3), "q*(1 - t)/(1 - q*t^2)"),
        (2, (3, 2, 0), (0, 3, 0), "0"),
    ],
)
def test_coefficient_spot_values(level, top, bottom, expected):
    got = M.coefficient_C(M.CoefficientQuery(level, top, bottom, 3))
    assert got == rf(expected)


def test_coefficient_specialized_kinds():
    assert M.coefficient(2, (3, 0), (0, 3), 3, "q-whittaker") == rf("q", QR)
    assert M.coefficient(2, (3, 0), (0, 3), 3, "jack") == rf("1/(1 + alpha)", JR)


def test_malformed_query():
    with pytest.raises(ValueError):
        M.coefficient_C(M.CoefficientQuery(1, (3, 1), (3,), 3))
    with pytest.raises(ValueError):
        M.coefficient_C(M.CoefficientQuery(1, (1, 3), (3, 1), 3))
    with pytest.raises(ValueError):
        M.coefficient_C(M.CoefficientQuery(0, (3, 1), (3, 1), 3))


# symmetric families


def test_two_variable_example():
    want = poly(MAC, {(3, 1): 1, (2, 2): "(1 - t + q - q*t)/(1 - q*t)", (1, 3): 1})
    assert M.macdonald_P((3, 1), 2) == want


def test_single_box_is_power_sum():
    for n in range(1, 5):
        lam = (1,) + (0,) * (n - 1)
        want = sum((Polynomial.variable(i, n, MAC) for i in range(1, n + 1)), Polynomial.zero(n, MAC))
        assert M.macdonald_P(lam, n) == want
        assert M.jack_P(lam, n) == M.monomial_limit(lam, n, ("alpha",))


def test_empty_partition_is_one():
    assert M.macdonald_P((0, 0, 0), 3) == Polynomial.one(3, MAC)
    assert M.macdonald_P((), 2) == Polynomial.one(2, MAC)


def test_too_few_variables():
    with pytest.raises(ValueError):
        M.macdonald_P((2, 1, 1), 2)
    with pytest.raises(ValueError):
        M.macdonald_P((1, 2), 2)


def test_partition_may_be_given_short_or_padded():
    assert M.macdonald_P((2, 1), 3) == M.macdonald_P((2, 1, 0), 3) == M.macdonald_P((2, 1, 0, 0), 3)


def test_against_gram_schmidt_small():
    assert M.macdonald_P((2, 1, 0), 3) == gram_schmidt_P((2, 1), 3)


def test_strategies_agree():
    for lam, n in [((3, 2, 1), 3), ((2, 2, 1, 0), 4), ((3, 1, 1, 0), 4)]:
        outs = {s: M.macdonald_P(lam, n, s) for s in M.STRATEGIES}
        assert outs["naive"] == outs["memoized"] == outs["parallel"]
        assert str(outs["naive"]) == str(outs["parallel"])


def test_parallel_respects_thread_cap(monkeypatch):
    monkeypatch.setenv("MACDONALD_SUM_THREADS", "1")
    assert M._thread_cap() == 1
    assert M.macdonald_P((2, 1, 0), 3, "parallel") == M.macdonald_P((2, 1, 0), 3)
    monkeypatch.setenv("MACDONALD_SUM_THREADS", "junk")
    assert M._thread_cap() == 1


def test_memoized_uses_fewer_generator_calls():
    calls = {}
    for s in ("naive", "memoized"):
        M.clear_caches()
        hecke.counters.reset()
        M.macdonald_P((3, 2, 1, 0), 4, s)
        calls[s] = hecke.counters.generator_calls
    assert calls["memoized"] < calls["naive"]


def test_unknown_strategy():
    with pytest.raises(ValueError):
        M.macdonald_P((1,), 2, "fast")


def test_q_whittaker_examples():
    assert M.q_whittaker_P((3, 1), 2) == poly(QR, {(3, 1): 1, (2, 2): "1 + q", (1, 3): 1})
    assert M.q_whittaker_P((1, 1, 0), 3) == M.monomial_limit((1, 1, 0), 3, ("q",))


def test_jack_examples():
    assert M.jack_P((2, 0), 2) == poly(JR, {(2, 0): 1, (1, 1): "2/(1 + alpha)", (0, 2): 1})
    assert M.jack_P((2, 1, 0), 3) == gram_schmidt_P((2, 1), 3, "jack")


def test_hall_littlewood_examples():
    e2 = poly(TR, {(1, 1): 1})
    assert M.hall_littlewood((1, 1), 2, "hecke_sum") == e2
    assert M.hall_littlewood((1, 1), 2, "standard_sum") == e2
    with pytest.raises(ValueError):
        M.hall_littlewood((1, 1), 2, "other")


def test_hall_littlewood_modes_agree():
    for n in range(1, 4):
        for d in range(6):
            for lam in combinat.enumerate_partitions(d, n):
                assert M.hall_littlewood(lam, n, "hecke_sum") == M.hall_littlewood(lam, n, "standard_sum"), lam


def test_monomial_limit():
    assert len(M.monomial_limit((2, 2, 0, 0), 4)) == 6
    assert M.monomial_limit((1, 1, 1), 3) == Polynomial.monomial((1, 1, 1), ParamRing.get(()))


# non-symmetric building blocks


def test_nonsym_two_variable_example():
    want = poly(MAC, {(3, 1): 1, (2, 2): "q*(1 - t)/(1 - q*t)"})
    assert M.nonsym_f((3, 1), 2) == want


def test_nonsym_rejects_composition():
    with pytest.raises(ValueError):
        M.nonsym_f((1, 3), 2)


def test_compose_f_is_hecke_image():
    f31 = M.nonsym_f((3, 1), 2)
    assert M.compose_f((1, 3)) == apply_T_word((1,), f31)
    assert M.compose_f((3, 1)) == f31
    assert M.compose_f((1, 0)) == Polynomial.monomial((1, 0), MAC)


def test_nonsym_monic_and_orbit_sum():
    for n in range(1, 4):
        for d in range(6):
            for lam in combinat.enumerate_partitions(d, n):
                f = M.nonsym_f(lam, n)
                assert f.coefficient(lam) == MAC.one
                orbit = sum(
                    (apply_T_word(c.word, f) for c in combinat.coset_reps(lam)),
                    Polynomial.zero(n, MAC),
                )
                assert orbit == M.macdonald_P(lam, n), lam


def test_outputs_are_symmetric():
    for lam, n in [((3, 1), 2), ((2, 2, 1), 3), ((3, 1, 1, 0), 4)]:
        assert is_symmetric(M.macdonald_P(lam, n))
        assert is_symmetric(M.q_whittaker_P(lam, n))
        assert is_symmetric(M.jack_P(lam, n))
