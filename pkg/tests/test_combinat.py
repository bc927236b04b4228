from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macdonald_sum import combinat as C

LAM = (4, 4, 3, 3, 3, 2, 0, 0, 0)
MU = (0, 3, 0, 0, 3, 0, 4, 3, 4)

partitions = st.lists(st.integers(0, 5), min_size=1, max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_parse_parts():
    assert C.parse_parts("3,1,0") == (3, 1, 0)
    assert C.parse_parts(" 2 ") == (2,)
    for bad in ("3,a", "1,,2", "-1,0"):
        with pytest.raises(ValueError):
            C.parse_parts(bad)


def test_conjugate():
    assert C.conjugate((3, 1)) == (2, 1, 1)
    assert C.conjugate((0, 0, 0)) == ()
    assert C.conjugate_at(C.conjugate((3, 1)), 4) == 0


def test_truncate():
    lam = (3, 3, 2, 1, 1, 1, 0)
    assert C.truncate(lam, 1) == (3, 3, 2, 0, 0, 0, 0)
    assert C.truncate(lam, 2) == (3, 3, 0, 0, 0, 0, 0)
    assert C.truncate(lam, 3) == (0,) * 7
    with pytest.raises(ValueError):
        C.truncate(lam, 4)
    with pytest.raises(ValueError):
        C.truncate(lam, -1)


def test_multiplicity():
    assert C.multiplicity(MU, 3) == 3
    assert C.multiplicity(MU, 0) == 4
    assert C.multiplicity(MU, 7) == 0


def test_worked_statistics_table():
    assert [C.a_stat(LAM, MU, i) for i in range(1, 5)] == [0, 0, 1, 2]
    assert [C.b_stat(LAM, MU, i) for i in range(1, 5)] == [0, 1, 2, 2]
    with pytest.raises(ValueError):
        C.a_stat(LAM, MU[:-1], 3)
    with pytest.raises(ValueError):
        C.b_stat(LAM, MU[:-1], 3)


def test_sort_desc():
    assert C.sort_desc((0, 3, 0, 4)) == (4, 3, 0, 0)
    assert C.sort_desc((3, 1, 0)) == (3, 1, 0)
    assert C.sort_desc((2, 2, 2)) == (2, 2, 2)


def test_dominance():
    assert C.dominance_less((2, 2), (3, 1))
    assert not C.dominance_less((3, 1), (2, 2))
    assert not C.dominance_less((3, 1), (3, 1))
    assert not C.dominance_less((3, 1, 1, 1), (2, 2, 2))  # incomparable
    with pytest.raises(ValueError):
        C.dominance_less((2, 1), (2, 2))


def test_z_and_enumeration():
    assert C.z_factor((1, 1)) == 2
    assert C.z_factor((2, 1)) == 2
    assert C.z_factor((3, 3, 1, 0)) == 18
    assert len(C.enumerate_partitions(4, 4)) == 5
    assert C.enumerate_partitions(0, 2) == [(0, 0)]
    assert C.enumerate_partitions(4, 2) == [(4, 0), (3, 1), (2, 2)]
    assert [len(C.enumerate_partitions(d, d)) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_coset_examples():
    reps = C.coset_reps((2, 2, 0, 0))
    assert len(reps) == 6
    assert {c.arrangement for c in reps} == set(permutations((2, 2, 0, 0)))
    words = {c.arrangement: c.word for c in C.coset_reps((3, 0, 0))}
    assert words == {(3, 0, 0): (), (0, 3, 0): (1,), (0, 0, 3): (2, 1)}
    assert [c.arrangement for c in C.coset_reps((2, 2, 2))] == [(2, 2, 2)]


def test_reduced_word_rejects_non_rearrangement():
    with pytest.raises(ValueError):
        C.reduced_word((2, 1), (2, 2))


def _all_partitions(max_n):
    for n in range(1, max_n + 1):
        for d in range(0, n + 2):
            yield from C.enumerate_partitions(d, n)


def test_coset_invariants_up_to_six_variables():
    checked = 0
    for lam in _all_partitions(6):
        reps = C.coset_reps(lam)
        assert len(reps) == C.coset_count(lam)
        assert len({c.arrangement for c in reps}) == len(reps)
        for c in reps:
            cur = list(lam)
            for i in reversed(c.word):
                assert cur[i - 1] > cur[i], "swap must be at a strict descent"
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
            assert tuple(cur) == c.arrangement == C.apply_word(lam, c.word)
            assert len(c.word) == C.inversion_count(c.arrangement)
        checked += 1
    assert checked > 50


@given(partitions)
def test_conjugate_is_involution(lam):
    conj = C.conjugate(lam)
    back = C.conjugate(conj)
    assert back == tuple(p for p in lam if p > 0)


@given(partitions, st.data())
def test_truncate_properties(lam, data):
    r = max(lam)
    k = data.draw(st.integers(0, r))
    cut = C.truncate(lam, k)
    assert C.is_partition(cut)
    assert all(p == 0 or p > k for p in cut)
    assert C.truncate(lam, r) == (0,) * len(lam)
