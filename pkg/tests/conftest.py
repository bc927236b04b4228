import random

from hypothesis import strategies as st

from macdonald_sum.field import MACDONALD_SYMBOLS, ParamRing
from macdonald_sum.polyring import Polynomial

MAC = ParamRing.get(MACDONALD_SYMBOLS)

small_int = st.integers(min_value=-4, max_value=4)
exps2 = st.tuples(st.integers(0, 2), st.integers(0, 2))


@st.composite
def param_polys(draw, ring=MAC, max_terms=3):
    terms = draw(st.dictionaries(exps2, small_int, max_size=max_terms))
    return ring.poly(terms)


@st.composite
def rational_functions(draw, ring=MAC):
    num = draw(param_polys(ring))
    den = draw(param_polys(ring).filter(lambda p: not p.is_zero()))
    return ring.from_poly(num) / ring.from_poly(den)


@st.composite
def polynomials(draw, n=None, max_degree=4, max_terms=4, ring=MAC):
    if n is None:
        n = draw(st.integers(2, 4))
    mono = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).map(tuple)
    mono = mono.filter(lambda m: sum(m) <= max_degree)
    data = draw(st.dictionaries(mono, rational_functions(ring), max_size=max_terms))
    return Polynomial(n, ring, data)


def seeded_rng(seed=0):
    return random.Random(seed)


# one line per acceptance criterion, shown at the end of every run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
