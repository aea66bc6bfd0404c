from fractions import Fraction

from hypothesis import strategies as st

from orbitkit.fields import GF, QQ

SMALL_PRIMES = (3, 5, 7, 11, 13)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def q_scalars(draw, nonzero=False):
    return QQ(draw(nonzero_rationals if nonzero else rationals))


@st.composite
def fp_scalars(draw, p=None, nonzero=False):
    p = p or draw(st.sampled_from(SMALL_PRIMES))
    lo = 1 if nonzero else 0
    return GF(p)(draw(st.integers(lo, p - 1)))


fields = st.sampled_from([QQ] + [GF(p) for p in SMALL_PRIMES])


@st.composite
def scalars_in(draw, F, nonzero=False):
    if F is QQ:
        return draw(q_scalars(nonzero))
    return draw(fp_scalars(F.characteristic, nonzero))


def frac(x):
    return Fraction(x)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
