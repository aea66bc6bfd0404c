import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitkit.fields import GF, QQ
from orbitkit.lie import ORDERED_ROOTS, BorelWord, NilradicalPoint, apply_word
from orbitkit.orbits import (
    COVERS,
    NotInOrbitError,
    OrbitId,
    Poly,
    catalog,
    catalog_json,
    classify,
    closure_leq,
    descriptor,
    hasse_edges,
    quadric,
    transport,
    transporter,
)

from conftest import fields, scalars_in

O = OrbitId
A1, A2, A12, A122 = ORDERED_ROOTS


def P(*vals, F=QQ):
    return NilradicalPoint.of(F, *vals)


def test_catalog_rows():
    rows = {d.id: d for d in catalog()}
    assert [d.dim for d in catalog()] == [0, 1, 2, 2, 3, 3, 4]
    assert rows[O.HIGH_ROOT].dim == 1
    assert set(rows[O.LONG_SIMPLE].z_polys) == {Poly.X2, Poly.Q}
    assert rows[O.REGULAR].z_polys == ()
    assert rows[O.REGULAR].v_polys == (Poly.X1, Poly.X2)
    assert rows[O.SHORT_SIMPLE].v_polys == (Poly.X2,)


def test_descriptor_invariants():
    reps = set()
    for d in catalog():
        v = d.representative()
        assert d.contains(v)
        assert d.dim == 4 - len(d.z_polys)
        reps.add(d.coords)
    assert len(reps) == 7


def test_representatives_classify_to_themselves():
    for F in (QQ, GF(3), GF(7)):
        for d in catalog():
            assert classify(d.representative(F)) is d.id


def test_catalog_json_schema():
    data = json.loads(catalog_json())
    assert [row["id"] for row in data] == [o.value for o in O]
    assert set(data[0]) == {"id", "representative", "z_polys", "v_polys", "dim"}
    assert data[3]["z_polys"] == ["X2", "Q"]
    assert data[5]["v_polys"] == ["X1", "Q"]
    assert data[6]["representative"] == "(1,1,0,0)"


def test_quadric_examples():
    assert quadric(P(1, 0, 2, -2)) == 0
    assert quadric(P(0, 0, 0, 17)) == 0
    assert quadric(P(1, 0, 0, 1)) == 2


@pytest.mark.parametrize("coords,expected", [
    ((0, 0, 0, 0), O.ZERO),
    ((0, 0, 0, 4), O.HIGH_ROOT),
    ((0, 0, 3, 5), O.HIGH_SHORT),
    ((2, 0, 2, -1), O.LONG_SIMPLE),
    ((0, 5, 1, 7), O.SHORT_SIMPLE),
    ((1, 0, 1, 1), O.MIXED),
    ((3, -1, 0, 9), O.REGULAR),
])
def test_classify_examples(coords, expected):
    assert classify(P(*coords)) is expected


def _brute_counts(p):
    """Count F_p points per class from the equations, with plain integers."""
    counts = dict.fromkeys(O, 0)
    for w, x, y, z in itertools.product(range(p), repeat=4):
        q = (y * y + 2 * w * z) % p
        if w and x:
            counts[O.REGULAR] += 1
        elif x:
            counts[O.SHORT_SIMPLE] += 1
        elif w:
            counts[O.MIXED if q else O.LONG_SIMPLE] += 1
        elif y:
            counts[O.HIGH_SHORT] += 1
        elif z:
            counts[O.HIGH_ROOT] += 1
        else:
            counts[O.ZERO] += 1
    return counts


@pytest.mark.parametrize("p", [3, 5, 7])
def test_partition_over_fp(p):
    F = GF(p)
    seen = dict.fromkeys(O, 0)
    for coords in itertools.product(range(p), repeat=4):
        v = P(*coords, F=F)
        holding = [d.id for d in catalog() if d.contains(v)]
        assert holding == [classify(v)]
        seen[holding[0]] += 1
    assert seen == _brute_counts(p)
    assert all(seen.values())


def test_brute_counts_match_frozen_values():
    assert list(_brute_counts(3).values()) == [1, 2, 6, 6, 18, 12, 36]
    assert list(_brute_counts(5).values()) == [1, 4, 20, 20, 100, 80, 400]


@st.composite
def words(draw, F, max_len=5):
    n = draw(st.integers(0, max_len))
    factors = tuple((draw(st.sampled_from(ORDERED_ROOTS)), draw(scalars_in(F))) for _ in range(n))
    return BorelWord(draw(scalars_in(F, True)), draw(scalars_in(F, True)), factors)


@given(st.data(), fields)
@settings(max_examples=150)
def test_orbit_stability(data, F):
    w = data.draw(words(F))
    v = NilradicalPoint(*(data.draw(scalars_in(F)) for _ in range(4)))
    assert classify(apply_word(w, v)) is classify(v)


def test_closure_examples():
    assert closure_leq(O.HIGH_ROOT, O.LONG_SIMPLE)
    assert not closure_leq(O.LONG_SIMPLE, O.SHORT_SIMPLE)
    assert not closure_leq(O.SHORT_SIMPLE, O.LONG_SIMPLE)
    for a in O:
        assert closure_leq(a, a)
        assert closure_leq(O.ZERO, a)
        assert closure_leq(a, O.REGULAR)


def test_closure_is_partial_order():
    for a, b in itertools.product(O, repeat=2):
        if a is not b:
            assert not (closure_leq(a, b) and closure_leq(b, a))
    for a, b, c in itertools.product(O, repeat=3):
        if closure_leq(a, b) and closure_leq(b, c):
            assert closure_leq(a, c)


def test_hasse_edges():
    edges = hasse_edges()
    assert len(edges) == 8
    assert (O.REGULAR, O.SHORT_SIMPLE) in edges
    assert (O.REGULAR, O.MIXED) in edges
    assert (O.LONG_SIMPLE, O.HIGH_ROOT) in edges
    assert (O.SHORT_SIMPLE, O.LONG_SIMPLE) not in edges
    assert (O.LONG_SIMPLE, O.SHORT_SIMPLE) not in edges
    for hi, lo in edges:
        assert descriptor(hi).dim > descriptor(lo).dim


def test_hasse_edges_from_equations():
    """a <= b iff the representative of a satisfies b's closure equations; reduce and compare."""
    leq = {(a, b) for a, b in itertools.product(O, repeat=2)
           if descriptor(b).in_closure(descriptor(a).representative())}
    assert leq == {(a, b) for a, b in itertools.product(O, repeat=2) if closure_leq(a, b)}
    strict = {(a, b) for a, b in leq if a is not b}
    covers = {(a, b) for a, b in strict
              if not any((a, c) in strict and (c, b) in strict for c in O)}
    assert covers == set(COVERS)
    assert {(hi, lo) for hi, lo in hasse_edges()} == {(b, a) for a, b in covers}


def test_transporter_high_short():
    y, z = QQ(Fraction(3, 2)), QQ(-4)
    target = NilradicalPoint(QQ(0), QQ(0), y, z)
    w = transporter(O.HIGH_SHORT, target)
    assert w == BorelWord(y, QQ(1), ((A2, z / y),))
    assert apply_word(w, P(0, 0, 1, 0)) == target


def test_transporter_zero():
    assert transporter(O.ZERO, P(0, 0, 0, 0)) == BorelWord.identity(QQ)


def test_transporter_mixed_absent_over_f7():
    F = GF(7)
    v = P(1, 0, 1, 1, F=F)
    assert quadric(v) == 3 and quadric(v) / 2 == 5
    assert 5 not in {x * x % 7 for x in range(7)}
    assert transporter(O.MIXED, v) is None
    assert transport(O.MIXED, v) is None


def test_transporter_mixed_present_over_f11():
    F = GF(11)
    v = P(1, 0, 1, 6, F=F)  # Q = 13 = 2, Q/2 = 1
    assert transport(O.MIXED, v) == v


def test_transporter_mixed_over_q():
    v = P(1, 0, 0, 1)  # representative itself: Q/2 = 1
    assert transport(O.MIXED, v) == v
    assert transporter(O.MIXED, P(1, 0, 0, 2)) is None  # Q/2 = 2


def test_transporter_precondition():
    with pytest.raises(NotInOrbitError):
        transporter(O.REGULAR, P(0, 1, 0, 0))


@given(st.data(), fields)
@settings(max_examples=200)
def test_transporter_soundness(data, F):
    v = NilradicalPoint(*(data.draw(scalars_in(F)) for _ in range(4)))
    orbit = classify(v)
    w = transporter(orbit, v)
    if w is None:
        assert orbit is O.MIXED and (quadric(v) / 2).sqrt_witness() is None
    else:
        assert apply_word(w, descriptor(orbit).representative(F)) == v
