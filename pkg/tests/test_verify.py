import json
import random
from fractions import Fraction

import numpy as np
import pytest

from orbitkit.fields import GF, QQ
from orbitkit.lie import NilradicalPoint, apply_word
from orbitkit.orbits import OrbitId, classify, descriptor
from orbitkit.verify import (
    Formula,
    check_census,
    check_closure_order,
    check_dimensions,
    check_formula,
    check_lemma_support,
    check_transporters,
    closed_form_sizes,
    enumerate_orbits,
    replay,
)
from orbitkit.verify import _kernels
from orbitkit.verify.census import action_matrix, generators
from orbitkit.verify.checks import random_class_point

O = OrbitId


def P(*vals, F=QQ):
    return NilradicalPoint.of(F, *vals)


@pytest.mark.parametrize("p,sizes", [
    (3, [1, 2, 6, 6, 18, 12, 36]),
    (5, [1, 4, 20, 20, 100, 80, 400]),
])
def test_census_class_sizes(p, sizes):
    census = enumerate_orbits(p)
    assert [census.class_sizes[o] for o in O] == sizes
    assert list(closed_form_sizes(p).values()) == sizes
    assert sum(o.size for o in census.orbits) == p**4
    assert census.straddling == []


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_mixed_class_splits_in_two(p):
    census = enumerate_orbits(p)
    assert census.orbit_count == 8
    mixed = census.orbits_in(O.MIXED)
    assert [o.size for o in mixed] == [p * (p - 1) ** 2 // 2] * 2
    for o in census.orbits:
        assert census.group_order % o.size == 0
        if o.classifier_class is not O.MIXED:
            assert o.size == census.class_sizes[o.classifier_class]


def test_census_rejects_bad_primes():
    with pytest.raises(ValueError):
        enumerate_orbits(2)
    with pytest.raises(ValueError):
        enumerate_orbits(17)
    with pytest.raises(ValueError):
        enumerate_orbits(9)


def test_census_json():
    data = json.loads(enumerate_orbits(3).to_json())
    assert set(data) == {"prime", "orbit_count", "class_sizes", "orbits"}
    assert data["class_sizes"] == {"zero": 1, "high_root": 2, "high_short": 6, "long_simple": 6,
                                   "short_simple": 18, "mixed": 12, "regular": 36}
    assert set(data["orbits"][0]) == {"size", "class", "representative"}
    F = GF(3)
    for o in data["orbits"]:
        assert classify(NilradicalPoint.parse(o["representative"], F)).value == o["class"]


def test_census_deterministic():
    a, b = enumerate_orbits(5), enumerate_orbits(5)
    assert a.to_json() == b.to_json()


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("p", [3, 5, 7])
def test_backends_agree(p):
    mats = np.stack([action_matrix(w) for w in generators(GF(p))])
    perms = _kernels.permutation_table(mats, p)
    assert np.array_equal(_kernels.orbit_labels(perms, "numba"), _kernels.orbit_labels(perms, "numpy"))
    assert enumerate_orbits(p, "numba").to_json() == enumerate_orbits(p, "numpy").to_json()


def test_labels_on_a_toy_permutation():
    # two 3-cycles on {0,1,2} and {3,4,5}, and a fixed point 6
    perm = np.array([[1, 2, 0, 4, 5, 3, 6]])
    for backend in ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else []):
        assert _kernels.orbit_labels(perm, backend).tolist() == [0, 0, 0, 3, 3, 3, 6]


def test_encode_decode_roundtrip():
    idx = np.arange(7**4)
    assert np.array_equal(_kernels.encode(_kernels.decode(idx, 7), 7), idx)


def test_action_matrix_matches_apply_word():
    F = GF(5)
    rng = random.Random(3)
    for w in generators(F):
        M = action_matrix(w)
        for _ in range(10):
            v = [rng.randrange(5) for _ in range(4)]
            assert list(M @ np.array(v) % 5) == list(apply_word(w, P(*v, F=F)).raw())


def test_generators_include_inverses():
    mats = [action_matrix(w) for w in generators(GF(7))]
    for m in mats:
        assert any(np.array_equal(m @ m2 % 7, np.eye(4, dtype=np.int64)) for m2 in mats)


def test_replay_examples():
    lhs, rhs = replay(Formula.EQ3, {"s": 1, "t": 1, "r": 2}, QQ)
    assert lhs == rhs == P(1, 0, -2, -2)
    lhs, rhs = replay(Formula.EQ1, {"s": 3, "t": 5, "r": 0}, QQ)
    assert lhs == rhs == P(0, 0, 3, 0)
    b = Fraction(3, 2)
    lhs, rhs = replay(Formula.EQ4, {"s": 2, "t": 7, "a": b, "b": b, "c": -b * b / 2}, QQ)
    assert lhs == rhs
    assert lhs.a3 == 0 and lhs.a4 == 0


@pytest.mark.parametrize("eq", list(Formula))
def test_check_formula_passes(eq):
    report = check_formula(eq, 50, seed=1)
    assert report.passed
    assert len(report.records) == 100
    assert {r.inputs["field"] for r in report.records} == {"Q", "Fp:7"}


def test_check_formula_deterministic():
    assert check_formula(Formula.EQ4, 20, 5).to_json() == check_formula(Formula.EQ4, 20, 5).to_json()
    assert check_formula(Formula.EQ4, 20, 5).to_json() != check_formula(Formula.EQ4, 20, 6).to_json()


def test_check_closure_order():
    report = check_closure_order(3, 20, seed=0)
    assert report.passed and len(report.records) == 49
    by_pair = {(r.inputs["a"], r.inputs["b"]): r for r in report.records}
    assert by_pair[("high_root", "long_simple")].check == "closure_contained"
    assert by_pair[("high_short", "long_simple")].check == "closure_not_contained"
    assert all(by_pair[("zero", b.value)].check == "closure_contained" for b in O)


def test_closure_witness_example():
    assert not descriptor(O.LONG_SIMPLE).in_closure(P(0, 0, 1, 0))


def test_check_lemma_support():
    report = check_lemma_support(5, seed=0)
    assert report.passed and len(report.records) == 80
    recs = {(r.inputs["gamma"], r.inputs["beta"]): r for r in report.records}
    assert recs[("a2", "a12")].expected == ["a122"]
    assert recs[("a2", "a1")].expected == ["a12", "a122"]
    assert all(recs[("a122", b)].expected == [] for b in ("a1", "a2", "a12", "a122"))
    # both coordinates are actually populated for gamma=a2, beta=a1 when r != 0
    populated = [r.actual for r in report.records
                 if (r.inputs["gamma"], r.inputs["beta"]) == ("a2", "a1") and r.inputs["r"] != "0"]
    assert populated and all(a == ["a12", "a122"] for a in populated)


def test_check_dimensions():
    report = check_dimensions()
    assert report.passed
    dims = {r.inputs["orbit"]: r.actual for r in report.records if r.check == "dimension"}
    assert dims["zero"] == 0 and dims["regular"] == 4


def test_check_census():
    assert check_census(3).passed


def test_check_transporters_small():
    report = check_transporters(40, seed=2)
    assert report.passed
    absent = [r for r in report.records if r.check == "transporter_absent"]
    assert absent and all(r.inputs["orbit"] == "mixed" for r in absent)


def test_report_records_failures():
    report = check_formula(Formula.EQ1, 2)
    report.add("forced", {}, 1, 2)
    assert not report.passed and len(report.failures) == 1
    row = json.loads(report.to_json())[-1]
    assert row == {"check": "forced", "inputs": {}, "expected": 1, "actual": 2, "pass": False}


@pytest.mark.parametrize("orbit", list(O))
@pytest.mark.parametrize("F", [QQ, GF(5)])
def test_random_class_points(orbit, F):
    rng = random.Random(0)
    for _ in range(20):
        assert classify(random_class_point(orbit, rng, F)) is orbit
