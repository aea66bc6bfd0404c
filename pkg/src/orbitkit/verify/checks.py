"""
Verification reports.

Each ``check_*`` function returns a :class:`Report`: a list of records
``{check, inputs, expected, actual, pass}``.  Failures are data, never
exceptions, so a whole suite can be run and summarized.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Callable, Sequence

from ..fields import GF, QQ, Field, FieldScalar
from ..lie import (
    ORDERED_ROOTS,
    BorelWord,
    NilradicalPoint,
    RootLabel,
    adjoint,
    apply_word,
    centralizer_dimension,
    coordinates,
    root_group_element,
    root_vector,
)
from ..orbits import (
    OrbitId,
    catalog,
    classify,
    closure_leq,
    descriptor,
    hasse_edges,
    quadric,
    transporter,
)
from . import _kernels
from .census import closed_form_sizes, enumerate_orbits

A1, A2, A12, A122 = ORDERED_ROOTS


@dataclass
class CheckRecord:
    check: str
    inputs: dict
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"check": self.check, "inputs": self.inputs, "expected": self.expected,
                "actual": self.actual, "pass": self.passed}


@dataclass
class Report:
    name: str
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check: str, inputs: dict, expected, actual, passed: bool | None = None):
        if passed is None:
            passed = expected == actual
        self.records.append(CheckRecord(check, inputs, expected, actual, bool(passed)))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_list(self) -> list[dict]:
        return [r.to_dict() for r in self.records]

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_list(), indent=indent, ensure_ascii=False)

    def summary(self) -> str:
        n, bad = len(self.records), len(self.failures)
        return f"{'PASS' if not bad else 'FAIL'} {self.name}: {n - bad}/{n}"


# ---------------------------------------------------------------- sampling

def random_scalar(rng: random.Random, F: Field, nonzero: bool = False) -> FieldScalar:
    while True:
        if F is QQ:
            x = F(Fraction(rng.randint(-12, 12), rng.randint(1, 7)))
        else:
            x = F(rng.randrange(F.characteristic))
        if x or not nonzero:
            return x


def random_word(rng: random.Random, F: Field, length: int | None = None) -> BorelWord:
    """Torus factor followed by ``length`` root-group factors on random roots."""
    if length is None:
        length = rng.randint(0, 6)
    factors = tuple((rng.choice(ORDERED_ROOTS), random_scalar(rng, F)) for _ in range(length))
    return BorelWord(random_scalar(rng, F, True), random_scalar(rng, F, True), factors)


def random_point(rng: random.Random, F: Field) -> NilradicalPoint:
    return NilradicalPoint(*(random_scalar(rng, F) for _ in range(4)))


def random_class_point(orbit: OrbitId, rng: random.Random, F: Field) -> NilradicalPoint:
    """A random point satisfying the defining equations of ``orbit``.

    Built directly from the equations (free coordinates, then solve), not
    from the group action.
    """
    orbit = OrbitId(orbit)

    def r(nonzero=False):
        return random_scalar(rng, F, nonzero)

    z = F.zero
    if orbit is OrbitId.ZERO:
        return NilradicalPoint(z, z, z, z)
    if orbit is OrbitId.HIGH_ROOT:
        return NilradicalPoint(z, z, z, r(True))
    if orbit is OrbitId.HIGH_SHORT:
        return NilradicalPoint(z, z, r(True), r())
    if orbit is OrbitId.LONG_SIMPLE:
        w, y = r(True), r()
        return NilradicalPoint(w, z, y, -(y * y) / (2 * w))
    if orbit is OrbitId.SHORT_SIMPLE:
        return NilradicalPoint(z, r(True), r(), r())
    if orbit is OrbitId.MIXED:
        while True:
            v = NilradicalPoint(r(True), z, r(), r())
            if v.a3 * v.a3 + 2 * v.a1 * v.a4:
                return v
    return NilradicalPoint(r(True), r(True), r(), r())


def square_mixed_point(rng: random.Random, F: Field) -> NilradicalPoint:
    """A MIXED point whose Q/2 is a nonzero square in F by construction."""
    sigma, w, y = random_scalar(rng, F, True), random_scalar(rng, F, True), random_scalar(rng, F)
    # y^2 + 2wz = 2 sigma^2
    return NilradicalPoint(w, F.zero, y, (2 * sigma * sigma - y * y) / (2 * w))


# ---------------------------------------------------------------- formulas

class Formula(enum.Enum):
    HIGH_ROOT_SCALING = "high_root_scaling"
    EQ1 = "eq1"
    EQ2 = "eq2"
    EQ3 = "eq3"
    EQ4 = "eq4"
    MIXED_ORBIT = "mixed_orbit"


@dataclass(frozen=True)
class _FormulaSpec:
    params: tuple[str, ...]
    nonzero: tuple[str, ...]
    point: tuple[int, int, int, int]
    word: Callable[[dict], tuple]  # -> (s, t, factors)
    closed: Callable[[dict], tuple]


_FORMULAS = {
    # T(s,t) U_a1(r1) U_a2(r2) U_a12(r3) U_a122(r4) . x_a122 = st x_a122
    Formula.HIGH_ROOT_SCALING: _FormulaSpec(
        ("s", "t", "r1", "r2", "r3", "r4"), ("s", "t"), (0, 0, 0, 1),
        lambda k: (k["s"], k["t"], ((A1, k["r1"]), (A2, k["r2"]), (A12, k["r3"]), (A122, k["r4"]))),
        lambda k: (0, 0, 0, k["s"] * k["t"]),
    ),
    Formula.EQ1: _FormulaSpec(
        ("s", "t", "r"), ("s", "t"), (0, 0, 1, 0),
        lambda k: (k["s"], k["t"], ((A2, k["r"]),)),
        lambda k: (0, 0, k["s"], k["r"] * k["s"] * k["t"]),
    ),
    Formula.EQ2: _FormulaSpec(
        ("p", "q", "s", "r"), ("p", "q"), (0, 1, 0, 0),
        lambda k: (k["p"], k["q"], ((A1, k["s"]), (A12, k["r"]))),
        lambda k: (0, k["q"], k["p"] * k["s"], -k["p"] * k["q"] * k["r"]),
    ),
    Formula.EQ3: _FormulaSpec(
        ("s", "t", "r"), ("s", "t"), (1, 0, 0, 0),
        lambda k: (k["s"], k["t"], ((A2, k["r"]),)),
        lambda k: (k["s"] / k["t"], 0, -k["r"] * k["s"], -k["r"] * k["r"] * k["s"] * k["t"] / 2),
    ),
    Formula.EQ4: _FormulaSpec(
        ("s", "t", "a", "b", "c"), ("s", "t"), (1, 1, 0, 0),
        lambda k: (k["s"], k["t"], ((A1, k["a"]), (A2, k["b"]), (A12, k["c"]))),
        lambda k: (k["s"] / k["t"], k["t"], (k["a"] - k["b"]) * k["s"],
                   -k["s"] * k["t"] * (k["b"] * k["b"] / 2 + k["c"])),
    ),
    # orbit of x_a1 + x_a122; third coordinate is -rs
    Formula.MIXED_ORBIT: _FormulaSpec(
        ("s", "t", "r"), ("s", "t"), (1, 0, 0, 1),
        lambda k: (k["s"], k["t"], ((A2, k["r"]),)),
        lambda k: (k["s"] / k["t"], 0, -k["r"] * k["s"], k["s"] * k["t"] * (1 - k["r"] * k["r"] / 2)),
    ),
}


def replay(eq: Formula, params: dict, F: Field) -> tuple[NilradicalPoint, NilradicalPoint]:
    """(apply_word side, closed-form side) of a formula at given parameters."""
    spec = _FORMULAS[Formula(eq)]
    k = {name: F(params[name]) for name in spec.params}
    s, t, factors = spec.word(k)
    lhs = apply_word(BorelWord(s, t, factors), NilradicalPoint.of(F, *spec.point))
    rhs = NilradicalPoint.of(F, *spec.closed(k))
    return lhs, rhs


def check_formula(eq: Formula, samples: int, seed: int = 0,
                  fields: Sequence[Field] = (QQ, GF(7))) -> Report:
    eq = Formula(eq)
    spec = _FORMULAS[eq]
    rng = random.Random(f"{eq.value}:{seed}")
    report = Report(f"formula {eq.value}")
    for F in fields:
        for _ in range(samples):
            params = {n: random_scalar(rng, F, n in spec.nonzero) for n in spec.params}
            lhs, rhs = replay(eq, params, F)
            report.add(eq.value, {"field": F.tag, **{n: str(v) for n, v in params.items()}},
                       str(rhs), str(lhs))
    return report


# ---------------------------------------------------------------- closure order

def _class_points_fp(p: int) -> dict[OrbitId, list[NilradicalPoint]]:
    F = GF(p)
    out = {o: [] for o in OrbitId}
    for row in _kernels.all_points(p):
        v = NilradicalPoint.of(F, *map(int, row))
        out[classify(v)].append(v)
    return out


def orbit_samples(orbit: OrbitId, n: int, rng: random.Random, F: Field = QQ) -> list[NilradicalPoint]:
    """Points of B(F).x for the representative x, via random words."""
    rep = descriptor(orbit).representative(F)
    return [apply_word(random_word(rng, F, 4), rep) for _ in range(n)]


def check_closure_order(p: int = 5, samples_q: int = 100, seed: int = 0) -> Report:
    rng = random.Random(f"closure:{p}:{seed}")
    fp = _class_points_fp(p)
    qq = {o: orbit_samples(o, samples_q, rng) for o in OrbitId}
    report = Report(f"closure order (p={p}, {samples_q} Q samples)")
    for a in OrbitId:
        pts = fp[a] + qq[a]
        stray = [v for v in qq[a] if classify(v) is not a]
        for b in OrbitId:
            db = descriptor(b)
            inputs = {"a": a.value, "b": b.value}
            violators = [v for v in pts if not db.in_closure(v)]
            if closure_leq(a, b):
                report.add("closure_contained", inputs, "all points in closure",
                           "all points in closure" if not violators and not stray else
                           f"{len(violators)} violators, {len(stray)} misclassified samples")
            else:
                witness = str(violators[0]) if violators else None
                reason = "dimension" if descriptor(a).dim > db.dim else "equations"
                report.add("closure_not_contained", {**inputs, "reason": reason},
                           "witness outside closure", witness, witness is not None and not stray)
    return report


# ---------------------------------------------------------------- Lemma support

def _allowed_support(gamma: RootLabel, beta: RootLabel) -> set[RootLabel]:
    g, b = gamma.coefficients, beta.coefficients
    out = set()
    for k in range(1, 4):
        root = RootLabel.from_coefficients((b[0] + k * g[0], b[1] + k * g[1]))
        if root is not None:
            out.add(root)
    return out


def check_lemma_support(trials: int = 50, seed: int = 0) -> Report:
    """U_gamma(r) moves x_beta only by root vectors of weight beta + k gamma, k > 0."""
    rng = random.Random(f"lemma:{seed}")
    report = Report(f"root-group support ({trials} trials per pair)")
    for gamma in ORDERED_ROOTS:
        for beta in ORDERED_ROOTS:
            allowed = _allowed_support(gamma, beta)
            for _ in range(trials):
                r = random_scalar(rng, QQ)
                x = root_vector(beta)
                diff = coordinates(adjoint(root_group_element(gamma, r), x) - x)
                support = {root for root, c in zip(ORDERED_ROOTS, diff) if c}
                report.add("lemma_support",
                           {"gamma": gamma.value, "beta": beta.value, "r": str(r)},
                           sorted(a.value for a in allowed),
                           sorted(a.value for a in support),
                           support <= allowed)
    return report


# ---------------------------------------------------------------- dimensions

def check_dimensions() -> Report:
    report = Report("orbit dimensions")
    dims = {}
    for d in catalog():
        c = centralizer_dimension(d.representative(QQ))
        dims[d.id] = 6 - c
        report.add("dimension", {"orbit": d.id.value}, d.dim, 6 - c)
    report.add("dimension_column", {}, [0, 1, 2, 2, 3, 3, 4], sorted(dims.values()))
    for hi, lo in hasse_edges():
        report.add("cover_lowers_dimension", {"upper": hi.value, "lower": lo.value},
                   True, dims[hi] > dims[lo])
    return report


# ---------------------------------------------------------------- census

def check_census(p: int, backend: str | None = None) -> Report:
    census = enumerate_orbits(p, backend)
    report = Report(f"census p={p}")
    inputs = {"prime": p}
    report.add("total_points", inputs, p**4, sum(o.size for o in census.orbits))
    report.add("class_sizes", inputs,
               {o.value: n for o, n in closed_form_sizes(p).items()},
               {o.value: n for o, n in census.class_sizes.items()})
    report.add("nonempty_classes", inputs, 7, sum(1 for n in census.class_sizes.values() if n))
    report.add("refinement", inputs, [], census.straddling)
    report.add("orbit_count_at_least_7", inputs, True, census.orbit_count >= 7)
    bad = [o.size for o in census.orbits if census.group_order % o.size]
    report.add("sizes_divide_group_order", {**inputs, "order": census.group_order}, [], bad)
    return report


# ---------------------------------------------------------------- transporters

def _is_square_oracle(x: FieldScalar, squares: set | None) -> bool:
    """Square test independent of ``sqrt_witness``: table lookup mod p, n*d over Q."""
    if squares is not None:
        return x.value in squares
    nd = x.value.numerator * x.value.denominator
    return nd >= 0 and isqrt(nd) ** 2 == nd


def check_transporters(samples: int = 500, seed: int = 0, fields: Sequence[Field] = (QQ, GF(7))) -> Report:
    """Transporter words reproduce random class points; MIXED absence only on non-squares.

    Over Q every other MIXED sample is built with Q/2 a square, so the
    positive branch is exercised too.
    """
    rng = random.Random(f"transport:{seed}")
    report = Report(f"transporters ({samples} per class)")
    for F in fields:
        squares = None
        if F is not QQ:
            squares = {x * x % F.characteristic for x in range(F.characteristic)}
        for d in catalog():
            for i in range(samples):
                if d.id is OrbitId.MIXED and F is QQ and i % 2:
                    v = square_mixed_point(rng, F)
                else:
                    v = random_class_point(d.id, rng, F)
                inputs = {"field": F.tag, "orbit": d.id.value, "target": str(v)}
                w = transporter(d.id, v)
                if w is None:
                    report.add("transporter_absent", inputs, "Q/2 is a non-square", "absent",
                               d.id is OrbitId.MIXED and not _is_square_oracle(quadric(v) / 2, squares))
                    continue
                got = apply_word(w, d.representative(F))
                ok = got == v
                if d.id is OrbitId.MIXED:
                    ok = ok and _is_square_oracle(quadric(v) / 2, squares)
                report.add("transporter", {**inputs, "word": str(w)}, str(v), str(got), ok)
    return report


def run_all(seed: int = 0, samples: int = 1000, closure_prime: int = 5, closure_samples: int = 100,
            primes: Sequence[int] = (3, 5, 7), transport_samples: int = 500) -> list[Report]:
    reports = [check_formula(eq, samples, seed) for eq in Formula]
    reports.append(check_closure_order(closure_prime, closure_samples, seed))
    reports.append(check_lemma_support(50, seed))
    reports.append(check_dimensions())
    reports.extend(check_census(p) for p in primes)
    reports.append(check_transporters(transport_samples, seed))
    return reports
