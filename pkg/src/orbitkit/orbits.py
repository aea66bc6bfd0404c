"""
The seven B-orbits on the nilradical of so_5 and their closure order.

Every orbit is a locally closed set Z(z_polys) & V(v_polys) cut out by the
coordinate functions X1, X2, X12, X122 and the quadric

    Q = X12^2 + 2 X1 X122.

Over an algebraically closed field these are exactly the orbits.  Over Q or
F_p the same equations define *classes*, each a union of orbits of B(k); the
only class that can split is ``MIXED``, where the transporter needs a square
root of Q/2.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .fields import QQ, Field, FieldScalar
from .lie import BorelWord, NilradicalPoint, RootLabel, apply_word


class OrbitId(enum.Enum):
    ZERO = "zero"
    HIGH_ROOT = "high_root"
    HIGH_SHORT = "high_short"
    LONG_SIMPLE = "long_simple"
    SHORT_SIMPLE = "short_simple"
    MIXED = "mixed"
    REGULAR = "regular"

    def __str__(self):
        return self.value


class Poly(enum.Enum):
    """The five polynomials appearing in the defining equations."""

    X1 = "X1"
    X2 = "X2"
    X12 = "X12"
    X122 = "X122"
    Q = "Q"

    def __call__(self, v: NilradicalPoint) -> FieldScalar:
        if self is Poly.Q:
            return quadric(v)
        return v[("X1", "X2", "X12", "X122").index(self.value)]

    def __str__(self):
        return self.value


def quadric(v: NilradicalPoint) -> FieldScalar:
    """X12^2 + 2 X1 X122, the invariant separating LONG_SIMPLE from MIXED."""
    return v.a3 * v.a3 + 2 * v.a1 * v.a4


@dataclass(frozen=True)
class OrbitDescriptor:
    id: OrbitId
    coords: tuple[int, int, int, int]
    z_polys: tuple[Poly, ...]
    v_polys: tuple[Poly, ...]
    dim: int

    def representative(self, field: Field = QQ) -> NilradicalPoint:
        return NilradicalPoint.of(field, *self.coords)

    def contains(self, v: NilradicalPoint) -> bool:
        return all(not f(v) for f in self.z_polys) and all(f(v) for f in self.v_polys)

    def in_closure(self, v: NilradicalPoint) -> bool:
        """Whether v lies in Z(z_polys), the closure of this orbit."""
        return all(not f(v) for f in self.z_polys)

    def equations(self) -> str:
        parts = []
        if self.z_polys:
            parts.append("Z(" + ",".join(map(str, self.z_polys)) + ")")
        parts += [f"V({f})" for f in self.v_polys]
        return " ∩ ".join(parts)

    def to_dict(self) -> dict:
        return {
            "id": self.id.value,
            "representative": "(" + ",".join(map(str, self.coords)) + ")",
            "z_polys": [f.value for f in self.z_polys],
            "v_polys": [f.value for f in self.v_polys],
            "dim": self.dim,
        }


_X1, _X2, _X12, _X122, _Q = Poly
_CATALOG = (
    OrbitDescriptor(OrbitId.ZERO, (0, 0, 0, 0), (_X1, _X2, _X12, _X122), (), 0),
    OrbitDescriptor(OrbitId.HIGH_ROOT, (0, 0, 0, 1), (_X1, _X2, _X12), (_X122,), 1),
    OrbitDescriptor(OrbitId.HIGH_SHORT, (0, 0, 1, 0), (_X1, _X2), (_X12,), 2),
    OrbitDescriptor(OrbitId.LONG_SIMPLE, (1, 0, 0, 0), (_X2, _Q), (_X1,), 2),
    OrbitDescriptor(OrbitId.SHORT_SIMPLE, (0, 1, 0, 0), (_X1,), (_X2,), 3),
    OrbitDescriptor(OrbitId.MIXED, (1, 0, 0, 1), (_X2,), (_X1, _Q), 3),
    OrbitDescriptor(OrbitId.REGULAR, (1, 1, 0, 0), (), (_X1, _X2), 4),
)
_BY_ID = {d.id: d for d in _CATALOG}

# (lower, upper): lower lies in the closure of upper and nothing sits between
COVERS = (
    (OrbitId.ZERO, OrbitId.HIGH_ROOT),
    (OrbitId.HIGH_ROOT, OrbitId.HIGH_SHORT),
    (OrbitId.HIGH_ROOT, OrbitId.LONG_SIMPLE),
    (OrbitId.HIGH_SHORT, OrbitId.SHORT_SIMPLE),
    (OrbitId.HIGH_SHORT, OrbitId.MIXED),
    (OrbitId.LONG_SIMPLE, OrbitId.MIXED),
    (OrbitId.SHORT_SIMPLE, OrbitId.REGULAR),
    (OrbitId.MIXED, OrbitId.REGULAR),
)


def catalog() -> list[OrbitDescriptor]:
    """All seven descriptors, in order of increasing dimension."""
    return list(_CATALOG)


def descriptor(orbit: OrbitId) -> OrbitDescriptor:
    return _BY_ID[OrbitId(orbit)]


def catalog_json(indent: Optional[int] = 2) -> str:
    return json.dumps([d.to_dict() for d in _CATALOG], indent=indent, ensure_ascii=False)


def classify(v: NilradicalPoint) -> OrbitId:
    a1, a2, a3, a4 = v
    if a1 and a2:
        return OrbitId.REGULAR
    if a2:
        return OrbitId.SHORT_SIMPLE
    if a1:
        return OrbitId.MIXED if quadric(v) else OrbitId.LONG_SIMPLE
    if a3:
        return OrbitId.HIGH_SHORT
    if a4:
        return OrbitId.HIGH_ROOT
    return OrbitId.ZERO


@lru_cache(maxsize=None)
def _down_sets() -> dict:
    below = {o: {o} for o in OrbitId}
    changed = True
    while changed:
        changed = False
        for lo, hi in COVERS:
            new = below[lo] - below[hi]
            if new:
                below[hi] |= new
                changed = True
    return {o: frozenset(s) for o, s in below.items()}


def closure_leq(a: OrbitId, b: OrbitId) -> bool:
    """Whether orbit ``a`` lies in the closure of orbit ``b``."""
    return OrbitId(a) in _down_sets()[OrbitId(b)]


def hasse_edges() -> list[tuple[OrbitId, OrbitId]]:
    """Cover pairs oriented (larger, smaller), i.e. in the closure direction."""
    return [(hi, lo) for lo, hi in COVERS]


def hasse_dot() -> str:
    lines = ["digraph closure_order {", "  rankdir=TB;"]
    for d in _CATALOG:
        lines.append(f'  {d.id.value} [label="{d.id.value} (dim {d.dim})"];')
    for hi, lo in hasse_edges():
        lines.append(f"  {hi.value} -> {lo.value};")
    lines.append("}")
    return "\n".join(lines)


class NotInOrbitError(ValueError):
    pass


def transporter(orbit: OrbitId, target: NilradicalPoint) -> Optional[BorelWord]:
    """A word carrying the representative of ``orbit`` to ``target``.

    Returns None for ``MIXED`` when (Q(target)/2) has no square root in the
    ground field; in that case no such word exists over that field.
    """
    orbit = OrbitId(orbit)
    if classify(target) is not orbit:
        raise NotInOrbitError(f"{target} is not in the {orbit} class")
    F = target.field
    a1, a2, a3, a4 = target
    if orbit is OrbitId.ZERO:
        return BorelWord.identity(F)
    if orbit is OrbitId.HIGH_ROOT:
        return BorelWord(F.one, a4)
    if orbit is OrbitId.HIGH_SHORT:
        return BorelWord(a3, F.one, ((RootLabel.A2, a4 / a3),))
    if orbit is OrbitId.SHORT_SIMPLE:
        return BorelWord(F.one, a2, ((RootLabel.A1, a3), (RootLabel.A12, -a4 / a2)))
    if orbit is OrbitId.LONG_SIMPLE:
        return BorelWord(a1, F.one, ((RootLabel.A2, -a3 / a1),))
    if orbit is OrbitId.MIXED:
        sigma = (quadric(target) / 2).sqrt_witness()
        if sigma is None:
            return None
        return BorelWord(sigma, sigma / a1, ((RootLabel.A2, -a3 / sigma),))
    # REGULAR
    return BorelWord(
        a1 * a2,
        a2,
        (
            (RootLabel.A1, a3 / (a1 * a2)),
            (RootLabel.A2, F.zero),
            (RootLabel.A12, -a4 / (a1 * a2 * a2)),
        ),
    )


def transport(orbit: OrbitId, target: NilradicalPoint) -> Optional[NilradicalPoint]:
    """Apply the transporter to the representative (None when it does not exist)."""
    w = transporter(orbit, target)
    if w is None:
        return None
    return apply_word(w, descriptor(orbit).representative(target.field))
