"""
Brute-force B(F_p)-orbits on F_p^4.

The generators are T(g,1), T(1,g), their inverses, and U_gamma(+-1) for the
four positive roots, with g a generator of F_p^*.  Each is turned into the
4x4 matrix of its adjoint action on n by pushing basis vectors through
:func:`orbitkit.lie.apply_word`; the orbit search itself never looks at the
classifier.  The classifier is applied afterwards, point by point, to check
that every orbit lies inside one class.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..fields import GF, PrimeField
from ..lie import ORDERED_ROOTS, BorelWord, NilradicalPoint, apply_word
from ..orbits import OrbitId, classify
from . import _kernels

MAX_PRIME = 13


@dataclass(frozen=True)
class OrbitRecord:
    size: int
    classifier_class: OrbitId
    representative: NilradicalPoint

    def to_dict(self) -> dict:
        return {"size": self.size, "class": self.classifier_class.value, "representative": str(self.representative)}


@dataclass
class OrbitCensus:
    prime: int
    orbit_count: int
    orbits: list[OrbitRecord]
    class_sizes: dict[OrbitId, int]
    # orbits meeting more than one classifier class; empty unless something is broken
    straddling: list[int] = field(default_factory=list)

    @property
    def group_order(self) -> int:
        p = self.prime
        return (p - 1) ** 2 * p**4

    def orbits_in(self, orbit: OrbitId) -> list[OrbitRecord]:
        return [o for o in self.orbits if o.classifier_class is orbit]

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "orbit_count": self.orbit_count,
            "class_sizes": {o.value: self.class_sizes.get(o, 0) for o in OrbitId},
            "orbits": [o.to_dict() for o in self.orbits],
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def generators(F: PrimeField) -> list[BorelWord]:
    g = F.generator()
    h = g.invert()
    one = F.one
    words = [BorelWord(g, one), BorelWord(one, g), BorelWord(h, one), BorelWord(one, h)]
    for gamma in ORDERED_ROOTS:
        words.append(BorelWord(one, one, ((gamma, one),)))
        words.append(BorelWord(one, one, ((gamma, -one),)))
    return words


def action_matrix(w: BorelWord) -> np.ndarray:
    """The 4x4 integer matrix of Ad(w) on n, columns = images of basis vectors."""
    F = w.field
    cols = []
    for j in range(4):
        e = NilradicalPoint.of(F, *[1 if k == j else 0 for k in range(4)])
        cols.append(apply_word(w, e).raw())
    return np.array(cols, dtype=np.int64).T


def closed_form_sizes(q: int) -> dict[OrbitId, int]:
    """Number of F_q-points satisfying each class's equations."""
    return {
        OrbitId.ZERO: 1,
        OrbitId.HIGH_ROOT: q - 1,
        OrbitId.HIGH_SHORT: q * (q - 1),
        OrbitId.LONG_SIMPLE: q * (q - 1),
        OrbitId.SHORT_SIMPLE: q * q * (q - 1),
        OrbitId.MIXED: q * (q - 1) ** 2,
        OrbitId.REGULAR: q * q * (q - 1) ** 2,
    }


def classify_all(p: int) -> np.ndarray:
    """Classifier output for every point, as indices into ``list(OrbitId)``."""
    F = GF(p)
    ids = list(OrbitId)
    pts = _kernels.all_points(p)
    return np.array([ids.index(classify(NilradicalPoint.of(F, *map(int, row)))) for row in pts], dtype=np.int64)


def enumerate_orbits(p: int, backend: str | None = None) -> OrbitCensus:
    if p > MAX_PRIME:
        raise ValueError(f"enumeration is capped at p <= {MAX_PRIME}")
    F = GF(p)  # rejects p = 2 and composites
    mats = np.stack([action_matrix(w) for w in generators(F)])
    perms = _kernels.permutation_table(mats, p)
    labels = _kernels.orbit_labels(perms, backend)
    classes = classify_all(p)

    ids = list(OrbitId)
    roots, sizes = np.unique(labels, return_counts=True)
    straddling = []
    orbits = []
    for root, size in zip(roots.tolist(), sizes.tolist()):
        member_classes = np.unique(classes[labels == root])
        if len(member_classes) != 1:
            straddling.append(root)
        rep = NilradicalPoint.of(F, *map(int, _kernels.decode(root, p)))
        orbits.append(OrbitRecord(size, ids[classes[root]], rep))
    orbits.sort(key=lambda o: (ids.index(o.classifier_class), -o.size, o.representative.raw()))

    counts = Counter(classes.tolist())
    class_sizes = {o: counts.get(i, 0) for i, o in enumerate(ids)}
    return OrbitCensus(p, len(orbits), orbits, class_sizes, straddling)
