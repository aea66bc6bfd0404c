"""
so_5 in the basis used throughout: torus, positive root vectors, root groups.

The torus is T(s, t) = diag(1, s, t, 1/s, 1/t) and the four positive root
vectors of type B2 are

    x_a1   = e23 - e54        (long simple root)
    x_a2   = e15 - e31        (short simple root)
    x_a12  = e14 - e21        (high short root)
    x_a122 = e25 - e34        (highest root)

with e_ij the matrix unit (1-based, as in the usual notation).  The Borel
subgroup B is generated by the torus and the root groups U_g(r) = exp(r x_g);
it acts on the nilradical n = span(x_a1, x_a2, x_a12, x_a122) by conjugation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .fields import QQ, Field, FieldMismatchError, FieldScalar


class NotInNilradicalError(ValueError):
    """Matrix is not in the span of the four positive root vectors."""


class SingularMatrixError(ValueError):
    pass


class RootLabel(enum.Enum):
    """Positive roots of B2, in coordinate order."""

    A1 = "a1"
    A2 = "a2"
    A12 = "a12"
    A122 = "a122"

    @property
    def coefficients(self) -> tuple[int, int]:
        """Coefficients (m, n) of the root m*alpha1 + n*alpha2."""
        return _ROOT_COEFFS[self]

    @property
    def index(self) -> int:
        return ORDERED_ROOTS.index(self)

    @classmethod
    def from_coefficients(cls, coeffs) -> "RootLabel | None":
        for label, c in _ROOT_COEFFS.items():
            if c == tuple(coeffs):
                return label
        return None


ORDERED_ROOTS = (RootLabel.A1, RootLabel.A2, RootLabel.A12, RootLabel.A122)

_ROOT_COEFFS = {
    RootLabel.A1: (1, 0),
    RootLabel.A2: (0, 1),
    RootLabel.A12: (1, 1),
    RootLabel.A122: (1, 2),
}

# 0-based (row, col, sign) of the two nonzero entries of each root vector
_ROOT_SUPPORT = {
    RootLabel.A1: ((1, 2, 1), (4, 3, -1)),
    RootLabel.A2: ((0, 4, 1), (2, 0, -1)),
    RootLabel.A12: ((0, 3, 1), (1, 0, -1)),
    RootLabel.A122: ((1, 4, 1), (2, 3, -1)),
}


class Matrix5:
    """Dense 5x5 matrix over a single field; immutable.

    Entries are held as raw field values (``Fraction`` or ``int``) in a flat
    row-major tuple.  Indexing with ``m[i, j]`` is 0-based and returns a
    :class:`FieldScalar`.
    """

    __slots__ = ("field", "_e")

    def __init__(self, field: Field, raw_entries: Iterable):
        e = tuple(raw_entries)
        if len(e) != 25:
            raise ValueError("Matrix5 needs 25 entries")
        self.field = field
        self._e = e

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> "Matrix5":
        if len(rows) != 5 or any(len(r) != 5 for r in rows):
            raise ValueError("expected a 5x5 array")
        return cls(field, (field(x).value for row in rows for x in row))

    @classmethod
    def zero(cls, field: Field = QQ) -> "Matrix5":
        return cls(field, [field.zero_raw] * 25)

    @classmethod
    def identity(cls, field: Field = QQ) -> "Matrix5":
        z, o = field.zero_raw, field.one_raw
        return cls(field, [o if i % 6 == 0 else z for i in range(25)])

    @classmethod
    def diag(cls, values: Sequence, field: Field = QQ) -> "Matrix5":
        e = [field.zero_raw] * 25
        for i, v in enumerate(values):
            e[6 * i] = field(v).value
        return cls(field, e)

    @classmethod
    def unit(cls, i: int, j: int, field: Field = QQ) -> "Matrix5":
        """The matrix unit e_ij, 1-based indices."""
        e = [field.zero_raw] * 25
        e[5 * (i - 1) + (j - 1)] = field.one_raw
        return cls(field, e)

    def __getitem__(self, ij) -> FieldScalar:
        i, j = ij
        return FieldScalar(self.field, self._e[5 * i + j])

    def rows(self) -> list[list[FieldScalar]]:
        return [[self[i, j] for j in range(5)] for i in range(5)]

    def raw(self, i: int, j: int):
        return self._e[5 * i + j]

    def _check(self, other: "Matrix5"):
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field} and {other.field} do not mix")

    def __add__(self, other: "Matrix5") -> "Matrix5":
        self._check(other)
        F = self.field
        return Matrix5(F, (F.add(a, b) if a and b else (a or b) for a, b in zip(self._e, other._e)))

    def __sub__(self, other: "Matrix5") -> "Matrix5":
        self._check(other)
        F = self.field
        return Matrix5(F, (F.sub(a, b) for a, b in zip(self._e, other._e)))

    def __neg__(self) -> "Matrix5":
        F = self.field
        return Matrix5(F, (F.neg(a) for a in self._e))

    def scale(self, c) -> "Matrix5":
        F = self.field
        c = F(c).value
        return Matrix5(F, (F.mul(c, a) for a in self._e))

    def __rmul__(self, c) -> "Matrix5":
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Matrix5):
            return self.scale(other)
        self._check(other)
        F = self.field
        A, B = self._e, other._e
        out = [F.zero_raw] * 25
        for i in range(5):
            for k in range(5):
                a = A[5 * i + k]
                if not a:
                    continue
                for j in range(5):
                    b = B[5 * k + j]
                    if b:
                        out[5 * i + j] = F.add(out[5 * i + j], F.mul(a, b))
        return Matrix5(F, out)

    __matmul__ = __mul__

    def transpose(self) -> "Matrix5":
        e = self._e
        return Matrix5(self.field, (e[5 * j + i] for i in range(5) for j in range(5)))

    @property
    def T(self) -> "Matrix5":
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(self._e)

    def det(self) -> FieldScalar:
        F = self.field
        m = [list(self._e[5 * i:5 * i + 5]) for i in range(5)]
        d = F.one_raw
        for c in range(5):
            piv = next((r for r in range(c, 5) if m[r][c]), None)
            if piv is None:
                return F.zero
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = F.neg(d)
            d = F.mul(d, m[c][c])
            inv = F.inv(m[c][c])
            for r in range(c + 1, 5):
                if m[r][c]:
                    f = F.mul(m[r][c], inv)
                    m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[c])]
        return FieldScalar(F, d)

    def inverse(self) -> "Matrix5":
        F = self.field
        m = [list(self._e[5 * i:5 * i + 5]) + [F.one_raw if j == i else F.zero_raw for j in range(5)]
             for i in range(5)]
        for c in range(5):
            piv = next((r for r in range(c, 5) if m[r][c]), None)
            if piv is None:
                raise SingularMatrixError("matrix is not invertible")
            m[c], m[piv] = m[piv], m[c]
            inv = F.inv(m[c][c])
            m[c] = [F.mul(inv, x) for x in m[c]]
            for r in range(5):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[c])]
        return Matrix5(F, (x for row in m for x in row[5:]))

    def __eq__(self, other):
        if not isinstance(other, Matrix5):
            return NotImplemented
        return self.field is other.field and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        F = self.field
        body = "; ".join(" ".join(F.format(self._e[5 * i + j]) for j in range(5)) for i in range(5))
        return f"Matrix5({F!r}, [{body}])"


@dataclass(frozen=True)
class NilradicalPoint:
    """Coordinates (a1, a2, a3, a4) of a1 x_a1 + a2 x_a2 + a3 x_a12 + a4 x_a122."""

    a1: FieldScalar
    a2: FieldScalar
    a3: FieldScalar
    a4: FieldScalar

    def __post_init__(self):
        f = self.a1.field
        if any(c.field is not f for c in (self.a2, self.a3, self.a4)):
            raise FieldMismatchError("coordinates of a point must share a field")

    @classmethod
    def of(cls, field: Field, *values) -> "NilradicalPoint":
        if len(values) == 1:
            values = tuple(values[0])
        if len(values) != 4:
            raise ValueError("a point of n has four coordinates")
        return cls(*(field(v) for v in values))

    @classmethod
    def zero(cls, field: Field = QQ) -> "NilradicalPoint":
        return cls.of(field, 0, 0, 0, 0)

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "NilradicalPoint":
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = [s for s in body.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated coordinates, got {text!r}")
        return cls(*(field.parse(s) for s in parts))

    @property
    def field(self) -> Field:
        return self.a1.field

    def __iter__(self) -> Iterator[FieldScalar]:
        return iter((self.a1, self.a2, self.a3, self.a4))

    def __getitem__(self, i: int) -> FieldScalar:
        return (self.a1, self.a2, self.a3, self.a4)[i]

    def raw(self) -> tuple:
        return tuple(c.value for c in self)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self) + ")"


@dataclass(frozen=True)
class BorelWord:
    """T(s, t) * U_g1(r1) * U_g2(r2) * ... with the factors in the listed order."""

    s: FieldScalar
    t: FieldScalar
    factors: tuple[tuple[RootLabel, FieldScalar], ...] = ()

    def __post_init__(self):
        if not self.s or not self.t:
            raise ValueError("torus parameters must be nonzero")
        f = self.s.field
        if self.t.field is not f or any(r.field is not f for _, r in self.factors):
            raise FieldMismatchError("all parameters of a word must share a field")
        object.__setattr__(self, "factors", tuple((RootLabel(g), r) for g, r in self.factors))

    @classmethod
    def build(cls, field: Field, s=1, t=1, factors=()) -> "BorelWord":
        return cls(field(s), field(t), tuple((RootLabel(g), field(r)) for g, r in factors))

    @classmethod
    def identity(cls, field: Field = QQ) -> "BorelWord":
        return cls(field.one, field.one)

    @property
    def field(self) -> Field:
        return self.s.field

    def matrix(self) -> Matrix5:
        g = torus_element(self.s, self.t)
        for gamma, r in self.factors:
            g = g * root_group_element(gamma, r)
        return g

    def inverse_matrix(self) -> Matrix5:
        g = torus_element(self.s.invert(), self.t.invert())
        for gamma, r in self.factors:
            g = root_group_element(gamma, -r) * g
        return g

    def __str__(self):
        parts = [f"T({self.s},{self.t})"]
        parts += [f"U_{g.value}({r})" for g, r in self.factors]
        return ";".join(parts)

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "BorelWord":
        pieces = [p.strip() for p in text.strip().split(";") if p.strip()]
        if not pieces or not (pieces[0].startswith("T(") and pieces[0].endswith(")")):
            raise ValueError(f"word must start with T(s,t): {text!r}")
        s, t = pieces[0][2:-1].split(",")
        factors = []
        for p in pieces[1:]:
            if not (p.startswith("U_") and p.endswith(")") and "(" in p):
                raise ValueError(f"bad root-group factor {p!r}")
            name, _, arg = p[2:-1].partition("(")
            factors.append((RootLabel(name), field.parse(arg)))
        return cls(field.parse(s), field.parse(t), tuple(factors))


def root_vector(gamma: RootLabel, field: Field = QQ) -> Matrix5:
    e = [field.zero_raw] * 25
    for i, j, sign in _ROOT_SUPPORT[RootLabel(gamma)]:
        e[5 * i + j] = field.coerce(sign)
    return Matrix5(field, e)


def torus_element(s: FieldScalar, t: FieldScalar) -> Matrix5:
    """diag(1, s, t, 1/s, 1/t)."""
    if not s or not t:
        raise ValueError("torus parameters must be nonzero")
    F = s.field
    return Matrix5.diag([F.one, s, t, s.invert(), t.invert()], F)


def _square_support(gamma: RootLabel) -> tuple:
    """Nonzero entries (i, j, coeff) of x_gamma^2, from integer arithmetic."""
    sup = _ROOT_SUPPORT[gamma]
    out = {}
    for i, k, a in sup:
        for k2, j, b in sup:
            if k == k2:
                out[i, j] = out.get((i, j), 0) + a * b
    return tuple((i, j, c) for (i, j), c in sorted(out.items()) if c)


_ROOT_SQUARE = {g: _square_support(g) for g in RootLabel}


def root_group_element(gamma: RootLabel, r: FieldScalar) -> Matrix5:
    """exp(r x_gamma) = I + r x + (r^2/2) x^2; x^3 = 0 for every root vector."""
    F = r.field
    gamma = RootLabel(gamma)
    e = list(Matrix5.identity(F)._e)
    rv = r.value
    half_r2 = F.mul(F.mul(rv, rv), F.inv(F.coerce(2)))
    # supports of x and x^2 are disjoint from each other and from the diagonal
    for i, j, sign in _ROOT_SUPPORT[gamma]:
        e[5 * i + j] = rv if sign > 0 else F.neg(rv)
    for i, j, c in _ROOT_SQUARE[gamma]:
        e[5 * i + j] = F.mul(F.coerce(c), half_r2)
    return Matrix5(F, e)


def bracket(x: Matrix5, y: Matrix5) -> Matrix5:
    return x * y - y * x


def adjoint(g: Matrix5, x: Matrix5) -> Matrix5:
    """g x g^-1."""
    return g * x * g.inverse()


def from_coordinates(v: NilradicalPoint) -> Matrix5:
    F = v.field
    e = [F.zero_raw] * 25
    for gamma, a in zip(ORDERED_ROOTS, v):
        for i, j, sign in _ROOT_SUPPORT[gamma]:
            e[5 * i + j] = a.value if sign > 0 else F.neg(a.value)
    return Matrix5(F, e)


def coordinates(x: Matrix5) -> NilradicalPoint:
    F = x.field
    coords = []
    seen = set()
    for gamma in ORDERED_ROOTS:
        (i, j, _), (k, l, _) = _ROOT_SUPPORT[gamma]
        a = x.raw(i, j)
        if x.raw(k, l) != F.neg(a):
            raise NotInNilradicalError(f"entries for {gamma.value} are not of the form a, -a")
        coords.append(FieldScalar(F, a))
        seen.update({(i, j), (k, l)})
    for i in range(5):
        for j in range(5):
            if (i, j) not in seen and x.raw(i, j):
                raise NotInNilradicalError(f"nonzero entry at ({i + 1},{j + 1}) lies outside n")
    return NilradicalPoint(*coords)


def apply_word(w: BorelWord, v: NilradicalPoint) -> NilradicalPoint:
    if w.field is not v.field:
        raise FieldMismatchError("word and point live over different fields")
    x = from_coordinates(v)
    y = w.matrix() * x * w.inverse_matrix()
    try:
        return coordinates(y)
    except NotInNilradicalError as exc:  # B normalizes n; reaching this is a bug
        raise AssertionError(f"{w} moved {v} out of n") from exc


@lru_cache(maxsize=None)
def invariant_form(field: Field = QQ) -> Matrix5:
    """J = e11 + e24 + e42 + e35 + e53, the symmetric form preserved by SO_5."""
    J = Matrix5.zero(field)
    for i, j in ((1, 1), (2, 4), (4, 2), (3, 5), (5, 3)):
        J = J + Matrix5.unit(i, j, field)
    return J


def is_in_so5(x: Matrix5) -> bool:
    J = invariant_form(x.field)
    return (x.T * J + J * x).is_zero()


def is_in_SO5(g: Matrix5) -> bool:
    J = invariant_form(g.field)
    return g.T * J * g == J and g.det() == 1


def cartan_basis(field: Field = QQ) -> tuple[Matrix5, Matrix5]:
    """Derivatives of T(s, t) at the identity in s and in t."""
    return (Matrix5.diag([0, 1, 0, -1, 0], field), Matrix5.diag([0, 0, 1, 0, -1], field))


def borel_basis(field: Field = QQ) -> list[Matrix5]:
    return list(cartan_basis(field)) + [root_vector(g, field) for g in ORDERED_ROOTS]


def rank(rows: Sequence[Sequence[FieldScalar]]) -> int:
    """Row rank by Gaussian elimination; exact."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def centralizer_dimension(v: NilradicalPoint) -> int:
    """dim { y in b : [y, v] = 0 }, as 6 - rank of y -> [y, v]."""
    if v.field is not QQ:
        raise ValueError("centralizer_dimension is defined over Q only")
    x = from_coordinates(v)
    images = [list(coordinates(bracket(y, x))) for y in borel_basis(QQ)]
    return 6 - rank(images)
