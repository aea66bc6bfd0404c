"""
Exact scalars over the rationals and over prime fields F_p, p odd.

Every scalar carries the field it lives in.  Arithmetic between scalars of
different fields raises :class:`FieldMismatchError`; plain Python integers
(and, over Q, :class:`fractions.Fraction`) are coerced into the field of the
other operand.

The field objects also expose a small "raw" interface (``add``, ``mul``,
``inv`` ... acting on bare ``Fraction``/``int`` values).  Matrix code uses it
to avoid allocating a wrapper per entry.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional, Union


class FieldMismatchError(TypeError):
    """Operands belong to different fields."""


class CharacteristicTwoError(ValueError):
    """Raised when asked for F_2; the orbit formulas divide by 2."""

    def __init__(self):
        super().__init__("characteristic 2 is excluded: the orbit formulas divide by 2")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Base class for the two supported ground fields."""

    characteristic: int
    tag: str

    # --- raw arithmetic, overridden by subclasses
    def coerce(self, value) -> Union[Fraction, int]:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sqrt(self, a) -> Optional[Union[Fraction, int]]:
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def parse_raw(self, text: str):
        raise NotImplementedError

    @property
    def zero_raw(self):
        return self.coerce(0)

    @property
    def one_raw(self):
        return self.coerce(1)

    # --- wrapped interface
    def __call__(self, value) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            if value.field is not self:
                raise FieldMismatchError(f"{value!r} is not in {self}")
            return value
        return FieldScalar(self, self.coerce(value))

    def parse(self, text: str) -> "FieldScalar":
        return FieldScalar(self, self.parse_raw(text.strip()))

    @property
    def zero(self) -> "FieldScalar":
        return FieldScalar(self, self.zero_raw)

    @property
    def one(self) -> "FieldScalar":
        return FieldScalar(self, self.one_raw)


class Rationals(Field):
    characteristic = 0
    tag = "Q"

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise FieldMismatchError(f"cannot coerce {value!r} into Q")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / a

    def sqrt(self, a):
        if a < 0:
            return None
        n, d = a.numerator, a.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def format(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse_raw(self, text: str) -> Fraction:
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational: {text!r}") from None
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(n, d)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


class PrimeField(Field):
    """The field Z/pZ for an odd prime p.  Use :func:`GF` to get the cached instance."""

    def __init__(self, p: int):
        if p == 2:
            raise CharacteristicTwoError()
        if not is_prime(p):
            raise ValueError(f"{p} is not a prime")
        self.p = p
        self.characteristic = p
        self.tag = f"Fp:{p}"

    def coerce(self, value) -> int:
        if isinstance(value, bool):
            raise FieldMismatchError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        raise FieldMismatchError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def sqrt(self, a):
        # exhaustive; p is small everywhere this is used
        for r in range((self.p + 1) // 2):
            if r * r % self.p == a:
                return r
        return None

    def format(self, a) -> str:
        return str(a)

    def parse_raw(self, text: str) -> int:
        return self.coerce(QQ.parse_raw(text))

    def elements(self) -> Iterator["FieldScalar"]:
        for a in range(self.p):
            yield FieldScalar(self, a)

    def generator(self) -> "FieldScalar":
        """Smallest generator of the multiplicative group."""
        order = self.p - 1
        factors = [q for q in range(2, order + 1) if order % q == 0 and is_prime(q)]
        for g in range(2, self.p):
            if all(pow(g, order // q, self.p) != 1 for q in factors):
                return FieldScalar(self, g)
        raise AssertionError(f"no generator found mod {self.p}")

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p,))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<prime>"``."""
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return QQ
    head, sep, tail = spec.partition(":")
    if sep and head in ("Fp", "F", "GF"):
        try:
            p = int(tail)
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return GF(p)
    raise ValueError(f"unknown field spec {spec!r}; expected 'Q' or 'Fp:<prime>'")


class FieldScalar:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.field is not self.field:
                raise FieldMismatchError(f"{self.field} and {other.field} do not mix")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldScalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldScalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __rtruediv__(self, other):
        return FieldScalar(self.field, self.field.mul(self._other(other), self.field.inv(self.value)))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** -n
        result = self.field.one_raw
        for _ in range(n):
            result = self.field.mul(result, self.value)
        return FieldScalar(self.field, result)

    def invert(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def sqrt_witness(self) -> Optional["FieldScalar"]:
        r = self.field.sqrt(self.value)
        return None if r is None else FieldScalar(self.field, r)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field is other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (FieldMismatchError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)})"

    def __reduce__(self):
        return (FieldScalar, (self.field, self.value))


# functional spellings
def add(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a + b


def sub(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a - b


def mul(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    return a * b


def neg(a: FieldScalar) -> FieldScalar:
    return -a


def invert(a: FieldScalar) -> FieldScalar:
    return a.invert()


def sqrt_witness(a: FieldScalar) -> Optional[FieldScalar]:
    """A square root of ``a`` in its own field, or None if there is none."""
    return a.sqrt_witness()
