"""Exact field arithmetic over Q and prime fields GF(p).

Every scalar is canonical: rationals are stored as reduced ``Fraction``
values (coprime numerator/denominator, positive denominator), prime-field
elements as residues in ``[0, p)``.  Two scalars are equal iff their
representations are identical, so subspace equality downstream reduces to
plain tuple comparison.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "Field",
    "Scalar",
    "field_make",
    "distinct_scalars",
    "scalar_to_json",
    "scalar_from_json",
    "field_to_json",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for anything we will ever see."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # This witness set is deterministic for n < 3.3 * 10^24.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _find_factor(n: int) -> int:
    """A nontrivial factor of composite n (trial division, then Pollard rho)."""
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return p
    x, y, d = 2, 2, 1
    c = 1
    while d in (1, n):
        x, y, d = 2, 2, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        c += 1
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Field:
    """The rationals, or GF(p) for a prime modulus p."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind not in ("Q", "GF"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "GF":
            if p is None or p < 2:
                raise ValueError("prime-field modulus must be an integer >= 2")
            if not _is_prime(p):
                f = _find_factor(p)
                raise ValueError(f"{p} = {f}*{p // f} is not prime")
        else:
            p = None
        self.kind = kind
        self.p = p

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def cardinality(self) -> int | None:
        """Number of elements, or None for the infinite field Q."""
        return self.p if self.kind == "GF" else None

    def scalar(self, value) -> "Scalar":
        return Scalar(self, value)

    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def elements(self) -> Iterator["Scalar"]:
        if not self.is_finite:
            raise ValueError("cannot enumerate the rationals")
        return (Scalar(self, r) for r in range(self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return "Q" if self.kind == "Q" else f"GF({self.p})"


#: The rational field, shared default for everything downstream.
QQ = Field("Q")


class Scalar:
    """An exact element of a Field, canonical by construction."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        if isinstance(value, Scalar):
            if value.field != field:
                raise ValueError(f"scalar of {value.field} used in {field}")
            value = value.value
        if field.kind == "Q":
            self.value = value if isinstance(value, Fraction) else Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % field.p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {field.p}")
                value = value.numerator * pow(value.denominator, -1, field.p)
            self.value = value % field.p
        self.field = field

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inv(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError(f"inversion of zero in {self.field}")
        if self.field.kind == "Q":
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        if self.field.kind == "GF":
            return Scalar(self.field, pow(self.value, n, self.field.p))
        return Scalar(self.field, self.value**n)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(self.field, other)
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return str(self.value)


Descriptor = Union[Field, str, dict]


def field_make(descriptor: Descriptor) -> Field:
    """Build a Field from {"kind":"Q"}, {"kind":"GF","p":7}, "Q", or "GF:7".

    Rejects non-prime moduli with a diagnostic naming a nontrivial factor.
    """
    if isinstance(descriptor, Field):
        return descriptor
    if isinstance(descriptor, str):
        if descriptor == "Q":
            return QQ
        if descriptor.startswith("GF:"):
            return Field("GF", int(descriptor[3:]))
        raise ValueError(f"unknown field descriptor {descriptor!r}")
    if isinstance(descriptor, dict):
        kind = descriptor.get("kind")
        if kind == "Q":
            return QQ
        if kind == "GF":
            return Field("GF", int(descriptor["p"]))
    raise ValueError(f"unknown field descriptor {descriptor!r}")


def distinct_scalars(field: Field, count: int) -> list[Scalar]:
    """The first `count` elements 0, 1, 2, ... of the field, pairwise distinct.

    Deterministic by design so Vandermonde grids and fixtures reproduce.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if field.is_finite and count > field.p:
        raise ValueError(f"field has only {field.p} elements, cannot supply {count}")
    return [Scalar(field, r) for r in range(count)]


def field_to_json(field: Field) -> dict:
    if field.kind == "Q":
        return {"kind": "Q"}
    return {"kind": "GF", "p": field.p}


def scalar_to_json(s: Scalar):
    """Rationals as "num/den" strings (plain "num" when integral), residues as ints."""
    if s.field.kind == "GF":
        return s.value
    v = s.value
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def scalar_from_json(field: Field, raw) -> Scalar:
    if isinstance(raw, bool):
        raise ValueError(f"bad scalar {raw!r}")
    if isinstance(raw, int):
        return Scalar(field, raw)
    if isinstance(raw, str):
        return Scalar(field, Fraction(raw))
    raise ValueError(f"bad scalar {raw!r}")
