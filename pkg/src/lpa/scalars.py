"""Exact coefficient rings: the integers, the rationals and Z/nZ."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """A commutative unital ring. ``kind`` is ``"int"``, ``"rat"`` or ``"mod"``."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind not in ("int", "rat", "mod"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "mod" and self.modulus < 2:
            raise ValueError("IntegersMod(n) requires n >= 2")
        if self.kind != "mod" and self.modulus != 0:
            raise ValueError("modulus only applies to IntegersMod")

    @classmethod
    def parse(cls, text: str) -> Ring:
        """Parse a ``--ring`` selector: ``int``, ``rat`` or ``mod:<n>``."""
        text = text.strip()
        if text in ("int", "rat"):
            return cls(text)
        if text.startswith("mod:"):
            try:
                n = int(text[4:])
            except ValueError:
                raise ValueError(f"bad modulus in ring selector {text!r}") from None
            return cls("mod", n)
        raise ValueError(f"unknown ring selector {text!r}")

    def __str__(self):
        if self.kind == "int":
            return "Z"
        if self.kind == "rat":
            return "Q"
        return f"Z/{self.modulus}"

    @property
    def selector(self) -> str:
        return f"mod:{self.modulus}" if self.kind == "mod" else self.kind

    def _reduce(self, value):
        if self.kind == "int":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                value = value.numerator
            return int(value)
        if self.kind == "rat":
            return Fraction(value)
        if isinstance(value, Fraction):
            # p/q is meaningful mod n exactly when q is a unit
            inv = pow(value.denominator, -1, self.modulus)
            return value.numerator * inv % self.modulus
        return int(value) % self.modulus

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value} is in {value.ring}, not {self}")
            return value
        return Scalar(self, self._reduce(value))

    def zero(self) -> Scalar:
        return Scalar(self, self._reduce(0))

    def one(self) -> Scalar:
        return Scalar(self, self._reduce(1))

    def elements(self):
        """All elements, for finite rings only."""
        if self.kind != "mod":
            raise ValueError(f"{self} is infinite")
        return [Scalar(self, i) for i in range(self.modulus)]

    def nonzero_probes(self) -> list[Scalar]:
        """Scalars r for which r*v must be checked nonzero.

        Over Z/n every nonzero residue matters (zero divisors); over the
        torsion-free rings r = 1 suffices.
        """
        if self.kind == "mod":
            return [Scalar(self, i) for i in range(1, self.modulus)]
        return [self.one()]

    def conjugate(self, a: Scalar) -> Scalar:
        # identity involution
        return a


Integers = Ring("int")
Rationals = Ring("rat")


def IntegersMod(n: int) -> Ring:
    return Ring("mod", n)


class Scalar:
    """An immutable exact ring element."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def _wrap(self, value) -> Scalar:
        if self.ring.kind == "mod":
            value %= self.ring.modulus
        return Scalar(self.ring, value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ring._reduce(other)
            except (ValueError, ZeroDivisionError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"Scalar({self.ring}, {self})"

    def __str__(self):
        return str(self.value)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    if a.ring != b.ring:
        raise RingMismatch(f"cannot add {a.ring} and {b.ring}")
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    if a.ring != b.ring:
        raise RingMismatch(f"cannot multiply {a.ring} and {b.ring}")
    return a * b
