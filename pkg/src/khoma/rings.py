"""Exact coefficient rings: Q, Z and Z/p.

Rings are runtime parameters.  Elements are plain Python objects
(Fraction, int, or int reduced mod p) so arbitrary-precision arithmetic
comes for free; the ring object supplies the operations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedToken


class CoefficientRing:
    """Common interface; concrete rings below."""

    tag: str
    is_field = False

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def inverse(self, a):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientRing) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return f"<ring {self.tag}>"


class Rationals(CoefficientRing):
    tag = "Q"
    is_field = True

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value) -> Fraction:
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def inverse(self, a: Fraction) -> Fraction:
        return 1 / a


class Integers(CoefficientRing):
    tag = "Z"

    def from_int(self, n: int) -> int:
        return n

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, str):
            return int(value)
        raise TypeError(f"cannot coerce {value!r} into Z")


class IntegersMod(CoefficientRing):
    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise MalformedToken(f"modulus {p} is not prime")
        self.p = p
        self.tag = f"Z/{p}"

    def from_int(self, n: int) -> int:
        return n % self.p

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator not invertible mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        if isinstance(value, str):
            return int(value) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.tag}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inverse(self, a):
        return pow(a, -1, self.p)


QQ = Rationals()
ZZ = Integers()


def ring_from_tag(tag: str) -> CoefficientRing:
    """Parse a CLI ring flag: Q, Z, or Zp:<p> (also accepts Z/<p>)."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag == "Z":
        return ZZ
    for prefix in ("Zp:", "Z/"):
        if tag.startswith(prefix):
            return IntegersMod(int(tag[len(prefix):]))
    raise MalformedToken(f"unknown ring {tag!r}")
