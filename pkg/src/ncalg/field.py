"""Exact coefficient fields: F_p (p an odd prime) and the rationals.

Field elements are plain Python values (``int`` canonically reduced to
[0, p) for F_p, ``fractions.Fraction`` for Q).  A field object carries the
arithmetic; polynomials and matrices store raw element values and pass the
field explicitly.  Values are immutable and freely shareable.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class FieldError(ArithmeticError):
    """Raised on invalid field operations (inverting zero, bad modulus)."""


def _is_prime(n: int) -> bool:
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


class PrimeField:
    """Arithmetic of F_p with canonical representatives in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if p == 2 or not _is_prime(p):
            raise FieldError(f"modulus must be an odd prime, got {p}")
        self.p = p

    # -- element construction ------------------------------------------
    def of(self, n) -> int:
        """Coerce an integer (or Fraction with unit denominator mod p) to F_p."""
        if isinstance(n, Fraction):
            return self.mul(self.of(n.numerator), self.inv(self.of(n.denominator)))
        return n % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise FieldError("inverse of zero in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    # -- encoding -------------------------------------------------------
    def to_str(self, a: int) -> str:
        return str(a % self.p)

    def from_str(self, s: str) -> int:
        return int(s) % self.p

    def describe(self) -> str:
        return f"p:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Rationals:
    """Exact rational arithmetic, used as a slow verification mode."""

    __slots__ = ()

    def of(self, n) -> Fraction:
        return Fraction(n)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

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
            raise FieldError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise FieldError("inverse of zero in Q")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def from_str(self, s: str) -> Fraction:
        return Fraction(s)

    def describe(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "Rationals()"


def parse_field_spec(spec: str):
    """Parse a field descriptor: ``p:<prime>`` or ``q``."""
    spec = spec.strip()
    if spec == "q":
        return Rationals()
    if spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise FieldError(f"bad field spec {spec!r} (expected 'p:<prime>' or 'q')")
