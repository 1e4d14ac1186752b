"""Exact quadratic surds (a + b*sqrt(r)) / c."""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering


def _squarefree_split(r: int) -> tuple[int, int]:
    """Return (s, k) with r == s*s*k and k square-free."""
    s, k = 1, r
    p = 2
    while p * p <= k:
        while k % (p * p) == 0:
            k //= p * p
            s *= p
        p += 1
    return s, k


@total_ordering
class Surd:
    """Normalized value (a + b*sqrt(r)) / c with square-free r, c > 0 and gcd(a, b, c) = 1.

    Rationals are stored with b = r = 0.
    """

    __slots__ = ("a", "b", "r", "c")

    def __init__(self, a: int, b: int = 0, r: int = 0, c: int = 1):
        a, b, r, c = int(a), int(b), int(r), int(c)
        if c == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if r < 0:
            raise ValueError("radicand must be nonnegative")
        if b == 0 or r == 0:
            b = r = 0
        else:
            s, r = _squarefree_split(r)
            b *= s
            if r == 1:
                a, b, r = a + b, 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        self.a, self.b, self.r, self.c = a, b, r, c

    @classmethod
    def coerce(cls, x) -> Surd:
        if isinstance(x, Surd):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator, 0, 0, x.denominator)
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot make an exact surd from {type(x).__name__}")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.c == 1

    def conjugate(self) -> Surd:
        return Surd(self.a, -self.b, self.r, self.c)

    def _radicand_with(self, other: Surd) -> int:
        if self.r and other.r and self.r != other.r:
            raise ValueError(f"surds over sqrt({self.r}) and sqrt({other.r}) do not combine")
        return self.r or other.r

    def __add__(self, other) -> Surd:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._radicand_with(o)
        return Surd(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c, r, self.c * o.c)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.a, -self.b, self.r, self.c)

    def __sub__(self, other) -> Surd:
        try:
            return self + (-Surd.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> Surd:
        return (-self) + other

    def __mul__(self, other) -> Surd:
        try:
            o = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._radicand_with(o)
        return Surd(
            self.a * o.a + self.b * o.b * r,
            self.a * o.b + self.b * o.a,
            r,
            self.c * o.c,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of the value."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 r
        big = self.a * self.a - self.b * self.b * self.r
        return sa if big > 0 else (-sa if big < 0 else 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd.coerce(other)
        if not isinstance(other, Surd):
            return NotImplemented
        return (self.a, self.b, self.r, self.c) == (other.a, other.b, other.r, other.c)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.r, self.c))

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd.coerce(other)
        if not isinstance(other, Surd):
            return NotImplemented
        if not self.r or not other.r or self.r == other.r:
            return (self - other).sign() < 0
        return self.to_decimal() < other.to_decimal()

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            return (Decimal(self.a) + Decimal(self.b) * Decimal(self.r).sqrt()) / Decimal(self.c)

    def __float__(self) -> float:
        if self.b == 0:
            return self.a / self.c
        return float(self.to_decimal())

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "r": self.r, "c": self.c}

    @classmethod
    def from_dict(cls, d: dict) -> Surd:
        return cls(d["a"], d.get("b", 0), d.get("r", 0), d.get("c", 1))

    def __repr__(self) -> str:
        return f"Surd({self.a}, {self.b}, {self.r}, {self.c})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        rad = f"sqrt({self.r})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.r})"
        if self.a == 0:
            num = ("-" if self.b < 0 else "") + rad
        else:
            num = f"{self.a} {'-' if self.b < 0 else '+'} {rad}"
        if self.c == 1:
            return num
        return f"({num})/{self.c}"


def quadratic_roots(p: int, q: int) -> tuple[Surd, Surd]:
    """Roots of x^2 - p x - q = 0 as (larger, smaller)."""
    disc = p * p + 4 * q
    if disc < 0:
        raise ValueError("complex roots")
    return Surd(p, 1, disc, 2), Surd(p, -1, disc, 2)
