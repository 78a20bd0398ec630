"""Exact arithmetic in the cyclotomic field Q(zeta_8).

An element is ``c0 + c1*z + c2*z^2 + c3*z^3`` with ``z = exp(i*pi/4)`` and
``z^4 = -1``.  Internally the four rational coefficients share one positive
denominator, so the normal form is a tuple of four integers plus that
denominator with overall gcd 1.  Values are immutable and hashable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from .errors import NotRational

Rational = Fraction

__all__ = ["Cyclo8", "Rational", "ZETA", "I", "SQRT2", "INV_SQRT2", "as_rational"]


def _normalize(c0: int, c1: int, c2: int, c3: int, d: int):
    if d < 0:
        c0, c1, c2, c3, d = -c0, -c1, -c2, -c3, -d
    g = gcd(gcd(gcd(c0, c1), gcd(c2, c3)), d)
    if g > 1:
        c0 //= g
        c1 //= g
        c2 //= g
        c3 //= g
        d //= g
    return (c0, c1, c2, c3), d


class Cyclo8:
    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fs = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = 1
        for f in fs:
            d = d * f.denominator // gcd(d, f.denominator)
        nums = [f.numerator * (d // f.denominator) for f in fs]
        self._c, self._d = _normalize(*nums, d)
        self._hash = None

    @classmethod
    def from_ints(cls, c, d: int = 1) -> Cyclo8:
        """Build from integer numerators ``c`` (length 4) over a common denominator."""
        obj = cls.__new__(cls)
        obj._c, obj._d = _normalize(int(c[0]), int(c[1]), int(c[2]), int(c[3]), int(d))
        obj._hash = None
        return obj

    @classmethod
    def zeta_power(cls, k: int) -> Cyclo8:
        k %= 8
        c = [0, 0, 0, 0]
        c[k % 4] = -1 if k >= 4 else 1
        return cls.from_ints(c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclo8):
            return other
        if isinstance(other, (int, _RationalABC)):
            f = Fraction(other)
            return Cyclo8.from_ints((f.numerator, 0, 0, 0), f.denominator)
        return None

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return self._c

    @property
    def denominator(self) -> int:
        return self._d

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(c, self._d) for c in self._c)

    c0 = property(lambda self: Fraction(self._c[0], self._d))
    c1 = property(lambda self: Fraction(self._c[1], self._d))
    c2 = property(lambda self: Fraction(self._c[2], self._d))
    c3 = property(lambda self: Fraction(self._c[3], self._d))

    def is_zero(self) -> bool:
        return not any(self._c)

    def __bool__(self) -> bool:
        return any(self._c)

    def is_rational(self) -> bool:
        return not (self._c[1] or self._c[2] or self._c[3])

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c and self._d == o._d

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) / hash(int) for rational values
                self._hash = hash(Fraction(self._c[0], self._d))
            else:
                self._hash = hash((self._c, self._d))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, da = self._c, self._d
        b, db = o._c, o._d
        if da == db:
            return Cyclo8.from_ints([x + y for x, y in zip(a, b)], da)
        return Cyclo8.from_ints([x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self):
        obj = Cyclo8.__new__(Cyclo8)
        obj._c = tuple(-x for x in self._c)
        obj._d = self._d
        obj._hash = None
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self._c
        b0, b1, b2, b3 = o._c
        # negacyclic convolution, z^4 = -1
        return Cyclo8.from_ints(
            (
                a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            ),
            self._d * o._d,
        )

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> Cyclo8:
        """Multiply by z^k by rotating coefficients."""
        k %= 8
        c = list(self._c)
        for _ in range(k):
            c = [-c[3], c[0], c[1], c[2]]
        return Cyclo8.from_ints(c, self._d)

    def galois(self, k: int) -> Cyclo8:
        """Apply the automorphism z -> z^k for odd k."""
        if k % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        out = [0, 0, 0, 0]
        for j, c in enumerate(self._c):
            e = (j * k) % 8
            if e >= 4:
                out[e - 4] -= c
            else:
                out[e] += c
        return Cyclo8.from_ints(out, self._d)

    def conj(self) -> Cyclo8:
        return self.galois(7)

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of all four Galois conjugates."""
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        return as_rational(p)

    def inverse(self) -> Cyclo8:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        rest = self.galois(3) * self.galois(5) * self.galois(7)
        n = as_rational(self * rest)
        return rest * (1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            if o.is_zero():
                raise ZeroDivisionError("division by zero in Q(zeta_8)")
            f = Fraction(o._c[0], o._d)
            return Cyclo8.from_ints(
                [c * f.denominator for c in self._c], self._d * f.numerator
            )
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"Cyclo8({self})"

    def __str__(self) -> str:
        a0, a1, a2, a3 = self.coeffs
        return f"{a0} + {a1}*z + {a2}*z^2 + {a3}*z^3"

    def short_str(self) -> str:
        """The rational value alone when rational, else the full parenthesized form."""
        if self.is_rational():
            return str(self.c0)
        return f"({self})"

    @classmethod
    def parse(cls, text: str) -> Cyclo8:
        m = _PARSE_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"cannot parse Q(zeta_8) element: {text!r}")
        return cls(*(Fraction(g) for g in m.groups()))


_RAT = r"(-?\d+(?:/\d+)?)"
_PARSE_RE = re.compile(
    rf"{_RAT}\s*\+\s*{_RAT}\*z\s*\+\s*{_RAT}\*z\^2\s*\+\s*{_RAT}\*z\^3"
)


def as_rational(x) -> Fraction:
    """Return ``x`` as a Fraction; raise NotRational if it has irrational parts."""
    if isinstance(x, Cyclo8):
        if not x.is_rational():
            raise NotRational(f"{x} is not rational")
        return Fraction(x.numerators[0], x.denominator)
    return Fraction(x)


ZERO = Cyclo8()
ONE = Cyclo8(1)
ZETA = Cyclo8(0, 1)
I = Cyclo8(0, 0, 1)
SQRT2 = Cyclo8(0, 1, 0, -1)
INV_SQRT2 = Cyclo8(0, Fraction(1, 2), 0, Fraction(-1, 2))
