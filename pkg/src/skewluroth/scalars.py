"""Exact coefficient fields: Q, Q(i), Q(sqrt d) and quaternions over them.

``Fraction`` from the standard library plays the role of Q throughout.  The
other types interoperate with ``int`` and ``Fraction`` operands, so that
generic polynomial code can mix them freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

Rat = Fraction

_RATIONAL = (int, Fraction)


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree (``n > 0``)."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return s, d * n


def rat_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if it is irrational."""
    q = as_rat(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def cconj(x):
    """Complex conjugation; the identity on real scalars."""
    if isinstance(x, GaussRat):
        return x.conj()
    return x


class QuadRat:
    """Element ``a + b*sqrt(d)`` of a real quadratic field, ``d > 1`` squarefree."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if isinstance(a, QuadRat) or isinstance(b, QuadRat):
            raise TypeError("nested quadratic extensions are not supported")
        if not isinstance(d, int) or d <= 1 or squarefree_decompose(d)[0] != 1:
            raise ValueError(f"extension tag must be a squarefree integer > 1, got {d!r}")
        self.a = as_rat(a)
        self.b = as_rat(b)
        self.d = d

    @classmethod
    def sqrt(cls, q) -> "Fraction | QuadRat":
        """Positive square root of ``q > 0``, rational whenever possible."""
        q = as_rat(q)
        if q <= 0:
            raise ValueError("square root of a non-positive rational")
        r = rat_sqrt(q)
        if r is not None:
            return r
        # sqrt(n/m) = sqrt(n*m)/m
        s, d = squarefree_decompose(q.numerator * q.denominator)
        return cls(0, Fraction(s, q.denominator), d)

    def _coerce(self, other):
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise ValueError("cannot mix different quadratic extensions")
            return other
        if isinstance(other, _RATIONAL):
            return QuadRat(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def galois_conj(self) -> "QuadRat":
        return QuadRat(self.a, -self.b, self.d)

    def field_norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inv(self) -> "QuadRat":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadRat(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = QuadRat(1, 0, self.d)
        for _ in range(n):
            r = r * self
        return r

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadRat({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})" if self.b == 1 else f"{self.b}*sqrt({self.d})"
        return root if self.a == 0 else f"{self.a}+{root}"


_REAL = (int, Fraction, QuadRat)


class GaussRat:
    """Complex number ``re + im*i`` with real parts in Q (or one QuadRat layer)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat) or isinstance(im, GaussRat):
            raise TypeError("GaussRat parts must be real")
        self.re = re if isinstance(re, QuadRat) else as_rat(re)
        self.im = im if isinstance(im, QuadRat) else as_rat(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussRat):
            return other
        if isinstance(other, _REAL):
            return GaussRat(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, _REAL):
            return GaussRat(self.re * other, self.im * other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return GaussRat(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussRat":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, _REAL):
            if not other:
                raise ZeroDivisionError("division by zero")
            return GaussRat(self.re / other, self.im / other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = GaussRat(1)
        for _ in range(n):
            r = r * self
        return r

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}*i"
        if not self.re:
            return im
        sep = "" if im.startswith("-") else "+"
        return f"{self.re}{sep}{im}"


I = GaussRat(0, 1)


class Quaternion:
    """Hamilton quaternion ``a + b*i + c*j + d*k`` over a commutative field.

    Components must come from a field in which -1 is not a sum of two squares
    (Q, a real quadratic field, or a field of real rational functions), so
    that the algebra is a division ring.  Components in Q(i) are rejected.
    """

    __slots__ = ("a", "b", "c", "d")
    # central scalars accepted as operands
    _scalar_types: tuple = (int, Fraction, QuadRat)

    def __init__(self, a=0, b=0, c=0, d=0):
        comps = tuple(self._coerce_component(x) for x in (a, b, c, d))
        self.a, self.b, self.c, self.d = comps

    @classmethod
    def _coerce_component(cls, x):
        if isinstance(x, GaussRat):
            raise TypeError("quaternion components must be real")
        if isinstance(x, int):
            return Fraction(x)
        return x

    @classmethod
    def from_complex(cls, z) -> "Quaternion":
        """Read ``re + im*i`` as a quaternion with vanishing j, k parts."""
        if isinstance(z, GaussRat):
            return cls(z.re, z.im, 0, 0)
        return cls(z, 0, 0, 0)

    def components(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def _make(self, a, b, c, d):
        return type(self)(a, b, c, d)

    def _as_quat(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, GaussRat):
            return self._make(other.re, other.im, 0, 0)
        if not isinstance(other, self._scalar_types):
            return None
        zero = other * 0
        return self._make(other, zero, zero, zero)

    def __add__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return self._make(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return self._make(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, self._scalar_types):
            return self._make(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, (Quaternion, GaussRat)):
            return NotImplemented
        q = self._as_quat(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = q.a, q.b, q.c, q.d
        return self._make(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return o * self

    def conj(self):
        return self._make(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inv(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero")
        return self._make(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __truediv__(self, other):
        """Right division ``self * other**-1``."""
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = self._make(1, 0, 0, 0)
        for _ in range(n):
            r = r * self
        return r

    def sigma(self):
        """a + bi + cj + dk -> a - bi + cj - dk."""
        return self._make(self.a, -self.b, self.c, -self.d)

    def tau(self):
        """a + bi + cj + dk -> a + bi - cj - dk."""
        return self._make(self.a, self.b, -self.c, -self.d)

    def is_scalar(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_complex(self) -> bool:
        return not (self.c or self.d)

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def __eq__(self, other):
        o = self._as_quat(other) if not isinstance(other, Quaternion) else other
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self):
        if self.is_scalar():
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"{type(self).__name__}({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self):
        parts = []
        for coef, unit in zip(self.components(), ("", "i", "j", "k")):
            if not coef:
                continue
            s = str(coef)
            if unit:
                if s == "1":
                    s = unit
                elif s == "-1":
                    s = "-" + unit
                else:
                    s = f"({s})*{unit}" if any(ch in s[1:] for ch in "+-/") else f"{s}*{unit}"
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def quat_inv(q: Quaternion) -> Quaternion:
    return q.inv()


def quat_sigma(q: Quaternion) -> Quaternion:
    return q.sigma()


def quat_tau(q: Quaternion) -> Quaternion:
    return q.tau()
