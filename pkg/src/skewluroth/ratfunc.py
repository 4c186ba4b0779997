"""Univariate polynomials and rational functions over an exact commutative field.

Coefficients are plain Python field elements (``Fraction``, ``GaussRat``,
``QuadRat``, or even ``RatFunc`` for polynomials over a function field).
Zero tests use truthiness, so every coefficient type must implement
``__bool__``.  Rational functions carry no variable name; renderers take it
as an argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import PreconditionError
from .limits import check_degree
from .linalg import nullspace
from .scalars import GaussRat, QuadRat

NEG_INF = float("-inf")

_SCALARS = (int, Fraction, GaussRat, QuadRat)


def _coerce_scalar(c):
    return Fraction(c) if isinstance(c, int) else c


def coef_str(c) -> str:
    """Render a coefficient so that it can sit in front of ``*X^n``."""
    s = str(c)
    if isinstance(c, (GaussRat, QuadRat)) and any(ch in s[1:] for ch in "+-"):
        return f"({s})"
    if isinstance(c, RatFunc) and not c.is_constant():
        return f"({s})"
    return s


def terms_str(coeffs: Sequence, var: str, mono: Callable[[int], str] | None = None) -> str:
    """Ascending coefficient list to ``c0 + c1*var + ...`` (highest degree first)."""
    if mono is None:
        mono = lambda n: "" if n == 0 else var if n == 1 else f"{var}^{n}"  # noqa: E731
    pieces = []
    for n in range(len(coeffs) - 1, -1, -1):
        c = coeffs[n]
        if not c:
            continue
        m = mono(n)
        cs = coef_str(c)
        if not m:
            piece = cs
        elif cs == "1":
            piece = m
        elif cs == "-1":
            piece = "-" + m
        else:
            piece = f"{cs}*{m}"
        pieces.append(piece)
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


class Poly:
    """Dense univariate polynomial ``c[0] + c[1] X + ... + c[n] X^n``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [_coerce_scalar(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        check_degree(len(c) - 1)
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, n: int) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, _SCALARS):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_str("X")

    def to_str(self, var: str = "X") -> str:
        return terms_str(self.coeffs, var)

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, _SCALARS):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] - o[i] for i in range(n)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        if len(o.coeffs) == 1:
            s = o.coeffs[0]
            return Poly([c * s for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at any value supporting ring operations."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return 0 if acc is None else acc

    def compose(self, g: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def map(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    def scale_var(self, s) -> "Poly":
        """p(s*X)."""
        out, pw = [], 1
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * s
        return Poly(out)

    def neg_var(self) -> "Poly":
        """p(-X)."""
        return Poly([c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)])

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs])

    def parity_parts(self) -> tuple["Poly", "Poly"]:
        """(E, O) with p(X) = E(X^2) + X*O(X^2)."""
        return Poly(self.coeffs[0::2]), Poly(self.coeffs[1::2])

    def spread(self, k: int) -> "Poly":
        """p(X^k)."""
        out = [0] * (k * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for n, c in enumerate(self.coeffs):
            out[k * n] = c
        return Poly(out)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (list, tuple)):
        return Poly(x)
    return Poly.const(x)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by zero")
    if len(a) < len(b):
        return Poly(), a
    inv = 1 / b.lc
    r = list(a.coeffs)
    db = len(b) - 1
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c * inv
        q[k - db] = c
        for i, bc in enumerate(b.coeffs):
            if bc:
                r[k - db + i] = r[k - db + i] - c * bc
    return Poly(q), Poly(r[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Poly.const(1), Poly()
    t0, t1 = Poly(), Poly.const(1)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


class RatFunc:
    """Canonical fraction num/den: coprime, den monic, 0 stored as 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, *, _reduced: bool = False):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("division by zero")
        if not _reduced:
            if not num:
                den = Poly.const(1)
            else:
                if len(den) > 1 and len(num) > 1:
                    g = poly_gcd(num, den)
                    if len(g) > 1:
                        num, den = num // g, den // g
                lc = den.lc
                if lc != 1:
                    inv = 1 / lc
                    num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x(), _reduced=True)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.const(c), _reduced=True)

    # -- predicates -----------------------------------------------------
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num[0]

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    @property
    def degree(self) -> int:
        return max(len(self.num), len(self.den)) - 1 if self.num else 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self == RatFunc(other)
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.num[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num[0])
        return hash((self.num, self.den))

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, _reduced=True)
        if isinstance(other, _SCALARS):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.num[0] if o.num else 0
            if not c:
                return RatFunc()
            return RatFunc(self.num * c, self.den, _reduced=True)
        if self.is_constant():
            return o * self
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    # -- transformations ------------------------------------------------
    def __call__(self, x):
        return self.num(x) / self.den(x)

    def compose(self, f: "RatFunc") -> "RatFunc":
        return rf_compose(self, f)

    def neg_var(self) -> "RatFunc":
        """f(-X)."""
        return RatFunc(self.num.neg_var(), self.den.neg_var())

    def map(self, fn) -> "RatFunc":
        return RatFunc(self.num.map(fn), self.den.map(fn))

    def is_even(self) -> bool:
        return self.neg_var() == self

    def is_odd(self) -> bool:
        return self.neg_var() == -self

    def __repr__(self):
        return f"RatFunc({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self):
        return self.to_str("X")

    def to_str(self, var: str = "X") -> str:
        n = self.num.to_str(var)
        if self.den == 1:
            return n
        d = self.den.to_str(var)
        if len(self.num) > 1 and len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        elif any(ch in n[1:] for ch in "+-"):
            n = f"({n})"
        return f"{n}/({d})"


def rf_normalize(num: Poly, den: Poly) -> RatFunc:
    if not den:
        raise ZeroDivisionError("division by zero")
    return RatFunc(num, den)


def rf_degree(f: RatFunc) -> int:
    return f.degree


def _homogeneous_eval(coeffs: Sequence, m: int, P: Poly, Q: Poly,
                      ppow: list[Poly], qpow: list[Poly]) -> Poly:
    acc = Poly()
    for i, c in enumerate(coeffs):
        if c:
            acc = acc + ppow[i] * qpow[m - i] * c
    return acc


def rf_compose(R: RatFunc, f: RatFunc) -> RatFunc:
    """R(f) via homogenisation: sum a_i P^i Q^(m-i) / sum b_i P^i Q^(m-i)."""
    m = max(len(R.num), len(R.den)) - 1
    if m <= 0:
        return R
    P, Q = f.num, f.den
    ppow, qpow = [Poly.const(1)], [Poly.const(1)]
    for _ in range(m):
        ppow.append(ppow[-1] * P)
        qpow.append(qpow[-1] * Q)
    top = _homogeneous_eval(R.num.coeffs, m, P, Q, ppow, qpow)
    bottom = _homogeneous_eval(R.den.coeffs, m, P, Q, ppow, qpow)
    if not bottom:
        raise ZeroDivisionError("division by zero")
    return RatFunc(top, bottom)


def even_odd_split(f: RatFunc) -> tuple[RatFunc, RatFunc]:
    """(g, h) in a fresh variable Y with f(X) = g(X^2) + h(X^2)*X."""
    dm = f.den.neg_var()
    den = f.den * dm
    num = f.num * dm
    e_num, o_num = num.parity_parts()
    e_den, odd_den = den.parity_parts()
    assert not odd_den, "den(X)*den(-X) must be even"
    return RatFunc(e_num, e_den), RatFunc(o_num, e_den)


@dataclass(frozen=True)
class Mobius:
    """z -> (a z + b)/(c z + d), scaled so that the first nonzero of (c, d) is 1."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        a, b, c, d = (_coerce_scalar(x) for x in (self.a, self.b, self.c, self.d))
        if not (a * d - b * c):
            raise PreconditionError("degenerate Mobius transformation (ad - bc = 0)")
        s = c if c else d
        a, b, c, d = a / s, b / s, c / s, d / s
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def is_identity(self) -> bool:
        return self.a == 1 and not self.b and not self.c and self.d == 1

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(Poly((self.b, self.a)), Poly((self.d, self.c)))

    def __str__(self):
        return f"({self.a}*z+{self.b})/({self.c}*z+{self.d})"


def mobius_apply(M: Mobius, f: RatFunc) -> RatFunc:
    bottom = f * M.c + M.d
    if not bottom:
        raise PreconditionError("degenerate denominator c*f + d = 0")
    return (f * M.a + M.b) / bottom


def mobius_solve(f: RatFunc, F: RatFunc) -> Mobius | None:
    """Find M with F = M(f); None if F is not a Mobius transform of f."""
    if f.is_constant():
        raise PreconditionError("mobius_solve needs a nonconstant f")
    if F.degree != f.degree:
        return None
    P, Q = f.num, f.den
    NF, DF = F.num, F.den
    # NF*(c P + d Q) - DF*(a P + b Q) = 0, unknowns (a, b, c, d)
    cols = [-(DF * P), -(DF * Q), NF * P, NF * Q]
    n = max(len(c) for c in cols)
    rows = [[col[k] for col in cols] for k in range(n)]
    basis = nullspace(rows, 4)
    if len(basis) != 1:
        return None
    a, b, c, d = basis[0]
    if not (a * d - b * c):
        return None
    M = Mobius(a, b, c, d)
    if mobius_apply(M, f) != F:
        return None
    return M
