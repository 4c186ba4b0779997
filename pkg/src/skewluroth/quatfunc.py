"""The division ring H(X) of quaternions with rational-function components.

X is central, so an element is a + b*i + c*j + d*k with a, b, c, d in Q(X)
and equality is componentwise.  This is the canonical form every skew object
is compared in.  ``phi`` embeds C(T, sigma) via T -> j*X.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigMismatch
from .luroth import is_member
from .ratfunc import Poly, RatFunc, even_odd_split
from .scalars import GaussRat, QuadRat, Quaternion
from .skewfield import CENTRAL, GAUSS, SkewFrac, SkewPoly


class QuatFunc(Quaternion):
    """a + b*i + c*j + d*k with RatFunc components in a central variable."""

    __slots__ = ()
    _scalar_types = (int, Fraction, QuadRat, RatFunc)

    @classmethod
    def _coerce_component(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (Poly, int, Fraction, QuadRat)):
            return RatFunc(x)
        raise TypeError(f"cannot use {type(x).__name__} as a QuatFunc component")

    def _as_quat(self, other):
        if isinstance(other, QuatFunc):
            return other
        if isinstance(other, Quaternion):
            return QuatFunc(*other.components())
        return super()._as_quat(other)

    @classmethod
    def x(cls) -> "QuatFunc":
        return cls(RatFunc.x())

    def __radd__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return o + self

    def __rmul__(self, other):
        o = self._as_quat(other)
        if o is None:
            return NotImplemented
        return o * self

    def __eq__(self, other):
        return super().__eq__(other)

    def __hash__(self):
        return super().__hash__()

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.components())

    def constant_value(self) -> Quaternion:
        return Quaternion(*(c.constant_value() if c else 0 for c in self.components()))

    def __str__(self):
        return self.to_str("X")

    def to_str(self, var: str = "X") -> str:
        parts = []
        for comp, unit in zip(self.components(), ("", "i", "j", "k")):
            if not comp:
                continue
            s = comp.to_str(var)
            if unit:
                s = _unit_term(comp, unit, var)
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def _unit_term(comp: RatFunc, unit: str, var: str) -> str:
    terms = [(n, c) for n, c in enumerate(comp.num.coeffs) if c]
    if comp.is_polynomial() and len(terms) == 1 and not isinstance(terms[0][1], (GaussRat, QuadRat)):
        n, c = terms[0]
        sign = "-" if c < 0 else ""
        c = abs(c)
        mono = "" if n == 0 else var if n == 1 else f"{var}^{n}"
        pieces = ([] if c == 1 else [str(c)]) + [unit] + ([mono] if mono else [])
        body = "*".join(pieces)
        if "/" in str(c) and mono:
            body = f"({c})*{unit}*{mono}"
        return sign + body
    return f"{unit}*({comp.to_str(var)})"


def components(u: QuatFunc) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    return u.components()


_UNITS = (QuatFunc(0, 1), QuatFunc(0, 0, 1), QuatFunc(0, 0, 0, 1))


def _scalar_part_by_averaging(u: QuatFunc) -> RatFunc:
    # (u + i u i^-1 + j u j^-1 + k u k^-1) / 4 kills the i, j, k parts
    acc = u
    for e in _UNITS:
        acc = acc + e * u * e.inv()
    part = acc * Fraction(1, 4)
    assert part.is_scalar()
    return part.a


def components_by_averaging(u: QuatFunc) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    """The four components recovered with conjugations and products only."""
    a = _scalar_part_by_averaging(u)
    rest = [_scalar_part_by_averaging(-e * u) for e in _UNITS]
    return (a, *rest)


def sigma_ext(u: QuatFunc) -> QuatFunc:
    """Apply a+bi+cj+dk -> a-bi+cj-dk to the coefficients, fixing X."""
    return u.sigma()


def tau_ext(u: QuatFunc) -> QuatFunc:
    """Apply a+bi+cj+dk -> a+bi-cj-dk to the coefficients and X -> -X."""
    a, b, c, d = (x.neg_var() for x in u.components())
    return QuatFunc(a, b, -c, -d)


def _phi_poly(p: SkewPoly) -> QuatFunc:
    parts: list[list] = [[0] * len(p) for _ in range(4)]
    for n, coef in enumerate(p.coeffs):
        x, y = coef.re, coef.im
        # coef * j^n, with j^n cycling through 1, j, -1, -j
        r = n % 4
        sign = -1 if r >= 2 else 1
        if r % 2 == 0:
            parts[0][n], parts[1][n] = sign * x, sign * y
        else:
            parts[2][n], parts[3][n] = sign * x, sign * y
    return QuatFunc(*(Poly(c) for c in parts))


def phi(x: SkewFrac | SkewPoly) -> QuatFunc:
    """Embed C(T, sigma) into H(X) by a*T^n -> a*j^n*X^n."""
    if x.config != GAUSS:
        raise ConfigMismatch("phi is defined on C(T, sigma) only")
    if isinstance(x, SkewPoly):
        return _phi_poly(x)
    num = _phi_poly(x.num)
    if x.is_polynomial():
        return num
    return num * _phi_poly(x.den).inv()


def subst_neg_t2(g: RatFunc) -> SkewFrac:
    """g(-T^2) in C(T, sigma); -T^2 is central."""
    def lift(p: Poly) -> SkewPoly:
        coeffs = [0] * (2 * len(p))
        for m, c in enumerate(p.coeffs):
            coeffs[2 * m] = -c if m % 2 else c
        return SkewPoly(GAUSS, coeffs)
    return SkewFrac(lift(g.num), lift(g.den))


def is_tau_fixed_profile(u: QuatFunc) -> bool:
    """a, b even and c, d odd in X: the shape of image(phi)."""
    a, b, c, d = u.components()
    return a.is_even() and b.is_even() and c.is_odd() and d.is_odd()


def phi_inv(u: QuatFunc) -> SkewFrac | None:
    """x with phi(x) = u, or None when u is outside the image."""
    if not is_tau_fixed_profile(u):
        return None
    a, b, c, d = u.components()
    at, bt = even_odd_split(a)[0], even_odd_split(b)[0]
    ct, dt = even_odd_split(c)[1], even_odd_split(d)[1]
    i = SkewFrac.const(GAUSS, GaussRat(0, 1))
    t = SkewFrac.t(GAUSS)
    x = subst_neg_t2(at) + subst_neg_t2(bt) * i + (subst_neg_t2(ct) + subst_neg_t2(dt) * i) * t
    if phi(x) != u:
        return None
    return x


def in_H_of_f(u: QuatFunc, f: RatFunc) -> bool:
    """u in H(f), i.e. every component lies in Q(f)."""
    return all(is_member(c, f) for c in u.components())


def central_to_quatfunc(x: SkewFrac | SkewPoly) -> QuatFunc:
    """Read an element of H(T) with T central as a QuatFunc in X."""
    if x.config != CENTRAL:
        raise ConfigMismatch("expected the central-variable configuration")

    def conv(p: SkewPoly) -> QuatFunc:
        cols = list(zip(*(c.components() for c in p.coeffs))) or [(), (), (), ()]
        return QuatFunc(*(Poly(col) for col in cols))

    if isinstance(x, SkewPoly):
        return conv(x)
    num = conv(x.num)
    return num if x.is_polynomial() else num * conv(x.den).inv()
