"""Skew polynomial rings H[T, sigma] and their right-fraction skew fields.

Three coefficient configurations are supported:

* ``GAUSS``: H = Q(i) with sigma the complex conjugation (the ring C[T, sigma]);
* ``CENTRAL``: H = quaternions over Q with sigma = id (T central);
* ``TwistConfig.inner(b)``: quaternions with sigma = conjugation x -> b x b^-1.

Multiplication follows ``T a = sigma(a) T``.  Fractions are right fractions
``N D^-1``; common right multiples (the right Ore condition) come from the
extended Euclidean algorithm with *left* division, while reduction divides
out the greatest common *right* divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConfigMismatch, PreconditionError
from .limits import check_degree
from .ratfunc import NEG_INF, terms_str
from .scalars import GaussRat, Quaternion, QuadRat


@dataclass(frozen=True)
class TwistConfig:
    kind: str  # "gauss" | "central" | "inner"
    b: Quaternion | None = None

    def __post_init__(self):
        if self.kind not in ("gauss", "central", "inner"):
            raise ValueError(f"unknown twist kind {self.kind!r}")
        if self.kind == "inner":
            if self.b is None or not self.b:
                raise PreconditionError("inner twist needs a nonzero quaternion b")
            sq = self.b * self.b
            if not sq.is_scalar():
                raise PreconditionError("inner twist must have order <= 2 (b^2 central)")

    @classmethod
    def inner(cls, b) -> "TwistConfig":
        if not isinstance(b, Quaternion):
            b = Quaternion.from_complex(b)
        return cls("inner", b)

    @property
    def order(self) -> int:
        if self.kind == "gauss":
            return 2
        if self.kind == "inner" and not self.b.is_scalar():
            return 2
        return 1

    def coerce(self, x):
        if self.kind == "gauss":
            if isinstance(x, GaussRat):
                return x
            if isinstance(x, (int, Fraction, QuadRat)):
                return GaussRat(x, 0)
            if isinstance(x, Quaternion) and x.is_complex():
                return GaussRat(x.a, x.b)
            raise ConfigMismatch(f"{x!r} is not in Q(i)")
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, GaussRat):
            return Quaternion.from_complex(x)
        if isinstance(x, (int, Fraction, QuadRat)):
            return Quaternion(x)
        raise ConfigMismatch(f"{x!r} is not a quaternion")

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def sigma(self, x):
        if self.kind == "gauss":
            return x.conj()
        if self.kind == "inner":
            return self.b * x * self.b.inv()
        return x

    def sigma_pow(self, x, n: int):
        """sigma^n(x); negative n allowed since sigma has order <= 2."""
        return self.sigma(x) if n % self.order else x

    def __str__(self):
        if self.kind == "inner":
            return f"inner({self.b})"
        return self.kind


GAUSS = TwistConfig("gauss")
CENTRAL = TwistConfig("central")


class SkewPoly:
    """a_0 + a_1 T + ... + a_n T^n with coefficients written on the left."""

    __slots__ = ("config", "coeffs")

    def __init__(self, config: TwistConfig, coeffs: Sequence = ()):
        c = [config.coerce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        check_degree(len(c) - 1)
        self.config = config
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, config, c) -> "SkewPoly":
        return cls(config, (c,))

    @classmethod
    def t(cls, config) -> "SkewPoly":
        return cls(config, (0, 1))

    @classmethod
    def monomial(cls, config, c, n: int) -> "SkewPoly":
        return cls(config, [0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.config.zero()

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.config.zero()

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _check(self, other: "SkewPoly"):
        if other.config != self.config:
            raise ConfigMismatch(f"twist configurations differ: {self.config} vs {other.config}")

    def _lift(self, other):
        if isinstance(other, SkewPoly):
            self._check(other)
            return other
        try:
            return SkewPoly.const(self.config, other)
        except ConfigMismatch:
            return None

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.config == other.config and self.coeffs == other.coeffs
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.config, self.coeffs))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return SkewPoly(self.config, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.config, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return SkewPoly(self.config, [self[i] - o[i] for i in range(n)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return spoly_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return spoly_mul(o, self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a skew polynomial")
        r = SkewPoly.const(self.config, 1)
        for _ in range(n):
            r = r * self
        return r

    def left_scale(self, c) -> "SkewPoly":
        """c * self."""
        c = self.config.coerce(c)
        return SkewPoly(self.config, [c * a for a in self.coeffs])

    def right_scale(self, c) -> "SkewPoly":
        """self * c, i.e. a_n T^n c = a_n sigma^n(c) T^n."""
        c = self.config.coerce(c)
        cfg = self.config
        return SkewPoly(cfg, [a * cfg.sigma_pow(c, n) for n, a in enumerate(self.coeffs)])

    def map(self, fn, config: TwistConfig | None = None) -> "SkewPoly":
        return SkewPoly(config or self.config, [fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"SkewPoly({self.config}, {list(self.coeffs)!r})"

    def __str__(self):
        return self.to_str("T")

    def to_str(self, var: str = "T") -> str:
        return terms_str(self.coeffs, var)


def spoly_mul(p: SkewPoly, q: SkewPoly) -> SkewPoly:
    """Coefficient k of p*q is sum_l a_l sigma^l(b_{k-l})."""
    p._check(q)
    cfg = p.config
    if not p or not q:
        return SkewPoly(cfg)
    out = [cfg.zero()] * (len(p) + len(q) - 1)
    # sigma^l(b) depends only on l mod order
    twisted = [q.coeffs] + ([tuple(cfg.sigma(b) for b in q.coeffs)] if cfg.order == 2 else [])
    for l, a in enumerate(p.coeffs):
        if not a:
            continue
        qs = twisted[l % len(twisted)]
        for m, b in enumerate(qs):
            if b:
                out[l + m] = out[l + m] + a * b
    return SkewPoly(cfg, out)


def right_divmod(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with a = q*b + r and deg r < deg b."""
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by zero")
    cfg = a.config
    db = len(b) - 1
    r = list(a.coeffs)
    q = [cfg.zero()] * max(len(r) - db, 0)
    for k in range(len(r) - 1, db - 1, -1):
        if not r[k]:
            continue
        s = k - db
        # (c T^s) b has leading coefficient c sigma^s(lc b)
        c = r[k] * cfg.sigma_pow(b.lc, s).inv()
        q[s] = c
        for i, bc in enumerate(b.coeffs):
            if bc:
                r[s + i] = r[s + i] - c * cfg.sigma_pow(bc, s)
    return SkewPoly(cfg, q), SkewPoly(cfg, r[:db])


def left_divmod(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with a = b*q + r and deg r < deg b."""
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by zero")
    cfg = a.config
    db = len(b) - 1
    lb_inv = b.lc.inv()
    r = list(a.coeffs)
    q = [cfg.zero()] * max(len(r) - db, 0)
    for k in range(len(r) - 1, db - 1, -1):
        if not r[k]:
            continue
        s = k - db
        # b (c T^s) has leading coefficient lc(b) sigma^db(c)
        c = cfg.sigma_pow(lb_inv * r[k], -db)
        q[s] = c
        for i, bc in enumerate(b.coeffs):
            if bc:
                r[i + s] = r[i + s] - bc * cfg.sigma_pow(c, i)
    return SkewPoly(cfg, q), SkewPoly(cfg, r[:db])


def _left_monic(p: SkewPoly) -> SkewPoly:
    return p.left_scale(p.lc.inv()) if p else p


def _right_monic(p: SkewPoly) -> SkewPoly:
    if not p:
        return p
    n = len(p) - 1
    return p.right_scale(p.config.sigma_pow(p.lc.inv(), -n))


def gcrd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Greatest common right divisor, normalised to leading coefficient 1."""
    a._check(b)
    if not a and not b:
        raise PreconditionError("gcrd(0, 0) is undefined")
    while b:
        a, b = b, right_divmod(a, b)[1]
    return _left_monic(a)


def gcld(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Greatest common left divisor, normalised to leading coefficient 1."""
    a._check(b)
    if not a and not b:
        raise PreconditionError("gcld(0, 0) is undefined")
    while b:
        a, b = b, left_divmod(a, b)[1]
    return _right_monic(a)


def lclm(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly, SkewPoly]:
    """Least common left multiple m = u*a = v*b, returned as (m, u, v).

    deg m = deg a + deg b - deg gcrd(a, b).
    """
    a._check(b)
    if not a or not b:
        raise PreconditionError("lclm needs nonzero inputs")
    cfg = a.config
    one, zero = SkewPoly.const(cfg, 1), SkewPoly(cfg)
    # r_i = s_i*a + t_i*b
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = right_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    # s1*a + t1*b = 0
    u, v = s1, -t1
    c = (u * a).lc.inv()
    u, v = u.left_scale(c), v.left_scale(c)
    return u * a, u, v


def lcrm(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly, SkewPoly]:
    """Least common right multiple m = a*u = b*v, returned as (m, u, v).

    This is the right Ore witness used by fraction arithmetic;
    deg m = deg a + deg b - deg gcld(a, b).
    """
    a._check(b)
    if not a or not b:
        raise PreconditionError("lcrm needs nonzero inputs")
    cfg = a.config
    one, zero = SkewPoly.const(cfg, 1), SkewPoly(cfg)
    # r_i = a*s_i + b*t_i
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = left_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - s1 * q
        t0, t1 = t1, t0 - t1 * q
    u, v = s1, -t1
    m = a * u
    n = len(m) - 1
    c = cfg.sigma_pow(m.lc.inv(), -n)
    u, v = u.right_scale(c), v.right_scale(c)
    return a * u, u, v


class SkewFrac:
    """Right fraction num * den^-1 in canonical reduced form.

    Canonical form: gcrd(num, den) = 1 and den has leading coefficient 1.
    Reduced right fractions of a skew polynomial ring over a division ring are
    unique up to a common right unit, so this form is unique.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SkewPoly, den: SkewPoly | None = None, *, _reduced: bool = False):
        if den is None:
            den = SkewPoly.const(num.config, 1)
        num._check(den)
        if not den:
            raise ZeroDivisionError("division by zero")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def config(self) -> TwistConfig:
        return self.num.config

    @classmethod
    def const(cls, config, c) -> "SkewFrac":
        return cls(SkewPoly.const(config, c), _reduced=True)

    @classmethod
    def t(cls, config) -> "SkewFrac":
        return cls(SkewPoly.t(config), _reduced=True)

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def _lift(self, other):
        if isinstance(other, SkewFrac):
            self.num._check(other.num)
            return other
        if isinstance(other, SkewPoly):
            self.num._check(other)
            return SkewFrac(other, _reduced=True)
        try:
            return SkewFrac.const(self.config, other)
        except ConfigMismatch:
            return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, SkewFrac) else other
        if o is None:
            return NotImplemented
        return sfrac_eq(self, o)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return SkewFrac(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_add(self, -o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_add(o, -self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_mul(o, self)

    def __truediv__(self, other):
        """Right division: self * other^-1."""
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_mul(self, sfrac_inv(o))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return sfrac_mul(o, sfrac_inv(self))

    def inv(self) -> "SkewFrac":
        return sfrac_inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return sfrac_inv(self) ** (-n)
        r = SkewFrac.const(self.config, 1)
        for _ in range(n):
            r = r * self
        return r

    def __repr__(self):
        return f"SkewFrac({self.num!r}, {self.den!r})"

    def __str__(self):
        return self.to_str("T")

    def to_str(self, var: str = "T") -> str:
        n = self.num.to_str(var)
        if len(self.den) == 1:
            return n
        if len([c for c in self.num.coeffs if c]) > 1 or any(ch in n[1:] for ch in "+-"):
            n = f"({n})"
        return f"{n}/({self.den.to_str(var)})"


def _reduce(num: SkewPoly, den: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    cfg = num.config
    if not num:
        return num, SkewPoly.const(cfg, 1)
    if len(den) > 1 and len(num) > 0:
        g = gcrd(num, den)
        if len(g) > 1:
            num = right_divmod(num, g)[0]
            den = right_divmod(den, g)[0]
    return _normalize_den(num, den)


def _normalize_den(num: SkewPoly, den: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    cfg = num.config
    n = len(den) - 1
    # right-multiply both by c with lc(den * c) = lc(den) sigma^n(c) = 1
    c = cfg.sigma_pow(den.lc.inv(), -n)
    if c == cfg.one():
        return num, den
    return num.right_scale(c), den.right_scale(c)


def sfrac_add(x: SkewFrac, y: SkewFrac) -> SkewFrac:
    x.num._check(y.num)
    if x.den == y.den:
        return SkewFrac(x.num + y.num, x.den)
    if len(y.den) == 1:
        # y.den == 1 after normalisation
        return SkewFrac(x.num + y.num * x.den, x.den)
    if len(x.den) == 1:
        return SkewFrac(x.num * y.den + y.num, y.den)
    m, u, v = lcrm(x.den, y.den)
    return SkewFrac(x.num * u + y.num * v, m)


def sfrac_mul(x: SkewFrac, y: SkewFrac) -> SkewFrac:
    """(N1 D1^-1)(N2 D2^-1) = N1 v (D2 u)^-1 where N2 u = D1 v."""
    x.num._check(y.num)
    if not x or not y:
        return SkewFrac(SkewPoly(x.config))
    if len(x.den) == 1:
        return SkewFrac(x.num * y.num, y.den)
    _, u, v = lcrm(y.num, x.den)
    return SkewFrac(x.num * v, y.den * u)


def sfrac_inv(x: SkewFrac) -> SkewFrac:
    if not x:
        raise ZeroDivisionError("division by zero")
    return SkewFrac(x.den, x.num)


def sfrac_eq(x: SkewFrac, y: SkewFrac) -> bool:
    if x.config != y.config:
        raise ConfigMismatch(f"twist configurations differ: {x.config} vs {y.config}")
    return x.num == y.num and x.den == y.den


def sigma_hat(x: SkewFrac) -> SkewFrac:
    """Complex conjugation of every coefficient of C(T, sigma)."""
    if x.config != GAUSS:
        raise ConfigMismatch("sigma_hat is defined on C(T, sigma) only")
    return SkewFrac(x.num.map(lambda c: c.conj()), x.den.map(lambda c: c.conj()))


def untwist_inner(p: SkewPoly, b) -> SkewPoly:
    """Rewrite p in H[T, I(b)] in the central variable U = b^-1 T.

    Since U is central, T^n = (bU)^n = b^n U^n and a_n T^n = (a_n b^n) U^n.
    The result lives in the ``CENTRAL`` configuration.
    """
    if not isinstance(b, Quaternion):
        b = Quaternion.from_complex(b)
    if not b:
        raise PreconditionError("untwist needs a nonzero b")
    if p.config != TwistConfig.inner(b):
        raise ConfigMismatch(f"expected configuration inner({b}), got {p.config}")
    out, bn = [], Quaternion(1)
    for a in p.coeffs:
        out.append(a * bn)
        bn = bn * b
    return SkewPoly(CENTRAL, out)
