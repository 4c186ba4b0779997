"""Lüroth engines for H(T) with T central and for C(T, sigma).

Central case: H(u_1, ..., u_m) = H(f) where f generates the commutative
field spanned by all components of the u_k.

Twisted case: a subfield L of C(T, sigma) containing C is pushed into H(X)
with ``phi``; the backbone f with phi(L) + phi(L) j = H(f) is found with the
central engine, and the symmetry of f under X -> -X produces a candidate
generator w.  Every claim is then checked, and sigma-invariance of L is
decided through the splitting below.

Conjugation by i sends T to -T, so L = L0 + L1 with L0 = L n C(T^2) and
L1 = L n C(T^2) T.  Writing Y = -T^2, L0 is a subfield of Q(i)(Y) and, when
L1 != 0, L1 = L0 v for any nonzero v in L1.  Both pieces are computable with
the commutative Lüroth algorithm over Q(i), which gives exact membership in
L and an exact test of sigma_hat(L) = L.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import CenterFormulaError, NotMobiusError, PreconditionError
from .luroth import decompose_through, express_in, is_member, luroth_generator
from .quatfunc import QuatFunc, in_H_of_f, phi, phi_inv, sigma_ext, subst_neg_t2, tau_ext
from .ratfunc import RatFunc, even_odd_split, mobius_solve, rf_compose, rf_degree
from .scalars import I, QuadRat, cconj, rat_sqrt
from .skewfield import GAUSS, SkewFrac, sigma_hat


# -- result types ---------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    name: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class Constant:
    name = "Constant"


@dataclass(frozen=True)
class Symmetric:
    """tau(f) = f, so f = g(X^2)."""
    g: RatFunc
    name = "Symmetric"


@dataclass(frozen=True)
class AntiSymmetric:
    """tau(f) = -f + 2*shift, so f - shift = h(X^2) X."""
    h: RatFunc
    shift: Fraction = Fraction(0)
    name = "AntiSymmetric"


@dataclass(frozen=True)
class General:
    """tau(f) = (a f + b)/(f - a); after f <- f - a, tau(f) = 1/(alpha f)."""
    alpha: Fraction
    sqrt_alpha: Fraction | QuadRat
    v: QuatFunc
    shift: Fraction = Fraction(0)
    name = "General"


LurothCase = Constant | Symmetric | AntiSymmetric | General


def case_summary(case: LurothCase) -> str:
    if isinstance(case, Symmetric):
        return f"Symmetric(g={case.g.to_str('Y')})"
    if isinstance(case, AntiSymmetric):
        return f"AntiSymmetric(h={case.h.to_str('Y')})"
    if isinstance(case, General):
        return f"General(alpha={case.alpha}, sqrt_alpha={case.sqrt_alpha}, v={case.v})"
    return "Constant"


@dataclass
class CentralResult:
    status: str  # "Trivial" | "Generated"
    f: RatFunc | None
    certificates: list[Certificate] = field(default_factory=list)


@dataclass
class LurothOutcome:
    status: str  # "Trivial" | "Generated" | "NotInvariant" | "Unknown"
    generator: SkewFrac | None
    case: LurothCase | None
    f: RatFunc | None
    certificates: list[Certificate] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


@dataclass
class InvarianceVerdict:
    verdict: str  # "Invariant" | "NotInvariant" | "Unknown"
    witness: SkewFrac | None = None
    obstruction: str | None = None
    certificates: list[Certificate] = field(default_factory=list)


# -- central engine -------------------------------------------------------

def _render_expression(expr, names: Sequence[str]) -> str:
    def poly(d):
        terms = []
        for m, c in sorted(d.items(), reverse=True):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})*{mono}" if "/" in str(c) else f"{c}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out
    num, den = poly(expr[0]), poly(expr[1])
    return num if den == "1" else f"({num})/({den})"


def _distinct(values: list[RatFunc]) -> list[RatFunc]:
    out: list[RatFunc] = []
    for v in values:
        if not any(v == w for w in out):
            out.append(v)
    return out


def central_luroth(gens: Sequence[QuatFunc], *, witnesses: bool = True) -> CentralResult:
    """f with H(gens) = H(f), together with membership certificates."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("empty generator list")
    comps = [c for u in gens for c in u.components() if not c.is_constant()]
    if not comps:
        return CentralResult("Trivial", None, [Certificate("all_generators_constant", True)])
    f = luroth_generator(comps)
    certs = []
    for n, u in enumerate(gens):
        certs.append(Certificate(f"gen{n}_in_H(f)", in_H_of_f(u, f)))
    if witnesses:
        for n, u in enumerate(gens):
            for unit, c in zip("1ijk", u.components()):
                if c.is_constant():
                    continue
                R = decompose_through(c, f)
                certs.append(Certificate(f"gen{n}[{unit}]=R(f)", R is not None,
                                         None if R is None else R.to_str("f")))
        basis = _distinct(comps)
        expr = express_in(f, basis)
        names = [f"c{n}" for n in range(len(basis))]
        if expr is not None:
            listing = ", ".join(f"{n}={c}" for n, c in zip(names, basis))
            certs.append(Certificate("f_in_Q(components)", True,
                                     f"f = {_render_expression(expr, names)} with {listing}"))
        else:
            # the gcd degree still proves Q(f) = Q(components)
            ok = luroth_generator(basis).degree == f.degree
            certs.append(Certificate("f_in_Q(components)", ok, f"[Q(X):Q(components)] = {f.degree}"))
    return CentralResult("Generated", f, certs)


# -- case analysis on the backbone ---------------------------------------

def sigma_case_analysis(f: RatFunc, rational_only: bool = False) -> LurothCase:
    """Classify f by how X -> -X acts on it."""
    if f.is_constant():
        return Constant()
    F = f.neg_var()
    M = mobius_solve(f, F)
    if M is None:
        raise NotMobiusError("tau(f) not Mobius in f")
    if M.is_identity():
        g, h = even_odd_split(f)
        assert not h
        return Symmetric(g)
    if not M.c:
        # normalised with d = 1; an involution forces a = -d
        if M.a != -M.d:
            raise NotMobiusError("tau(f) = a f + b with a != -d")
        shift = M.b / 2
        g, h = even_odd_split(f - shift)
        assert not g
        return AntiSymmetric(h, Fraction(shift))
    a, b, d = M.a, M.b, M.d
    if d != -a:
        raise NotMobiusError("tau(f) = (a f + b)/(f + d) with d != -a")
    f0 = f - a
    alpha = Fraction(1) / (b + a * a)
    P, Q = f0.num, f0.den
    if not P[0]:
        raise PreconditionError("shifted backbone vanishes at 0")
    assert alpha == Q[0] ** 2 / P[0] ** 2
    s = rat_sqrt(alpha)
    if s is None:
        if rational_only:
            raise PreconditionError(f"requires sqrt(alpha) with alpha = {alpha}")
        s = QuadRat.sqrt(alpha)
    v = QuatFunc(0, 0, (1 - f0 * s) / (1 + f0 * s))
    assert tau_ext(v) == v and sigma_ext(v) == v
    return General(alpha, s, v, Fraction(a))


def pullback_case(case: LurothCase) -> SkewFrac:
    """The element w of C(T, sigma) the case points at."""
    if isinstance(case, Symmetric):
        return subst_neg_t2(case.g)
    if isinstance(case, AntiSymmetric):
        return subst_neg_t2(case.h) * SkewFrac.t(GAUSS)
    if isinstance(case, General):
        w = phi_inv(case.v)
        assert w is not None
        return w
    raise PreconditionError("no generator for the Constant case")


# -- the splitting L = L0 + L0 v --------------------------------------------

def _conj(r: RatFunc) -> RatFunc:
    return r.map(cconj)


def even_odd_parts(x: SkewFrac) -> tuple[RatFunc, RatFunc]:
    """(e, o) with x = e(Y) + o(Y) T, Y = -T^2, coefficients in Q(i)."""
    a, b, c, d = phi(x).components()
    e = even_odd_split(a)[0] + even_odd_split(b)[0] * I
    o = even_odd_split(c)[1] + even_odd_split(d)[1] * I
    return e, o


def _in_field(x: RatFunc, gen: RatFunc | None) -> bool:
    if x.is_constant():
        return True
    return gen is not None and is_member(x, gen)


@dataclass(frozen=True)
class Splitting:
    """L = L0 + L0 v with L0 = Q(i)(even_gen) and v = odd T."""
    even_gen: RatFunc | None
    odd: RatFunc | None

    @property
    def is_trivial(self) -> bool:
        return self.even_gen is None and self.odd is None

    def contains(self, x: SkewFrac) -> bool:
        e, o = even_odd_parts(x)
        if not _in_field(e, self.even_gen):
            return False
        if self.odd is None:
            return not o
        return _in_field(o / self.odd, self.even_gen)

    def same_field(self, other: "Splitting") -> bool:
        a, b = self.even_gen, other.even_gen
        if (a is None) != (b is None):
            return False
        if a is not None and not (a.degree == b.degree and is_member(b, a)):
            return False
        if (self.odd is None) != (other.odd is None):
            return False
        return self.odd is None or _in_field(other.odd / self.odd, a)

    def is_sigma_invariant(self) -> bool:
        if self.odd is None:
            # L = L0 is commutative; only the conjugate of its generator matters
            return self.even_gen is None or _in_field(_conj(self.even_gen), self.even_gen)
        return _in_field(_conj(self.odd) / self.odd, self.even_gen)


def splitting(gens: Sequence[SkewFrac]) -> Splitting:
    parts = [even_odd_parts(x) for x in gens]
    evens = [e for e, _ in parts]
    odds = [o for _, o in parts if o]
    if not odds:
        pool = evens
        ov = None
    else:
        ov = min(odds, key=lambda o: o.degree)
        y = RatFunc.x()
        ratios = [o / ov for o in odds]
        # v e v^-1 = conj(e) and v^2 = -ov conj(ov) Y
        pool = evens + [_conj(e) for e in evens] + ratios + [_conj(r) for r in ratios]
        pool.append(-(ov * _conj(ov) * y))
    nonconst = [p for p in pool if not p.is_constant()]
    gen = luroth_generator(nonconst) if nonconst else None
    return Splitting(gen, ov)


# -- center formula --------------------------------------------------------

def center_single(v: SkewFrac) -> RatFunc:
    """c(T) in Q(T^2) with c = v^2, for v anticommuting with i."""
    i = SkewFrac.const(GAUSS, I)
    if not v or v * i != -(i * v):
        raise CenterFormulaError("center formula inapplicable: v does not anticommute with i")
    sq = phi(v * v)
    a, b, c, d = sq.components()
    if b or c or d or not a.is_even():
        raise CenterFormulaError("center formula inapplicable: v^2 is not central")
    A = even_odd_split(a)[0]
    t = RatFunc.x()
    return rf_compose(A, -(t * t))


def _is_real_or_imaginary(x: SkewFrac) -> bool:
    s = sigma_hat(x)
    return s == x or s == -x


def _center_obstruction(v: SkewFrac, w: SkewFrac) -> tuple[bool, list[Certificate]]:
    """Compare Q(v^2) with Q(w^2); True when they provably differ."""
    cv, cw = center_single(v), center_single(w)
    certs = [Certificate("v_squared", True, cv.to_str("T")),
             Certificate("w_squared", True, cw.to_str("T"))]
    t = RatFunc.x()
    t2 = t * t
    Rv, Rw = decompose_through(cv, t2), decompose_through(cw, t2)
    if Rv is None or Rw is None:
        return False, certs
    # both centers live in Q(Y), Y = T^2: compare Q(Rv) and Q(Rw)
    deg_v, deg_w = rf_degree(Rv), rf_degree(Rw)
    certs.append(Certificate("center_v_in_Q(T^2)", True, f"{cv.to_str('T')} = {Rv.to_str('Y')} at Y=T^2"))
    if deg_w == 1 and deg_v != 1:
        # Q(w^2) = Q(T^2) has degree deg_v over Q(v^2)
        certs.append(Certificate("center_degree", True, str(deg_v)))
        certs.append(Certificate("center_obstruction", True,
                                 f"{Rv.to_str('Z')} - Y has no root in Q(Y): "
                                 f"[Q(T^2) : Q({cv.to_str('T')})] = {deg_v}"))
        return True, certs
    same = deg_v == deg_w and is_member(Rw, Rv)
    if not same:
        certs.append(Certificate("center_degree", True, f"{deg_v} vs {deg_w}"))
        certs.append(Certificate("center_obstruction", True, "Q(v^2) != Q(w^2)"))
        return True, certs
    return False, certs


# -- twisted engine ----------------------------------------------------------

def _candidate(f: RatFunc, rational_only: bool) -> tuple[LurothCase, SkewFrac]:
    case = sigma_case_analysis(f, rational_only)
    return case, pullback_case(case)


def _backbone_certificates(w: SkewFrac, f: RatFunc) -> tuple[RatFunc | None, list[Certificate]]:
    fw = central_luroth([phi(w)], witnesses=False).f
    certs = [Certificate("sigma_hat(w)=w", sigma_hat(w) == w, str(w)),
             Certificate("deg f_w = deg f", fw is not None and fw.degree == f.degree,
                         None if fw is None else fw.to_str("X"))]
    same = fw is not None and fw.degree == f.degree and is_member(fw, f)
    certs.append(Certificate("H(f_w)=H(f)", same))
    return fw, certs


def luroth_from_backbone(f: RatFunc, rational_only: bool = False) -> LurothOutcome:
    """Run the case analysis on a given backbone f and certify the result."""
    case, w = _candidate(f, rational_only)
    _, certs = _backbone_certificates(w, f)
    if isinstance(case, General):
        certs.append(Certificate("tau(v)=v", tau_ext(case.v) == case.v, str(case.v)))
        certs.append(Certificate("sigma(v)=v", sigma_ext(case.v) == case.v))
    status = "Generated" if all(c.ok for c in certs) else "Unknown"
    return LurothOutcome(status, w, case, f, certs)


def skew_luroth(gens: Sequence[SkewFrac], rational_only: bool = False) -> LurothOutcome:
    """Single generator of the division ring C(gens) inside C(T, sigma)."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("empty generator list")
    images = [phi(x) for x in gens]
    central = central_luroth(images, witnesses=False)
    if central.status == "Trivial":
        return LurothOutcome("Trivial", None, Constant(), None, central.certificates)
    f = central.f
    try:
        case, w = _candidate(f, rational_only)
    except NotMobiusError as exc:
        verdict = invariance_check(gens)
        status = "NotInvariant" if verdict.verdict == "NotInvariant" else "Unknown"
        return LurothOutcome(status, None, None, f, verdict.certificates, [str(exc)])
    fw, certs = _backbone_certificates(w, f)
    certs.append(Certificate("gens_in_H(f_w)", fw is not None and all(in_H_of_f(u, fw) for u in images)))
    split_l, split_w = splitting(gens), splitting([w])
    invariant = split_l.is_sigma_invariant()
    equal = split_l.same_field(split_w)
    certs.append(Certificate("sigma_invariant", invariant))
    certs.append(Certificate("L=C(w)", equal))
    if invariant and equal and all(c.ok for c in certs):
        return LurothOutcome("Generated", w, case, f, certs)
    verdict = invariance_check(gens, rational_only=rational_only)
    certs.extend(verdict.certificates)
    if verdict.verdict == "NotInvariant":
        return LurothOutcome("NotInvariant", None, case, f, certs,
                             [f"candidate {w} rejected: {verdict.obstruction}"])
    return LurothOutcome("Unknown", None, case, f, certs, ["candidate generator not certified"])


def invariance_check(gens: Sequence[SkewFrac], rational_only: bool = False) -> InvarianceVerdict:
    """Decide whether phi(L) is stable under sigma, L = C(gens)."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("empty generator list")
    certs: list[Certificate] = []
    images = [phi(x) for x in gens]
    central = central_luroth(images, witnesses=False)
    if central.status == "Trivial":
        return InvarianceVerdict("Invariant", None, None, [Certificate("L=C", True)])
    f = central.f
    try:
        case, w = _candidate(f, rational_only)
    except (NotMobiusError, PreconditionError) as exc:
        case, w = None, None
        certs.append(Certificate("candidate", False, str(exc)))

    if all(_is_real_or_imaginary(x) for x in gens):
        certs.append(Certificate("gens_in_R(T)_or_iR(T)", True))
        split_l = splitting(gens)
        if w is not None and split_l.same_field(splitting([w])):
            certs.append(Certificate("L=C(w)", True, str(w)))
            return InvarianceVerdict("Invariant", w, None, certs)
        return InvarianceVerdict("Invariant", None, None, certs)

    # center obstruction for a single generator anticommuting with i
    if len(gens) == 1 and w is not None:
        try:
            differ, ccerts = _center_obstruction(gens[0], w)
        except CenterFormulaError:
            differ, ccerts = False, []
        certs.extend(ccerts)
        if differ:
            return InvarianceVerdict("NotInvariant", None, "centers of C(v) and C(w) differ", certs)

    split_l = splitting(gens)
    if not split_l.is_sigma_invariant():
        if split_l.odd is None:
            why = f"conj({split_l.even_gen.to_str('Y')}) not in L"
        else:
            why = f"sigma_hat maps {split_l.odd.to_str('Y')}*T outside L"
        certs.append(Certificate("splitting_obstruction", True, why))
        return InvarianceVerdict("NotInvariant", None, why, certs)
    certs.append(Certificate("sigma_hat(L)=L", True))
    if w is not None and sigma_hat(w) == w and split_l.same_field(splitting([w])):
        if all(split_l.contains(sigma_hat(x)) for x in gens):
            certs.append(Certificate("L=C(w)", True, str(w)))
            return InvarianceVerdict("Invariant", w, None, certs)
    return InvarianceVerdict("Unknown", None, None, certs)
