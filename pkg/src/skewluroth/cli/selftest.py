"""Built-in self-test corpus for ``skewluroth selftest``."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from ..engine import General, center_single, invariance_check, luroth_from_backbone, sigma_case_analysis
from ..quatfunc import QuatFunc, phi, phi_inv, sigma_ext, tau_ext
from ..ratfunc import RatFunc
from ..sampling import (eval_tree, rand_expr_tree, rand_skewfrac, rand_skewpoly, rand_tau_fixed,
                        rand_parity_violating, rand_quaternion)
from ..scalars import I, QJ, Quaternion
from ..skewfield import CENTRAL, GAUSS, SkewFrac, SkewPoly, TwistConfig, lclm, lcrm, right_divmod, untwist_inner

_T = SkewFrac.t(GAUSS)
_I = SkewFrac.const(GAUSS, I)
_X = RatFunc.x()


def _phi_values():
    j, k, x = QuatFunc(0, 0, 1), QuatFunc(0, 0, 0, 1), QuatFunc.x()
    return phi(_T) == j * x and phi(_T + _I * _T ** 3) == j * x - k * x ** 3, "phi(T), phi(T+i*T^3)"


def _prop_obstruction():
    v = invariance_check([_T + _I * _T ** 3])
    found = {c.name: c.witness for c in v.certificates}
    ok = (v.verdict == "NotInvariant" and found.get("v_squared") == "T^6+T^2"
          and found.get("center_degree") == "3")
    return ok, f"{v.verdict}, center degree {found.get('center_degree')}"


def _sigma_of_image():
    j, k, x = QuatFunc(0, 0, 1), QuatFunc(0, 0, 0, 1), QuatFunc.x()
    return sigma_ext(j * x - k * x ** 3) == j * x + k * x ** 3, "sigma(jX-kX^3)"


def _branches():
    cases = [sigma_case_analysis(f).name for f in (_X ** 2, _X ** 3, (1 + _X) / (1 - _X))]
    g = sigma_case_analysis((1 + _X) / (1 - _X))
    ok = cases == ["Symmetric", "AntiSymmetric", "General"] and isinstance(g, General)
    ok = ok and g.alpha == 1 and g.v == QuatFunc(0, 0, -_X)
    ok = ok and all(luroth_from_backbone(f).status == "Generated"
                    for f in (_X ** 2, _X ** 3, (1 + _X) / (1 - _X)))
    return ok, ", ".join(cases)


def _examples_invariant():
    verdicts = [invariance_check([x]).verdict for x in (_I * _T, _T * _T)]
    return verdicts == ["Invariant", "Invariant"], ", ".join(verdicts)


def _center_values():
    t = RatFunc.x()
    vals = [center_single(v) for v in (_T + _I * _T ** 3, _T, _I * _T)]
    return vals == [t ** 2 + t ** 6, t ** 2, t ** 2], ", ".join(v.to_str("T") for v in vals)


def _untwist_examples():
    cfg = TwistConfig.inner(QJ)
    t = SkewPoly.t(cfg)
    ok = untwist_inner(t, QJ) == SkewPoly(CENTRAL, [0, QJ])
    ok = ok and untwist_inner(SkewPoly.const(cfg, Quaternion(0, 1)) * t, QJ) == SkewPoly(CENTRAL, [0, Quaternion(0, 0, 0, 1)])
    return ok, "T = j*U, i*T = k*U"


def _random_phi_hom():
    rng = random.Random(11)
    for _ in range(50):
        p, q = rand_skewpoly(rng, 4), rand_skewpoly(rng, 4)
        if phi(p * q) != phi(p) * phi(q):
            return False, f"{p} * {q}"
    return True, "50 pairs"


def _random_commutation():
    rng = random.Random(12)
    j = QuatFunc(0, 0, 1)
    for _ in range(50):
        u = phi(rand_skewfrac(rng, 2, 3))
        if j * u != sigma_ext(u) * j:
            return False, str(u)
    return True, "50 fractions"


def _random_oracle():
    rng = random.Random(13)
    n = 0
    while n < 30:
        tree = rand_expr_tree(rng, 4)
        a = eval_tree(tree, lambda p: SkewFrac(p), None)
        b = eval_tree(tree, phi, None)
        if (a is None) != (b is None):
            return False, "zero mismatch"
        if a is None:
            continue
        n += 1
        if phi(a) != b or phi_inv(b) != a:
            return False, str(a)
    return True, "30 trees"


def _random_ore():
    rng = random.Random(14)
    for _ in range(50):
        a, b = rand_skewpoly(rng, 4, nonzero=True), rand_skewpoly(rng, 4, nonzero=True)
        q, r = right_divmod(a, b)
        m, u, v = lcrm(a, b)
        ml, ul, vl = lclm(a, b)
        if q * b + r != a or a * u != b * v or ul * a != vl * b:
            return False, f"{a}, {b}"
    return True, "50 pairs"


def _random_fixed_ring():
    rng = random.Random(15)
    for _ in range(30):
        u = rand_tau_fixed(rng)
        x = phi_inv(u)
        if x is None or phi(x) != u or tau_ext(u) != u:
            return False, str(u)
        w = rand_parity_violating(rng)
        if phi_inv(w) is not None or tau_ext(w) == w:
            return False, str(w)
    return True, "30 + 30 elements"


def _random_untwist():
    rng = random.Random(16)
    cfg = TwistConfig.inner(QJ)
    for _ in range(20):
        p = SkewPoly(cfg, rand_skewpoly(rng, 3, 5, CENTRAL).coeffs)
        q = SkewPoly(cfg, rand_skewpoly(rng, 3, 5, CENTRAL).coeffs)
        if untwist_inner(p * q, QJ) != untwist_inner(p, QJ) * untwist_inner(q, QJ):
            return False, f"{p}, {q}"
        c = rand_quaternion(rng)
        ut = SkewPoly.const(cfg, QJ.inv()) * SkewPoly.t(cfg)
        if ut * SkewPoly.const(cfg, c) != SkewPoly.const(cfg, c) * ut:
            return False, str(c)
    return True, "20 pairs"


SUITES = {
    "examples": {
        "phi_values": _phi_values,
        "sigma_of_image": _sigma_of_image,
        "noninvariance_obstruction": _prop_obstruction,
        "branch_corpus": _branches,
        "invariant_examples": _examples_invariant,
        "center_values": _center_values,
        "untwist_examples": _untwist_examples,
    },
    "arith": {
        "phi_homomorphism": _random_phi_hom,
        "j_commutation": _random_commutation,
        "oracle_equivalence": _random_oracle,
        "euclid_ore": _random_ore,
        "fixed_ring": _random_fixed_ring,
        "untwist_products": _random_untwist,
    },
}


def _run_one(key):
    suite, name = key
    try:
        ok, detail = SUITES[suite][name]()
    except Exception as exc:  # a crash is a failed check, not a crashed runner
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return f"{suite}.{name}", bool(ok), detail


def run(suite: str = "all", jobs: int = 1) -> list[tuple[str, bool, str]]:
    names = [(s, n) for s in SUITES if suite in ("all", s) for n in SUITES[s]]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, names))
    return [_run_one(k) for k in names]
