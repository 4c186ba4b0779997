"""``skewluroth`` command-line entry point.

Every command prints one JSON document per input (JSON lines when there are
several inputs) with the keys status, case, generator, backbone_f,
certificates and warnings, plus value and timing.  ``--pretty`` prints
unicode text instead.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
violated (including the degree cap), 3 Unknown verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from ..engine import (Certificate, case_summary, center_single, central_luroth, invariance_check,
                      luroth_from_backbone, skew_luroth)
from ..errors import PreconditionError
from ..limits import degree_cap, env_max_degree
from ..quatfunc import central_to_quatfunc, phi, phi_inv
from ..skewfield import untwist_inner
from .evaluate import RINGS, inner_ring, parse_in, parse_quaternion
from .parser import ParseError
from .render import prettify, render

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_doc(status="ok", *, case=None, generator=None, backbone_f=None, certificates=(),
             warnings=(), value=None) -> dict:
    return {
        "status": status,
        "case": case,
        "generator": generator,
        "backbone_f": backbone_f,
        "certificates": [c if isinstance(c, dict) else
                         {"name": c.name, "ok": c.ok, "witness": c.witness} for c in certificates],
        "warnings": list(warnings),
        "value": value,
    }


# -- per-input command bodies (top level so worker processes can run them) --

def _simplify(src: str, ring: str):
    return make_doc(value=render(parse_in(src, RINGS[ring]))), EXIT_OK


def _phi(src: str, _):
    return make_doc(value=render(phi(parse_in(src, RINGS["ctsigma"])))), EXIT_OK


def _phi_inv(src: str, _):
    x = phi_inv(parse_in(src, RINGS["hx"]))
    if x is None:
        return make_doc(warnings=["not in the image of phi"]), EXIT_OK
    return make_doc(value=render(x)), EXIT_OK


def _center(src: str, _):
    c = center_single(parse_in(src, RINGS["ctsigma"]))
    return make_doc(value=render(c, "T")), EXIT_OK


_ITEM_COMMANDS = {"simplify": _simplify, "phi": _phi, "phi-inv": _phi_inv, "center": _center}


def _guard(fn, *args):
    try:
        return fn(*args)
    except (ParseError, UsageError) as exc:
        return make_doc("error", warnings=[str(exc)]), EXIT_USAGE
    except (PreconditionError, ZeroDivisionError) as exc:
        return make_doc("error", warnings=[str(exc)]), EXIT_MATH


def _timed(fn, *args):
    start = time.perf_counter()
    doc, code = _guard(fn, *args)
    doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return doc, code


def _worker(payload):
    name, item, extra, cap = payload
    with degree_cap(cap):
        return _timed(_ITEM_COMMANDS[name], item, extra)


def _run_items(name: str, items: list[str], extra, jobs: int, cap: int):
    payloads = [(name, item, extra, cap) for item in items]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_worker, payloads))
    return [_worker(p) for p in payloads]


# -- whole-command bodies -----------------------------------------------------

def _eq(args):
    ring = RINGS[args.ring]
    a, b = parse_in(args.left, ring), parse_in(args.right, ring)
    return make_doc(value=a == b), EXIT_OK


def _luroth_central(args):
    gens = [central_to_quatfunc(parse_in(src, RINGS["ht"])) for src in args.exprs]
    res = central_luroth(gens)
    f = None if res.f is None else render(res.f, "T")
    return make_doc(res.status, generator=f, backbone_f=f, certificates=res.certificates), EXIT_OK


def _outcome_doc(out):
    code = EXIT_UNKNOWN if out.status == "Unknown" else EXIT_OK
    doc = make_doc(out.status,
                   case=None if out.case is None else case_summary(out.case),
                   generator=None if out.generator is None else render(out.generator),
                   backbone_f=None if out.f is None else render(out.f, "X"),
                   certificates=out.certificates, warnings=out.warnings)
    return doc, code


def _luroth_sigma(args):
    if args.backbone is not None:
        f = parse_in(args.backbone, RINGS["hx"])
        if not f.is_scalar() or any(c for c in f.components()[1:]):
            raise PreconditionError("the backbone must be a rational function of X")
        out = luroth_from_backbone(f.a, rational_only=args.rational_only)
    else:
        if not args.exprs:
            raise UsageError("luroth-sigma needs at least one expression or --backbone")
        gens = [parse_in(src, RINGS["ctsigma"]) for src in args.exprs]
        out = skew_luroth(gens, rational_only=args.rational_only)
    return _outcome_doc(out)


def _invariance(args):
    gens = [parse_in(src, RINGS["ctsigma"]) for src in args.exprs]
    v = invariance_check(gens)
    certs = list(v.certificates)
    warnings = [] if v.obstruction is None else [v.obstruction]
    doc = make_doc(v.verdict, generator=None if v.witness is None else render(v.witness),
                   certificates=certs, warnings=warnings)
    return doc, EXIT_UNKNOWN if v.verdict == "Unknown" else EXIT_OK


def _untwist(args):
    b = parse_quaternion(args.b)
    p = parse_in(args.expr, inner_ring(b))
    if not p.is_polynomial():
        raise PreconditionError("untwist expects a skew polynomial")
    return make_doc(value=render(untwist_inner(p.num, b), "U")), EXIT_OK


def _selftest(args):
    from . import selftest
    results = selftest.run(args.suite, args.jobs)
    certs = [Certificate(name, ok, detail) for name, ok, detail in results]
    ok = all(c.ok for c in certs)
    return make_doc("ok" if ok else "failed", certificates=certs), EXIT_OK if ok else EXIT_MATH


_WHOLE_COMMANDS = {
    "eq": _eq, "luroth-central": _luroth_central, "luroth-sigma": _luroth_sigma,
    "invariance": _invariance, "untwist": _untwist, "selftest": _selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    # SUPPRESS lets the options appear before or after the command name
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="unicode text instead of JSON")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for batch inputs")

    p = _ArgumentParser(prog="skewluroth", description="Lüroth generators in skew fields",
                        parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    rings = sorted(RINGS)

    s = sub.add_parser("simplify", parents=[common], help="canonical form of expressions")
    s.add_argument("exprs", nargs="+")
    s.add_argument("--ring", choices=rings, default="ctsigma")

    s = sub.add_parser("eq", parents=[common], help="compare two expressions")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--ring", choices=rings, default="ctsigma")

    s = sub.add_parser("phi", parents=[common], help="embed C(T,sigma) into H(X)")
    s.add_argument("exprs", nargs="+")
    s = sub.add_parser("phi-inv", parents=[common], help="pull an element of H(X) back")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("luroth-central", parents=[common], help="generator of a subfield of H(T)")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("luroth-sigma", parents=[common], help="generator of a subfield of C(T,sigma)")
    s.add_argument("exprs", nargs="*")
    s.add_argument("--rational-only", action="store_true",
                   help="refuse to adjoin sqrt(alpha) when it is irrational")
    s.add_argument("--backbone", metavar="F", help="run the case analysis on a given f in X")

    s = sub.add_parser("invariance", parents=[common], help="decide sigma-invariance")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("center", parents=[common], help="v^2 for v anticommuting with i")
    s.add_argument("exprs", nargs="+")

    s = sub.add_parser("untwist", parents=[common], help="rewrite H[T, I(b)] with U = b^-1 T")
    s.add_argument("--b", required=True, help="the quaternion b")
    s.add_argument("expr")

    s = sub.add_parser("selftest", parents=[common], help="run the built-in checks")
    s.add_argument("--suite", choices=["examples", "arith", "all"], default="all")
    return p


def _emit(doc: dict, pretty: bool, out) -> None:
    if not pretty:
        print(json.dumps(doc), file=out)
        return
    lines = [f"status: {doc['status']}"]
    for key in ("value", "case", "generator", "backbone_f"):
        if doc.get(key) is not None:
            v = doc[key]
            lines.append(f"{key}: {prettify(v) if isinstance(v, str) else v}")
    for c in doc["certificates"]:
        mark = "✓" if c["ok"] else "✗"
        w = f": {prettify(c['witness'])}" if c["witness"] else ""
        lines.append(f"  {mark} {c['name']}{w}")
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    print("\n".join(lines), file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    # "-T^2" is an expression, not an option; a leading space keeps argparse away
    argv = [" " + a if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]
    try:
        args = build_parser().parse_args(argv)
        args.pretty = getattr(args, "pretty", False)
        args.jobs = getattr(args, "jobs", 1)
        cap = env_max_degree()
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
    except (UsageError, ValueError) as exc:
        print(f"skewluroth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command in _ITEM_COMMANDS:
        extra = getattr(args, "ring", None)
        results = _run_items(args.command, args.exprs, extra, args.jobs, cap)
    else:
        with degree_cap(cap):
            results = [_timed(_WHOLE_COMMANDS[args.command], args)]
    for doc, _ in results:
        _emit(doc, args.pretty, out)
    return max(code for _, code in results)


if __name__ == "__main__":
    sys.exit(main())
