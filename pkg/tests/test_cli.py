import io
import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from skewluroth.cli import main
from skewluroth.cli.evaluate import RINGS, parse_in
from skewluroth.cli.parser import Bin, Num, ParseError, Pow, Sym, parse
from skewluroth.cli.render import render
from skewluroth.quatfunc import QuatFunc, phi
from skewluroth.ratfunc import RatFunc
from skewluroth.sampling import eval_tree, rand_expr_tree, rand_ratfunc, rand_skewfrac
from skewluroth.scalars import GaussRat
from skewluroth.skewfield import GAUSS, SkewFrac, SkewPoly

X = RatFunc.x()
seeds = st.integers(0, 2 ** 32 - 1)
KEYS = {"status", "case", "generator", "backbone_f", "certificates", "warnings"}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    docs = [json.loads(line) for line in out.getvalue().splitlines() if line.startswith("{")]
    return code, docs, out.getvalue()


def test_parse_examples():
    T, i = Sym("T"), Sym("i")
    assert parse("T^2 + i*T") == Bin("+", Pow(T, 2), Bin("*", i, T))
    assert parse("i*T") != parse("T*i")
    assert parse("(T+1)/(T-1)") == Bin("/", Bin("+", T, Num(1)), Bin("-", T, Num(1)))


@pytest.mark.parametrize("src", ["T T", "T^-1", "(T", "T+", "T^x", "2 3"])
def test_parse_errors(src):
    with pytest.raises(ParseError):
        parse(src)


def test_unknown_symbol():
    with pytest.raises(ParseError):
        parse_in("j*T", RINGS["ctsigma"])


def test_eval_examples():
    assert parse_in("T*i", RINGS["ctsigma"]) == SkewFrac(SkewPoly(GAUSS, [0, GaussRat(0, -1)]))
    assert parse_in("j*X - k*X^3", RINGS["hx"]).components() == (0, 0, X, -X ** 3)
    with pytest.raises(ZeroDivisionError):
        parse_in("1/0", RINGS["ctsigma"])


def test_json_schema_and_values():
    code, [doc], _ = run("phi", "T")
    assert code == 0 and KEYS <= set(doc) and doc["value"] == "j*X"
    code, [doc], _ = run("phi", "T+i*T^3")
    assert doc["value"] == "j*X-k*X^3"
    code, [doc], _ = run("simplify", "T*i")
    assert doc["value"] == "-i*T"
    code, [doc], _ = run("eq", "(T*T)/T", "T")
    assert doc["value"] is True


def test_batch_inputs_are_json_lines():
    code, docs, _ = run("phi", "T", "T^2", "i")
    assert code == 0 and [d["value"] for d in docs] == ["j*X", "-X^2", "i"]


def test_negative_leading_expression():
    code, [doc], _ = run("simplify", "-T^2")
    assert code == 0 and doc["value"] == "-T^2"


def test_invariance_command():
    code, [doc], _ = run("invariance", "T+i*T^3")
    assert code == 0 and doc["status"] == "NotInvariant"
    certs = {c["name"]: c["witness"] for c in doc["certificates"]}
    assert certs["v_squared"] == "T^6+T^2" and certs["center_degree"] == "3"


def test_luroth_commands():
    code, [doc], _ = run("luroth-sigma", "T^2")
    assert doc["status"] == "Generated" and doc["generator"] == "-T^2"
    assert doc["case"].startswith("Symmetric")
    code, [doc], _ = run("luroth-sigma", "--backbone", "(1+X)/(1-X)")
    assert doc["status"] == "Generated" and doc["generator"] == "-T"
    assert doc["case"].startswith("General")
    code, [doc], _ = run("luroth-central", "-T^2", "T^4")
    assert doc["status"] == "Generated" and doc["backbone_f"] == "T^2"


def test_center_and_untwist():
    code, [doc], _ = run("center", "T+i*T^3")
    assert doc["value"] == "T^6+T^2"
    code, [doc], _ = run("untwist", "--b", "j", "i*T")
    assert doc["value"] == "k*U"


def test_phi_inv_absence_is_a_warning():
    code, [doc], _ = run("phi-inv", "j")
    assert code == 0 and doc["value"] is None and doc["warnings"]
    code, [doc], _ = run("phi-inv", "j*X")
    assert doc["value"] == "T"


def test_exit_codes():
    assert run("simplify", "T T")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("simplify", "1/0")[0] == 2
    assert run("center", "T^2")[0] == 2
    assert run("--jobs", "0", "phi", "T")[0] == 1


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("SKEWLUROTH_MAX_DEGREE", "4")
    code, [doc], _ = run("simplify", "T^9")
    assert code == 2 and doc["status"] == "error"
    monkeypatch.setenv("SKEWLUROTH_MAX_DEGREE", "20")
    assert run("simplify", "T^9")[0] == 0


def test_pretty_output():
    code, _, text = run("--pretty", "phi", "T+i*T^3")
    assert code == 0 and "jX − kX³" in text
    code, _, text2 = run("phi", "T+i*T^3", "--pretty")
    assert text == text2


def test_jobs_match_serial():
    exprs = ["T", "T^2+i", "(T+i)/(T-1)", "i*T^3"]
    serial = [d["value"] for d in run("phi", *exprs)[1]]
    parallel = [d["value"] for d in run("--jobs", "2", "phi", *exprs)[1]]
    assert serial == parallel


def test_selftest_passes():
    code, [doc], _ = run("selftest", "--suite", "examples")
    assert code == 0 and doc["status"] == "ok"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewluroth", "phi", "T"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == "j*X"


@settings(max_examples=50)
@given(seeds)
def test_render_parse_round_trip(seed):
    rng = random.Random(seed)
    x = rand_skewfrac(rng, 3, 5)
    assert parse_in(render(x), RINGS["ctsigma"]) == x
    u = QuatFunc(*(rand_ratfunc(rng, 2, 4) for _ in range(4)))
    assert parse_in(render(u), RINGS["hx"]) == u


def _tree_src(tree, leaf):
    tag = tree[0]
    if tag == "leaf":
        return f"({leaf(tree[1])})"
    if tag == "inv":
        return f"(1/{_tree_src(tree[1], leaf)})"
    return f"({_tree_src(tree[1], leaf)}{tag}{_tree_src(tree[2], leaf)})"


@settings(max_examples=30)
@given(seeds)
def test_eval_respects_phi(seed):
    tree = rand_expr_tree(random.Random(seed), 4)
    direct = eval_tree(tree, SkewFrac, None)
    if direct is None:
        return
    via_t = parse_in(_tree_src(tree, render), RINGS["ctsigma"])
    via_x = parse_in(_tree_src(tree, lambda p: render(phi(p))), RINGS["hx"])
    assert via_t == direct and phi(via_t) == via_x
