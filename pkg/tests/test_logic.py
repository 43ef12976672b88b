from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import bformula, random_sentence
from defpow.core import UnboundVar
from defpow.logic import (
    And,
    Exists,
    ExplicitList,
    Forall,
    Lit,
    Not,
    Or,
    ParseError,
    PolyBox,
    Var,
    evaluate,
    free_vars,
    parse,
    pretty,
    substitute,
)
from defpow.rings import build


def test_additive_inverses(Z4):
    tv = evaluate(parse("forall a . exists b . a+b=0"), Z4)
    assert tv.is_true


def test_square_root_witness(Zx):
    phi = parse("exists g in poly(deg<=1; coeffs={-2..2}) . g*g = x^2")
    assert phi == Exists("g", PolyBox(1, tuple(range(-2, 3))), parse("g*g = x^2"))
    tv = evaluate(phi, Zx)
    assert tv.is_true
    x = Zx.x()
    assert tv.evidence["g"] in (x, -x)


def test_incomplete_box_is_unknown(Zx):
    tv = evaluate(parse("exists g in poly(deg<=1; coeffs={-2..2}) . g*g = x"), Zx)
    assert tv.is_unknown


def test_unbound_variable(Z4):
    with pytest.raises(UnboundVar):
        evaluate(parse("a = 0"), Z4)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("0 ==")
    with pytest.raises(ParseError):
        parse("exists . a = 0")


@pytest.mark.parametrize("text", [
    "forall a . exists b . a+b=0",
    "exists g in poly(deg<=1; coeffs={-2..2}) . g*g = x^2",
    "a | b && !(a = 1) -> b = 0",
    "forall a in list(0, 1, 2; complete) . a*a != 3",
    "psi(x^2, x)",
])
def test_pretty_round_trip(text):
    phi = parse(text)
    assert parse(pretty(phi)) == phi


def test_substitution_avoids_capture():
    phi = parse("exists b . a + b = 0")
    out = substitute(phi, {"a": Var("b")})
    assert free_vars(out) == {"b"}


def test_soundness_against_brute_force(Z4):
    rng = random.Random(11)
    for _ in range(200):
        phi = random_sentence(rng)
        tv = evaluate(phi, Z4)
        if tv.known:
            assert tv.is_true == bformula(phi, {}, 4)


@pytest.mark.parametrize("seed", range(5))
def test_negation_laws(Z4, seed):
    rng = random.Random(seed)
    for _ in range(50):
        a, b = random_sentence(rng, 2), random_sentence(rng, 2)
        va = evaluate(a, Z4)
        assert evaluate(Not(Not(a)), Z4).verdict == va.verdict
        lhs = evaluate(Not(And(a, b)), Z4).verdict
        rhs = evaluate(Or(Not(a), Not(b)), Z4).verdict
        assert lhs == rhs


def test_prenex_preserves_verdict(Z4):
    left = parse("(forall a . a = a) && (exists b . b*b = 0)")
    right = parse("forall a . exists b . a = a && b*b = 0")
    assert evaluate(left, Z4).verdict == evaluate(right, Z4).verdict


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5, unique=True), st.integers(-3, 3))
def test_domain_monotonicity(values, extra):
    """Enlarging a witness domain never flips a two-valued verdict."""
    Zx = build("poly:z")
    small = ExplicitList(tuple(Lit(Zx.from_int(v)) for v in values))
    large = ExplicitList(tuple(Lit(Zx.from_int(v)) for v in values + [extra]))
    for body in (parse("g = g"), parse("g*g = 4"), parse("g | 4")):
        for q in (Exists, Forall):
            a = evaluate(q("g", small, body), Zx)
            b = evaluate(q("g", large, body), Zx)
            if a.known:
                assert b.verdict == a.verdict
