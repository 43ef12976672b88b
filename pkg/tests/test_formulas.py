from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defpow.core import BadBound, BadRing, BadSample
from defpow.formulas import (
    TheoremBacked,
    build_Lp,
    decide_alpha_zxz,
    decide_gamma,
    decide_Lp,
    decide_lpow,
    decide_phi,
    decide_pow,
    decide_theta,
    default_P_sample,
    determinant,
    geometric_sum,
    in_T,
    in_U,
    is_constant_function,
    powconst_criterion,
    psi,
    vandermonde,
    vandermonde_product,
)
from defpow.logic import ExplicitList, Lit, OraclePred, PolyBox, Var, evaluate
from defpow.poly import poly_box, polyring
from defpow.rings import ZT_QUOTIENT_SPEC, build


def test_psi_over_zmod4(Z4):
    phi = psi(Var("f"), Var("s"), "g", ExplicitList(Z4.elements(), True))
    assert evaluate(phi, Z4, {"f": Z4.one(), "s": Z4.from_int(3)}).is_true


def test_psi_box_never_false_for_square(Zx):
    x = Zx.x()
    phi = psi(Var("f"), Var("s"), "g", PolyBox(2))
    assert not evaluate(phi, Zx, {"f": x * x, "s": x}).is_false


def test_generic_psi_agrees_with_decider_on_finite_ring(Z4):
    dom = ExplicitList(Z4.elements(), True)
    phi = psi(Var("f"), Var("s"), "g", dom)
    for f in Z4.elements():
        for p in Z4.elements():
            generic = evaluate(phi, Z4, {"f": f, "s": p})
            assert generic.is_true == decide_lpow(f, p).verdict.is_true


def test_lpow_examples(Zx):
    x = Zx.x()
    v = decide_lpow(x ** 3, x)
    assert v.verdict.is_true and v.exact
    v = decide_lpow(x * x, x * x)
    assert v.verdict.is_false and v.exact
    assert decide_lpow(Zx.zero(), x).verdict.is_false
    assert isinstance(decide_lpow(x ** 3, x).exactness, TheoremBacked)


def test_quotient_ring_lpow():
    R = build(ZT_QUOTIENT_SPEC)
    t = R.symbols["tbar"]
    assert decide_lpow(t, t).verdict.is_true
    members = {str(f) for a in range(-6, 7) for b in (0, 1)
               if decide_lpow(f := R.from_int(a) + R.from_int(b) * t, t).verdict.is_true}
    assert members == {str(R.one()), str(t)}


def test_pow_examples(Zx, P2):
    x = Zx.x()
    tv = decide_pow(x ** 4, x)
    assert tv.is_true and tv.evidence["exponent"] == 4
    assert decide_pow(2 * x, x).is_false
    tv = decide_pow(P2.from_tuple((25, 1)), P2.from_tuple((5, 1)))
    assert tv.is_true and tv.evidence["exponent"] == 2
    with pytest.raises(BadBound):
        decide_pow(x, x, 0)


def test_T_and_U(Zx):
    x = Zx.x()
    assert in_U(x).is_true
    assert in_U(-x + 3).is_true
    assert in_T(Zx.one()).is_false


def test_extraction_examples(Zx):
    x = Zx.x()
    items = [Zx.from_int(n) for n in range(7)] + [x, x + 1]
    alpha = OraclePred("constant", (Var("t"),))
    phi = build_Lp(x, alpha, OraclePred("in_pow", (Var("y"), Lit(x))), 8)
    truth = [t for t in items if evaluate(phi, Zx, {"t": t}).is_true]
    assert truth == [Zx.from_int(n) for n in range(1, 7)]
    for t in items:
        assert decide_Lp(t, x).is_true == (t in truth)


def test_geometric_sum(Zx):
    x = Zx.x()
    assert geometric_sum(x, 3) == x * x + x + 1
    for n in range(1, 6):
        assert x ** n - 1 == geometric_sum(x, n) * (x - 1)


def test_phi_and_theta(P2x):
    x = P2x.x()
    two = P2x.from_int(2)
    assert decide_phi(two, two, P2x.from_int(4), x).is_true
    sample = [x, -x + 1, x + 2]
    tv = decide_theta(P2x.from_int(3), sample)
    assert tv.is_true and tv.evidence["z"] == P2x.from_int(8)
    assert decide_theta(x, sample).is_false
    assert len(default_P_sample(P2x)) == 5
    with pytest.raises(BadRing):
        decide_theta(polyring(build("zmod:5")).one())


def test_powconst(P2x):
    x = P2x.x()
    a = P2x.from_tuple((2, 2))
    tv = powconst_criterion(a ** 3, a, [(x, -x + 1)])
    assert tv.is_true and tv.evidence["n"] == 3
    assert powconst_criterion(x, a, [(x, -x + 1)]).is_false
    assert powconst_criterion(a, a, [(x, -x + 1)]).is_true
    with pytest.raises(BadSample):
        powconst_criterion(a, a, [])


def test_example_formula_deciders(P2x):
    assert decide_gamma(P2x.from_tuple((4, 4))).is_true
    assert decide_alpha_zxz(P2x.from_tuple((3, 3))).is_true


def test_constant_functions(Zx, P2x):
    assert is_constant_function(Zx.x() ** 2, [Zx.base.from_int(0), Zx.base.from_int(1)]).is_false
    R = polyring(build("quot:2t"))
    t = R.lift(R.base.symbols["t"])
    f = t * (R.x() ** 2 + R.x())
    assert is_constant_function(f, [R.base.from_int(c) for c in range(-3, 4)]).is_unknown
    assert is_constant_function(P2x.from_tuple((2, 2)), P2x.base.sample()[:4]).is_true


@pytest.mark.parametrize("spec", ["z", "zmod:7", "bool:2"])
def test_vandermonde_identity(spec):
    ring = build(spec)
    pts = ring.sample()[:4]
    for k in range(1, len(pts) + 1):
        assert determinant(vandermonde(pts[:k])) == vandermonde_product(pts[:k])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_lpow_x_equals_pow_x_over_integers(coeffs):
    R = polyring(build("z"))
    f = R.from_coeffs(coeffs)
    x = R.x()
    v = decide_lpow(f, x)
    assert v.exact
    assert v.verdict.is_true == decide_pow(f, x, 8).is_true


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 1)), min_size=1, max_size=4))
def test_lpow_x_equals_pow_x_over_parity(pairs):
    R = polyring(build("parity2"))
    f = R.from_coeffs([(a, a + 2 * b) for a, b in pairs])
    x = R.x()
    v = decide_lpow(f, x)
    assert v.verdict.is_true == decide_pow(f, x, 8).is_true


def test_unit_closure_on_zmod4_box(Z4x):
    """f in lpow(p) and p - 1 | u - 1 for a unit u give u f in lpow(p)."""
    base = Z4x.base
    units = [f for f in poly_box(Z4x, 1, base.elements()) if Z4x.is_unit(f).is_true]
    for p in (Z4x.x(), Z4x.x() + 1):
        members = [f for f in poly_box(Z4x, 1, base.elements()) if decide_lpow(f, p).verdict.is_true]
        for f in members:
            for u in units:
                if Z4x.divides(p - 1, u - 1).is_true:
                    assert not decide_lpow(u * f, p).verdict.is_false


def test_poly_box_domain_mismatch(Z4):
    with pytest.raises(BadRing):
        evaluate(psi(Var("f"), Var("s"), "g", PolyBox(1)), Z4, {"f": Z4.one(), "s": Z4.one()})
