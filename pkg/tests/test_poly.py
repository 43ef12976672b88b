from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from defpow.core import BadBound, check_indecomposable
from defpow.poly import (
    is_irreducible,
    max_power_dividing,
    poly_box,
    poly_divides,
    poly_is_unit,
    polyring,
    x_irreducible,
)
from defpow.rings import build


def test_arithmetic(Zx, Z4x):
    x = Zx.x()
    assert (x - 1) * (x * x + x + 1) == x ** 3 - 1
    assert ((1 + 2 * Z4x.x()) * (1 - 2 * Z4x.x())).is_one()


def test_evaluation_at_integers():
    R = polyring(build("quot:2t"))
    t = R.base.symbols["t"]
    f = R.lift(t) * (R.x() ** 2 + R.x())
    assert R.evaluate(f, 3).is_zero() and not f.is_zero()


def test_divides(Zx, Z4x, P2x):
    x = Zx.x()
    assert poly_divides(x - 1, x ** 3 - 1).is_true
    tv = poly_divides(2 * Z4x.x() + 1, Z4x.one())
    assert tv.is_true and tv.evidence == 1 - 2 * Z4x.x()
    assert poly_divides(P2x.x(), P2x.x() ** 2).is_true
    with pytest.raises(BadBound):
        poly_divides(x, x, -1)


def test_max_power_dividing(Zx):
    x = Zx.x()
    assert max_power_dividing(x, x ** 3 + x ** 2, 8).exponent == 2
    assert max_power_dividing(x, Zx.from_int(5), 8).exponent == 0
    R = polyring(build("prod(z,z)"))
    e = R.from_tuple((1, 0))
    for cap in (3, 8):
        assert max_power_dividing(e, e, cap).infinite_suspected


def test_x_irreducible():
    assert x_irreducible(build("z")).is_true
    tv = x_irreducible(build("prod(z,z)"))
    assert tv.is_false
    g, h = tv.evidence["factors"]
    R = g.ring
    assert g * h == R.x()
    assert x_irreducible(build("zmod:4")).is_true


def test_units(Zx, Z4x, P2x):
    assert poly_is_unit(Zx.from_int(-1)).is_true
    assert poly_is_unit(Zx.x() + 1).is_false
    assert poly_is_unit(1 + 2 * Z4x.x()).is_true
    assert poly_is_unit(P2x.from_tuple((1, -1))).is_true


def test_box_order(Zx):
    box = list(poly_box(Zx, 1, [Zx.base.from_int(c) for c in (0, 1)]))
    assert [str(f) for f in box] == ["0", "1", "x", "x + 1"]


@pytest.mark.parametrize("spec", ["bool:2", "bool:3", "zmod:6", "zmod:10"])
def test_field_product_irreducibility_against_search(spec):
    R = polyring(build(spec))
    els = R.base.elements()
    for f in poly_box(R, 1, els):
        tv = is_irreducible(f)
        assert tv.known
        if tv.is_false and isinstance(tv.evidence, dict):
            g, h = tv.evidence["factors"]
            assert g * h == f and poly_is_unit(g).is_false and poly_is_unit(h).is_false
        if tv.is_true:
            # no factorization into nonunits of degree <= 1
            for g in poly_box(R, 1, els):
                for h in poly_box(R, 1, els):
                    if g * h == f:
                        assert poly_is_unit(g).is_true or poly_is_unit(h).is_true


def test_x_irreducible_matches_indecomposable(finite_ring):
    assert x_irreducible(finite_ring).is_true == check_indecomposable(finite_ring).is_true


coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@settings(max_examples=150, deadline=None)
@given(coeffs, coeffs)
def test_integer_division_matches_sympy(a, b):
    R = polyring(build("z"))
    X = sympy.Symbol("x")
    g, f = R.from_coeffs(a), R.from_coeffs(b)
    if g.is_zero():
        return
    prod = g * f
    tv = poly_divides(g, prod)
    assert tv.is_true and g * tv.evidence == prod
    sg = sympy.Poly(list(reversed(a)), X, domain="ZZ")
    sf = sympy.Poly(list(reversed(b)), X, domain="ZZ")
    q, r = sympy.div(sf, sg, domain="QQ")
    exact = r.is_zero and all(c.is_integer for c in q.all_coeffs())
    assert poly_divides(g, f).is_true == exact


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_zmod4_division_evidence(a, b):
    R = polyring(build("zmod:4"))
    g, f = R.from_coeffs(a), R.from_coeffs(b)
    tv = poly_divides(g, f)
    if tv.is_true:
        assert g * tv.evidence == f
