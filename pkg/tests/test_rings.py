from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defpow.core import BadSpec, check_indecomposable, check_reduced
from defpow.rings import CATALOG, ZT_QUOTIENT_SPEC, build


@pytest.mark.parametrize("family,example,description", CATALOG)
def test_catalog_round_trip(family, example, description):
    ring = build(example)
    assert build(ring.spec).spec == ring.spec


def test_catalog_has_ten_families():
    assert len(CATALOG) == 10


def test_characteristics():
    assert build("zmod:4").characteristic == 4
    assert build("parity2").characteristic == 0


def test_quotient_shift_squares_to_zero():
    R = build(ZT_QUOTIENT_SPEC)
    t = R.symbols["tbar"]
    assert ((t - 1) ** 2).is_zero() and not (t - 1).is_zero()
    assert R.divides(t - 1, R.from_int(-1)).is_false


def test_parity_division(P2):
    tv = P2.divides(P2.from_tuple((2, 2)), P2.from_tuple((6, 2)))
    assert tv.is_true and tv.evidence == P2.from_tuple((3, 1))
    assert P2.divides(P2.from_tuple((2, 2)), P2.from_tuple((4, 2))).is_false


def test_dual_numbers_self_division():
    R = build("fpz2:3")
    z = R.symbols["zbar"]
    assert R.divides(z, z).is_true


def test_zt_mod_2t_units():
    R = build("quot:2t")
    t = R.symbols["t"]
    assert sorted(str(u) for u in R.units()) == sorted(str(v) for v in (R.one(), -R.one()))
    assert R.is_unit(1 + t).is_false


def test_bad_specs():
    for spec in ("zork", "zmod:x", "zmod:", "prod(z"):
        with pytest.raises(BadSpec):
            build(spec)


@pytest.mark.parametrize("spec", ["parity2", "parity:3", "z", "zmod:5", "zmod:7"])
def test_reduced_indecomposable_tagged(spec):
    ring = build(spec)
    assert check_reduced(ring).is_true and check_indecomposable(ring).is_true


@pytest.mark.parametrize("spec", ["zmod:4", "fpz2:2", "fpz2:5", "trunc:1", "trunc:2"])
def test_not_reduced_with_witness(spec):
    ring = build(spec)
    tv = check_reduced(ring)
    assert tv.is_false and tv.evidence is not None


@pytest.mark.parametrize("spec", ["bool:2", "bool:3", "prod(z,z)", "zmod:6"])
def test_decomposable_with_witness(spec):
    assert check_indecomposable(build(spec)).is_false


@settings(max_examples=100, deadline=None)
@given(st.integers(-6, 6), st.integers(0, 1), st.integers(-6, 6), st.integers(0, 1))
def test_quotient_ring_arithmetic(a, b, c, d):
    R = build(ZT_QUOTIENT_SPEC)
    t = R.symbols["tbar"]
    u = R.from_int(a) + R.from_int(b) * t
    v = R.from_int(c) + R.from_int(d) * t
    assert u * v == v * u
    assert (t * t).is_one()
    assert u * (v + t) == u * v + u * t
