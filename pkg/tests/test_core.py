from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defpow.core import (
    BadBound,
    Budget,
    MixedRingError,
    TruthValue,
    Verdict,
    check_indecomposable,
    check_reduced,
    is_idempotent,
    square_is_zero,
)
from defpow.rings import build


def test_integer_arithmetic(Z):
    assert Z.from_int(2) + Z.from_int(3) == Z.from_int(5)


def test_zmod4_product(Z4):
    assert (Z4.from_int(2) * Z4.from_int(2)).is_zero()


def test_parity_product(P2):
    assert P2.from_tuple((2, 2)) * P2.from_tuple((3, 1)) == P2.from_tuple((6, 2))


def test_units(Z, Z4, P2):
    assert Z.is_unit(Z.from_int(-1)).is_true
    tv = Z4.is_unit(Z4.from_int(3))
    assert tv.is_true and tv.evidence == Z4.from_int(3)
    assert P2.is_unit(P2.from_tuple((1, -1))).is_true
    assert Z.is_unit(Z.from_int(2)).is_false


def test_divides(Z, Z4):
    tv = Z.divides(Z.from_int(3), Z.from_int(24))
    assert tv.is_true and tv.evidence == Z.from_int(8)
    assert Z.divides(Z.zero(), Z.from_int(5)).is_false
    tv = Z4.divides(Z4.from_int(2), Z4.from_int(2))
    assert tv.is_true and Z4.from_int(2) * tv.evidence == Z4.from_int(2)


def test_idempotent_and_square_zero():
    assert is_idempotent(build("zmod:6").from_int(3))
    assert square_is_zero(build("zmod:4").from_int(2))
    assert not is_idempotent(build("z").from_int(2))


@pytest.mark.parametrize("spec,reduced,indecomposable", [
    ("zmod:4", False, True),
    ("parity2", True, True),
    ("bool:3", True, False),
    ("z", True, True),
    ("zmod:5", True, True),
    ("prod(z,z)", True, False),
    ("fpz2:3", False, True),
    ("trunc:2", False, True),
])
def test_structure_checks(spec, reduced, indecomposable):
    ring = build(spec)
    red, ind = check_reduced(ring), check_indecomposable(ring)
    assert red.is_true == reduced and ind.is_true == indecomposable
    if not reduced and ring.is_finite:
        assert red.evidence is not None
    if spec == "bool:3":
        e = ind.evidence
        assert is_idempotent(e) and not e.is_zero() and not e.is_one()


def test_reduced_matches_square_zero(finite_ring):
    square_zero = any(square_is_zero(a) and not a.is_zero() for a in finite_ring.elements())
    assert check_reduced(finite_ring).is_true == (not square_zero)


def test_finite_ring_axioms(finite_ring):
    els = finite_ring.elements()
    if len(els) > 8:
        els = els[:8]
    one, zero = finite_ring.one(), finite_ring.zero()
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a and a + b == b + a
    for a in els:
        assert a * one == a and a + zero == a and (a - a).is_zero()


def test_truth_value_contract():
    with pytest.raises(TypeError):
        bool(TruthValue.unknown())
    with pytest.raises(ValueError):
        TruthValue(Verdict.TRUE)
    assert TruthValue.true(cite="x").negate().is_false
    assert TruthValue.unknown().negate().is_unknown


def test_budget_validation():
    with pytest.raises(BadBound):
        Budget(exp_cap=0)
    with pytest.raises(BadBound):
        Budget(coeff_box=(3, -3))


def test_mixed_rings_rejected(Z, Z4):
    with pytest.raises(MixedRingError):
        Z.add(Z.one(), Z4.one())


small_ints = st.integers(-50, 50)


@settings(max_examples=200, deadline=None)
@given(small_ints, small_ints, small_ints)
def test_integer_axioms(a, b, c):
    Z = build("z")
    x, y, z = Z.from_int(a), Z.from_int(b), Z.from_int(c)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)


parity = st.tuples(small_ints, small_ints).filter(lambda t: (t[0] - t[1]) % 2 == 0)


@settings(max_examples=200, deadline=None)
@given(parity, parity, parity)
def test_parity_axioms_and_divisibility(a, b, c):
    P = build("parity2")
    x, y, z = P.from_tuple(a), P.from_tuple(b), P.from_tuple(c)
    assert x * (y + z) == x * y + x * z
    assert P.divides(x, x * y).is_true
    # a | b and a | c imply a | b + c
    if P.divides(x, y).is_true and P.divides(x, z).is_true:
        assert P.divides(x, y + z).is_true
    # transitivity on True instances
    if P.divides(x, y).is_true and P.divides(y, z).is_true:
        assert P.divides(x, z).is_true


@pytest.mark.parametrize("spec", ["zmod:6", "zmod:8", "bool:2", "fpz2:3", "trunc:2", "prod(zmod:2,zmod:3)"])
def test_divides_transitive_exhaustive(spec):
    ring = build(spec)
    els = ring.elements()
    rel = {(a.payload, b.payload) for a in els for b in els if ring.divides(a, b).is_true}
    for a in els:
        assert (a.payload, a.payload) in rel
    for (a, b) in rel:
        for (b2, c) in rel:
            if b == b2:
                assert (a, c) in rel
