from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from defpow.core import BadSpec, ZeroElement
from defpow.formulas import decide_pow
from defpow.qplane import qp_decide_lpow_x, qp_extract, right_divides, twist
from defpow.rings import build

ZQ = "qplane:D=Z,q=2"
F5Q = "qplane:D=Fp(5),q=2"


def naive_mul(f: dict, g: dict, q: int) -> dict:
    """x^a y^b * x^c y^d = q^(b c) x^(a+c) y^(b+d), since y x = q x y."""
    out: dict = {}
    for (a, b), u in f.items():
        for (c, d), v in g.items():
            key = (a + c, b + d)
            out[key] = out.get(key, 0) + u * v * q ** (b * c)
    return {k: v for k, v in out.items() if v}


def sympy_right_quotient(f: dict, h: dict, q: int):
    """Solve f = g*h for g by linear algebra over Q, on a support box bounded by f."""
    mf = max(m for m, _ in f) if f else 0
    nf = max(n for _, n in f) if f else 0
    support = [(m, n) for m in range(mf + 1) for n in range(nf + 1)]
    unknowns = sympy.symbols(f"g0:{len(support)}")
    prod: dict = {}
    for (a, b), s in zip(support, unknowns):
        for (c, d), v in h.items():
            key = (a + c, b + d)
            prod[key] = prod.get(key, 0) + s * v * q ** (b * c)
    keys = set(prod) | set(f)
    eqs = [sympy.Eq(prod.get(k, 0), f.get(k, 0)) for k in keys]
    sol = sympy.solve(eqs, unknowns, dict=True)
    if not sol:
        return None
    values = {s: sol[0].get(s, 0) for s in unknowns}
    if any(not sympy.sympify(v).is_integer for v in values.values()):
        return None
    return {m: int(values[s]) for m, s in zip(support, unknowns) if values[s] != 0}


def test_twist_relation():
    Q = build(ZQ)
    x, y = Q.x, Q.y
    assert y * x == 2 * (x * y)
    assert (x * y) * (x * y) == Q.monomial(2, 2, 2)


def test_deglex():
    Q = build(ZQ)
    f = Q.x + Q.y
    assert Q.deglex_max(f) == (1, 0) and Q.deglex_min(f) == (0, 1)
    assert Q.deglex_max(Q.one()) == Q.deglex_min(Q.one()) == (0, 0)
    with pytest.raises(ZeroElement):
        Q.deglex_max(Q.zero())


def test_right_division():
    Q = build(ZQ)
    x, y = Q.x, Q.y
    tv = right_divides(x, x * x)
    assert tv.is_true and tv.evidence == x
    tv = right_divides(y, y * x)
    assert tv.is_true and tv.evidence == 2 * x
    assert right_divides(x - 1, Q.one()).is_false


def test_lpow_x_examples():
    Q, F = build(ZQ), build(F5Q)
    assert qp_decide_lpow_x(Q.x ** 3).is_true
    assert qp_decide_lpow_x(2 * Q.x ** 2).is_false
    assert qp_decide_lpow_x(Q.x * Q.y).is_false
    assert qp_decide_lpow_x(F.x ** 3).is_true


def test_twist_commutes_past_x():
    Q = build(ZQ)
    u = Q.from_terms({(0, 1): 3, (1, 1): -1, (0, 0): 2})
    for k in range(4):
        assert u * Q.x ** k == Q.x ** k * twist(u, k)


def test_extraction():
    Q, F = build(ZQ), build(F5Q)
    truth = [k for k in range(7) if qp_extract(Q.from_int(k)).is_true]
    assert truth == [1, 2, 3, 4, 5, 6]
    assert qp_extract(Q.y).is_false
    assert all(qp_extract(F.from_int(k)).is_true for k in range(7))


def test_bad_spec():
    with pytest.raises(BadSpec):
        build("qplane:D=Fp(4),q=2")
    with pytest.raises(BadSpec):
        build("qplane:D=Z,q=0")


terms = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-5, 5), min_size=1, max_size=4)


@settings(max_examples=80, deadline=None)
@given(terms, terms)
def test_multiplication_matches_naive(f, g):
    Q = build(ZQ)
    a, b = Q.from_terms(f), Q.from_terms(g)
    assert Q.terms(a * b) == naive_mul(Q.terms(a), Q.terms(b), 2)


@settings(max_examples=40, deadline=None)
@given(terms, terms)
def test_right_quotient_matches_sympy(f, h):
    Q = build(ZQ)
    hf, hh = Q.from_terms(f), Q.from_terms(h)
    if hh.is_zero():
        return
    for target in (hf * hh, hf * hh + Q.one()):
        ours = Q.right_quotient(hh, target)
        oracle = sympy_right_quotient(Q.terms(target), Q.terms(hh), 2)
        assert (ours is None) == (oracle is None)
        if ours is not None:
            assert Q.terms(ours) == oracle


def test_random_pairs_additive():
    rng = random.Random(7)
    for spec in (ZQ, F5Q):
        Q = build(spec)
        for _ in range(200):
            g = Q.from_terms({(rng.randint(0, 3), rng.randint(0, 3)): rng.choice([1, 2, 3, -1]) for _ in range(3)})
            h = Q.from_terms({(rng.randint(0, 3), rng.randint(0, 3)): rng.choice([1, 2, 3, -1]) for _ in range(3)})
            if g.is_zero() or h.is_zero():
                continue
            gh = g * h
            assert not gh.is_zero()
            assert Q.deglex_max(gh) == tuple(map(sum, zip(Q.deglex_max(g), Q.deglex_max(h))))
            assert Q.deglex_min(gh) == tuple(map(sum, zip(Q.deglex_min(g), Q.deglex_min(h))))
            assert Q.right_quotient(h, gh) == g


def test_pow_scan_matches_decider():
    Q = build(ZQ)
    box = [Q.from_terms({(m, n): c}) for m in range(4) for n in range(3) for c in (1, -1, 2)]
    for f in box:
        assert qp_decide_lpow_x(f).is_true == decide_pow(f, Q.x, 8).is_true
