"""Named verification suites: each case states a claim, a citation tag and
the verdict it is expected to produce."""

from __future__ import annotations

import enum
import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Sequence

import sympy

from .core import (
    DEFAULT_BUDGET,
    BadRing,
    BadSample,
    Budget,
    Ring,
    RingValue,
    TruthValue,
    check_indecomposable,
    check_reduced,
    is_idempotent,
)
from .formulas import (
    D_zk,
    C_zk,
    E_zk,
    alpha_zk,
    alpha_zxz,
    beta,
    build_Lp,
    build_theta,
    decide_alpha_zk,
    decide_alpha_zxz,
    decide_beta,
    decide_D_zxz,
    decide_gamma,
    decide_Lp,
    decide_lpow,
    decide_phi,
    decide_pow,
    decide_theta,
    default_P_sample,
    determinant,
    gamma,
    geometric_sum,
    in_T,
    in_U,
    irreducible,
    is_constant_function,
    phi,
    powconst_criterion,
    vandermonde,
    vandermonde_product,
)
from .logic import (
    Eq,
    ExplicitList,
    IntLit,
    Lit,
    Neg,
    Or,
    OraclePred,
    Var,
    eval_term,
    evaluate,
)
from .poly import PolyRing, poly_box, poly_is_unit, polyring, x_irreducible
from .qplane import QPlane, qp_decide_lpow_x, qp_extract
from .rings import build


# Citation index: every case cites one of these tags.

CITES: dict[str, str] = {
    "annihilated-by-leading-power": "if g | f with deg g > deg f and f = g*h, then lc(g)^(deg h + 1) * f = 0",
    "x-power-divides-g0-power": "x^r | g*h implies x^r | g0^r * h, and x^r = g*h implies g0^r = g0^(r+1) * h_r",
    "regular-constant-divisors": "over a reduced ring, divisors of regular constants are constants",
    "reduced-iff-units-constant": "R[x] reduced iff R reduced iff the units of R[x] are the units of R",
    "nilpotent-gives-polynomial-unit": "a nilpotent a makes 1 + a*x a unit of R[x]",
    "x-irreducible-iff-indecomposable": "x is irreducible in R[x] iff R has no idempotent besides 0 and 1",
    "idempotent-split-of-x": "x = [e*x + (1-e)] * [(1-e)*x + e] for an idempotent e",
    "power-divides-lower-power": "c^(m+1) | c^m forces c to be zero or a unit in a reduced indecomposable ring",
    "power-division-characterizes": "rings where c^(m+1) | c^m forces c in {0} or units are the reduced indecomposable ones",
    "distinct-powers": "the powers of a nonzero nonunit are pairwise distinct in a reduced indecomposable ring",
    "finite-reduced-indecomposable-field": "a finite reduced indecomposable ring is a field",
    "vanishing-polynomial-is-zero": "over an infinite reduced indecomposable ring, a polynomial vanishing everywhere is zero",
    "vandermonde-determinant": "det V(c_0..c_m) = prod_{i<j} (c_j - c_i) and det V_a = +-a^k [1 - a g(a)]",
    "adjugate-annihilation": "f vanishing at c_0..c_m gives f_i * det V(c_0..c_m) = 0",
    "boolean-vanishing": "x^2 - x vanishes on every Boolean ring",
    "square-zero-vanishing": "x^2 (x^2 - 1) vanishes on F2[T1..Tk]/(Ti*Tj)",
    "integer-only-vanishing": "t(x^2 + x) vanishes at every integer of Z[t]/(2t) without being zero",
    "sum-of-two-nonunits": "a non-field has a unit u with u - 1 outside {0} and the units, or every element is a sum of two nonunits",
    "lpow-x-equals-pow-x": "over a reduced indecomposable ring, lpow(x) = pow(x) in R[x]",
    "lpow-x-box-scan": "bounded scan of lpow(x) in a coefficient box",
    "decomposable-x-refuted": "over a decomposable ring, the idempotent split refutes x in lpow(x)",
    "nilpotent-breaks-powers": "over a nonreduced ring, pow(x) and lpow(x) are not comparable",
    "linear-unit-lead-in-U": "v*x + r lies in U for a unit v over a reduced indecomposable ring",
    "T-needs-irreducible": "members of T are irreducible",
    "U-unit-clause": "the only unit u of U is 1",
    "U-lpow-equals-pow": "lpow(p) = pow(p) for p in U over a reduced indecomposable ring",
    "prime-lpow-equals-pow": "a regular prime p with reduced base has lpow(p) = pow(p)",
    "powconst-pair-criterion": "f is a power of the constant a iff pairs p, q in U give p - a | y - f, q - a | z - f, p - q | y - z",
    "exponent-extraction": "y - 1 = w(p - 1) and p - 1 | w - t recover the exponent t of y = p^t",
    "list-alpha-admits-nonconstant": "an explicit list for alpha lets t = x through with n = 1",
    "theta-defines-positive-integers": "theta defines the positive integers in R[x] for reduced indecomposable non-fields of characteristic 0",
    "theta-root-evaluation": "for linear p in P, phi(t, 2, 2^k, p) forces t(root of p - 1) = k",
    "positive-characteristic-integers": "in positive characteristic the integers form a finite set of constants",
    "units-miss-zero-in-positive-characteristic": "in characteristic n the integer n is 0, which is not a unit",
    "reduced-indecomposable-prime-characteristic": "a reduced indecomposable ring of positive characteristic has prime characteristic",
    "lpow-of-zero": "lpow(0) = {0} for a field and empty otherwise",
    "unit-lpow-affine": "for a unit p, lpow(p) = {(p-1) g + 1}",
    "lpow-nonempty-iff-self-member": "lpow(p) is nonempty iff p in lpow(p)",
    "lpow-members-regular": "over a reduced base, members of lpow(p) for a nonunit p are regular",
    "zero-divisor-logical-power": "over F_p[z]/(z^2), z is irreducible and z in lpow(z) though z is a zero divisor",
    "quotient-lpow-two-elements": "in Z[t]/(2(t-1), t^2-1), lpow(t) = {1, t} and (t-1)^2 = 0",
    "zero-in-lpow-iff-units": "0 in lpow(p) iff p and p-1 are units iff lpow(p) is everything",
    "lpow-decomposition": "a member of lpow(p) is infinitely divisible by p or u*p^n with p-1 | u-1",
    "lpow-unit-closure": "f in lpow(p) and p-1 | u-1 for a unit u give u*f in lpow(p)",
    "irreducible-in-own-lpow": "a unit or irreducible p lies in lpow(p)",
    "square-multiple-forces-unit": "a member of lpow(p) that is a multiple of its own square forces p to be a unit",
    "self-member-unit-or-irreducible": "p in lpow(p) forces p to be a unit or irreducible",
    "idempotent-product-split": "nontrivial idempotents, product decompositions and factorizations of x coincide",
    "one-factorization-iff-nonreduced": "1 is a product of two positive-degree polynomials iff R is not reduced",
    "idempotents-are-constant": "idempotents of R[x] are the idempotent constants",
    "beta-mixed-units": "beta defines {(5,1), (1,5)} as 3 + 2r for units r other than 1 and -1",
    "gamma-constant-values": "gamma defines the pairs (5^m - 1, 5^n - 1)",
    "order-of-five": "integers prime to 5 divide some 5^n - 1",
    "parity-constants-defined": "the example formulas define the constant parity tuples",
    "one-entry-tuples": "D is the set of unit tuples with one entry 1 and the others -1",
    "right-divisors-of-x-powers": "right divisors of x^l in the quantum plane are a*x^m",
    "deglex-additivity": "max and min in degree-lex order add under multiplication",
    "right-cancellation": "g*h = g'*h with h nonzero gives g = g'",
    "exponent-of-constant": "exponent extraction with p = x in the quantum plane",
    "diagram-arrow": "an implication between reducedness, indecomposability and lpow(x) properties",
    "diagram-counterexample": "a converse implication refuted by a named ring",
}


# Case and report model

class Outcome(str, enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted-as-expected"
    UNKNOWN = "unknown"
    FAILED = "failed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Case:
    id: str
    claim: str
    cite: str
    expect: bool
    check: Callable[[Budget], TruthValue]
    # strict cases must come out two-valued
    strict: bool = True


@dataclass(frozen=True)
class CaseResult:
    id: str
    claim: str
    cite: str
    expect: bool
    verdict: str
    evidence: Any
    ms: float
    outcome: Outcome

    def to_dict(self, timing: bool = True) -> dict:
        out = {"id": self.id, "claim": self.claim, "cite": self.cite, "verdict": self.verdict,
               "evidence": self.evidence, "ms": round(self.ms, 3) if timing else None,
               "outcome": str(self.outcome)}
        return out


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {str(o): 0 for o in Outcome}
        for c in self.cases:
            counts[str(c.outcome)] += 1
        return counts

    @property
    def passed(self) -> bool:
        return self.summary[str(Outcome.FAILED)] == 0

    def case(self, cid: str) -> CaseResult:
        return next(c for c in self.cases if c.id == cid)

    def to_dict(self, timing: bool = True) -> dict:
        return {"suite": self.suite, "cases": [c.to_dict(timing) for c in self.cases],
                "summary": self.summary}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


def jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, RingValue):
        return str(obj)
    if isinstance(obj, TruthValue):
        return {"verdict": str(obj.verdict), "evidence": jsonable(obj.evidence), "cite": obj.cite}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        return sorted(items, key=str) if isinstance(obj, (set, frozenset)) else items
    return str(obj)


def run_case(case: Case, budget: Budget) -> CaseResult:
    start = time.perf_counter()
    try:
        tv = case.check(budget)
    except Exception as exc:  # a crashing case is reported, not raised
        tv = TruthValue.unknown(f"error: {type(exc).__name__}: {exc}")
        error = True
    else:
        error = False
    ms = (time.perf_counter() - start) * 1000
    if tv.is_unknown:
        outcome = Outcome.FAILED if case.strict or error else Outcome.UNKNOWN
        evidence = {"note": tv.note, "partial": jsonable(tv.evidence)}
    else:
        value = tv.is_true
        if value != case.expect:
            outcome = Outcome.FAILED
        else:
            outcome = Outcome.CONFIRMED if value else Outcome.REFUTED
        evidence = jsonable(tv.evidence)
    return CaseResult(case.id, case.claim, case.cite, case.expect, str(tv.verdict), evidence, ms, outcome)


def run_cases(name: str, cases: Sequence[Case], budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> SuiteReport:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run_case(c, budget), cases))
    else:
        results = [run_case(c, budget) for c in cases]
    return SuiteReport(name, sorted(results, key=lambda r: r.id))


# Small helpers

def _forall(items: Iterable[tuple[Any, bool]], cite: str = "", **extra: Any) -> TruthValue:
    """True with a count when every item holds; False on the first that fails."""
    n = 0
    for item, ok in items:
        if not ok:
            return TruthValue.false({"counterexample": item, **extra}, cite)
        n += 1
    if n == 0:
        return TruthValue.unknown("nothing was checked")
    return TruthValue.true({"checked": n, **extra}, cite)


def _raises(fn: Callable[[], Any], exc: type) -> TruthValue:
    try:
        fn()
    except exc as err:
        return TruthValue.true({"raised": type(err).__name__}, "error-contract")
    return TruthValue.false({"raised": None}, "error-contract")


FINITE_SPECS = ([f"zmod:{n}" for n in range(2, 13)] + ["bool:1", "bool:2", "bool:3"]
                + ["fpz2:2", "fpz2:3", "fpz2:5", "trunc:1", "trunc:2"])


def _ints(ring: Ring, values: Iterable[int]) -> list[RingValue]:
    return [ring.from_int(v) for v in values]


def _parity_pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1) if (a - b) % 2 == 0]


def _units(ring: Ring) -> list[RingValue]:
    return [a for a in ring.elements() if ring.is_unit(a).is_true]


def _is_unit(a: RingValue) -> bool:
    return a.ring.is_unit(a).is_true


def _case(cases: list[Case], slug: str, claim: str, cite: str, expect: bool,
          check: Callable[[Budget], TruthValue], strict: bool = True) -> None:
    if cite not in CITES:
        raise KeyError(f"unknown citation tag {cite}")
    cases.append(Case(f"{len(cases) + 1:02d}-{slug}", claim, cite, expect, check, strict))


@lru_cache(maxsize=None)
def lpow_table(spec: str) -> frozenset[tuple]:
    """All pairs (f, p) with f in lpow(p), for a finite ring, by exhaustive evaluation."""
    ring = build(spec)
    out = set()
    for p in ring.elements():
        for f in ring.elements():
            if decide_lpow(f, p).verdict.is_true:
                out.add((f.payload, p.payload))
    return frozenset(out)


def _members(ring: Ring, p: RingValue) -> set:
    table = lpow_table(ring.spec)
    return {f for f, q in table if q == p.payload}


def _linear_base_triples(base: Ring):
    """(a, b, c, d) with (a + b x)(c + d x) = 1 and b != 0, over the base."""
    for a in base.elements():
        inv = base.is_unit(a)
        if not inv.is_true:
            continue
        c = inv.evidence
        for b in base.elements():
            if b.is_zero():
                continue
            for d in base.elements():
                if (a * d + b * c).is_zero() and (b * d).is_zero():
                    yield a, b, c, d


# basic-lemma

def _lemma_leading(spec: str, gdeg: int, hdeg: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        els = R.base.elements()
        gs = [g for g in poly_box(R, gdeg, els) if R.degree(g) == gdeg]
        hs = [h for h in poly_box(R, hdeg, els) if not h.is_zero()]
        n = 0
        for g in gs:
            lead = R.leading_coeff(g)
            for h in hs:
                f = g * h
                if f.is_zero() or R.degree(f) < gdeg:
                    n += 1
                    k = R.degree(h)
                    if not (R.lift(lead ** (k + 1)) * f).is_zero():
                        return TruthValue.false({"g": g, "h": h}, "annihilated-by-leading-power")
        return TruthValue.true({"instances": n}, "annihilated-by-leading-power") if n else TruthValue.unknown("vacuous")
    return check


def _lemma_x_power(spec: str, gdeg: int, hdeg: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        els = R.base.elements()
        gs = list(poly_box(R, gdeg, els))
        hs = list(poly_box(R, hdeg, els))
        first = second = 0
        for g, h in itertools.product(gs, hs):
            gh = g * h
            g0 = R.constant_term(g)
            for r in range(1, 4):
                if all(R.coeff(gh, i).is_zero() for i in range(r)):
                    first += 1
                    lhs = R.lift(g0 ** r) * h
                    if not all(R.coeff(lhs, i).is_zero() for i in range(r)):
                        return TruthValue.false({"g": g, "h": h, "r": r}, "x-power-divides-g0-power")
                if gh == R.pow(R.x(), r):
                    second += 1
                    if g0 ** r != g0 ** (r + 1) * R.coeff(h, r):
                        return TruthValue.false({"g": g, "h": h, "r": r, "part": "equality"},
                                                "x-power-divides-g0-power")
        return TruthValue.true({"divisibility_instances": first, "equality_instances": second},
                               "x-power-divides-g0-power")
    return check


def _regular_constant_divisors(budget: Budget) -> TruthValue:
    R = polyring(build("z"))
    cs = _ints(R.base, range(-2, 3))
    consts = [R.from_int(c) for c in (2, 3, 6, -4, 5)]
    gs = [g for g in poly_box(R, 2, cs) if not R.is_constant(g)]
    return _forall((((g, c)), R.divides(g, c).is_false) for g in gs for c in consts)


def suite_basic_lemma(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec, gdeg, hdeg in (("zmod:4", 2, 2), ("zmod:8", 2, 1), ("trunc:2", 2, 1), ("zmod:6", 2, 2)):
        _case(cases, f"leading-{spec}", f"divisors of higher degree over {spec} have a nilpotent-like lead annihilating f",
              "annihilated-by-leading-power", True, _lemma_leading(spec, gdeg, hdeg))
    for spec, gdeg, hdeg in (("zmod:4", 2, 2), ("trunc:2", 2, 1), ("zmod:3", 2, 2)):
        _case(cases, f"x-power-{spec}", f"x^r | gh gives x^r | g0^r h over {spec}",
              "x-power-divides-g0-power", True, _lemma_x_power(spec, gdeg, hdeg))
    _case(cases, "regular-constants-z", "nonconstant polynomials do not divide nonzero integers in Z[x]",
          "regular-constant-divisors", True, _regular_constant_divisors)
    return cases


# redunits

def _redunits_check(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        base = build(spec)
        reduced = check_reduced(base, budget)
        els = base.elements()
        square_zero = next(((a, b) for a in els for b in els if not b.is_zero()
                            and (a * a).is_zero() and (a * b * 2).is_zero() and (b * b).is_zero()), None)
        unit_pair = next(_linear_base_triples(base), None)
        facts = {"reduced": reduced.is_true, "square_zero_linear": square_zero is not None,
                 "nonconstant_linear_unit": unit_pair is not None}
        agree = reduced.is_true == (square_zero is None) == (unit_pair is None)
        if unit_pair is not None:
            a, b, c, d = unit_pair
            R = polyring(base)
            f, g = R.from_coeffs([a, b]), R.from_coeffs([c, d])
            agree = agree and (f * g).is_one() and poly_is_unit(f).is_true
            facts["unit_witness"] = (f, g)
        return TruthValue.of(agree, facts, "reduced-iff-units-constant")
    return check


def _nilpotent_unit(spec: str, a: int, coeffs: list[int]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        f = R.from_coeffs([1, a])
        g = R.from_coeffs(coeffs)
        return TruthValue.of((f * g).is_one() and poly_is_unit(f, budget).is_true, {"f": f, "inverse": g},
                             "nilpotent-gives-polynomial-unit")
    return check


def suite_redunits(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec in FINITE_SPECS:
        _case(cases, f"three-way-{spec}", f"R reduced, no square-zero linear polynomial and no nonconstant linear unit agree over {spec}",
              "reduced-iff-units-constant", True, _redunits_check(spec))
    _case(cases, "unit-zmod4", "(1 + 2x)(1 - 2x) = 1 over Z/4", "nilpotent-gives-polynomial-unit", True,
          _nilpotent_unit("zmod:4", 2, [1, -2]))
    _case(cases, "unit-zmod8", "1 + 2x has inverse 1 - 2x + 4x^2 over Z/8", "nilpotent-gives-polynomial-unit", True,
          _nilpotent_unit("zmod:8", 2, [1, -2, 4]))
    Z = polyring(build("z"))
    _case(cases, "z-x-plus-1", "x + 1 is not a unit of Z[x]", "reduced-iff-units-constant", False,
          lambda b: poly_is_unit(Z.x() + 1, b))
    _case(cases, "z-minus-1", "-1 is a unit of Z[x]", "reduced-iff-units-constant", True,
          lambda b: poly_is_unit(Z.from_int(-1), b))
    P = polyring(build("parity2"))
    _case(cases, "parity-mixed-unit", "(1,-1) is a unit of ParityZ2[x]", "reduced-iff-units-constant", True,
          lambda b: poly_is_unit(P.from_tuple((1, -1)), b))
    _case(cases, "parity-linear", "(1,1) + (2,0)x is not a unit of ParityZ2[x]", "reduced-iff-units-constant", False,
          lambda b: poly_is_unit(P.from_coeffs([(1, 1), (2, 0)]), b))
    return cases


# bivalente

def _bivalente_check(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        base = build(spec)
        irr = x_irreducible(base, budget)
        indec = check_indecomposable(base, budget)
        if not (irr.known and indec.known):
            return TruthValue.unknown("undecided", {"x_irreducible": irr, "indecomposable": indec})
        facts: dict[str, Any] = {"x_irreducible": irr.is_true, "indecomposable": indec.is_true}
        ok = irr.is_true == indec.is_true
        if irr.is_false:
            g, h = irr.evidence["factors"]
            R = g.ring
            ok = ok and g * h == R.x() and poly_is_unit(g).is_false and poly_is_unit(h).is_false
            facts["factors"] = (g, h)
        return TruthValue.of(ok, facts, "x-irreducible-iff-indecomposable")
    return check


def _split_witness(budget: Budget) -> TruthValue:
    base = build("prod(z,z)")
    R = polyring(base)
    e = base.from_tuple((1, 0))
    E = R.lift(e)
    g, h = E * R.x() + (1 - E), (1 - E) * R.x() + E
    ok = g * h == R.x() and poly_is_unit(g, budget).is_false and poly_is_unit(h, budget).is_false
    return TruthValue.of(ok, {"factors": (g, h)}, "idempotent-split-of-x")


def suite_bivalente(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec in FINITE_SPECS:
        _case(cases, f"agree-{spec}", f"x irreducible iff indecomposable over {spec}",
              "x-irreducible-iff-indecomposable", True, _bivalente_check(spec))
    for spec in ("z", "parity2", "parity:3", "prod(z,z)", "prod(z,zmod:4)"):
        _case(cases, f"agree-{spec}", f"x irreducible iff indecomposable over {spec}",
              "x-irreducible-iff-indecomposable", True, _bivalente_check(spec))
    _case(cases, "split-zxz", "x = [ex + (1-e)][(1-e)x + e] with e = (1,0) over ZxZ",
          "idempotent-split-of-x", True, _split_witness)
    return cases


# cmdiv

def _power_division_property(ring: Ring, elements: Sequence[RingValue], budget: Budget) -> tuple[bool, Any]:
    for c in elements:
        for m in range(1, 5):
            if ring.divides(c ** (m + 1), c ** m, budget).is_true and not (c.is_zero() or _is_unit(c)):
                return False, {"c": c, "m": m}
    return True, None


def _cmdiv_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        holds, witness = _power_division_property(ring, ring.elements(), budget)
        ri = check_reduced(ring).is_true and check_indecomposable(ring).is_true
        return TruthValue.of(holds == ri, {"property": holds, "reduced_indecomposable": ri, "witness": witness},
                             "power-division-characterizes")
    return check


def _cmdiv_sample(spec: str, values: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        els = [ring.from_tuple(v) if isinstance(v, tuple) else ring.from_int(v) for v in values]
        holds, witness = _power_division_property(ring, els, budget)
        return TruthValue.of(holds, {"sample": len(els), "witness": witness}, "power-divides-lower-power")
    return check


def _distinct_powers(spec: str, values: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        els = [ring.from_tuple(v) if isinstance(v, tuple) else ring.from_int(v) for v in values]
        for c in els:
            if c.is_zero() or _is_unit(c):
                continue
            powers = [c ** n for n in range(1, budget.exp_cap + 1)]
            if len({p.payload for p in powers}) != len(powers):
                return TruthValue.false({"c": c}, "distinct-powers")
        return TruthValue.true({"sample": len(els), "exponents": budget.exp_cap}, "distinct-powers")
    return check


def _finite_field_check(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        ri = check_reduced(ring).is_true and check_indecomposable(ring).is_true
        field_ = all(a.is_zero() or _is_unit(a) for a in ring.elements())
        return TruthValue.of((not ri) or field_, {"reduced_indecomposable": ri, "field": field_},
                             "finite-reduced-indecomposable-field")
    return check


def suite_cmdiv(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec in FINITE_SPECS:
        _case(cases, f"characterize-{spec}", f"c^(m+1) | c^m only for zero or units exactly when {spec} is reduced and indecomposable",
              "power-division-characterizes", True, _cmdiv_finite(spec))
    _case(cases, "sample-z", "c^(m+1) | c^m forces c in {0, 1, -1} over Z", "power-divides-lower-power", True,
          _cmdiv_sample("z", range(-6, 7)))
    _case(cases, "sample-parity2", "c^(m+1) | c^m forces c in {0} or units over ParityZ2", "power-divides-lower-power", True,
          _cmdiv_sample("parity2", _parity_pairs(-4, 4)))
    _case(cases, "zmod4-nilpotent", "c^(m+1) | c^m forces c in {0} or units over Z/4", "power-divides-lower-power", False,
          _cmdiv_sample("zmod:4", [2]))
    _case(cases, "zmod6-idempotent", "c^(m+1) | c^m forces c in {0} or units over Z/6", "power-divides-lower-power", False,
          _cmdiv_sample("zmod:6", [3]))
    _case(cases, "zxz-idempotent", "c^(m+1) | c^m forces c in {0} or units over ZxZ", "power-divides-lower-power", False,
          _cmdiv_sample("prod(z,z)", [(1, 0)]))
    _case(cases, "distinct-z", "powers of nonzero nonunits are distinct over Z", "distinct-powers", True,
          _distinct_powers("z", range(-6, 7)))
    _case(cases, "distinct-parity2", "powers of nonzero nonunits are distinct over ParityZ2", "distinct-powers", True,
          _distinct_powers("parity2", _parity_pairs(-4, 4)))
    _case(cases, "distinct-zxz", "powers of nonzero nonunits are distinct over ZxZ", "distinct-powers", False,
          _distinct_powers("prod(z,z)", [(1, 0)]))
    for spec in FINITE_SPECS:
        _case(cases, f"field-{spec}", f"{spec} reduced and indecomposable implies field",
              "finite-reduced-indecomposable-field", True, _finite_field_check(spec))
    return cases


# constantfn

def _vanishes_everywhere(spec: str, coeffs: list[int]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        f = R.from_coeffs(coeffs)
        bad = next((c for c in R.base.elements() if not R.evaluate(f, c).is_zero()), None)
        ok = bad is None and not f.is_zero()
        return TruthValue.of(ok, {"f": f, "points": R.base.size(), "nonzero_at": bad},
                             "boolean-vanishing" if spec.startswith("bool") else "square-zero-vanishing")
    return check


def _integer_vanishing(budget: Budget) -> TruthValue:
    R = polyring(build("quot:2t"))
    t = R.symbols["tbar"] if "tbar" in R.symbols else R.symbols["t"]
    f = t * (R.x() ** 2 + R.x())
    values = [R.evaluate(f, c) for c in range(-3, 4)]
    ok = all(v.is_zero() for v in values) and not f.is_zero()
    return TruthValue.of(ok, {"f": f, "values": values}, "integer-only-vanishing")


def _integer_vanishing_unknown(budget: Budget) -> TruthValue:
    R = polyring(build("quot:2t"))
    t = R.symbols["tbar"] if "tbar" in R.symbols else R.symbols["t"]
    f = t * (R.x() ** 2 + R.x())
    tv = is_constant_function(f, _ints(R.base, range(-3, 4)))
    # the honest answer is Unknown: the integers do not cover the ring
    point = R.base.symbols.get("tbar", R.base.symbols.get("t"))
    return TruthValue.of(tv.is_unknown and not R.evaluate(f, point).is_zero(),
                         {"verdict": str(tv.verdict), "note": tv.note, "value_at_t": R.evaluate(f, point)},
                         "integer-only-vanishing")


def _vanishing_theorem(spec: str, deg: int, coeffs: Sequence[Any], points: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        base = R.base

        def lift(v: Any) -> RingValue:
            return base.from_tuple(v) if isinstance(v, tuple) else base.from_int(v)

        cs, pts = [lift(c) for c in coeffs], [lift(c) for c in points]
        return _forall(((f, any(not R.evaluate(f, c).is_zero() for c in pts))
                        for f in poly_box(R, deg, cs) if not f.is_zero()), "vanishing-polynomial-is-zero")
    return check


def _vandermonde_symbolic(budget: Budget) -> TruthValue:
    a = sympy.Symbol("a")
    facts = {}
    for m in range(1, 5):
        V = sympy.Matrix([[(a ** i) ** j for j in range(m + 1)] for i in range(m + 1)])
        det = sympy.Poly(sympy.expand(V.det()), a)
        prod = sympy.Poly(sympy.expand(sympy.prod([a ** j - a ** i for i in range(m + 1) for j in range(i + 1, m + 1)])), a)
        terms = det.terms()
        k = min(mon[0] for mon, _ in terms)
        rest = sympy.Poly(sympy.expand(det.as_expr() / a ** k), a)
        # rest = c(1 - a g(a)) with the sign of the ordering convention
        c0 = rest.eval(0)
        # the a-adic order is binom(m+1, 3), so k = 0 for a 2x2 matrix
        ok = (det == prod and k == sympy.binomial(m + 1, 3) and abs(c0) == 1
              and all(co.is_integer for co in rest.all_coeffs()))
        if not ok:
            return TruthValue.false({"m": m, "det": str(det.as_expr())}, "vandermonde-determinant")
        facts[m] = {"k": k, "constant": int(c0)}
    return TruthValue.true(facts, "vandermonde-determinant")


def _vandermonde_numeric(spec: str, points: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        pts = [ring.from_tuple(p) if isinstance(p, tuple) else ring.from_int(p) for p in points]
        checked = 0
        for m in range(1, len(pts)):
            for combo in itertools.combinations(pts, m + 1):
                if determinant(vandermonde(list(combo))) != vandermonde_product(list(combo)):
                    return TruthValue.false({"points": combo}, "vandermonde-determinant")
                checked += 1
        return TruthValue.true({"tuples": checked}, "vandermonde-determinant")
    return check


def _adjugate(spec: str, coeffs: list[int]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        f = R.from_coeffs(coeffs)
        m = R.degree(f)
        fc = R.coeffs(f)
        n = 0
        for combo in itertools.product(R.base.elements(), repeat=m + 1):
            d = determinant(vandermonde(list(combo)))
            for fi in fc:
                n += 1
                if not (fi * d).is_zero():
                    return TruthValue.false({"points": combo, "coefficient": fi}, "adjugate-annihilation")
        return TruthValue.true({"products": n}, "adjugate-annihilation")
    return check


def suite_constantfn(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    _case(cases, "boolean-bool3", "x^2 - x is nonzero and vanishes on all of F2^3", "boolean-vanishing", True,
          _vanishes_everywhere("bool:3", [0, -1, 1]))
    _case(cases, "trunc2", "x^2(x^2 - 1) is nonzero and vanishes on all of TruncPoly(2)", "square-zero-vanishing", True,
          _vanishes_everywhere("trunc:2", [0, 0, -1, 0, 1]))
    _case(cases, "quot2t-integers", "t(x^2 + x) is nonzero and vanishes at the integers -3..3 of Z[t]/(2t)",
          "integer-only-vanishing", True, _integer_vanishing)
    _case(cases, "quot2t-unknown", "integer samples leave t(x^2 + x) undecided and t itself is a nonzero value",
          "integer-only-vanishing", True, _integer_vanishing_unknown)
    Z = polyring(build("z"))
    _case(cases, "z-square-two-points", "x^2 is constant on {0, 1} in Z", "vanishing-polynomial-is-zero", False,
          lambda b: is_constant_function(Z.x() ** 2, _ints(Z.base, [0, 1])))
    P = polyring(build("parity2"))
    _case(cases, "parity-constant", "(2,2) is a constant function on ParityZ2", "vanishing-polynomial-is-zero", True,
          lambda b: is_constant_function(P.from_tuple((2, 2)), [P.base.from_tuple(v) for v in [(0, 0), (1, 1), (1, -1)]]))
    _case(cases, "theorem-z", "every nonzero polynomial of degree <= 3 with coefficients in [-2, 2] is nonzero at some integer in [-6, 6]",
          "vanishing-polynomial-is-zero", True, _vanishing_theorem("z", 3, range(-2, 3), range(-6, 7)))
    _case(cases, "theorem-parity2", "every nonzero small polynomial over ParityZ2 is nonzero at some sampled point",
          "vanishing-polynomial-is-zero", True,
          _vanishing_theorem("parity2", 2, [(0, 0), (1, 1), (-1, -1), (2, 0), (1, -1), (0, 2)], _parity_pairs(-3, 3)))
    _case(cases, "vandermonde-symbolic", "det V_a = a^k [1 - a g(a)] up to sign, with k = binom(m+1, 3), for sizes 2..5",
          "vandermonde-determinant", True, _vandermonde_symbolic)
    _case(cases, "vandermonde-z", "cofactor determinant equals the difference product over Z", "vandermonde-determinant",
          True, _vandermonde_numeric("z", [-2, 0, 1, 3, 5]))
    _case(cases, "vandermonde-parity2", "cofactor determinant equals the difference product over ParityZ2",
          "vandermonde-determinant", True, _vandermonde_numeric("parity2", [(0, 0), (1, -1), (2, 4), (3, 1)]))
    _case(cases, "vandermonde-zmod7", "cofactor determinant equals the difference product over Z/7",
          "vandermonde-determinant", True, _vandermonde_numeric("zmod:7", [0, 1, 2, 3, 5]))
    _case(cases, "adjugate-bool3", "coefficients of x^2 - x annihilate every Vandermonde determinant over F2^3",
          "adjugate-annihilation", True, _adjugate("bool:3", [0, -1, 1]))
    return cases


# sumnonunits

def _sumnonunits_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        units = _units(ring)
        nonunits = [a for a in ring.elements() if not _is_unit(a)]
        first = next((u for u in units if not ((u - 1).is_zero() or _is_unit(u - 1))), None)
        sums = {(s + t).payload for s in nonunits for t in nonunits}
        second = all(a.payload in sums for a in ring.elements())
        return TruthValue.of(first is not None or second, {"unit": first, "all_sums": second}, "sum-of-two-nonunits")
    return check


def _sum_z(budget: Budget) -> TruthValue:
    def split(r: int) -> tuple[int, int]:
        s = r + 2 if abs(r + 2) != 1 else r - 2
        return s, r - s

    return _forall(((r, all(abs(v) != 1 for v in split(r)) and sum(split(r)) == r) for r in range(-6, 7)),
                   "sum-of-two-nonunits", witnesses={r: split(r) for r in range(-6, 7)})


def _first_disjunct(spec: str, entries: Any) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        u = ring.from_tuple(entries) if isinstance(entries, tuple) else ring.from_int(entries)
        ok = _is_unit(u) and not (u - 1).is_zero() and ring.is_unit(u - 1, budget).is_false
        return TruthValue.of(ok, {"u": u, "u_minus_1": u - 1}, "sum-of-two-nonunits")
    return check


def suite_sumnonunits(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec in FINITE_SPECS:
        ring = build(spec)
        is_field = all(a.is_zero() or _is_unit(a) for a in ring.elements())
        _case(cases, f"finite-{spec}", f"the dichotomy holds over {spec}" + (" (a field, so it fails)" if is_field else ""),
              "sum-of-two-nonunits", not is_field, _sumnonunits_finite(spec))
    _case(cases, "z-sums", "every integer in [-6, 6] is a sum of two nonunits", "sum-of-two-nonunits", True, _sum_z)
    _case(cases, "z-unit", "u = -1 has u - 1 a nonzero nonunit in Z", "sum-of-two-nonunits", True, _first_disjunct("z", -1))
    _case(cases, "parity-unit", "u = (1,-1) has u - 1 a nonzero nonunit in ParityZ2", "sum-of-two-nonunits", True,
          _first_disjunct("parity2", (1, -1)))
    return cases


# lpow-x

def _scan_z(budget: Budget) -> TruthValue:
    R = polyring(build("z"))
    x = R.x()
    members, unknown, inexact, n = [], [], [], 0
    for f in poly_box(R, 5, _ints(R.base, range(-3, 4))):
        v = decide_lpow(f, x, budget)
        n += 1
        if v.verdict.is_true:
            members.append(f)
        elif v.verdict.is_unknown:
            unknown.append(f)
        if not v.exact:
            inexact.append(f)
    expected = {R.pow(x, k).payload for k in range(1, 6)}
    ok = {f.payload for f in members} == expected and not unknown and not inexact
    return TruthValue.of(ok, {"scanned": n, "members": members, "unknown": len(unknown), "inexact": len(inexact)},
                         "lpow-x-box-scan")


def _scan_parity(seed: int) -> Callable[[Budget], TruthValue]:
    """Scan deg <= 5 over ParityZ2 with entries in [-3, 3].

    The box has 25^6 elements, so the first two clauses are applied
    arithmetically: x | f means f0 = 0, and x - 1 | f - 1 means f(1) = 1,
    which pins f5. Everything left is decided one by one, and a seeded
    sample of pruned elements is decided as well to confirm the pruning.
    """
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity2"))
        B = R.base
        x = R.x()
        pairs = _parity_pairs(-3, 3)
        pset = set(pairs)
        members, unknown, inexact, n = [], 0, 0, 0
        for f1, f2, f3, f4 in itertools.product(pairs, repeat=4):
            f5 = (1 - f1[0] - f2[0] - f3[0] - f4[0], 1 - f1[1] - f2[1] - f3[1] - f4[1])
            if f5 not in pset:
                continue
            f = R.from_coeffs([(0, 0), f1, f2, f3, f4, f5])
            v = decide_lpow(f, x, budget)
            n += 1
            if v.verdict.is_true:
                members.append(f)
            elif v.verdict.is_unknown:
                unknown += 1
            if not v.exact:
                inexact += 1
        rng = random.Random(seed)
        pruned_ok = 0
        while pruned_ok < 200:
            coeffs = [rng.choice(pairs) for _ in range(6)]
            f = R.from_coeffs(coeffs)
            if coeffs[0] == (0, 0) and R.evaluate(f, 1) == B.one():
                continue
            v = decide_lpow(f, x, budget)
            if not (v.exact and v.verdict.is_false):
                return TruthValue.false({"pruned_but_not_refuted": f}, "lpow-x-box-scan")
            pruned_ok += 1
        expected = {R.pow(x, k).payload for k in range(1, 6)}
        ok = {f.payload for f in members} == expected and not unknown and not inexact
        return TruthValue.of(ok, {"decided": n, "members": members, "unknown": unknown, "inexact": inexact,
                                  "pruned_spot_checks": pruned_ok}, "lpow-x-box-scan")
    return check


def _zxz_refuter(with_refuter: bool) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        base = build("prod(z,z)")
        R = polyring(base)
        x = R.x()
        g = R.from_coeffs([base.from_tuple((0, 1)), base.from_tuple((1, 0))])
        v = decide_lpow(x, x, budget, refuter=g if with_refuter else None)
        if not v.exact:
            return TruthValue.unknown("not exact", v.verdict.evidence)
        return v.verdict
    return check


def _zmod4_pow_in_lpow(budget: Budget) -> TruthValue:
    R = polyring(build("zmod:4"))
    x = R.x()
    for n in range(1, 4):
        v = decide_lpow(R.pow(x, n), x, budget)
        if v.verdict.is_false:
            return TruthValue.false({"power": R.pow(x, n), "evidence": v.verdict.evidence}, "nilpotent-breaks-powers")
        if v.verdict.is_unknown:
            return TruthValue.unknown("undecided power")
    return TruthValue.true({"checked": 3}, "nilpotent-breaks-powers")


def _zmod4_lpow_in_pow(budget: Budget) -> TruthValue:
    R = polyring(build("zmod:4"))
    x = R.x()
    u = 1 - 2 * (x - 1)
    f = u * x
    v = decide_lpow(f, x, budget)
    p = decide_pow(f, x, budget.exp_cap)
    if v.verdict.is_true and p.is_false:
        return TruthValue.false({"member": f, "unit": u}, "nilpotent-breaks-powers")
    if v.verdict.is_unknown or p.is_unknown:
        return TruthValue.unknown("undecided")
    return TruthValue.true(cite="nilpotent-breaks-powers")


def suite_lpow_x(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    _case(cases, "z-box", "lpow(x) in the Z[x] box deg <= 5, coefficients [-3, 3], is {x, ..., x^5}",
          "lpow-x-equals-pow-x", True, _scan_z)
    _case(cases, "parity2-box", "lpow(x) in the ParityZ2[x] box deg <= 5, entries [-3, 3], is {x, ..., x^5}",
          "lpow-x-equals-pow-x", True, _scan_parity(seed))
    _case(cases, "zxz-refuter", "x in lpow(x) over ZxZ, refuted by the divisor (1,0)x + (0,1)",
          "decomposable-x-refuted", False, _zxz_refuter(True))
    _case(cases, "zxz-unaided", "x in lpow(x) over ZxZ without a supplied refuter", "decomposable-x-refuted", False,
          _zxz_refuter(False))
    Z4 = polyring(build("zmod:4"))
    _case(cases, "zmod4-x", "x in lpow(x) over Z/4", "irreducible-in-own-lpow", True,
          lambda b: decide_lpow(Z4.x(), Z4.x(), b).verdict)
    _case(cases, "zmod4-pow-in-lpow", "pow(x) is contained in lpow(x) over Z/4", "nilpotent-breaks-powers", False,
          _zmod4_pow_in_lpow)
    _case(cases, "zmod4-lpow-in-pow", "lpow(x) is contained in pow(x) over Z/4", "nilpotent-breaks-powers", False,
          _zmod4_lpow_in_pow)
    return cases


# TU

def _U_affine(spec: str, units: Sequence[Any], shifts: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        base = R.base

        def lift(v: Any) -> RingValue:
            return R.lift(base.from_tuple(v) if isinstance(v, tuple) else base.from_int(v))

        ps = [lift(v) * R.x() + lift(r) for v in units for r in shifts]
        return _forall(((p, in_U(p, budget).is_true) for p in ps), "linear-unit-lead-in-U")
    return check


def _U_box(spec: str, p_coeffs: list[Any], deg: int, coeffs: Sequence[Any], cap: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        base = R.base

        def lift(v: Any) -> RingValue:
            return base.from_tuple(v) if isinstance(v, tuple) else base.from_int(v)

        p = R.from_coeffs(p_coeffs)
        assert in_U(p, budget).is_true
        members, unknown = [], []
        box = list(poly_box(R, deg, [lift(c) for c in coeffs]))
        for f in box:
            v = decide_lpow(f, p, budget).verdict
            if v.is_true:
                members.append(f)
            elif v.is_unknown:
                unknown.append(f)
        in_box = {f.payload for f in box}
        powers = {R.pow(p, n).payload for n in range(1, cap + 1)} & in_box
        ok = {f.payload for f in members} == powers and not unknown
        return TruthValue.of(ok, {"p": p, "members": members, "unknown": len(unknown), "box": len(box)},
                             "U-lpow-equals-pow")
    return check


def suite_TU(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    Z = polyring(build("z"))
    x = Z.x()
    _case(cases, "x-in-U", "x is in U over Z", "linear-unit-lead-in-U", True, lambda b: in_U(x, b))
    _case(cases, "minus-x-plus-3", "-x + 3 is in U over Z", "linear-unit-lead-in-U", True, lambda b: in_U(-x + 3, b))
    _case(cases, "one-not-in-U", "1 is in U over Z", "T-needs-irreducible", False, lambda b: in_U(Z.one(), b))
    _case(cases, "one-not-in-T", "1 is in T over Z", "T-needs-irreducible", False, lambda b: in_T(Z.one(), b))
    _case(cases, "minus-one-not-in-U", "-1 is in U over Z", "U-unit-clause", False, lambda b: in_U(Z.from_int(-1), b))
    _case(cases, "x-in-T", "x is in T over Z", "linear-unit-lead-in-U", True, lambda b: in_T(x, b))
    _case(cases, "x-squared-not-in-T", "x^2 is in T over Z", "T-needs-irreducible", False, lambda b: in_T(x ** 2, b))
    _case(cases, "x2-plus-1-in-U", "x^2 + 1 is in U over Z", "prime-lpow-equals-pow", True, lambda b: in_U(x ** 2 + 1, b))
    _case(cases, "affine-z", "v x + r is in U for v = +-1 and r in [-3, 3] over Z", "linear-unit-lead-in-U", True,
          _U_affine("z", [1, -1], range(-3, 4)))
    _case(cases, "affine-parity2", "v x + r is in U for the four units v and sampled r over ParityZ2",
          "linear-unit-lead-in-U", True,
          _U_affine("parity2", [(1, 1), (1, -1), (-1, 1), (-1, -1)], [(0, 0), (1, 1), (3, 1), (2, -2)]))
    _case(cases, "box-z-x-plus-1", "lpow(x + 1) equals pow(x + 1) on the Z[x] box deg <= 3, coefficients [-3, 3]",
          "U-lpow-equals-pow", True, _U_box("z", [1, 1], 3, range(-3, 4), 8))
    _case(cases, "box-parity2-one-minus-x", "lpow(1 - x) equals pow(1 - x) on a ParityZ2[x] box",
          "U-lpow-equals-pow", True,
          _U_box("parity2", [(1, 1), (-1, -1)], 2, [(0, 0), (1, 1), (-1, -1), (2, 2), (-2, -2), (1, -1)], 8))
    return cases


# powconst

def _pc(spec: str, f: Callable[[PolyRing], RingValue], a: Callable[[PolyRing], RingValue],
        sample: Callable[[PolyRing], list] | None = None) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        pairs = sample(R) if sample else [(R.x(), -R.x() + 1)]
        return powconst_criterion(f(R), a(R), pairs, budget)
    return check


def _pc_dual(spec: str, a_entries: Any, values: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        lift = (lambda v: R.from_tuple(v)) if isinstance(a_entries, tuple) else (lambda v: R.from_int(v))
        a = lift(a_entries)
        sample = default_P_sample(R)[:3]
        mismatches, n = [], 0
        for v in values:
            f = lift(v)
            crit = powconst_criterion(f, a, sample, budget)
            direct = decide_pow(f, a, 12)
            n += 1
            if not (crit.known and direct.known) or crit.is_true != direct.is_true:
                mismatches.append((f, str(crit.verdict), str(direct.verdict)))
        return TruthValue.of(not mismatches, {"compared": n, "mismatches": mismatches}, "powconst-pair-criterion")
    return check


def suite_powconst(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    two = lambda R: R.from_tuple((2, 2))
    _case(cases, "cube", "(2,2)^3 is a power of (2,2) on the pair (x, -x + 1)", "powconst-pair-criterion", True,
          _pc("parity2", lambda R: two(R) ** 3, two))
    _case(cases, "x-not-power", "x is a power of (2,2)", "powconst-pair-criterion", False, _pc("parity2", lambda R: R.x(), two))
    _case(cases, "first-power", "(2,2) is a power of (2,2)", "powconst-pair-criterion", True, _pc("parity2", two, two))
    _case(cases, "mixed-constant", "(4,2) is a power of (2,2)", "powconst-pair-criterion", False,
          _pc("parity2", lambda R: R.from_tuple((4, 2)), two))
    _case(cases, "shifted-x", "x + (2,2) is a power of (2,2)", "powconst-pair-criterion", False,
          _pc("parity2", lambda R: R.x() + two(R), two))
    _case(cases, "z-eight", "8 is a power of 2 in Z[x]", "powconst-pair-criterion", True,
          _pc("z", lambda R: R.from_int(8), lambda R: R.from_int(2)))
    _case(cases, "z-six", "6 is a power of 2 in Z[x]", "powconst-pair-criterion", False,
          _pc("z", lambda R: R.from_int(6), lambda R: R.from_int(2)))
    _case(cases, "z-x-squared", "x^2 is a power of 2 in Z[x]", "powconst-pair-criterion", False,
          _pc("z", lambda R: R.x() ** 2, lambda R: R.from_int(2)))
    entries = [1, 2, 4, 8, 16, 32, -2, -4, 0, 3, 6, 12, 64]
    _case(cases, "dual-parity2", "the pair criterion agrees with direct powers on parity constants",
          "powconst-pair-criterion", True,
          _pc_dual("parity2", (2, 2), [(a, b) for a in entries for b in entries if (a - b) % 2 == 0][:60]))
    _case(cases, "dual-z", "the pair criterion agrees with direct powers of 3 on integers",
          "powconst-pair-criterion", True, _pc_dual("z", 3, [1, 3, 9, 27, 81, -3, -9, 2, 6, 0, 243, 54]))
    _case(cases, "empty-sample", "an empty pair sample is rejected", "powconst-pair-criterion", True,
          lambda b: _raises(lambda: powconst_criterion(polyring(build("z")).from_int(4),
                                                       polyring(build("z")).from_int(2), [], b), BadSample))
    _case(cases, "field-rejected", "the criterion refuses a field base", "powconst-pair-criterion", True,
          lambda b: _raises(lambda: powconst_criterion(polyring(build("zmod:5")).from_int(4),
                                                       polyring(build("zmod:5")).from_int(2),
                                                       [polyring(build("zmod:5")).x()], b), BadRing))
    return cases


# extract

def _extract_items(R: PolyRing) -> list[tuple[str, RingValue, bool]]:
    x = R.x()
    items = [(str(n), R.from_int(n), 1 <= n <= 6) for n in range(0, 7)]
    items += [("x", x, False), ("x+1", x + 1, False), ("const-2", R.lift(R.base.from_int(2)), True)]
    return items


def _lp_generic(R: PolyRing, p: RingValue, t: RingValue, cap: int, budget: Budget) -> TruthValue:
    phi_ = build_Lp(p, OraclePred("constant", (Var("t"),)), OraclePred("in_pow", (Var("y"), Lit(p))), cap)
    return evaluate(phi_, R, {"t": t}, budget)


def _extract_check(spec: str, p_fn: Callable[[PolyRing], RingValue], t_fn: Callable[[PolyRing], RingValue],
                   route: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        p, t = p_fn(R), t_fn(R)
        if route == "generic":
            return _lp_generic(R, p, t, budget.exp_cap, budget)
        tv = decide_Lp(t, p, None, budget)
        if tv.is_true:
            n, y, w = tv.evidence["n"], tv.evidence["y"], tv.evidence["w"]
            reverify = (y == R.pow(p, n) and w == geometric_sum(p, n) and y - 1 == w * (p - 1)
                        and R.divides(p - 1, w - t, budget).is_true)
            if not reverify:
                return TruthValue.false({"witness_failed": tv.evidence}, "exponent-extraction")
        return tv
    return check


def _sympy_witnesses(budget: Budget) -> TruthValue:
    X = sympy.Symbol("x")
    out = {}
    for n in range(1, 7):
        w = sum(X ** i for i in range(n))
        y = X ** n
        q, r = sympy.div(sympy.expand(w - n), X - 1, X)
        ok = sympy.expand(y - 1 - w * (X - 1)) == 0 and r == 0
        if not ok:
            return TruthValue.false({"n": n}, "exponent-extraction")
        out[n] = str(q)
    return TruthValue.true({"quotients": out}, "exponent-extraction")


def _list_alpha(budget: Budget) -> TruthValue:
    R = polyring(build("z"))
    x = R.x()
    values = [R.from_int(n) for n in range(7)] + [x, x + 1]
    alpha = _member_formula(values)
    phi_ = build_Lp(x, alpha, OraclePred("in_pow", (Var("y"), Lit(x))), budget.exp_cap)
    return evaluate(phi_, R, {"t": x}, budget)


def _member_formula(values: Sequence[RingValue]):
    out = Eq(Var("t"), Lit(values[0]))
    for v in values[1:]:
        out = Or(out, Eq(Var("t"), Lit(v)))
    return out


def suite_extract(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    R = polyring(build("z"))
    for label, t, expect in _extract_items(R):
        for route in ("generic", "exact"):
            _case(cases, f"z-x-{route}-{label}", f"L_x({label}) over Z[x] by the {route} route",
                  "exponent-extraction", expect, _extract_check("z", lambda R: R.x(), lambda R, t=t: t, route))
    _case(cases, "sympy-witnesses", "y = x^n and w = 1 + ... + x^(n-1) satisfy y - 1 = w(x - 1) and x - 1 | w - n",
          "exponent-extraction", True, _sympy_witnesses)
    _case(cases, "list-alpha-x", "with alpha an explicit list containing x, L_x(x) holds with n = 1",
          "list-alpha-admits-nonconstant", True, _list_alpha)
    for n in (1, 4, 6):
        for route in ("generic", "exact"):
            _case(cases, f"z-shifted-{route}-{n}", f"L_p({n}) with p = -x + 3 over Z[x] by the {route} route",
                  "exponent-extraction", True,
                  _extract_check("z", lambda R: -R.x() + 3, lambda R, n=n: R.from_int(n), route))
    for entries, expect in (((3, 3), True), ((3, 1), False), ((0, 0), False)):
        for route in ("generic", "exact"):
            _case(cases, f"parity2-{route}-{entries[0]}{entries[1]}", f"L_x({entries}) over ParityZ2[x] by the {route} route",
                  "exponent-extraction", expect,
                  _extract_check("parity2", lambda R: R.x(), lambda R, e=entries: R.from_tuple(e), route))
    return cases


# theta

def _theta_check(spec: str, t_fn: Callable[[PolyRing], RingValue], route: str,
                 pow2_route: str = "oracle") -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        t = t_fn(R)
        sample = default_P_sample(R)
        if route == "exact":
            return decide_theta(t, sample, budget)
        formula = build_theta(budget.exp_cap, pow2_route)
        named = {"P": ExplicitList(tuple(sample), True), "PQ": ExplicitList(tuple(sample[:2]), True)}
        return evaluate(formula, R, {"t": t}, budget, named_domains=named)
    return check


def _theta_witnesses(budget: Budget) -> TruthValue:
    R = polyring(build("parity2"))
    sample = default_P_sample(R)
    for k in (1, 2, 3):
        tv = decide_theta(R.from_int(k), sample, budget)
        if not tv.is_true or tv.evidence["z"] != R.from_int(2 ** k):
            return TruthValue.false({"k": k}, "theta-root-evaluation")
        for wit in tv.evidence["witnesses"]:
            p, y, w = wit["p"], wit["y"], wit["w"]
            ok = (y == p ** k and y - 1 == w * (p - 1) and R.divides(p - 1, w - k, budget).is_true
                  and R.divides(p - 2, y - 2 ** k, budget).is_true and in_U(p, budget).is_true)
            if not ok:
                return TruthValue.false({"k": k, "p": p}, "theta-root-evaluation")
    return TruthValue.true({"sample": sample}, "theta-root-evaluation")


def _phi_example(route: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity2"))
        x = R.x()
        t, a, z = R.from_int(2), R.from_int(2), R.from_int(4)
        if route == "exact":
            return decide_phi(t, a, z, x, budget)
        ast = phi(Var("t"), Var("a"), Var("z"), Var("p"), budget.exp_cap)
        tv = evaluate(ast, R, {"t": t, "a": a, "z": z, "p": x}, budget)
        return tv
    return check


def suite_theta(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    items = [("1", lambda R: R.from_int(1), True), ("2", lambda R: R.from_int(2), True),
             ("3", lambda R: R.from_int(3), True), ("x", lambda R: R.x(), False),
             ("x+1", lambda R: R.x() + 1, False), ("const-3-1", lambda R: R.from_tuple((3, 1)), False)]
    for label, t_fn, expect in items:
        for route in ("exact", "generic"):
            _case(cases, f"parity2-{route}-{label}", f"theta({label}) over ParityZ2[x] on the five sampled P elements, {route} route",
                  "theta-defines-positive-integers", expect, _theta_check("parity2", t_fn, route))
    _case(cases, "witnesses", "recorded theta witnesses y = p^k, w, z = 2^k re-verify for k = 1, 2, 3",
          "theta-root-evaluation", True, _theta_witnesses)
    _case(cases, "phi-exact", "phi(2, 2, 4, x) holds over ParityZ2[x] by root evaluation", "theta-root-evaluation", True,
          _phi_example("exact"))
    _case(cases, "phi-generic", "phi(2, 2, 4, x) holds over ParityZ2[x] with witnesses y = x^2, w = x + 1",
          "theta-root-evaluation", True, _phi_example("generic"))
    _case(cases, "criterion-route-2", "theta(2) holds with pow(2) checked by the pair criterion",
          "theta-defines-positive-integers", True, _theta_check("parity2", lambda R: R.from_int(2), "generic", "criterion"))
    for label, t_fn, expect in (("2", lambda R: R.from_int(2), True), ("x", lambda R: R.x(), False),
                                ("0", lambda R: R.zero(), False)):
        _case(cases, f"z-exact-{label}", f"theta({label}) over Z[x] on sampled P", "theta-defines-positive-integers",
              expect, _theta_check("z", t_fn, "exact"))
    _case(cases, "field-rejected", "theta refuses a field base", "theta-defines-positive-integers", True,
          lambda b: _raises(lambda: decide_theta(polyring(build("zmod:5")).one()), BadRing))
    return cases


# char-p

def _char_p_units(p: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(f"zmod:{p}")
        ok = (check_reduced(ring).is_true and check_indecomposable(ring).is_true
              and all(_is_unit(ring.from_int(k)) for k in range(1, p)))
        return TruthValue.of(ok, {"characteristic": ring.characteristic}, "positive-characteristic-integers")
    return check


def _char_p_extract(p: int) -> Callable[[Budget], TruthValue]:
    """Truth set of L_x on F_p constants plus x, x + 1."""
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(f"zmod:{p}"))
        x = R.x()
        items = [R.from_int(k) for k in range(p)] + [x, x + 1]
        images = {R.from_int(k).payload for k in range(1, p + 1)}
        truth = set()
        for t in items:
            tv = _lp_generic(R, x, t, budget.exp_cap, budget)
            if tv.is_unknown:
                return TruthValue.unknown("undecided", {"t": t})
            if tv.is_true:
                truth.add(t.payload)
        return TruthValue.of(truth == images, {"truth_set": sorted(str(R._wrap(v)) for v in truth),
                                               "missing": sorted(str(R._wrap(v)) for v in images - truth)},
                             "positive-characteristic-integers")
    return check


def _gamma_n(p: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(f"zmod:{p}"))
        x = R.x()
        formula = Eq(Var("t"), IntLit(1))
        for i in range(2, p + 1):
            formula = Or(formula, Eq(Var("t"), IntLit(i)))
        items = [R.from_int(k) for k in range(p)] + [x, x + 1, x * x]
        mism = []
        for t in items:
            g = evaluate(formula, R, {"t": t}, budget)
            lx = _lp_generic(R, x, t, budget.exp_cap, budget)
            if g.is_true != lx.is_true or not (g.known and lx.known):
                mism.append(t)
        return TruthValue.of(not mism, {"items": len(items), "mismatches": mism}, "positive-characteristic-integers")
    return check


def _char_of_reduced_indecomposable(budget: Budget) -> TruthValue:
    rows = {}
    for n in range(2, 13):
        ring = build(f"zmod:{n}")
        ri = check_reduced(ring).is_true and check_indecomposable(ring).is_true
        rows[n] = ri
        if ri != sympy.isprime(n):
            return TruthValue.false({"n": n, "reduced_indecomposable": ri}, "reduced-indecomposable-prime-characteristic")
    return TruthValue.true(rows, "reduced-indecomposable-prime-characteristic")


def _units_contain_integers(p: int, with_zero: bool) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(f"zmod:{p}"))
        for k in range(1, p + 1):
            t = R.from_int(k)
            inside = poly_is_unit(t, budget).is_true or (with_zero and t.is_zero())
            if not inside:
                return TruthValue.false({"integer": k, "value": t}, "units-miss-zero-in-positive-characteristic")
        return TruthValue.true({"integers": p}, "units-miss-zero-in-positive-characteristic")
    return check


def _intlit_char(budget: Budget) -> TruthValue:
    ring = build("zmod:5")
    terms = {"5": IntLit(5), "7": IntLit(7), "12": IntLit(12), "-3": Neg(IntLit(3))}
    checks = {k: eval_term(t, {}, ring) == ring.from_int(int(k) % 5) for k, t in terms.items()}
    return TruthValue.of(all(checks.values()), checks, "positive-characteristic-integers")


def suite_char_p(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for p in (2, 3, 5, 7):
        _case(cases, f"invertible-{p}", f"F_{p} is reduced, indecomposable and every integer 1..{p - 1} is a unit",
              "positive-characteristic-integers", True, _char_p_units(p))
        _case(cases, f"extract-{p}", f"L_x with constant alpha over F_{p}[x] defines the images of 1..{p}",
              "positive-characteristic-integers", True, _char_p_extract(p))
        _case(cases, f"gamma-{p}", f"the disjunction t = 1 or ... or t = {p} agrees with L_x over F_{p}[x]",
              "positive-characteristic-integers", True, _gamma_n(p))
        _case(cases, f"units-contain-{p}", f"every positive integer is a unit of F_{p}[x]",
              "units-miss-zero-in-positive-characteristic", False, _units_contain_integers(p, False))
        _case(cases, f"units-or-zero-{p}", f"every positive integer is a unit or zero in F_{p}[x]",
              "units-miss-zero-in-positive-characteristic", True, _units_contain_integers(p, True))
    _case(cases, "prime-characteristic", "Z/n is reduced and indecomposable exactly for prime n <= 12",
          "reduced-indecomposable-prime-characteristic", True, _char_of_reduced_indecomposable)
    _case(cases, "intlit-mod-5", "integer literals reduce modulo the characteristic in Z/5",
          "positive-characteristic-integers", True, _intlit_char)
    return cases


# lpow-further

def _lpow_zero_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        members = _members(ring, ring.zero())
        is_field = all(a.is_zero() or _is_unit(a) for a in ring.elements())
        expected = {ring.zero_payload} if is_field else set()
        return TruthValue.of(members == expected, {"field": is_field, "size": len(members)}, "lpow-of-zero")
    return check


def _unit_affine_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        for p in _units(ring):
            affine = {((p - 1) * g + 1).payload for g in ring.elements()}
            if _members(ring, p) != affine:
                return TruthValue.false({"p": p}, "unit-lpow-affine")
        return TruthValue.true({"units": len(_units(ring))}, "unit-lpow-affine")
    return check


def _nonempty_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        is_field = all(a.is_zero() or _is_unit(a) for a in ring.elements())
        for p in ring.elements():
            members = _members(ring, p)
            if bool(members) != (p.payload in members):
                return TruthValue.false({"p": p}, "lpow-nonempty-iff-self-member")
            if members and not is_field and p.is_zero():
                return TruthValue.false({"p": p, "zero": True}, "lpow-nonempty-iff-self-member")
        return TruthValue.true({"elements": ring.size()}, "lpow-nonempty-iff-self-member")
    return check


def _decomposition_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        units = _units(ring)
        n_checked = 0
        for f_payload, p_payload in lpow_table(spec):
            f, p = ring._wrap(f_payload), ring._wrap(p_payload)
            infinite = all(ring.divides(p ** k, f).is_true for k in range(1, ring.size() + 2))
            shaped = any(u * p ** n == f and ring.divides(p - 1, u - 1).is_true
                         for u in units for n in range(1, ring.size() + 2))
            n_checked += 1
            if not (infinite or shaped):
                return TruthValue.false({"f": f, "p": p}, "lpow-decomposition")
        return TruthValue.true({"members": n_checked}, "lpow-decomposition")
    return check


def _unit_closure_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        table = lpow_table(spec)
        units = _units(ring)
        n = 0
        for f_payload, p_payload in table:
            f, p = ring._wrap(f_payload), ring._wrap(p_payload)
            for u in units:
                if ring.divides(p - 1, u - 1).is_true:
                    n += 1
                    if ((u * f).payload, p_payload) not in table:
                        return TruthValue.false({"f": f, "p": p, "u": u}, "lpow-unit-closure")
        return TruthValue.true({"instances": n}, "lpow-unit-closure")
    return check


def _self_member_finite(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        table = lpow_table(spec)
        n = 0
        for p in ring.elements():
            if _is_unit(p) or irreducible(p, budget).is_true:
                n += 1
                if (p.payload, p.payload) not in table:
                    return TruthValue.false({"p": p}, "irreducible-in-own-lpow")
        return TruthValue.true({"instances": n}, "irreducible-in-own-lpow")
    return check


def _unit_lpow_z(budget: Budget) -> TruthValue:
    R = polyring(build("z"))
    p = R.from_int(-1)
    wanted = [R.one(), p, R.from_int(3)]
    verdicts = [decide_lpow(f, p, budget).verdict for f in wanted]
    three_power = decide_pow(R.from_int(3), p, budget.exp_cap)
    ok = all(v.is_true for v in verdicts) and three_power.is_false and (p - 1) * (-1) + 1 == R.from_int(3)
    return TruthValue.of(ok, {"members": wanted, "three_is_power": str(three_power.verdict)}, "unit-lpow-affine")


def _unit_lpow_integers(budget: Budget) -> TruthValue:
    Z = build("z")
    p = Z.from_int(-1)
    got = {n for n in range(-6, 7) if decide_lpow(Z.from_int(n), p, budget).verdict.is_true}
    return TruthValue.of(got == {n for n in range(-6, 7) if n % 2}, {"members": sorted(got)}, "unit-lpow-affine")


def _zero_poly(budget: Budget) -> TruthValue:
    R = polyring(build("z"))
    v = decide_lpow(R.zero(), R.zero(), budget)
    return v.verdict if v.exact else TruthValue.unknown("not exact")


def _members_regular(spec: str, ps: Callable[[PolyRing], list[RingValue]], deg: int,
                     coeffs: Sequence[Any]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        base = R.base
        cs = [base.from_tuple(c) if isinstance(c, tuple) else base.from_int(c) for c in coeffs]
        box = list(poly_box(R, deg, cs))
        found = 0
        for p in ps(R):
            if _is_unit(p):
                continue
            for f in box:
                if decide_lpow(f, p, budget).verdict.is_true:
                    found += 1
                    if R.annihilator([f]) is not None:
                        return TruthValue.false({"p": p, "f": f}, "lpow-members-regular")
        return TruthValue.true({"members": found}, "lpow-members-regular")
    return check


def _quotient_lpow(budget: Budget) -> TruthValue:
    ring = build("quot:2(t-1),t2-1")
    t = ring.symbols["tbar"]
    members = []
    for a in range(-6, 7):
        for b in (0, 1):
            f = ring.from_int(a) + ring.from_int(b) * t
            v = decide_lpow(f, t, budget).verdict
            if v.is_unknown:
                return TruthValue.unknown("undecided", {"f": f})
            if v.is_true:
                members.append(f)
    facts = {"members": members, "square_of_shift": (t - 1) ** 2, "t_squared": t * t}
    ok = ({m.payload for m in members} == {ring.one().payload, t.payload} and ((t - 1) ** 2).is_zero()
          and not (t - 1).is_zero() and (t * t).is_one() and ring.divides(t - 1, ring.from_int(-1), budget).is_false)
    return TruthValue.of(ok, facts, "quotient-lpow-two-elements")


def _dual_zero_divisor(p: int) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(f"fpz2:{p}"))
        z = R.symbols["zbar"]
        member = decide_lpow(z, z, budget)
        irr = irreducible(z, budget)
        zero_divisor = (z * z).is_zero() and not z.is_zero()
        ok = member.verdict.is_true and zero_divisor and not _is_unit(z) and not irr.is_false
        return TruthValue.of(ok, {"member": str(member.verdict.verdict), "irreducible": str(irr.verdict),
                                  "annihilator": R.annihilator([z])}, "zero-divisor-logical-power")
    return check


def _tri_equivalence(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        base = R.base
        box = list(poly_box(R, 1, base.elements()))
        rows = []
        for c in base.elements():
            p = R.lift(c)
            a = decide_lpow(R.zero(), p, budget).verdict
            b = _is_unit(p) and _is_unit(p - 1)
            everything = all(decide_lpow(f, p, budget).verdict.is_true for f in box)
            if a.is_unknown:
                return TruthValue.unknown("undecided", {"p": p})
            rows.append((p, a.is_true, b, everything))
            if not (a.is_true == b == everything):
                return TruthValue.false({"p": p, "zero_member": a.is_true, "units": b, "all": everything},
                                        "zero-in-lpow-iff-units")
        return TruthValue.true({"constants": len(rows), "all_three": [str(r[0]) for r in rows if r[1]]},
                               "zero-in-lpow-iff-units")
    return check


def _square_multiple(spec: str, ps: Callable[[PolyRing], list[RingValue]]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        box = list(poly_box(R, 1, R.base.elements()))
        n = 0
        for p in ps(R):
            for f in box:
                if decide_lpow(f, p, budget).verdict.is_true and R.divides(f * f, f, budget).is_true:
                    n += 1
                    if not _is_unit(p):
                        return TruthValue.false({"p": p, "f": f}, "square-multiple-forces-unit")
        return TruthValue.true({"instances": n}, "square-multiple-forces-unit")
    return check


def _self_member_poly(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        n = 0
        for p in poly_box(R, 1, R.base.elements()):
            if decide_lpow(p, p, budget).verdict.is_true:
                n += 1
                if not (_is_unit(p) or irreducible(p, budget).is_true):
                    return TruthValue.false({"p": p}, "self-member-unit-or-irreducible")
        return TruthValue.true({"members": n}, "self-member-unit-or-irreducible")
    return check


def suite_lpow_further(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    small = [s for s in FINITE_SPECS if build(s).size() <= 12]
    for spec in FINITE_SPECS:
        _case(cases, f"zero-{spec}", f"lpow(0) is {{0}} for a field and empty otherwise, over {spec}",
              "lpow-of-zero", True, _lpow_zero_finite(spec))
        _case(cases, f"unit-{spec}", f"lpow(p) = (p-1)S + 1 for every unit p of {spec}", "unit-lpow-affine", True,
              _unit_affine_finite(spec))
        _case(cases, f"nonempty-{spec}", f"lpow(p) nonempty iff p in lpow(p), over {spec}",
              "lpow-nonempty-iff-self-member", True, _nonempty_finite(spec))
    for spec in small:
        _case(cases, f"decomposition-{spec}", f"members of lpow(p) are infinitely divisible or u p^n, over {spec}",
              "lpow-decomposition", True, _decomposition_finite(spec))
        _case(cases, f"closure-{spec}", f"lpow(p) is closed under units u with p - 1 | u - 1, over {spec}",
              "lpow-unit-closure", True, _unit_closure_finite(spec))
        _case(cases, f"self-{spec}", f"units and irreducibles lie in their own lpow, over {spec}",
              "irreducible-in-own-lpow", True, _self_member_finite(spec))
    _case(cases, "zero-z-poly", "0 in lpow(0) over Z[x]", "lpow-of-zero", False, _zero_poly)
    _case(cases, "unit-minus-one", "1, -1 and 3 lie in lpow(-1) over Z[x] and 3 is not a power of -1",
          "unit-lpow-affine", True, _unit_lpow_z)
    _case(cases, "unit-minus-one-integers", "lpow(-1) in Z is the odd integers on [-6, 6]", "unit-lpow-affine", True,
          _unit_lpow_integers)
    _case(cases, "regular-parity2", "members of lpow(p) in a ParityZ2[x] box are regular for nonunit p",
          "lpow-members-regular", True,
          _members_regular("parity2", lambda R: [R.x(), -R.x() + 1, R.x() + 2, R.from_tuple((3, 1))], 2,
                           [(0, 0), (1, 1), (-1, -1), (2, 0), (0, 2), (1, -1)]))
    _case(cases, "regular-bool2", "members of lpow(p) in a F2^2[x] box are regular for nonunit p",
          "lpow-members-regular", True,
          _members_regular("bool:2", lambda R: [R.x(), R.x() + 1, R.from_tuple((1, 0))], 2, [0, 1, (1, 0), (0, 1)]))
    _case(cases, "quotient-two-members", "lpow(t) over |a| <= 6 in Z[t]/(2(t-1), t^2-1) is {1, t}, with (t-1)^2 = 0",
          "quotient-lpow-two-elements", True, _quotient_lpow)
    for p in (2, 3, 5):
        _case(cases, f"dual-{p}", f"z in lpow(z) over F_{p}[z]/(z^2)[x] though z is a zero divisor",
              "zero-divisor-logical-power", True, _dual_zero_divisor(p))
    for spec in ("zmod:4", "fpz2:2", "fpz2:3", "fpz2:5"):
        _case(cases, f"tri-{spec}", f"0 in lpow(p), p and p-1 units, and lpow(p) = everything agree for constants p over {spec}[x]",
              "zero-in-lpow-iff-units", True, _tri_equivalence(spec))
    _case(cases, "square-multiple-zmod4", "a square-multiple member of lpow(p) forces p to be a unit over Z/4[x]",
          "square-multiple-forces-unit", True,
          _square_multiple("zmod:4", lambda R: [R.x(), R.x() + 1, R.from_coeffs([1, 2]), R.from_int(3), R.from_int(2)]))
    _case(cases, "square-multiple-bool2", "a square-multiple member of lpow(p) forces p to be a unit over F2^2[x]",
          "square-multiple-forces-unit", True,
          _square_multiple("bool:2", lambda R: [R.x(), R.x() + 1, R.one(), R.from_tuple((1, 0))]))
    _case(cases, "self-member-zmod4", "p in lpow(p) forces p to be a unit or irreducible over Z/4[x], deg <= 1",
          "self-member-unit-or-irreducible", True, _self_member_poly("zmod:4"))
    _case(cases, "self-member-bool2", "p in lpow(p) forces p to be a unit or irreducible over F2^2[x], deg <= 1",
          "self-member-unit-or-irreducible", True, _self_member_poly("bool:2"))
    return cases


# equivalences

def _idempotents(ring: Ring) -> list[RingValue]:
    return [e for e in ring.elements() if is_idempotent(e) and not e.is_zero() and not e.is_one()]


def _product_split(ring: Ring, e: RingValue) -> bool:
    """r -> (re, r(1-e)) is a bijection onto Re x R(1-e) respecting + and *."""
    f = 1 - e
    els = ring.elements()
    image = {((r * e).payload, (r * f).payload) for r in els}
    left = {(r * e).payload for r in els}
    right = {(r * f).payload for r in els}
    if len(image) != len(els) or len(image) != len(left) * len(right):
        return False
    if len(left) < 2 or len(right) < 2:
        return False
    return all((r * e) * (s * f) == ring.zero() and r == r * e + r * f for r in els for s in els)


def _factorizations(R: PolyRing, deg_g: int, deg_h: int, positive: bool) -> tuple[RingValue, RingValue] | None:
    x = R.x()
    els = R.base.elements()
    gs = [g for g in poly_box(R, deg_g, els) if not poly_is_unit(g).is_true and (R.degree(g) or 0) >= (1 if positive else 0)]
    hs = [h for h in poly_box(R, deg_h, els) if not poly_is_unit(h).is_true and (R.degree(h) or 0) >= (1 if positive else 0)]
    for g in gs:
        for h in hs:
            if g * h == x:
                return g, h
    return None


def _pentavalente(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        base = build(spec)
        R = polyring(base)
        idem = _idempotents(base)
        a = bool(idem)
        b = any(_product_split(base, e) for e in idem)
        c = any(g.ring.degree(g) == 1 and h.ring.degree(h) == 1 for g, h in [_factorizations(R, 1, 1, True)] if g is not None) \
            if _factorizations(R, 1, 1, True) else False
        small = base.size() <= 4
        d = _factorizations(R, 2 if small else 1, 1, True) is not None
        e = _factorizations(R, 2 if small else 1, 1, False) is not None
        facts = {"idempotent": a, "product": b, "linear": c, "positive_degree": d, "any": e}
        return TruthValue.of(a == b == c == d == e, facts, "idempotent-product-split")
    return check


def _one_factorization(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        base = build(spec)
        reduced = check_reduced(base).is_true
        wit = next(_linear_base_triples(base), None)
        return TruthValue.of(reduced == (wit is None), {"reduced": reduced, "factors": wit},
                             "one-factorization-iff-nonreduced")
    return check


def _idempotents_constant(spec: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        bad = next((e for e in poly_box(R, 2, R.base.elements()) if e * e == e and not R.is_constant(e)), None)
        n = sum(1 for e in poly_box(R, 2, R.base.elements()) if e * e == e)
        return TruthValue.of(bad is None, {"idempotents": n, "nonconstant": bad}, "idempotents-are-constant")
    return check


def suite_equivalences(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec in FINITE_SPECS:
        if build(spec).size() <= 12:
            _case(cases, f"five-{spec}", f"idempotent, product, linear, positive-degree and any factorization of x agree over {spec}",
                  "idempotent-product-split", True, _pentavalente(spec))
    for spec in FINITE_SPECS:
        _case(cases, f"one-{spec}", f"1 factors into two linear polynomials iff {spec} is not reduced",
              "one-factorization-iff-nonreduced", True, _one_factorization(spec))
    for spec in FINITE_SPECS:
        if build(spec).size() <= 12:
            _case(cases, f"idempotent-{spec}", f"idempotents of {spec}[x] of degree <= 2 are constant",
                  "idempotents-are-constant", True, _idempotents_constant(spec))
    return cases


# zxz

def _zxz_candidates(R: PolyRing) -> list[RingValue]:
    out = [R.from_tuple(e) for e in _parity_pairs(-2, 6)]
    return out + [R.x(), R.x() + R.from_tuple((5, 1))]


def _beta_truth(route: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity2"))
        formula = beta(R)
        truth = []
        for t in _zxz_candidates(R):
            tv = decide_beta(t) if route == "exact" else evaluate(formula, R, {"t": t}, budget)
            if tv.is_unknown:
                return TruthValue.unknown("undecided", {"t": t})
            if tv.is_true:
                truth.append(t)
        expected = {R.from_tuple((5, 1)).payload, R.from_tuple((1, 5)).payload}
        return TruthValue.of({t.payload for t in truth} == expected, {"truth_set": truth}, "beta-mixed-units")
    return check


def _dual(decider: Callable[[RingValue], TruthValue], builder: Callable[[PolyRing, int], Any],
          t_fn: Callable[[PolyRing], RingValue], cite: str, cap: int = 3) -> Callable[[Budget], TruthValue]:
    """Both routes must agree; returns the shared verdict."""
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity2"))
        t = t_fn(R)
        exact = decider(t)
        generic = evaluate(builder(R, cap), R, {"t": t}, budget)
        if exact.known and generic.known and exact.is_true != generic.is_true:
            return TruthValue.unknown("routes disagree", {"exact": exact, "generic": generic})
        if generic.is_unknown:
            return TruthValue.unknown("generic route undecided", {"exact": exact})
        return TruthValue.of(exact.is_true, {"exact": exact.evidence, "generic": generic.evidence}, cite)
    return check


def _D_contains(budget: Budget) -> TruthValue:
    R = polyring(build("parity2"))
    rows = []
    for d in range(-12, 13):
        tv = decide_D_zxz(R.from_tuple((d, d)), budget)
        expect = d != 0 and d % 5 != 0
        if tv.is_true != expect or not tv.known:
            return TruthValue.false({"d": d}, "order-of-five")
        rows.append(d)
    return TruthValue.true({"checked": rows}, "order-of-five")


def _A_between(budget: Budget) -> TruthValue:
    R = polyring(build("parity2"))
    ints = all(decide_alpha_zxz(R.from_int(n), budget).is_true for n in range(-10, 11))
    nonconst = [R.x(), R.x() + 1, R.from_coeffs([(1, 1), (2, 0)]), R.x() * R.x()]
    outside = all(decide_alpha_zxz(f, budget).is_false for f in nonconst)
    return TruthValue.of(ints and outside, {"integers": ints, "nonconstants_excluded": outside},
                         "parity-constants-defined")


def _lpow_pow_constant(spec: str, c_entries: tuple, extra_units: Sequence[tuple]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build(spec))
        c = R.from_tuple(c_entries)
        cands = []
        for n in range(1, 4):
            for u in extra_units:
                cands.append((R.from_tuple(u) * c ** n, u == tuple(1 for _ in u)))
        cands.append((c + 1, False))
        cands.append((R.x() * c, False))
        for f, expect in cands:
            v = decide_lpow(f, c, budget).verdict
            if v.is_unknown or v.is_true != expect:
                return TruthValue.false({"f": f, "verdict": str(v.verdict)}, "prime-lpow-equals-pow")
        return TruthValue.true({"candidates": len(cands)}, "prime-lpow-equals-pow")
    return check


def suite_zxz(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for route in ("exact", "generic"):
        _case(cases, f"beta-{route}", f"beta defines {{(5,1), (1,5)}} among parity constants, {route} route",
              "beta-mixed-units", True, _beta_truth(route))
    for label, entries, expect in (("4-4", (4, 4), True), ("24-4", (24, 4), True), ("4-0", (4, 0), False),
                                   ("5-5", (5, 5), False)):
        _case(cases, f"gamma-{label}", f"gamma({entries}) by both routes", "gamma-constant-values", expect,
              _dual(decide_gamma, lambda R, cap: gamma(R, cap), lambda R, e=entries: R.from_tuple(e), "gamma-constant-values"))
    _case(cases, "gamma-x", "gamma(x) by both routes", "gamma-constant-values", False,
          _dual(decide_gamma, lambda R, cap: gamma(R, cap), lambda R: R.x(), "gamma-constant-values"))
    for label, entries, expect in (("3-3", (3, 3), True), ("7-3", (7, 3), True), ("4-4", (4, 4), True)):
        _case(cases, f"alpha-{label}", f"alpha({entries}) by both routes", "order-of-five", expect,
              _dual(lambda t: decide_alpha_zxz(t), lambda R, cap: alpha_zxz(R, cap), lambda R, e=entries: R.from_tuple(e),
                    "order-of-five"))
    _case(cases, "alpha-x", "alpha(x) by both routes", "order-of-five", False,
          _dual(lambda t: decide_alpha_zxz(t), lambda R, cap: alpha_zxz(R, cap), lambda R: R.x(), "order-of-five"))
    _case(cases, "D-diagonal", "D contains (d, d) exactly for d not a multiple of 5, |d| <= 12", "order-of-five", True,
          _D_contains)
    _case(cases, "A-between", "A contains the integers -10..10 and excludes sampled nonconstants",
          "parity-constants-defined", True, _A_between)
    _case(cases, "lpow-5-1", "lpow((5,1)) agrees with pow((5,1)) on unit multiples of its powers",
          "prime-lpow-equals-pow", True,
          _lpow_pow_constant("parity2", (5, 1), [(1, 1), (1, -1), (-1, 1), (-1, -1)]))
    _case(cases, "wrong-base", "the pair formulas refuse ParityZk with k = 3", "beta-mixed-units", True,
          lambda b: _raises(lambda: decide_gamma(polyring(build("parity:3")).one()), BadRing))
    return cases


# zk

def _zk_set(builder: Callable[[PolyRing], Any], var: str, expected: Callable[[tuple], bool],
            candidates: Callable[[PolyRing], list[RingValue]], cite: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity:3"))
        formula = builder(R)
        truth, wrong = [], []
        for t in candidates(R):
            tv = evaluate(formula, R, {var: t}, budget)
            if tv.is_unknown:
                return TruthValue.unknown("undecided", {var: t})
            entries = R.constant_term(t).payload if R.is_constant(t) else None
            want = entries is not None and expected(entries)
            if tv.is_true:
                truth.append(t)
            if tv.is_true != want:
                wrong.append(t)
        return TruthValue.of(not wrong, {"truth_set": truth, "wrong": wrong}, cite)
    return check


def _unit_tuples(R: PolyRing) -> list[RingValue]:
    return [R.lift(u) for u in R.base.units()]


def _shape(entries: tuple, special: int, other: int) -> bool:
    return sorted(entries).count(special) == 1 and all(e == other for e in entries if e != special)


def _alpha_zk(t_fn: Callable[[PolyRing], RingValue], route: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        R = polyring(build("parity:3"))
        t = t_fn(R)
        if route == "exact":
            return decide_alpha_zk(t, budget)
        return evaluate(alpha_zk(R, budget.exp_cap), R, {"t": t}, budget)
    return check


def suite_zk(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    _case(cases, "D-units", "D is the unit tuples with one entry 1 and the others -1", "one-entry-tuples", True,
          _zk_set(lambda R: D_zk(R), "d", lambda e: _shape(e, 1, -1), _unit_tuples, "one-entry-tuples"))
    _case(cases, "C-shape", "C is the tuples with one entry 5 and the others 1", "one-entry-tuples", True,
          _zk_set(lambda R: C_zk(R), "c", lambda e: _shape(e, 5, 1),
                  lambda R: [2 * u + 3 for u in _unit_tuples(R)] + [R.from_tuple((5, 5, 1)), R.x()], "one-entry-tuples"))
    _case(cases, "E-shape", "E is the tuples with one entry 2 and the others 0", "one-entry-tuples", True,
          _zk_set(lambda R: E_zk(R), "e", lambda e: _shape(e, 2, 0),
                  lambda R: [u + 1 for u in _unit_tuples(R)] + [R.from_tuple((2, 2, 0))], "one-entry-tuples"))
    items = [("1-1-1", lambda R: R.from_tuple((1, 1, 1)), True), ("5-m1-3", lambda R: R.from_tuple((5, -1, 3)), True),
             ("0-0-0", lambda R: R.zero(), True), ("7-3-m1", lambda R: R.from_tuple((7, 3, -1)), True),
             ("x-e", lambda R: R.x() * R.from_tuple((2, 0, 0)), False), ("x", lambda R: R.x(), False)]
    for label, t_fn, expect in items:
        for route in ("exact", "generic"):
            _case(cases, f"alpha-{route}-{label}", f"alpha_zk({label}) over ParityZ3[x], {route} route",
                  "parity-constants-defined", expect, _alpha_zk(t_fn, route))
    _case(cases, "lpow-c", "lpow((5,1,1)) agrees with pow((5,1,1)) on unit multiples of its powers",
          "prime-lpow-equals-pow", True,
          _lpow_pow_constant("parity:3", (5, 1, 1), [(1, 1, 1), (-1, 1, 1), (1, -1, -1), (-1, -1, -1)]))
    return cases


# qplane

def _random_qp(ring: QPlane, rng: random.Random, max_deg: int = 3) -> RingValue:
    while True:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            m = rng.randint(0, max_deg)
            n = rng.randint(0, max_deg - m)
            terms[(m, n)] = rng.randint(-3, 3)
        f = ring.from_terms(terms)
        if not f.is_zero():
            return f


def _qp_pairs(spec: str, seed: int, count: int = 200) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        rng = random.Random(seed)
        for i in range(count):
            g, h = _random_qp(ring, rng), _random_qp(ring, rng)
            gh = g * h
            mx = tuple(a + b for a, b in zip(ring.deglex_max(g), ring.deglex_max(h)))
            mn = tuple(a + b for a, b in zip(ring.deglex_min(g), ring.deglex_min(h)))
            ok = (not gh.is_zero() and ring.deglex_max(gh) == mx and ring.deglex_min(gh) == mn
                  and ring.right_quotient(h, gh) == g)
            if not ok:
                return TruthValue.false({"pair": i, "g": g, "h": h}, "deglex-additivity")
        return TruthValue.true({"pairs": count, "seed": seed}, "deglex-additivity")
    return check


def _qp_box(spec: str, coeffs: Sequence[int]) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        monos = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0)]
        x = ring.x
        members, mism, n = [], [], 0
        seen = set()
        for cs in itertools.product(coeffs, repeat=len(monos)):
            f = ring.from_terms(dict(zip(monos, cs)))
            if f.payload in seen:
                continue
            seen.add(f.payload)
            n += 1
            decided = qp_decide_lpow_x(f, budget)
            direct = decide_pow(f, x, budget.exp_cap)
            if decided.is_unknown or direct.is_unknown or decided.is_true != direct.is_true:
                mism.append(f)
            if decided.is_true:
                members.append(f)
        return TruthValue.of(not mism, {"scanned": n, "members": members, "mismatches": mism[:5]},
                             "right-divisors-of-x-powers")
    return check


def _qp_extract(spec: str) -> Callable[[Budget], TruthValue]:
    """Extraction on {0..6, y, 2}: the recovered set must be the items equal to n*1 for some n >= 1."""
    def check(budget: Budget) -> TruthValue:
        ring = build(spec)
        items = [(str(k), ring.from_int(k)) for k in range(7)] + [("y", ring.y), ("2", ring.from_int(2))]
        char = ring.characteristic
        truth, wrong = [], []
        for label, t in items:
            tv = qp_extract(t)
            if ring.is_constant(t):
                c = ring.constant(t)
                want = c >= 1 if char == 0 else True
            else:
                want = False
            if tv.is_true:
                truth.append(label)
            if tv.is_unknown or tv.is_true != want:
                wrong.append(label)
        return TruthValue.of(not wrong, {"truth_set": truth, "wrong": wrong}, "exponent-of-constant")
    return check


def _qp_examples(budget: Budget) -> TruthValue:
    Zq = build("qplane:D=Z,q=2")
    F5 = build("qplane:D=Fp(5),q=2")
    x, y = Zq.x, Zq.y
    facts = {
        "yx=2xy": y * x == 2 * (x * y),
        "x^3 in lpow(x)": qp_decide_lpow_x(x ** 3, budget).is_true,
        "xy not in lpow(x) over Z": qp_decide_lpow_x(x * y, budget).is_false,
        "2x^2 not in lpow(x)": qp_decide_lpow_x(2 * x ** 2, budget).is_false,
        "xy not in lpow(x) over F5": qp_decide_lpow_x(F5.x * F5.y, budget).is_false,
        "x^3 in lpow(x) over F5": qp_decide_lpow_x(F5.x ** 3, budget).is_true,
    }
    return TruthValue.of(all(facts.values()), facts, "right-divisors-of-x-powers")


def suite_qplane(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for spec, label in (("qplane:D=Z,q=2", "z"), ("qplane:D=Fp(5),q=2", "f5")):
        _case(cases, f"pairs-{label}", f"200 seeded pairs over {spec}: max and min add, right cancellation holds",
              "deglex-additivity", True, _qp_pairs(spec, seed))
        _case(cases, f"box-{label}", f"bounded scan of pow(x) matches the exact lpow(x) decider over {spec}",
              "right-divisors-of-x-powers", True, _qp_box(spec, (0, 1, -1) if label == "z" else (0, 1, 2)))
        _case(cases, f"extract-{label}", f"exponent extraction on {{0..6, y, 2}} recovers the positive integer images over {spec}",
              "exponent-of-constant", True, _qp_extract(spec))
    _case(cases, "examples", "worked quantum plane examples", "right-divisors-of-x-powers", True, _qp_examples)
    return cases


# diagram

ROSTER = ("z", "parity2", "zmod:5", "zmod:4", "prod(z,z)", "prod(z,zmod:4)")


def _diagram_box(R: PolyRing) -> list[RingValue]:
    base = R.base
    if base.is_finite:
        cs = list(base.elements())
        deg = 2 if base.size() > 4 else 3
    else:
        seen: dict[Any, RingValue] = {}
        for c in [base.zero(), base.one(), -base.one()] + base.coefficient_sample():
            seen.setdefault(c.payload, c)
        cs = list(seen.values())[:7]
        deg = 2
    out = list(poly_box(R, deg, cs))
    # the unit twist u = 1 - a(x - 1) for nilpotent a
    x = R.x()
    for a in cs:
        if not a.is_zero() and base.is_nilpotent(a):
            out.append((1 - R.lift(a) * (x - 1)) * x)
    return out


@lru_cache(maxsize=None)
def diagram_properties(spec: str, cap: int = 5) -> dict[str, TruthValue]:
    """The ten diagram properties of R, each as a verdict with evidence."""
    base = build(spec)
    R = polyring(base)
    x = R.x()
    red = check_reduced(base)
    ind = check_indecomposable(base)
    irr = x_irreducible(base)
    own = decide_lpow(x, x)
    props: dict[str, TruthValue] = {"reduced": red, "indecomposable": ind, "x_irreducible": irr,
                                    "x_in_lpow": own.verdict}
    props["reduced_indecomposable"] = TruthValue.of(red.is_true and ind.is_true, cite="diagram-arrow") \
        if red.known and ind.known else TruthValue.unknown("undecided")
    # lpow(x) nonempty: a refuter of x divides every candidate member
    if own.verdict.is_true:
        props["lpow_nonempty"] = TruthValue.true({"member": x}, "lpow-nonempty-iff-self-member")
    else:
        ev = own.verdict.evidence if isinstance(own.verdict.evidence, dict) else {}
        g = ev.get("refuter")
        if g is not None and R.divides(g, x).is_true:
            props["lpow_nonempty"] = TruthValue.false({"refuter_divides_every_member": g}, "lpow-nonempty-iff-self-member")
        else:
            props["lpow_nonempty"] = TruthValue.unknown("no transferable refuter", ev)
    # pow(x) in lpow(x), on exponents up to cap
    pow_in = TruthValue.true({"exponents": cap}, "diagram-arrow", "exponents up to the cap")
    for n in range(1, cap + 1):
        v = decide_lpow(x ** n, x).verdict
        if v.is_false:
            pow_in = TruthValue.false({"power": x ** n}, "diagram-arrow")
            break
        if v.is_unknown:
            pow_in = TruthValue.unknown("undecided power")
    props["pow_in_lpow"] = pow_in
    # lpow(x) in pow(x), on a box
    lpow_in = TruthValue.true({"box": 0}, "diagram-arrow", "on the scanned box")
    box = _diagram_box(R)
    nonempty_seen = 0
    for f in box:
        v = decide_lpow(f, x).verdict
        if v.is_true:
            nonempty_seen += 1
            if not decide_pow(f, x, 12).is_true:
                lpow_in = TruthValue.false({"member_not_power": f}, "diagram-arrow")
                break
    if lpow_in.is_true:
        lpow_in = TruthValue.true({"box": len(box), "members": nonempty_seen}, "diagram-arrow", "on the scanned box")
    props["lpow_in_pow"] = lpow_in
    props["pow_eq_lpow"] = _and(pow_in, lpow_in)
    props["x_in_and_lpow_in_pow"] = _and(own.verdict, lpow_in)
    return props


def _and(a: TruthValue, b: TruthValue) -> TruthValue:
    if a.is_false or b.is_false:
        return TruthValue.false(cite="diagram-arrow")
    if a.is_true and b.is_true:
        return TruthValue.true(cite="diagram-arrow")
    return TruthValue.unknown("undecided")


ARROWS: list[tuple[str, str, str]] = [
    ("1", "reduced_indecomposable", "pow_eq_lpow"),
    ("2", "reduced_indecomposable", "indecomposable"),
    ("3", "pow_eq_lpow", "pow_in_lpow"),
    ("4", "indecomposable", "x_irreducible"),
    ("5", "pow_in_lpow", "x_in_lpow"),
    ("6", "x_in_lpow", "x_irreducible"),
    ("7", "pow_in_lpow", "reduced"),
    ("8", "x_in_and_lpow_in_pow", "x_in_lpow"),
    ("9", "x_in_lpow", "lpow_nonempty"),
    ("10", "x_in_and_lpow_in_pow", "reduced"),
    ("11", "reduced", "lpow_in_pow"),
]

CONVERSES: list[tuple[str, str, str]] = [
    ("1'", "pow_eq_lpow", "reduced_indecomposable"),
    ("3'", "pow_in_lpow", "pow_eq_lpow"),
    ("4'", "x_irreducible", "indecomposable"),
    ("6'", "x_irreducible", "x_in_lpow"),
    ("9'", "lpow_nonempty", "x_in_lpow"),
]

# converse arrows that fail, with the ring that refutes them
COUNTEREXAMPLES: list[tuple[str, str, str, str]] = [
    ("2'", "indecomposable", "reduced_indecomposable", "zmod:4"),
    ("5'", "x_in_lpow", "pow_in_lpow", "zmod:4"),
    ("7'", "reduced", "pow_in_lpow", "prod(z,z)"),
    ("8'", "x_in_lpow", "x_in_and_lpow_in_pow", "zmod:4"),
    ("10'", "reduced", "x_in_and_lpow_in_pow", "prod(z,z)"),
    ("11'", "lpow_in_pow", "reduced", "prod(z,zmod:4)"),
]


def _implication(spec: str, a: str, b: str) -> Callable[[Budget], TruthValue]:
    def check(budget: Budget) -> TruthValue:
        props = diagram_properties(spec)
        pa, pb = props[a], props[b]
        evidence = {a: str(pa.verdict), b: str(pb.verdict)}
        if pa.is_false or pb.is_true:
            return TruthValue.true(evidence, "diagram-arrow")
        if pa.is_true and pb.is_false:
            return TruthValue.false({**evidence, "antecedent": pa.evidence, "consequent": pb.evidence},
                                    "diagram-counterexample")
        return TruthValue.unknown("undecided property", evidence)
    return check


def suite_diagram(seed: int = 0) -> list[Case]:
    cases: list[Case] = []
    for label, a, b in ARROWS:
        for spec in ROSTER:
            _case(cases, f"arrow-{label}-{spec}", f"({label}) {a} implies {b} over {spec}", "diagram-arrow", True,
                  _implication(spec, a, b))
    for label, a, b in CONVERSES:
        for spec in ROSTER:
            _case(cases, f"converse-{label}-{spec}", f"({label}) {a} implies {b} over {spec}", "diagram-arrow", True,
                  _implication(spec, a, b))
    for label, a, b, spec in COUNTEREXAMPLES:
        _case(cases, f"counter-{label}-{spec}", f"({label}) {a} implies {b} over {spec}", "diagram-counterexample",
              False, _implication(spec, a, b))
    return cases


# Registry

SUITES: dict[str, tuple[Callable[[int], list[Case]], str]] = {
    "basic-lemma": (suite_basic_lemma, "divisors of higher degree and powers of x"),
    "redunits": (suite_redunits, "units of R[x] and reducedness"),
    "bivalente": (suite_bivalente, "x irreducible iff R indecomposable"),
    "cmdiv": (suite_cmdiv, "c^(m+1) | c^m in reduced indecomposable rings"),
    "constantfn": (suite_constantfn, "polynomials vanishing everywhere"),
    "sumnonunits": (suite_sumnonunits, "units and sums of two nonunits in non-fields"),
    "lpow-x": (suite_lpow_x, "lpow(x) against pow(x)"),
    "TU": (suite_TU, "the sets T and U"),
    "powconst": (suite_powconst, "powers of a constant through pairs from U"),
    "extract": (suite_extract, "exponent extraction L_p"),
    "theta": (suite_theta, "the sentence theta for the positive integers"),
    "char-p": (suite_char_p, "integers in positive characteristic"),
    "lpow-further": (suite_lpow_further, "further properties and counterexamples for lpow"),
    "equivalences": (suite_equivalences, "idempotents, products and factorizations of x and 1"),
    "zxz": (suite_zxz, "formulas over ParityZ2[x]"),
    "zk": (suite_zk, "formulas over ParityZ3[x]"),
    "qplane": (suite_qplane, "the quantum plane"),
    "diagram": (suite_diagram, "implication diagram"),
}


def suite_cases(name: str, seed: int = 0) -> list[Case]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return SUITES[name][0](seed)


def run_suite(name: str, budget: Budget = DEFAULT_BUDGET, seed: int = 0, jobs: int = 1) -> SuiteReport:
    return run_cases(name, suite_cases(name, seed), budget, jobs)
