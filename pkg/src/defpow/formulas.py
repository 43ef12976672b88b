"""Logical powers, exponent extraction and the worked example formulas.

Every definable set comes twice: as a ``Formula`` value that the generic
evaluator in ``logic`` can run, and as a decision procedure with a stated
exactness class. Tests compare the two routes on shared inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence, Union

from sympy import divisors, isprime, n_order

from .core import (
    DEFAULT_BUDGET,
    BadBound,
    BadRing,
    BadSample,
    Budget,
    Ring,
    RingValue,
    TruthValue,
)
from .logic import (
    Add,
    And,
    Divides,
    Eq,
    EvalContext,
    ExplicitList,
    Exists,
    Forall,
    Formula,
    Implies,
    Lit,
    Mul,
    Named,
    Neg,
    Not,
    One,
    OraclePred,
    Or,
    Pow,
    Term,
    Var,
    conj,
    evaluate,
    int_term,
    sub,
    substitute,
    term_vars,
)
from .poly import (
    PolyRing,
    _base_fact,
    is_irreducible,
    poly_box,
    polyring,
    x_irreducible,
)
from .rings import IntegerRing, IntegersMod, ParityRing


# Exactness classes

@dataclass(frozen=True)
class TheoremBacked:
    """The verdict follows from a proved characterization; never Unknown."""

    cite: str


@dataclass(frozen=True)
class BoundedOnly:
    """The verdict comes from a bounded search and may be Unknown."""

    note: str = ""


ExactnessClass = Union[TheoremBacked, BoundedOnly]


@dataclass(frozen=True)
class LpowVerdict:
    verdict: TruthValue
    decomposition: tuple[RingValue, int] | None = None
    exactness: ExactnessClass = BoundedOnly()

    @property
    def exact(self) -> bool:
        return isinstance(self.exactness, TheoremBacked)


def _exact(value: bool, cite: str, evidence: Any = None,
           decomposition: tuple[RingValue, int] | None = None) -> LpowVerdict:
    return LpowVerdict(TruthValue.of(value, evidence, cite), decomposition, TheoremBacked(cite))


def _bounded(tv: TruthValue, note: str = "") -> LpowVerdict:
    return LpowVerdict(tv, None, BoundedOnly(note or tv.note))


# Small helpers

def _fresh(name: str, taken: set[str]) -> str:
    out, i = name, 0
    while out in taken:
        i += 1
        out = f"{name}{i}"
    return out


def geometric_sum(p: RingValue, n: int) -> RingValue:
    """1 + p + ... + p^(n-1), the cofactor of p - 1 in p^n - 1."""
    acc, term = p.ring.zero(), p.ring.one()
    for _ in range(n):
        acc = acc + term
        term = term * p
    return acc


def _geometric_term(p: Term, n: int) -> Term:
    out: Term = One()
    for i in range(1, n):
        out = Add(out, p if i == 1 else Pow(p, i))
    return out


def _power_term(p: Term, n: int) -> Term:
    return p if n == 1 else Pow(p, n)


def _ilog(value: int, base: int) -> int:
    """Largest k with base^k <= value, for value >= 1 and base >= 2."""
    k, acc = 0, base
    while acc <= value:
        k += 1
        acc *= base
    return k


def _exact_log(value: int, base: int) -> int | None:
    """k >= 0 with base^k == value, if any (integers, |base| >= 2)."""
    k, acc = 0, 1
    while abs(acc) <= abs(value):
        if acc == value:
            return k
        k += 1
        acc *= base
    return None


def _is_poly(ring: Ring) -> bool:
    return isinstance(ring, PolyRing)


def _reduced(ring: Ring) -> bool:
    base = ring.base if _is_poly(ring) else ring
    return bool(_base_fact(base, "reduced"))


def _reduced_indecomposable(base: Ring) -> bool:
    return bool(_base_fact(base, "reduced")) and bool(_base_fact(base, "indecomposable"))


def linear_unit_lead(p: RingValue) -> bool:
    """p = v*x + r with v a unit of the base."""
    ring = p.ring
    if not _is_poly(ring) or ring.degree(p) != 1:
        return False
    return ring.base.is_unit(ring.leading_coeff(p)).is_true


def linear_root(p: RingValue, target: RingValue | int = 0) -> RingValue:
    """The base element rho with p(rho) = target, for p = v*x + r with v a unit."""
    ring = p.ring
    base = ring.base
    if isinstance(target, int):
        target = base.from_int(target)
    inv = base.is_unit(ring.leading_coeff(p)).evidence
    return (target - ring.constant_term(p)) * inv


def as_positive_integer(c: RingValue) -> int | None:
    """The n >= 1 with n*1 == c, smallest such n in positive characteristic."""
    ring = c.ring
    if ring.characteristic:
        for n in range(1, ring.characteristic + 1):
            if ring.from_int(n) == c:
                return n
        return None
    parts = ring.integer_parts(c)
    if not parts:
        return None
    n = parts[0]
    return n if n >= 1 and ring.from_int(n) == c else None


def _units(ring: Ring) -> list[RingValue] | None:
    return ring.units()


# The defining formula

def psi(f: Term, s: Term, var: str = "g", domain: Any = None) -> Formula:
    """s | f  and  s-1 | f-1  and every divisor g of f is a unit or a multiple of s."""
    g = _fresh(var, term_vars(f) | term_vars(s))
    gv = Var(g)
    divisor_clause = Forall(g, domain, Implies(Divides(gv, f), Or(Divides(gv, One()), Divides(s, gv))))
    return conj(Divides(s, f), Divides(sub(s, One()), sub(f, One())), divisor_clause)


def refutes(g: RingValue, f: RingValue, p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Is g a divisor of f that is neither a unit nor a multiple of p?"""
    ring = f.ring
    d = ring.divides(g, f, budget)
    if d.is_false:
        return TruthValue.false(cite="not-a-divisor")
    u = ring.is_unit(g, budget)
    if u.is_true:
        return TruthValue.false(cite="divisor-is-unit")
    m = ring.divides(p, g, budget)
    if m.is_true:
        return TruthValue.false(cite="divisor-is-multiple")
    if d.is_true and u.is_false and m.is_false:
        return TruthValue.true({"refuter": g, "cofactor": d.evidence}, "divisor-refutes-lpow")
    return TruthValue.unknown("could not settle the divisor clause for this g")


# Primality and irreducibility of constants

def constant_is_prime(base: Ring, c: RingValue) -> bool | None:
    """Primality of a regular constant, where it has a closed description."""
    if isinstance(base, IntegerRing):
        return isprime(abs(c.payload))
    if isinstance(base, IntegersMod):
        if isprime(base.n):
            return False  # a field has no primes
        return None
    if isinstance(base, ParityRing):
        entries = c.payload
        if any(e == 0 for e in entries) or entries[0] % 2 == 0:
            return None
        big = [e for e in entries if abs(e) != 1]
        # R/cR is Z/l when exactly one entry is +-l and the rest are units
        return len(big) == 1 and isprime(abs(big[0]))
    return None


def is_prime_element(p: RingValue) -> bool | None:
    ring = p.ring
    if _is_poly(ring):
        base = ring.base
        if ring.is_constant(p):
            return constant_is_prime(base, ring.constant_term(p))
        if isinstance(base, IntegerRing) or (isinstance(base, IntegersMod) and isprime(base.n)):
            tv = is_irreducible(p)
            return tv.is_true if tv.known else None
        return None
    return constant_is_prime(ring, p)


def irreducible(p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Irreducibility for polynomials and for integer-like constant rings."""
    ring = p.ring
    if _is_poly(ring):
        return is_irreducible(p, budget)
    if isinstance(ring, (IntegerRing, ParityRing)):
        # divisors of a regular constant are constants, so R and R[x] agree
        tv = is_irreducible(polyring(ring).lift(p), budget)
        if tv.is_false and isinstance(tv.evidence, dict) and "factors" in tv.evidence:
            g, h = tv.evidence["factors"]
            pr = g.ring
            return TruthValue.false({"factors": (pr.constant_term(g), pr.constant_term(h))}, tv.cite)
        return tv
    if ring.is_finite:
        if p.is_zero() or ring.is_unit(p).is_true:
            return TruthValue.false(cite="zero-or-unit")
        for g in ring.elements():
            if ring.is_unit(g).is_true:
                continue
            d = ring.divides(g, p, budget)
            if d.is_true and ring.is_unit(d.evidence).is_false:
                return TruthValue.false({"factors": (g, d.evidence)}, "exhaustive-factor-search")
        return TruthValue.true(cite="exhaustive-factor-search")
    return TruthValue.unknown("no irreducibility procedure for this ring")


# Divisor candidates for the divisor clause

def _base_divisors(base: Ring, c: RingValue) -> list[RingValue] | None:
    """All divisors of a regular constant over Z or a parity ring."""
    if isinstance(base, IntegerRing):
        if c.payload == 0:
            return None
        return [base.from_int(s * d) for d in divisors(abs(c.payload)) for s in (1, -1)]
    if isinstance(base, ParityRing):
        entries = c.payload
        if any(e == 0 for e in entries):
            return None
        options = [[s * d for d in divisors(abs(e)) for s in (1, -1)] for e in entries]
        out = []
        for combo in itertools.product(*options):
            cof = [e // d for e, d in zip(entries, combo)]
            if len({d & 1 for d in combo}) == 1 and len({d & 1 for d in cof}) == 1:
                out.append(base._wrap(tuple(combo)))
        return out
    return None


def divisor_candidates(f: RingValue, budget: Budget = DEFAULT_BUDGET) -> tuple[list[RingValue], bool]:
    """Candidates for the divisor quantifier and whether they cover every divisor of f."""
    ring = f.ring
    if ring.is_finite:
        return list(ring.elements()), True
    if not _is_poly(ring):
        exact = _base_divisors(ring, f)
        if exact is not None:
            return exact, True
        return list(ring.sample(budget)), False
    base = ring.base
    reduced = bool(_base_fact(base, "reduced"))
    regular = not f.is_zero() and ring.annihilator([f]) is None
    deg = ring.degree(f) or 0
    if reduced and regular and ring.is_constant(f):
        # divisors of a regular constant over a reduced base are constants
        exact = _base_divisors(base, ring.constant_term(f))
        if exact is not None:
            return [ring.lift(d) for d in exact], True
    if reduced and regular and base.is_finite:
        size = base.size() ** (deg + 1)
        if size <= budget.max_candidates:
            return list(poly_box(ring, deg, list(base.elements()))), True
    bound = deg + budget.divisor_slack
    box = poly_box(ring, bound, base.coefficient_sample(budget))
    return list(itertools.islice(box, budget.max_candidates)), False


def _bounded_psi(f: RingValue, p: RingValue, budget: Budget) -> LpowVerdict:
    cands, complete = divisor_candidates(f, budget)
    phi = psi(Var("f"), Var("s"), "g", ExplicitList(tuple(cands), complete))
    tv = evaluate(phi, f.ring, {"f": f, "s": p}, budget)
    if tv.is_false:
        return _exact(False, "divisor-refutes-lpow", tv.evidence)
    if tv.is_true:
        return _exact(True, "exhaustive-divisors", {"divisors_checked": len(cands)})
    return _bounded(tv, "divisor clause not settled on the candidate box")


# Exponent of the largest power of p dividing f

def _division_exponent_bound(f: RingValue, p: RingValue) -> int | None:
    """An n such that p^k cannot divide f for k > n, when size arithmetic gives one."""
    ring = f.ring
    if f.is_zero():
        return None
    if _is_poly(ring) and not ring.is_constant(p):
        lead = ring.leading_coeff(p)
        if ring.base.annihilator([lead]) is not None:
            return None
        # a regular leading coefficient makes degrees add
        return ring.degree(f) // ring.degree(p)
    if _is_poly(ring):
        base = ring.base
        coeffs = [c for c in ring.coeffs(f) if not c.is_zero()]
        p0 = ring.constant_term(p)
    else:
        base = ring
        coeffs = [f]
        p0 = p
    e = base.integer_parts(p0)
    if e is None:
        return None
    best = None
    for c in coeffs:
        parts = base.integer_parts(c)
        if parts is None:
            return None
        for ei, ci in zip(e, parts):
            if abs(ei) >= 2 and ci != 0:
                k = _ilog(abs(ci), abs(ei))
                best = k if best is None else min(best, k)
    return best


def exact_power_division(f: RingValue, p: RingValue,
                         budget: Budget = DEFAULT_BUDGET) -> tuple[int, RingValue] | None:
    """(n, u) with f = u*p^n and p not dividing u, when this can be settled exactly."""
    ring = f.ring
    bound = _division_exponent_bound(f, p)
    if bound is None:
        return None
    if _is_poly(ring) and ring.base.is_unit(ring.leading_coeff(p), budget).is_true:
        # p is regular, so quotients are unique and we may divide repeatedly
        n, u = 0, f
        while n <= bound:
            tv = ring.divides(p, u, budget)
            if tv.is_unknown:
                return None
            if tv.is_false:
                return n, u
            n, u = n + 1, tv.evidence
        return None
    n, u, power = 0, f, ring.one()
    for k in range(1, bound + 1):
        power = power * p
        tv = ring.divides(power, f, budget)
        if tv.is_unknown:
            return None
        if tv.is_false:
            break
        n, u = k, tv.evidence
    if not ring.divides(p, u, budget).is_false:
        return None
    return n, u


def _power_in_own_lpow(p: RingValue, n: int, budget: Budget) -> tuple[bool, str, Any] | None:
    """Is p^n in lpow(p)? Settled by the structure of p when possible."""
    ring = p.ring
    if _is_poly(ring) and linear_unit_lead(p) and _reduced_indecomposable(ring.base):
        return True, "linear-unit-lead-in-U", None
    if is_prime_element(p) and ring.annihilator([p]) is None:
        return True, "regular-prime-powers-in-lpow", None
    irr = irreducible(p, budget)
    if n == 1 and irr.is_true:
        return True, "irreducible-in-own-lpow", None
    if irr.is_false and isinstance(irr.evidence, dict) and "factors" in irr.evidence:
        target = ring.pow(p, n)
        for h in reversed(irr.evidence["factors"]):
            if ring.annihilator([h]) is not None:
                continue
            tv = refutes(h, target, p, budget)
            if tv.is_true:
                return False, "regular-factor-refutes-product", tv.evidence
    return None


def _structured_refuters(f: RingValue, p: RingValue, budget: Budget) -> list[RingValue]:
    ring = f.ring
    out: list[RingValue] = []
    irr = irreducible(p, budget)
    if irr.is_false and isinstance(irr.evidence, dict) and "factors" in irr.evidence:
        out.extend(irr.evidence["factors"])
    if _is_poly(ring):
        base = ring.base
        split = x_irreducible(base, budget)
        if split.is_false and isinstance(split.evidence, dict):
            out.extend(split.evidence["factors"])
        if not _base_fact(base, "reduced") and base.is_finite:
            x = ring.x()
            out.extend(x - ring.lift(a) for a in base.elements() if not a.is_zero() and base.is_nilpotent(a))
    return out


def decide_lpow(f: RingValue, p: RingValue, budget: Budget = DEFAULT_BUDGET,
                refuter: RingValue | None = None) -> LpowVerdict:
    """Decide f in lpow(p), exactly where a characterization applies."""
    ring = f.ring
    ring.check(f, p)
    if not ring.commutative:
        from .qplane import qp_decide_lpow

        return qp_decide_lpow(f, p, budget)
    if refuter is not None:
        ring.check(refuter)
        tv = refutes(refuter, f, p, budget)
        if tv.is_true:
            return _exact(False, "divisor-refutes-lpow", tv.evidence)
    if ring.is_finite:
        phi = psi(Var("f"), Var("s"), "g", ExplicitList(ring.elements(), True))
        tv = evaluate(phi, ring, {"f": f, "s": p}, budget)
        return _exact(tv.is_true, "exhaustive-finite-ring", tv.evidence)
    one = ring.one()
    if p.is_zero():
        if not f.is_zero():
            return _exact(False, "factor-clause", {"clause": "p | f"})
        return _exact(ring.is_field(), "zero-lpow-of-zero")
    unit = ring.is_unit(p, budget)
    shifted = ring.divides(p - one, f - one, budget)
    if unit.is_true:
        if shifted.known:
            return _exact(shifted.is_true, "unit-lpow-affine",
                          {"quotient": shifted.evidence} if shifted.is_true else None)
        return _bounded(shifted)
    factor = ring.divides(p, f, budget)
    if factor.is_false:
        return _exact(False, "factor-clause", {"clause": "p | f"})
    if shifted.is_false:
        return _exact(False, "shifted-factor-clause", {"clause": "p-1 | f-1"})
    if f.is_zero():
        if unit.is_false:
            return _exact(False, "zero-in-lpow-needs-units", {"p_unit": False})
        return _bounded(unit)

    split = exact_power_division(f, p, budget) if unit.is_false else None
    if split is not None:
        n, u = split
        uu = ring.is_unit(u, budget)
        if uu.is_false:
            return _exact(False, "cofactor-refutes-lpow", {"refuter": u, "exponent": n}, (u, n))
        if uu.is_true:
            if not ring.divides(p - one, u - one, budget).is_true:
                return _exact(False, "shifted-factor-clause", {"clause": "p-1 | u-1"})
            settled = _power_in_own_lpow(p, n, budget)
            if settled is not None:
                value, cite, evidence = settled
                return _exact(value, cite, evidence, (u, n))

    if f == p:
        irr = irreducible(p, budget)
        if irr.is_true:
            return _exact(True, "irreducible-in-own-lpow")
    elif unit.is_false:
        own = decide_lpow(p, p, budget)
        if own.exact and own.verdict.is_false:
            return _exact(False, "lpow-nonempty-iff-self-member", {"p_not_in_lpow_p": own.verdict.evidence})

    for g in _structured_refuters(f, p, budget):
        tv = refutes(g, f, p, budget)
        if tv.is_true:
            return _exact(False, "divisor-refutes-lpow", tv.evidence)
    return _bounded_psi(f, p, budget)


def lpow_members(p: RingValue, candidates: Iterable[RingValue],
                 budget: Budget = DEFAULT_BUDGET) -> tuple[list[RingValue], list[RingValue]]:
    """Split candidates into (members of lpow(p), Unknown verdicts)."""
    members, unknown = [], []
    for f in candidates:
        v = decide_lpow(f, p, budget).verdict
        if v.is_true:
            members.append(f)
        elif v.is_unknown:
            unknown.append(f)
    return members, unknown


# Powers

def _pinned_exponents(f: RingValue, p: RingValue) -> list[int] | None:
    """The only exponents n with p^n == f possible by size arithmetic."""
    ring = f.ring
    if _is_poly(ring):
        if not ring.is_constant(p):
            if ring.base.annihilator([ring.leading_coeff(p)]) is not None:
                return None
            if f.is_zero() or ring.degree(f) % ring.degree(p):
                return []
            return [ring.degree(f) // ring.degree(p)]
        if not ring.is_constant(f):
            return []
        ring, f, p = ring.base, ring.constant_term(f), ring.constant_term(p)
    e, c = ring.integer_parts(p), ring.integer_parts(f)
    if e is None or c is None:
        return None
    for ei, ci in zip(e, c):
        if abs(ei) >= 2:
            k = _exact_log(ci, ei)
            return [] if k is None else [k]
    return None


def _qp_pinned_exponents(f: RingValue, p: RingValue) -> list[int] | None:
    """Total degree is additive in a domain, which pins the exponent."""
    ring = f.ring
    if not hasattr(ring, "deglex_max") or p.is_zero() or ring.is_constant(p):
        return None
    if f.is_zero():
        return []
    df, dp = sum(ring.deglex_max(f)), sum(ring.deglex_max(p))
    return [] if df % dp else [df // dp]


def decide_pow(f: RingValue, p: RingValue, cap: int = 8) -> TruthValue:
    """Is f a positive power of p? True carries the exponent."""
    if cap < 1:
        raise BadBound("exponent cap must be at least 1")
    ring = f.ring
    ring.check(f, p)
    pinned = _pinned_exponents(f, p) if ring.commutative else _qp_pinned_exponents(f, p)
    if pinned is not None:
        for n in pinned:
            if n >= 1 and ring.pow(p, n) == f:
                return TruthValue.true({"exponent": n}, "exponent-pinned-by-size")
        return TruthValue.false(cite="exponent-pinned-by-size")
    power, seen = p, set()
    for n in range(1, cap + 1):
        if power == f:
            return TruthValue.true({"exponent": n}, "direct-power")
        if power.payload in seen:
            return TruthValue.false(cite="powers-cycle")
        seen.add(power.payload)
        power = power * p
    return TruthValue.unknown(f"no power up to {cap} matches")


# The sets T and U

def _lpow_within_pow(p: RingValue) -> bool:
    """Reduced base, p nonconstant with regular leading coefficient."""
    ring = p.ring
    return (_is_poly(ring) and _reduced(ring) and not ring.is_constant(p)
            and ring.base.annihilator([ring.leading_coeff(p)]) is None)


def in_T(p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Irreducible p with p*h in lpow(p) for every h in lpow(p)."""
    ring = p.ring
    if ring.is_unit(p, budget).is_true:
        return TruthValue.false({"unit": p}, "T-needs-irreducible")
    irr = irreducible(p, budget)
    if irr.is_false:
        return TruthValue.false(irr.evidence if irr.evidence is not None else {"irreducible": False},
                                "T-needs-irreducible")
    if linear_unit_lead(p) and _reduced_indecomposable(ring.base):
        return TruthValue.true(cite="linear-unit-lead-in-U")
    if irr.is_true and _lpow_within_pow(p) and is_prime_element(p):
        return TruthValue.true(cite="prime-lpow-equals-pow")
    # search for h in lpow(p) with p*h outside it
    cands = [ring.pow(p, n) for n in range(1, budget.exp_cap + 1)] + list(ring.sample(budget))
    for h in cands:
        inner = decide_lpow(h, p, budget)
        if inner.exact and inner.verdict.is_true:
            outer = decide_lpow(p * h, p, budget)
            if outer.exact and outer.verdict.is_false:
                return TruthValue.false({"h": h}, "T-closure-fails")
    return TruthValue.unknown("T membership not settled on the sample")


def unit_clause(p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Every unit a with p-1 | a-1 equals 1."""
    ring = p.ring
    units = _units(ring)
    if units is None:
        return TruthValue.unknown("unit group not enumerable")
    for a in units:
        if a.is_one():
            continue
        tv = ring.divides(p - 1, a - 1, budget)
        if tv.is_true:
            return TruthValue.false({"unit": a}, "U-unit-clause")
        if tv.is_unknown:
            return TruthValue.unknown(tv.note)
    return TruthValue.true(cite="U-unit-clause")


def in_U(p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    ring = p.ring
    if linear_unit_lead(p) and _reduced_indecomposable(ring.base):
        return TruthValue.true(cite="linear-unit-lead-in-U")
    t = in_T(p, budget)
    if t.is_false:
        return t
    units = unit_clause(p, budget)
    if units.is_false:
        return units
    if t.is_true and units.is_true and _lpow_within_pow(p):
        # with lpow(p) = pow(p) the first clause is met by g = q^n
        return TruthValue.true(cite="U-from-lpow-equals-pow")
    return TruthValue.unknown("U membership not settled")


def in_P(p: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """p in U with p - 1 regular."""
    ring = p.ring
    u = in_U(p, budget)
    if not u.is_true:
        return u
    if ring.annihilator([p - 1]) is not None:
        return TruthValue.false({"p_minus_1": "zero divisor"}, "P-needs-regular-shift")
    return TruthValue.true(cite="P-membership")


# Exponent extraction

def build_Lp(p: RingValue, alpha: Formula, psi_p: Formula, cap: int = 8,
             y_domain: Any = None, w_domain: Any = None, var: str = "t") -> Formula:
    """alpha(t) and exists y, w with psi_p(y), y-1 = w(p-1), p-1 | w-t.

    The default witness lists run over p^1..p^cap and their geometric
    cofactors and are declared complete: psi_p picks powers of p, and w is
    unique once p-1 is regular.
    """
    P = Lit(p)
    if y_domain is None:
        y_domain = ExplicitList(tuple(p.ring.pow(p, n) for n in range(1, cap + 1)), True)
    if w_domain is None:
        w_domain = ExplicitList(tuple(geometric_sum(p, n) for n in range(1, cap + 1)), True)
    y, w, t = Var("y"), Var("w"), Var(var)
    pm1 = sub(P, One())
    body = conj(psi_p, Eq(sub(y, One()), Mul(w, pm1)), Divides(pm1, sub(w, t)))
    return And(alpha, Exists("y", y_domain, Exists("w", w_domain, body)))


def is_constant_poly(t: RingValue) -> TruthValue:
    ring = t.ring
    if not hasattr(ring, "is_constant"):
        return TruthValue.true(cite="constant-polynomial")
    return TruthValue.of(ring.is_constant(t), cite="constant-polynomial")


def decide_Lp(t: RingValue, p: RingValue, alpha: Callable[[RingValue], TruthValue] | None = None,
              budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """L_p(t) with B = pow(p), by evaluating t at the root of p - 1.

    For p = v*x + r with v a unit, p - 1 | w - t holds exactly when
    (w - t)(rho) = 0, and every cofactor w_n evaluates to n at rho.
    """
    ring = t.ring
    alpha = alpha or is_constant_poly
    a = alpha(t)
    if not a.is_true:
        return a if a.is_false else TruthValue.unknown(a.note)
    if not linear_unit_lead(p):
        phi = build_Lp(p, OraclePred("const", (Var("t"),)), OraclePred("in_pow", (Var("y"), Lit(p))),
                       budget.exp_cap)
        return evaluate(phi, ring, {"t": t}, budget)
    rho = linear_root(p, 1)
    value = ring.evaluate(t, rho)
    n = as_positive_integer(value)
    if n is None:
        return TruthValue.false({"t_at_root": value}, "exponent-at-root")
    y, w = ring.pow(p, n), geometric_sum(p, n)
    return TruthValue.true({"n": n, "y": y, "w": w}, "exponent-at-root")


# The sentence defining the positive integers

def phi(t: Term, a: Term, z: Term, p: Term, cap: int = 8) -> Formula:
    """exists y in lpow(p), w: y-1 = w(p-1), p-1 | w-t, p-a | y-z."""
    taken = term_vars(t) | term_vars(a) | term_vars(z) | term_vars(p)
    yn, wn = _fresh("y", taken), _fresh("w", taken)
    y, w = Var(yn), Var(wn)
    ydom = ExplicitList(tuple(_power_term(p, n) for n in range(1, cap + 1)), True)
    wdom = ExplicitList(tuple(_geometric_term(p, n) for n in range(1, cap + 1)), True)
    pm1 = sub(p, One())
    body = conj(OraclePred("psi", (y, p)), Eq(sub(y, One()), Mul(w, pm1)),
                Divides(pm1, sub(w, t)), Divides(sub(p, a), sub(y, z)))
    return Exists(yn, ydom, Exists(wn, wdom, body))


def build_theta(cap: int = 8, pow2_route: str = "oracle", var: str = "t") -> Formula:
    """exists z in pow(2) forall p in P: phi(t, 2, z, p)."""
    if pow2_route not in ("oracle", "criterion"):
        raise ValueError("pow2_route is 'oracle' or 'criterion'")
    two = int_term(2)
    z, p, t = Var("z"), Var("p"), Var(var)
    zdom = ExplicitList(tuple(_power_term(two, k) for k in range(1, cap + 1)), True)
    member = OraclePred("in_pow" if pow2_route == "oracle" else "powconst", (z, two))
    body = Forall("p", Named("P"), Implies(OraclePred("in_P", (p,)), phi(t, two, z, p, cap)))
    return Exists("z", zdom, And(member, body))


def _theta_base_ok(ring: Ring) -> None:
    if not _is_poly(ring):
        raise BadRing("theta lives in a polynomial ring")
    base = ring.base
    if not _reduced_indecomposable(base) or base.is_field() or base.characteristic != 0:
        raise BadRing(f"{base.spec} is not a reduced indecomposable non-field of characteristic 0")


def default_P_sample(ring: PolyRing) -> list[RingValue]:
    x = ring.x()
    out = [x, -x + 1, x + 2]
    base = ring.base
    if isinstance(base, ParityRing):
        mixed = tuple(1 if i == 0 else -1 for i in range(base.k))
        odd = tuple(3 if i == 0 else 1 for i in range(base.k))
        out += [ring.lift(base.value(mixed)) * x, x + ring.lift(base.value(odd))]
    else:
        out += [-x + 3, x - 2]
    return out


def decide_phi(t: RingValue, a: RingValue, z: RingValue, p: RingValue,
               budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    ring = t.ring
    exact = (linear_unit_lead(p) and ring.is_constant(a) and ring.base.characteristic == 0
             and _reduced_indecomposable(ring.base))
    if not exact:
        phi_ast = phi(Var("t"), Var("a"), Var("z"), Var("p"), budget.exp_cap)
        return evaluate(phi_ast, ring, {"t": t, "a": a, "z": z, "p": p}, budget)
    base = ring.base
    n = as_positive_integer(ring.evaluate(t, linear_root(p, 1)))
    if n is None:
        return TruthValue.false({"t_at_root": ring.evaluate(t, linear_root(p, 1))}, "exponent-at-root")
    a0 = ring.constant_term(a)
    if ring.evaluate(z, linear_root(p, a0)) != base.pow(a0, n):
        return TruthValue.false({"n": n}, "power-at-root")
    return TruthValue.true({"y": ring.pow(p, n), "w": geometric_sum(p, n), "n": n}, "exponent-and-power-at-roots")


def decide_theta(t: RingValue, sample: Sequence[RingValue] | None = None,
                 budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """theta(t) relative to a sample of P, by evaluation at roots.

    For linear p with unit leading coefficient, phi(t, 2, 2^k, p) holds iff
    t takes the value k at the root of p - 1, since distinct powers of 2
    differ in characteristic 0. A False answer is a genuine refutation; a
    True answer holds for the sampled part of P.
    """
    ring = t.ring
    _theta_base_ok(ring)
    sample = list(default_P_sample(ring) if sample is None else sample)
    if not sample:
        raise BadSample("theta needs a nonempty sample of P")
    exponents: list[tuple[RingValue, int]] = []
    for p in sample:
        if not linear_unit_lead(p):
            raise BadSample(f"{p} is not linear with a unit leading coefficient")
        value = ring.evaluate(t, linear_root(p, 1))
        k = as_positive_integer(value)
        if k is None:
            return TruthValue.false({"p": p, "t_at_root": value}, "theta-root-evaluation")
        exponents.append((p, k))
    ks = {k for _, k in exponents}
    if len(ks) > 1:
        (p1, k1), (p2, k2) = next((e1, e2) for e1 in exponents for e2 in exponents if e1[1] != e2[1])
        return TruthValue.false({"p": p1, "q": p2, "exponents": (k1, k2)}, "theta-root-evaluation")
    k = ks.pop()
    z = ring.from_int(2 ** k)
    witnesses = []
    for p, _ in exponents:
        y, w = ring.pow(p, k), geometric_sum(p, k)
        assert y - 1 == w * (p - 1)
        assert ring.divides(p - 1, w - t, budget).is_true
        assert ring.divides(p - 2, y - z, budget).is_true
        witnesses.append({"p": p, "y": y, "w": w})
    return TruthValue.true({"z": z, "k": k, "witnesses": witnesses}, "theta-root-evaluation",
                           "relative to the sampled P")


# Powers of a constant through pairs from U

def powconst_criterion(f: RingValue, a: RingValue, sample_pq: Sequence[Any],
                       budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Check the pair condition characterizing pow(a) on sampled pairs (p, q).

    ``sample_pq`` holds pairs, or single elements from which all ordered
    pairs are formed. Each member must be linear with a unit leading
    coefficient, so that it lies in U.
    """
    ring = f.ring
    if not _is_poly(ring):
        raise BadRing("the criterion lives in a polynomial ring")
    base = ring.base
    if not _reduced_indecomposable(base) or base.is_field():
        raise BadRing(f"{base.spec} is not a reduced indecomposable non-field")
    items = list(sample_pq)
    if not items:
        raise BadSample("empty sample of pairs")
    if all(isinstance(it, RingValue) for it in items):
        pairs = [(p, q) for p in items for q in items]
    else:
        pairs = [tuple(it) for it in items]
    a0 = ring.constant_term(a) if ring.is_constant(a) else None
    if a0 is None:
        raise BadSample("a must be a constant")

    def exponents(p: RingValue) -> tuple[list[int], bool]:
        if not linear_unit_lead(p):
            raise BadSample(f"{p} is not linear with a unit leading coefficient")
        value = ring.evaluate(f, linear_root(p, a0))
        pinned = _pinned_exponents(ring.lift(value), ring.lift(a0))
        if pinned is not None:
            return [n for n in pinned if n >= 1 and base.pow(a0, n) == value], True
        found = [n for n in range(1, budget.exp_cap + 1) if base.pow(a0, n) == value]
        return found, False

    witnesses = []
    partial = False
    for p, q in pairs:
        mp, cp = exponents(p)
        mq, cq = exponents(q)
        if not mp or not mq:
            bad = p if not mp else q
            if (cp if not mp else cq):
                return TruthValue.false({"p": p, "q": q, "value_at_root": ring.evaluate(f, linear_root(bad, a0))},
                                        "powconst-root-evaluation")
            partial = True
            continue
        hit = next(((m, n) for m in mp for n in mq
                    if ring.divides(p - q, ring.pow(p, m) - ring.pow(q, n), budget).is_true), None)
        if hit is None:
            if cp and cq:
                return TruthValue.false({"p": p, "q": q}, "powconst-pair-divisibility")
            partial = True
            continue
        m, n = hit
        witnesses.append({"p": p, "q": q, "y": ring.pow(p, m), "z": ring.pow(q, n), "n": m})
    if partial:
        return TruthValue.unknown("some pairs were not settled under the exponent cap")
    ns = sorted({w["n"] for w in witnesses})
    return TruthValue.true({"n": ns[0] if len(ns) == 1 else ns, "witnesses": witnesses},
                           "powconst-sampled", "relative to the sampled pairs")


# Constant polynomial functions

def determinant(rows: Sequence[Sequence[RingValue]]) -> RingValue:
    """Laplace expansion; fine for the small matrices used here."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    ring = rows[0][0].ring
    acc = ring.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * determinant(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def vandermonde(points: Sequence[RingValue]) -> list[list[RingValue]]:
    return [[c ** j for j in range(len(points))] for c in points]


def vandermonde_product(points: Sequence[RingValue]) -> RingValue:
    """prod_{i<j} (c_j - c_i), the Vandermonde determinant."""
    ring = points[0].ring
    acc = ring.one()
    for i, j in itertools.combinations(range(len(points)), 2):
        acc = acc * (points[j] - points[i])
    return acc


def is_constant_function(f: RingValue, sample: Sequence[RingValue]) -> TruthValue:
    """Does f take a single value on the ring?"""
    ring = f.ring
    if not _is_poly(ring):
        raise BadRing("expected a polynomial")
    sample = list(sample)
    if not sample:
        raise BadSample("empty evaluation sample")
    base = ring.base
    values = [ring.evaluate(f, c) for c in sample]
    for c, v in zip(sample, values):
        if v != values[0]:
            return TruthValue.false({"points": (sample[0], c), "values": (values[0], v)}, "differing-values")
    if ring.is_constant(f):
        return TruthValue.true(cite="constant-polynomial")
    if base.is_finite and {c.payload for c in sample} >= {c.payload for c in base.elements()}:
        return TruthValue.true({"value": values[0]}, "exhaustive-evaluation")
    if not base.is_finite and _reduced_indecomposable(base):
        note = "sample too small: a nonzero polynomial cannot vanish on all of this ring"
    else:
        note = "sample agrees but the ring is not covered"
    return TruthValue.unknown(note, {"value": values[0]})


# Worked example formulas over parity rings

def _parity_base(ring: Ring) -> ParityRing:
    if not _is_poly(ring) or not isinstance(ring.base, ParityRing):
        raise BadRing(f"expected a polynomial ring over a parity ring, got {ring.spec}")
    return ring.base


def _unit_list(ring: PolyRing) -> tuple[RingValue, ...]:
    return tuple(ring.lift(u) for u in ring.base.units())


def beta(ring: PolyRing, var: str = "t") -> Formula:
    """exists r: r | 1, r != 1, r != -1, t = 3 + 2r."""
    _parity_base(ring)
    r, t = Var("r"), Var(var)
    body = conj(Divides(r, One()), Not(Eq(r, One())), Not(Eq(r, Neg(One()))),
                Eq(t, Add(int_term(3), Mul(int_term(2), r))))
    return Exists("r", ExplicitList(_unit_list(ring), True), body)


def gamma(ring: PolyRing, cap: int = 8, var: str = "t") -> Formula:
    """exists r, s, v, w: beta(r), r + s = 6, v in lpow(r), w in lpow(s), t = v + w - 2."""
    units = _unit_list(ring)
    r, s, v, w, t = Var("r"), Var("s"), Var("v"), Var("w"), Var(var)
    rdom = ExplicitList(tuple(3 + 2 * u for u in units), True)
    sdom = ExplicitList((sub(int_term(6), r),), True)
    vdom = ExplicitList(tuple(_power_term(r, n) for n in range(1, cap + 1)), True)
    wdom = ExplicitList(tuple(_power_term(s, n) for n in range(1, cap + 1)), True)
    body = conj(substitute(beta(ring), {"t": r}), Eq(Add(r, s), int_term(6)),
                OraclePred("psi", (v, r)), OraclePred("psi", (w, s)),
                Eq(t, sub(Add(v, w), int_term(2))))
    return Exists("r", rdom, Exists("s", sdom, Exists("v", vdom, Exists("w", wdom, body))))


def _gamma_values(ring: PolyRing, cap: int) -> tuple[RingValue, ...]:
    return tuple(ring.from_tuple((5 ** m - 1, 5 ** n - 1))
                 for m in range(1, cap + 1) for n in range(1, cap + 1))


def D_zxz(ring: PolyRing, cap: int = 8, var: str = "t") -> Formula:
    """t divides some element of the set defined by gamma."""
    if _parity_base(ring).k != 2:
        raise BadRing("the pair example needs parity2")
    c, t = Var("c"), Var(var)
    return Exists("c", ExplicitList(_gamma_values(ring, cap), True),
                  And(gamma(ring, cap, "c"), Divides(t, c)))


def alpha_zxz(ring: PolyRing, cap: int = 8, var: str = "t") -> Formula:
    t = Var(var)
    d = D_zxz(ring, cap, var)
    return Or(d, substitute(d, {var: Add(t, One())}))


def D_zk(ring: PolyRing, var: str = "d") -> Formula:
    """d | 1 and 2d + 3 irreducible."""
    _parity_base(ring)
    d = Var(var)
    return And(Divides(d, One()), OraclePred("irreducible", (Add(Mul(int_term(2), d), int_term(3)),)))


def E_zk(ring: PolyRing, var: str = "e") -> Formula:
    d, e = Var("d"), Var(var)
    return Exists("d", ExplicitList(_unit_list(ring), True), And(D_zk(ring), Eq(e, Add(d, One()))))


def C_zk(ring: PolyRing, var: str = "c") -> Formula:
    d, c = Var("d"), Var(var)
    return Exists("d", ExplicitList(_unit_list(ring), True),
                  And(D_zk(ring), Eq(c, Add(Mul(int_term(2), d), int_term(3)))))


def alpha_zk(ring: PolyRing, cap: int = 8, var: str = "t") -> Formula:
    """forall e in E exists c in C, y in lpow(c): t*e | y - 1 or (t+1)*e | y - 1."""
    units = _unit_list(ring)
    e, c, y, t = Var("e"), Var("c"), Var("y"), Var(var)
    edom = ExplicitList(tuple(u + 1 for u in units), True)
    cdom = ExplicitList(tuple(2 * u + 3 for u in units), True)
    ydom = ExplicitList(tuple(_power_term(c, n) for n in range(1, cap + 1)), True)
    ym1 = sub(y, One())
    inner = conj(C_zk(ring), OraclePred("psi", (y, c)),
                 Or(Divides(Mul(t, e), ym1), Divides(Mul(Add(t, One()), e), ym1)))
    return Forall("e", edom, Implies(E_zk(ring), Exists("c", cdom, Exists("y", ydom, inner))))


def example_formulas(ring: Ring, cap: int = 8) -> dict[str, Formula]:
    base = _parity_base(ring)
    out: dict[str, Formula] = {}
    if base.k == 2:
        out.update(beta=beta(ring), gamma=gamma(ring, cap), D_zxz=D_zxz(ring, cap),
                   alpha_zxz=alpha_zxz(ring, cap))
    out.update(D_zk=D_zk(ring), E_zk=E_zk(ring), C_zk=C_zk(ring), alpha_zk=alpha_zk(ring, cap))
    return out


def _constant_entries(t: RingValue) -> tuple[int, ...] | None:
    ring = t.ring
    return ring.constant_term(t).payload if ring.is_constant(t) else None


def decide_beta(t: RingValue) -> TruthValue:
    ring = t.ring
    base = _parity_base(ring)
    targets = {(3 + 2 * u.payload[0],) + tuple(3 + 2 * e for e in u.payload[1:])
               for u in base.units() if len(set(u.payload)) > 1}
    entries = _constant_entries(t)
    return TruthValue.of(entries in targets, {"targets": sorted(targets)}, "beta-mixed-units")


def decide_gamma(t: RingValue) -> TruthValue:
    if _parity_base(t.ring).k != 2:
        raise BadRing("the pair example needs parity2")
    entries = _constant_entries(t)
    if entries is None:
        return TruthValue.false({"nonconstant": t}, "gamma-constant-values")
    exps = [_exact_log(e + 1, 5) for e in entries]
    if all(k is not None and k >= 1 for k in exps):
        return TruthValue.true({"m": exps[0], "n": exps[1]}, "gamma-constant-values")
    return TruthValue.false({"entries": entries}, "gamma-constant-values")


def decide_D_zxz(t: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Does t divide some (5^m - 1, 5^n - 1)?"""
    ring = t.ring
    if _parity_base(ring).k != 2:
        raise BadRing("the pair example needs parity2")
    entries = _constant_entries(t)
    if entries is None:
        return TruthValue.false({"nonconstant": t}, "divisors-of-regular-constants")
    for d in entries:
        if d == 0 or d % 5 == 0:
            return TruthValue.false({"entry": d}, "five-adic-obstruction")
    exps = []
    for d in entries:
        m = 1 if abs(d) == 1 else int(n_order(5, abs(d)))
        if ((5 ** m - 1) // d) % 2:
            m *= 2  # (5^2m - 1) = (5^m - 1)(5^m + 1): the cofactor becomes even
        exps.append(m)
    c = ring.from_tuple(tuple(5 ** m - 1 for m in exps))
    tv = ring.divides(t, c, budget)
    assert tv.is_true
    return TruthValue.true({"c": c, "exponents": tuple(exps), "quotient": tv.evidence}, "order-of-five")


def decide_alpha_zxz(t: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    first = decide_D_zxz(t, budget)
    if first.is_true:
        return first
    second = decide_D_zxz(t + 1, budget)
    if second.is_true:
        return TruthValue.true({"shifted": True, **second.evidence}, second.cite)
    return TruthValue.false({"t": first.evidence, "t_plus_1": second.evidence}, "order-of-five")


def decide_alpha_zk(t: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """For each position j, pick c with 5 in slot j and y = c^n with 2r | 5^n - 1."""
    ring = t.ring
    base = _parity_base(ring)
    k = base.k
    coeffs = t.payload
    witnesses = []
    for j in range(k):
        comp = [c[j] for c in coeffs]
        while comp and comp[-1] == 0:
            comp.pop()
        e = ring.from_tuple(tuple(2 if i == j else 0 for i in range(k)))
        if len(comp) > 1:
            return TruthValue.false({"e": e, "position": j}, "nonconstant-component")
        r = comp[0] if comp else 0
        shift, rr = (0, r) if r != 0 and r % 5 else (1, r + 1)
        n = int(n_order(5, 2 * abs(rr)))
        c = ring.from_tuple(tuple(5 if i == j else 1 for i in range(k)))
        y = ring.pow(c, n)
        lhs = (t + shift) * e
        assert ring.divides(lhs, y - 1, budget).is_true
        witnesses.append({"e": e, "c": c, "y": y, "shift": shift})
    return TruthValue.true({"witnesses": witnesses}, "order-of-five")


# Oracle registry for the evaluator

_LPOW_CACHE: dict[tuple, LpowVerdict] = {}


def cached_lpow(f: RingValue, p: RingValue, budget: Budget = DEFAULT_BUDGET) -> LpowVerdict:
    key = (f.ring_id, f.payload, p.payload, budget)
    hit = _LPOW_CACHE.get(key)
    if hit is None:
        hit = _LPOW_CACHE[key] = decide_lpow(f, p, budget)
    return hit


def _sample_of(ctx: EvalContext, name: str) -> list[RingValue] | None:
    dom = ctx.named_domains.get(name)
    if dom is None:
        return None
    from .logic import domain_values

    values, _ = domain_values(dom, {}, ctx)
    return list(values)


def _oracle_psi(ctx: EvalContext, args: tuple) -> TruthValue:
    f, s = args
    return cached_lpow(f, s, ctx.budget).verdict


def _oracle_pow(ctx: EvalContext, args: tuple) -> TruthValue:
    f, p = args
    return decide_pow(f, p, ctx.budget.exp_cap)


def _oracle_powconst(ctx: EvalContext, args: tuple) -> TruthValue:
    f, a = args
    sample = _sample_of(ctx, "PQ") or default_P_sample(f.ring)[:2]
    return powconst_criterion(f, a, sample, ctx.budget)


def _oracle_theta(ctx: EvalContext, args: tuple) -> TruthValue:
    (t,) = args
    return decide_theta(t, _sample_of(ctx, "P"), ctx.budget)


def _oracle_lpow_x(ctx: EvalContext, args: tuple) -> TruthValue:
    from .qplane import qp_decide_lpow_x

    (f,) = args
    return qp_decide_lpow_x(f, ctx.budget)


def _unary(fn: Callable[..., TruthValue], with_budget: bool = True):
    def oracle(ctx: EvalContext, args: tuple) -> TruthValue:
        return fn(*args, ctx.budget) if with_budget else fn(*args)

    return oracle


ORACLES: dict[str, Callable[[EvalContext, tuple], TruthValue]] = {
    "psi": _oracle_psi,
    "in_lpow": _oracle_psi,
    "in_pow": _oracle_pow,
    "in_T": _unary(in_T),
    "in_U": _unary(in_U),
    "in_P": _unary(in_P),
    "irreducible": _unary(irreducible),
    "const": _unary(is_constant_poly, False),
    "constant": _unary(is_constant_poly, False),
    "phi": _unary(decide_phi),
    "Lp": lambda ctx, args: decide_Lp(args[0], args[1], None, ctx.budget),
    "theta": _oracle_theta,
    "powconst": _oracle_powconst,
    "beta": _unary(decide_beta, False),
    "gamma": _unary(decide_gamma, False),
    "D_zxz": _unary(decide_D_zxz),
    "alpha_zxz": _unary(decide_alpha_zxz),
    "alpha_zk": _unary(decide_alpha_zk),
    "lpow_x": _oracle_lpow_x,
}


def _named_lp(ring: Ring, cap: int) -> Formula:
    if not _is_poly(ring):
        raise BadRing("L_p is built over a polynomial ring")
    x = ring.x()
    return build_Lp(x, OraclePred("constant", (Var("t"),)), OraclePred("in_pow", (Var("y"), Lit(x))), cap)


# name -> (builder(ring, cap), free variables)
FORMULAS: dict[str, tuple[Callable[[Ring, int], Formula], tuple[str, ...]]] = {
    "psi": (lambda ring, cap: psi(Var("f"), Var("s")), ("f", "s")),
    "Lp": (_named_lp, ("t",)),
    "theta": (lambda ring, cap: build_theta(cap), ("t",)),
    "beta": (lambda ring, cap: beta(ring), ("t",)),
    "gamma": (lambda ring, cap: gamma(ring, cap), ("t",)),
    "alpha_zxz": (lambda ring, cap: alpha_zxz(ring, cap), ("t",)),
    "alpha_zk": (lambda ring, cap: alpha_zk(ring, cap), ("t",)),
}
