"""Univariate polynomial rings over catalog rings, with exact divisibility where possible."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Any, Iterable, Iterator, Sequence

import sympy
from sympy import divisors, isprime

from .core import (
    DEFAULT_BUDGET,
    BadBound,
    BadSpec,
    Budget,
    Mode,
    Ring,
    RingValue,
    TruthValue,
    ZeroElement,
    check_indecomposable,
    check_reduced,
)
from .rings import (
    DualNumbers,
    FiberRing,
    IntegerRing,
    IntegersMod,
    ParityRing,
    ProductRing,
    lift_parities,
)


def _base_fact(base: Ring, name: str) -> bool | None:
    if base.is_finite:
        check = check_reduced if name == "reduced" else check_indecomposable
        return check(base).is_true
    return base.fact(name)


def division_route(base: Ring) -> str:
    if isinstance(base, FiberRing):
        return "fiber"
    if isinstance(base, ProductRing):
        return "product"
    if base.fact("domain") and hasattr(base, "exact_quotient"):
        return "domain"
    if base.is_finite:
        return "finite-reduced" if _base_fact(base, "reduced") else "finite"
    return "bounded"


_EXACT_ROUTES = {"fiber", "domain", "finite-reduced"}


class PolyRing(Ring):
    """R[x] for a commutative catalog ring R.

    Payloads are tuples of base payloads indexed by degree, with no trailing
    zeros; the zero polynomial is the empty tuple.
    """

    def __init__(self, base: Ring):
        if isinstance(base, PolyRing) or not base.commutative:
            raise BadSpec("polynomial rings are univariate over a commutative catalog ring")
        self.base = base
        self.spec = "poly:" + base.spec
        self.characteristic = base.characteristic
        self.zero_payload = ()
        self.one_payload = (base.one_payload,)
        self._bz = base.zero_payload
        self._inverses: dict[Any, Any] = {}
        self.route = division_route(base)
        if self.route == "product":
            self._parts = tuple(polyring(c) for c in base.components)
            exact = all(p.divisibility_mode is Mode.EXACT for p in self._parts)
        else:
            exact = self.route in _EXACT_ROUTES
        self.divisibility_mode = Mode.EXACT if exact else Mode.BOUNDED
        reduced = _base_fact(base, "reduced")
        indec = _base_fact(base, "indecomposable")
        self.facts = {"field": (False, "x-not-invertible", None)}
        if reduced is not None:
            self.facts["reduced"] = (reduced, "reduced-iff-base-reduced", self._lift_witness(base, "reduced"))
        if indec is not None:
            self.facts["indecomposable"] = (indec, "idempotents-are-constant", self._lift_witness(base, "indecomposable"))
        if base.fact("domain") is not None:
            self.facts["domain"] = (bool(base.fact("domain")), "domain-iff-base-domain", None)

    @staticmethod
    def _lift_witness(base: Ring, name: str) -> Any:
        check = check_reduced if name == "reduced" else check_indecomposable
        tv = check(base)
        if tv.is_false and isinstance(tv.evidence, RingValue):
            return (tv.evidence.payload,)
        return None

    # payload arithmetic
    def _strip(self, coeffs: Sequence[Any]) -> tuple:
        z, n = self._bz, len(coeffs)
        while n and coeffs[n - 1] == z:
            n -= 1
        return tuple(coeffs[:n])

    def _add(self, a: tuple, b: tuple) -> tuple:
        if len(a) < len(b):
            a, b = b, a
        out, add = list(a), self.base._add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return self._strip(out)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        if not a or not b:
            return ()
        z, add, mul = self._bz, self.base._add, self.base._mul
        out = [z] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == z:
                continue
            for j, bj in enumerate(b):
                if bj != z:
                    out[i + j] = add(out[i + j], mul(ai, bj))
        return self._strip(out)

    def _neg(self, a: tuple) -> tuple:
        neg = self.base._neg
        return tuple(neg(c) for c in a)

    def _from_int(self, k: int) -> tuple:
        return self._strip((self.base._from_int(k),))

    def normalize(self, payload: Any) -> tuple:
        return self._strip(tuple(self.base.normalize(c) for c in payload))

    def _sub(self, a: tuple, b: tuple) -> tuple:
        return self._add(a, self._neg(b))

    # construction
    def x(self) -> RingValue:
        return self._wrap((self._bz, self.base.one_payload))

    def lift(self, c: RingValue | int) -> RingValue:
        if isinstance(c, int):
            c = self.base.from_int(c)
        self.base.check(c)
        return self._wrap(self._strip((c.payload,)))

    const = lift

    def from_coeffs(self, coeffs: Iterable[Any]) -> RingValue:
        out = []
        for c in coeffs:
            if isinstance(c, RingValue):
                self.base.check(c)
                out.append(c.payload)
            elif isinstance(c, tuple):
                out.append(self.base.from_tuple(c).payload)
            else:
                out.append(self.base._from_int(c))
        return self._wrap(self._strip(out))

    def monomial(self, c: RingValue | int, n: int) -> RingValue:
        c = self.lift(c)
        return self.mul(c, self.pow(self.x(), n))

    def from_tuple(self, entries: tuple) -> RingValue:
        return self.lift(self.base.from_tuple(entries))

    @cached_property
    def _symbols(self) -> dict[str, RingValue]:
        syms = {name: self.lift(v) for name, v in self.base.symbols.items()}
        syms["x"] = self.x()
        return syms

    @property
    def symbols(self) -> dict[str, RingValue]:
        return self._symbols

    # inspection
    def coeffs(self, f: RingValue) -> list[RingValue]:
        self.check(f)
        return [self.base._wrap(c) for c in f.payload]

    def coeff(self, f: RingValue, i: int) -> RingValue:
        self.check(f)
        return self.base._wrap(f.payload[i] if i < len(f.payload) else self._bz)

    def degree(self, f: RingValue) -> int | None:
        """Degree, or None for the zero polynomial."""
        self.check(f)
        return len(f.payload) - 1 if f.payload else None

    def leading_coeff(self, f: RingValue) -> RingValue:
        self.check(f)
        if not f.payload:
            raise ZeroElement("the zero polynomial has no leading coefficient")
        return self.base._wrap(f.payload[-1])

    def is_constant(self, f: RingValue) -> bool:
        self.check(f)
        return len(f.payload) <= 1

    def constant_term(self, f: RingValue) -> RingValue:
        return self.coeff(f, 0)

    def evaluate(self, f: RingValue, c: RingValue | int) -> RingValue:
        self.check(f)
        if isinstance(c, int):
            c = self.base.from_int(c)
        self.base.check(c)
        add, mul = self.base._add, self.base._mul
        acc = self._bz
        for coef in reversed(f.payload):
            acc = add(mul(acc, c.payload), coef)
        return self.base._wrap(acc)

    def compose(self, f: RingValue, g: RingValue) -> RingValue:
        """The polynomial f(g)."""
        self.check(f, g)
        acc = self.zero()
        for coef in reversed(f.payload):
            acc = acc * g + self._wrap(self._strip((coef,)))
        return acc

    # ring interface
    @property
    def is_finite(self) -> bool:  # type: ignore[override]
        return False

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        consts = [self.lift(c) for c in self.base.sample(budget)]
        x = self.x()
        return consts + [x + c for c in consts]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self.lift(c) for c in self.base.coefficient_sample(budget)]

    def divides(self, a: RingValue, b: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        return poly_divides(a, b, None, budget)

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        return poly_is_unit(a, budget)

    def units(self) -> list[RingValue] | None:
        if _base_fact(self.base, "reduced"):
            base_units = self.base.units()
            if base_units is not None:
                return [self.lift(u) for u in base_units]
        return None

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        """A nonzero constant killing every value.

        For a single polynomial this is exact: a zero divisor of R[x] is
        always killed by a nonzero constant (McCoy's theorem).
        """
        coeffs = [c for v in values for c in self.coeffs(v)]
        c = self.base.annihilator(coeffs)
        return None if c is None else self.lift(c)

    def is_nilpotent(self, a: RingValue) -> bool:
        return all(self.base.is_nilpotent(c) for c in self.coeffs(a))

    def integer_parts(self, a: RingValue) -> tuple[int, ...] | None:
        if self.is_constant(a):
            return self.base.integer_parts(self.constant_term(a))
        return None

    def is_field(self) -> bool:
        return False

    def format(self, f: RingValue) -> str:
        if not f.payload:
            return "0"
        terms = []
        for i in range(len(f.payload) - 1, -1, -1):
            c = f.payload[i]
            if c == self._bz:
                continue
            text = self.base.format(self.base._wrap(c))
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                term = text if _is_atomic(text) else f"({text})"
            elif c == self.base.one_payload:
                term = mono
            elif text == "-1":
                term = "-" + mono
            else:
                term = (text if _is_atomic(text) else f"({text})") + "*" + mono
            terms.append(term)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    # division
    def _divmod_unit_lead(self, fp: tuple, gp: tuple, inv: Any) -> tuple[tuple, tuple]:
        base = self.base
        r = list(fp)
        dg = len(gp) - 1
        q = [self._bz] * max(len(fp) - dg, 1)
        while len(r) - 1 >= dg and r:
            c = base._mul(r[-1], inv)
            shift = len(r) - 1 - dg
            q[shift] = c
            for j, gj in enumerate(gp):
                r[shift + j] = base._add(r[shift + j], base._neg(base._mul(c, gj)))
            r = list(self._strip(r[:-1])) if len(r) > 1 else []
        return self._strip(q), self._strip(r)

    def _domain_quotient(self, fp: tuple, gp: tuple) -> tuple | None:
        base = self.base
        return _long_division(
            list(fp), list(gp), self._bz, base._add, lambda a, b: base._add(a, base._neg(b)),
            base._mul, base.exact_quotient,
        )

    def _fiber_quotient(self, fp: tuple, gp: tuple) -> tuple | None:
        base = self.base
        ff = [base.to_fiber(c) for c in fp]
        gf = [base.to_fiber(c) for c in gp]
        quotients: list[list | None] = []
        for i, dom in enumerate(base.domains):
            fi = _strip_raw([c[i] for c in ff], dom.zero)
            gi = _strip_raw([c[i] for c in gf], dom.zero)
            if not gi:
                if fi:
                    return None
                quotients.append(None)
                continue
            qi = _long_division(fi, gi, dom.zero, dom.add, dom.sub, dom.mul,
                                lambda a, b, d=dom: d.exact_div(b, a))
            if qi is None:
                return None
            quotients.append(list(qi))
        length = max(len(q) for q in quotients if q is not None) or 1
        out = []
        for j in range(length):
            column = [None if q is None else (q[j] if j < len(q) else dom.zero)
                      for q, dom in zip(quotients, base.domains)]
            lifted = lift_parities(base.domains, column)
            if lifted is None:
                return None
            out.append(base.from_fiber(tuple(lifted)))
        return self._strip(out)

    def _finite_quotient(self, fp: tuple, gp: tuple, bound: int) -> tuple | None:
        """Search a quotient of degree <= bound, lowest coefficient first."""
        base, z = self.base, self._bz
        shift = 0
        while gp[shift] == z:
            shift += 1
        if any(c != z for c in fp[:shift]):
            return None
        gp, fp = gp[shift:], fp[shift:]
        elements = list(base._payloads())
        g0 = gp[0]
        solutions: dict[Any, list] = {}
        for q in elements:
            solutions.setdefault(base._mul(g0, q), []).append(q)
        add, mul, neg = base._add, base._mul, base._neg
        q = [z] * (bound + 1)
        top = max(len(fp), len(gp) + bound)

        def conv(k: int) -> Any:
            acc = z
            for j in range(max(0, k - bound), min(k, len(gp) - 1) + 1):
                acc = add(acc, mul(gp[j], q[k - j]))
            return acc

        def target(k: int) -> Any:
            return fp[k] if k < len(fp) else z

        def rec(i: int) -> bool:
            if i > bound:
                return all(conv(k) == target(k) for k in range(bound + 1, top))
            rest = z
            for j in range(1, min(i, len(gp) - 1) + 1):
                rest = add(rest, mul(gp[j], q[i - j]))
            for cand in solutions.get(add(target(i), neg(rest)), ()):
                q[i] = cand
                if rec(i + 1):
                    return True
            q[i] = z
            return False

        return self._strip(q) if rec(0) else None

    def _evaluation_refutes(self, g: RingValue, f: RingValue, budget: Budget) -> RingValue | None:
        points = self.base.elements() if self.base.is_finite else self.base.sample(budget)
        for c in points:
            if self.base.divides(self.evaluate(g, c), self.evaluate(f, c), budget).is_false:
                return c
        return None

    def _nil_refutes(self, g: RingValue, f: RingValue) -> bool:
        reduced = nil_quotient(self.base)
        target = polyring(reduced)
        gb = target._wrap(target._strip([reduced.reduce(c) for c in g.payload]))
        fb = target._wrap(target._strip([reduced.reduce(c) for c in f.payload]))
        if fb.is_zero():
            return False
        if gb.is_zero():
            return True
        return poly_divides(gb, fb).is_false

    def _divide(self, g: RingValue, f: RingValue, deg_bound: int | None, budget: Budget) -> TruthValue:
        base = self.base
        gp, fp = g.payload, f.payload
        inv = self._inverses.get(gp[-1], NotImplemented)
        if inv is NotImplemented:
            lead = base.is_unit(base._wrap(gp[-1]), budget)
            inv = lead.evidence.payload if lead.is_true else None
            if lead.known and len(self._inverses) < 4096:
                self._inverses[gp[-1]] = inv
        if inv is not None:
            if all(c == self._bz for c in gp[:-1]):
                # monomial divisor: shift coefficients
                k = len(gp) - 1
                low = self._strip(fp[:k])
                if low:
                    return TruthValue.false({"remainder": self._wrap(low)}, "unit-leading-division")
                return TruthValue.true(self._wrap(self._strip([base._mul(c, inv) for c in fp[k:]])))
            q, r = self._divmod_unit_lead(fp, gp, inv)
            if r:
                return TruthValue.false({"remainder": self._wrap(r)}, "unit-leading-division")
            return TruthValue.true(self._wrap(q))
        if len(gp) == 1:
            out = []
            for c in fp:
                tv = base.divides(base._wrap(gp[0]), base._wrap(c), budget)
                if not tv.is_true:
                    if tv.is_false:
                        return TruthValue.false({"coefficient": base._wrap(c)}, "constant-divides-coefficientwise")
                    return TruthValue.unknown(tv.note)
                out.append(tv.evidence.payload)
            return TruthValue.true(self._wrap(self._strip(out)))
        route = self.route
        if route in ("domain", "fiber"):
            q = self._domain_quotient(fp, gp) if route == "domain" else self._fiber_quotient(fp, gp)
            if q is None:
                return TruthValue.false(cite=f"{route}-long-division")
            return TruthValue.true(self._wrap(q))
        if route == "product":
            return self._product_divide(g, f, deg_bound, budget)
        deg_f = len(fp) - 1
        if route == "finite-reduced":
            bound = deg_f if deg_bound is None else max(deg_bound, deg_f)
            q = self._finite_quotient(fp, gp, bound)
            if q is None:
                return TruthValue.false(cite="finite-reduced-quotient-degree")
            return TruthValue.true(self._wrap(q))
        bound = deg_f + budget.nil_slack if deg_bound is None else deg_bound
        if route == "finite":
            q = self._finite_quotient(fp, gp, bound)
            if q is not None:
                return TruthValue.true(self._wrap(q))
        else:
            found = self._box_quotient(g, f, bound, budget)
            if found is not None:
                return TruthValue.true(found)
        point = self._evaluation_refutes(g, f, budget)
        if point is not None:
            return TruthValue.false({"point": point}, "evaluation-homomorphism")
        if base.is_finite and self._nil_refutes(g, f):
            return TruthValue.false(cite="nilradical-reduction")
        return TruthValue.unknown(f"no quotient of degree <= {bound}")

    def _box_quotient(self, g: RingValue, f: RingValue, bound: int, budget: Budget) -> RingValue | None:
        coeffs = self.base.coefficient_sample(budget)
        for count, q in enumerate(poly_box(self, bound, coeffs)):
            if count >= budget.max_candidates:
                break
            if g * q == f:
                return q
        return None

    def _product_divide(self, g: RingValue, f: RingValue, deg_bound: int | None, budget: Budget) -> TruthValue:
        parts = []
        for i, sub in enumerate(self._parts):
            gi, fi = self.project(g, i), self.project(f, i)
            tv = poly_divides(gi, fi, deg_bound, budget)
            if tv.is_false:
                return TruthValue.false({"component": i}, "componentwise-division")
            if tv.is_unknown:
                return TruthValue.unknown(f"component {i}: {tv.note}")
            parts.append(tv.evidence.payload)
        return TruthValue.true(self.unproject(parts))

    def project(self, f: RingValue, i: int) -> RingValue:
        sub = self._parts[i]
        return sub._wrap(sub._strip([c[i] for c in f.payload]))

    def unproject(self, parts: Sequence[tuple]) -> RingValue:
        length = max((len(p) for p in parts), default=0)
        out = []
        for j in range(length):
            out.append(tuple(p[j] if j < len(p) else sub._bz for p, sub in zip(parts, self._parts)))
        return self._wrap(self._strip(out))


def _is_atomic(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return body.isalnum() or (text.startswith("(") and text.endswith(")") and "+" not in text)


def _strip_raw(coeffs: list, zero: Any) -> list:
    n = len(coeffs)
    while n and coeffs[n - 1] == zero:
        n -= 1
    return coeffs[:n]


def _long_division(f: list, g: list, zero: Any, add, sub, mul, quotient) -> tuple | None:
    """Exact division f / g over an integral domain; None if g does not divide f.

    ``quotient(a, b)`` returns q with a*q == b, or None.
    """
    r = _strip_raw(list(f), zero)
    dg = len(g) - 1
    q = [zero] * max(len(r) - dg, 1)
    while r:
        if len(r) - 1 < dg:
            return None
        c = quotient(g[-1], r[-1])
        if c is None:
            return None
        shift = len(r) - 1 - dg
        q[shift] = c
        for j, gj in enumerate(g):
            r[shift + j] = sub(r[shift + j], mul(c, gj))
        r = _strip_raw(r[:-1], zero)
    return tuple(_strip_raw(q, zero))


class NilQuotient(Ring):
    """A finite ring modulo its nilradical, elements named by their least payload."""

    is_finite = True

    def __init__(self, ring: Ring):
        self.ring = ring
        self.spec = f"nilquot({ring.spec})"
        self.characteristic = 0
        nil = [a.payload for a in ring.elements() if ring.is_nilpotent(a)]
        self._rep: dict[Any, Any] = {}
        for a in ring._payloads():
            coset = [ring._add(a, n) for n in nil]
            self._rep[a] = min(coset)
        self.zero_payload = self._rep[ring.zero_payload]
        self.one_payload = self._rep[ring.one_payload]
        self.facts = {"reduced": (True, "nilradical-quotient", None)}

    def reduce(self, payload: Any) -> Any:
        return self._rep[payload]

    def _payloads(self) -> list:
        return sorted(set(self._rep.values()))

    def _add(self, a: Any, b: Any) -> Any:
        return self._rep[self.ring._add(a, b)]

    def _mul(self, a: Any, b: Any) -> Any:
        return self._rep[self.ring._mul(a, b)]

    def _neg(self, a: Any) -> Any:
        return self._rep[self.ring._neg(a)]

    def _from_int(self, k: int) -> Any:
        return self._rep[self.ring._from_int(k)]

    def is_nilpotent(self, a: RingValue) -> bool:
        return a.is_zero()


@lru_cache(maxsize=None)
def polyring(base: Ring) -> PolyRing:
    """The shared R[x] instance for a base ring."""
    return PolyRing(base)


@lru_cache(maxsize=None)
def nil_quotient(base: Ring) -> NilQuotient:
    return NilQuotient(base)


def poly_ring_of(f: RingValue) -> PolyRing:
    ring = f.ring
    if not isinstance(ring, PolyRing):
        raise BadSpec(f"{f.ring_id} is not a polynomial ring")
    return ring


def poly_box(ring: PolyRing, max_degree: int, coeffs: Sequence[RingValue]) -> Iterator[RingValue]:
    """Polynomials of degree <= max_degree with coefficients from ``coeffs``.

    Order: the zero polynomial, then by degree, then lexicographically on
    coefficient indices read from the leading coefficient down.
    """
    if max_degree < 0:
        raise BadBound("negative degree bound")
    seen: dict[Any, None] = {}
    for c in coeffs:
        ring.base.check(c)
        seen.setdefault(c.payload)
    payloads = list(seen)
    z = ring._bz
    if z in seen:
        yield ring.zero()
    n = len(payloads)
    for d in range(max_degree + 1):
        for idx in product(range(n), repeat=d + 1):
            lead = payloads[idx[0]]
            if lead == z:
                continue
            yield ring._wrap(tuple(payloads[i] for i in reversed(idx)))


def poly_divides(g: RingValue, f: RingValue, deg_bound: int | None = None,
                 budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Does g divide f in R[x]? A True answer carries the quotient."""
    ring = poly_ring_of(g)
    ring.check(g, f)
    if deg_bound is not None and deg_bound < 0:
        raise BadBound("negative quotient degree bound")
    if f.is_zero():
        return TruthValue.true(ring.zero())
    if g.is_zero():
        return TruthValue.false(cite="zero-divides-only-zero")
    if g == f:
        return TruthValue.true(ring.one())
    return ring._divide(g, f, deg_bound, budget)


def poly_is_unit(f: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """f is a unit iff its constant term is a unit and its other coefficients are nilpotent."""
    ring = poly_ring_of(f)
    base = ring.base
    if f.is_zero():
        return TruthValue.false(cite="zero-not-unit")
    cite = "reduced-units-constant" if _base_fact(base, "reduced") else "unit-iff-nilpotent-higher"
    head = base.is_unit(ring.constant_term(f), budget)
    if head.is_unknown:
        return TruthValue.unknown(head.note)
    if head.is_false:
        return TruthValue.false({"constant_term": ring.constant_term(f)}, cite)
    coeffs = ring.coeffs(f)
    for i, c in enumerate(coeffs[1:], start=1):
        if not base.is_nilpotent(c):
            return TruthValue.false({"degree": i, "coefficient": c}, cite)
    u_inv = ring.lift(head.evidence)
    step = -(u_inv * (f - ring.lift(coeffs[0])))
    inverse, term = ring.zero(), ring.one()
    while not term.is_zero():
        inverse = inverse + term
        term = term * step
    inverse = inverse * u_inv
    assert (inverse * f).is_one()
    return TruthValue.true(inverse, cite)


@dataclass(frozen=True)
class PowerDivision:
    exponent: int
    infinite_suspected: bool
    quotient: RingValue | None = None


def max_power_dividing(p: RingValue, f: RingValue, cap: int,
                       budget: Budget = DEFAULT_BUDGET) -> PowerDivision:
    """Largest n <= cap with p^n | f, counting only confirmed divisions."""
    ring = poly_ring_of(p)
    ring.check(p, f)
    if cap < 0:
        raise BadBound("negative exponent cap")
    n, quotient, power = 0, f, ring.one()
    for k in range(1, cap + 1):
        power = power * p
        tv = poly_divides(power, f, None, budget)
        if not tv.is_true:
            break
        n, quotient = k, tv.evidence
    return PowerDivision(n, n == cap, quotient)


def _is_poly_unit_payload(ring: PolyRing, a: Any, b: Any) -> bool:
    """Is a + b*x a unit of R[x]?"""
    base = ring.base
    return base.is_unit(base._wrap(a)).is_true and base.is_nilpotent(base._wrap(b))


def linear_factorizations_of_x(base: Ring) -> Iterator[tuple[RingValue, RingValue]]:
    """Nontrivial factorizations x = (a + b x)(c + d x) over a finite ring."""
    ring = polyring(base)
    zero_pairs = [(a, c) for a in base._payloads() for c in base._payloads()
                  if base._mul(a, c) == base.zero_payload]
    one = base.one_payload
    for a, c in zero_pairs:
        for b, d in zero_pairs:
            if base._add(base._mul(a, d), base._mul(b, c)) != one:
                continue
            if _is_poly_unit_payload(ring, a, b) or _is_poly_unit_payload(ring, c, d):
                continue
            yield ring._wrap(ring._strip((a, b))), ring._wrap(ring._strip((c, d)))


def idempotent_split_of_x(ring: PolyRing, e: RingValue) -> tuple[RingValue, RingValue]:
    """The factorization x = [e x + (1 - e)] [(1 - e) x + e]."""
    one = ring.base.one()
    return ring.from_coeffs([one - e, e]), ring.from_coeffs([e, one - e])


def x_irreducible(base: Ring, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Is x irreducible in R[x]? Only linear-times-linear splittings need checking."""
    ring = polyring(base)
    if base.is_finite:
        for g, h in linear_factorizations_of_x(base):
            return TruthValue.false({"factors": (g, h)}, "linear-factor-search")
        return TruthValue.true(cite="linear-factor-search")
    indec = check_indecomposable(base, budget)
    if indec.is_true:
        return TruthValue.true(cite="x-irreducible-iff-indecomposable")
    if indec.is_false and isinstance(indec.evidence, RingValue):
        return TruthValue.false({"factors": idempotent_split_of_x(ring, indec.evidence)},
                                "x-irreducible-iff-indecomposable")
    for e in base.sample(budget):
        if not e.is_zero() and not e.is_one() and e * e == e:
            return TruthValue.false({"factors": idempotent_split_of_x(ring, e)}, "idempotent-split")
    return TruthValue.unknown("no idempotent found in the sample")


def _to_sympy(ring: PolyRing, f: RingValue):
    x = sympy.Symbol("x")
    coeffs = list(reversed(f.payload))
    if isinstance(ring.base, IntegerRing):
        return sympy.Poly(coeffs, x, domain="ZZ")
    return sympy.Poly(coeffs, x, modulus=ring.base.n)


def _from_sympy(ring: PolyRing, poly) -> RingValue:
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return ring.from_coeffs(coeffs)


def _ufd_irreducible(ring: PolyRing, f: RingValue) -> TruthValue:
    deg = ring.degree(f)
    if deg == 0:
        c = f.payload[0]
        if isinstance(ring.base, IntegerRing) and isprime(abs(c)):
            return TruthValue.true(cite="prime-integer")
        return TruthValue.false(cite="constant-factorization")
    content, factors = _to_sympy(ring, f).factor_list()
    content = int(content)
    if isinstance(ring.base, IntegerRing) and abs(content) != 1:
        g = ring.lift(content)
        return TruthValue.false({"factors": (g, poly_divides(g, f).evidence)}, "content-factor")
    if len(factors) == 1 and factors[0][1] == 1:
        return TruthValue.true(cite="ufd-factorization")
    g = _from_sympy(ring, factors[0][0])
    return TruthValue.false({"factors": (g, poly_divides(g, f).evidence)}, "ufd-factorization")


def _regular_constant_factor(ring: PolyRing, f: RingValue) -> TruthValue | None:
    """Factor a constant with nonzero entries over a parity ring.

    Divisors of a regular element over a reduced base are constants, so
    this reduces to choosing integer divisors that share a parity.
    """
    entries = f.payload[0]
    if any(e == 0 for e in entries):
        return None
    options = [[s * d for d in divisors(abs(e)) for s in (1, -1)] for e in entries]
    for combo in product(*options):
        cof = tuple(e // d for e, d in zip(entries, combo))
        if len({d & 1 for d in combo}) != 1 or len({d & 1 for d in cof}) != 1:
            continue
        if all(abs(d) == 1 for d in combo) or all(abs(d) == 1 for d in cof):
            continue
        return TruthValue.false({"factors": (ring.from_tuple(combo), ring.from_tuple(cof))},
                                "constant-divisor-enumeration")
    return TruthValue.true(cite="constant-divisor-enumeration")


def find_factorization(f: RingValue, budget: Budget = DEFAULT_BUDGET,
                       max_degree: int | None = None) -> tuple[RingValue, RingValue] | None:
    """Search a box for a splitting f = g*h into nonunits."""
    ring = poly_ring_of(f)
    deg = ring.degree(f) or 0
    bound = deg if max_degree is None else max_degree
    coeffs = ring.base.coefficient_sample(budget)
    for count, g in enumerate(poly_box(ring, bound, coeffs)):
        if count >= budget.max_candidates:
            break
        if g.is_zero() or poly_is_unit(g, budget).is_true:
            continue
        tv = poly_divides(g, f, None, budget)
        if tv.is_true and not poly_is_unit(tv.evidence, budget).is_true:
            return g, tv.evidence
    return None


def is_irreducible(f: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Nonzero, not a unit, and not a product of two nonunits."""
    ring = poly_ring_of(f)
    base = ring.base
    if f.is_zero():
        return TruthValue.false(cite="zero-not-irreducible")
    if poly_is_unit(f, budget).is_true:
        return TruthValue.false(cite="unit-not-irreducible")
    if f == ring.x():
        return x_irreducible(base, budget)
    if isinstance(base, IntegerRing) or (isinstance(base, IntegersMod) and isprime(base.n)):
        return _ufd_irreducible(ring, f)
    deg = ring.degree(f)
    if (deg == 1 and _base_fact(base, "reduced") and _base_fact(base, "indecomposable")
            and base.is_unit(ring.leading_coeff(f)).is_true):
        return TruthValue.true(cite="linear-unit-lead-irreducible")
    if deg == 0 and isinstance(base, ParityRing):
        verdict = _regular_constant_factor(ring, f)
        if verdict is not None:
            return verdict
    if deg == 0 and isinstance(base, DualNumbers) and f.payload[0][0] == 0:
        return TruthValue.true(cite="square-zero-generator-irreducible")
    if base.is_finite and _base_fact(base, "reduced") is not False and check_reduced(base).is_true:
        return _field_product_irreducible(ring, f, budget)
    found = find_factorization(f, budget)
    if found is not None:
        return TruthValue.false({"factors": found}, "factor-search")
    return TruthValue.unknown("no factorization in the box")


def primitive_idempotents(base: Ring) -> list[RingValue]:
    """Minimal nonzero idempotents of a finite ring."""
    idem = [e for e in base.elements() if not e.is_zero() and e * e == e]
    return [e for e in idem if not any(d != e and d * e == d for d in idem)]


def _field_product_irreducible(ring: PolyRing, f: RingValue, budget: Budget) -> TruthValue:
    """A finite reduced ring is a product of fields e_i R, and R[x] splits the same way.

    f is irreducible iff exactly one component f*e_i is a nonunit and that
    component is irreducible over the field e_i R.
    """
    base = ring.base
    one = ring.one()
    comps = []
    for e in primitive_idempotents(base):
        E = ring.lift(e)
        fe = E * f
        unit = ring.degree(fe) == 0
        comps.append((e, E, fe, unit))
    bad = [c for c in comps if not c[3]]
    if len(bad) >= 2:
        # split off the first nonunit component
        _, E, fe, _ = bad[0]
        g, h = fe + (one - E), E + (one - E) * f
        return TruthValue.false({"factors": (g, h)}, "component-split")
    (e, E, fe, _), = bad
    if fe.is_zero():
        return TruthValue.false({"factors": (one - E, E * ring.x() + (one - E) * f)}, "component-split")
    deg = ring.degree(fe)
    field_els = sorted({(e * r).payload for r in base.elements()}, key=repr)
    field_vals = [base._wrap(c) for c in field_els]
    for d in range(1, deg // 2 + 1):
        for low in product(field_vals, repeat=d):
            g = ring.from_coeffs(list(low) + [e]) + (one - E)
            tv = ring.divides(g, f, budget)
            if tv.is_true:
                return TruthValue.false({"factors": (g, tv.evidence)}, "component-factor-search")
            if tv.is_unknown:
                return TruthValue.unknown("component division undecided")
    return TruthValue.true(cite="component-factor-search")
