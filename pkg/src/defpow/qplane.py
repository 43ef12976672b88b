"""The quantum plane D_q[x, y] with relation yx = q*xy, and right divisibility."""

from __future__ import annotations

import re
from typing import Any, Iterable

from .core import (
    DEFAULT_BUDGET,
    BadSpec,
    Budget,
    MixedAlgebra,
    Mode,
    Ring,
    RingValue,
    TruthValue,
    ZeroElement,
)

Monomial = tuple[int, int]


def deglex_key(mono: Monomial) -> tuple[int, int]:
    """Total degree first, then the exponent of x."""
    return (mono[0] + mono[1], mono[0])


class QPlane(Ring):
    """D_q[x, y] over D = Z or F_p.

    A payload is a tuple of ((m, n), c) pairs sorted by (m, n) with every
    c nonzero; it stands for the sum of c * x^m * y^n.
    """

    commutative = False
    zero_payload = ()

    def __init__(self, prime: int | None, q: int):
        self.prime = prime
        self.q = q % prime if prime else q
        if self.q == 0:
            raise BadSpec("the parameter q must be nonzero")
        domain = f"Fp({prime})" if prime else "Z"
        self.spec = f"qplane:D={domain},q={q}"
        self.characteristic = prime or 0
        self.one_payload = (((0, 0), 1),)
        self.divisibility_mode = Mode.EXACT
        self.facts = {
            "reduced": (True, "no-zero-divisors", None),
            "domain": (True, "no-zero-divisors", None),
            "field": (False, "x-not-invertible", None),
        }

    @classmethod
    def from_spec(cls, spec: str) -> QPlane:
        m = re.fullmatch(r"qplane:D=(Z|Fp\((\d+)\)),q=(-?\d+)", spec.replace(" ", ""))
        if not m:
            raise BadSpec(f"bad quantum plane spec {spec!r}; expected e.g. qplane:D=Fp(5),q=2")
        prime = int(m.group(2)) if m.group(2) else None
        if prime is not None:
            from sympy import isprime

            if not isprime(prime):
                raise BadSpec(f"{prime} is not prime")
        return cls(prime, int(m.group(3)))

    def check(self, *values: RingValue) -> None:
        for v in values:
            if isinstance(v, RingValue) and v.ring_id.startswith("qplane:") and v.ring_id != self.spec:
                raise MixedAlgebra(f"{v.ring_id} vs {self.spec}")
        super().check(*values)

    # coefficient arithmetic
    def _c(self, c: int) -> int:
        return c % self.prime if self.prime else c

    def _cdiv(self, a: int, b: int) -> int | None:
        if self.prime:
            return a * pow(b, -1, self.prime) % self.prime
        return a // b if a % b == 0 else None

    def _from_terms(self, terms: dict[Monomial, int]) -> tuple:
        return tuple(sorted((m, self._c(c)) for m, c in terms.items() if self._c(c) != 0))

    def _add(self, a: tuple, b: tuple) -> tuple:
        terms = dict(a)
        for m, c in b:
            terms[m] = terms.get(m, 0) + c
        return self._from_terms(terms)

    def _neg(self, a: tuple) -> tuple:
        return tuple((m, self._c(-c)) for m, c in a)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        terms: dict[Monomial, int] = {}
        for (m, n), c in a:
            for (r, s), d in b:
                key = (m + r, n + s)
                terms[key] = terms.get(key, 0) + c * d * self.q ** (r * n)
        return self._from_terms(terms)

    def _from_int(self, k: int) -> tuple:
        return self._from_terms({(0, 0): k})

    def normalize(self, payload: Any) -> tuple:
        return self._from_terms(dict(payload))

    # construction
    def monomial(self, c: int, m: int, n: int) -> RingValue:
        return self._wrap(self._from_terms({(m, n): c}))

    def from_terms(self, terms: dict[Monomial, int]) -> RingValue:
        return self._wrap(self._from_terms(terms))

    @property
    def x(self) -> RingValue:
        return self.monomial(1, 1, 0)

    @property
    def y(self) -> RingValue:
        return self.monomial(1, 0, 1)

    @property
    def symbols(self) -> dict[str, RingValue]:
        return {"x": self.x, "y": self.y}

    def terms(self, f: RingValue) -> dict[Monomial, int]:
        self.check(f)
        return dict(f.payload)

    def is_constant(self, f: RingValue) -> bool:
        self.check(f)
        return all(m == (0, 0) for m, _ in f.payload)

    def constant(self, f: RingValue) -> int:
        return dict(f.payload).get((0, 0), 0)

    # order
    def deglex_max(self, f: RingValue) -> Monomial:
        self.check(f)
        if not f.payload:
            raise ZeroElement("the zero element has no support")
        return max((m for m, _ in f.payload), key=deglex_key)

    def deglex_min(self, f: RingValue) -> Monomial:
        self.check(f)
        if not f.payload:
            raise ZeroElement("the zero element has no support")
        return min((m for m, _ in f.payload), key=deglex_key)

    # divisibility
    def right_quotient(self, h: RingValue, f: RingValue) -> RingValue | None:
        """The g with f = g*h, or None.

        Since max(g*h) = max(g) + max(h), the leading term of f fixes the
        leading term of g; subtracting and repeating terminates because
        the deglex order on N^2 is a well-order.
        """
        self.check(h, f)
        if not h.payload:
            return self.zero() if not f.payload else None
        hm = self.deglex_max(h)
        hc = dict(h.payload)[hm]
        rest = f
        g: dict[Monomial, int] = {}
        while rest.payload:
            fm = self.deglex_max(rest)
            a, b = fm[0] - hm[0], fm[1] - hm[1]
            if a < 0 or b < 0:
                return None
            # (x^a y^b) * (c x^r y^s) carries the twist q^(r*b)
            c = self._cdiv(dict(rest.payload)[fm], hc * self.q ** (hm[0] * b))
            if c is None:
                return None
            g[(a, b)] = c
            rest = rest - self.monomial(c, a, b) * h
        return self.from_terms(g)

    def divides(self, a: RingValue, b: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        """Right divisibility: a | b when b = g*a for some g."""
        self.check(a, b)
        if not b.payload:
            return TruthValue.true(self.zero())
        if not a.payload:
            return TruthValue.false(cite="zero-divides-only-zero")
        g = self.right_quotient(a, b)
        if g is None:
            return TruthValue.false(cite="leading-term-division")
        return TruthValue.true(g, "leading-term-division")

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        # max and min are additive, so units are the unit constants
        self.check(a)
        if not self.is_constant(a) or not a.payload:
            return TruthValue.false(cite="units-are-constant")
        c = self.constant(a)
        if self.prime:
            return TruthValue.true(self.from_int(pow(c, -1, self.prime)), "units-are-constant")
        if abs(c) == 1:
            return TruthValue.true(a, "units-are-constant")
        return TruthValue.false(cite="units-are-constant")

    def units(self) -> list[RingValue]:
        if self.prime:
            return [self.from_int(c) for c in range(1, self.prime)]
        return [self.one(), self.from_int(-1)]

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        return self.one() if all(not v.payload for v in vals) else None

    def is_nilpotent(self, a: RingValue) -> bool:
        return a.is_zero()

    def integer_parts(self, a: RingValue) -> tuple[int, ...] | None:
        if self.prime or not self.is_constant(a):
            return None
        return (self.constant(a),)

    def is_field(self) -> bool:
        return False

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        consts = [self.from_int(k) for k in budget.int_range()]
        return consts + [self.x, self.y, self.x * self.y, self.x - 1, self.y - 1, self.x + self.y]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self.from_int(k) for k in budget.coeff_range()]

    def format(self, f: RingValue) -> str:
        if not f.payload:
            return "0"
        parts = []
        for (m, n), c in sorted(f.payload, key=lambda t: deglex_key(t[0]), reverse=True):
            if self.prime and c > self.prime // 2:
                c -= self.prime
            mono = "*".join(s for s in (
                "" if m == 0 else ("x" if m == 1 else f"x^{m}"),
                "" if n == 0 else ("y" if n == 1 else f"y^{n}"),
            ) if s)
            if not mono:
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = "-" + mono
            else:
                text = f"{c}*{mono}"
            parts.append(text)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def qp_add(a: RingValue, b: RingValue) -> RingValue:
    return a.ring.add(a, b)


def qp_mul(a: RingValue, b: RingValue) -> RingValue:
    a.ring.check(b)
    return a.ring.mul(a, b)


def right_divides(h: RingValue, f: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    return h.ring.divides(h, f, budget)


def _qplane(f: RingValue) -> QPlane:
    if not isinstance(f.ring, QPlane):
        raise BadSpec(f"{f.ring_id} is not a quantum plane")
    return f.ring


def twist(u: RingValue, k: int) -> RingValue:
    """The element v with u * x^k = x^k * v."""
    ring = _qplane(u)
    return ring.from_terms({(m, n): c * ring.q ** (k * n) for (m, n), c in u.payload})


def qp_decide_lpow_x(f: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """psi(f, x) under right divisibility, which holds exactly on the powers of x."""
    ring = _qplane(f)
    x = ring.x
    cite = "right-divisors-of-x-powers"
    if not f.payload:
        return TruthValue.false({"clause": "x-1 | f-1"}, cite)
    top = ring.deglex_max(f)
    # x^k | f forces k <= total degree of max(f)
    k, u = 0, f
    for j in range(1, top[0] + top[1] + 1):
        g = ring.right_quotient(ring.monomial(1, j, 0), f)
        if g is None:
            break
        k, u = j, g
    if k == 0:
        return TruthValue.false({"clause": "x | f"}, cite)
    if u.is_one():
        return TruthValue.true({"exponent": k}, cite)
    if ring.is_constant(u):
        # f = u*x^k with u a nonzero constant other than 1; x-1 divides no nonzero constant
        assert ring.divides(x - 1, f - 1, budget).is_false
        return TruthValue.false({"clause": "x-1 | f-1", "unit_part": u}, cite)
    v = twist(u, k)
    if ring.divides(x, v, budget).is_false:
        # f = x^k * v, so v is a right divisor that is neither a unit nor a multiple of x
        return TruthValue.false({"refuter": v}, cite)
    return TruthValue.false({"clause": "divisor", "cofactor": u}, cite)


def qp_decide_lpow(f: RingValue, p: RingValue, budget: Budget = DEFAULT_BUDGET):
    """lpow over a quantum plane: exact for p = x, bounded otherwise."""
    from .formulas import LpowVerdict, TheoremBacked, BoundedOnly, psi
    from .logic import ExplicitList, Var, evaluate

    ring = _qplane(f)
    if p == ring.x:
        tv = qp_decide_lpow_x(f, budget)
        return LpowVerdict(tv, None, TheoremBacked(tv.cite))
    phi = psi(Var("f"), Var("s"), "g", ExplicitList(tuple(ring.sample(budget)), False))
    tv = evaluate(phi, ring, {"f": f, "s": p}, budget)
    if tv.is_false:
        return LpowVerdict(tv, None, TheoremBacked("divisor-refutes-lpow"))
    return LpowVerdict(TruthValue.unknown("bounded divisor search") if tv.is_true else tv, None,
                       BoundedOnly("bounded divisor search"))


def qp_extract(t: RingValue) -> TruthValue:
    """Exponent extraction with p = x, A = constants and B = pow(x).

    x - 1 right-divides w_n - t, with w_n = 1 + x + ... + x^(n-1), exactly
    when t is the constant n*1, because x - 1 right-divides no nonzero
    constant.
    """
    ring = _qplane(t)
    if not ring.is_constant(t):
        return TruthValue.false({"alpha": False}, "constants-only")
    from .formulas import as_positive_integer, geometric_sum

    n = as_positive_integer(t)
    if n is None:
        return TruthValue.false({"t": t}, "exponent-of-constant")
    x = ring.x
    return TruthValue.true({"n": n, "y": x ** n, "w": geometric_sum(x, n)}, "exponent-of-constant")
