"""Concrete rings: integers, residues, products, parity subrings and small quotients."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product
from typing import Any, Iterable

from sympy import isprime, primefactors

from .core import (
    DEFAULT_BUDGET,
    BadSpec,
    Budget,
    Mode,
    Ring,
    RingValue,
    TruthValue,
)


# Coefficient domains used by fiber-product rings. Each is an integral
# domain with exact division, so polynomial long division over it is exact.

class IntDomain:
    zero = 0
    even_nonzero = 2

    @staticmethod
    def add(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def sub(a: int, b: int) -> int:
        return a - b

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a * b

    @staticmethod
    def exact_div(a: int, b: int) -> int | None:
        q, r = divmod(a, b)
        return q if r == 0 else None

    @staticmethod
    def parity(a: int) -> int:
        return a & 1

    @staticmethod
    def lift(bit: int) -> int:
        return bit


def clmul(a: int, b: int) -> int:
    """Product in F2[t] of bitmask-encoded polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q, db = 0, b.bit_length()
    while a and a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


class F2tDomain:
    """F2[t] with polynomials encoded as bitmasks (bit i is the t^i coefficient)."""

    zero = 0
    even_nonzero = 0b10

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    @staticmethod
    def mul(a: int, b: int) -> int:
        return clmul(a, b)

    @staticmethod
    def exact_div(a: int, b: int) -> int | None:
        q, r = f2_divmod(a, b)
        return q if r == 0 else None

    @staticmethod
    def parity(a: int) -> int:
        return a & 1

    @staticmethod
    def lift(bit: int) -> int:
        return bit


class FiberRing(Ring):
    """A ring embedded in a product of domains, cut out by equal parities.

    Subclasses give the component domains and the maps to and from the
    fiber coordinates. Division, units and annihilators then reduce to
    componentwise questions plus a parity feasibility check.
    """

    domains: tuple = ()

    def to_fiber(self, payload: Any) -> tuple:
        raise NotImplementedError

    def from_fiber(self, comps: tuple) -> Any:
        raise NotImplementedError

    def _quotient(self, a: Any, b: Any) -> Any:
        fa, fb = self.to_fiber(a), self.to_fiber(b)
        quotients: list[Any] = []
        for dom, ai, bi in zip(self.domains, fa, fb):
            if ai == dom.zero:
                if bi != dom.zero:
                    return None
                quotients.append(None)
            else:
                qi = dom.exact_div(bi, ai)
                if qi is None:
                    return None
                quotients.append(qi)
        parity = lift_parities(self.domains, quotients)
        if parity is None:
            return None
        return self.from_fiber(tuple(parity))

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        fibers = [self.to_fiber(v.payload) for v in vals]
        for i, dom in enumerate(self.domains):
            if all(f[i] == dom.zero for f in fibers):
                comps = [d.zero for d in self.domains]
                comps[i] = dom.even_nonzero
                return self._wrap(self.from_fiber(tuple(comps)))
        return None

    def is_nilpotent(self, a: RingValue) -> bool:
        self.check(a)
        return a.is_zero()


def lift_parities(domains: tuple, quotients: list[Any]) -> list[Any] | None:
    """Fill free components so all parities agree, or None if fixed ones clash."""
    fixed = {dom.parity(q) for dom, q in zip(domains, quotients) if q is not None}
    if len(fixed) > 1:
        return None
    bit = fixed.pop() if fixed else 0
    return [dom.lift(bit) if q is None else q for dom, q in zip(domains, quotients)]


class IntegerRing(Ring):
    spec = "z"
    characteristic = 0
    facts = {
        "reduced": (True, "integral-domain", None),
        "indecomposable": (True, "integral-domain", None),
        "domain": (True, "integral-domain", None),
        "field": (False, "integral-domain", None),
        "ufd": (True, "integral-domain", None),
    }

    def _add(self, a: int, b: int) -> int:
        return a + b

    def _mul(self, a: int, b: int) -> int:
        return a * b

    def _neg(self, a: int) -> int:
        return -a

    def _from_int(self, k: int) -> int:
        return k

    def normalize(self, payload: Any) -> int:
        return int(payload)

    def _quotient(self, a: int, b: int) -> int | None:
        return IntDomain.exact_div(b, a)

    def exact_quotient(self, a: int, b: int) -> int | None:
        return IntDomain.exact_div(b, a)

    def units(self) -> list[RingValue]:
        return [self.one(), self.from_int(-1)]

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        return self.one() if all(v.is_zero() for v in vals) else None

    def is_nilpotent(self, a: RingValue) -> bool:
        return a.is_zero()

    def integer_parts(self, a: RingValue) -> tuple[int, ...]:
        return (a.payload,)

    def is_field(self) -> bool:
        return False


def _rad(n: int) -> int:
    return math.prod(primefactors(n))


class IntegersMod(Ring):
    is_finite = True

    def __init__(self, n: int):
        if n < 2:
            raise BadSpec("zmod needs n >= 2")
        self.n = n
        self.spec = f"zmod:{n}"
        self.characteristic = n
        rad = _rad(n)
        prime_powers = len(primefactors(n))
        self.facts = {
            "reduced": (rad == n, "squarefree-modulus", None),
            "indecomposable": (prime_powers == 1, "prime-power-modulus", None),
            "field": (isprime(n), "prime-modulus", None),
            "domain": (isprime(n), "prime-modulus", None),
            "ufd": (isprime(n), "prime-modulus", None),
        }

    def _add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def _mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def _neg(self, a: int) -> int:
        return -a % self.n

    def _from_int(self, k: int) -> int:
        return k % self.n

    def normalize(self, payload: Any) -> int:
        return int(payload) % self.n

    def _payloads(self) -> range:
        return range(self.n)

    def _quotient(self, a: int, b: int) -> int | None:
        g = math.gcd(a, self.n)
        if b % g:
            return None
        m = self.n // g
        return (b // g) * pow(a // g, -1, m) % m if m > 1 else 0

    def exact_quotient(self, a: int, b: int) -> int | None:
        return self._quotient(a, b)

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        self.check(a)
        if math.gcd(a.payload, self.n) != 1:
            return TruthValue.false(cite="coprime-residue")
        return TruthValue.true(self._wrap(pow(a.payload, -1, self.n)))

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        c = 1
        for v in vals:
            c = math.lcm(c, self.n // math.gcd(self.n, v.payload))
        return self._wrap(c) if c < self.n else None

    def is_nilpotent(self, a: RingValue) -> bool:
        self.check(a)
        return a.payload % _rad(self.n) == 0

    def is_field(self) -> bool:
        return isprime(self.n)


class ProductRing(Ring):
    def __init__(self, components: tuple[Ring, ...]):
        if len(components) < 2:
            raise BadSpec("a product needs at least two factors")
        self.components = tuple(components)
        self.spec = "prod(" + ",".join(c.spec for c in components) + ")"
        chars = [c.characteristic for c in components]
        self.characteristic = 0 if 0 in chars else math.lcm(*chars)
        self.is_finite = all(c.is_finite for c in components)
        self.divisibility_mode = (
            Mode.EXACT if all(c.divisibility_mode is Mode.EXACT for c in components) else Mode.BOUNDED
        )
        self.zero_payload = tuple(c.zero_payload for c in components)
        self.one_payload = tuple(c.one_payload for c in components)
        reduced = [c.fact("reduced") if not c.is_finite else _finite_reduced(c) for c in components]
        idem = tuple(c.one_payload if i == 0 else c.zero_payload for i, c in enumerate(components))
        self.facts = {
            "indecomposable": (False, "product-idempotent", idem),
            "field": (False, "product-idempotent", None),
            "domain": (False, "product-idempotent", None),
        }
        if all(r is True for r in reduced):
            self.facts["reduced"] = (True, "product-of-reduced", None)
        elif any(r is False for r in reduced):
            self.facts["reduced"] = (False, "product-of-reduced", None)

    def _add(self, a: tuple, b: tuple) -> tuple:
        return tuple(c._add(x, y) for c, x, y in zip(self.components, a, b))

    def _mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(c._mul(x, y) for c, x, y in zip(self.components, a, b))

    def _neg(self, a: tuple) -> tuple:
        return tuple(c._neg(x) for c, x in zip(self.components, a))

    def _from_int(self, k: int) -> tuple:
        return tuple(c._from_int(k) for c in self.components)

    def normalize(self, payload: Any) -> tuple:
        if len(payload) != len(self.components):
            raise BadSpec(f"{self.spec} needs {len(self.components)} entries")
        return tuple(c.normalize(x) for c, x in zip(self.components, payload))

    def from_tuple(self, entries: tuple) -> RingValue:
        if len(entries) != len(self.components):
            raise BadSpec(f"{self.spec} needs {len(self.components)} entries")
        parts = []
        for c, e in zip(self.components, entries):
            v = e if isinstance(e, RingValue) else (c.from_tuple(e) if isinstance(e, tuple) else c.from_int(e))
            c.check(v)
            parts.append(v.payload)
        return self._wrap(tuple(parts))

    def project(self, a: RingValue, i: int) -> RingValue:
        return self.components[i]._wrap(a.payload[i])

    def _payloads(self) -> Iterable[tuple]:
        return product(*[list(c._payloads()) for c in self.components])

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        parts = [c.sample(budget) for c in self.components]
        return [self._wrap(tuple(v.payload for v in combo)) for combo in product(*parts)]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        parts = [c.coefficient_sample(budget) for c in self.components]
        return [self._wrap(tuple(v.payload for v in combo)) for combo in product(*parts)]

    def divides(self, a: RingValue, b: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        self.check(a, b)
        quotient = []
        for i, c in enumerate(self.components):
            tv = c.divides(self.project(a, i), self.project(b, i), budget)
            if tv.is_false:
                return TruthValue.false({"component": i}, "componentwise-division")
            if tv.is_unknown:
                return TruthValue.unknown(f"component {i}: {tv.note}")
            quotient.append(tv.evidence.payload)
        return TruthValue.true(self._wrap(tuple(quotient)))

    def units(self) -> list[RingValue] | None:
        parts = [c.units() for c in self.components]
        if any(p is None for p in parts):
            return None
        return [self._wrap(tuple(v.payload for v in combo)) for combo in product(*parts)]

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        for i, c in enumerate(self.components):
            ann = c.annihilator([self.project(v, i) for v in vals])
            if ann is not None:
                payload = list(self.zero_payload)
                payload[i] = ann.payload
                return self._wrap(tuple(payload))
        return None

    def is_nilpotent(self, a: RingValue) -> bool:
        return all(c.is_nilpotent(self.project(a, i)) for i, c in enumerate(self.components))

    def integer_parts(self, a: RingValue) -> tuple[int, ...] | None:
        parts: list[int] = []
        for i, c in enumerate(self.components):
            sub = c.integer_parts(self.project(a, i))
            if sub is not None:
                parts.extend(sub)
        return tuple(parts) or None

    def is_field(self) -> bool:
        return False

    def format(self, a: RingValue) -> str:
        return "(" + ",".join(c.format(self.project(a, i)) for i, c in enumerate(self.components)) + ")"


def _finite_reduced(ring: Ring) -> bool:
    return all(a.is_zero() or not (a * a).is_zero() for a in ring.elements())


class ParityRing(FiberRing):
    """k-tuples of integers that all share one parity."""

    characteristic = 0

    def __init__(self, k: int):
        if k < 2:
            raise BadSpec("parity rings need k >= 2")
        self.k = k
        self.spec = "parity2" if k == 2 else f"parity:{k}"
        self.domains = (IntDomain,) * k
        self.zero_payload = (0,) * k
        self.one_payload = (1,) * k
        self.facts = {
            "reduced": (True, "subring-of-integer-power", None),
            "indecomposable": (True, "parity-idempotents", None),
            "domain": (False, "parity-zero-divisor", None),
            "field": (False, "parity-zero-divisor", None),
        }

    def to_fiber(self, payload: tuple) -> tuple:
        return payload

    def from_fiber(self, comps: tuple) -> tuple:
        return comps

    def _add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def _mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(x * y for x, y in zip(a, b))

    def _neg(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def _from_int(self, k: int) -> tuple:
        return (k,) * self.k

    def normalize(self, payload: Any) -> tuple:
        entries = tuple(int(x) for x in payload)
        if len(entries) != self.k:
            raise BadSpec(f"{self.spec} elements have {self.k} entries")
        if len({x & 1 for x in entries}) != 1:
            raise BadSpec(f"entries {entries} do not share a parity")
        return entries

    def from_tuple(self, entries: tuple) -> RingValue:
        return self.value(entries)

    def _parity_box(self, values: range) -> list[RingValue]:
        out = []
        for bit in (0, 1):
            same = [v for v in values if v & 1 == bit]
            out.extend(self._wrap(t) for t in product(same, repeat=self.k))
        return sorted(out, key=lambda v: (sum(map(abs, v.payload)), v.payload))

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return self._parity_box(budget.int_range())

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return self._parity_box(budget.coeff_range())

    def units(self) -> list[RingValue]:
        return [self._wrap(t) for t in product((1, -1), repeat=self.k)]

    def integer_parts(self, a: RingValue) -> tuple[int, ...]:
        return a.payload

    def is_field(self) -> bool:
        return False

    def format(self, a: RingValue) -> str:
        return "(" + ",".join(str(x) for x in a.payload) + ")"


class ZtModTwoT(FiberRing):
    """Z[t]/(2t). An element is a0 + h(t) with h in t*F2[t].

    The payload is ``(a0, h)`` where ``h`` is a bitmask with bit 0 clear.
    The fiber map sends it to ``(a0, (a0 mod 2) + h)`` in Z x F2[t].
    """

    spec = "quot:2t"
    characteristic = 0
    domains = (IntDomain, F2tDomain)
    zero_payload = (0, 0)
    one_payload = (1, 0)
    facts = {
        "reduced": (True, "fiber-of-domains", None),
        "indecomposable": (True, "parity-idempotents", None),
        "domain": (False, "two-times-t", None),
        "field": (False, "two-times-t", None),
    }

    def to_fiber(self, payload: tuple) -> tuple:
        a0, h = payload
        return (a0, h | (a0 & 1))

    def from_fiber(self, comps: tuple) -> tuple:
        m, g = comps
        return (m, g & ~1)

    def _add(self, a: tuple, b: tuple) -> tuple:
        return (a[0] + b[0], a[1] ^ b[1])

    def _mul(self, a: tuple, b: tuple) -> tuple:
        (a0, h), (b0, g) = a, b
        high = clmul(h, g)
        if a0 & 1:
            high ^= g
        if b0 & 1:
            high ^= h
        return (a0 * b0, high)

    def _neg(self, a: tuple) -> tuple:
        return (-a[0], a[1])

    def _from_int(self, k: int) -> tuple:
        return (k, 0)

    def normalize(self, payload: Any) -> tuple:
        a0, h = payload
        return (int(a0), int(h) & ~1)

    @property
    def symbols(self) -> dict[str, RingValue]:
        t = self._wrap((0, 0b10))
        return {"tbar": t, "t": t}

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self._wrap((a, h)) for h in (0, 0b10, 0b100, 0b110) for a in budget.int_range()]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self._wrap((a, h)) for h in (0, 0b10) for a in budget.coeff_range()]

    def units(self) -> list[RingValue]:
        return [self.one(), self.from_int(-1)]

    def integer_parts(self, a: RingValue) -> tuple[int, ...]:
        return (a.payload[0],)

    def is_field(self) -> bool:
        return False

    def format(self, a: RingValue) -> str:
        a0, h = a.payload
        terms = [str(a0)] if a0 or not h else []
        for i in range(1, h.bit_length()):
            if h >> i & 1:
                terms.append("tbar" if i == 1 else f"tbar^{i}")
        return " + ".join(terms)


class ZtQuotient(Ring):
    """Z[t]/(2(t-1), t^2-1), every element written a + b*tbar with b in {0,1}.

    The map a + b*tbar -> (a+b, (a-b) mod 4) identifies the ring with the
    pairs (m, r) in Z x Z/4 having m = r mod 2.
    """

    spec = "quot:2(t-1),t2-1"
    characteristic = 0
    zero_payload = (0, 0)
    one_payload = (1, 0)
    facts = {
        "reduced": (False, "square-zero-witness", (-1, 1)),
        "indecomposable": (True, "parity-idempotents", None),
        "domain": (False, "square-zero-witness", (-1, 1)),
        "field": (False, "square-zero-witness", (-1, 1)),
    }

    @staticmethod
    def _norm(a: int, b: int) -> tuple:
        return (a + 2 * (b // 2), b % 2)

    def _add(self, x: tuple, y: tuple) -> tuple:
        return self._norm(x[0] + y[0], x[1] + y[1])

    def _mul(self, x: tuple, y: tuple) -> tuple:
        (a, b), (c, d) = x, y
        return self._norm(a * c + b * d, a * d + b * c)

    def _neg(self, x: tuple) -> tuple:
        return self._norm(-x[0], -x[1])

    def _from_int(self, k: int) -> tuple:
        return (k, 0)

    def normalize(self, payload: Any) -> tuple:
        a, b = payload
        return self._norm(int(a), int(b))

    @staticmethod
    def to_fiber(payload: tuple) -> tuple[int, int]:
        a, b = payload
        return (a + b, (a - b) % 4)

    @staticmethod
    def from_fiber(m: int, r: int) -> tuple:
        if (m - r) % 4 == 0:
            return (m, 0)
        return (m - 1, 1)

    @property
    def symbols(self) -> dict[str, RingValue]:
        t = self._wrap((0, 1))
        return {"tbar": t, "t": t}

    def _quotient(self, x: tuple, y: tuple) -> tuple | None:
        (m1, r1), (m2, r2) = self.to_fiber(x), self.to_fiber(y)
        residues = [q for q in range(4) if (r1 * q - r2) % 4 == 0]
        if not residues:
            return None
        if m1 == 0:
            if m2 != 0:
                return None
            return self.from_fiber(residues[0], residues[0])
        qm, rem = divmod(m2, m1)
        if rem:
            return None
        for qr in residues:
            if (qm - qr) % 2 == 0:
                return self.from_fiber(qm, qr)
        return None

    def search_quotient(self, x: RingValue, y: RingValue, margin: int = 4) -> RingValue | None:
        """Brute-force quotient search over a box of canonical forms."""
        bound = (max(abs(x.payload[0]), abs(y.payload[0])) + 1) * margin
        for a in range(-bound, bound + 1):
            for b in (0, 1):
                q = self._wrap((a, b))
                if x * q == y:
                    return q
        return None

    def units(self) -> list[RingValue]:
        return [self.value(p) for p in ((1, 0), (-1, 0), (0, 1), (0, -1))]

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        fibers = [self.to_fiber(v.payload) for v in vals]
        if all(m == 0 for m, _ in fibers):
            return self._wrap(self.from_fiber(4, 0))
        if all(r % 2 == 0 for _, r in fibers):
            return self._wrap(self.from_fiber(0, 2))
        return None

    def is_nilpotent(self, a: RingValue) -> bool:
        self.check(a)
        m, r = self.to_fiber(a.payload)
        return m == 0 and r % 2 == 0

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self._wrap((a, b)) for b in (0, 1) for a in budget.int_range()]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        return [self._wrap((a, b)) for b in (0, 1) for a in budget.coeff_range()]

    def integer_parts(self, a: RingValue) -> tuple[int, ...]:
        return (self.to_fiber(a.payload)[0],)

    def is_field(self) -> bool:
        return False

    def format(self, x: RingValue) -> str:
        a, b = x.payload
        if not b:
            return str(a)
        return "tbar" if a == 0 else f"{a} + tbar"


class DualNumbers(Ring):
    """F_p[z]/(z^2) with payload (a, b) meaning a + b*zbar."""

    is_finite = True
    zero_payload = (0, 0)
    one_payload = (1, 0)

    def __init__(self, p: int):
        if not isprime(p):
            raise BadSpec(f"fpz2 needs a prime, got {p}")
        self.p = p
        self.spec = f"fpz2:{p}"
        self.characteristic = p
        self.facts = {
            "reduced": (False, "square-zero-witness", (0, 1)),
            "indecomposable": (True, "local-ring", None),
            "local": (True, "local-ring", None),
            "field": (False, "square-zero-witness", (0, 1)),
        }

    def _add(self, x: tuple, y: tuple) -> tuple:
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def _mul(self, x: tuple, y: tuple) -> tuple:
        (a, b), (c, d) = x, y
        return (a * c % self.p, (a * d + b * c) % self.p)

    def _neg(self, x: tuple) -> tuple:
        return (-x[0] % self.p, -x[1] % self.p)

    def _from_int(self, k: int) -> tuple:
        return (k % self.p, 0)

    def normalize(self, payload: Any) -> tuple:
        a, b = payload
        return (int(a) % self.p, int(b) % self.p)

    def _payloads(self) -> Iterable[tuple]:
        return product(range(self.p), repeat=2)

    @property
    def symbols(self) -> dict[str, RingValue]:
        z = self._wrap((0, 1))
        return {"zbar": z, "z": z}

    def _quotient(self, x: tuple, y: tuple) -> tuple | None:
        (a, b), (c, d) = x, y
        p = self.p
        if a:
            inv = pow(a, -1, p)
            ix = (inv, -b * inv * inv % p)
            return self._mul(ix, y)
        if b == 0:
            return (0, 0) if y == (0, 0) else None
        if c:
            return None
        return (d * pow(b, -1, p) % p, 0)

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        self.check(a)
        if a.payload[0] == 0:
            return TruthValue.false(cite="local-ring")
        return TruthValue.true(self._wrap(self._quotient(a.payload, self.one_payload)))

    def is_nilpotent(self, a: RingValue) -> bool:
        self.check(a)
        return a.payload[0] == 0

    def is_field(self) -> bool:
        return False

    def format(self, x: RingValue) -> str:
        a, b = x.payload
        if not b:
            return str(a)
        z = "zbar" if b == 1 else f"{b}*zbar"
        return z if a == 0 else f"{a} + {z}"


class BooleanRing(Ring):
    """F2^k with payload a bitmask; bit i is coordinate i."""

    is_finite = True
    characteristic = 2
    zero_payload = 0

    def __init__(self, k: int):
        if k < 1:
            raise BadSpec("bool needs k >= 1")
        self.k = k
        self.spec = f"bool:{k}"
        self.full = (1 << k) - 1
        self.one_payload = self.full
        self.facts = {
            "reduced": (True, "boolean-ring", None),
            "indecomposable": (k == 1, "boolean-ring", None if k == 1 else 1),
        }

    def _add(self, a: int, b: int) -> int:
        return a ^ b

    def _mul(self, a: int, b: int) -> int:
        return a & b

    def _neg(self, a: int) -> int:
        return a

    def _from_int(self, k: int) -> int:
        return self.full if k & 1 else 0

    def normalize(self, payload: Any) -> int:
        return int(payload) & self.full

    def from_tuple(self, entries: tuple) -> RingValue:
        if len(entries) != self.k:
            raise BadSpec(f"{self.spec} elements have {self.k} entries")
        return self._wrap(sum((int(e) & 1) << i for i, e in enumerate(entries)))

    def _payloads(self) -> range:
        return range(1 << self.k)

    def _quotient(self, a: int, b: int) -> int | None:
        return b if b & ~a == 0 else None

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        vals = list(values)
        self.check(*vals)
        used = 0
        for v in vals:
            used |= v.payload
        rest = self.full & ~used
        return self._wrap(rest) if rest else None

    def is_nilpotent(self, a: RingValue) -> bool:
        return a.is_zero()

    def format(self, a: RingValue) -> str:
        return "(" + ",".join(str(a.payload >> i & 1) for i in range(self.k)) + ")"


class TruncPoly(Ring):
    """F2[T1..Tk]/(Ti*Tj), elements a0 + sum ai*Ti; bit 0 of the payload is a0."""

    is_finite = True
    characteristic = 2
    zero_payload = 0
    one_payload = 1

    def __init__(self, k: int):
        if k < 1:
            raise BadSpec("trunc needs k >= 1")
        self.k = k
        self.spec = f"trunc:{k}"
        self.full = (1 << (k + 1)) - 1
        self.facts = {
            "reduced": (False, "square-zero-witness", 0b10),
            "indecomposable": (True, "local-ring", None),
            "local": (True, "local-ring", None),
        }

    def _add(self, a: int, b: int) -> int:
        return a ^ b

    def _mul(self, a: int, b: int) -> int:
        high = 0
        if a & 1:
            high ^= b & ~1
        if b & 1:
            high ^= a & ~1
        return high | (a & b & 1)

    def _neg(self, a: int) -> int:
        return a

    def _from_int(self, k: int) -> int:
        return k & 1

    def normalize(self, payload: Any) -> int:
        return int(payload) & self.full

    def _payloads(self) -> range:
        return range(1 << (self.k + 1))

    @property
    def symbols(self) -> dict[str, RingValue]:
        return {f"T{i}": self._wrap(1 << i) for i in range(1, self.k + 1)}

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        self.check(a)
        if a.payload & 1 == 0:
            return TruthValue.false(cite="local-ring")
        # (1 + n)^2 = 1 for n in the square-zero maximal ideal
        return TruthValue.true(a)

    def is_nilpotent(self, a: RingValue) -> bool:
        return a.payload & 1 == 0

    def format(self, a: RingValue) -> str:
        terms = ["1"] if a.payload & 1 else []
        terms += [f"T{i}" for i in range(1, self.k + 1) if a.payload >> i & 1]
        return " + ".join(terms) if terms else "0"


# Spec mini-language

ZT_QUOTIENT_SPEC = "quot:2(t-1),t2-1"

CATALOG: list[tuple[str, str, str]] = [
    ("z", "z", "the integers"),
    ("zmod:n", "zmod:4", "residues modulo n >= 2"),
    ("prod(A,B,...)", "prod(z,z)", "finite direct products"),
    ("parity2", "parity2", "pairs (m,n) of integers with m = n mod 2"),
    ("parity:k", "parity:3", "k-tuples of integers sharing one parity"),
    ("quot:2t", "quot:2t", "Z[t]/(2t)"),
    (ZT_QUOTIENT_SPEC, ZT_QUOTIENT_SPEC, "Z[t]/(2(t-1), t^2-1), elements a + b*tbar"),
    ("fpz2:p", "fpz2:3", "dual numbers F_p[z]/(z^2), p prime"),
    ("bool:k", "bool:3", "the Boolean ring F2^k"),
    ("trunc:k", "trunc:2", "F2[T1..Tk]/(Ti*Tj)"),
]


def split_top_level(text: str) -> list[str]:
    """Split a comma list, respecting parentheses and the quotient spec."""
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        if text.startswith(ZT_QUOTIENT_SPEC, i) and depth == 0:
            i += len(ZT_QUOTIENT_SPEC)
            continue
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
        i += 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _int_param(spec: str, prefix: str) -> int:
    try:
        return int(spec[len(prefix):])
    except ValueError:
        raise BadSpec(f"bad integer parameter in {spec!r}") from None


@lru_cache(maxsize=None)
def build(spec: str) -> Ring:
    """Construct a ring from its spec string, e.g. ``"zmod:4"`` or ``"poly:parity2"``."""
    spec = spec.strip().replace(" ", "")
    if spec == "z":
        return IntegerRing()
    if spec.startswith("zmod:"):
        return IntegersMod(_int_param(spec, "zmod:"))
    if spec == "parity2":
        return ParityRing(2)
    if spec.startswith("parity:"):
        return ParityRing(_int_param(spec, "parity:"))
    if spec == "quot:2t":
        return ZtModTwoT()
    if spec == ZT_QUOTIENT_SPEC:
        return ZtQuotient()
    if spec.startswith("fpz2:"):
        return DualNumbers(_int_param(spec, "fpz2:"))
    if spec.startswith("bool:"):
        return BooleanRing(_int_param(spec, "bool:"))
    if spec.startswith("trunc:"):
        return TruncPoly(_int_param(spec, "trunc:"))
    if spec.startswith("prod(") and spec.endswith(")"):
        return ProductRing(tuple(build(s) for s in split_top_level(spec[5:-1])))
    if spec.startswith("poly:"):
        from .poly import polyring

        return polyring(build(spec[5:]))
    if spec.startswith("qplane:"):
        from .qplane import QPlane

        return QPlane.from_spec(spec)
    raise BadSpec(f"unknown ring spec {spec!r}")
