"""Ring interface, canonical ring values and the three-valued verdict type."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator


class DefpowError(Exception):
    """Base class for all library errors."""


class MixedRingError(DefpowError, TypeError):
    pass


class MixedAlgebra(MixedRingError):
    pass


class BadSpec(DefpowError, ValueError):
    pass


class BadBound(DefpowError, ValueError):
    pass


class BadSample(DefpowError, ValueError):
    pass


class BadRing(DefpowError, ValueError):
    pass


class ZeroElement(DefpowError, ValueError):
    pass


class UnboundVar(DefpowError, KeyError):
    def __str__(self) -> str:
        return f"unbound variable {self.args[0]!r}"


class Verdict(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TruthValue:
    """A three-valued answer.

    ``True``/``False`` answers carry evidence (a witness, a refuter) or the
    tag of the exact procedure that produced them. ``Unknown`` only arises
    when a bounded search ran out of candidates.
    """

    verdict: Verdict
    evidence: Any = None
    cite: str = ""
    note: str = ""

    def __post_init__(self) -> None:
        if self.verdict is not Verdict.UNKNOWN and self.evidence is None and not self.cite:
            raise ValueError("a two-valued verdict needs evidence or a citation")

    @classmethod
    def true(cls, evidence: Any = None, cite: str = "", note: str = "") -> TruthValue:
        return cls(Verdict.TRUE, evidence, cite, note)

    @classmethod
    def false(cls, evidence: Any = None, cite: str = "", note: str = "") -> TruthValue:
        return cls(Verdict.FALSE, evidence, cite, note)

    @classmethod
    def unknown(cls, note: str = "budget exhausted", evidence: Any = None) -> TruthValue:
        return cls(Verdict.UNKNOWN, evidence, "", note)

    @classmethod
    def of(cls, value: bool, evidence: Any = None, cite: str = "", note: str = "") -> TruthValue:
        return cls(Verdict.TRUE if value else Verdict.FALSE, evidence, cite, note)

    @property
    def is_true(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def is_false(self) -> bool:
        return self.verdict is Verdict.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    @property
    def known(self) -> bool:
        return self.verdict is not Verdict.UNKNOWN

    def negate(self) -> TruthValue:
        if self.is_unknown:
            return self
        flipped = Verdict.FALSE if self.is_true else Verdict.TRUE
        return TruthValue(flipped, self.evidence, self.cite, self.note)

    def __bool__(self) -> bool:
        # An Unknown must never be silently read as a boolean.
        raise TypeError("use .is_true / .is_false on a TruthValue")

    def __str__(self) -> str:
        return str(self.verdict)


@dataclass(frozen=True)
class Budget:
    """Search bounds shared by every bounded procedure."""

    deg_box: int = 3
    coeff_box: tuple[int, int] = (-3, 3)
    exp_cap: int = 8
    int_box: tuple[int, int] = (-6, 6)
    nil_slack: int = 4
    divisor_slack: int = 2
    max_candidates: int = 200_000

    def __post_init__(self) -> None:
        if self.deg_box < 0 or self.exp_cap < 1 or self.nil_slack < 0 or self.divisor_slack < 0:
            raise BadBound("budget bounds must be nonnegative (exponent cap at least 1)")
        for lo, hi in (self.coeff_box, self.int_box):
            if lo > hi:
                raise BadBound(f"empty integer range {lo}..{hi}")

    def coeff_range(self) -> range:
        return range(self.coeff_box[0], self.coeff_box[1] + 1)

    def int_range(self) -> range:
        return range(self.int_box[0], self.int_box[1] + 1)


DEFAULT_BUDGET = Budget()


class Mode(enum.Enum):
    EXACT = "exact"
    BOUNDED = "bounded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RingDescriptor:
    id: str
    characteristic: int
    is_finite: bool
    enumerable: bool
    divisibility_mode: Mode
    unit_mode: Mode

    def __post_init__(self) -> None:
        if self.is_finite and not self.enumerable:
            raise ValueError("finite rings must be enumerable")


@dataclass(frozen=True, eq=True)
class RingValue:
    """An element of a ring, held in the ring's canonical encoding."""

    ring_id: str
    payload: Any
    ring: Ring = field(compare=False, repr=False, hash=False)

    def _coerce(self, other: Any) -> RingValue:
        if isinstance(other, RingValue):
            if other.ring_id != self.ring_id:
                raise MixedRingError(f"{self.ring_id} vs {other.ring_id}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other: Any) -> RingValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> RingValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.sub(self, other)

    def __rsub__(self, other: Any) -> RingValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.sub(other, self)

    def __mul__(self, other: Any) -> RingValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.mul(self, other)

    def __rmul__(self, other: Any) -> RingValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.mul(other, self)

    def __neg__(self) -> RingValue:
        return self.ring.neg(self)

    def __pow__(self, n: int) -> RingValue:
        return self.ring.pow(self, n)

    def is_zero(self) -> bool:
        return self.payload == self.ring.zero_payload

    def is_one(self) -> bool:
        return self.payload == self.ring.one_payload

    def __str__(self) -> str:
        return self.ring.format(self)


class Ring:
    """Base class for commutative catalog rings.

    Subclasses work on hashable canonical payloads through the ``_add``,
    ``_mul``, ``_neg`` and ``_from_int`` hooks and set ``zero_payload`` and
    ``one_payload``. Finite rings implement ``_payloads`` and inherit exact
    exhaustive divisibility.
    """

    spec: str = ""
    characteristic: int = 0
    is_finite: bool = False
    commutative: bool = True
    divisibility_mode: Mode = Mode.EXACT
    unit_mode: Mode = Mode.EXACT
    zero_payload: Any = 0
    one_payload: Any = 1
    # Proof-tagged facts: name -> (value, citation tag, optional witness payload).
    facts: dict[str, tuple[bool, str, Any]] = {}

    # payload hooks
    def _add(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def _mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def _neg(self, a: Any) -> Any:
        raise NotImplementedError

    def _from_int(self, k: int) -> Any:
        # double-and-add keeps large literals cheap
        result, base, n = self.zero_payload, self.one_payload, abs(k)
        while n:
            if n & 1:
                result = self._add(result, base)
            base = self._add(base, base)
            n >>= 1
        return self._neg(result) if k < 0 else result

    def _payloads(self) -> Iterable[Any]:
        raise BadRing(f"{self.spec} is not enumerable")

    def normalize(self, payload: Any) -> Any:
        return payload

    # value construction
    def value(self, payload: Any) -> RingValue:
        return RingValue(self.spec, self.normalize(payload), self)

    def _wrap(self, payload: Any) -> RingValue:
        return RingValue(self.spec, payload, self)

    def zero(self) -> RingValue:
        return self._wrap(self.zero_payload)

    def one(self) -> RingValue:
        return self._wrap(self.one_payload)

    def from_int(self, k: int) -> RingValue:
        return self._wrap(self._from_int(k))

    def from_tuple(self, entries: tuple) -> RingValue:
        raise BadSpec(f"{self.spec} has no tuple literals")

    @property
    def symbols(self) -> dict[str, RingValue]:
        """Named generators usable in formula text."""
        return {}

    def check(self, *values: RingValue) -> None:
        for v in values:
            if not isinstance(v, RingValue) or v.ring_id != self.spec:
                got = v.ring_id if isinstance(v, RingValue) else type(v).__name__
                raise MixedRingError(f"expected an element of {self.spec}, got {got}")

    # arithmetic
    def add(self, a: RingValue, b: RingValue) -> RingValue:
        self.check(a, b)
        return self._wrap(self._add(a.payload, b.payload))

    def mul(self, a: RingValue, b: RingValue) -> RingValue:
        self.check(a, b)
        return self._wrap(self._mul(a.payload, b.payload))

    def neg(self, a: RingValue) -> RingValue:
        self.check(a)
        return self._wrap(self._neg(a.payload))

    def sub(self, a: RingValue, b: RingValue) -> RingValue:
        self.check(a, b)
        return self._wrap(self._add(a.payload, self._neg(b.payload)))

    def pow(self, a: RingValue, n: int) -> RingValue:
        self.check(a)
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.one_payload, a.payload
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return self._wrap(result)

    # descriptors and facts
    @property
    def enumerable(self) -> bool:
        return self.is_finite

    def descriptor(self) -> RingDescriptor:
        return RingDescriptor(
            id=self.spec,
            characteristic=self.characteristic,
            is_finite=self.is_finite,
            enumerable=self.enumerable,
            divisibility_mode=self.divisibility_mode,
            unit_mode=self.unit_mode,
        )

    def fact(self, name: str) -> bool | None:
        entry = self.facts.get(name)
        return None if entry is None else entry[0]

    def is_reduced_tagged(self) -> bool:
        return self.fact("reduced") is True

    def is_indecomposable_tagged(self) -> bool:
        return self.fact("indecomposable") is True

    # enumeration
    @cached_property
    def _element_list(self) -> tuple[RingValue, ...]:
        return tuple(self._wrap(p) for p in self._payloads())

    def elements(self) -> tuple[RingValue, ...]:
        if not self.is_finite:
            raise BadRing(f"{self.spec} is infinite and cannot be enumerated")
        return self._element_list

    def size(self) -> int:
        return len(self.elements())

    def sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        """Small elements: every element of a finite ring, a box otherwise."""
        if self.is_finite:
            return list(self.elements())
        return [self.from_int(k) for k in budget.int_range()]

    def coefficient_sample(self, budget: Budget = DEFAULT_BUDGET) -> list[RingValue]:
        """Coefficients used to build polynomial boxes over this ring."""
        if self.is_finite:
            return list(self.elements())
        return [self.from_int(k) for k in budget.coeff_range()]

    # divisibility and units
    def divides(self, a: RingValue, b: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        """Does ``a`` divide ``b``? A True answer carries a quotient."""
        self.check(a, b)
        if b.is_zero():
            return TruthValue.true(self.zero())
        if a.is_zero():
            return TruthValue.false(cite="zero-divides-only-zero")
        q = self._quotient(a.payload, b.payload)
        if q is None:
            return TruthValue.false(cite=f"exact-division:{self.spec}")
        if q is NotImplemented:
            return self._bounded_division(a, b, budget)
        return TruthValue.true(self._wrap(q))

    def _quotient(self, a: Any, b: Any) -> Any:
        """Some ``q`` with ``a*q == b``, ``None`` if none exists."""
        if not self.is_finite:
            return NotImplemented
        for q in self._payloads():
            if self._mul(a, q) == b:
                return q
        return None

    def _bounded_division(self, a: RingValue, b: RingValue, budget: Budget) -> TruthValue:
        for q in self.sample(budget):
            if a * q == b:
                return TruthValue.true(q)
        return TruthValue.unknown("no quotient in the sampled box")

    def is_unit(self, a: RingValue, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
        """Unit test; a True answer carries the inverse."""
        return self.divides(a, self.one(), budget)

    def inverse(self, a: RingValue) -> RingValue | None:
        tv = self.is_unit(a)
        return tv.evidence if tv.is_true else None

    def units(self) -> list[RingValue] | None:
        """The unit group when it is finite and known, else None."""
        if self.is_finite:
            return [a for a in self.elements() if self.is_unit(a).is_true]
        return None

    def annihilator(self, values: Iterable[RingValue]) -> RingValue | None:
        """A nonzero ``c`` with ``c*v == 0`` for every ``v``, or None."""
        vals = list(values)
        self.check(*vals)
        if self.is_finite:
            for c in self.elements():
                if not c.is_zero() and all((c * v).is_zero() for v in vals):
                    return c
            return None
        raise NotImplementedError(f"annihilator on {self.spec}")

    def is_regular(self, a: RingValue) -> bool:
        return self.annihilator([a]) is None

    def is_nilpotent(self, a: RingValue) -> bool:
        self.check(a)
        if a.is_zero():
            return True
        if self.is_reduced_tagged():
            return False
        if self.is_finite:
            p = a
            for _ in range(self.size()):
                p = p * a
                if p.is_zero():
                    return True
            return False
        raise NotImplementedError(f"nilpotency on {self.spec}")

    def integer_parts(self, a: RingValue) -> tuple[int, ...] | None:
        """Integer coordinates that grow with powers, when such exist."""
        return None

    def is_field(self) -> bool:
        if self.is_finite:
            return all(a.is_zero() or self.is_unit(a).is_true for a in self.elements())
        return bool(self.fact("field"))

    # text
    def format(self, a: RingValue) -> str:
        return str(a.payload)

    def parse_literal(self, text: str) -> RingValue:
        from .logic import parse_term, eval_term

        return eval_term(parse_term(text), {}, self)

    def __repr__(self) -> str:
        return f"<ring {self.spec}>"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)


def is_idempotent(r: RingValue) -> bool:
    return r * r == r


def square_is_zero(r: RingValue) -> bool:
    return (r * r).is_zero()


def _fact_verdict(ring: Ring, name: str) -> TruthValue | None:
    entry = ring.facts.get(name)
    if entry is None:
        return None
    value, cite, witness = entry
    evidence = ring._wrap(witness) if witness is not None else None
    return TruthValue.of(value, evidence, cite)


def check_reduced(ring: Ring, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Reduced means no nonzero element squares to zero."""
    if ring.is_finite:
        for a in ring.elements():
            if not a.is_zero() and square_is_zero(a):
                return TruthValue.false(a, "exhaustive-square-zero")
        return TruthValue.true(cite="exhaustive-square-zero")
    tagged = _fact_verdict(ring, "reduced")
    if tagged is not None:
        return tagged
    for a in ring.sample(budget):
        if not a.is_zero() and square_is_zero(a):
            return TruthValue.false(a, "square-zero-witness")
    return TruthValue.unknown("no square-zero element in the sample")


def check_indecomposable(ring: Ring, budget: Budget = DEFAULT_BUDGET) -> TruthValue:
    """Indecomposable means the only idempotents are 0 and 1."""
    if ring.is_finite:
        for e in ring.elements():
            if not e.is_zero() and not e.is_one() and is_idempotent(e):
                return TruthValue.false(e, "exhaustive-idempotents")
        return TruthValue.true(cite="exhaustive-idempotents")
    tagged = _fact_verdict(ring, "indecomposable")
    if tagged is not None:
        return tagged
    for e in ring.sample(budget):
        if not e.is_zero() and not e.is_one() and is_idempotent(e):
            return TruthValue.false(e, "idempotent-witness")
    return TruthValue.unknown("no nontrivial idempotent in the sample")


def product_payloads(factors: list[Iterable[Any]]) -> Iterator[tuple]:
    return itertools.product(*[list(f) for f in factors])
