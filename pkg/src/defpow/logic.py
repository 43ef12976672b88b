"""First-order ring-language formulas: AST, parser, printer and a three-valued evaluator."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Iterator, Union

from .core import (
    DEFAULT_BUDGET,
    BadRing,
    DefpowError,
    Budget,
    Ring,
    RingValue,
    TruthValue,
    UnboundVar,
)


class ParseError(DefpowError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


# Terms

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Lit:
    value: RingValue


@dataclass(frozen=True)
class IntLit:
    """The k-fold sum of 1; negative integers are written Neg(IntLit(k))."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("IntLit needs k >= 0; wrap in Neg for negatives")


@dataclass(frozen=True)
class Tup:
    """A tuple literal such as (3,1), read in the ring's tuple encoding."""

    entries: tuple


@dataclass(frozen=True)
class Add:
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul:
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg:
    arg: Term


@dataclass(frozen=True)
class Pow:
    base: Term
    exponent: int


Term = Union[Var, Zero, One, Lit, IntLit, Tup, Add, Mul, Neg, Pow]


def int_term(k: int) -> Term:
    return IntLit(k) if k >= 0 else Neg(IntLit(-k))


def sub(a: Term, b: Term) -> Term:
    return Add(a, Neg(b))


# Witness domains

@dataclass(frozen=True)
class AllElements:
    """Every element of a finite ring."""


@dataclass(frozen=True)
class PolyBox:
    """Polynomials of bounded degree with coefficients from a sample.

    ``coeffs`` holds literal entries (ints or tuples); None means the
    budget's coefficient box.
    """

    max_degree: int
    coeffs: tuple | None = None
    complete: bool = False


@dataclass(frozen=True)
class ExplicitList:
    values: tuple
    complete: bool = False


@dataclass(frozen=True)
class Named:
    """A named set supplied by the evaluation context, e.g. a sample of U."""

    name: str


Domain = Union[AllElements, PolyBox, ExplicitList, Named, None]


# Formulas

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Divides:
    left: Term
    right: Term


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Not:
    arg: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    domain: Domain
    body: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    domain: Domain
    body: Formula


@dataclass(frozen=True)
class OraclePred:
    tag: str
    terms: tuple


Formula = Union[Eq, Divides, And, Or, Not, Implies, Exists, Forall, OraclePred]


def conj(*parts: Formula) -> Formula:
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


# Free variables and substitution

def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, (Add, Mul)):
        return term_vars(t.left) | term_vars(t.right)
    if isinstance(t, Neg):
        return term_vars(t.arg)
    if isinstance(t, Pow):
        return term_vars(t.base)
    return set()


def _domain_vars(d: Domain) -> set[str]:
    if isinstance(d, ExplicitList):
        out: set[str] = set()
        for v in d.values:
            if not isinstance(v, RingValue):
                out |= term_vars(v)
        return out
    return set()


def free_vars(phi: Formula) -> set[str]:
    if isinstance(phi, (Eq, Divides)):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, (And, Or, Implies)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, Not):
        return free_vars(phi.arg)
    if isinstance(phi, (Exists, Forall)):
        return (free_vars(phi.body) - {phi.var}) | _domain_vars(phi.domain)
    if isinstance(phi, OraclePred):
        out: set[str] = set()
        for t in phi.terms:
            out |= term_vars(t)
        return out
    raise TypeError(f"not a formula: {phi!r}")


def subst_term(t: Term, mapping: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Add):
        return Add(subst_term(t.left, mapping), subst_term(t.right, mapping))
    if isinstance(t, Mul):
        return Mul(subst_term(t.left, mapping), subst_term(t.right, mapping))
    if isinstance(t, Neg):
        return Neg(subst_term(t.arg, mapping))
    if isinstance(t, Pow):
        return Pow(subst_term(t.base, mapping), t.exponent)
    return t


def _fresh(name: str, taken: set[str]) -> str:
    i = 1
    while f"{name}{i}" in taken:
        i += 1
    return f"{name}{i}"


def substitute(phi: Formula, mapping: dict[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    if isinstance(phi, Eq):
        return Eq(subst_term(phi.left, mapping), subst_term(phi.right, mapping))
    if isinstance(phi, Divides):
        return Divides(subst_term(phi.left, mapping), subst_term(phi.right, mapping))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(substitute(phi.left, mapping), substitute(phi.right, mapping))
    if isinstance(phi, Not):
        return Not(substitute(phi.arg, mapping))
    if isinstance(phi, OraclePred):
        return OraclePred(phi.tag, tuple(subst_term(t, mapping) for t in phi.terms))
    if isinstance(phi, (Exists, Forall)):
        domain = phi.domain
        if isinstance(domain, ExplicitList):
            domain = replace(domain, values=tuple(
                v if isinstance(v, RingValue) else subst_term(v, mapping) for v in domain.values))
        inner = {k: v for k, v in mapping.items() if k != phi.var}
        incoming: set[str] = set()
        for k, v in inner.items():
            if k in free_vars(phi.body):
                incoming |= term_vars(v)
        var, body = phi.var, phi.body
        if var in incoming:
            new = _fresh(var, incoming | free_vars(body) | set(inner))
            body = substitute(body, {var: Var(new)})
            var = new
        return type(phi)(var, domain, substitute(body, inner))
    raise TypeError(f"not a formula: {phi!r}")


# Tokenizer and parser

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>->|&&|\|\||!=|<=|\.\.|[=|!+\-*^(),.;{}]))"
)

KEYWORDS = {"exists", "forall", "in"}


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos, text)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.tok.pos, self.text)

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind != "end":
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def name(self) -> str:
        if self.tok.kind != "name" or self.tok.text in KEYWORDS:
            raise self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        n = self.tok.text
        self.i += 1
        return n

    def done(self) -> None:
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    # formulas
    def formula(self) -> Formula:
        left = self.disj()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.accept("||"):
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.accept("&&"):
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        if self.tok.text in ("exists", "forall"):
            kind = self.tok.text
            self.i += 1
            var = self.name()
            domain = self.domain() if self.accept("in") else None
            self.expect(".")
            body = self.formula()
            return (Exists if kind == "exists" else Forall)(var, domain, body)
        return self.atom()

    def atom(self) -> Formula:
        if self.tok.kind == "name" and self.peek().text == "(" and self.tok.text not in KEYWORDS:
            tag = self.name()
            self.expect("(")
            args = [] if self.tok.text == ")" else [self.term()]
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
            return OraclePred(tag, tuple(args))
        start = self.i
        if self.tok.text == "(":
            try:
                return self.relation()
            except ParseError:
                self.i = start
            self.expect("(")
            inner = self.formula()
            self.expect(")")
            return inner
        return self.relation()

    def relation(self) -> Formula:
        left = self.term()
        if self.accept("="):
            return Eq(left, self.term())
        if self.accept("!="):
            return Not(Eq(left, self.term()))
        if self.tok.text == "|":
            self.i += 1
            return Divides(left, self.term())
        raise self.error("expected '=', '!=' or '|'")

    # domains
    def domain(self) -> Domain:
        name = self.name()
        if name == "all":
            return AllElements()
        if name == "poly" and self.tok.text == "(":
            self.expect("(")
            if self.name() != "deg":
                raise self.error("expected 'deg'")
            self.expect("<=")
            degree = self.integer()
            coeffs = None
            complete = False
            while self.accept(";"):
                key = self.name()
                if key == "coeffs":
                    self.expect("=")
                    coeffs = self.literal_set()
                elif key == "complete":
                    complete = True
                else:
                    raise self.error(f"unknown box option {key!r}")
            self.expect(")")
            return PolyBox(degree, coeffs, complete)
        if name == "list" and self.tok.text == "(":
            self.expect("(")
            values = [] if self.tok.text in (")", ";") else [self.term()]
            while self.accept(","):
                values.append(self.term())
            complete = False
            if self.accept(";"):
                if self.name() != "complete":
                    raise self.error("expected 'complete'")
                complete = True
            self.expect(")")
            return ExplicitList(tuple(values), complete)
        return Named(name)

    def integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        if self.tok.kind != "num":
            raise self.error("expected an integer")
        k = int(self.tok.text)
        self.i += 1
        return sign * k

    def literal(self) -> Any:
        if self.accept("("):
            entries = [self.literal()]
            while self.accept(","):
                entries.append(self.literal())
            self.expect(")")
            return tuple(entries)
        return self.integer()

    def literal_set(self) -> tuple:
        self.expect("{")
        first = self.literal()
        if isinstance(first, int) and self.accept(".."):
            last = self.integer()
            self.expect("}")
            return tuple(range(first, last + 1))
        items = [first]
        while self.accept(","):
            items.append(self.literal())
        self.expect("}")
        return tuple(items)

    # terms
    def term(self) -> Term:
        left = self.product()
        while True:
            if self.accept("+"):
                left = Add(left, self.product())
            elif self.accept("-"):
                left = Add(left, Neg(self.product()))
            else:
                return left

    def product(self) -> Term:
        left = self.unary_term()
        while self.accept("*"):
            left = Mul(left, self.unary_term())
        return left

    def unary_term(self) -> Term:
        if self.accept("-"):
            return Neg(self.unary_term())
        return self.power()

    def power(self) -> Term:
        base = self.primary()
        if self.accept("^"):
            if self.tok.kind != "num":
                raise self.error("expected an exponent")
            n = int(self.tok.text)
            self.i += 1
            return Pow(base, n)
        return base

    def primary(self) -> Term:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return IntLit(int(tok.text))
        if tok.kind == "name" and tok.text not in KEYWORDS:
            self.i += 1
            return Var(tok.text)
        if self.accept("("):
            inner = self.term()
            if self.tok.text == ",":
                entries = [_tuple_entry(inner, self)]
                while self.accept(","):
                    entries.append(_tuple_entry(self.term(), self))
                self.expect(")")
                return Tup(tuple(entries))
            self.expect(")")
            return inner
        raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")


def _tuple_entry(t: Term, parser: _Parser) -> Any:
    if isinstance(t, IntLit):
        return t.k
    if isinstance(t, Neg) and isinstance(t.arg, IntLit):
        return -t.arg.k
    if isinstance(t, Tup):
        return t.entries
    raise parser.error("tuple entries must be integer literals")


def parse(text: str) -> Formula:
    p = _Parser(text)
    phi = p.formula()
    p.done()
    return phi


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


# Printer

_TERM_PREC = {Add: 1, Mul: 2, Neg: 3, Pow: 4}


def _tprec(t: Term) -> int:
    return _TERM_PREC.get(type(t), 5)


def _paren(s: str, wrap: bool) -> str:
    return f"({s})" if wrap else s


def _literal_text(e: Any) -> str:
    if isinstance(e, tuple):
        return "(" + ",".join(_literal_text(x) for x in e) + ")"
    return str(e)


def pretty_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, IntLit):
        return str(t.k)
    if isinstance(t, Tup):
        return _literal_text(t.entries)
    if isinstance(t, Lit):
        return f"({t.value})"
    if isinstance(t, Add):
        left = pretty_term(t.left)
        if isinstance(t.right, Neg):
            right = pretty_term(t.right.arg)
            return f"{left} - {_paren(right, _tprec(t.right.arg) <= 1)}"
        return f"{left} + {_paren(pretty_term(t.right), _tprec(t.right) <= 1)}"
    if isinstance(t, Mul):
        left = _paren(pretty_term(t.left), _tprec(t.left) < 2)
        right = _paren(pretty_term(t.right), _tprec(t.right) <= 2)
        return f"{left}*{right}"
    if isinstance(t, Neg):
        return "-" + _paren(pretty_term(t.arg), _tprec(t.arg) < 3)
    if isinstance(t, Pow):
        return f"{_paren(pretty_term(t.base), _tprec(t.base) < 5)}^{t.exponent}"
    raise TypeError(f"not a term: {t!r}")


def pretty_domain(d: Domain) -> str:
    if isinstance(d, AllElements):
        return "all"
    if isinstance(d, Named):
        return d.name
    if isinstance(d, PolyBox):
        out = f"poly(deg<={d.max_degree}"
        if d.coeffs is not None:
            out += "; coeffs={" + ", ".join(_literal_text(c) for c in d.coeffs) + "}"
        if d.complete:
            out += "; complete"
        return out + ")"
    if isinstance(d, ExplicitList):
        items = ", ".join(pretty_term(Lit(v)) if isinstance(v, RingValue) else pretty_term(v) for v in d.values)
        return f"list({items}{'; complete' if d.complete else ''})"
    raise TypeError(f"not a domain: {d!r}")


_FORM_PREC = {Implies: 1, Or: 2, And: 3}


def _fprec(phi: Formula) -> int:
    if isinstance(phi, (Exists, Forall)):
        return 0
    return _FORM_PREC.get(type(phi), 4)


def pretty(phi: Formula) -> str:
    if isinstance(phi, Eq):
        return f"{pretty_term(phi.left)} = {pretty_term(phi.right)}"
    if isinstance(phi, Divides):
        return f"{pretty_term(phi.left)} | {pretty_term(phi.right)}"
    if isinstance(phi, Not):
        return "!" + _paren(pretty(phi.arg), _fprec(phi.arg) < 4)
    if isinstance(phi, OraclePred):
        return f"{phi.tag}(" + ", ".join(pretty_term(t) for t in phi.terms) + ")"
    if isinstance(phi, (Exists, Forall)):
        kind = "exists" if isinstance(phi, Exists) else "forall"
        dom = "" if phi.domain is None else f" in {pretty_domain(phi.domain)}"
        return f"{kind} {phi.var}{dom} . {pretty(phi.body)}"
    if isinstance(phi, Implies):
        left = _paren(pretty(phi.left), _fprec(phi.left) <= 1)
        right = _paren(pretty(phi.right), _fprec(phi.right) < 1)
        return f"{left} -> {right}"
    op = " || " if isinstance(phi, Or) else " && "
    prec = _fprec(phi)
    left = _paren(pretty(phi.left), _fprec(phi.left) < prec)
    right = _paren(pretty(phi.right), _fprec(phi.right) <= prec)
    return left + op + right


# Evaluation

Oracle = Callable[["EvalContext", tuple], TruthValue]


@dataclass
class EvalContext:
    """Everything evaluation needs besides the formula and the assignment."""

    ring: Ring
    budget: Budget = DEFAULT_BUDGET
    default_domain: Domain = None
    named_domains: dict[str, Domain] = field(default_factory=dict)
    oracles: dict[str, Oracle] | None = None

    def __post_init__(self) -> None:
        if self.oracles is None:
            from .formulas import ORACLES

            self.oracles = ORACLES


def eval_term(t: Term, env: dict[str, RingValue], ring: Ring) -> RingValue:
    if isinstance(t, Var):
        if t.name in env:
            return env[t.name]
        sym = ring.symbols.get(t.name)
        if sym is None:
            raise UnboundVar(t.name)
        return sym
    if isinstance(t, IntLit):
        return ring.from_int(t.k)
    if isinstance(t, Add):
        return ring.add(eval_term(t.left, env, ring), eval_term(t.right, env, ring))
    if isinstance(t, Mul):
        return ring.mul(eval_term(t.left, env, ring), eval_term(t.right, env, ring))
    if isinstance(t, Neg):
        return ring.neg(eval_term(t.arg, env, ring))
    if isinstance(t, Pow):
        return ring.pow(eval_term(t.base, env, ring), t.exponent)
    if isinstance(t, Lit):
        ring.check(t.value)
        return t.value
    if isinstance(t, Zero):
        return ring.zero()
    if isinstance(t, One):
        return ring.one()
    if isinstance(t, Tup):
        return ring.from_tuple(t.entries)
    raise TypeError(f"not a term: {t!r}")


def domain_values(d: Domain, env: dict[str, RingValue], ctx: EvalContext) -> tuple[Iterator[RingValue], bool]:
    """The candidates of a witness domain and whether they are exhaustive."""
    ring = ctx.ring
    if d is None:
        if ctx.default_domain is not None:
            return domain_values(ctx.default_domain, env, ctx)
        if ring.is_finite:
            return iter(ring.elements()), True
        from .poly import PolyRing

        if isinstance(ring, PolyRing):
            return domain_values(PolyBox(ctx.budget.deg_box), env, ctx)
        return iter(ring.sample(ctx.budget)), False
    if isinstance(d, AllElements):
        if not ring.is_finite:
            raise BadRing(f"'all' needs a finite ring, {ring.spec} is infinite")
        return iter(ring.elements()), True
    if isinstance(d, PolyBox):
        from .poly import PolyRing, poly_box

        if not isinstance(ring, PolyRing):
            raise BadRing(f"poly(...) domains need a polynomial ring, not {ring.spec}")
        base = ring.base
        if d.coeffs is None:
            coeffs = base.coefficient_sample(ctx.budget)
        else:
            coeffs = [base.from_tuple(c) if isinstance(c, tuple) else base.from_int(c) for c in d.coeffs]
        return poly_box(ring, d.max_degree, coeffs), d.complete
    if isinstance(d, ExplicitList):
        values = [v if isinstance(v, RingValue) else eval_term(v, env, ring) for v in d.values]
        return iter(values), d.complete
    if isinstance(d, Named):
        if d.name not in ctx.named_domains:
            raise UnboundVar(d.name)
        return domain_values(ctx.named_domains[d.name], env, ctx)
    raise TypeError(f"not a domain: {d!r}")


def _witness(evidence: Any) -> dict:
    return dict(evidence) if isinstance(evidence, dict) else {}


def _eval(phi: Formula, env: dict[str, RingValue], ctx: EvalContext) -> TruthValue:
    ring = ctx.ring
    if isinstance(phi, Eq):
        a, b = eval_term(phi.left, env, ring), eval_term(phi.right, env, ring)
        return TruthValue.of(a == b, cite="direct-computation")
    if isinstance(phi, Divides):
        a, b = eval_term(phi.left, env, ring), eval_term(phi.right, env, ring)
        tv = ring.divides(a, b, ctx.budget)
        return TruthValue(tv.verdict, None, tv.cite or "quotient-witness", tv.note) if tv.known else tv
    if isinstance(phi, Not):
        return _eval(phi.arg, env, ctx).negate()
    if isinstance(phi, And):
        left = _eval(phi.left, env, ctx)
        if left.is_false:
            return left
        right = _eval(phi.right, env, ctx)
        if right.is_false:
            return right
        if left.is_true and right.is_true:
            return TruthValue.true({**_witness(left.evidence), **_witness(right.evidence)}, "conjunction")
        return TruthValue.unknown(left.note if left.is_unknown else right.note)
    if isinstance(phi, (Or, Implies)):
        left = _eval(phi.left, env, ctx)
        if isinstance(phi, Implies):
            left = left.negate()
        if left.is_true:
            return left
        right = _eval(phi.right, env, ctx)
        if right.is_true:
            return right
        if left.is_false and right.is_false:
            return TruthValue.false({**_witness(left.evidence), **_witness(right.evidence)}, "disjunction")
        return TruthValue.unknown(left.note if left.is_unknown else right.note)
    if isinstance(phi, (Exists, Forall)):
        looking_for_true = isinstance(phi, Exists)
        values, complete = domain_values(phi.domain, env, ctx)
        unknown = None
        for count, v in enumerate(values):
            if count >= ctx.budget.max_candidates:
                complete = False
                break
            inner = _eval(phi.body, {**env, phi.var: v}, ctx)
            if inner.is_true == looking_for_true and inner.known:
                return TruthValue(inner.verdict, {phi.var: v, **_witness(inner.evidence)},
                                  "witness" if looking_for_true else "counterexample")
            if inner.is_unknown and unknown is None:
                unknown = inner
        if unknown is not None:
            return TruthValue.unknown(unknown.note)
        if not complete:
            return TruthValue.unknown(f"domain for {phi.var} is incomplete")
        verdict = TruthValue.false if looking_for_true else TruthValue.true
        return verdict(cite="exhausted-complete-domain")
    if isinstance(phi, OraclePred):
        oracle = ctx.oracles.get(phi.tag)
        if oracle is None:
            raise UnboundVar(phi.tag)
        args = tuple(eval_term(t, env, ring) for t in phi.terms)
        return oracle(ctx, args)
    raise TypeError(f"not a formula: {phi!r}")


def evaluate(phi: Formula, ring: Ring, env: dict[str, RingValue] | None = None,
             budget: Budget = DEFAULT_BUDGET, ctx: EvalContext | None = None, **options: Any) -> TruthValue:
    """Kleene-style evaluation of a formula over a ring.

    Quantifiers return True or False only on a witness, a counterexample or
    an exhausted complete domain; everything else is Unknown.
    """
    if ctx is None:
        ctx = EvalContext(ring, budget, **options)
    env = dict(env or {})
    missing = {v for v in free_vars(phi) if v not in env and v not in ring.symbols}
    if missing:
        raise UnboundVar(sorted(missing)[0])
    return _eval(phi, env, ctx)
