"""An independent two-valued evaluator over Z/n and a seeded sentence generator."""

from __future__ import annotations

import random

from defpow.logic import (
    Add,
    And,
    Divides,
    Eq,
    Exists,
    ExplicitList,
    Forall,
    Implies,
    IntLit,
    Mul,
    Neg,
    Not,
    One,
    Or,
    Pow,
    Var,
    Zero,
)


def bterm(t, env: dict, n: int) -> int:
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Zero):
        return 0
    if isinstance(t, One):
        return 1 % n
    if isinstance(t, IntLit):
        return t.k % n
    if isinstance(t, Add):
        return (bterm(t.left, env, n) + bterm(t.right, env, n)) % n
    if isinstance(t, Mul):
        return (bterm(t.left, env, n) * bterm(t.right, env, n)) % n
    if isinstance(t, Neg):
        return (-bterm(t.arg, env, n)) % n
    if isinstance(t, Pow):
        return pow(bterm(t.base, env, n), t.exponent, n)
    raise TypeError(t)


def bformula(phi, env: dict, n: int) -> bool:
    if isinstance(phi, Eq):
        return bterm(phi.left, env, n) == bterm(phi.right, env, n)
    if isinstance(phi, Divides):
        a, b = bterm(phi.left, env, n), bterm(phi.right, env, n)
        return any((a * q - b) % n == 0 for q in range(n))
    if isinstance(phi, And):
        return bformula(phi.left, env, n) and bformula(phi.right, env, n)
    if isinstance(phi, Or):
        return bformula(phi.left, env, n) or bformula(phi.right, env, n)
    if isinstance(phi, Not):
        return not bformula(phi.arg, env, n)
    if isinstance(phi, Implies):
        return (not bformula(phi.left, env, n)) or bformula(phi.right, env, n)
    # quantifiers range over the whole ring; domains are only search hints
    if isinstance(phi, Exists):
        return any(bformula(phi.body, {**env, phi.var: v}, n) for v in range(n))
    if isinstance(phi, Forall):
        return all(bformula(phi.body, {**env, phi.var: v}, n) for v in range(n))
    raise TypeError(phi)


def random_term(rng: random.Random, scope: list[str], depth: int):
    if depth <= 0 or rng.random() < 0.4:
        choices = [Zero(), One(), IntLit(rng.randint(0, 5))] + [Var(v) for v in scope] * 2
        return rng.choice(choices)
    kind = rng.choice(["add", "mul", "neg", "pow"])
    if kind == "add":
        return Add(random_term(rng, scope, depth - 1), random_term(rng, scope, depth - 1))
    if kind == "mul":
        return Mul(random_term(rng, scope, depth - 1), random_term(rng, scope, depth - 1))
    if kind == "neg":
        return Neg(random_term(rng, scope, depth - 1))
    return Pow(random_term(rng, scope, depth - 1), rng.randint(0, 3))


def random_formula(rng: random.Random, scope: list[str], depth: int, n: int = 4):
    if depth <= 0 or (scope and rng.random() < 0.25):
        atom = rng.choice([Eq, Eq, Divides])
        return atom(random_term(rng, scope, 2), random_term(rng, scope, 2))
    kind = rng.choice(["and", "or", "not", "implies", "exists", "forall", "exists", "forall"])
    if kind in ("exists", "forall"):
        var = f"v{len(scope)}"
        if rng.random() < 0.5:
            domain = None
        else:
            values = tuple(IntLit(k) for k in sorted(rng.sample(range(n), rng.randint(1, n))))
            domain = ExplicitList(values, len(values) == n and rng.random() < 0.5)
        body = random_formula(rng, scope + [var], depth - 1, n)
        return (Exists if kind == "exists" else Forall)(var, domain, body)
    if kind == "not":
        return Not(random_formula(rng, scope, depth - 1, n))
    left, right = random_formula(rng, scope, depth - 1, n), random_formula(rng, scope, depth - 1, n)
    return {"and": And, "or": Or, "implies": Implies}[kind](left, right)


def random_sentence(rng: random.Random, depth: int = 3, n: int = 4):
    return random_formula(rng, [], depth, n)
