"""Seeded random instances for the property corpus.

Sizes follow the workbench defaults: arity at most 4, per-variable
exponents at most 3, at most 6 generators.  Streams are plain
random.Random driven, so a fixed seed reproduces the corpus bit for bit.
"""

from __future__ import annotations

import random

from .monomials import MonomialIdeal, QuotientModule

MAX_ARITY = 4
MAX_EXP = 3
MAX_GENS = 6


def rng_for(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def random_monomial(rng, arity: int, max_exp: int = MAX_EXP, nonzero: bool = True):
    while True:
        a = tuple(rng.choice(range(max_exp + 1)) for _ in range(arity))
        if not nonzero or any(a):
            return a


def random_ideal(
    rng,
    arity: int,
    max_exp: int = MAX_EXP,
    max_gens: int = MAX_GENS,
    min_gens: int = 0,
) -> MonomialIdeal:
    """A random proper monomial ideal (possibly zero if min_gens is 0)."""
    count = rng.randint(min_gens, max_gens)
    return MonomialIdeal(
        arity, (random_monomial(rng, arity, max_exp) for _ in range(count))
    )


def random_arity(rng, max_arity: int = MAX_ARITY) -> int:
    return rng.randint(2, max_arity)


def random_cyclic(rng, arity=None, max_exp: int = MAX_EXP, max_gens: int = MAX_GENS):
    """A random S/I; always nonzero since generators are non-unit."""
    arity = arity or random_arity(rng)
    return QuotientModule.cyclic(random_ideal(rng, arity, max_exp, max_gens))


def random_quotient(rng, arity=None, max_exp: int = MAX_EXP, max_gens: int = MAX_GENS):
    """A random nonzero T/B with B built inside T."""
    arity = arity or random_arity(rng)
    while True:
        bottom = random_ideal(rng, arity, max_exp, max_gens // 2)
        extra = random_ideal(rng, arity, max_exp, max_gens // 2, min_gens=1)
        top = bottom.sum(extra)
        q = QuotientModule(top, bottom)
        if not q.is_zero():
            return q


def random_nested_triple(rng, arity=None, max_exp: int = 2, max_gens: int = 3):
    """Ideals I <= J <= T with all three quotients T/I, J/I, T/J nonzero."""
    arity = arity or random_arity(rng)
    for _ in range(200):
        inner = random_ideal(rng, arity, max_exp, max_gens)
        mid = inner.sum(random_ideal(rng, arity, max_exp, max_gens, min_gens=1))
        outer = mid.sum(random_ideal(rng, arity, max_exp, max_gens, min_gens=1))
        if inner == mid or mid == outer:
            continue
        return inner, mid, outer
    raise RuntimeError("could not draw a strictly nested triple")


def random_block_pair(rng, max_block_arity: int = 2, max_exp: int = 2, max_gens: int = 3):
    """Two proper ideals in disjoint small variable blocks."""
    n1 = rng.randint(1, max_block_arity)
    n2 = rng.randint(1, max_block_arity)
    return (
        random_ideal(rng, n1, max_exp, max_gens),
        random_ideal(rng, n2, max_exp, max_gens),
    )


def random_complete_intersection(rng, arity=None, max_parts: int = 3, max_exp: int = MAX_EXP):
    """Generators with pairwise disjoint supports (a monomial regular sequence)."""
    arity = arity or random_arity(rng)
    m = rng.randint(1, min(max_parts, arity))
    variables = list(range(arity))
    rng.shuffle(variables)
    gens = []
    cut = 0
    for i in range(m):
        remaining = arity - cut - (m - i - 1)
        size = rng.randint(1, max(1, min(2, remaining)))
        block = variables[cut : cut + size]
        cut += size
        gen = [0] * arity
        for j in block:
            gen[j] = rng.randint(1, max_exp)
        gens.append(tuple(gen))
    return MonomialIdeal(arity, gens)
