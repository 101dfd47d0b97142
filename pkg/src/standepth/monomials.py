"""Exact arithmetic on monomials, monomial ideals, and monomial quotients.

A monomial in n variables is a tuple of n non-negative integer exponents.
A monomial ideal is kept in canonical form: a minimal generating set
(no generator divides another), sorted lexicographically, so equal ideals
compare and serialize identically.  A quotient module is a nested pair
bottom <= top of ideals and stands for the module top/bottom, whose
K-basis is the set of monomials lying in top but not in bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    ArityMismatch,
    ContainmentViolated,
    InputError,
    UnitMonomial,
    ZeroModule,
)

ExponentVector = tuple[int, ...]


def unit_monomial(arity: int) -> ExponentVector:
    return (0,) * arity


def variable(arity: int, k: int) -> ExponentVector:
    """The monomial x_k (variable indices are 1-based)."""
    if not 1 <= k <= arity:
        raise InputError(f"variable index {k} out of range 1..{arity}")
    return tuple(1 if j == k - 1 else 0 for j in range(arity))


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def sat_sub(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """Componentwise truncated subtraction (a - b)+."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(a: ExponentVector) -> frozenset[int]:
    """1-based indices of the variables dividing the monomial."""
    return frozenset(j + 1 for j, e in enumerate(a) if e > 0)


def total_degree(a: ExponentVector) -> int:
    return sum(a)


def box_points(corner: ExponentVector):
    """All exponent vectors a with 0 <= a <= corner, lexicographic order."""
    return product(*(range(c + 1) for c in corner))


def _check_vector(arity: int, a: ExponentVector) -> ExponentVector:
    a = tuple(int(e) for e in a)
    if len(a) != arity:
        raise ArityMismatch(f"expected arity {arity}, got vector of length {len(a)}")
    if any(e < 0 for e in a):
        raise InputError(f"negative exponent in {a}")
    return a


def _minimalize(gens: set[ExponentVector]) -> tuple[ExponentVector, ...]:
    kept = [
        g
        for g in gens
        if not any(h != g and divides(h, g) for h in gens)
    ]
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical (minimal, sorted) form.

    The zero ideal has no generators; the unit ideal is generated by the
    unit monomial alone.
    """

    arity: int
    gens: tuple[ExponentVector, ...]

    def __init__(self, arity: int, gens=()):
        if arity <= 0:
            raise InputError("arity must be positive")
        raw = {_check_vector(arity, g) for g in gens}
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "gens", _minimalize(raw))

    @classmethod
    def zero(cls, arity: int) -> MonomialIdeal:
        return cls(arity, ())

    @classmethod
    def unit(cls, arity: int) -> MonomialIdeal:
        return cls(arity, (unit_monomial(arity),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (unit_monomial(self.arity),)

    def _match(self, other: MonomialIdeal) -> None:
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def contains(self, a: ExponentVector) -> bool:
        a = _check_vector(self.arity, a)
        return any(divides(g, a) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        """True iff other is a subset of this ideal."""
        self._match(other)
        return all(self.contains(g) for g in other.gens)

    def sum(self, other: MonomialIdeal) -> MonomialIdeal:
        self._match(other)
        return MonomialIdeal(self.arity, self.gens + other.gens)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._match(other)
        return MonomialIdeal(
            self.arity, (lcm(g, h) for g in self.gens for h in other.gens)
        )

    def colon(self, u: ExponentVector) -> MonomialIdeal:
        """The ideal (I : u) generated by the (g - u)+ over generators g."""
        u = _check_vector(self.arity, u)
        return MonomialIdeal(self.arity, (sat_sub(g, u) for g in self.gens))

    def multiply(self, u: ExponentVector) -> MonomialIdeal:
        """The ideal u*I."""
        u = _check_vector(self.arity, u)
        return MonomialIdeal(self.arity, (mul(g, u) for g in self.gens))

    def max_exponents(self) -> ExponentVector:
        """Componentwise max of the generator exponents (zero if no gens)."""
        g = [0] * self.arity
        for gen in self.gens:
            for j, e in enumerate(gen):
                g[j] = max(g[j], e)
        return tuple(g)


def construct_ideal(arity: int, raw_gens) -> MonomialIdeal:
    """Minimalize and canonically order a raw generating set; idempotent."""
    return MonomialIdeal(arity, raw_gens)


@dataclass(frozen=True)
class QuotientModule:
    """The module top/bottom for nested monomial ideals bottom <= top."""

    top: MonomialIdeal
    bottom: MonomialIdeal

    def __init__(self, top: MonomialIdeal, bottom: MonomialIdeal):
        top._match(bottom)
        if not all(top.contains(g) for g in bottom.gens):
            raise ContainmentViolated("bottom ideal is not contained in top ideal")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @classmethod
    def cyclic(cls, ideal: MonomialIdeal) -> QuotientModule:
        """The cyclic module S/I."""
        return cls(MonomialIdeal.unit(ideal.arity), ideal)

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> QuotientModule:
        """The ideal I viewed as the module I/0."""
        return cls(ideal, MonomialIdeal.zero(ideal.arity))

    @property
    def arity(self) -> int:
        return self.top.arity

    def is_zero(self) -> bool:
        return all(self.bottom.contains(g) for g in self.top.gens)

    def member(self, a: ExponentVector) -> bool:
        """True iff the monomial is a K-basis element of top/bottom."""
        return self.top.contains(a) and not self.bottom.contains(a)

    def max_exponents(self) -> ExponentVector:
        return lcm(self.top.max_exponents(), self.bottom.max_exponents())


def quotient_member(q: QuotientModule, a: ExponentVector) -> bool:
    return q.member(a)


def quotient_by_monomial(q: QuotientModule, u: ExponentVector) -> QuotientModule:
    """The module M/uM, encoded as top/(bottom + u*top)."""
    u = _check_vector(q.arity, u)
    if u == unit_monomial(q.arity):
        raise UnitMonomial("cannot quotient by the unit monomial")
    return QuotientModule(q.top, q.bottom.sum(q.top.multiply(u)))


def adjoin_variable(q: QuotientModule, k: int) -> QuotientModule:
    """Kill every x_k-divisible monomial: top/(bottom + (x_k) * top... ).

    Returns top/(bottom + (<x_k> intersect top)).  For a cyclic module S/I
    this equals S/(I, x_k) and coincides with quotient_by_monomial; the
    surviving basis monomials are exactly the x_k-free ones.
    """
    xk = MonomialIdeal(q.arity, (variable(q.arity, k),))
    return QuotientModule(q.top, q.bottom.sum(xk.intersect(q.top)))


def is_regular(q: QuotientModule, u: ExponentVector) -> bool:
    """Decide whether multiplication by the monomial u is injective on q.

    A variable x_k is regular iff (bottom : x_k) meets top only inside
    bottom; a general monomial is regular iff every variable in its
    support is (a monomial avoids every associated prime iff each of its
    variables does).  Associated primes are never materialized.
    """
    u = _check_vector(q.arity, u)
    if u == unit_monomial(q.arity):
        raise UnitMonomial("regularity of the unit monomial is vacuous")
    for k in support(u):
        xk = variable(q.arity, k)
        offenders = q.bottom.colon(xk).intersect(q.top)
        if not q.bottom.contains_ideal(offenders):
            return False
    return True


def variable_regular_sequence(q: QuotientModule, mode: str = "adjoin") -> list[int]:
    """Greedy maximal sequence of variable indices regular on q.

    Scans indices ascending and restarts after each success; each success
    replaces q by the reduced module (adjoin_variable by default, the
    u*top quotient with mode="multiply").  Stops when no variable is
    regular or the reduced module vanishes.
    """
    if mode not in ("adjoin", "multiply"):
        raise InputError(f"unknown reduction mode {mode!r}")
    if q.is_zero():
        raise ZeroModule("regular sequences are undefined on the zero module")
    sequence: list[int] = []
    while not q.is_zero():
        for k in range(1, q.arity + 1):
            if is_regular(q, variable(q.arity, k)):
                sequence.append(k)
                if mode == "adjoin":
                    q = adjoin_variable(q, k)
                else:
                    q = quotient_by_monomial(q, variable(q.arity, k))
                break
        else:
            break
    return sequence
