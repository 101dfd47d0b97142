"""Stanley spaces, Stanley decompositions, and the constructive calculus.

A Stanley space is a pair (m, Z): the monomial m times all monomials in
the variables Z.  A decomposition claims that finitely many such spaces
partition the monomial K-basis of a quotient module; `validate` decides
the claim by exhaustive enumeration over a finite truncation box and
returns min |Z| (the sdepth of the presentation) on success.

The transformations implement the constructive steps the depth/sdepth
inequalities rest on: dropping a variable (restrict_mod_variable),
re-adjoining a regular variable (lift_regular_variable), block tensor
products, and concatenation along a filtration chain.  Every
transformation validates its output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ArityMismatch,
    ChainBroken,
    InputError,
    InvalidInput,
    NotCovered,
    NotRegular,
    OutsideTarget,
    Overlap,
    ValidationError,
    ZeroModule,
)
from .monomials import (
    ExponentVector,
    MonomialIdeal,
    QuotientModule,
    adjoin_variable,
    box_points,
    divides,
    is_regular,
    sat_sub,
    support,
    variable,
)


@dataclass(frozen=True)
class StanleySpace:
    """The K-span of m * (monomials in the variables zset); zset is 1-based."""

    rep: ExponentVector
    zset: frozenset[int]

    def __init__(self, rep, zset):
        rep = tuple(int(e) for e in rep)
        if any(e < 0 for e in rep):
            raise InputError(f"negative exponent in representative {rep}")
        zset = frozenset(int(k) for k in zset)
        if any(not 1 <= k <= len(rep) for k in zset):
            raise InputError(f"zset {sorted(zset)} out of range 1..{len(rep)}")
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "zset", zset)

    @property
    def dimension(self) -> int:
        return len(self.zset)


def space_contains(sp: StanleySpace, a: ExponentVector) -> bool:
    """True iff a = rep * v for a monomial v in the zset variables."""
    if len(a) != len(sp.rep):
        raise ArityMismatch(f"arity {len(sp.rep)} vs vector of length {len(a)}")
    return divides(sp.rep, a) and support(sat_sub(a, sp.rep)) <= sp.zset


@dataclass(frozen=True)
class StanleyDecomposition:
    target: QuotientModule
    spaces: tuple[StanleySpace, ...]

    def __init__(self, target, spaces):
        spaces = tuple(spaces)
        for sp in spaces:
            if len(sp.rep) != target.arity:
                raise ArityMismatch(
                    f"space representative {sp.rep} does not match arity {target.arity}"
                )
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "spaces", spaces)

    def sdepth(self) -> int:
        """min |Z_i| of the presentation (use validate to also check it)."""
        return min(sp.dimension for sp in self.spaces)


def _validation_box(d: StanleyDecomposition) -> ExponentVector:
    # one more than any exponent named in the instance, so that membership
    # of a truncated point decides membership of every point above it
    n = d.target.arity
    bound = [0] * n
    for gens in (d.target.top.gens, d.target.bottom.gens):
        for g in gens:
            for j, e in enumerate(g):
                bound[j] = max(bound[j], e)
    for sp in d.spaces:
        for j, e in enumerate(sp.rep):
            bound[j] = max(bound[j], e)
    return tuple(b + 1 for b in bound)


def validate(d: StanleyDecomposition) -> int:
    """Decide the partition claim; return sdepth(d) or raise with a witness.

    Enumerates the box [0,B] with B_j = 1 + (largest exponent of coordinate
    j named by the target's generators or any representative); beyond B_j
    every membership test is constant in coordinate j, so the box decides
    the claim for the whole (infinite) monomial set.
    """
    if d.target.is_zero():
        raise ZeroModule("the zero module admits no Stanley decomposition")
    if not d.spaces:
        raise InvalidInput("decomposition has no spaces")
    for idx, sp in enumerate(d.spaces):
        if not d.target.member(sp.rep):
            raise OutsideTarget(sp.rep, idx)
    box = _validation_box(d)
    for a in box_points(box):
        hits = [i for i, sp in enumerate(d.spaces) if space_contains(sp, a)]
        if len(hits) > 1:
            raise Overlap(a, hits[0], hits[1])
        if d.target.member(a):
            if not hits:
                raise NotCovered(a)
        elif hits:
            raise OutsideTarget(a, hits[0])
    return d.sdepth()


def restrict_mod_variable(d: StanleyDecomposition, k: int) -> StanleyDecomposition:
    """Restrict a decomposition to the x_k-free part of the module.

    Keeps the spaces whose representative is not divisible by x_k, with k
    removed from their zset; the result is a valid decomposition of
    top/(bottom + (<x_k> intersect top)) (= S/(I,x_k) for cyclic targets)
    and its sdepth drops by at most one.
    """
    try:
        validate(d)
    except ValidationError as exc:
        raise InvalidInput(f"input decomposition is invalid: {exc}") from exc
    restricted = adjoin_variable(d.target, k)
    if restricted.is_zero():
        raise ZeroModule(f"killing x_{k} leaves the zero module")
    kept = tuple(
        StanleySpace(sp.rep, sp.zset - {k})
        for sp in d.spaces
        if sp.rep[k - 1] == 0
    )
    out = StanleyDecomposition(restricted, kept)
    validate(out)
    return out


def lift_regular_variable(
    dq: StanleyDecomposition, q: QuotientModule, k: int
) -> StanleyDecomposition:
    """Lift a decomposition of M/x_kM to one of M, for x_k regular on M.

    Re-adjoins x_k to every zset, keeping the representatives.  The input
    must be valid for the quotient of q by x_k and must not use x_k in
    any zset; the output is validated against q (it fails, with a witness,
    when the representatives do not exhaust q).  The sdepth rises by
    exactly one, which is the constructive content of
    sdepth M/x_kM <= sdepth M - 1.
    """
    if not is_regular(q, variable(q.arity, k)):
        raise NotRegular(f"x_{k} is a zero divisor on the module")
    for sp in dq.spaces:
        if k in sp.zset:
            raise InvalidInput(f"x_{k} already occurs in a zset of the input")
    try:
        validate(dq)
    except ValidationError as exc:
        raise InvalidInput(f"input decomposition is invalid: {exc}") from exc
    lifted = StanleyDecomposition(
        q, tuple(StanleySpace(sp.rep, sp.zset | {k}) for sp in dq.spaces)
    )
    validate(lifted)
    return lifted


def _block_product(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    gens = [g + h for g in left.gens for h in right.gens]
    return MonomialIdeal(left.arity + right.arity, gens)


def tensor(d1: StanleyDecomposition, d2: StanleyDecomposition) -> StanleyDecomposition:
    """Tensor two decompositions over disjoint variable blocks.

    Block 2 variables are shifted past block 1; spaces are all pairwise
    products u_i v_j K[Z_i, W_j].  For cyclic targets S1/I and S2/J the
    result is a decomposition of S/(IS, JS), and its sdepth is exactly
    sdepth(d1) + sdepth(d2).
    """
    for d in (d1, d2):
        try:
            validate(d)
        except ValidationError as exc:
            raise InvalidInput(f"input decomposition is invalid: {exc}") from exc
    n = d1.target.arity
    top = _block_product(d1.target.top, d2.target.top)
    bottom = _block_product(d1.target.bottom, d2.target.top).sum(
        _block_product(d1.target.top, d2.target.bottom)
    )
    combined = QuotientModule(top, bottom)
    spaces = tuple(
        StanleySpace(s1.rep + s2.rep, s1.zset | {k + n for k in s2.zset})
        for s1 in d1.spaces
        for s2 in d2.spaces
    )
    out = StanleyDecomposition(combined, spaces)
    validate(out)
    return out


def chain_concat(
    chain: list[MonomialIdeal], decomps: list[StanleyDecomposition]
) -> StanleyDecomposition:
    """Concatenate decompositions of successive quotients T_i/T_{i-1}.

    Given T_0 <= T_1 <= ... <= T_r and a valid decomposition of each
    T_i/T_{i-1}, their union decomposes T_r/T_0 with sdepth equal to the
    minimum of the pieces.
    """
    if len(chain) != len(decomps) + 1:
        raise InputError(
            f"chain of {len(chain)} ideals needs {len(chain) - 1} decompositions"
        )
    for i in range(1, len(chain)):
        if not chain[i].contains_ideal(chain[i - 1]):
            raise ChainBroken(i)
    for i, d in enumerate(decomps):
        expected = QuotientModule(chain[i + 1], chain[i])
        if d.target != expected:
            raise InvalidInput(f"decomposition {i} does not target link {i + 1}")
        try:
            validate(d)
        except ValidationError as exc:
            raise InvalidInput(f"decomposition {i} is invalid: {exc}") from exc
    out = StanleyDecomposition(
        QuotientModule(chain[-1], chain[0]),
        tuple(sp for d in decomps for sp in d.spaces),
    )
    validate(out)
    return out
