"""Exact Stanley depth via interval partitions of the characteristic poset.

The poset holds the basis monomials of a quotient module truncated to a
box [0, g]; partitions of it into intervals encode Stanley decompositions
(the certificate extractor makes the encoding explicit).  The value of a
partition is the minimum over intervals of rho(hi) = #{j : hi_j = g_j},
and the Stanley depth is the maximum value over all partitions.

The search iterates a threshold s downward and decides "cover the poset
by intervals of rho >= s" by depth-first exact cover: box points are bits
of one big integer (mixed-radix encoding), intervals are precomputed
masks, branching happens at the lowest uncovered bit (always a minimal
element, hence forced to be the lower corner of its interval), largest
interval first, with memoization of infeasible cover states and a global
node budget.

Only "normal" intervals (hi_j = lo_j or hi_j = g_j in every coordinate)
are branched on: any interval splits into normal subintervals with the
same rho, so the optimum is unchanged, and normal intervals are exactly
the ones the simple interval->Stanley-space map is sound for.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .decompositions import StanleyDecomposition, StanleySpace, validate
from .errors import BadBox, InputError, InvalidPartition, SearchLimitExceeded, ZeroModule
from .monomials import ExponentVector, QuotientModule, box_points, divides

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class CharacteristicPoset:
    """Basis monomials of a module inside [0, g], ordered by divisibility."""

    module: QuotientModule
    g: ExponentVector
    elems: tuple[ExponentVector, ...]

    def rho(self, b: ExponentVector) -> int:
        """Number of coordinates where b touches the box corner."""
        return sum(1 for x, y in zip(b, self.g) if x == y)


@dataclass(frozen=True)
class IntervalPartition:
    """A list of (lo, hi) interval corners; see check_partition."""

    intervals: tuple[tuple[ExponentVector, ExponentVector], ...]


def build_poset(q: QuotientModule, g: ExponentVector | None = None) -> CharacteristicPoset:
    """Collect the basis monomials of q inside [0, g].

    The default corner is the componentwise maximum of the generator
    exponents of top and bottom; a custom corner must dominate it.
    """
    if q.is_zero():
        raise ZeroModule("the zero module has an empty characteristic poset")
    default = q.max_exponents()
    if g is None:
        g = default
    else:
        g = tuple(int(e) for e in g)
        if len(g) != q.arity:
            raise BadBox(f"box corner {g} does not match arity {q.arity}")
        if not divides(default, g):
            raise BadBox(f"box corner {g} lies below the default {default}")
    elems = tuple(
        sorted((a for a in box_points(g) if q.member(a)), key=lambda a: (sum(a), a))
    )
    return CharacteristicPoset(q, g, elems)


class _Cover:
    """Bitmask geometry of one poset plus the threshold search."""

    def __init__(self, poset: CharacteristicPoset, node_budget: int):
        self.poset = poset
        self.g = poset.g
        self.n = len(poset.g)
        self.budget = node_budget
        self.nodes = 0
        self.stride = []
        acc = 1
        for gj in self.g:
            self.stride.append(acc)
            acc *= gj + 1
        self.pmask = 0
        for a in poset.elems:
            self.pmask |= 1 << self._bit(a)
        # candidates[bit of lo] = [(mask, rho, lo, hi)] over normal intervals in P
        self.candidates = {}
        for a in poset.elems:
            self.candidates[1 << self._bit(a)] = self._candidates_at(a)

    def _bit(self, a: ExponentVector) -> int:
        return sum(e * s for e, s in zip(a, self.stride))

    def _candidates_at(self, lo: ExponentVector):
        base_rho = self.poset.rho(lo)
        free = [j for j in range(self.n) if lo[j] < self.g[j]]
        out = [(1 << self._bit(lo), base_rho, lo, lo)]
        lo_mask = out[0][0]

        def grow(mask, hi, rho, start):
            for t in range(start, len(free)):
                j = free[t]
                # raising coordinate j to g_j translates the mask by stride_j steps
                ext = mask
                for v in range(1, self.g[j] - lo[j] + 1):
                    ext |= mask << (v * self.stride[j])
                if ext & ~self.pmask:
                    continue  # escapes the poset; so does every superset
                hi2 = tuple(
                    self.g[j] if i == j else h for i, h in enumerate(hi)
                )
                out.append((ext, rho + 1, lo, hi2))
                grow(ext, hi2, rho + 1, t + 1)

        grow(lo_mask, lo, base_rho, 0)
        return out

    def _upper_bound(self) -> int:
        # every divisibility-minimal element must be its interval's lower corner
        elems = self.poset.elems
        bound = self.n
        for a in elems:
            if any(b != a and divides(b, a) for b in elems):
                continue
            best = max(r for _, r, _, _ in self.candidates[1 << self._bit(a)])
            bound = min(bound, best)
        return bound

    def solve(self, s: int):
        """Find a partition with every rho >= s, or None."""
        cand = {
            bit: sorted(
                (c for c in cands if c[1] >= s),
                key=lambda c: (-c[0].bit_count(), c[3], c[2]),
            )
            for bit, cands in self.candidates.items()
        }
        memo = set()
        chosen: list[tuple[ExponentVector, ExponentVector]] = []
        pmask = self.pmask

        def dfs(covered: int) -> bool:
            if covered == pmask:
                return True
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchLimitExceeded(f"node budget {self.budget} exhausted")
            if covered in memo:
                return False
            rem = pmask & ~covered
            bit = rem & -rem
            for mask, _, lo, hi in cand.get(bit, ()):
                if mask & covered:
                    continue
                chosen.append((lo, hi))
                if dfs(covered | mask):
                    return True
                chosen.pop()
            memo.add(covered)
            return False

        if dfs(0):
            return list(chosen)
        return None


def sdepth_exact(
    q: QuotientModule,
    g: ExponentVector | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, IntervalPartition]:
    """Exact Stanley depth of q with a witness interval partition."""
    poset = build_poset(q, g)
    cover = _Cover(poset, node_budget)
    for s in range(cover._upper_bound(), 0, -1):
        found = cover.solve(s)
        if found is not None:
            return s, IntervalPartition(tuple(found))
    singletons = tuple((a, a) for a in poset.elems)
    return 0, IntervalPartition(singletons)


def check_partition(p: IntervalPartition, poset: CharacteristicPoset) -> None:
    """Raise InvalidPartition unless p partitions the poset into intervals."""
    seen: dict[ExponentVector, tuple] = {}
    for lo, hi in p.intervals:
        if len(lo) != len(poset.g) or len(hi) != len(poset.g):
            raise InvalidPartition(f"interval ({lo}, {hi}) has wrong arity")
        if not (divides(lo, hi) and divides(hi, poset.g)):
            raise InvalidPartition(f"interval ({lo}, {hi}) is not inside the box")
        for c in box_points(tuple(h - l for l, h in zip(lo, hi))):
            point = tuple(l + e for l, e in zip(lo, c))
            if not poset.module.member(point):
                raise InvalidPartition(f"interval point {point} is outside the module")
            if point in seen:
                raise InvalidPartition(f"point {point} covered twice")
            seen[point] = (lo, hi)
    for a in poset.elems:
        if a not in seen:
            raise InvalidPartition(f"poset element {a} is not covered")


def partition_value(p: IntervalPartition, poset: CharacteristicPoset) -> int:
    return min(poset.rho(hi) for _, hi in p.intervals)


def partition_to_decomposition(
    p: IntervalPartition, poset: CharacteristicPoset, q: QuotientModule
) -> StanleyDecomposition:
    """Turn an interval partition into a validated Stanley decomposition.

    A normal interval (lo, hi) maps to the space lo * K[{j : hi_j = g_j}];
    a general interval is first split into normal subintervals of the same
    rho by enumerating the coordinates that stop strictly below the corner.
    """
    if q != poset.module:
        raise InputError("partition poset belongs to a different module")
    check_partition(p, poset)
    spaces = []
    for lo, hi in p.intervals:
        zset = frozenset(j + 1 for j in range(len(hi)) if hi[j] == poset.g[j])
        ranges = [
            range(lo[j], lo[j] + 1) if (j + 1) in zset else range(lo[j], hi[j] + 1)
            for j in range(len(lo))
        ]
        for rep in product(*ranges):
            spaces.append(StanleySpace(rep, zset))
    out = StanleyDecomposition(q, tuple(spaces))
    validate(out)
    return out


def box_invariance_check(
    q: QuotientModule,
    g1: ExponentVector,
    g2: ExponentVector,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """True iff the computed Stanley depth agrees under both boxes."""
    g1 = tuple(int(e) for e in g1)
    g2 = tuple(int(e) for e in g2)
    if len(g1) != len(g2) or not divides(g1, g2):
        raise BadBox(f"box {g1} does not lie below box {g2}")
    v1, _ = sdepth_exact(q, g=g1, node_budget=node_budget)
    v2, _ = sdepth_exact(q, g=g2, node_budget=node_budget)
    return v1 == v2
