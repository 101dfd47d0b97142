"""Exact depth and projective dimension via multigraded Koszul homology.

The Koszul complex of the full variable sequence splits into tiny slices,
one per multidegree: the degree-a component of the i-th term has a basis
element for every i-subset T of the variables with a - e_T still a basis
monomial of the module.  Boundary entries are 0 or the sign
(-1)^{#{t in T : t < j}}, ranks are computed exactly (fraction-free
integer elimination in characteristic 0, prime-field elimination
otherwise), and depth = n - (largest i with nonvanishing homology).

Scanning the box [0, g] with g the componentwise maximum of the generator
exponents suffices: Betti multidegrees of S/top and S/bottom are lcms of
generator subsets (Taylor complex), and the long exact sequence of
0 -> top/bottom -> S/bottom -> S/top -> 0 confines the Betti degrees of
top/bottom to the same lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, ZeroModule
from .monomials import ExponentVector, QuotientModule, _check_vector, box_points


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_char(char: int) -> int:
    char = int(char)
    if char != 0 and not _is_prime(char):
        raise InputError(f"characteristic must be 0 or a prime, got {char}")
    return char


def exact_rank(rows: list[list[int]], char: int = 0) -> int:
    """Rank of an integer matrix, exactly.

    Characteristic 0 uses fraction-free (Bareiss) elimination over the
    integers; characteristic p eliminates in the prime field.
    """
    char = _check_char(char)
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if (m[r][c] % char if char else m[r][c]) != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][c]
        for r in range(rank + 1, n_rows):
            f = m[r][c]
            if char:
                if f % char == 0:
                    continue
                factor = (f * pow(piv, -1, char)) % char
                m[r] = [(x - factor * y) % char for x, y in zip(m[r], m[rank])]
            else:
                # full Bareiss update keeps every entry an exact minor,
                # so the division by the previous pivot is exact
                m[r] = [(piv * x - f * y) // prev for x, y in zip(m[r], m[rank])]
        prev = piv if not char else 1
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class KoszulSlice:
    """One multidegree slice of the Koszul complex of a module.

    bases[i] lists the i-subsets of variable positions (0-based, sorted)
    whose basis monomial a - e_T survives in the module; boundaries[i] is
    the matrix of d_i : K_i -> K_{i-1} with entries in {-1, 0, +1}.
    boundaries[0] is the empty map out of K_0.
    """

    degree: ExponentVector
    bases: tuple[tuple[tuple[int, ...], ...], ...]
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]


def koszul_slice(q: QuotientModule, a: ExponentVector) -> KoszulSlice:
    if q.is_zero():
        raise ZeroModule("Koszul homology of the zero module is trivial")
    a = _check_vector(q.arity, a)
    n = q.arity
    bases: list[tuple[tuple[int, ...], ...]] = []
    for i in range(n + 1):
        level = []
        for T in combinations(range(n), i):
            shifted = tuple(a[j] - (1 if j in T else 0) for j in range(n))
            if all(e >= 0 for e in shifted) and q.member(shifted):
                level.append(T)
        bases.append(tuple(level))
    boundaries: list[tuple[tuple[int, ...], ...]] = [()]
    for i in range(1, n + 1):
        rows = len(bases[i - 1])
        index = {T: r for r, T in enumerate(bases[i - 1])}
        matrix = [[0] * len(bases[i]) for _ in range(rows)]
        for col, T in enumerate(bases[i]):
            for pos, j in enumerate(T):
                face = T[:pos] + T[pos + 1 :]
                row = index.get(face)
                if row is not None:
                    matrix[row][col] = -1 if pos % 2 else 1
        boundaries.append(tuple(tuple(r) for r in matrix))
    return KoszulSlice(a, tuple(bases), tuple(boundaries))


def koszul_slice_ranks(
    q: QuotientModule, a: ExponentVector, char: int = 0
) -> list[int]:
    """Homology dimensions of the degree-a Koszul slice, i = 0..n."""
    char = _check_char(char)
    sl = koszul_slice(q, a)
    n = q.arity
    boundary_ranks = [0] * (n + 2)
    for i in range(1, n + 1):
        mat = sl.boundaries[i]
        if mat and sl.bases[i]:
            boundary_ranks[i] = exact_rank([list(r) for r in mat], char)
    dims = []
    for i in range(n + 1):
        dims.append(len(sl.bases[i]) - boundary_ranks[i] - boundary_ranks[i + 1])
    return dims


@dataclass(frozen=True)
class DepthResult:
    """depth + projective_dimension = arity (Auslander-Buchsbaum)."""

    depth: int
    projective_dimension: int
    witness: tuple[ExponentVector, int]
    characteristic: int


def depth(q: QuotientModule, char: int = 0) -> DepthResult:
    """Exact depth of q over a field of the given characteristic.

    Scans every multidegree in [0, g]; the projective dimension is the
    largest homological index with nonvanishing slice homology, and the
    witness is the lexicographically least degree attaining it.
    """
    char = _check_char(char)
    if q.is_zero():
        raise ZeroModule("depth of the zero module is undefined")
    n = q.arity
    first_degree: dict[int, ExponentVector] = {}
    for a in box_points(q.max_exponents()):
        if not q.top.contains(a):
            continue  # every slice component vanishes below the top ideal
        dims = koszul_slice_ranks(q, a, char)
        for i, h in enumerate(dims):
            if h > 0 and i not in first_degree:
                first_degree[i] = a
    pd = max(first_degree)
    return DepthResult(n - pd, pd, (first_degree[pd], pd), char)
