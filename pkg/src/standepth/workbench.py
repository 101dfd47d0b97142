"""Conjecture reports, the certification pipeline, and the check corpus.

The corpus has three suites: "paper" replays every worked example as an
executable check, "properties" quantifies the inequalities over seeded
random instances, and "stress" reproduces the characteristic-dependent
depth of the 6-vertex projective plane.  Reports are plain data so the
CLI can render them as text or JSON; a fixed seed reproduces a suite
bit for bit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .decompositions import (
    StanleyDecomposition,
    StanleySpace,
    lift_regular_variable,
    validate,
)
from .errors import SuiteUnknown
from .koszul import depth
from .monomials import (
    MonomialIdeal,
    QuotientModule,
    is_regular,
    quotient_by_monomial,
    variable,
    variable_regular_sequence,
)
from .randgen import (
    random_block_pair,
    random_complete_intersection,
    random_cyclic,
    random_ideal,
    random_monomial,
    random_nested_triple,
    random_quotient,
    rng_for,
)
from .sdepth import (
    DEFAULT_NODE_BUDGET,
    build_poset,
    box_invariance_check,
    partition_to_decomposition,
    sdepth_exact,
)


def conjecture_check(
    q: QuotientModule, char: int = 0, node_budget: int = DEFAULT_NODE_BUDGET
) -> dict:
    """Report sdepth, depth, and whether sdepth >= depth for this instance.

    The inequality is reported per instance, never assumed.
    """
    value, _ = sdepth_exact(q, node_budget=node_budget)
    result = depth(q, char)
    return {
        "sdepth": value,
        "depth": result.depth,
        "characteristic": char,
        "holds": value >= result.depth,
    }


@dataclass(frozen=True)
class CertifyReport:
    """Outcome of the maximal-variable-sequence certification pipeline."""

    t: int
    sequence: tuple[int, ...]
    applicable: bool
    certificate: StanleyDecomposition | None
    certified_sdepth: int | None


def cor_main_certify(
    q: QuotientModule, char: int = 0, node_budget: int = DEFAULT_NODE_BUDGET
) -> CertifyReport:
    """Certify sdepth(q) >= depth(q) through a variable regular sequence.

    Computes t = depth, finds a greedy variable sequence regular along the
    successive true quotients M/x_kM; when its length reaches t, reduces q
    along the sequence, solves the reduced module exactly, and lifts the
    certificate back up one regular variable at a time.  The lifted
    decomposition is machine-validated and has sdepth >= t.  When the
    greedy sequence is shorter than t the hypothesis of the criterion is
    not met and the report says so.
    """
    t = depth(q, char).depth
    sequence = tuple(variable_regular_sequence(q, mode="multiply"))
    if len(sequence) < t:
        return CertifyReport(t, sequence, False, None, None)
    stages = [q]
    for k in sequence:
        stages.append(quotient_by_monomial(stages[-1], variable(q.arity, k)))
    reduced = stages[-1]
    _, partition = sdepth_exact(reduced, node_budget=node_budget)
    certificate = partition_to_decomposition(partition, build_poset(reduced), reduced)
    for k, module in zip(reversed(sequence), reversed(stages[:-1])):
        certificate = lift_regular_variable(certificate, module, k)
    return CertifyReport(t, sequence, True, certificate, validate(certificate))


# ---------------------------------------------------------------------------
# corpus checks


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    detail: str
    seconds: float


def _ideal(arity, *gens) -> MonomialIdeal:
    return MonomialIdeal(arity, gens)


def _rep(arity, *indices):
    v = [0] * arity
    for k in indices:
        v[k - 1] += 1
    return tuple(v)


def _space(arity, indices, zset) -> StanleySpace:
    return StanleySpace(_rep(arity, *indices), frozenset(zset))


# Example me: M = (x,y,z), decomposition zK[x,z] + xK[x,y] + yK[y,z] + xyzK[x,y,z]
_ME_IDEAL = _ideal(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
_ME_SPACES = (
    _space(3, (3,), {1, 3}),
    _space(3, (1,), {1, 2}),
    _space(3, (2,), {2, 3}),
    _space(3, (1, 2, 3), {1, 2, 3}),
)

# Example ref3: I = (xy, y^2), J = I + (x^2) in K[x,y]
_REF3_I = _ideal(2, (1, 1), (0, 2))
_REF3_J = _REF3_I.sum(_ideal(2, (2, 0)))

# Example atpexp: I in x1..x4, J in x5..x8, and the 17-space decomposition
_ATP_I4 = _ideal(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
_ATP_J4 = _ideal(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
_ATP_COMBINED = _ideal(
    8,
    *[g + (0, 0, 0, 0) for g in _ATP_I4.gens],
    *[(0, 0, 0, 0) + g for g in _ATP_J4.gens],
)
_ATP_SPACES = tuple(
    _space(8, reps, zset)
    for reps, zset in [
        ((), {1, 2, 5}),
        ((3,), {3, 5, 6}),
        ((4,), {4, 5, 6}),
        ((6,), {1, 2, 6}),
        ((7,), {1, 2, 7}),
        ((8,), {1, 2, 8}),
        ((3, 4), {3, 4, 5}),
        ((3, 7), {3, 7, 8}),
        ((3, 8), {3, 4, 8}),
        ((4, 7), {3, 4, 7}),
        ((4, 8), {4, 7, 8}),
        ((5, 6), {1, 5, 6}),
        ((7, 8), {1, 7, 8}),
        ((2, 5, 6), {1, 2, 5, 6}),
        ((3, 4, 6), {3, 4, 5, 6}),
        ((2, 7, 8), {1, 2, 7, 8}),
        ((3, 4, 7, 8), {3, 4, 7, 8}),
    ]
)

# Example atpexp: sdepth-1 decomposition of S1/I, and its twin for S2/J
_ATP_S1_SPACES = (
    _space(4, (), {1, 2}),
    _space(4, (3,), {3}),
    _space(4, (4,), {3, 4}),
)

# 6-vertex minimal triangulation of the real projective plane
RP2_FACETS = (
    (1, 2, 5),
    (1, 2, 6),
    (1, 3, 4),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 4),
    (2, 3, 6),
    (2, 4, 5),
    (3, 5, 6),
    (4, 5, 6),
)


def rp2_stanley_reisner_ideal() -> MonomialIdeal:
    """Squarefree ideal of the 6-vertex projective plane (minimal non-faces)."""
    faces = set()
    for f in RP2_FACETS:
        for r in range(4):
            faces.update(combinations(f, r))
    nonfaces = [t for t in combinations(range(1, 7), 3) if t not in faces]
    return MonomialIdeal(6, (_rep(6, *t) for t in nonfaces))


def _check_me(budget) -> tuple[bool, str]:
    m = QuotientModule.of_ideal(_ME_IDEAL)
    v1 = sdepth_exact(m, node_budget=budget)[0]
    mx = quotient_by_monomial(m, (1, 0, 0))
    v2 = sdepth_exact(mx, node_budget=budget)[0]
    v3 = validate(StanleyDecomposition(m, _ME_SPACES))
    ok = (v1, v2, v3) == (2, 0, 2)
    return ok, f"sdepth m={v1} (want 2), sdepth m/xm={v2} (want 0), paper decomposition sdepth={v3} (want 2)"


def _check_me2(budget) -> tuple[bool, str]:
    free = QuotientModule.cyclic(MonomialIdeal.zero(3))
    residue = QuotientModule.cyclic(_ME_IDEAL)
    v1 = sdepth_exact(free, node_budget=budget)[0]
    v2 = sdepth_exact(residue, node_budget=budget)[0]
    ok = (v1, v2) == (3, 0)
    return ok, f"sdepth S={v1} (want 3), sdepth K={v2} (want 0)"


def _check_ref3(budget) -> tuple[bool, str]:
    ji = QuotientModule(_REF3_J, _REF3_I)
    vji = sdepth_exact(ji, node_budget=budget)[0]
    vi = sdepth_exact(QuotientModule.of_ideal(_REF3_I), node_budget=budget)[0]
    vj = sdepth_exact(QuotientModule.of_ideal(_REF3_J), node_budget=budget)[0]
    ok = (vji, vi, vj) == (1, 1, 1)
    return ok, f"sdepth J/I={vji}, sdepth I={vi}, sdepth J={vj} (want 1,1,1)"


def _check_atpexp(budget) -> tuple[bool, str]:
    q8 = QuotientModule.cyclic(_ATP_COMBINED)
    v17 = validate(StanleyDecomposition(q8, _ATP_SPACES))
    s1 = QuotientModule.cyclic(_ATP_I4)
    v1 = validate(StanleyDecomposition(s1, _ATP_S1_SPACES))
    e1 = sdepth_exact(s1, node_budget=budget)[0]
    e2 = sdepth_exact(QuotientModule.cyclic(_ATP_J4), node_budget=budget)[0]
    e8 = sdepth_exact(q8, node_budget=budget)[0]
    ok = v17 == 3 and v1 == 1 and e1 == 1 and e2 == 1 and e8 >= 3 and e8 > e1 + e2
    return ok, (
        f"17-space decomposition sdepth={v17} (want 3), sdepth S1/I={e1}, "
        f"sdepth S2/J={e2} (want 1,1), engine sdepth S/(IS,JS)={e8} (want >=3, strict)"
    )


def _check_d1(_budget) -> tuple[bool, str]:
    m = QuotientModule(_ideal(4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)), _ideal(4, (1, 0, 0, 1)))
    d1 = depth(m).depth
    mx = quotient_by_monomial(m, (1, 0, 0, 0))
    d2 = depth(mx).depth
    ok = (d1, d2) == (2, 0)
    return ok, f"depth M={d1} (want 2), depth M/xM={d2} (want 0)"


def _check_principal_reduction(_budget) -> tuple[bool, str]:
    bad = QuotientModule.cyclic(_ideal(4, (2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)))
    d1 = depth(bad).depth
    d2 = depth(QuotientModule.cyclic(_ideal(4, (1, 0, 0, 0)))).depth
    ok = (d1, d2) == (0, 3)
    return ok, f"depth S/(x1^2,x1x2,x1x3,x1x4)={d1} (want 0), depth S/(x1)={d2} (want 3)"


def _check_ref2(_budget) -> tuple[bool, str]:
    p1 = _ideal(4, (1, 0, 0, 0), (0, 1, 0, 0))
    p2 = _ideal(4, (0, 1, 0, 0), (0, 0, 1, 0))
    p3 = _ideal(4, (0, 0, 1, 0), (0, 0, 0, 1))
    p4 = _ideal(4, (0, 0, 0, 1), (1, 0, 0, 0))
    ideal_i = p1.intersect(p2).intersect(p3)
    ideal_j = p1.intersect(p3)
    gens_ok = ideal_i == _ideal(4, (1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1))
    di = depth(QuotientModule.cyclic(ideal_i)).depth
    dj = depth(QuotientModule.cyclic(ideal_j)).depth
    ok = gens_ok and (di, dj) == (2, 1)
    del p4
    return ok, f"I=(xz,yz,yt): {gens_ok}, depth S/I={di} (want 2), depth S/J={dj} (want 1)"


def _check_cor_main(budget) -> tuple[bool, str]:
    m = QuotientModule(
        _ideal(4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)), _ideal(4, (1, 1, 0, 0))
    )
    report = cor_main_certify(m, node_budget=budget)
    ok = (
        report.t == 2
        and report.sequence == (3, 4)
        and report.applicable
        and report.certified_sdepth is not None
        and report.certified_sdepth >= 2
    )
    return ok, (
        f"t={report.t} (want 2), sequence={list(report.sequence)} (want [3, 4]), "
        f"certified sdepth={report.certified_sdepth} (want >=2)"
    )


def paper_checks(budget=DEFAULT_NODE_BUDGET):
    return [
        ("me_sdepth_of_maximal_ideal", lambda: _check_me(budget)),
        ("me2_sdepth_of_free_and_residue", lambda: _check_me2(budget)),
        ("ref3_nested_ideal_sdepths", lambda: _check_ref3(budget)),
        ("atpexp_tensor_strictness", lambda: _check_atpexp(budget)),
        ("d1_depth_drop_by_two", lambda: _check_d1(budget)),
        ("principal_reduction_depths", lambda: _check_principal_reduction(budget)),
        ("ref2_intersection_depths", lambda: _check_ref2(budget)),
        ("cor_main_certification", lambda: _check_cor_main(budget)),
    ]


# ---------------------------------------------------------------------------
# property suite (seeded)


def _first_regular_variable(q: QuotientModule):
    for k in range(1, q.arity + 1):
        if is_regular(q, variable(q.arity, k)):
            return k
    return None


def _prop_lemma_old(seed, count, budget):
    rng = rng_for(seed, "lemma_old")
    checked = 0
    for _ in range(count):
        n = rng.randint(2, 4)
        ideal = random_ideal(rng, n)
        k = rng.randint(1, n)
        before = sdepth_exact(QuotientModule.cyclic(ideal), node_budget=budget)[0]
        after = sdepth_exact(
            QuotientModule.cyclic(ideal.sum(_ideal(n, variable(n, k)))),
            node_budget=budget,
        )[0]
        if after < before - 1:
            return False, f"sdepth S/(I,x_{k})={after} < {before}-1 for I={ideal.gens}"
        checked += 1
    return True, f"{checked} instances"


def _prop_old1_equality(seed, count, budget):
    rng = rng_for(seed, "old1")
    checked = skipped = 0
    for _ in range(count):
        n = rng.randint(2, 4)
        ideal = random_ideal(rng, n)
        k = rng.randint(1, n)
        cyclic = QuotientModule.cyclic(ideal)
        if not is_regular(cyclic, variable(n, k)):
            skipped += 1
            continue
        before = sdepth_exact(cyclic, node_budget=budget)[0]
        after = sdepth_exact(
            QuotientModule.cyclic(ideal.sum(_ideal(n, variable(n, k)))),
            node_budget=budget,
        )[0]
        if after != before - 1:
            return False, f"sdepth S/(I,x_{k})={after} != {before}-1 for I={ideal.gens}"
        checked += 1
    return True, f"{checked} regular instances ({skipped} skipped)"


def _prop_red_via_lift(seed, count, budget):
    rng = rng_for(seed, "red_lift")
    checked = skipped = 0
    for _ in range(count):
        q = random_quotient(rng) if rng.random() < 0.5 else random_cyclic(rng)
        k = _first_regular_variable(q)
        if k is None:
            skipped += 1
            continue
        reduced = quotient_by_monomial(q, variable(q.arity, k))
        v_red, partition = sdepth_exact(reduced, node_budget=budget)
        cert = partition_to_decomposition(partition, build_poset(reduced), reduced)
        lifted = lift_regular_variable(cert, q, k)
        v = sdepth_exact(q, node_budget=budget)[0]
        if v_red > v - 1:
            return False, f"sdepth M/x_{k}M={v_red} > sdepth M - 1 = {v - 1}"
        if validate(lifted) != v_red + 1:
            return False, f"lifted certificate has sdepth != {v_red + 1}"
        checked += 1
    return True, f"{checked} regular instances ({skipped} skipped)"


def _prop_prodepth(seed, count, budget):
    rng = rng_for(seed, "prodepth")
    for _ in range(count):
        n = rng.randint(2, 4)
        ideal = random_ideal(rng, n)
        k = rng.randint(1, n)
        before = depth(QuotientModule.cyclic(ideal)).depth
        after = depth(QuotientModule.cyclic(ideal.sum(_ideal(n, variable(n, k))))).depth
        if after < before - 1:
            return False, f"depth S/(I,x_{k})={after} < {before}-1 for I={ideal.gens}"
    return True, f"{count} instances"


def _prop_ref1(seed, count, budget):
    rng = rng_for(seed, "ref1")
    checked = 0
    for _ in range(count):
        n = rng.randint(2, 4)
        ideal = random_ideal(rng, n)
        u = random_monomial(rng, n)
        if ideal.contains(u):
            continue
        before = depth(QuotientModule.cyclic(ideal)).depth
        after = depth(QuotientModule.cyclic(ideal.colon(u))).depth
        if after < before:
            return False, f"depth S/(I:{u})={after} < {before} for I={ideal.gens}"
        checked += 1
    return True, f"{checked} instances"


def _prop_depth_lemma(seed, count, budget):
    rng = rng_for(seed, "depth_lemma")
    checked = 0
    for _ in range(count):
        n = rng.randint(2, 4)
        ideal = random_ideal(rng, n)
        k = rng.randint(1, n)
        if ideal.contains(variable(n, k)):
            continue  # S/(I:x_k) would be the zero module
        d_u = depth(QuotientModule.cyclic(ideal.colon(variable(n, k)))).depth
        d_m = depth(QuotientModule.cyclic(ideal)).depth
        d_n = depth(QuotientModule.cyclic(ideal.sum(_ideal(n, variable(n, k))))).depth
        if d_m < d_n and d_u != d_m:
            return False, f"clause (a) fails: depths U,M,N = {d_u},{d_m},{d_n}"
        if d_m > d_n and d_u != d_n + 1:
            return False, f"clause (b) fails: depths U,M,N = {d_u},{d_m},{d_n}"
        checked += 1
    return True, f"{checked} instances"


def _prop_lemma_exact(seed, count, budget):
    rng = rng_for(seed, "lemma_exact")
    for _ in range(count):
        inner, mid, outer = random_nested_triple(rng)
        v_mid_inner = sdepth_exact(QuotientModule(mid, inner), node_budget=budget)[0]
        v_outer_mid = sdepth_exact(QuotientModule(outer, mid), node_budget=budget)[0]
        v_outer_inner = sdepth_exact(QuotientModule(outer, inner), node_budget=budget)[0]
        if v_outer_inner < min(v_mid_inner, v_outer_mid):
            return False, (
                f"sdepth T/I={v_outer_inner} < min(J/I={v_mid_inner}, T/J={v_outer_mid})"
            )
    return True, f"{count} instances"


def _blocks_combined(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    n1, n2 = left.arity, right.arity
    return MonomialIdeal(
        n1 + n2,
        [g + (0,) * n2 for g in left.gens] + [(0,) * n1 + g for g in right.gens],
    )


def _prop_atp(seed, count, budget):
    rng = rng_for(seed, "atp")
    for _ in range(count):
        left, right = random_block_pair(rng)
        s_left = sdepth_exact(QuotientModule.cyclic(left), node_budget=budget)[0]
        s_right = sdepth_exact(QuotientModule.cyclic(right), node_budget=budget)[0]
        combined = QuotientModule.cyclic(_blocks_combined(left, right))
        s_comb = sdepth_exact(combined, node_budget=budget)[0]
        if s_left + s_right > s_comb:
            return False, f"sdepth {s_left}+{s_right} > combined {s_comb}"
        d_left = depth(QuotientModule.cyclic(left)).depth
        d_right = depth(QuotientModule.cyclic(right)).depth
        d_comb = depth(combined).depth
        if d_left + d_right != d_comb:
            return False, f"depth {d_left}+{d_right} != combined {d_comb}"
    return True, f"{count} instances"


def _prop_mcii(seed, count, budget):
    rng = rng_for(seed, "mcii")
    for _ in range(count):
        ci = random_complete_intersection(rng)
        n, m = ci.arity, len(ci.gens)
        v_cyclic = sdepth_exact(QuotientModule.cyclic(ci), node_budget=budget)[0]
        v_ideal = sdepth_exact(QuotientModule.of_ideal(ci), node_budget=budget)[0]
        if v_cyclic != n - m:
            return False, f"sdepth S/I={v_cyclic} != {n - m} for CI {ci.gens}"
        if v_ideal < n - m + 1:
            return False, f"sdepth I={v_ideal} < {n - m + 1} for CI {ci.gens}"
    return True, f"{count} instances"


def _prop_elem2(seed, count, budget):
    rng = rng_for(seed, "elem2")
    for _ in range(count):
        ideal = random_ideal(rng, rng.randint(2, 4))
        n = ideal.arity
        v = sdepth_exact(QuotientModule.cyclic(ideal), node_budget=budget)[0]
        if (v == n) != ideal.is_zero():
            return False, f"sdepth S/I={v} with I={ideal.gens} breaks the free criterion"
    return True, f"{count} instances"


def _prop_box_invariance(seed, count, budget):
    rng = rng_for(seed, "box")
    for _ in range(count):
        q = random_cyclic(rng) if rng.random() < 0.5 else random_quotient(rng)
        g = build_poset(q).g
        j = rng.randrange(len(g))
        bigger = tuple(e + 1 if i == j else e for i, e in enumerate(g))
        if not box_invariance_check(q, g, bigger, node_budget=budget):
            return False, f"sdepth changed when box grew to {bigger}"
    return True, f"{count} instances"


def property_checks(seed=0, count=200, budget=DEFAULT_NODE_BUDGET):
    return [
        ("lemma_old_inequality", lambda: _prop_lemma_old(seed, count, budget)),
        ("old1_equality_under_regularity", lambda: _prop_old1_equality(seed, count, budget)),
        ("red_inequality_via_lift", lambda: _prop_red_via_lift(seed, count, budget)),
        ("prodepth_inequality", lambda: _prop_prodepth(seed, count, budget)),
        ("ref1_colon_depth", lambda: _prop_ref1(seed, count, budget)),
        ("depth_lemma_clauses", lambda: _prop_depth_lemma(seed, count, budget)),
        ("lemma_exact_filtration", lambda: _prop_lemma_exact(seed, count, budget)),
        ("atp_tensor_bounds", lambda: _prop_atp(seed, count, budget)),
        ("mcii_complete_intersections", lambda: _prop_mcii(seed, count, budget)),
        ("elem2_free_criterion", lambda: _prop_elem2(seed, count, budget)),
        ("box_invariance", lambda: _prop_box_invariance(seed, count, budget)),
    ]


def _check_rp2(_budget) -> tuple[bool, str]:
    q = QuotientModule.cyclic(rp2_stanley_reisner_ideal())
    d0 = depth(q, 0).depth
    d2 = depth(q, 2).depth
    ok = (d0, d2) == (3, 2)
    return ok, f"depth char 0 = {d0} (want 3), char 2 = {d2} (want 2)"


def stress_checks(budget=DEFAULT_NODE_BUDGET):
    return [("rp2_characteristic_split", lambda: _check_rp2(budget))]


def corpus_run(
    suite: str,
    seed: int = 0,
    count: int = 200,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict:
    """Run one suite and return a machine-readable report."""
    if suite == "paper":
        checks = paper_checks(node_budget)
    elif suite == "properties":
        checks = property_checks(seed, count, node_budget)
    elif suite == "stress":
        checks = stress_checks(node_budget)
    else:
        raise SuiteUnknown(f"unknown suite {suite!r} (expected paper/properties/stress)")
    outcomes = []
    for name, fn in checks:
        start = time.perf_counter()
        ok, detail = fn()
        outcomes.append(CheckOutcome(name, ok, detail, time.perf_counter() - start))
    return {
        "suite": suite,
        "seed": seed,
        "ok": all(o.ok for o in outcomes),
        "checks": [
            {"name": o.name, "ok": o.ok, "detail": o.detail, "seconds": round(o.seconds, 3)}
            for o in outcomes
        ],
    }


def format_report(report: dict) -> str:
    lines = [f"suite {report['suite']} (seed {report['seed']})"]
    for check in report["checks"]:
        flag = "PASS" if check["ok"] else "FAIL"
        lines.append(f"  [{flag}] {check['name']:36s} {check['seconds']:8.3f}s  {check['detail']}")
    lines.append("all passed" if report["ok"] else "FAILURES present")
    return "\n".join(lines)
