"""Golden reproduction cases, run by ``fatlines paper-check``.

Each case returns ``(passed, detail)``; names describe the result reproduced.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .bipoly import parse_polynomial
from .exact import GF, Field
from .groebner import Ideal, ideal_equal, ideal_power
from .pointconfig import (
    P1Point,
    PointConfiguration,
    completion_schemes,
    defining_ideal,
    enumerate_partitions,
    from_partition,
    is_acm,
    completion_y_generators,
    completion_w_extras,
    completion_z_extra,
    partition_of,
    symbolic_power,
    witness_form,
)
from .powers import alpha, compare_powers, conjecture_sweep, hilbert_dim, morey_consequence_check

# The 16-point diagram whose relabelling is the Ferrers diagram of (6,5,3,1,1).
SIXTEEN_POINT_DIAGRAM = frozenset({
    (1, 2), (1, 4), (1, 6),
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6),
    (4, 4),
    (5, 4),
})

THREE_POINT_GENERATORS = ["x0*x1", "y0*y1", "x0*y0"]

THREE_POINT_CUBE = [
    "y0^3*y1^3", "x0*y0^3*y1^2", "x0*x1*y0^2*y1^2", "x0^2*y0^3*y1", "x0^2*x1*y0^2*y1",
    "x0^2*x1^2*y0*y1", "x0^3*y0^3", "x0^3*x1*y0^2", "x0^3*x1^2*y0", "x0^3*x1^3",
]

NEAR_RECTANGLES = [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)]

# (family, partition, expected bidegree of the witness form)
WITNESS_CASES = [
    ("i", (4, 3, 2, 1), (7, 4)),
    ("i", (5, 3, 2, 1), (7, 4)),
    ("ii", (3, 2, 1), (4, 4)),
    ("ii", (3, 3, 2, 1), (7, 4)),
]


def three_point_config(field: Field = GF) -> PointConfiguration:
    """(2,1) staircase whose point ideals are (x0,y0), (x0,y1), (x1,y0)."""
    return from_partition((2, 1), field, row_coords=(P1Point(0, 1), P1Point(1, 0)),
                          col_coords=(P1Point(0, 1), P1Point(1, 0)))


def near_rectangle(t: int, a: int) -> tuple[int, ...]:
    return (a,) * t + (a - 1,)


def _polys(texts, field):
    return [parse_polynomial(s, field) for s in texts]


def case_three_points(field: Field = GF):
    X = three_point_config(field)
    I = defining_ideal(X)
    target_I = Ideal(_polys(THREE_POINT_GENERATORS, field))
    target_cube = Ideal(_polys(THREE_POINT_CUBE, field))
    cube = ideal_power(I, 3)
    sym = symbolic_power(X, 3)
    checks = {
        "I(X)": ideal_equal(I, target_I),
        "I^3": ideal_equal(cube, target_cube),
        "I^(3)": ideal_equal(sym, target_cube),
        "I^3 = I^(3)": ideal_equal(cube, sym),
    }
    return all(checks.values()), ", ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in checks.items())


def case_six_points(field: Field = GF):
    X = from_partition((3, 2, 1), field)
    I = defining_ideal(X)
    cube = ideal_power(I, 3)
    sym = symbolic_power(X, 3)
    got = {
        "alpha(I)": alpha(I),
        "alpha(I^3)": alpha(cube),
        "dim (I^3)_(4,4)": hilbert_dim(cube, (4, 4)),
        "dim (I^(3))_(4,4)": hilbert_dim(sym, (4, 4)),
    }
    rep = compare_powers(X, 3)
    want = {"alpha(I)": 3, "alpha(I^3)": 9, "dim (I^3)_(4,4)": 0, "dim (I^(3))_(4,4)": 1}
    ok = got == want and rep.verdict == "NotEqual" and rep.witness_bidegree == (4, 4)
    return ok, f"{got}, verdict {rep.verdict} witness {rep.witness_bidegree}"


def case_relabel(field: Field = GF):
    X = PointConfiguration.from_diagram(SIXTEEN_POINT_DIAGRAM, field=field)
    rel = partition_of(X)
    I = defining_ideal(X)
    bidegs = sorted(g.bidegree() for g in I.generators)
    want = sorted([(5, 0), (0, 6), (1, 5), (2, 3), (3, 1)])
    ok = rel.partition.parts == (6, 5, 3, 1, 1) and bidegs == want
    return ok, f"partition ({rel.partition}), generator bidegrees {[tuple(b) for b in bidegs]}"


def case_non_acm(field: Field = GF):
    X = PointConfiguration.from_diagram({(1, 1), (2, 2)}, field=field)
    v = is_acm(X)
    return (not v.acm and v.witness == ((1, 1), (2, 2))), f"acm={v.acm}, witness {v.witness}"


def case_squares(field: Field = GF, max_points: int = 10):
    bad = []
    n = 0
    for lam in enumerate_partitions(max_points):
        X = from_partition(lam, field)
        n += 1
        if not ideal_equal(symbolic_power(X, 2), ideal_power(defining_ideal(X), 2)):
            bad.append(str(lam))
    return not bad, f"{n} partitions checked" + (f"; failures: {bad}" if bad else "")


def case_near_rectangles(field: Field = GF):
    res = {}
    for t, a in NEAR_RECTANGLES:
        lam = near_rectangle(t, a)
        res[lam] = compare_powers(from_partition(lam, field), 3).verdict
    ok = all(v == "Equal" for v in res.values())
    return ok, ", ".join(f"{lam}: {v}" for lam, v in res.items())


def case_witness_families(field: Field = GF):
    out = []
    ok = True
    for fam, lam, bd in WITNESS_CASES:
        X = from_partition(lam, field)
        w = witness_form(fam, lam, config=X)
        outside = not ideal_power(defining_ideal(X), 3).contains(w.F)
        verdict = compare_powers(X, 3).verdict
        good = w.in_symbolic_cube and outside and w.bidegree == bd and verdict == "NotEqual"
        ok &= good
        out.append(f"{lam} ({fam}): F of bidegree {w.bidegree}, {verdict}{'' if good else ' FAIL'}")
    return ok, "; ".join(out)


def case_completion(field: Field = GF):
    out = []
    ok = True
    for t, a in [(1, 2), (2, 2), (1, 3)]:
        X = from_partition(near_rectangle(t, a), field)
        C = completion_schemes(X)
        Y = Ideal(completion_y_generators(t, a, X))
        W = Ideal(Y.generators + tuple(completion_w_extras(t, a, X)))
        Z = Ideal(W.generators + (completion_z_extra(t, a, X),))
        good = C.inclusions_hold and ideal_equal(Y, C.I_Y) and ideal_equal(W, C.I_W) and ideal_equal(Z, C.I_Z)
        ok &= good
        out.append(f"(t,a)=({t},{a}) {'ok' if good else 'FAIL'}")
    return ok, ", ".join(out)


def case_sweep(field: Field = GF, max_points: int = 10):
    rep = conjecture_sweep(max_points, 3, field=field)
    viol = rep.theorem_violations
    covered = sum(1 for r in rep.rows if r.theorem)
    return not viol, (
        f"{len(rep.rows)} partitions, {covered} covered by proven cases, {len(viol)} contradicting; "
        f"{len(rep.disagreements)} disagree with the conjecture"
    )


def case_morey(field: Field = GF):
    res = {}
    for lam in [(2, 1), (3, 2), (2, 2, 1)]:
        res[lam] = morey_consequence_check(from_partition(lam, field), 4).verdicts[4]
    return all(v == "Equal" for v in res.values()), ", ".join(f"{k}: m=4 {v}" for k, v in res.items())


@dataclass
class GoldenCase:
    name: str
    anchor: str
    run: Callable


CASES = [
    GoldenCase("three-points", "monomial three-point ideal: I^3 = I^(3) with explicit generators", case_three_points),
    GoldenCase("six-points", "(3,2,1): alpha = 3, (4,4) component separates I^(3) from I^3", case_six_points),
    GoldenCase("relabel", "16-point diagram relabels to (6,5,3,1,1); closed-form generators", case_relabel),
    GoldenCase("non-acm", "two points in general position are not ACM", case_non_acm),
    GoldenCase("squares", "I^(2) = I^2 for every ACM configuration", case_squares),
    GoldenCase("near-rectangles", "I^(3) = I^3 for (a,...,a,a-1)", case_near_rectangles),
    GoldenCase("witness-families", "explicit forms in I^(3) \\ I^3 for the two staircase families", case_witness_families),
    GoldenCase("completion", "closed-form generators of I(Y), I(W), I(Z)", case_completion),
    GoldenCase("sweep", "three-distinct-parts conjecture against all proven cases", case_sweep),
    GoldenCase("equal-beyond-three", "equality at m = 3 persists at m = 4", case_morey),
]


def run_all(field: Field = GF) -> list[dict]:
    results = []
    for case in CASES:
        t0 = time.perf_counter()
        try:
            ok, detail = case.run(field)
        except Exception as e:  # report, do not abort the scorecard
            ok, detail = False, f"error: {type(e).__name__}: {e}"
        results.append({
            "case": case.name,
            "anchor": case.anchor,
            "passed": bool(ok),
            "detail": detail,
            "ms": round((time.perf_counter() - t0) * 1000, 1),
        })
    return results
