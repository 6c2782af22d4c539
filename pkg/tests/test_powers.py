import json
import random
from fractions import Fraction

import pytest

from fatlines.bipoly import NotBihomogeneous, parse_polynomial
from fatlines.exact import GF, QQ
from fatlines.groebner import Ideal, ideal_power
from fatlines.pointconfig import (
    P1Point,
    Partition,
    defining_ideal,
    enumerate_partitions,
    from_partition,
    symbolic_power,
    witness_form,
)
from fatlines.powers import (
    ComparisonReport,
    PreconditionError,
    SweepReport,
    alpha,
    compare_powers,
    conjecture_prediction,
    conjecture_sweep,
    default_table_bound,
    hilbert_dim,
    hilbert_table,
    huneke_counterexample_report,
    morey_consequence_check,
    sweep_row,
    theorem_coverage,
)

HILBERT_CORPUS = [(2, 1), (3, 2, 1), (2, 2), (4, 1, 1), (3, 3, 1)]


@pytest.mark.parametrize("lam", HILBERT_CORPUS)
def test_hilbert_methods_agree_through_eight_eight(lam):
    X = from_partition(lam)
    I = defining_ideal(X)
    for J in (I, ideal_power(I, 2), symbolic_power(X, 2), symbolic_power(X, 3)):
        for a in range(9):
            for b in range(9):
                hilbert_dim(J, (a, b), "both")  # raises on disagreement


def test_hilbert_methods_agree_under_lex():
    X = from_partition((3, 2, 1))
    for a in range(7):
        for b in range(7):
            assert hilbert_dim(symbolic_power(X, 3), (a, b), "standard", "lex") == \
                hilbert_dim(symbolic_power(X, 3), (a, b), "linear")


def test_hilbert_function_stabilises_at_degree():
    for lam in [(3, 2, 1), (4, 4, 1), (2, 1, 1)]:
        X = from_partition(lam)
        T = hilbert_table(defining_ideal(X), (8, 8))
        assert T.quotient_dim((8, 8)) == sum(lam)
        assert T.quotient_dim((0, 0)) == 1


def test_hilbert_table_format_and_bound():
    I = defining_ideal(from_partition((2, 1)))
    assert tuple(default_table_bound(I)) == (4, 4)
    text = hilbert_table(I).format()
    assert text.splitlines()[0].split()[0] == "a\\b"
    assert len(text.splitlines()) == 6


def test_hilbert_rejects_inhomogeneous():
    with pytest.raises(NotBihomogeneous):
        hilbert_dim(Ideal([parse_polynomial("x0 + y0")]), (1, 1))


def test_alpha_values():
    X = from_partition((3, 2, 1))
    I = defining_ideal(X)
    assert alpha(I) == 3
    assert alpha(ideal_power(I, 3)) == 9


@pytest.mark.parametrize("lam", [(2, 1), (3, 2, 1), (3, 3), (4, 2, 2, 1)])
def test_alpha_additive_on_powers_and_subadditive_on_symbolic(lam):
    X = from_partition(lam)
    I = defining_ideal(X)
    a = alpha(I)
    sym = {m: alpha(symbolic_power(X, m)) for m in (1, 2, 3, 4)}
    assert sym[1] == a
    for m in (2, 3):
        assert alpha(ideal_power(I, m)) == m * a
        assert sym[m] <= m * a
    for m in (1, 2):
        for n in (1, 2):
            assert sym[m + n] <= sym[m] + sym[n]


@pytest.mark.parametrize("m", [2, 3])
def test_ordinary_power_inside_symbolic_power_on_corpus(m):
    for lam in enumerate_partitions(10):
        X = from_partition(lam)
        S = symbolic_power(X, m)
        assert all(S.contains(g) for g in ideal_power(defining_ideal(X), m).generators), lam


def test_compare_witness_for_staircase():
    rep = compare_powers(from_partition((3, 2, 1)), 3, check_reverse=True)
    assert rep.verdict == "NotEqual"
    assert tuple(rep.witness_bidegree) == (4, 4)
    assert rep.evidence == "hilbert-table"
    X = from_partition((3, 2, 1))
    assert symbolic_power(X, 3).contains(rep.witness)
    assert not ideal_power(defining_ideal(X), 3).contains(rep.witness)


def test_compare_rejects_bad_m():
    with pytest.raises(ValueError):
        compare_powers(from_partition((2, 1)), 0)


def test_m_one_always_equal():
    assert compare_powers(from_partition((3, 2, 1)), 1).verdict == "Equal"


VERDICT_CORPUS = [(2, 1), (3, 2, 1), (2, 2, 1), (4, 3, 2, 1), (3, 1, 1), (4, 2, 1), (3, 3, 2, 1)]


@pytest.mark.parametrize("lam", VERDICT_CORPUS)
def test_verdict_invariant_under_relabelling(lam):
    X = from_partition(lam)
    base = compare_powers(X, 3).verdict
    rng = random.Random(sum(lam))
    rp = list(range(1, X.h + 1))
    cp = list(range(1, X.v + 1))
    rng.shuffle(rp)
    rng.shuffle(cp)
    assert compare_powers(X.permuted(rp, cp), 3).verdict == base


def _random_coords(rng, n):
    pts = set()
    while len(pts) < n:
        if rng.random() < 0.1:
            pts.add(P1Point(0, 1))
        else:
            pts.add(P1Point(1, Fraction(rng.randint(-40, 40), rng.randint(1, 9))))
    out = list(pts)
    rng.shuffle(out)
    return out


@pytest.mark.parametrize("seed", range(5))
def test_verdict_invariant_under_random_coordinates(seed):
    rng = random.Random(seed)
    for lam in VERDICT_CORPUS:
        X = from_partition(lam)
        base = compare_powers(X, 3)
        Y = from_partition(lam, GF, _random_coords(rng, X.h), _random_coords(rng, X.v))
        rep = compare_powers(Y, 3)
        assert rep.verdict == base.verdict, (lam, Y.row_coords, Y.col_coords)


def test_fields_agree_on_verdicts_up_to_eight_points():
    for lam in enumerate_partitions(8):
        a = compare_powers(from_partition(lam, GF), 3)
        b = compare_powers(from_partition(lam, QQ), 3)
        assert (a.verdict, a.witness_bidegree) == (b.verdict, b.witness_bidegree), lam


def test_comparison_report_roundtrip():
    rep = compare_powers(from_partition((3, 2, 1)), 3)
    back = ComparisonReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert back.verdict == rep.verdict
    assert back.witness == rep.witness
    assert back.witness_bidegree == rep.witness_bidegree


def test_prediction_and_coverage():
    assert conjecture_prediction((4, 3, 2, 1)) == "NotEqual"
    assert conjecture_prediction((4, 4, 2)) == "Equal"
    assert theorem_coverage((3, 3)) == ("complete-intersection", "Equal")
    assert theorem_coverage((3, 3, 2)) == ("near-rectangle", "Equal")
    assert theorem_coverage((5, 3, 2, 1)) == ("family-i", "NotEqual")
    assert theorem_coverage((3, 3, 2, 1)) == ("family-ii", "NotEqual")
    assert theorem_coverage((4, 2)) == (None, None)


def test_sweep_row_semantics():
    row = sweep_row(Partition((3, 2, 1)))
    assert row.verdict == "NotEqual" and row.agreement and row.theorem_consistent
    row2 = sweep_row(row.partition, 2)
    assert row2.prediction == "Equal" and row2.theorem == "squares"


def test_sweep_small_and_roundtrip():
    rep = conjecture_sweep(6, 3)
    assert len(rep.rows) == 29
    assert not rep.theorem_violations
    back = SweepReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert [(r.partition, r.verdict, r.witness_bidegree) for r in back.rows] == \
           [(r.partition, r.verdict, r.witness_bidegree) for r in rep.rows]
    assert "partitions" in rep.format_table().splitlines()[-1]


def test_sweep_parallel_matches_serial():
    a = conjecture_sweep(6, 3, jobs=2)
    b = conjecture_sweep(6, 3, jobs=1)
    assert [r.verdict for r in a.rows] == [r.verdict for r in b.rows]


def test_huneke_report():
    rep = huneke_counterexample_report(from_partition((3, 2, 1)))
    assert rep.counterexample and rep.big_height == 2
    assert "(4,4)" in rep.narrative()
    with pytest.raises(PreconditionError):
        huneke_counterexample_report(from_partition((2, 1)))


def test_morey_check():
    assert morey_consequence_check(from_partition((2, 1)), 5).all_equal
    with pytest.raises(PreconditionError):
        morey_consequence_check(from_partition((3, 2, 1)), 4)
    with pytest.raises(PreconditionError):
        morey_consequence_check(from_partition((2, 1)), 6)


def test_staircase_witness_is_the_unique_curve():
    X = from_partition((3, 2, 1))
    rep = compare_powers(X, 3)
    w = witness_form("ii", (3, 2, 1), config=X)
    assert rep.witness.monic() == w.F.monic()
