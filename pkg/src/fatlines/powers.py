"""Bigraded Hilbert functions and the I^(m) versus I^m comparison."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .bipoly import DEGREVLEX, Bidegree, NotBihomogeneous, Polynomial, TermOrder, divides, get_order, monomials_of_bidegree
from .exact import GF, DenseMatrix, Field, rank
from .groebner import Ideal, ZeroIdeal, ideal_power
from .pointconfig import (
    Partition,
    PointConfiguration,
    as_partition,
    completion_shape,
    defining_ideal,
    enumerate_partitions,
    family_i_parameter,
    family_ii_parameters,
    from_partition,
    partition_of,
    symbolic_power,
)


class PreconditionError(ValueError):
    pass


class InconsistentHilbert(RuntimeError):
    pass


# -- Hilbert functions ---------------------------------------------------------


def _hilbert_linear(I: Ideal, d) -> int:
    a, b = d
    basis = [m.packed for m in monomials_of_bidegree(d)]
    col = {m: k for k, m in enumerate(basis)}
    rows = []
    for g in I.generators:
        e = g.bidegree()
        if e.a > a or e.b > b:
            continue
        for mu in monomials_of_bidegree((a - e.a, b - e.b)):
            q = mu.packed
            row = [0] * len(basis)
            for m, c in g.terms.items():
                row[col[m + q]] = c
            rows.append(row)
    if not rows:
        return 0
    return rank(DenseMatrix(rows, I.field, ncols=len(basis)))


def _hilbert_standard(I: Ideal, d, order: TermOrder) -> int:
    lms = [g.lm(order) for g in I.groebner(order)]
    return sum(1 for mu in monomials_of_bidegree(d) if any(divides(l, mu.packed) for l in lms))


def hilbert_dim(I: Ideal, d, method: str = "both", order: TermOrder | str = DEGREVLEX) -> int:
    """dim_k I_(a,b).

    ``linear`` spans monomial multiples of the generators; ``standard`` counts
    bidegree-d monomials in the initial ideal; ``both`` computes the two and
    raises if they disagree.
    """
    order = get_order(order)
    d = Bidegree(*d)
    if I.is_zero():
        return 0
    for g in I.generators:
        if not g.is_bihomogeneous():
            raise NotBihomogeneous(f"generator {g} is not bihomogeneous")
    if method == "linear":
        return _hilbert_linear(I, d)
    if method == "standard":
        return _hilbert_standard(I, d, order)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    lin = _hilbert_linear(I, d)
    std = _hilbert_standard(I, d, order)
    if lin != std:
        raise InconsistentHilbert(f"dim I_{d}: linear algebra {lin}, standard monomials {std}")
    return lin


@dataclass
class HilbertTable:
    bound: Bidegree
    table: dict  # Bidegree -> (dim I_d, dim (R/I)_d)

    def ideal_dim(self, d) -> int:
        return self.table[Bidegree(*d)][0]

    def quotient_dim(self, d) -> int:
        return self.table[Bidegree(*d)][1]

    def format(self, which: str = "quotient") -> str:
        k = 1 if which == "quotient" else 0
        A, B = self.bound
        w = max(len(str(v[k])) for v in self.table.values()) + 1
        head = "a\\b".ljust(4) + "".join(str(b).rjust(w) for b in range(B + 1))
        lines = [head]
        for a in range(A + 1):
            lines.append(str(a).ljust(4) + "".join(str(self.table[Bidegree(a, b)][k]).rjust(w) for b in range(B + 1)))
        return "\n".join(lines)


def default_table_bound(I: Ideal) -> Bidegree:
    """Largest generator bidegree (componentwise) plus (2, 2)."""
    degs = [g.bidegree() for g in I.generators]
    return Bidegree(max(d.a for d in degs) + 2, max(d.b for d in degs) + 2)


def hilbert_table(I: Ideal, bound=None, method: str = "standard", order: TermOrder | str = DEGREVLEX) -> HilbertTable:
    bound = Bidegree(*bound) if bound is not None else default_table_bound(I)
    table = {}
    for a in range(bound.a + 1):
        for b in range(bound.b + 1):
            dim = hilbert_dim(I, (a, b), method, order)
            table[Bidegree(a, b)] = (dim, (a + 1) * (b + 1) - dim)
    return HilbertTable(bound, table)


def alpha(I: Ideal) -> int:
    """Least total degree of a nonzero element."""
    if I.is_zero():
        raise ZeroIdeal("alpha of the zero ideal")
    return min(g.total_degree() for g in I.groebner(DEGREVLEX))


# -- comparison ----------------------------------------------------------------


@dataclass
class ComparisonReport:
    partition: Partition | None
    m: int
    verdict: str  # "Equal" | "NotEqual"
    witness: Polynomial | None = None
    witness_bidegree: Bidegree | None = None
    evidence: str = "gb-membership"
    timings: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.verdict == "Equal"

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts) if self.partition else None,
            "m": self.m,
            "verdict": self.verdict,
            "witness": self.witness.to_str() if self.witness is not None else None,
            "witness_bidegree": list(self.witness_bidegree) if self.witness_bidegree else None,
            "evidence": self.evidence,
            "timings_ms": self.timings,
        }

    @classmethod
    def from_dict(cls, d: dict, field: Field = GF) -> "ComparisonReport":
        from .bipoly import parse_polynomial

        return cls(
            Partition(tuple(d["partition"])) if d.get("partition") else None,
            d["m"],
            d["verdict"],
            parse_polynomial(d["witness"], field) if d.get("witness") else None,
            Bidegree(*d["witness_bidegree"]) if d.get("witness_bidegree") else None,
            d.get("evidence", "gb-membership"),
            d.get("timings_ms", {}),
        )


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 2)


def compare_powers(X: PointConfiguration, m: int, order: TermOrder | str = DEGREVLEX,
                   check_reverse: bool = False) -> ComparisonReport:
    """Decide I^(m) = I^m by testing each reduced-GB element of I^(m) against I^m.

    I^m ⊆ I^(m) always; ``check_reverse`` asserts it explicitly.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    order = get_order(order)
    try:
        lam = partition_of(X).partition
    except ValueError:
        lam = None
    timings = {}
    t0 = time.perf_counter()
    S = symbolic_power(X, m)
    gbS = S.groebner(order)
    timings["symbolic"] = _ms(t0)
    t0 = time.perf_counter()
    P = ideal_power(defining_ideal(X), m)
    P.groebner(order)
    timings["power"] = _ms(t0)
    t0 = time.perf_counter()
    witness = next((g for g in gbS if not P.contains(g, order)), None)
    if check_reverse and not all(S.contains(g, order) for g in P.generators):
        raise AssertionError("I^m is not contained in I^(m)")
    timings["membership"] = _ms(t0)
    if witness is None:
        return ComparisonReport(lam, m, "Equal", timings=timings)
    d = witness.bidegree()
    evidence = "gb-membership"
    if hilbert_dim(S, d, "standard", order) > hilbert_dim(P, d, "standard", order):
        evidence = "hilbert-table"
    return ComparisonReport(lam, m, "NotEqual", witness, d, evidence, timings)


# -- conjecture sweep ------------------------------------------------------------


def conjecture_prediction(lam) -> str:
    """Equal exactly when there are at most two distinct parts."""
    return "Equal" if as_partition(lam).distinct_parts <= 2 else "NotEqual"


def theorem_coverage(lam) -> tuple[str | None, str | None]:
    """(name of the proven result covering lam, verdict it dictates)."""
    lam = as_partition(lam)
    if lam.distinct_parts == 1:
        return "complete-intersection", "Equal"
    if completion_shape(lam) is not None:
        return "near-rectangle", "Equal"
    if family_i_parameter(lam) is not None:
        return "family-i", "NotEqual"
    if family_ii_parameters(lam) is not None:
        return "family-ii", "NotEqual"
    return None, None


@dataclass
class SweepRow:
    partition: Partition
    distinct_parts: int
    verdict: str
    witness_bidegree: Bidegree | None
    prediction: str
    agreement: bool
    wall_ms: float
    theorem: str | None = None
    theorem_verdict: str | None = None
    evidence: str = "gb-membership"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["partition"] = list(self.partition.parts)
        d["witness_bidegree"] = list(self.witness_bidegree) if self.witness_bidegree else None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepRow":
        d = dict(d)
        d["partition"] = Partition(tuple(d["partition"]))
        d["witness_bidegree"] = Bidegree(*d["witness_bidegree"]) if d.get("witness_bidegree") else None
        return cls(**d)

    @property
    def theorem_consistent(self) -> bool | None:
        if self.theorem_verdict is None:
            return None
        return self.theorem_verdict == self.verdict


@dataclass
class SweepReport:
    max_points: int
    m: int
    field: str
    order: str
    rows: list

    def to_dict(self) -> dict:
        return {
            "max_points": self.max_points,
            "m": self.m,
            "field": self.field,
            "order": self.order,
            "rows": [r.to_dict() for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        return cls(d["max_points"], d["m"], d["field"], d["order"], [SweepRow.from_dict(r) for r in d["rows"]])

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agreement]

    @property
    def theorem_violations(self) -> list:
        return [r for r in self.rows if r.theorem_consistent is False]

    def format_table(self) -> str:
        header = ["partition", "parts", "verdict", "witness", "predicted", "agree", "theorem", "ms"]
        body = []
        for r in self.rows:
            body.append([
                f"({r.partition})",
                str(r.distinct_parts),
                r.verdict,
                str(r.witness_bidegree) if r.witness_bidegree else "-",
                r.prediction,
                "yes" if r.agreement else "NO",
                r.theorem or "-",
                f"{r.wall_ms:.0f}",
            ])
        widths = [max(len(h), *(len(row[k]) for row in body)) for k, h in enumerate(header)]
        fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        lines = [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in body]
        lines.append(
            f"{len(self.rows)} partitions, {len(self.disagreements)} disagreeing with the conjecture, "
            f"{len(self.theorem_violations)} contradicting a proven case"
        )
        return "\n".join(lines)


def sweep_row(lam: Partition, m: int = 3, field: Field = GF, order: str = "degrevlex") -> SweepRow:
    t0 = time.perf_counter()
    rep = compare_powers(from_partition(lam, field), m, order)
    pred = "Equal" if m <= 2 else conjecture_prediction(lam)
    if m <= 2:
        thm, thm_verdict = "squares", "Equal"
    else:
        thm, thm_verdict = theorem_coverage(lam)
        if m > 3 and thm_verdict != "Equal":
            # equality for every m follows from m = 3; inequality at m = 3 says nothing about m > 3
            thm, thm_verdict = None, None
    return SweepRow(lam, lam.distinct_parts, rep.verdict, rep.witness_bidegree, pred,
                    rep.verdict == pred, _ms(t0), thm, thm_verdict, rep.evidence)


def _sweep_task(args):
    return sweep_row(*args)


def conjecture_sweep(max_points: int, m: int = 3, jobs: int = 1, field: Field = GF,
                     order: str = "degrevlex") -> SweepReport:
    """compare_powers over every partition with at most ``max_points`` parts-sum,
    set against the prediction that equality holds iff there are <= 2 distinct parts."""
    if max_points < 1:
        raise ValueError("max_points must be >= 1")
    parts = enumerate_partitions(max_points)
    tasks = [(lam, m, field, order) for lam in parts]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_task, tasks))
    else:
        rows = [_sweep_task(t) for t in tasks]
    return SweepReport(max_points, m, repr(field), order, rows)


# -- narrative reports -------------------------------------------------------------


@dataclass
class HunekeReport:
    partition: Partition
    big_height: int
    squares: ComparisonReport
    cubes: ComparisonReport

    @property
    def counterexample(self) -> bool:
        return self.big_height == 2 and self.squares.equal and not self.cubes.equal

    def narrative(self) -> str:
        lines = [
            f"lambda = ({self.partition})",
            f"big height of I(X): {self.big_height} (every associated prime is the ideal of a point)",
            f"I^(2) {'=' if self.squares.equal else '!='} I^2",
            f"I^(3) {'=' if self.cubes.equal else '!='} I^3",
        ]
        if not self.cubes.equal:
            lines.append(f"witness in I^(3) \\ I^3 of bidegree {self.cubes.witness_bidegree}: {self.cubes.witness}")
        lines.append(
            "equality at m = big height does not force equality for all m"
            if self.counterexample else "not a counterexample"
        )
        return "\n".join(lines)


def huneke_counterexample_report(X: PointConfiguration) -> HunekeReport:
    lam = partition_of(X).partition
    if lam.distinct_parts < 3:
        raise PreconditionError(f"({lam}) has fewer than three distinct parts")
    return HunekeReport(lam, 2, compare_powers(X, 2), compare_powers(X, 3))


@dataclass
class MoreyReport:
    partition: Partition
    verdicts: dict  # m -> verdict

    @property
    def all_equal(self) -> bool:
        return all(v == "Equal" for v in self.verdicts.values())


def morey_consequence_check(X: PointConfiguration, upto: int = 4) -> MoreyReport:
    """Given I^(3) = I^3, confirm I^(m) = I^m for 4 <= m <= upto."""
    if not 4 <= upto <= 5:
        raise PreconditionError("upto must be 4 or 5")
    lam = partition_of(X).partition
    if not compare_powers(X, 3).equal:
        raise PreconditionError(f"I^(3) != I^3 for ({lam})")
    return MoreyReport(lam, {m: compare_powers(X, m).verdict for m in range(4, upto + 1)})
