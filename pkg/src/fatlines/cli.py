"""Command-line entry point: ``fatlines <command> [options]``.

Exit status is 0 on success, 1 when a mathematical precondition fails
(non-ACM input, wrong partition shape, degenerate coordinates) and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import golden
from .bipoly import get_order
from .exact import Field, field_from_spec
from .groebner import Ideal, ideal_power
from .pointconfig import (
    DegenerateCoordinates,
    NotACM,
    P1Point,
    Partition,
    PointConfiguration,
    ShapeMismatch,
    completion_schemes,
    defining_ideal,
    family_i_parameter,
    family_ii_parameters,
    ferrers_form,
    from_partition,
    is_acm,
    partition_of,
    render_diagram,
    symbolic_power,
    witness_form,
)
from .powers import (
    ComparisonReport,
    PreconditionError,
    SweepReport,
    compare_powers,
    conjecture_sweep,
    hilbert_table,
)

COMMANDS = ["acm", "ideal", "power", "symbolic", "compare", "hilbert",
            "completion", "witness", "sweep", "paper-check"]

# commands that act on a single configuration
CONFIG_COMMANDS = {"acm", "ideal", "power", "symbolic", "compare", "hilbert", "completion", "witness"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    field: Field
    order: str = "degrevlex"
    partition: Partition | None = None
    diagram: Path | None = None
    coords: Path | None = None
    m: int | None = None
    max_points: int = 10
    format: str = "table"
    jobs: int = 1
    family: str | None = None
    bound: tuple[int, int] | None = None
    replay: Path | None = None

    def __post_init__(self):
        if self.command in CONFIG_COMMANDS:
            sources = [s for s in (self.partition, self.diagram) if s is not None]
            if len(sources) != 1 and not (self.command == "compare" and self.replay):
                raise UsageError("give exactly one of --partition or --diagram")
        elif self.partition is not None or self.diagram is not None:
            raise UsageError(f"{self.command} takes no --partition/--diagram")
        if self.m is not None and self.m < 1:
            raise UsageError("--m must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.max_points < 1:
            raise UsageError("--max-points must be >= 1")


# -- input files -----------------------------------------------------------------


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def read_diagram(path: Path) -> set[tuple[int, int]]:
    """Lines ``i,j``; blank lines and ``#`` comments are skipped."""
    pts = set()
    for n, line in enumerate(_read_text(path).splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            i, j = (int(s) for s in line.split(","))
        except ValueError:
            raise UsageError(f"{path}:{n}: expected 'i,j', got {line!r}") from None
        pts.add((i, j))
    if not pts:
        raise UsageError(f"{path}: no points")
    return pts


def read_coords(path: Path) -> tuple[list | None, list | None]:
    """Lines ``rows: [a:b] [a:b] ...`` and ``cols: ...``; either may be omitted."""
    rows = cols = None
    for n, line in enumerate(_read_text(path).splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        try:
            pts = [P1Point.parse(tok + "]") for tok in rest.replace(" ", "").split("]") if tok]
        except ValueError as e:
            raise UsageError(f"{path}:{n}: {e}") from None
        if key in ("rows", "row", "h"):
            rows = pts
        elif key in ("cols", "col", "columns", "v"):
            cols = pts
        else:
            raise UsageError(f"{path}:{n}: expected 'rows:' or 'cols:'")
    return rows, cols


def load_config(cfg: RunConfig) -> PointConfiguration:
    rows = cols = None
    if cfg.coords is not None:
        rows, cols = read_coords(cfg.coords)
    try:
        if cfg.partition is not None:
            return from_partition(cfg.partition, cfg.field, rows, cols)
        return PointConfiguration.from_diagram(read_diagram(cfg.diagram), rows, cols, cfg.field)
    except (DegenerateCoordinates, NotACM):
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None


# -- command implementations -----------------------------------------------------
# each returns (json-able dict, text rendering)


def _poly_list(polys, order):
    return [{"bidegree": list(g.bidegree()), "poly": g.to_str(order)} for g in polys]


def _poly_lines(polys, order):
    return [f"  {tuple(g.bidegree())}  {g.to_str(order)}" for g in polys]


def cmd_acm(X: PointConfiguration, cfg: RunConfig):
    verdict = is_acm(X)
    if not verdict:
        raise NotACM(verdict.witness)
    rel = partition_of(X)
    F = ferrers_form(X)
    original = render_diagram(X)
    relabeled = render_diagram(
        F,
        [f"H{r}" for r in rel.row_order],
        [f"V{c}" for c in rel.col_order],
    )
    data = {
        "acm": True,
        "partition": list(rel.partition.parts),
        "row_order": list(rel.row_order),
        "col_order": list(rel.col_order),
        "original": original.splitlines(),
        "ferrers": relabeled.splitlines(),
    }
    text = "\n".join([
        f"ACM: yes, partition ({rel.partition})",
        "",
        "original labels:",
        original,
        "",
        "Ferrers relabelling (largest row on top):",
        relabeled,
    ])
    return data, text


def _ideal_output(name: str, I: Ideal, cfg: RunConfig, gb: bool):
    order = get_order(cfg.order)
    polys = I.groebner(order) if gb else list(I.generators)
    kind = "reduced Groebner basis elements" if gb else "generators"
    data = {"ideal": name, "kind": kind, "order": cfg.order, "count": len(polys),
            "generators": _poly_list(polys, order)}
    text = "\n".join([f"{name}: {len(polys)} {kind} ({cfg.order})"] + _poly_lines(polys, order))
    return data, text


def cmd_ideal(X, cfg):
    data, text = _ideal_output("I(X)", defining_ideal(X), cfg, gb=False)
    try:
        lam = partition_of(X).partition
        data["partition"] = list(lam.parts)
        text = f"partition ({lam})\n" + text
    except NotACM:
        data["partition"] = None
    return data, text


def cmd_power(X, cfg):
    m = cfg.m or 2
    data, text = _ideal_output(f"I^{m}", ideal_power(defining_ideal(X), m), cfg, gb=True)
    data["m"] = m
    return data, text


def cmd_symbolic(X, cfg):
    m = cfg.m or 2
    data, text = _ideal_output(f"I^({m})", symbolic_power(X, m), cfg, gb=True)
    data["m"] = m
    return data, text


def _comparison_text(rep: ComparisonReport) -> str:
    lines = [
        f"partition ({rep.partition})  m = {rep.m}",
        f"verdict: {rep.verdict}",
    ]
    if rep.witness is not None:
        lines.append(f"witness bidegree: {tuple(rep.witness_bidegree)}")
        lines.append(f"witness: {rep.witness.to_str()}")
        lines.append(f"evidence: {rep.evidence}")
    lines.append("timings (ms): " + ", ".join(f"{k} {v}" for k, v in rep.timings.items()))
    return "\n".join(lines)


def cmd_compare(X, cfg):
    if cfg.replay is not None:
        return replay_comparison(cfg)
    rep = compare_powers(X, cfg.m or 3, cfg.order, check_reverse=True)
    return rep.to_dict(), _comparison_text(rep)


def replay_comparison(cfg: RunConfig):
    """Re-ingest a compare report and check the recomputed verdict matches."""
    old = ComparisonReport.from_dict(_load_json(cfg.replay), cfg.field)
    if old.partition is None:
        raise UsageError("report has no partition to replay")
    X = from_partition(old.partition, cfg.field)
    new = compare_powers(X, old.m, cfg.order)
    same = new.verdict == old.verdict and new.witness_bidegree == old.witness_bidegree
    data = {"replayed": str(cfg.replay), "reproduced": same, "original": old.to_dict(), "recomputed": new.to_dict()}
    text = f"replay of {cfg.replay}: {'reproduced' if same else 'MISMATCH'}\n" + _comparison_text(new)
    if not same:
        raise ReplayMismatch(data, text)
    return data, text


def cmd_hilbert(X, cfg):
    m = cfg.m or 1
    order = get_order(cfg.order)
    sym = symbolic_power(X, m)
    tables = {f"I^({m})": hilbert_table(sym, cfg.bound, order=order)}
    bound = cfg.bound or tables[f"I^({m})"].bound
    if m > 1:
        tables[f"I^{m}"] = hilbert_table(ideal_power(defining_ideal(X), m), bound, order=order)
    data = {"m": m, "bound": list(bound), "quotient_dims": {}}
    parts = []
    for name, T in tables.items():
        data["quotient_dims"][name] = [[T.quotient_dim((a, b)) for b in range(bound[1] + 1)] for a in range(bound[0] + 1)]
        parts.append(f"dim (R/{name})_(a,b):\n{T.format()}")
    if m > 1:
        S, P = tables[f"I^({m})"], tables[f"I^{m}"]
        diff = [list(d) for d in S.table if S.ideal_dim(d) != P.ideal_dim(d)]
        data["differing_bidegrees"] = sorted(diff)
        parts.append("bidegrees where I^(m) and I^m differ: " + (", ".join(str(tuple(d)) for d in sorted(diff)) or "none"))
    return data, "\n\n".join(parts)


def cmd_completion(X, cfg):
    C = completion_schemes(X)
    order = get_order(cfg.order)
    data = {"t": C.t, "a": C.a, "missing_point": list(C.missing_point), "inclusions_hold": C.inclusions_hold}
    lines = [f"(t, a) = ({C.t}, {C.a}), completing point H{C.missing_point[0]} x V{C.missing_point[1]} (Ferrers labels)",
             f"I(Y) <= I(W) <= I(Z): {'yes' if C.inclusions_hold else 'NO'}"]
    for name, I in (("I(Y)", C.I_Y), ("I(W)", C.I_W), ("I(Z)", C.I_Z)):
        gb = I.groebner(order)
        data[name] = _poly_list(gb, order)
        lines.append(f"{name}: {len(gb)} basis elements")
        lines += _poly_lines(gb, order)
    return data, "\n".join(lines)


def cmd_witness(X, cfg):
    lam = partition_of(X).partition
    family = cfg.family
    if family is None:
        if family_i_parameter(lam) is not None:
            family = "i"
        elif family_ii_parameters(lam) is not None:
            family = "ii"
        else:
            raise ShapeMismatch(f"({lam}) belongs to neither witness family")
    w = witness_form(family, lam, config=X)
    outside = not ideal_power(defining_ideal(X), 3).contains(w.F)
    data = {
        "family": family,
        "partition": list(lam.parts),
        "bidegree": list(w.bidegree),
        "D": w.D.to_str(),
        "D_points": [list(p) for p in w.d_points],
        "F": w.F.to_str(),
        "in_symbolic_cube": w.in_symbolic_cube,
        "outside_cube": outside,
    }
    text = "\n".join([
        f"partition ({lam}), family {family}",
        f"D = {w.D.to_str()}  (through {', '.join(map(str, w.d_points))})",
        f"F bidegree {tuple(w.bidegree)}",
        f"F in I^(3): {'yes' if w.in_symbolic_cube else 'NO'}",
        f"F in I^3:   {'NO' if outside else 'yes'}",
        f"F = {w.F.to_str()}",
    ])
    return data, text


def cmd_sweep(cfg):
    if cfg.replay is not None:
        old = SweepReport.from_dict(_load_json(cfg.replay))
        new = conjecture_sweep(old.max_points, old.m, cfg.jobs, field_from_spec(_field_token(old.field)), old.order)
        mismatches = [str(a.partition) for a, b in zip(old.rows, new.rows)
                      if (a.verdict, a.witness_bidegree) != (b.verdict, b.witness_bidegree)]
        same = not mismatches and len(old.rows) == len(new.rows)
        data = {"replayed": str(cfg.replay), "reproduced": same, "mismatches": mismatches}
        text = f"replay of {cfg.replay}: {len(new.rows)} rows, " + ("reproduced" if same else f"MISMATCH at {mismatches}")
        if not same:
            raise ReplayMismatch(data, text)
        return data, text
    rep = conjecture_sweep(cfg.max_points, cfg.m or 3, cfg.jobs, cfg.field, cfg.order)
    return rep.to_dict(), rep.format_table()


def cmd_paper_check(cfg):
    results = golden.run_all(cfg.field)
    passed = sum(r["passed"] for r in results)
    w = max(len(r["case"]) for r in results)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['case'].ljust(w)}  {r['anchor']}\n      {r['detail']}  [{r['ms']} ms]"
             for r in results]
    lines.append(f"{passed}/{len(results)} golden cases passed ({cfg.field!r})")
    data = {"field": repr(cfg.field), "passed": passed, "total": len(results), "cases": results}
    return data, "\n".join(lines)


class ReplayMismatch(Exception):
    def __init__(self, data, text):
        super().__init__(text)
        self.data, self.text = data, text


def _field_token(name: str) -> str:
    return "q" if name == "QQ" else name.removeprefix("GF(").removesuffix(")")


def _load_json(path: Path) -> dict:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as e:
        raise UsageError(f"cannot read report {path}: {e}") from None


HANDLERS = {
    "acm": cmd_acm,
    "ideal": cmd_ideal,
    "power": cmd_power,
    "symbolic": cmd_symbolic,
    "compare": cmd_compare,
    "hilbert": cmd_hilbert,
    "completion": cmd_completion,
    "witness": cmd_witness,
}


# -- argument parsing ------------------------------------------------------------


def _partition_arg(text):
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _field_arg(text):
    try:
        return field_from_spec(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--field must be a prime or 'q', not {text!r}")


def _bidegree_arg(text):
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("bidegree entries must be >= 0")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--partition", type=_partition_arg, help="e.g. 3,2,1")
    common.add_argument("--diagram", type=Path, help="file with one 'i,j' point per line")
    common.add_argument("--coords", type=Path, help="file with 'rows: [a:b] ...' and 'cols: ...' lines")
    common.add_argument("--m", type=int, help="power to compute")
    common.add_argument("--max-points", type=int, default=10, help="sweep bound on |lambda|")
    common.add_argument("--field", type=_field_arg, default="32003", help="a prime p or 'q' (default 32003)")
    common.add_argument("--order", choices=["degrevlex", "lex"], default="degrevlex")
    common.add_argument("--format", choices=["json", "table", "diagram"], default="table")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweep")

    parser = argparse.ArgumentParser(prog="fatlines", description="Ideals and powers of ACM points in P1 x P1.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "acm": "ACM test, Ferrers relabelling and diagram",
        "ideal": "generators of I(X)",
        "power": "reduced Groebner basis of I^m",
        "symbolic": "reduced Groebner basis of I^(m)",
        "compare": "decide I^(m) = I^m, with a witness if not",
        "hilbert": "bigraded Hilbert function table",
        "completion": "the Y, W, Z schemes for (a,...,a,a-1)",
        "witness": "explicit element of I^(3) outside I^3",
        "sweep": "I^(m) vs I^m over all partitions up to --max-points",
        "paper-check": "run the golden reproduction cases",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "witness":
            p.add_argument("--family", choices=["i", "ii"])
        if name == "hilbert":
            p.add_argument("--bound", type=_bidegree_arg, help="table bound 'a,b'")
        if name in ("compare", "sweep"):
            p.add_argument("--replay", type=Path, help="re-run a saved JSON report and check its verdicts")
    return parser


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    return RunConfig(
        command=args.command,
        field=args.field if not isinstance(args.field, str) else field_from_spec(args.field),
        order=args.order,
        partition=args.partition,
        diagram=args.diagram,
        coords=args.coords,
        m=args.m,
        max_points=args.max_points,
        format=args.format,
        jobs=args.jobs,
        family=getattr(args, "family", None),
        bound=getattr(args, "bound", None),
        replay=getattr(args, "replay", None),
    )


def _emit(data, text, fmt, out):
    if fmt == "json":
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = parse_config(argv)
    except SystemExit as e:  # argparse reports usage errors itself
        return int(e.code or 0)
    except UsageError as e:
        err.write(f"fatlines: error: {e}\n")
        return 2
    try:
        if cfg.command == "sweep":
            data, text = cmd_sweep(cfg)
        elif cfg.command == "paper-check":
            data, text = cmd_paper_check(cfg)
            _emit(data, text, cfg.format, out)
            return 0 if data["passed"] == data["total"] else 1
        else:
            X = None if (cfg.command == "compare" and cfg.replay) else load_config(cfg)
            data, text = HANDLERS[cfg.command](X, cfg)
    except UsageError as e:
        err.write(f"fatlines: error: {e}\n")
        return 2
    except NotACM as e:
        p, q = e.pair
        err.write(f"fatlines: not ACM: points {p} and {q} lie in distinct rows and columns"
                  f" and neither {(p[0], q[1])} nor {(q[0], p[1])} is in X\n")
        if cfg.format == "json":
            out.write(json.dumps({"acm": False, "witness": [list(p), list(q)]}) + "\n")
        return 1
    except (ShapeMismatch, PreconditionError, DegenerateCoordinates) as e:
        err.write(f"fatlines: precondition failed: {e}\n")
        return 1
    except ReplayMismatch as e:
        _emit(e.data, e.text, cfg.format, out)
        return 1
    _emit(data, text, cfg.format, out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
