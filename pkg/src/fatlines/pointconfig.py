"""Finite sets of points in P^1 x P^1 and the ideals attached to them.

A configuration is a lattice diagram: the pair (i, j) means the point lying
on the i-th horizontal ruling H_i and the j-th vertical ruling V_j.  Each
ruling carries a coordinate in P^1; H_i is the (1,0)-form in x0, x1 vanishing
at its coordinate, V_j the (0,1)-form in y0, y1.  Rows and columns are
1-indexed throughout.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .bipoly import DEGREVLEX, Bidegree, Polynomial, product
from .exact import GF, DenseMatrix, Field, nullspace
from .groebner import Ideal, ideal_equal, ideal_intersection, ideal_power, intersect_all


class NotACM(ValueError):
    """Raised by partition-dependent operations; carries the violating pair."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(
            f"configuration is not ACM: points {pair[0]} and {pair[1]} "
            f"have neither {(pair[0][0], pair[1][1])} nor {(pair[1][0], pair[0][1])}"
        )


class ShapeMismatch(ValueError):
    pass


class ShapeNotFound(RuntimeError):
    pass


class DegenerateCoordinates(RuntimeError):
    pass


# -- P^1 points and partitions -----------------------------------------------


@dataclass(frozen=True)
class P1Point:
    """[a : b] normalised so the first nonzero coordinate is 1."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a == 0 and b == 0:
            raise ValueError("[0:0] is not a point of P^1")
        if a != 0:
            a, b = Fraction(1), b / a
        else:
            b = Fraction(1)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text: str) -> "P1Point":
        m = re.fullmatch(r"\s*\[\s*([-\d/]+)\s*:\s*([-\d/]+)\s*\]\s*", text)
        if not m:
            raise ValueError(f"bad P^1 point {text!r}; expected [a:b]")
        return cls(Fraction(m.group(1)), Fraction(m.group(2)))

    def form(self, var: str, field: Field = GF) -> Polynomial:
        """Linear form b*z0 - a*z1 in ``var``0, ``var``1, scaled to coprime integers."""
        a, b = self.a, self.b
        den = math.lcm(a.denominator, b.denominator)
        ia, ib = int(a * den), int(b * den)
        g = math.gcd(ia, ib)
        ia, ib = ia // g, ib // g
        if ib < 0 or (ib == 0 and ia > 0):
            ia, ib = -ia, -ib
        z0 = Polynomial.var(var + "0", field)
        z1 = Polynomial.var(var + "1", field)
        return z0.scale(field(ib)) - z1.scale(field(ia))

    def __str__(self):
        return f"[{self.a}:{self.b}]"


def default_coordinate(i: int) -> P1Point:
    """Ruling i -> [1:0], [0:1], then [1:i-2]."""
    if i == 1:
        return P1Point(1, 0)
    if i == 2:
        return P1Point(0, 1)
    return P1Point(1, i - 2)


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("empty partition")
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition (non-increasing positive parts)")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(tuple(int(s) for s in text.replace(" ", "").split(",") if s))
        except ValueError as e:
            raise ValueError(f"bad partition {text!r}: {e}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def distinct_parts(self) -> int:
        return len(set(self.parts))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(tuple(lam))


def partitions_of(n: int) -> list[Partition]:
    """Partitions of n in lexicographically descending order."""

    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def enumerate_partitions(max_points: int) -> list[Partition]:
    """All partitions of 1..max_points, sizes ascending, lex-descending within a size."""
    return [lam for n in range(1, max_points + 1) for lam in partitions_of(n)]


# -- configurations -----------------------------------------------------------


def _coords(coords, n: int) -> tuple[P1Point, ...]:
    if coords is None:
        return tuple(default_coordinate(i) for i in range(1, n + 1))
    out = tuple(c if isinstance(c, P1Point) else P1Point(*c) for c in coords)
    return out


@dataclass(frozen=True)
class PointConfiguration:
    diagram: frozenset
    row_coords: tuple
    col_coords: tuple
    field: Field = GF

    def __post_init__(self):
        diagram = frozenset((int(i), int(j)) for i, j in self.diagram)
        if not diagram:
            raise ValueError("empty configuration")
        object.__setattr__(self, "diagram", diagram)
        rows = {i for i, _ in diagram}
        cols = {j for _, j in diagram}
        h, v = max(rows), max(cols)
        if rows != set(range(1, h + 1)) or cols != set(range(1, v + 1)):
            raise ValueError("every row 1..h and column 1..v must contain a point")
        rc = _coords(self.row_coords, h)
        cc = _coords(self.col_coords, v)
        if len(rc) != h or len(cc) != v:
            raise ValueError(f"need {h} row and {v} column coordinates, got {len(rc)} and {len(cc)}")
        if len(set(rc)) != h or len(set(cc)) != v:
            raise ValueError("ruling coordinates must be distinct on each axis")
        if self.field.char:
            for axis, cs in (("row", rc), ("column", cc)):
                try:
                    reduced = [(self.field(c.a), self.field(c.b)) for c in cs]
                except ZeroDivisionError:
                    raise DegenerateCoordinates(f"{axis} coordinates {[str(c) for c in cs]} have a denominator divisible by {self.field.char}") from None
                reduced = [(1, self.field.mul(b, self.field.inv(a))) if a else (0, 1) for a, b in reduced]
                if len(set(reduced)) != len(reduced):
                    raise DegenerateCoordinates(f"{axis} coordinates {[str(c) for c in cs]} collide modulo {self.field.char}")
        object.__setattr__(self, "row_coords", rc)
        object.__setattr__(self, "col_coords", cc)

    @classmethod
    def from_diagram(cls, pairs: Iterable, row_coords=None, col_coords=None, field: Field = GF):
        return cls(frozenset(pairs), row_coords, col_coords, field)

    @property
    def h(self) -> int:
        return len(self.row_coords)

    @property
    def v(self) -> int:
        return len(self.col_coords)

    @property
    def points(self) -> list[tuple[int, int]]:
        return sorted(self.diagram)

    def __len__(self):
        return len(self.diagram)

    def with_field(self, field: Field) -> "PointConfiguration":
        return PointConfiguration(self.diagram, self.row_coords, self.col_coords, field)

    def with_coords(self, row_coords=None, col_coords=None) -> "PointConfiguration":
        return PointConfiguration(
            self.diagram,
            row_coords if row_coords is not None else self.row_coords,
            col_coords if col_coords is not None else self.col_coords,
            self.field,
        )

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "PointConfiguration":
        """Relabel rows/columns: old row i becomes row_perm[i-1] (coordinates travel along)."""
        diagram = {(row_perm[i - 1], col_perm[j - 1]) for i, j in self.diagram}
        rc = [None] * self.h
        cc = [None] * self.v
        for i, c in enumerate(self.row_coords):
            rc[row_perm[i] - 1] = c
        for j, c in enumerate(self.col_coords):
            cc[col_perm[j] - 1] = c
        return PointConfiguration(frozenset(diagram), tuple(rc), tuple(cc), self.field)

    def __str__(self):
        return render_diagram(self)


def from_partition(lam, field: Field = GF, row_coords=None, col_coords=None) -> PointConfiguration:
    lam = as_partition(lam)
    diagram = frozenset((i, j) for i, part in enumerate(lam.parts, 1) for j in range(1, part + 1))
    return PointConfiguration(diagram, row_coords, col_coords, field)


def render_diagram(X: PointConfiguration, row_labels=None, col_labels=None) -> str:
    """Rows drawn top-down (H_1 first)."""
    row_labels = row_labels or [f"H{i}" for i in range(1, X.h + 1)]
    col_labels = col_labels or [f"V{j}" for j in range(1, X.v + 1)]
    w = max(len(s) for s in col_labels) + 1
    lw = max(len(s) for s in row_labels) + 1
    lines = [" " * lw + "".join(s.rjust(w) for s in col_labels)]
    for i in range(1, X.h + 1):
        cells = "".join(("*" if (i, j) in X.diagram else ".").rjust(w) for j in range(1, X.v + 1))
        lines.append(row_labels[i - 1].ljust(lw) + cells)
    return "\n".join(lines)


# -- ACM detection and the Ferrers relabelling ---------------------------------


@dataclass(frozen=True)
class AcmVerdict:
    acm: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.acm


def is_acm(X: PointConfiguration) -> AcmVerdict:
    """For points in distinct rows and columns, one of the two corners must be present."""
    pts = X.points
    D = X.diagram
    for p, q in itertools.combinations(pts, 2):
        if p[0] != q[0] and p[1] != q[1]:
            if (p[0], q[1]) not in D and (q[0], p[1]) not in D:
                return AcmVerdict(False, (p, q))
    return AcmVerdict(True)


@dataclass(frozen=True)
class FerrersRelabeling:
    """``row_order[k]`` is the original row placed at position k+1 (same for columns)."""

    partition: Partition
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]

    @property
    def row_perm(self) -> tuple[int, ...]:
        """Inverse map: original row i goes to row_perm[i-1]."""
        inv = [0] * len(self.row_order)
        for k, r in enumerate(self.row_order, 1):
            inv[r - 1] = k
        return tuple(inv)

    @property
    def col_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.col_order)
        for k, c in enumerate(self.col_order, 1):
            inv[c - 1] = k
        return tuple(inv)


def partition_of(X: PointConfiguration) -> FerrersRelabeling:
    verdict = is_acm(X)
    if not verdict:
        raise NotACM(verdict.witness)
    row_count = {i: 0 for i in range(1, X.h + 1)}
    col_count = {j: 0 for j in range(1, X.v + 1)}
    for i, j in X.diagram:
        row_count[i] += 1
        col_count[j] += 1
    rows = tuple(sorted(row_count, key=lambda i: (-row_count[i], i)))
    cols = tuple(sorted(col_count, key=lambda j: (-col_count[j], j)))
    lam = Partition(tuple(row_count[i] for i in rows))
    rpos = {r: k for k, r in enumerate(rows, 1)}
    cpos = {c: k for k, c in enumerate(cols, 1)}
    relabeled = {(rpos[i], cpos[j]) for i, j in X.diagram}
    expected = {(i, j) for i, part in enumerate(lam.parts, 1) for j in range(1, part + 1)}
    if relabeled != expected:  # pragma: no cover - impossible for ACM input
        raise RuntimeError("ACM configuration failed to sort into a Ferrers diagram")
    return FerrersRelabeling(lam, rows, cols)


def ferrers_form(X: PointConfiguration) -> PointConfiguration:
    """The same points with rows and columns relabelled into Ferrers position."""
    rel = partition_of(X)
    return X.permuted(rel.row_perm, rel.col_perm)


# -- forms and ideals ----------------------------------------------------------


def ruling_form(X: PointConfiguration, axis: str, index: int) -> Polynomial:
    if axis in ("row", "H", "h"):
        if not 1 <= index <= X.h:
            raise IndexError(f"row {index} out of range 1..{X.h}")
        return X.row_coords[index - 1].form("x", X.field)
    if axis in ("col", "V", "v"):
        if not 1 <= index <= X.v:
            raise IndexError(f"column {index} out of range 1..{X.v}")
        return X.col_coords[index - 1].form("y", X.field)
    raise ValueError(f"axis must be 'row' or 'col', not {axis!r}")


class Rulings:
    """H_k and V_k in Ferrers labelling; products built from exponent lists."""

    def __init__(self, X: PointConfiguration):
        rel = partition_of(X)
        self.X = X
        self.partition = rel.partition
        self.relabeling = rel
        self.H = [ruling_form(X, "row", r) for r in rel.row_order]
        self.V = [ruling_form(X, "col", c) for c in rel.col_order]
        self.field = X.field
        self._pow: dict = {}

    def _p(self, axis: str, k: int, e: int) -> Polynomial:
        key = (axis, k, e)
        f = self._pow.get(key)
        if f is None:
            base = (self.H if axis == "H" else self.V)[k - 1]
            f = base**e
            self._pow[key] = f
        return f

    def mono(self, hexp: Sequence[int] = (), vexp: Sequence[int] = ()) -> Polynomial:
        """prod H_k^hexp[k-1] * prod V_k^vexp[k-1]."""
        fs = [self._p("H", k, e) for k, e in enumerate(hexp, 1) if e]
        fs += [self._p("V", k, e) for k, e in enumerate(vexp, 1) if e]
        return product(fs, self.field)

    @property
    def h(self):
        return len(self.H)

    @property
    def v(self):
        return len(self.V)


def point_ideal(X: PointConfiguration, p: tuple[int, int]) -> Ideal:
    p = tuple(p)
    if p not in X.diagram:
        raise KeyError(f"{p} is not a point of the configuration")
    return Ideal([ruling_form(X, "row", p[0]), ruling_form(X, "col", p[1])], X.field)


def _grid_point_ideal(X: PointConfiguration, i: int, j: int) -> Ideal:
    """Ideal of H_i ∩ V_j for any row i and column j (need not be in X)."""
    return Ideal([ruling_form(X, "row", i), ruling_form(X, "col", j)], X.field)


def staircase_generators(X: PointConfiguration) -> list[Polynomial]:
    """Generators read off the partition: the two full products plus one
    H_1..H_i V_1..V_{lam_{i+1}} at every drop of the partition."""
    R = Rulings(X)
    lam = R.partition.parts
    h, v = R.h, R.v
    gens = [R.mono([1] * h), R.mono((), [1] * v)]
    for i in range(1, h):
        if lam[i] < lam[i - 1]:
            gens.append(R.mono([1] * i, [1] * lam[i]))
    return gens


@functools.lru_cache(maxsize=4096)
def points_intersection_ideal(X: PointConfiguration) -> Ideal:
    return intersect_all([point_ideal(X, p) for p in X.points])


@functools.lru_cache(maxsize=4096)
def defining_ideal(X: PointConfiguration) -> Ideal:
    """I(X); closed-form generators when X is ACM, otherwise the intersection."""
    if is_acm(X):
        return Ideal(staircase_generators(X), X.field)
    return points_intersection_ideal(X)


@functools.lru_cache(maxsize=4096)
def symbolic_power(X: PointConfiguration, m: int) -> Ideal:
    """Intersection over the points of I(P)^m, folded pairwise in diagram order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return intersect_all([ideal_power(point_ideal(X, p), m) for p in X.points])


# -- fat point schemes ---------------------------------------------------------


@dataclass(frozen=True)
class FatPointScheme:
    """Points of ``base`` with multiplicities; the ideal is ∩ I(P)^{m_P}."""

    base: PointConfiguration
    multiplicity: tuple  # sorted ((i, j), m) pairs

    def __post_init__(self):
        mult = dict(self.multiplicity)
        if set(mult) != set(self.base.diagram):
            raise ValueError("multiplicities must be given on exactly the base points")
        if any(m < 1 for m in mult.values()):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "multiplicity", tuple(sorted(mult.items())))

    @classmethod
    def uniform(cls, base: PointConfiguration, m: int) -> "FatPointScheme":
        return cls(base, tuple((p, m) for p in base.points))

    @property
    def degree(self) -> int:
        """Length of the scheme: sum of m(m+1)/2."""
        return sum(m * (m + 1) // 2 for _, m in self.multiplicity)

    def ideal(self) -> Ideal:
        return intersect_all([ideal_power(point_ideal(self.base, p), m) for p, m in self.multiplicity])


# -- shapes of squares ---------------------------------------------------------


@dataclass
class ShapeReport:
    partition: Partition
    squares_equal: bool
    shapes: list  # (a, b, c, d, label)
    generated: bool

    def summary(self) -> str:
        labels = sorted({s[4] for s in self.shapes})
        return (
            f"lambda=({self.partition}): I^(2) {'=' if self.squares_equal else '!='} I^2; "
            f"{len(self.shapes)} square-shaped generators, kinds {', '.join(labels)}"
        )


def _shape_label(a, b, c, d, h, v) -> str:
    if a == b == h and c == d == 0:
        return "a"
    if a == 0 and b == h and c == 0 and d == v:
        return "b"
    if a == b == 0 and c == d == v:
        return "c"
    return "d"


def double_power_shape_report(X: PointConfiguration) -> ShapeReport:
    """Check I^(2) = I^2 and that products H_1^2..H_a^2 H_{a+1}..H_b V_1^2..V_c^2 V_{c+1}..V_d
    lying in I^(2) generate it."""
    R = Rulings(X)
    S2 = symbolic_power(X, 2)
    I = defining_ideal(X)
    equal = ideal_equal(S2, ideal_power(I, 2))
    h, v = R.h, R.v
    found = []
    for a in range(h + 1):
        for b in range(a, h + 1):
            for c in range(v + 1):
                for d in range(c, v + 1):
                    if b == 0 and d == 0:
                        continue
                    hexp = [2] * a + [1] * (b - a)
                    vexp = [2] * c + [1] * (d - c)
                    F = R.mono(hexp, vexp)
                    if S2.contains(F):
                        found.append(((a, b, c, d), hexp, vexp, F))
    # keep the minimal ones under exponent dominance
    def dominates(e1, e2):
        h1, v1 = e1
        h2, v2 = e2
        h1 = h1 + [0] * (h - len(h1))
        h2 = h2 + [0] * (h - len(h2))
        v1 = v1 + [0] * (v - len(v1))
        v2 = v2 + [0] * (v - len(v2))
        return all(x >= y for x, y in zip(h1 + v1, h2 + v2))

    minimal = [
        f for f in found
        if not any(g is not f and dominates((f[1], f[2]), (g[1], g[2])) and (f[1], f[2]) != (g[1], g[2]) for g in found)
    ]
    generated = ideal_equal(Ideal([f[3] for f in minimal], X.field), S2)
    if not generated:
        raise ShapeNotFound(f"square-shaped forms do not generate I^(2) for {R.partition}")
    shapes = [(*f[0], _shape_label(*f[0], h, v)) for f in minimal]
    return ShapeReport(R.partition, equal, shapes, generated)


# -- completion schemes Y, W, Z -----------------------------------------------


def completion_shape(lam) -> tuple[int, int] | None:
    """(t, a) when lam = (a,...,a [t times], a-1) with t >= 1, a >= 2."""
    parts = as_partition(lam).parts
    if len(parts) < 2:
        return None
    a = parts[0]
    t = len(parts) - 1
    if a >= 2 and all(p == a for p in parts[:-1]) and parts[-1] == a - 1:
        return t, a
    return None


def _require_completion(X: PointConfiguration) -> tuple[Rulings, int, int]:
    R = Rulings(X)
    shape = completion_shape(R.partition)
    if shape is None:
        raise ShapeMismatch(f"partition ({R.partition}) is not of the form (a,...,a,a-1)")
    return R, shape[0], shape[1]


def completion_y_generators(t: int, a: int, X: PointConfiguration) -> list[Polynomial]:
    """The seven forms G_1..G_7 generating I(Y)."""
    R, tt, aa = _require_completion(X)
    if (tt, aa) != (t, a):
        raise ShapeMismatch(f"configuration has (t, a) = {(tt, aa)}, not {(t, a)}")
    return [
        R.mono((), [3] * a),
        R.mono([1] * t, [3] * (a - 1) + [2]),
        R.mono([1] * (t + 1), [2] * a),
        R.mono([2] * t + [1], [2] * (a - 1) + [1]),
        R.mono([2] * (t + 1), [1] * a),
        R.mono([3] * t + [2], [1] * (a - 1)),
        R.mono([3] * (t + 1)),
    ]


def completion_w_extras(t: int, a: int, X: PointConfiguration) -> list[Polynomial]:
    """The two separators of the double point, added to I(Y) to get I(W)."""
    R = Rulings(X)
    return [
        R.mono([2] * t, [3] * (a - 1) + [1]),
        R.mono([3] * t + [1], [2] * (a - 1)),
    ]


def completion_z_extra(t: int, a: int, X: PointConfiguration) -> Polynomial:
    """The separator of the reduced point, added to I(W) to get I(Z)."""
    R = Rulings(X)
    return R.mono([3] * t, [3] * (a - 1))


@dataclass
class CompletionSchemes:
    t: int
    a: int
    missing_point: tuple[int, int]  # Ferrers labels (t+1, a)
    I_Y: Ideal
    I_W: Ideal
    I_Z: Ideal
    inclusions_hold: bool


def completion_schemes(X) -> CompletionSchemes:
    """I(Y) = I^(3) ∩ I(P)^2, I(W) = I^(3) ∩ I(P), I(Z) = I^(3) for P = H_{t+1} ∩ V_a."""
    if not isinstance(X, PointConfiguration):
        X = from_partition(X)
    R, t, a = _require_completion(X)
    row = R.relabeling.row_order[t]
    col = R.relabeling.col_order[a - 1]
    IP = _grid_point_ideal(X, row, col)
    IZ = symbolic_power(X, 3)
    IY = ideal_intersection(IZ, ideal_power(IP, 2))
    IW = ideal_intersection(IZ, IP)
    ok = IY.issubset(IW) and IW.issubset(IZ)
    return CompletionSchemes(t, a, (t + 1, a), IY, IW, IZ, ok)


# -- witness forms -------------------------------------------------------------


def family_i_parameter(lam) -> int | None:
    """t when lam = (lam_1..lam_{t-3}, 3, 2, 1) with lam_i >= t-i+1."""
    parts = as_partition(lam).parts
    t = len(parts)
    if t < 3 or parts[-3:] != (3, 2, 1):
        return None
    if all(parts[i - 1] >= t - i + 1 for i in range(1, t - 2)):
        return t
    return None


def family_ii_parameters(lam) -> tuple[int, int] | None:
    """(t, m) when lam = (t,...,t [m times], t-1, ..., 2, 1) with t >= 3."""
    parts = as_partition(lam).parts
    t = parts[0]
    if t < 3:
        return None
    m = parts.count(t)
    if parts == (t,) * m + tuple(range(t - 1, 0, -1)):
        return t, m
    return None


def family_ii_partition(t: int, m: int) -> Partition:
    return Partition((t,) * m + tuple(range(t - 1, 0, -1)))


@dataclass
class WitnessForm:
    family: str
    partition: Partition
    F: Polynomial
    D: Polynomial
    bidegree: Bidegree
    d_points: list  # Ferrers-labelled (row, col) points where D vanishes
    in_symbolic_cube: bool


def vanishing_11_form(X: PointConfiguration, points: Sequence[tuple[int, int]]) -> Polynomial:
    """Unique (1,1)-form through the given points (original labels), via the nullspace."""
    F = X.field
    rows = []
    for i, j in points:
        P, Q = X.row_coords[i - 1], X.col_coords[j - 1]
        xs = (F(P.a), F(P.b))
        ys = (F(Q.a), F(Q.b))
        rows.append([F.mul(xs[u], ys[w]) for u in (0, 1) for w in (0, 1)])
    basis = nullspace(DenseMatrix(rows, F, ncols=4))
    if len(basis) != 1:
        raise DegenerateCoordinates(f"(1,1)-forms through {points}: nullspace of dimension {len(basis)}")
    v = basis[0]
    mons = [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]
    return Polynomial({m: c for m, c in zip(mons, v)}, F).monic(DEGREVLEX)


def witness_form(family: str, lam=None, *, t: int | None = None, m: int | None = None,
                 config: PointConfiguration | None = None) -> WitnessForm:
    """Explicit element of I^(3) of low bidegree for the two non-equality families.

    family "i":  lam = (lam_1..lam_{t-3}, 3, 2, 1), bidegree (3t-5, 4)
    family "ii": lam = (t^m, t-1, ..., 1), bidegree (3m+3t-8, 4)
    """
    if family == "i":
        if lam is None:
            raise ValueError("family i needs a partition")
        lam = as_partition(lam)
        tt = family_i_parameter(lam)
        if tt is None:
            raise ShapeMismatch(f"({lam}) is not of the form (lam_1..lam_(t-3),3,2,1) with lam_i >= t-i+1")
        k = tt  # rows H_{k-2}, H_{k-1}, H_k carry the 3,2,1 tail
        hexp = [3] * (k - 3) + [2, 1]
        d_rows = (k - 2, k - 1, k)
    elif family == "ii":
        if lam is not None:
            params = family_ii_parameters(lam)
            if params is None:
                raise ShapeMismatch(f"({lam}) is not of the form (t^m, t-1, ..., 1)")
            if (t, m) != (None, None) and (t, m) != params:
                raise ShapeMismatch(f"({lam}) has (t, m) = {params}")
            t, m = params
        if t is None or m is None or t < 3 or m < 1:
            raise ShapeMismatch("family ii needs t >= 3 and m >= 1")
        lam = family_ii_partition(t, m)
        k = m + t - 1  # number of rows
        hexp = [3] * (m + t - 4) + [2, 1]
        d_rows = (k - 2, k - 1, k)
    else:
        raise ValueError("family must be 'i' or 'ii'")
    X = config if config is not None else from_partition(lam)
    R = Rulings(X)
    if R.partition != lam:
        raise ShapeMismatch(f"configuration has partition ({R.partition}), expected ({lam})")
    ferrers_pts = [(d_rows[0], 3), (d_rows[1], 2), (d_rows[2], 1)]
    orig = [(R.relabeling.row_order[r - 1], R.relabeling.col_order[c - 1]) for r, c in ferrers_pts]
    D = vanishing_11_form(X, orig)
    F = R.mono(hexp, [2, 1]) * D
    inside = symbolic_power(X, 3).contains(F)
    return WitnessForm(family, lam, F, D, F.bidegree(), ferrers_pts, inside)
