"""Brute-force reference computations that share no code with the library kernel.

Everything here is per-bidegree linear algebra over ``Fraction`` (or ints mod p)
with a hand-rolled elimination, so agreement with the Groebner machinery is
meaningful evidence.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _reduce(c, p):
    return c % p if p else Fraction(c)


def _inv(c, p):
    return pow(c, p - 2, p) if p else 1 / c


def rank_of(rows, p=0) -> int:
    """Rank of a list of row vectors (dicts col -> value or lists)."""
    rows = [dict(enumerate(r)) if isinstance(r, list) else dict(r) for r in rows]
    rows = [{k: _reduce(v, p) for k, v in r.items() if _reduce(v, p) != 0} for r in rows]
    pivots: dict = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col not in pivots:
                c = _inv(row[col], p)
                pivots[col] = {k: _reduce(v * c, p) for k, v in row.items()}
                r += 1
                break
            piv = pivots[col]
            c = row[col]
            for k, v in piv.items():
                nv = _reduce(row.get(k, 0) - c * v, p)
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def bidegree_basis(a, b):
    return [(i, a - i, j, b - j) for i in range(a + 1) for j in range(b + 1)]


def span_rows(gens, d, p=0):
    """Rows spanning I_d: every generator times every monomial of the right bidegree.

    ``gens`` are dicts {(e0,e1,f0,f1): coeff} of bihomogeneous polynomials.
    """
    basis = bidegree_basis(*d)
    col = {m: k for k, m in enumerate(basis)}
    rows = []
    for g in gens:
        e = next(iter(g))
        ga, gb = e[0] + e[1], e[2] + e[3]
        if ga > d[0] or gb > d[1]:
            continue
        for mu in bidegree_basis(d[0] - ga, d[1] - gb):
            rows.append({col[tuple(x + y for x, y in zip(m, mu))]: c for m, c in g.items()})
    return rows


def ideal_dim(gens, d, p=0) -> int:
    return rank_of(span_rows(gens, d, p), p)


def intersection_dim(gens_i, gens_j, d, p=0) -> int:
    """dim (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d."""
    ri, rj = span_rows(gens_i, d, p), span_rows(gens_j, d, p)
    return rank_of(ri, p) + rank_of(rj, p) - rank_of(ri + rj, p)


def _binom_expand(base, step, e, m, p):
    """Coefficients of s^k, k < m, in (base + s*step)^e."""
    out = []
    for k in range(min(e, m - 1) + 1):
        out.append(_reduce(comb(e, k) * base ** (e - k) * step**k, p))
    return out + [0] * (m - len(out))


def vanishing_conditions(point, d, m, p=0):
    """Linear conditions on bidegree-d coefficients for vanishing to order m at a point.

    ``point`` is ((a0, a1), (b0, b1)): the x-coordinates and y-coordinates.
    Substitute x = P + s*w, y = Q + t*u and require every s^i t^j (i + j < m) to vanish.
    """
    (a0, a1), (b0, b1) = point
    wx = (0, 1) if a0 != 0 else (1, 0)
    wy = (0, 1) if b0 != 0 else (1, 0)
    basis = bidegree_basis(*d)
    conds = {(i, j): [0] * len(basis) for i in range(m) for j in range(m - i)}
    for k, (e0, e1, f0, f1) in enumerate(basis):
        sx0 = _binom_expand(a0, wx[0], e0, m, p)
        sx1 = _binom_expand(a1, wx[1], e1, m, p)
        ty0 = _binom_expand(b0, wy[0], f0, m, p)
        ty1 = _binom_expand(b1, wy[1], f1, m, p)
        sx = [sum(sx0[u] * sx1[i - u] for u in range(i + 1)) for i in range(m)]
        ty = [sum(ty0[u] * ty1[j - u] for u in range(j + 1)) for j in range(m)]
        for (i, j), row in conds.items():
            row[k] = _reduce(sx[i] * ty[j], p)
    return list(conds.values())


def fat_points_dim(points, d, m, p=0) -> int:
    """dim of bidegree-d forms vanishing to order m at every point."""
    rows = []
    for P in points:
        rows += vanishing_conditions(P, d, m, p)
    n = (d[0] + 1) * (d[1] + 1)
    return n - rank_of(rows, p) if rows else n


def config_points(X):
    """Projective coordinates of every point of a PointConfiguration, as Fractions."""
    out = []
    for i, j in X.points:
        P, Q = X.row_coords[i - 1], X.col_coords[j - 1]
        out.append(((Fraction(P.a), Fraction(P.b)), (Fraction(Q.a), Fraction(Q.b))))
    return out


def to_mod_p(points, p):
    if not p:
        return points
    return [tuple(tuple(Fraction(c).numerator * pow(Fraction(c).denominator, p - 2, p) % p for c in v) for v in P)
            for P in points]


def as_dicts(polys):
    """Library Polynomials -> dict form with signed integer / Fraction coefficients."""
    from fatlines.bipoly import unpack

    out = []
    for f in polys:
        F = f.field
        out.append({unpack(m)[:4]: (F.signed(c) if F.p else c) for m, c in f.terms.items()})
    return out
