"""Buchberger's algorithm and the ideal operations built on it.

The kernel works on packed monomials (see :mod:`fatlines.bipoly`) and raw
coefficients.  Pairs are chosen by the normal strategy (smallest lcm in the
active order) and pruned with the Gebauer-Moeller criteria, which include
Buchberger's coprime criterion.  Input generators may be tagged with a block
id: pairs inside a block are skipped, which is valid when each block is
already a Groebner basis of the ideal it generates (used by the elimination
step of :func:`ideal_intersection`).
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, Sequence

from .bipoly import (
    BLOCK,
    DEGREVLEX,
    GUARD,
    T_MASK,
    Polynomial,
    TermOrder,
    coprime,
    divides,
    get_order,
    lcm,
    mon_bidegree,
    pack,
)
from .exact import GF, Field, FieldMismatch


class ZeroIdeal(ValueError):
    pass


_T = pack((0, 0, 0, 0, 1))

# An internal basis element: (lm, lm_key, tail) with tail a list of
# (monomial, coeff, key) and implicit leading coefficient 1.


def _to_internal(terms: dict, order: TermOrder, F: Field):
    key = order.key
    lm = max(terms, key=key)
    inv = F.inv(terms[lm])
    p = F.p
    if p:
        tail = [(m, c * inv % p, key(m)) for m, c in terms.items() if m != lm]
    else:
        tail = [(m, c * inv, key(m)) for m, c in terms.items() if m != lm]
    return lm, key(lm), tail


class _Reducer:
    """Active reducer set with a divisor lookup cache."""

    def __init__(self, order: TermOrder, F: Field):
        self.order = order
        self.F = F
        self.lms: list[int] = []
        self.lmkeys: list[int] = []
        self.tails: list[list] = []
        self._cache: dict[int, int] = {}

    def set_basis(self, elems):
        self.lms = [e[0] for e in elems]
        self.lmkeys = [e[1] for e in elems]
        self.tails = [e[2] for e in elems]
        self._cache = {}

    def append(self, elem):
        self.lms.append(elem[0])
        self.lmkeys.append(elem[1])
        self.tails.append(elem[2])

    def find(self, m: int) -> int:
        """Index of an element whose lm divides m, or -1."""
        cache = self._cache
        lms = self.lms
        c = cache.get(m)
        if c is not None:
            if c >= 0:
                return c
            start = -c - 1
        else:
            start = 0
        mg = m | GUARD
        for i in range(start, len(lms)):
            if (mg - lms[i]) & GUARD == GUARD:
                cache[m] = i
                return i
        cache[m] = -len(lms) - 1
        return -1

    def reduce(self, f: dict, full: bool = True) -> dict:
        """Normal form of ``f`` (consumed).  With ``full=False`` stop at the
        first irreducible term (top reduction only)."""
        key = self.order.key
        heap = [(-key(m), m) for m in f]
        heapq.heapify(heap)
        pop = heapq.heappop
        push = heapq.heappush
        rem = {}
        lmkeys = self.lmkeys
        tails = self.tails
        lms = self.lms
        find = self.find
        p = self.F.p
        while heap:
            nk, m = pop(heap)
            c = f.pop(m)
            if not c:
                continue
            i = find(m)
            if i < 0:
                rem[m] = c
                if not full:
                    for k, mm in heap:
                        v = f.get(mm)
                        if v:
                            rem[mm] = v
                    return rem
                continue
            q = m - lms[i]
            kq = -nk - lmkeys[i]
            get = f.get
            if p:
                for gm, gc, gk in tails[i]:
                    nm = gm + q
                    old = get(nm)
                    if old is None:
                        f[nm] = -c * gc % p
                        push(heap, (-(gk + kq), nm))
                    else:
                        f[nm] = (old - c * gc) % p
            else:
                for gm, gc, gk in tails[i]:
                    nm = gm + q
                    old = get(nm)
                    if old is None:
                        f[nm] = -c * gc
                        push(heap, (-(gk + kq), nm))
                    else:
                        f[nm] = old - c * gc
        return rem


def _spoly(a, b, lab: int):
    """S-polynomial of two monic internal elements (leading terms cancel)."""
    qa = lab - a[0]
    qb = lab - b[0]
    out: dict = {}
    for m, c, _ in a[2]:
        out[m + qa] = c
    for m, c, _ in b[2]:
        nm = m + qb
        out[nm] = out.get(nm, 0) - c
    return out


def _normalize(d: dict, F: Field) -> dict:
    p = F.p
    if p:
        return {m: c % p for m, c in d.items() if c % p}
    return {m: c for m, c in d.items() if c != 0}


def _gb_internal(inputs: Sequence[tuple[dict, object]], order: TermOrder, F: Field):
    """Groebner basis (not reduced) of the given raw term dicts.

    ``inputs`` holds (terms, block_id); block_id None means untagged.
    Returns the list of active internal elements.
    """
    store = []  # internal elements
    blocks = []
    G: list[int] = []
    B: dict[tuple[int, int], int] = {}
    heap: list = []
    red = _Reducer(order, F)
    key = order.key

    def update(h: int):
        nonlocal G
        lh = store[h][0]
        bh = blocks[h]
        C = [(g, lcm(lh, store[g][0])) for g in G]
        D = []
        for idx, (g1, l1) in enumerate(C):
            if coprime(lh, store[g1][0]):
                D.append((g1, l1, True))
                continue
            keep = True
            for g2, l2 in itertools.islice(C, idx + 1, None):
                if divides(l2, l1):
                    keep = False
                    break
            if keep:
                for g2, l2, _ in D:
                    if divides(l2, l1):
                        keep = False
                        break
            if keep:
                D.append((g1, l1, False))
        for pair, l12 in list(B.items()):
            if divides(lh, l12):
                g1, g2 = pair
                if lcm(store[g1][0], lh) != l12 and lcm(store[g2][0], lh) != l12:
                    del B[pair]
        for g, l, cop in D:
            if cop:
                continue
            if bh is not None and blocks[g] == bh:
                continue
            B[(g, h)] = l
            heapq.heappush(heap, (key(l), g, h))
        newG = [g for g in G if not divides(lh, store[g][0])]
        if len(newG) != len(G):
            G = newG + [h]
            red.set_basis([store[g] for g in G])
        else:
            G.append(h)
            red.append(store[h])

    # inputs: reduce nothing up front when blocks are given (they are GBs)
    for terms, bid in inputs:
        if not terms:
            continue
        if bid is None and G:
            terms = red.reduce(dict(terms))
            if not terms:
                continue
        store.append(_to_internal(terms, order, F))
        blocks.append(bid)
        update(len(store) - 1)

    while heap:
        _, i, j = heapq.heappop(heap)
        l = B.pop((i, j), None)
        if l is None:
            continue
        s = _normalize(_spoly(store[i], store[j], l), F)
        if not s:
            continue
        r = red.reduce(s)
        if not r:
            continue
        store.append(_to_internal(r, order, F))
        blocks.append(None)
        update(len(store) - 1)

    return [store[g] for g in G]


def _reduce_basis(elems, order: TermOrder, F: Field) -> list[Polynomial]:
    """Minimalise and inter-reduce; result sorted by leading monomial, ascending."""
    elems = sorted(elems, key=lambda e: e[1])
    minimal = []
    for e in elems:
        if not any(divides(o[0], e[0]) for o in minimal):
            minimal.append(e)
    red = _Reducer(order, F)
    out = []
    for i, e in enumerate(minimal):
        red.set_basis(minimal[:i] + minimal[i + 1 :])
        tail = red.reduce({m: c for m, c, _ in e[2]})
        tail[e[0]] = F.one
        out.append(Polynomial(tail, F, _raw=True))
    return out


def _check_field(polys) -> Field:
    fields = {f.field for f in polys}
    if len(fields) > 1:
        raise FieldMismatch(f"mixed fields {fields}")
    return fields.pop() if fields else GF


def buchberger(gens: Iterable[Polynomial], order: TermOrder | str = DEGREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of (gens): monic, sorted by ascending leading term."""
    order = get_order(order)
    gens = [g for g in gens]
    F = _check_field(gens)
    nz = [g for g in gens if g]
    if not nz:
        raise ZeroIdeal("all generators are zero")
    nz.sort(key=lambda g: order.key(g.lm(order)))
    elems = _gb_internal([(dict(g.terms), None) for g in nz], order, F)
    return _reduce_basis(elems, order, F)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | str = DEGREVLEX) -> Polynomial:
    """Remainder of f on division by G (full reduction, greedy divisor choice)."""
    order = get_order(order)
    G = [g for g in G if g]
    if not G:
        raise ValueError("empty divisor list")
    F = _check_field([f, *G])
    red = _Reducer(order, F)
    red.set_basis([_to_internal(g.terms, order, F) for g in G])
    return Polynomial(red.reduce(dict(f.terms)), F, _raw=True)


class Ideal:
    """An ideal of k[x0,x1,y0,y1] with its reduced Groebner bases cached per order."""

    def __init__(self, generators: Iterable[Polynomial], field: Field | None = None):
        gens = tuple(generators)
        if field is None:
            field = _check_field(gens)
        elif gens and _check_field(gens) != field:
            raise FieldMismatch("generator field differs from ideal field")
        self.field = field
        self.generators = tuple(g for g in gens if g)
        self._gb: dict[str, tuple[Polynomial, ...]] = {}

    @classmethod
    def from_groebner(cls, gb: Sequence[Polynomial], order: TermOrder | str = DEGREVLEX) -> "Ideal":
        I = cls(gb)
        I._gb[get_order(order).kind] = tuple(gb)
        return I

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __len__(self):
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def groebner(self, order: TermOrder | str = DEGREVLEX) -> tuple[Polynomial, ...]:
        order = get_order(order)
        gb = self._gb.get(order.kind)
        if gb is None:
            gb = tuple(buchberger(self.generators, order))
            self._gb[order.kind] = gb
        return gb

    def contains(self, f: Polynomial, order: TermOrder | str = DEGREVLEX) -> bool:
        if not f:
            return True
        if self.is_zero():
            return False
        return not normal_form(f, self.groebner(order), order)

    __contains__ = contains

    def reduce(self, f: Polynomial, order: TermOrder | str = DEGREVLEX) -> Polynomial:
        return normal_form(f, self.groebner(order), order)

    def issubset(self, other: "Ideal", order: TermOrder | str = DEGREVLEX) -> bool:
        return all(other.contains(g, order) for g in self.generators)

    def equals(self, other: "Ideal", order: TermOrder | str = DEGREVLEX) -> bool:
        return ideal_equal(self, other, order)

    def __add__(self, other: "Ideal") -> "Ideal":
        if isinstance(other, Polynomial):
            return Ideal(self.generators + (other,), self.field)
        return Ideal(self.generators + other.generators, self.field)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(_dedupe(f * g for f in self.generators for g in other.generators), self.field)

    def power(self, m: int) -> "Ideal":
        return ideal_power(self, m)

    def intersect(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def is_bihomogeneous(self) -> bool:
        return all(g.is_bihomogeneous() for g in self.generators)

    def to_field(self, field: Field) -> "Ideal":
        return Ideal([g.to_field(field) for g in self.generators], field)


def _dedupe(polys: Iterable[Polynomial]) -> list[Polynomial]:
    seen = set()
    out = []
    for f in polys:
        if f and f not in seen:
            seen.add(f)
            out.append(f)
    return out


def contains(I: Ideal, f: Polynomial, order: TermOrder | str = DEGREVLEX) -> bool:
    return I.contains(f, order)


def ideal_power(I: Ideal, m: int) -> Ideal:
    """I^m generated by the m-fold products taken over multisets of generators."""
    if m < 1:
        raise ValueError("power must be >= 1 (the unit ideal is not modelled)")
    if m == 1:
        return I
    gens = I.generators
    prods = []
    # cache partial products along the combination prefix
    partial: dict[tuple[int, ...], Polynomial] = {}
    for combo in itertools.combinations_with_replacement(range(len(gens)), m):
        prefix = combo[:-1]
        base = partial.get(prefix)
        if base is None:
            base = gens[prefix[0]]
            for k in prefix[1:]:
                base = base * gens[k]
            partial[prefix] = base
        prods.append(base * gens[combo[-1]])
    return Ideal(_dedupe(prods), I.field)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t·I + (1 - t)·J (block order).

    The result is returned with its degrevlex reduced Groebner basis cached.
    """
    if I.field != J.field:
        raise FieldMismatch("ideals over different fields")
    F = I.field
    if I.is_zero() or J.is_zero():
        return Ideal([], F)
    gi = I.groebner(DEGREVLEX)
    gj = J.groebner(DEGREVLEX)
    if any(g.has_t() for g in gi + gj):
        raise ValueError("inputs must not involve the elimination variable")
    p = F.p
    inputs = []
    for g in gi:
        inputs.append(({m + _T: c for m, c in g.terms.items()}, 0))
    for g in gj:
        # (t - 1)·g, monic in the block order when g is monic
        d = {}
        for m, c in g.terms.items():
            d[m + _T] = c
            d[m] = (-c) % p if p else -c
        inputs.append((d, 1))
    elems = _gb_internal(inputs, BLOCK, F)
    free = []
    for lm, _, tail in elems:
        if not lm & T_MASK:
            terms = {m: c for m, c, _ in tail}
            terms[lm] = F.one
            free.append(_to_internal(terms, DEGREVLEX, F))
    gb = _reduce_basis(free, DEGREVLEX, F)
    return Ideal.from_groebner(gb, DEGREVLEX)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    """Left fold of pairwise intersections."""
    if not ideals:
        raise ValueError("nothing to intersect")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_intersection(acc, J)
    return acc


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder | str = DEGREVLEX) -> bool:
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    return I.groebner(order) == J.groebner(order)


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder | str = DEGREVLEX) -> bool:
    """Check every S-polynomial reduces to zero (independent of the kernel's criteria)."""
    order = get_order(order)
    G = [g for g in G if g]
    for f, g in itertools.combinations(G, 2):
        l = lcm(f.lm(order), g.lm(order))
        sf = f.mul_monomial(l - f.lm(order)).scale(f.field.inv(f.lc(order)))
        sg = g.mul_monomial(l - g.lm(order)).scale(g.field.inv(g.lc(order)))
        if normal_form(sf - sg, G, order):
            return False
    return True


def is_reduced_groebner_basis(G: Sequence[Polynomial], order: TermOrder | str = DEGREVLEX) -> bool:
    order = get_order(order)
    if not is_groebner_basis(G, order):
        return False
    lms = [g.lm(order) for g in G]
    for g, l in zip(G, lms):
        if g.lc(order) != g.field.one:
            return False
        others = [o for o in lms if o != l]
        if any(divides(o, m) for o in others for m in g.terms):
            return False
    return True


def bidegree_components(f: Polynomial) -> dict[tuple[int, int], Polynomial]:
    comps: dict[tuple[int, int], dict] = {}
    for m, c in f.terms.items():
        comps.setdefault(mon_bidegree(m), {})[m] = c
    return {d: Polynomial(t, f.field, _raw=True) for d, t in comps.items()}
