"""Sparse polynomials in k[x0, x1, y0, y1] (plus one elimination variable t).

The ring is bigraded by deg x_i = (1, 0), deg y_i = (0, 1); ``t`` has
bidegree (0, 0) so that the elimination used for intersections keeps every
intermediate polynomial bihomogeneous.

Monomials are packed into a single int, 16 bits per variable with the top
bit of each field kept free as a guard, so that multiplication is integer
addition and divisibility is one subtraction and a mask.  Term orders are
linear functionals on the exponent vector, which makes the sort key of a
product the sum of the sort keys.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .exact import GF, Field, FieldMismatch, PrimeField

VARS = ("x0", "x1", "y0", "y1", "t")
NVARS = 5
_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
MAX_EXP = (1 << (_SHIFT - 1)) - 1
GUARD = sum(1 << (_SHIFT * i + _SHIFT - 1) for i in range(NVARS))
T_MASK = _MASK << (_SHIFT * 4)


class NotBihomogeneous(ValueError):
    pass


class UndefinedBidegree(ValueError):
    pass


# -- packed monomials ---------------------------------------------------------


def pack(exps: Iterable[int]) -> int:
    m = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        m |= e << (_SHIFT * i)
    return m


def unpack(m: int) -> tuple[int, int, int, int, int]:
    return (m & _MASK, (m >> 16) & _MASK, (m >> 32) & _MASK, (m >> 48) & _MASK, (m >> 64) & _MASK)


def divides(a: int, b: int) -> bool:
    """True iff monomial a divides monomial b."""
    return ((b | GUARD) - a) & GUARD == GUARD


def lcm(a: int, b: int) -> int:
    r = 0
    for s in (0, 16, 32, 48, 64):
        ea = (a >> s) & _MASK
        eb = (b >> s) & _MASK
        r |= (ea if ea > eb else eb) << s
    return r


def coprime(a: int, b: int) -> bool:
    return all(((a >> s) & _MASK) == 0 or ((b >> s) & _MASK) == 0 for s in (0, 16, 32, 48, 64))


def mon_bidegree(m: int) -> tuple[int, int]:
    return ((m & _MASK) + ((m >> 16) & _MASK), ((m >> 32) & _MASK) + ((m >> 48) & _MASK))


def mon_str(m: int) -> str:
    parts = []
    for name, e in zip(VARS, unpack(m)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Monomial(NamedTuple):
    x0: int = 0
    x1: int = 0
    y0: int = 0
    y1: int = 0
    t: int = 0

    @classmethod
    def from_packed(cls, m: int) -> "Monomial":
        return cls(*unpack(m))

    @property
    def packed(self) -> int:
        return pack(self)

    @property
    def bidegree(self) -> "Bidegree":
        return Bidegree(self.x0 + self.x1, self.y0 + self.y1)

    @property
    def degree(self) -> int:
        return self.x0 + self.x1 + self.y0 + self.y1

    def __str__(self):
        return mon_str(self.packed)


class Bidegree(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return Bidegree(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return Bidegree(self.a - other[0], self.b - other[1])

    def succeq(self, other) -> bool:
        """Componentwise ``self >= other``."""
        return self.a >= other[0] and self.b >= other[1]

    @property
    def total(self) -> int:
        return self.a + self.b

    def __str__(self):
        return f"({self.a},{self.b})"


def monomials_of_bidegree(d) -> list[Monomial]:
    """All (a+1)(b+1) monomials of bidegree (a, b), degrevlex-descending."""
    a, b = d
    if a < 0 or b < 0:
        return []
    return [Monomial(i, a - i, j, b - j) for i in range(a, -1, -1) for j in range(b, -1, -1)]


# -- term orders --------------------------------------------------------------


class TermOrder:
    """A monomial order given by an integer-valued linear functional.

    ``key(m)`` is larger for larger monomials.  Variables rank
    x0 > x1 > y0 > y1 > t (t last for plain orders, first for ``block``).
    """

    _B = 20  # bit spacing for key fields; exponents < 2^15

    def __init__(self, kind: str):
        B = self._B
        if kind == "degrevlex":
            top = 1 << (5 * B)
            # x0, x1, y0, y1, t -> tie-break on -t, -y1, -y0, -x1, -x0
            w = [top - (1 << (B * i)) for i in range(NVARS)]
        elif kind == "lex":
            w = [1 << (B * (NVARS - 1 - i)) for i in range(NVARS)]
        elif kind == "block":
            top = 1 << (5 * B)
            w = [top - (1 << (B * i)) for i in range(4)] + [1 << (6 * B)]
        else:
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind
        self.weights = tuple(w)

    def key(self, m: int) -> int:
        w = self.weights
        return (
            (m & _MASK) * w[0]
            + ((m >> 16) & _MASK) * w[1]
            + ((m >> 32) & _MASK) * w[2]
            + ((m >> 48) & _MASK) * w[3]
            + ((m >> 64) & _MASK) * w[4]
        )

    def __repr__(self):
        return f"TermOrder({self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __reduce__(self):
        return (get_order, (self.kind,))


_ORDERS: dict[str, TermOrder] = {}


def get_order(kind: str | TermOrder) -> TermOrder:
    if isinstance(kind, TermOrder):
        return kind
    if kind not in _ORDERS:
        _ORDERS[kind] = TermOrder(kind)
    return _ORDERS[kind]


DEGREVLEX = get_order("degrevlex")
LEX = get_order("lex")
BLOCK = get_order("block")


# -- polynomials --------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial: ``{packed monomial: nonzero coefficient}``."""

    __slots__ = ("terms", "field", "_lm", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, field: Field = GF, *, _raw: bool = False):
        self.field = field
        if _raw:
            self.terms = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                if not isinstance(m, int):
                    m = pack(m)
                c = field(c)
                if c != 0:
                    clean[m] = c
            self.terms = clean
        self._lm: dict[str, int] = {}
        self._hash = None

    # constructors
    @classmethod
    def var(cls, name: str, field: Field = GF) -> "Polynomial":
        i = VARS.index(name)
        return cls({1 << (_SHIFT * i): field.one}, field, _raw=True)

    @classmethod
    def constant(cls, c, field: Field = GF) -> "Polynomial":
        c = field(c)
        return cls({0: c} if c != 0 else {}, field, _raw=True)

    @classmethod
    def monomial(cls, exps, coeff=1, field: Field = GF) -> "Polynomial":
        return cls({pack(exps): coeff}, field)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == Polynomial.constant(other, self.field)
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def lm(self, order: TermOrder = DEGREVLEX) -> int:
        """Packed leading monomial."""
        try:
            return self._lm[order.kind]
        except KeyError:
            if not self.terms:
                raise UndefinedBidegree("zero polynomial has no leading term")
            m = max(self.terms, key=order.key)
            self._lm[order.kind] = m
            return m

    def lc(self, order: TermOrder = DEGREVLEX):
        return self.terms[self.lm(order)]

    def leading_monomial(self, order: TermOrder = DEGREVLEX) -> Monomial:
        return Monomial.from_packed(self.lm(order))

    def sorted_terms(self, order: TermOrder = DEGREVLEX) -> list[tuple[Monomial, object]]:
        """Terms as (Monomial, coeff), descending in ``order``."""
        ms = sorted(self.terms, key=order.key, reverse=True)
        return [(Monomial.from_packed(m), self.terms[m]) for m in ms]

    def has_t(self) -> bool:
        return any(m & T_MASK for m in self.terms)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {mon_bidegree(m) for m in self.terms}

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self) -> Bidegree:
        if not self.terms:
            raise UndefinedBidegree("zero polynomial has no bidegree")
        bd = self.bidegrees()
        if len(bd) != 1:
            raise NotBihomogeneous(f"terms of bidegrees {sorted(bd)}")
        return Bidegree(*bd.pop())

    def total_degree(self) -> int:
        return max(sum(mon_bidegree(m)) for m in self.terms)

    # arithmetic
    def _same(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial.constant(other, self.field)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._same(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(out.get(m, F.zero), c)
            if v != 0:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(out, F, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial({m: F.neg(c) for m, c in self.terms.items()}, F, _raw=True)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        other = self._same(other)
        F = self.field
        p = F.p
        out: dict[int, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, F.zero) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c != 0}
        if any(m & GUARD for m in out):
            raise OverflowError("exponent overflow")
        return Polynomial(out, F, _raw=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        F = self.field
        c = F(c)
        if c == 0:
            return Polynomial({}, F, _raw=True)
        return Polynomial({m: F.mul(v, c) for m, v in self.terms.items()}, F, _raw=True)

    def mul_monomial(self, mon: int) -> "Polynomial":
        return Polynomial({m + mon: c for m, c in self.terms.items()}, self.field, _raw=True)

    def monic(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lc(order)))

    def to_field(self, field: Field) -> "Polynomial":
        """Re-read coefficients in another field (Q -> F_p, or integer F_p -> Q)."""
        if field == self.field:
            return self
        if isinstance(self.field, PrimeField) and not isinstance(field, PrimeField):
            return Polynomial({m: self.field.signed(c) for m, c in self.terms.items()}, field)
        return Polynomial(self.terms, field)

    def evaluate(self, point) -> object:
        """Evaluate at ``(x0, x1, y0, y1[, t])`` given as field values."""
        F = self.field
        vals = [F(v) for v in point] + [F.zero] * (NVARS - len(point))
        total = F.zero
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vals, unpack(m)):
                if e:
                    term = F.mul(term, pow(v, e, F.p) if F.p else v**e)
            total = F.add(total, term)
        return total

    # printing
    def to_str(self, order: TermOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        F = self.field
        out = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = F.signed(self.terms[m])
            neg = c < 0
            a = -c if neg else c
            ms = mon_str(m)
            if ms == "1":
                body = str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{a}*{ms}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, {self.field!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(x0|x1|y0|y1|t)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str, field: Field = GF) -> Polynomial:
    """Parse the printer's format, e.g. ``x0^2*x1*y0 - 3*y0*y1``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return Polynomial({}, field)
    pos = 0
    terms: dict[int, object] = {}
    for mt in _TERM_RE.finditer(s):
        if mt.start() != pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        pos = mt.end()
        sign, body = mt.group(1), mt.group(2)
        if sign is None and mt.start() != 0:
            raise ValueError(f"missing operator in {text!r}")
        coeff = Fraction(1)
        exps = [0] * NVARS
        for factor in body.split("*"):
            if _COEFF_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            mf = _FACTOR_RE.match(factor)
            if not mf:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            exps[VARS.index(mf.group(1))] += int(mf.group(2) or 1)
        if sign == "-":
            coeff = -coeff
        m = pack(exps)
        terms[m] = field.add(terms.get(m, field.zero), field(coeff))
    if pos != len(s):
        raise ValueError(f"trailing input in {text!r}")
    return Polynomial(terms, field)


def product(polys: Iterable[Polynomial], field: Field = GF) -> Polynomial:
    out = Polynomial.constant(1, field)
    for f in polys:
        out = out * f
    return out


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def bidegree_of(p: Polynomial) -> Bidegree:
    return p.bidegree()
