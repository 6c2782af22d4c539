"""Exact coefficient fields and small dense linear algebra.

Two backends are provided: the prime field F_p (default p = 32003) and the
rationals.  Polynomials and matrices store *raw* values (``int`` in
``[0, p)`` for F_p, :class:`fractions.Fraction` for Q) and carry the field
object alongside; :class:`FieldScalar` is the user-facing wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = 32003


class DivisionByZero(ZeroDivisionError):
    pass


class FieldMismatch(ValueError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError(f"primality of {n} is not certified by the fixed bases")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field F_p; elements are ints in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def __call__(self, value) -> int:
        """Coerce an int or Fraction into the field."""
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def signed(self, a: int) -> int:
        """Symmetric representative in ``(-p/2, p/2]``, used for printing."""
        return a - self.p if a > self.p // 2 else a


class RationalField:
    """The field Q; elements are reduced Fractions with positive denominator."""

    zero = Fraction(0)
    one = Fraction(1)
    p = 0

    @property
    def char(self) -> int:
        return 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (RationalField, ())

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    def neg(self, a):
        return -a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def signed(self, a):
        return a


Field = PrimeField | RationalField

GF = PrimeField(DEFAULT_PRIME)
QQ = RationalField()


def field_from_spec(spec: str | int) -> Field:
    """``"q"``/``"Q"``/``"rationals"`` gives QQ; anything else is read as a prime."""
    if isinstance(spec, str) and spec.lower() in ("q", "qq", "rationals", "rational"):
        return QQ
    return PrimeField(int(spec))


@dataclass(frozen=True)
class FieldScalar:
    value: int | Fraction
    field: Field

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _check(self, other) -> "FieldScalar":
        if not isinstance(other, FieldScalar):
            return FieldScalar(other, self.field)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return FieldScalar(self.field.add(self.value, o.value), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return FieldScalar(self.field.sub(self.value, o.value), self.field)

    def __mul__(self, other):
        o = self._check(other)
        return FieldScalar(self.field.mul(self.value, o.value), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.field.neg(self.value), self.field)

    def __truediv__(self, other):
        o = self._check(other)
        return self * field_inverse(o)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field.signed(self.value)} in {self.field!r}"


def field_inverse(a: FieldScalar) -> FieldScalar:
    return FieldScalar(a.field.inv(a.value), a.field)


class DenseMatrix:
    """Row-major matrix of raw field values."""

    def __init__(self, rows: Sequence[Sequence], field: Field = GF, ncols: int | None = None):
        self.field = field
        self.entries = [[field(v) for v in r] for r in rows]
        self.rows = len(self.entries)
        if ncols is None:
            if not self.entries:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(self.entries[0])
        self.cols = ncols
        if any(len(r) != ncols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, field: Field = GF) -> "DenseMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, r: int, c: int, field: Field = GF) -> "DenseMatrix":
        return cls([[0] * c for _ in range(r)], field, ncols=c)

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols} over {self.field!r})"


def _rref_mod_p(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p, vectorised with numpy."""
    if not rows:
        return [], []
    A = np.array(rows, dtype=np.int64) % p
    pivots = []
    r = 0
    nrows = A.shape[0]
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r].tolist(), pivots


def _rref_generic(rows: list[list], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(v, inv) for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rref(M: DenseMatrix) -> tuple[list[list], list[int]]:
    """Return (nonzero rows of the RREF, pivot columns)."""
    F = M.field
    if isinstance(F, PrimeField) and F.p < 2**31:
        return _rref_mod_p(M.entries, M.cols, F.p)
    return _rref_generic(M.entries, M.cols, F)


def rank(M: DenseMatrix) -> int:
    return len(rref(M)[1])


def nullspace(M: DenseMatrix) -> list[list]:
    """Basis of ``{v : M v = 0}`` read off the RREF.

    One vector per free column c, with 1 in position c and zeros in the
    other free positions; the basis is therefore canonical.
    """
    F = M.field
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for c in range(M.cols):
        if c in pivset:
            continue
        v = [F.zero] * M.cols
        v[c] = F.one
        for row, pc in zip(R, pivots):
            if row[c] != 0:
                v[pc] = F.neg(F(row[c]))
        basis.append(v)
    return basis


def matvec(M: DenseMatrix, v: Iterable) -> list:
    F = M.field
    v = list(v)
    out = []
    for row in M.entries:
        s = F.zero
        for a, b in zip(row, v):
            s = F.add(s, F.mul(a, b))
        out.append(s)
    return out
