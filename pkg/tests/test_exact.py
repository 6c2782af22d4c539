from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fatlines.exact import (
    GF,
    QQ,
    DenseMatrix,
    DivisionByZero,
    FieldMismatch,
    FieldScalar,
    PrimeField,
    field_from_spec,
    field_inverse,
    matvec,
    nullspace,
    rank,
    rref,
)

P = GF.p


def test_prime_field_basics():
    assert GF(-1) == P - 1
    assert GF(Fraction(1, 2)) == (P + 1) // 2
    assert GF.signed(P - 3) == -3
    assert GF.mul(GF.inv(7), 7) == 1
    with pytest.raises(DivisionByZero):
        GF.inv(0)
    with pytest.raises(DivisionByZero):
        GF(Fraction(1, P))


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        PrimeField(32001)


def test_field_from_spec():
    assert field_from_spec("q") is QQ
    assert field_from_spec("32003") == GF
    assert field_from_spec(7) == PrimeField(7)


def test_scalar_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        FieldScalar(1, GF) + FieldScalar(1, PrimeField(7))


@given(st.integers(min_value=1, max_value=P - 1))
def test_inverse_mod_p(a):
    x = FieldScalar(a, GF)
    assert (x * field_inverse(x)).value == 1


@given(st.fractions().filter(lambda q: q != 0))
def test_inverse_rational(q):
    x = FieldScalar(q, QQ)
    assert (x * field_inverse(x)).value == 1


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        field_inverse(FieldScalar(0, QQ))


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_dim=12):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return rows, c


@settings(max_examples=200)
@given(matrices(), st.sampled_from([GF, QQ]))
def test_rank_nullity(mc, F):
    rows, c = mc
    M = DenseMatrix(rows, F)
    basis = nullspace(M)
    assert rank(M) + len(basis) == c
    for v in basis:
        assert all(x == 0 for x in matvec(M, v))


@settings(max_examples=200)
@given(matrices())
def test_rank_matches_oracle(mc):
    rows, c = mc
    assert rank(DenseMatrix(rows, GF)) == oracles.rank_of(rows, P)
    assert rank(DenseMatrix(rows, QQ)) == oracles.rank_of(rows, 0)


@settings(max_examples=200)
@given(matrices())
def test_rank_mod_p_never_exceeds_rational_rank(mc):
    rows, _ = mc
    assert rank(DenseMatrix(rows, GF)) <= rank(DenseMatrix(rows, QQ))


def test_rank_agrees_across_fields_on_seeded_corpus():
    import random

    rng = random.Random(0)
    for _ in range(200):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        rows = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        assert rank(DenseMatrix(rows, GF)) == rank(DenseMatrix(rows, QQ))


def test_rref_shape():
    R, piv = rref(DenseMatrix([[2, 4, 2], [1, 2, 3]], QQ))
    assert piv == [0, 2]
    assert R[0] == [1, 2, 0] and R[1] == [0, 0, 1]


def test_rref_large_prime_uses_generic_path():
    F = PrimeField(2**61 - 1)
    M = DenseMatrix([[1, 2], [3, 4]], F)
    assert rank(M) == 2
