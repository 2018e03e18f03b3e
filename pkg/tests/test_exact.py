from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from globalize.exact import (GF, QQ, Field, FieldError, Matrix, Subspace, kernel, matrix_from_json,
                             matrix_to_json, rref)
from oracles import nullspace_size_mod_p, rank_by_minors

small = st.integers(-4, 4)


def matrices(nr, nc):
    return st.lists(st.lists(small, min_size=nc, max_size=nc), min_size=nr, max_size=nr)


def vectors(n, count):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=count)


@given(matrices(5, 7))
def test_rref_is_idempotent(rows):
    R, piv = rref(Matrix(QQ, 5, 7, rows))
    R2, piv2 = rref(R)
    assert R2 == R and piv2 == piv


@given(matrices(3, 4))
def test_rank_matches_minors(rows):
    assert Matrix(QQ, 3, 4, rows).rank() == rank_by_minors(rows)


@given(matrices(3, 4), st.sampled_from([2, 3, 5]))
def test_kernel_size_mod_p(rows, p):
    F = GF(p)
    K = kernel(Matrix(F, 3, 4, rows))
    assert p ** K.dim == nullspace_size_mod_p(rows, p)


@given(matrices(4, 6))
def test_rank_nullity(rows):
    m = Matrix(QQ, 4, 6, rows)
    K = kernel(m)
    assert m.rank() + K.dim == 6
    assert all(not any(m.apply(v)) for v in K.basis)


@given(vectors(5, 4), vectors(5, 4))
def test_modular_law(a, b):
    A = Subspace.span(QQ, 5, a)
    B = Subspace.span(QQ, 5, b)
    assert A.dim + B.dim == (A + B).dim + (A & B).dim
    assert A & B <= A and A & B <= B and A <= A + B


@given(vectors(4, 4), st.lists(small, min_size=4, max_size=4))
def test_span_is_canonical(vecs, shift):
    # adding a multiple of one generator to another does not change the RREF basis
    S = Subspace.span(QQ, 4, vecs)
    if vecs:
        moved = [vecs[0]] + [[x + 3 * y for x, y in zip(v, vecs[0])] for v in vecs[1:]]
        assert Subspace.span(QQ, 4, moved) == S
    assert (shift in S) == (Subspace.span(QQ, 4, vecs + [shift]).dim == S.dim)


def test_coordinates_round_trip():
    S = Subspace.span(QQ, 3, [[1, 2, 3], [0, 1, 1]])
    v = (Fraction(2), Fraction(7), Fraction(9))
    assert S.from_coordinates(S.coordinates(v)) == v
    with pytest.raises(ValueError):
        S.coordinates((0, 0, 1))


def test_scalar_strings():
    assert QQ.fmt(Fraction(-6, 4)) == "-3/2"
    assert QQ.fmt(2) == "2/1"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    F5 = GF(5)
    assert F5.fmt(F5(7)) == "2 mod 5"
    assert F5.parse("2 mod 5") == F5(2)
    with pytest.raises(FieldError):
        F5.parse("2 mod 7")
    with pytest.raises(FieldError):
        Field.from_name("Fp:6")
    assert Field.from_name("Q") == QQ and Field.from_name("Fp:3") == GF(3)


def test_fp_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(1) / F(3) == F(5)
    assert F.inverse_of_int(2) == F(4)
    with pytest.raises(FieldError):
        F.inverse_of_int(14)


def test_matrix_json_round_trip():
    m = Matrix(QQ, 2, 2, [[Fraction(1, 2), 0], [-1, 3]])
    assert matrix_from_json(QQ, matrix_to_json(m)) == m


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_kron_mixed_product(a, b, c):
    A, B, C = Matrix(QQ, 2, 3, a), Matrix(QQ, 3, 2, b), Matrix(QQ, 2, 2, c)
    I = Matrix.identity(QQ, 2)
    assert (A @ B).kron(C @ I) == A.kron(C) @ B.kron(I)
