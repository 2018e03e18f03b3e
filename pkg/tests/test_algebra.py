from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from globalize.algebra import (AlgebraError, BadUnit, NotAssociative, group_algebra, is_algebra_map,
                               is_subalgebra, matrix_algebra, quotient_algebra, subalgebra_closure,
                               subalgebra_structure, tensor_algebra, two_sided_ideal, validate_algebra)
from globalize.exact import QQ, Matrix, Subspace
from globalize.monoid import cyclic, symmetric
from oracles import integral_of_subgroup

S3 = symmetric(3)
kS3 = group_algebra(S3, QQ)
coeffs = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


@given(coeffs, coeffs, coeffs)
def test_group_algebra_is_associative(a, b, c):
    assert kS3.mul(kS3.mul(a, b), c) == kS3.mul(a, kS3.mul(b, c))
    assert kS3.mul(kS3.unit, a) == tuple(Fraction(x) for x in a)


def test_integral_is_central_idempotent():
    members = [g for g in range(6) if S3.elements[g] in ("123", "231", "312")]
    t_dict = integral_of_subgroup(members)
    t = tuple(t_dict.get(g, 0) for g in range(6))
    assert kS3.mul(t, t) == t
    assert all(kS3.mul(t, kS3.basis(g)) == kS3.mul(kS3.basis(g), t) for g in range(6))


def test_tensor_algebra_associative_up_to_reindexing():
    A, B, C = group_algebra(cyclic(2), QQ), matrix_algebra(2, QQ), group_algebra(cyclic(3), QQ)
    left = tensor_algebra(tensor_algebra(A, B), C)
    right = tensor_algebra(A, tensor_algebra(B, C))
    # both put e_a (x) e_b (x) e_c at (a*dB + b)*dC + c, so the constants agree verbatim
    assert left.mult == right.mult and left.unit == right.unit


def test_matrix_algebra_ideal_is_everything():
    M2 = matrix_algebra(2, QQ)
    assert two_sided_ideal(M2, [M2.basis(0)]).dim == 4


def test_quotient_by_augmentation_difference():
    kZ2 = group_algebra(cyclic(2), QQ)
    I = two_sided_ideal(kZ2, [(1, -1)])
    Q, pi = quotient_algebra(kZ2, I)
    assert Q.dim == 1
    assert is_algebra_map(pi, kZ2, Q)


def test_subalgebra_closure_and_structure():
    f = (Fraction(1, 2), Fraction(1, 2), 0, 0, 0, 0)
    S = subalgebra_closure(kS3, [f])
    assert S.dim == 2 and is_subalgebra(kS3, S)
    sub = subalgebra_structure(kS3, S)
    inc = Matrix.from_columns(QQ, 6, list(S.basis))
    assert is_algebra_map(inc, sub, kS3)
    assert not is_subalgebra(kS3, Subspace.span(QQ, 6, [f]))


def test_bad_constants_are_named():
    with pytest.raises(NotAssociative):
        # unit e0, aa = b, ba = b, ab = 0: (aa)a = b but a(aa) = 0
        unital = {(0, j): {j: 1} for j in range(3)} | {(i, 0): {i: 1} for i in range(3)}
        validate_algebra(QQ, 3, unital | {(1, 1): {2: 1}, (2, 1): {2: 1}}, [1, 0, 0])
    with pytest.raises(BadUnit):
        validate_algebra(QQ, 2, {(0, 0): {0: 1}, (1, 1): {1: 1}}, [1, 0])
    with pytest.raises(AlgebraError):
        validate_algebra(QQ, 1, {(0, 3): {0: 1}}, [1])
