import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from globalize.algebra import ground_field_algebra
from globalize.bialgebra import h4_idempotent, sweedler_h4
from globalize.exact import GF, QQ, Matrix, Subspace, kernel, kron_vec
from globalize.monoid import NotNormal, SubgroupSpec, alternating_subgroup, cyclic, symmetric
from globalize.pca import (CharDividesN, NotCounital, NotMultiplicative, NotWeaklyCoassociative,
                           ab1_fixture, ab2_fixture, bialgebra_twists, compare_envelope_globalization,
                           enveloping_coaction, global_fixture, globalize_pca, random_perturbation,
                           trivial_fixture, verify_algebraic_pca)
from globalize.schema import builtin_bialgebra
from oracles import h4_weakly_coassociative, integral_of_subgroup

HALF = Fraction(1, 2)


def full_group(G):
    return SubgroupSpec(G, frozenset(range(len(G))))


@pytest.mark.parametrize("alpha", [0, 1])
def test_ab2_values(alpha):
    p = ab2_fixture(alpha)
    cmp = compare_envelope_globalization(p)
    G, E = cmp.globalization, cmp.envelope
    g = G.geometric
    H = p.H
    assert g.e_prime == (HALF, -HALF, 0, -alpha * HALF)
    assert g.ideal.closure == kernel(H.counit)
    assert g.AbulletH.dim == 1
    assert G.Y.space == Subspace.full(QQ, 4)
    f = h4_idempotent(H, alpha)
    assert E.B.space == Subspace.span(QQ, 4, [H.H.unit, f])
    assert cmp.strict and cmp.dims["dimB"] == 2 and cmp.dims["dimY"] == 4
    # j is the inclusion span{1, f} -> H4, and eps_A o j = p
    assert G.kappa @ cmp.j == E.B.inclusion
    assert G.epsilonA @ cmp.j == E.p


@pytest.mark.parametrize("group,normal", [("z2", "full"), ("sym3", "alt3"), ("sym3", "full"), ("z3", "full")])
def test_ab1_values(group, normal):
    G = {"z2": cyclic(2), "z3": cyclic(3), "sym3": symmetric(3)}[group]
    N = alternating_subgroup(G) if normal == "alt3" else full_group(G)
    p = ab1_fixture(G, N)
    t = integral_of_subgroup(sorted(N.members))
    assert p.dA == len(G) // len(N.members)
    cmp = compare_envelope_globalization(p)
    Y, B = cmp.globalization.Y, cmp.envelope.B
    # Y = span{tg (x) g : g in G}; tg is the A-basis vector of the coset of g
    kG = p.H.H
    tvec = tuple(t.get(g, 0) for g in range(len(G)))
    vecs = []
    for g in range(len(G)):
        tg = kG.mul(tvec, kG.basis(g))
        coset = next(a for a in range(p.dA) if kG.mul(tvec, kG.basis(_rep(p, a, G))) == tg)
        vecs.append(kron_vec(p.A.basis(coset), kG.basis(g)))
    assert Y.space == Subspace.span(QQ, p.dA * len(G), vecs)
    assert Y.dim == len(G) and B.space == Y.space and not cmp.strict


def _rep(p, a, G):
    label = p.A.labels[a][1:]
    return G.index(label)


def test_ab1_z2_coaction_is_tg_tensor_tg():
    p = ab1_fixture(cyclic(2), full_group(cyclic(2)))
    assert p.dA == 1
    assert p.coaction.column(0) == (HALF, HALF)


@pytest.mark.parametrize("H", [sweedler_h4(QQ), builtin_bialgebra("group:sym3")])
def test_global_and_trivial(H):
    for p in (global_fixture(H), trivial_fixture(H)):
        cmp = compare_envelope_globalization(p)
        assert cmp.globalization.geometric.ideal.dim == 0
        assert cmp.globalization.Y.dim == cmp.envelope.B.dim == p.dA


def test_finite_field_variants():
    assert compare_envelope_globalization(ab2_fixture(1, GF(5))).dims["dimB"] == 2
    assert compare_envelope_globalization(ab1_fixture(symmetric(3), alternating_subgroup(symmetric(3)), GF(5))).strict is False


def test_fixture_preconditions():
    with pytest.raises(CharDividesN):
        ab1_fixture(cyclic(2), full_group(cyclic(2)), GF(2))
    S3 = symmetric(3)
    with pytest.raises(NotNormal):
        ab1_fixture(S3, SubgroupSpec.from_labels(S3, ["123", "213"]))


def _k_with(h):
    return ground_field_algebra(QQ), sweedler_h4(QQ), Matrix.from_columns(QQ, 4, [h])


def test_named_axiom_failures():
    with pytest.raises(NotMultiplicative):
        verify_algebraic_pca(*_k_with((1, 0, 1, 0)))      # 1 + x is not idempotent
    with pytest.raises(NotCounital):
        verify_algebraic_pca(*_k_with((1, 1, 0, 0)))      # eps(1 + g) = 2
    h = (HALF, HALF, 1, 0)                                 # (1+g)/2 + x
    assert not h4_weakly_coassociative({(0, 0): HALF, (1, 0): HALF, (0, 1): 1})
    with pytest.raises(NotWeaklyCoassociative):
        verify_algebraic_pca(*_k_with(h))


BASES = [ab2_fixture(0), ab2_fixture(1), ab1_fixture(symmetric(3), alternating_subgroup(symmetric(3))),
         global_fixture(sweedler_h4(QQ)), ab1_fixture(cyclic(3), full_group(cyclic(3)))]


@given(st.sampled_from(range(len(BASES))), st.sampled_from([-1, 2, 3, Fraction(1, 2)]))
def test_scaling_the_coaction_breaks_counitality(i, c):
    p = BASES[i]
    with pytest.raises(NotCounital):
        verify_algebraic_pca(p.A, p.H, p.coaction.scale(QQ(c)))


@given(st.sampled_from(range(len(BASES))), st.integers(0, 10**6))
def test_perturbations_globalize_with_same_dimensions(i, seed):
    base = BASES[i]
    ref = globalize_pca(base)
    q = random_perturbation(base, random.Random(seed), bialgebra_twists(base.H))
    G = globalize_pca(q)
    g = G.geometric
    assert G.Y.dim == ref.Y.dim and g.ideal.dim == ref.geometric.ideal.dim
    assert g.e_prime in G.Y.space
    assert G.kappa @ G.vartheta == q.coaction


def test_envelope_alone():
    E = enveloping_coaction(ab2_fixture(0))
    assert [v.name for v in E.verdicts] == ["envelope (a)", "envelope (b)", "envelope (c)",
                                            "p o theta = id, theta o p = e.-"]
