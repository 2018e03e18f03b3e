"""Partial comodule algebras over finite-dimensional bialgebras.

A coaction A -> A(x)H is a matrix of shape (dimA*dimH, dimA) whose column i is
delta(e_i); the pure tensor e_i (x) h_k sits at index i*dimH + k. Three-fold
tensors A(x)H(x)H use (i*dimH + k)*dimH + l.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .algebra import (FinDimAlgebra, IdealPresentation, ground_field_algebra,
                      is_algebra_map, is_subalgebra, quotient_algebra, subalgebra_closure,
                      subalgebra_structure, tensor_algebra, two_sided_ideal)
from .bialgebra import (Bialgebra, group_bialgebra, h4_idempotent, slice_leg,
                        sweedler_h4)
from .exact import QQ, Field, Matrix, Subspace, kernel, kron_vec, unit_vector, vsub
from .monoid import FiniteMonoid, SubgroupSpec, is_group, quotient_group
from .report import Verdict, failed, passed


class PCAError(ValueError):
    pass


class NotMultiplicative(PCAError):
    def __init__(self, i, j):
        super().__init__(f"delta(e_{i} e_{j}) != delta(e_{i}) delta(e_{j})")
        self.witness = (i, j)


class NotCounital(PCAError):
    def __init__(self, i):
        super().__init__(f"(A(x)eps) delta(e_{i}) != e_{i}")
        self.witness = i


class NotWeaklyCoassociative(PCAError):
    def __init__(self, i):
        super().__init__(f"weak coassociativity fails on e_{i}")
        self.witness = i


class NotIdempotent(PCAError):
    pass


class NotSubalgebra(PCAError):
    pass


class NotCoactionStable(PCAError):
    pass


class PushoutFailed(PCAError):
    pass


class EnvelopeAxiomFailed(PCAError):
    def __init__(self, axiom, witness=None):
        super().__init__(f"envelope axiom {axiom} fails (witness {witness})")
        self.axiom = axiom
        self.witness = witness


class ComparisonFailed(PCAError):
    def __init__(self, identity, witness=None):
        super().__init__(f"comparison identity {identity} fails (witness {witness})")
        self.identity = identity
        self.witness = witness


class CharDividesN(PCAError):
    pass


# -- data ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlgebraicPCA:
    A: FinDimAlgebra
    H: Bialgebra
    coaction: Matrix

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def dA(self) -> int:
        return self.A.dim

    @property
    def dH(self) -> int:
        return self.H.dim

    @cached_property
    def AH(self) -> FinDimAlgebra:
        return tensor_algebra(self.A, self.H.H)

    @cached_property
    def A_Delta(self) -> Matrix:
        """A(x)Delta : A(x)H -> A(x)H(x)H."""
        return Matrix.identity(self.field, self.dA).kron(self.H.comult)

    @cached_property
    def A_eps(self) -> Matrix:
        return Matrix.identity(self.field, self.dA).kron(self.H.counit)

    @cached_property
    def delta_one(self) -> tuple:
        return self.coaction.apply(self.A.unit)

    def delta(self, a) -> tuple:
        return self.coaction.apply(a)


def verify_algebraic_pca(A: FinDimAlgebra, H: Bialgebra, coaction: Matrix) -> AlgebraicPCA:
    if A.field != H.field:
        raise PCAError("algebra and bialgebra live over different fields")
    if coaction.shape != (A.dim * H.dim, A.dim):
        raise PCAError(f"coaction has shape {coaction.shape}, expected {(A.dim * H.dim, A.dim)}")
    p = AlgebraicPCA(A, H, coaction)
    # counitality first: it is the cheapest check and pins down rescaled coactions
    if p.A_eps @ coaction != Matrix.identity(A.field, A.dim):
        bad = next(i for i, c in enumerate((p.A_eps @ coaction).columns()) if c != A.basis(i))
        raise NotCounital(bad)
    cols = coaction.columns()
    AH = p.AH
    for i in range(A.dim):
        for j in range(A.dim):
            if coaction.apply(A.basis_mul(i, j)) != AH.mul(cols[i], cols[j]):
                raise NotMultiplicative(i, j)
    lhs = coaction.kron(Matrix.identity(A.field, H.dim)) @ coaction
    twist = AH.left_mult_matrix(p.delta_one).kron(Matrix.identity(A.field, H.dim))
    rhs = twist @ p.A_Delta @ coaction
    for i in range(A.dim):
        if lhs.column(i) != rhs.column(i):
            raise NotWeaklyCoassociative(i)
    return p


def is_global(p: AlgebraicPCA) -> bool:
    return p.delta_one == p.AH.unit


# -- geometric realization ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class GeometricPCA:
    source: AlgebraicPCA
    e_prime: tuple
    ideal: IdealPresentation
    AbulletH: FinDimAlgebra
    piA: Matrix
    rhoA: Matrix


def geometrize(p: AlgebraicPCA) -> GeometricPCA:
    AH = p.AH
    e_prime = vsub(AH.unit, p.delta_one)
    if AH.mul(e_prime, e_prime) != e_prime:
        raise NotIdempotent("1(x)1 - delta(1) is not idempotent")
    ideal = two_sided_ideal(AH, [e_prime])
    # a quotient by the zero ideal is A(x)H itself, already known to be associative
    Q, pi = quotient_algebra(AH, ideal, check=ideal.dim > 0)
    rho = pi @ p.coaction
    if not is_algebra_map(rho, p.A, Q):
        raise PCAError("rho_A is not an algebra map")
    return GeometricPCA(p, e_prime, ideal, Q, pi, rho)


@dataclass(frozen=True, eq=False)
class GlobalComoduleAlgebra:
    """A subcomodule algebra of A(x)H, written in the RREF basis of `space`.

    `coaction` is the restriction of A(x)Delta in those coordinates and
    `inclusion` maps coordinates back into A(x)H.
    """
    space: Subspace
    algebra: FinDimAlgebra
    H: Bialgebra
    coaction: Matrix
    inclusion: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim


def _subcomodule_algebra(p: AlgebraicPCA, S: Subspace, what: str) -> GlobalComoduleAlgebra:
    field, dH = p.field, p.dH
    if not is_subalgebra(p.AH, S):
        raise NotSubalgebra(f"{what} is not a unital subalgebra of A(x)H")
    alg = subalgebra_structure(p.AH, S, [f"{what}{r}" for r in range(S.dim)])
    cols = []
    for b in S.basis:
        w = p.A_Delta.apply(b)
        col = [field.zero] * (S.dim * dH)
        for l in range(dH):
            part = slice_leg(w, (p.AH.dim, dH), 1, l)
            if part not in S:
                raise NotCoactionStable(f"(A(x)Delta)({what}) is not inside {what}(x)H")
            for r, c in enumerate(S.coordinates(part)):
                col[r * dH + l] = c
        cols.append(col)
    coaction = Matrix.from_columns(field, S.dim * dH, cols)
    # a global comodule algebra is a partial one with delta(1) = 1(x)1
    q = verify_algebraic_pca(alg, p.H, coaction)
    if not is_global(q):
        raise NotCoactionStable(f"the coaction on {what} is not unital")
    inclusion = Matrix.from_columns(field, p.AH.dim, list(S.basis)) if S.dim else Matrix.zeros(field, p.AH.dim, 0)
    return GlobalComoduleAlgebra(S, alg, p.H, coaction, inclusion)


def compute_Y(g: GeometricPCA) -> GlobalComoduleAlgebra:
    p = g.source
    I_H = Matrix.identity(p.field, p.dH)
    L = g.rhoA.kron(I_H) - g.piA.kron(I_H) @ p.A_Delta
    return _subcomodule_algebra(p, kernel(L), "Y")


def check_pushout(g: GeometricPCA, Y: GlobalComoduleAlgebra) -> Verdict:
    """ker(pi_A) is generated by Y /\\ ker(A(x)eps), and A(x)eps maps Y onto A."""
    p = g.source
    eps_Y = p.A_eps @ Y.inclusion
    if eps_Y.rank() != p.dA:
        return failed("pushout", None, "(A(x)eps) restricted to Y is not surjective")
    K = Y.space & kernel(p.A_eps)
    generated = two_sided_ideal(p.AH, K.basis).closure
    ker_pi = kernel(g.piA)
    if generated != ker_pi:
        extra = next((v for v in ker_pi.basis if v not in generated), None)
        return failed("pushout", {"missing": [p.field.fmt(c) for c in extra]} if extra else None,
                      f"generated ideal has dim {generated.dim}, ker(pi_A) has dim {ker_pi.dim}")
    return passed("pushout", f"dim ker(pi_A) = {ker_pi.dim}")


@dataclass(frozen=True, eq=False)
class PCAGlobalization:
    geometric: GeometricPCA
    Y: GlobalComoduleAlgebra
    epsilonA: Matrix  # dimA x dimY
    kappa: Matrix     # dim(A(x)H) x dimY
    vartheta: Matrix  # dimY x dimA
    verdicts: list[Verdict] = field(default_factory=list)


def globalize_pca(p: AlgebraicPCA) -> PCAGlobalization:
    g = geometrize(p)
    Y = compute_Y(g)
    verdicts = []
    push = check_pushout(g, Y)
    if not push.ok:
        raise PushoutFailed(push.detail)
    verdicts.append(push)

    I_H = Matrix.identity(p.field, p.dH)
    defect = vsub(p.coaction.kron(I_H).apply(g.e_prime), p.A_Delta.apply(g.e_prime))
    if defect not in kernel(g.piA).tensor(Subspace.full(p.field, p.dH)):
        raise PushoutFailed("(delta(x)H - A(x)Delta)(e') is not in ker(pi_A)(x)H")
    if g.e_prime not in Y.space:
        raise PushoutFailed("e' is not in Y")
    verdicts.append(passed("e' in Y"))

    cols = []
    for i in range(p.dA):
        d = p.coaction.column(i)
        if d not in Y.space:
            raise PushoutFailed(f"delta(e_{i}) is not in Y")
        cols.append(Y.space.coordinates(d))
    vartheta = Matrix.from_columns(p.field, Y.dim, cols)
    kappa = Y.inclusion
    epsA = p.A_eps @ kappa
    if kappa @ vartheta != p.coaction:
        raise PushoutFailed("kappa o vartheta != delta_A")
    if epsA @ vartheta != Matrix.identity(p.field, p.dA):
        raise PushoutFailed("eps_A o vartheta != id")
    verdicts.append(passed("delta factors through Y"))
    return PCAGlobalization(g, Y, epsA, kappa, vartheta, verdicts)


# -- enveloping coaction ------------------------------------------------------

def _comodule_closure(p: AlgebraicPCA, vectors) -> Subspace:
    """Smallest subcomodule algebra of A(x)H containing `vectors`."""
    dims = (p.dA, p.dH, p.dH)
    S = Subspace.span(p.field, p.AH.dim, vectors)
    while True:
        slices = [slice_leg(p.A_Delta.apply(v), dims, 2, k) for v in S.basis for k in range(p.dH)]
        T = subalgebra_closure(p.AH, list(S.basis) + slices)
        if T == S:
            return S
        S = T


@dataclass(frozen=True, eq=False)
class EnvelopeResult:
    B: GlobalComoduleAlgebra
    theta: Matrix   # dimB x dimA, coordinates in B
    e: tuple        # theta(1_A) inside A(x)H
    p: Matrix       # dimA x dimB
    j: Matrix | None = None
    varkappa: Matrix | None = None
    verdicts: list[Verdict] = field(default_factory=list)


def enveloping_coaction(pc: AlgebraicPCA) -> EnvelopeResult:
    field_, dA, dH = pc.field, pc.dA, pc.dH
    AH = pc.AH
    dims = (dA, dH, dH)
    slices = []
    for i in range(dA):
        w = pc.A_Delta.apply(pc.coaction.column(i))
        slices.extend(slice_leg(w, dims, 2, k) for k in range(dH))
    S = Subspace.span(field_, AH.dim, slices)
    Bspace = subalgebra_closure(AH, S.basis)
    B = _subcomodule_algebra(pc, Bspace, "B")

    theta_cols = []
    for i in range(dA):
        d = pc.coaction.column(i)
        if d not in Bspace:
            raise EnvelopeAxiomFailed("theta lands in B", i)
        theta_cols.append(Bspace.coordinates(d))
    theta = Matrix.from_columns(field_, B.dim, theta_cols)
    if not theta.is_injective():
        raise EnvelopeAxiomFailed("theta injective")
    e = pc.delta_one
    verdicts = []

    image = Subspace.span(field_, AH.dim, pc.coaction.columns())
    right_ideal = Subspace.span(field_, AH.dim, [AH.mul(e, b) for b in Bspace.basis])
    if image != right_ideal:
        raise EnvelopeAxiomFailed("a", [field_.fmt(c) for c in e])
    verdicts.append(passed("envelope (a)"))

    if _comodule_closure(pc, pc.coaction.columns()) != Bspace:
        raise EnvelopeAxiomFailed("b")
    verdicts.append(passed("envelope (b)"))

    I_H = Matrix.identity(field_, dH)
    lhs = pc.coaction.kron(I_H) @ pc.coaction
    rhs = AH.left_mult_matrix(e).kron(I_H) @ pc.A_Delta @ pc.coaction
    for i in range(dA):
        if lhs.column(i) != rhs.column(i):
            raise EnvelopeAxiomFailed("c", i)
    verdicts.append(passed("envelope (c)"))

    # p(b) = (A(x)eps)(e b)
    P_full = pc.A_eps @ AH.left_mult_matrix(e)
    p = P_full @ B.inclusion
    if p @ theta != Matrix.identity(field_, dA):
        raise EnvelopeAxiomFailed("p o theta = id")
    e_times = Matrix.from_columns(field_, B.dim, [Bspace.coordinates(AH.mul(e, b)) for b in Bspace.basis])
    if theta @ p != e_times:
        raise EnvelopeAxiomFailed("theta o p = e.-")
    verdicts.append(passed("p o theta = id, theta o p = e.-"))
    return EnvelopeResult(B, theta, e, p, None, None, verdicts)


@dataclass(frozen=True, eq=False)
class Comparison:
    globalization: PCAGlobalization
    envelope: EnvelopeResult
    j: Matrix
    varkappa: Matrix
    strict: bool
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def dims(self) -> dict:
        g = self.globalization.geometric
        return {
            "dimA": g.source.dA, "dimH": g.source.dH, "dimIdeal": g.ideal.dim,
            "dimAbulletH": g.AbulletH.dim, "dimY": self.globalization.Y.dim,
            "dimB": self.envelope.B.dim,
        }


def compare_envelope_globalization(pc: AlgebraicPCA) -> Comparison:
    G = globalize_pca(pc)
    E = enveloping_coaction(pc)
    field_, dH = pc.field, pc.dH
    Y, B = G.Y, E.B
    P_full = pc.A_eps @ pc.AH.left_mult_matrix(E.e)
    # delta_B in ambient coordinates followed by p (x) H
    varkappa = P_full.kron(Matrix.identity(field_, dH)) @ pc.A_Delta @ B.inclusion
    cols = []
    for r in range(B.dim):
        v = varkappa.column(r)
        if v not in Y.space:
            raise ComparisonFailed("image(varkappa) in Y", r)
        cols.append(Y.space.coordinates(v))
    j = Matrix.from_columns(field_, Y.dim, cols)
    verdicts = []
    if not j.is_injective():
        raise ComparisonFailed("j injective")
    if not is_algebra_map(j, B.algebra, Y.algebra):
        raise ComparisonFailed("j multiplicative")
    if j.kron(Matrix.identity(field_, dH)) @ B.coaction != Y.coaction @ j:
        raise ComparisonFailed("j colinear")
    verdicts.append(passed("j comodule algebra monomorphism"))
    if G.epsilonA @ j != E.p:
        raise ComparisonFailed("(I) eps_A o j = p")
    verdicts.append(passed("(I) eps_A o j = p"))
    if G.kappa @ j != varkappa:
        raise ComparisonFailed("(II) kappa o j = varkappa")
    verdicts.append(passed("(II) kappa o j = varkappa"))
    if varkappa @ E.theta != pc.coaction:
        raise ComparisonFailed("varkappa = inclusion on theta(A)")
    if varkappa != B.inclusion:
        raise ComparisonFailed("varkappa = inclusion on B")
    verdicts.append(passed("varkappa is the inclusion of B"))
    strict = B.dim < Y.dim
    env = EnvelopeResult(B, E.theta, E.e, E.p, j, varkappa, E.verdicts)
    return Comparison(G, env, j, varkappa, strict, verdicts)


# -- fixtures -----------------------------------------------------------------

def ab1_fixture(G: FiniteMonoid, N: SubgroupSpec, field_: Field = QQ) -> AlgebraicPCA:
    """A = t.kG on the basis t g_i (right coset representatives), delta(tg) = tg (x) tg."""
    n = len(N.members)
    if field_.char and n % field_.char == 0:
        raise CharDividesN(f"characteristic {field_.char} divides |N| = {n}")
    q = quotient_group(G, N)  # raises NotNormal
    Hb = group_bialgebra(G, field_)
    kG = Hb.H
    inv_n = field_.inverse_of_int(n)
    t = tuple(inv_n if g in N.members else field_.zero for g in range(len(G)))
    if kG.mul(t, t) != t:
        raise PCAError("t is not idempotent")
    for g in range(len(G)):
        gv = kG.basis(g)
        if kG.mul(gv, t) != kG.mul(t, gv):
            raise PCAError("t is not central")
        if g in N.members and (kG.mul(gv, t) != t or kG.mul(t, gv) != t):
            raise PCAError("t is not an integral in kN")
    reps = q.representatives
    r = len(reps)
    tg = [kG.mul(t, kG.basis(g)) for g in reps]
    mult = tuple(tuple(((q.projection[G.mul(reps[a], reps[b])], field_.one),) for b in range(r))
                 for a in range(r))
    A = FinDimAlgebra(field_, r, mult, unit_vector(field_, r, q.projection[G.identity]),
                      [f"t{G.label(g)}" for g in reps])
    for a in range(r):
        for b in range(r):
            k = q.projection[G.mul(reps[a], reps[b])]
            if kG.mul(tg[a], tg[b]) != tg[k]:
                raise PCAError("coset basis is not closed under the product of kG")
    cols = [kron_vec(A.basis(a), tg[a]) for a in range(r)]
    return verify_algebraic_pca(A, Hb, Matrix.from_columns(field_, r * len(G), cols))


def ab2_fixture(alpha=0, field_: Field = QQ) -> AlgebraicPCA:
    """A = k with delta(1) = f = (1 + g + alpha gx)/2 in H4."""
    H = sweedler_h4(field_)
    f = h4_idempotent(H, alpha)
    if H.H.mul(f, f) != f:
        raise PCAError("f is not idempotent")
    A = ground_field_algebra(field_)
    return verify_algebraic_pca(A, H, Matrix.from_columns(field_, 4, [f]))


def global_fixture(H: Bialgebra) -> AlgebraicPCA:
    """H coacting on itself by Delta."""
    return verify_algebraic_pca(H.H, H, H.comult)


def trivial_fixture(H: Bialgebra) -> AlgebraicPCA:
    """The ground field with delta(1) = 1 (x) 1."""
    k = ground_field_algebra(H.field)
    return verify_algebraic_pca(k, H, Matrix.from_columns(H.field, H.dim, [H.H.unit]))


def example_fixtures(kind: str, **params) -> AlgebraicPCA:
    field_ = params.get("field", QQ)
    if kind == "ab1":
        return ab1_fixture(params["G"], params["N"], field_)
    if kind == "ab2":
        return ab2_fixture(params.get("alpha", 0), field_)
    if kind == "global":
        return global_fixture(params["H"])
    if kind == "trivial":
        return trivial_fixture(params["H"])
    raise PCAError(f"unknown PCA fixture kind {kind!r}")


# -- randomized perturbations ---------------------------------------------------

def group_automorphisms(G: FiniteMonoid) -> list[tuple[int, ...]]:
    """All automorphisms of a small group, as permutations of the element indices."""
    ok, _ = is_group(G)
    if not ok:
        raise PCAError("automorphisms are only enumerated for groups")
    n = len(G)
    e = G.identity
    others = [g for g in range(n) if g != e]
    out = []
    for perm in permutations(others):
        phi = [0] * n
        phi[e] = e
        for a, b in zip(others, perm):
            phi[a] = b
        if all(phi[G.mul(a, b)] == G.mul(phi[a], phi[b]) for a in range(n) for b in range(n)):
            out.append(tuple(phi))
    return out


def _random_invertible(rng: random.Random, field_: Field, n: int) -> Matrix:
    """Dense for n <= 3; a random monomial matrix above, which keeps constants sparse."""
    if n > 3:
        perm = list(range(n))
        rng.shuffle(perm)
        scale = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n)]
        cols = [[scale[i] if r == perm[i] else 0 for r in range(n)] for i in range(n)]
        return Matrix.from_columns(field_, n, cols)
    while True:
        rows = [[field_(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        m = Matrix(field_, n, n, rows)
        if m.rank() == n:
            return m


def _inverse(m: Matrix) -> Matrix:
    n = m.nrows
    cols = []
    for i in range(n):
        sol = _solve(m, unit_vector(m.field, n, i))
        cols.append(sol)
    return Matrix.from_columns(m.field, n, cols)


def _solve(m: Matrix, b) -> tuple:
    """The unique x with m x = b for invertible square m."""
    n = m.nrows
    aug = Matrix(m.field, n, n + 1, [list(r) + [c] for r, c in zip(m.rows, b)])
    K = kernel(aug)
    v = next(v for v in K.basis if v[n] != 0)
    s = -1 / v[n]
    return tuple(s * v[i] for i in range(n))


def change_basis(p: AlgebraicPCA, P: Matrix) -> AlgebraicPCA:
    """Transport the structure along A -> A, new basis vector i = column i of P."""
    A, F = p.A, p.field
    Pinv = _inverse(P)
    newb = P.columns()
    dim = A.dim
    mult = tuple(tuple(tuple((k, c) for k, c in enumerate(Pinv.apply(A.mul(newb[i], newb[j]))) if c != 0)
                       for j in range(dim)) for i in range(dim))
    A2 = FinDimAlgebra(F, dim, mult, Pinv.apply(A.unit), [f"b{i}" for i in range(dim)])
    coaction = Pinv.kron(Matrix.identity(F, p.dH)) @ p.coaction @ P
    return verify_algebraic_pca(A2, p.H, coaction)


def twist_by(p: AlgebraicPCA, psi: Matrix) -> AlgebraicPCA:
    """Compose the coaction with a bialgebra automorphism psi of H."""
    return verify_algebraic_pca(p.A, p.H, Matrix.identity(p.field, p.dA).kron(psi) @ p.coaction)


def h4_scaling(H: Bialgebra, lam) -> Matrix:
    """g -> g, x -> lam x: a bialgebra automorphism of H4 for lam != 0."""
    F = H.field
    lam = F(lam)
    return Matrix(F, 4, 4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, lam, 0], [0, 0, 0, lam]])


def permutation_matrix(F: Field, phi) -> Matrix:
    n = len(phi)
    return Matrix.from_columns(F, n, [unit_vector(F, n, phi[i]) for i in range(n)])


def h4_like(H: Bialgebra) -> bool:
    ref = sweedler_h4(H.field)
    return (H.dim == 4 and H.H.mult == ref.H.mult and H.comult == ref.comult
            and H.counit == ref.counit)


def bialgebra_twists(H: Bialgebra, group: FiniteMonoid | None = None,
                     scalings=(-2, -1, 2, 3)) -> list[Matrix]:
    """Known bialgebra automorphisms of H: group automorphisms of kG, x -> lam x on H4."""
    F = H.field
    out = [Matrix.identity(F, H.dim)]
    if group is not None:
        out += [permutation_matrix(F, phi) for phi in group_automorphisms(group)]
    elif h4_like(H):
        out += [h4_scaling(H, lam) for lam in scalings if F(lam)]
    for psi in out:
        if not is_algebra_map(psi, H.H, H.H):
            raise PCAError("twist is not an algebra automorphism of H")
        if psi.kron(psi) @ H.comult != H.comult @ psi or H.counit @ psi != H.counit:
            raise PCAError("twist is not a coalgebra automorphism of H")
    return out


def random_perturbation(base: AlgebraicPCA, rng: random.Random, twists: list[Matrix] | None = None
                        ) -> AlgebraicPCA:
    """A random PCA isomorphic to `base`: a change of basis of A, then a twist by
    one of the given bialgebra automorphisms of H. The result is re-verified."""
    p = change_basis(base, _random_invertible(rng, base.field, base.dA))
    if twists:
        p = twist_by(p, rng.choice(twists))
    return p
