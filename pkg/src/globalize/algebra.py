"""Finite-dimensional unital associative algebras given by structure constants.

e_i * e_j = sum_k c[i][j][k] e_k. Constants are stored sparsely: `mult[i][j]`
is a tuple of (k, c) pairs with c != 0. Linear maps are `Matrix` objects of
shape (dst_dim, src_dim) acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .exact import Field, Matrix, Subspace, unit_vector, zero_vector
from .monoid import FiniteMonoid


class AlgebraError(ValueError):
    pass


class NotAssociative(AlgebraError):
    def __init__(self, i, j, k):
        super().__init__(f"(e_i e_j) e_k != e_i (e_j e_k) for (i,j,k) = ({i},{j},{k})")
        self.witness = (i, j, k)


class BadUnit(AlgebraError):
    def __init__(self, i):
        super().__init__(f"unit law fails on basis element {i}")
        self.witness = i


class FinDimAlgebra:
    __slots__ = ("field", "dim", "labels", "mult", "unit")

    def __init__(self, field: Field, dim: int, mult, unit: Sequence, labels: Sequence[str] | None = None):
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = tuple(field(x) for x in unit)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.unit) != dim or len(self.labels) != dim:
            raise AlgebraError("unit/labels do not match the dimension")

    def basis_mul(self, i: int, j: int) -> tuple:
        v = [self.field.zero] * self.dim
        for k, c in self.mult[i][j]:
            v[k] = c
        return tuple(v)

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        out = [self.field.zero] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mult[i]
            for j, b in nz_v:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def basis(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def left_mult_matrix(self, a: Sequence) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, [self.mul(a, self.basis(j)) for j in range(self.dim)])

    def right_mult_matrix(self, a: Sequence) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, [self.mul(self.basis(j), a) for j in range(self.dim)])

    def is_commutative(self) -> tuple[bool, tuple[int, int] | None]:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.basis_mul(i, j) != self.basis_mul(j, i):
                    return False, (i, j)
        return True, None

    def constants_dense(self) -> list[list[list]]:
        return [[list(self.basis_mul(i, j)) for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, {self.field.name})"


def _sparse(field: Field, dim: int, dense_or_map) -> tuple:
    mult = [[() for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            entry = dense_or_map(i, j)
            mult[i][j] = tuple((k, field(c)) for k, c in entry if field(c) != 0)
    return tuple(tuple(r) for r in mult)


def validate_algebra(field: Field, dim: int, constants, unit: Sequence,
                     labels: Sequence[str] | None = None) -> FinDimAlgebra:
    """Build an algebra from constants and check associativity and the unit.

    `constants` is either a dense dim x dim x dim grid or a mapping
    {(i, j): {k: c}} with missing entries read as zero.
    """
    if isinstance(constants, Mapping):
        def entry(i, j):
            return list(constants.get((i, j), {}).items())
    else:
        for i in range(dim):
            if len(constants[i]) != dim or any(len(constants[i][j]) != dim for j in range(dim)):
                raise AlgebraError("constant grid has the wrong shape")

        def entry(i, j):
            return [(k, c) for k, c in enumerate(constants[i][j])]
    for (i, j), row in (constants.items() if isinstance(constants, Mapping) else []):
        if not (0 <= i < dim and 0 <= j < dim) or any(not 0 <= k < dim for k in row):
            raise AlgebraError(f"structure constant index out of range at {(i, j)}")
    A = FinDimAlgebra(field, dim, _sparse(field, dim, entry), unit, labels)
    check_algebra(A)
    return A


def _times_basis(A: FinDimAlgebra, terms, k: int, left: bool) -> dict:
    out: dict = {}
    for m, c in terms:
        for r, d in (A.mult[m][k] if left else A.mult[k][m]):
            out[r] = out.get(r, 0) + c * d
    return {r: c for r, c in out.items() if c}


def check_algebra(A: FinDimAlgebra) -> None:
    for i in range(A.dim):
        ei = A.basis(i)
        if A.mul(A.unit, ei) != ei or A.mul(ei, A.unit) != ei:
            raise BadUnit(i)
    # (e_i e_j) e_k against e_i (e_j e_k), using the sparse constants directly
    for i, j, k in product(range(A.dim), repeat=3):
        if _times_basis(A, A.mult[i][j], k, True) != _times_basis(A, A.mult[j][k], i, False):
            raise NotAssociative(i, j, k)


def ground_field_algebra(field: Field) -> FinDimAlgebra:
    return FinDimAlgebra(field, 1, (((( 0, field.one),),),), [1], ["1"])


def group_algebra(M: FiniteMonoid, field: Field) -> FinDimAlgebra:
    n = len(M)
    mult = tuple(tuple(((M.mul(a, b), field.one),) for b in range(n)) for a in range(n))
    return FinDimAlgebra(field, n, mult, unit_vector(field, n, M.identity), M.elements)


def matrix_algebra(n: int, field: Field) -> FinDimAlgebra:
    """M_n(k) on the matrix units E_ab at index a*n + b."""
    d = n * n
    mult = [[() for _ in range(d)] for _ in range(d)]
    for a, b, c, e in product(range(n), repeat=4):
        if b == c:
            mult[a * n + b][c * n + e] = ((a * n + e, field.one),)
    unit = [field.one if i // n == i % n else field.zero for i in range(d)]
    return FinDimAlgebra(field, d, tuple(tuple(r) for r in mult), unit,
                         [f"E{a}{b}" for a in range(n) for b in range(n)])


def tensor_algebra(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    """A (x) B with componentwise product; a_i (x) b_j sits at i*dimB + j."""
    if A.field != B.field:
        raise AlgebraError("tensor factors over different fields")
    db = B.dim
    d = A.dim * db
    mult = [[() for _ in range(d)] for _ in range(d)]
    for i1, i2 in product(range(A.dim), repeat=2):
        ma = A.mult[i1][i2]
        if not ma:
            continue
        for j1, j2 in product(range(db), repeat=2):
            mb = B.mult[j1][j2]
            if mb:
                mult[i1 * db + j1][i2 * db + j2] = tuple(
                    (ka * db + kb, ca * cb) for ka, ca in ma for kb, cb in mb)
    unit = [a * b for a in A.unit for b in B.unit]
    labels = [f"{x}(x){y}" for x in A.labels for y in B.labels]
    return FinDimAlgebra(A.field, d, tuple(tuple(r) for r in mult), unit, labels)


@dataclass(frozen=True)
class IdealPresentation:
    ambient: FinDimAlgebra
    generators: tuple
    closure: Subspace

    @property
    def dim(self) -> int:
        return self.closure.dim


def two_sided_ideal(A: FinDimAlgebra, generators: Sequence[Sequence]) -> IdealPresentation:
    """Smallest subspace containing the generators and stable under e_i * - and - * e_i."""
    gens = tuple(tuple(A.field(x) for x in g) for g in generators)
    S = Subspace.span(A.field, A.dim, gens)
    while True:
        new = list(S.basis)
        for s in S.basis:
            for i in range(A.dim):
                ei = A.basis(i)
                new.append(A.mul(ei, s))
                new.append(A.mul(s, ei))
        T = Subspace.span(A.field, A.dim, new)
        if T.dim == S.dim:
            return IdealPresentation(A, gens, S)
        S = T


def subalgebra_closure(A: FinDimAlgebra, generators: Sequence[Sequence], unital: bool = True) -> Subspace:
    """Smallest subspace containing the generators (and 1) closed under products."""
    vecs = list(generators) + ([A.unit] if unital else [])
    S = Subspace.span(A.field, A.dim, vecs)
    while True:
        new = list(S.basis)
        for a in S.basis:
            for b in S.basis:
                new.append(A.mul(a, b))
        T = Subspace.span(A.field, A.dim, new)
        if T.dim == S.dim:
            return S
        S = T


def is_subalgebra(A: FinDimAlgebra, S: Subspace) -> bool:
    if A.unit not in S:
        return False
    return all(A.mul(a, b) in S for a in S.basis for b in S.basis)


def quotient_algebra(A: FinDimAlgebra, I: IdealPresentation, check: bool = True
                     ) -> tuple[FinDimAlgebra, Matrix]:
    """A/I on the non-pivot coordinates of I's RREF basis, with the projection matrix.

    A quotient by the whole algebra is the zero algebra (dim 0). `check`
    re-validates the result, which is cubic in its dimension.
    """
    keep = I.closure.complement_indices()
    field = A.field
    if not I.dim:
        return A, Matrix.identity(field, A.dim)

    def project(v):
        r = I.closure.reduce(v)
        return tuple(r[i] for i in keep)

    proj = Matrix.from_columns(field, len(keep), [project(A.basis(j)) for j in range(A.dim)]) \
        if keep else Matrix.zeros(field, 0, A.dim)
    q = len(keep)
    mult = [[() for _ in range(q)] for _ in range(q)]
    for a in range(q):
        for b in range(q):
            p = project(A.basis_mul(keep[a], keep[b]))
            mult[a][b] = tuple((k, c) for k, c in enumerate(p) if c)
    Q = FinDimAlgebra(field, q, tuple(tuple(r) for r in mult), project(A.unit),
                      [f"[{A.labels[i]}]" for i in keep])
    if check:
        check_algebra(Q)
    return Q, proj


def is_algebra_map(f: Matrix, A: FinDimAlgebra, B: FinDimAlgebra) -> bool:
    if f.shape != (B.dim, A.dim):
        raise AlgebraError(f"map of shape {f.shape} between algebras of dims {A.dim} -> {B.dim}")
    if f.apply(A.unit) != B.unit:
        return False
    cols = f.columns()
    for i in range(A.dim):
        for j in range(A.dim):
            if f.apply(A.basis_mul(i, j)) != B.mul(cols[i], cols[j]):
                return False
    return True


def subalgebra_structure(A: FinDimAlgebra, S: Subspace, labels=None) -> FinDimAlgebra:
    """The subalgebra S as an algebra in its own RREF basis."""
    if not is_subalgebra(A, S):
        raise AlgebraError("subspace is not a unital subalgebra")
    d = S.dim
    mult = []
    for a in S.basis:
        row = []
        for b in S.basis:
            c = S.coordinates(A.mul(a, b))
            row.append(tuple((k, x) for k, x in enumerate(c) if x))
        mult.append(tuple(row))
    return FinDimAlgebra(A.field, d, tuple(mult), S.coordinates(A.unit), labels)

