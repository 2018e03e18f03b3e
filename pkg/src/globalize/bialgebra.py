"""Finite-dimensional bialgebras: group bialgebras and Sweedler's H4."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FinDimAlgebra, ground_field_algebra, group_algebra, is_algebra_map, tensor_algebra
from .exact import Field, Matrix, kron_vec, unit_vector
from .monoid import FiniteMonoid


class BialgebraError(ValueError):
    pass


class NotCoassociative(BialgebraError):
    def __init__(self, i):
        super().__init__(f"coassociativity fails on basis element {i}")
        self.witness = i


class BadCounit(BialgebraError):
    def __init__(self, i):
        super().__init__(f"counit law fails on basis element {i}")
        self.witness = i


class DeltaNotMultiplicative(BialgebraError):
    def __init__(self, i, j):
        super().__init__(f"comultiplication or counit is not multiplicative at ({i},{j})")
        self.witness = (i, j)


class CharTwo(BialgebraError):
    pass


@dataclass(frozen=True, eq=False)
class Bialgebra:
    H: FinDimAlgebra
    comult: Matrix  # dim^2 x dim
    counit: Matrix  # 1 x dim

    @property
    def dim(self) -> int:
        return self.H.dim

    @property
    def field(self) -> Field:
        return self.H.field

    def delta(self, h: Sequence) -> tuple:
        return self.comult.apply(h)

    def eps(self, h: Sequence):
        return self.counit.apply(h)[0]


def _first_bad_column(lhs: Matrix, rhs: Matrix) -> int | None:
    for j in range(lhs.ncols):
        if lhs.column(j) != rhs.column(j):
            return j
    return None


def validate_bialgebra(H: FinDimAlgebra, comult: Matrix, counit: Matrix) -> Bialgebra:
    d = H.dim
    field = H.field
    if comult.shape != (d * d, d) or counit.shape != (1, d):
        raise BialgebraError("comultiplication/counit have the wrong shape")
    I = Matrix.identity(field, d)
    bad = _first_bad_column(comult.kron(I) @ comult, I.kron(comult) @ comult)
    if bad is not None:
        raise NotCoassociative(H.labels[bad])
    for lhs in (counit.kron(I) @ comult, I.kron(counit) @ comult):
        bad = _first_bad_column(lhs, I)
        if bad is not None:
            raise BadCounit(H.labels[bad])
    HH = tensor_algebra(H, H)
    k = ground_field_algebra(field)
    cols = comult.columns()
    eps = counit.rows[0]
    if comult.apply(H.unit) != HH.unit or counit.apply(H.unit)[0] != field.one:
        raise DeltaNotMultiplicative(H.labels[0], H.labels[0])
    for i in range(d):
        for j in range(d):
            prod = H.basis_mul(i, j)
            if comult.apply(prod) != HH.mul(cols[i], cols[j]):
                raise DeltaNotMultiplicative(H.labels[i], H.labels[j])
            if counit.apply(prod)[0] != eps[i] * eps[j]:
                raise DeltaNotMultiplicative(H.labels[i], H.labels[j])
    assert is_algebra_map(counit, H, k)
    return Bialgebra(H, comult, counit)


def group_bialgebra(G: FiniteMonoid, field: Field) -> Bialgebra:
    """kG with every group element group-like."""
    H = group_algebra(G, field)
    d = H.dim
    comult = Matrix.from_columns(field, d * d, [unit_vector(field, d * d, g * d + g) for g in range(d)])
    counit = Matrix(field, 1, d, [[1] * d])
    return validate_bialgebra(H, comult, counit)


H4_LABELS = ("1", "g", "x", "gx")


def sweedler_h4(field: Field) -> Bialgebra:
    """k<g, x | g^2 = 1, x^2 = 0, xg = -gx> on the basis (1, g, x, gx).

    g is group-like and x is (g, 1)-skew-primitive: Delta(x) = x(x)1 + g(x)x.
    With a minus sign in front of g(x)x the coproduct is not coassociative.
    """
    if field.char == 2:
        raise CharTwo("Sweedler's H4 needs characteristic != 2")
    # basis element g^a x^b sits at index a + 2b
    def idx(a, b):
        return a + 2 * b

    mult = [[() for _ in range(4)] for _ in range(4)]
    for a, b, c, d in ((a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)):
        if b + d >= 2:
            continue
        sign = -1 if (b and c) else 1
        mult[idx(a, b)][idx(c, d)] = ((idx((a + c) % 2, b + d), field(sign)),)
    H = FinDimAlgebra(field, 4, tuple(tuple(r) for r in mult), [1, 0, 0, 0], H4_LABELS)

    def t(i, j):
        return unit_vector(field, 16, i * 4 + j)

    one, g, x, gx = range(4)
    cols = [
        t(one, one),
        t(g, g),
        tuple(a + b for a, b in zip(t(x, one), t(g, x))),
        tuple(a + b for a, b in zip(t(gx, g), t(one, gx))),
    ]
    comult = Matrix.from_columns(field, 16, cols)
    counit = Matrix(field, 1, 4, [[1, 1, 0, 0]])
    return validate_bialgebra(H, comult, counit)


def h4_idempotent(B: Bialgebra, alpha) -> tuple:
    """f = (1 + g + alpha*gx)/2."""
    field = B.field
    half = field.inverse_of_int(2)
    a = field(alpha)
    return (half, half, field.zero, half * a)


def slice_leg(v: Sequence, dims: Sequence[int], leg: int, k: int) -> tuple:
    """Apply the dual basis functional e_k^* to tensor leg `leg` (0-based)."""
    total = 1
    for d in dims:
        total *= d
    if len(v) != total or not 0 <= leg < len(dims) or not 0 <= k < dims[leg]:
        raise ValueError("slice: shape mismatch")
    inner = 1
    for d in dims[leg + 1:]:
        inner *= d
    outer = total // (inner * dims[leg])
    out = []
    for o in range(outer):
        base = o * dims[leg] * inner + k * inner
        out.extend(v[base: base + inner])
    return tuple(out)


def slice_with(v: Sequence, dims: Sequence[int], leg: int, functional: Sequence) -> tuple:
    """Contract leg `leg` against an arbitrary functional given by its values on the basis."""
    parts = [slice_leg(v, dims, leg, k) for k in range(dims[leg])]
    n = len(parts[0])
    out = [0] * n
    first = True
    for c, p in zip(functional, parts):
        if first:
            out = [c * a for a in p]
            first = False
        else:
            out = [o + c * a for o, a in zip(out, p)]
    return tuple(out)


def reassemble(parts: Sequence[Sequence], dims: Sequence[int], leg: int) -> tuple:
    """Inverse of slicing over the whole dual basis of one leg."""
    inner = 1
    for d in dims[leg + 1:]:
        inner *= d
    n = dims[leg]
    outer = len(parts[0]) // inner
    out = []
    for o in range(outer):
        for k in range(n):
            out.extend(parts[k][o * inner:(o + 1) * inner])
    return tuple(out)


def is_grouplike(B: Bialgebra, i: int) -> bool:
    b = B.H.basis(i)
    return B.delta(b) == kron_vec(b, b) and B.eps(b) == B.field.one
