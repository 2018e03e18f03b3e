"""Exact scalars and dense linear algebra over Q or F_p.

Vectors are plain tuples of field elements. Matrices are immutable row-major
grids. Subspaces keep a canonical reduced row-echelon basis, so two subspaces
are equal exactly when their bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class ModP:
    """An element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


class Field:
    """Field descriptor: characteristic 0 means Q, otherwise F_p."""

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.char = p
        self.zero = self(0)
        self.one = self(1)

    def __call__(self, x) -> Fraction | ModP:
        if self.char == 0:
            if type(x) is Fraction:
                return x
            if isinstance(x, ModP):
                raise FieldError("cannot coerce an F_p element into Q")
            return Fraction(x)
        if type(x) is ModP:
            if x.p != self.char:
                raise FieldError(f"mixing F_{self.char} and F_{x.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.char}")
            return ModP(x.numerator * pow(x.denominator, -1, self.char), self.char)
        return ModP(int(x), self.char)

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"Fp:{self.char}"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        name = name.strip()
        if name in ("Q", "QQ"):
            return QQ
        if name.startswith("Fp:"):
            return GF(int(name[3:]))
        raise FieldError(f"unknown field {name!r} (expected 'Q' or 'Fp:<p>')")

    def inverse_of_int(self, n: int):
        """1/n in this field, or FieldError when char divides n."""
        if self.char and n % self.char == 0:
            raise FieldError(f"characteristic {self.char} divides {n}")
        return self.one / self(n)

    def fmt(self, x) -> str:
        x = self(x)
        if self.char == 0:
            return f"{x.numerator}/{x.denominator}"
        return f"{x.v} mod {self.char}"

    def parse(self, s) -> Fraction | ModP:
        if isinstance(s, int):
            return self(s)
        s = str(s).strip()
        if " mod " in s:
            v, p = s.split(" mod ")
            if int(p) != self.char:
                raise FieldError(f"scalar {s!r} is not in {self.name}")
            return ModP(int(v), self.char)
        return self(Fraction(s))

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return f"Field({self.name})"


QQ = Field(0)
_GF_CACHE: dict[int, Field] = {}


def GF(p: int) -> Field:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = Field(p)
    return _GF_CACHE[p]


# -- vectors -----------------------------------------------------------------

def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vadd(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> tuple:
    return tuple(c * a for a in v)


def is_zero(v) -> bool:
    return not any(v)


def lincomb(field: Field, n: int, terms: Iterable[tuple[object, Sequence]]) -> tuple:
    out = [field.zero] * n
    for c, v in terms:
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


def kron_vec(u, v) -> tuple:
    return tuple(a * b for a in u for b in v)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable dense matrix; `rows` is a tuple of row tuples."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_sparse")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: Iterable[Sequence]):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self._sparse = None
        if len(self.rows) != nrows or any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch(f"entry grid does not match shape {nrows}x{ncols}")

    @classmethod
    def _trusted(cls, field: Field, nrows: int, ncols: int, rows: tuple, sparse=None) -> "Matrix":
        # entries already belong to `field` and the shape is known to be right
        m = object.__new__(cls)
        m.field, m.nrows, m.ncols, m.rows, m._sparse = field, nrows, ncols, rows, sparse
        return m

    @property
    def sparse_rows(self) -> tuple:
        """Per row, the (column, entry) pairs with nonzero entry."""
        if self._sparse is None:
            self._sparse = tuple(tuple((j, a) for j, a in enumerate(r) if a) for r in self.rows)
        return self._sparse

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("ncols required for an empty matrix")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence[Sequence]):
        return cls(field, nrows, len(cols), [[c[i] for c in cols] for i in range(nrows)])

    @classmethod
    def identity(cls, field: Field, n: int):
        return cls(field, n, n, [unit_vector(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int):
        return cls(field, nrows, ncols, [zero_vector(field, ncols)] * nrows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, self.columns())

    T = property(transpose)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        zero = self.field.zero
        out = []
        for r in self.sparse_rows:
            s = zero
            for j, a in r:
                b = v[j]
                if b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot compose {self.shape} with {other.shape}")
        zero = self.field.zero
        n = other.ncols
        orows = other.sparse_rows
        rows = []
        for r in self.sparse_rows:
            acc = [zero] * n
            for k, a in r:
                for j, b in orows[k]:
                    acc[j] += a * b
            rows.append(tuple(acc))
        return Matrix._trusted(self.field, self.nrows, n, tuple(rows))

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        rows = []
        for r, o in zip(self.rows, other.sparse_rows):
            acc = list(r)
            for j, b in o:
                acc[j] = acc[j] + b if sign > 0 else acc[j] - b
            rows.append(tuple(acc))
        return Matrix._trusted(self.field, self.nrows, self.ncols, tuple(rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return self._combine(other, -1)

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [vscale(c, r) for r in self.rows])

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product of linear maps, index convention i*dim2 + j."""
        zero = self.field.zero
        n2 = other.ncols
        width = self.ncols * n2
        rows, sparse = [], []
        for ra in self.sparse_rows:
            for rb in other.sparse_rows:
                row = [zero] * width
                sp = []
                for i, a in ra:
                    base = i * n2
                    for j, b in rb:
                        row[base + j] = ab = a * b
                        sp.append((base + j, ab))
                rows.append(tuple(row))
                sparse.append(tuple(sp))
        return Matrix._trusted(self.field, self.nrows * other.nrows, width, tuple(rows), tuple(sparse))

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_injective(self) -> bool:
        return self.rank() == self.ncols

    def image(self) -> "Subspace":
        return Subspace.span(self.field, self.nrows, self.columns())

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def _rref_rows(field: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        support = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                row = m[i]
                f = row[c]
                for j in support:
                    row[j] = row[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns; shape is preserved."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows], m.ncols)
    return Matrix(m.field, m.nrows, m.ncols, rows), pivots


def kernel(m: Matrix) -> "Subspace":
    """Null space {v : m v = 0}."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows], m.ncols)
    field = m.field
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(tuple(v))
    return Subspace.span(field, m.ncols, basis)


class Subspace:
    """Subspace of field^n held by its canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_sparse")

    def __init__(self, field: Field, ambient_dim: int, basis: tuple, pivots: tuple):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        self._sparse = None

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(field(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows(field, vecs, ambient_dim)
        basis = tuple(tuple(r) for r in rows[: len(pivots)])
        return cls(field, ambient_dim, basis, tuple(pivots))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls.span(field, n, [unit_vector(field, n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def reduce(self, v: Sequence) -> tuple:
        """Residual of v after eliminating against the basis."""
        if self._sparse is None:
            self._sparse = [[(j, y) for j, y in enumerate(b) if y] for b in self.basis]
        v = list(v)
        for b, c in zip(self._sparse, self.pivots):
            f = v[c]
            if f:
                for j, y in b:
                    v[j] -= f * y
        return tuple(v)

    def __contains__(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the RREF basis; ValueError if v is not a member."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def from_coordinates(self, coords: Sequence) -> tuple:
        return lincomb(self.field, self.ambient_dim, zip(coords, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        # x = sum l_i a_i = sum m_j b_j  <=>  [a | -b] (l, m) = 0
        cols = list(self.basis) + [vscale(-1, b) for b in other.basis]
        ker = kernel(Matrix.from_columns(self.field, self.ambient_dim, cols))
        r = self.dim
        vecs = [lincomb(self.field, self.ambient_dim, zip(k[:r], self.basis)) for k in ker.basis]
        return Subspace.span(self.field, self.ambient_dim, vecs)

    __and__ = intersection

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates; their unit vectors span a complement."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def tensor(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim * other.ambient_dim,
                             [kron_vec(a, b) for a in self.basis for b in other.basis])

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Sum, intersection, equality and a membership predicate for a pair."""
    a._check(b)
    total = a + b
    return {
        "sum": total,
        "intersection": a & b,
        "equal": a == b,
        "membership": lambda v: (v in a, v in b),
    }


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[m.field.fmt(x) for x in r] for r in m.rows]


def matrix_from_json(field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    return Matrix.from_rows(field, [[field.parse(x) for x in r] for r in rows], ncols)


def vector_to_json(field: Field, v: Sequence) -> list[str]:
    return [field.fmt(x) for x in v]
