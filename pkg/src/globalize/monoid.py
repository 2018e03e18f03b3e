"""Finite monoids given by multiplication tables.

Elements are indices 0..n-1 with string labels. `table[a][b]` is the index of
the product a*b. Right actions are the default throughout the package, so for
transformation monoids the product a*b means "first a, then b".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

DEFAULT_SIZE_CAP = 64


class MonoidError(ValueError):
    pass


class NotAssociative(MonoidError):
    def __init__(self, a, b, c):
        super().__init__(f"(a*b)*c != a*(b*c) for (a,b,c) = ({a},{b},{c})")
        self.witness = (a, b, c)


class BadIdentity(MonoidError):
    def __init__(self, m):
        super().__init__(f"identity law fails at element {m}")
        self.witness = m


class BadIndex(MonoidError):
    pass


class NotNormal(MonoidError):
    def __init__(self, g):
        super().__init__(f"subgroup is not normal: conjugation by {g} moves it")
        self.witness = g


class NotAGroup(MonoidError):
    pass


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __len__(self):
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise BadIndex(f"unknown monoid element {label!r}") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    @property
    def size(self) -> int:
        return len(self.elements)


def validate_monoid(elements: Sequence[str], table: Sequence[Sequence[int]], identity: int,
                    size_cap: int = DEFAULT_SIZE_CAP) -> FiniteMonoid:
    """Build a monoid after checking indices, identity and associativity."""
    n = len(elements)
    if n == 0:
        raise BadIndex("a monoid needs at least one element")
    if len(set(elements)) != n:
        raise BadIndex("element labels are not distinct")
    if n > size_cap:
        raise MonoidError(f"monoid of size {n} exceeds the cap {size_cap}")
    if not 0 <= identity < n:
        raise BadIndex(f"identity index {identity} out of range")
    if len(table) != n or any(len(row) != n for row in table):
        raise BadIndex(f"table is not {n}x{n}")
    for row in table:
        for x in row:
            if not (isinstance(x, int) and 0 <= x < n):
                raise BadIndex(f"table entry {x!r} is not an element index")
    for m in range(n):
        if table[identity][m] != m or table[m][identity] != m:
            raise BadIdentity(elements[m])
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative(elements[a], elements[b], elements[c])
    return FiniteMonoid(tuple(elements), tuple(tuple(r) for r in table), identity)


def inverses(M: FiniteMonoid) -> list[int] | None:
    """Two-sided inverse of every element, or None if some element has none."""
    e = M.identity
    inv = []
    for a in range(len(M)):
        b = next((b for b in range(len(M)) if M.mul(a, b) == e and M.mul(b, a) == e), None)
        if b is None:
            return None
        inv.append(b)
    return inv


def is_group(M: FiniteMonoid) -> tuple[bool, list[int] | None]:
    inv = inverses(M)
    return inv is not None, inv


# -- builders ----------------------------------------------------------------

def cyclic(n: int) -> FiniteMonoid:
    if n < 1:
        raise MonoidError("cyclic(n) needs n >= 1")
    labels = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return validate_monoid(labels, [[(a + b) % n for b in range(n)] for a in range(n)], 0)


def _perm_label(p) -> str:
    return "".join(str(i + 1) for i in p)


def symmetric(n: int) -> FiniteMonoid:
    """S_n on one-line labels; a*b is the permutation i -> b(a(i))."""
    if n < 1:
        raise MonoidError("symmetric(n) needs n >= 1")
    perms = sorted(permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(b[a[i]] for i in range(n))] for b in perms] for a in perms]
    return validate_monoid([_perm_label(p) for p in perms], table, idx[tuple(range(n))])


def transformation_monoid(n_points: int, generators: Sequence[Sequence[int]], labels=None,
                          size_cap: int = DEFAULT_SIZE_CAP) -> FiniteMonoid:
    """Monoid of maps on range(n_points) generated under "first a, then b"."""
    ident = tuple(range(n_points))
    elems = [ident]
    seen = {ident: 0}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[a[i]] for i in range(n_points))
                if c not in seen:
                    seen[c] = len(elems)
                    elems.append(c)
                    nxt.append(c)
                    if len(elems) > size_cap:
                        raise MonoidError(f"generated monoid exceeds the cap {size_cap}")
        frontier = nxt
    table = [[seen[tuple(b[a[i]] for i in range(n_points))] for b in elems] for a in elems]
    if labels is None:
        labels = ["e"] + ["t" + "".join(str(x) for x in a) for a in elems[1:]]
    return validate_monoid(labels, table, 0, size_cap)


def bicyclic_truncated(n: int) -> FiniteMonoid:
    """Finite truncation of the bicyclic monoid <p, q | qp = 1>.

    Generated by the partial shifts q: i -> i+1 and p: i -> i-1 on the points
    0..n-1, with an absorbing sink for "undefined". Then q*p (q first) is the
    identity away from the top point, which is where the truncation bites.
    """
    if n < 1:
        raise MonoidError("bicyclic_truncated(n) needs n >= 1")
    sink = n
    q = [i + 1 if i + 1 < n else sink for i in range(n)] + [sink]
    p = [i - 1 if i > 0 else sink for i in range(n)] + [sink]
    return transformation_monoid(n + 1, [q, p])


def direct_product(M1: FiniteMonoid, M2: FiniteMonoid) -> FiniteMonoid:
    n2 = len(M2)
    labels = [f"({a},{b})" for a in M1.elements for b in M2.elements]
    table = [[M1.mul(i // n2, j // n2) * n2 + M2.mul(i % n2, j % n2)
              for j in range(len(M1) * n2)] for i in range(len(M1) * n2)]
    return validate_monoid(labels, table, M1.identity * n2 + M2.identity)


def semilattice2() -> FiniteMonoid:
    """{e, z} with z*z = z: the smallest monoid that is not a group."""
    return validate_monoid(["e", "z"], [[0, 1], [1, 1]], 0)


def parse_monoid_spec(spec: str) -> FiniteMonoid:
    """CLI builder syntax: cyclic:4, sym:3, bicyclic:2, semilattice, product:cyclic:2*sym:3."""
    spec = spec.strip()
    if spec.startswith("product:"):
        parts = spec[len("product:"):].split("*")
        M = parse_monoid_spec(parts[0])
        for part in parts[1:]:
            M = direct_product(M, parse_monoid_spec(part))
        return M
    kind, _, arg = spec.partition(":")
    if kind == "semilattice":
        return semilattice2()
    if kind == "trivial":
        return cyclic(1)
    try:
        n = int(arg)
    except ValueError:
        raise MonoidError(f"bad monoid spec {spec!r}") from None
    builders = {"cyclic": cyclic, "sym": symmetric, "symmetric": symmetric,
                "bicyclic": bicyclic_truncated, "bicyclic_truncated": bicyclic_truncated}
    if kind not in builders:
        raise MonoidError(f"unknown monoid kind {kind!r}")
    return builders[kind](n)


def builders(kind: str, *params) -> FiniteMonoid:
    if kind == "product":
        return direct_product(*params)
    table = {"cyclic": cyclic, "symmetric": symmetric, "bicyclic_truncated": bicyclic_truncated}
    if kind not in table:
        raise MonoidError(f"unknown builder {kind!r}")
    return table[kind](*params)


# -- subgroups and quotients -------------------------------------------------

@dataclass(frozen=True)
class SubgroupSpec:
    parent: FiniteMonoid
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        ok, inv = is_group(self.parent)
        if not ok:
            raise NotAGroup("parent monoid is not a group")
        M = self.parent
        if M.identity not in self.members:
            raise MonoidError("subgroup must contain the identity")
        for a in self.members:
            if inv[a] not in self.members:
                raise MonoidError(f"subgroup not closed under inverse at {M.label(a)}")
            for b in self.members:
                if M.mul(a, b) not in self.members:
                    raise MonoidError(f"subgroup not closed under product at ({M.label(a)},{M.label(b)})")

    @classmethod
    def from_labels(cls, G: FiniteMonoid, labels) -> "SubgroupSpec":
        return cls(G, frozenset(G.index(x) for x in labels))


def alternating_subgroup(G: FiniteMonoid) -> SubgroupSpec:
    """Even permutations inside a symmetric group built by `symmetric`."""
    def parity(label):
        p = [int(c) - 1 for c in label]
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2
    return SubgroupSpec(G, frozenset(i for i, x in enumerate(G.elements) if parity(x) == 0))


@dataclass(frozen=True)
class Quotient:
    group: FiniteMonoid
    projection: tuple[int, ...]
    representatives: tuple[int, ...]


def quotient_group(G: FiniteMonoid, N: SubgroupSpec) -> Quotient:
    """G/N on right cosets N g_i, with the smallest-index representative per coset."""
    ok, inv = is_group(G)
    if not ok:
        raise NotAGroup("quotient_group needs a group")
    members = N.members
    for g in range(len(G)):
        conj = {G.mul(G.mul(g, n), inv[g]) for n in members}
        if conj != set(members):
            raise NotNormal(G.label(g))
    coset_of = [-1] * len(G)
    reps = []
    for g in range(len(G)):
        if coset_of[g] >= 0:
            continue
        for n in members:
            coset_of[G.mul(n, g)] = len(reps)
        reps.append(g)
    r = len(reps)
    table = [[coset_of[G.mul(reps[i], reps[j])] for j in range(r)] for i in range(r)]
    labels = [f"N{G.label(g)}" for g in reps]
    Q = validate_monoid(labels, table, coset_of[G.identity])
    return Quotient(Q, tuple(coset_of), tuple(reps))
