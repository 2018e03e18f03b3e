"""Partial actions of finite monoids on finite sets and their globalization.

A partial action datum is a domain D (a subset of X x M) with a map
rho: D -> X, written x.m. Globalization quotients X x M by the equivalence
generated by (x.m, n) ~ (x, mn) and lets M act by [x, m].n = [x, mn].
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .monoid import FiniteMonoid, MonoidError, cyclic, transformation_monoid
from .report import Verdict, failed, passed
from .unionfind import UnionFind

DEFAULT_ENUMERATION_CAP = 10**6


class PartialActionError(ValueError):
    pass


class IllDefinedAction(RuntimeError):
    """The quotient action is not well defined; indicates a bug, not bad input."""


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PartialActionDatum:
    M: FiniteMonoid
    X: tuple[str, ...]
    domain: frozenset[tuple[int, int]]
    rho: Mapping[tuple[int, int], int]

    def __post_init__(self):
        nx, nm = len(self.X), len(self.M)
        if len(set(self.X)) != nx:
            raise PartialActionError("carrier labels are not distinct")
        for (x, m) in self.domain:
            if not (0 <= x < nx and 0 <= m < nm):
                raise PartialActionError(f"domain pair {(x, m)} out of range")
            if (x, m) not in self.rho:
                raise PartialActionError(f"rho undefined on domain pair ({self.X[x]},{self.M.label(m)})")
            if not 0 <= self.rho[(x, m)] < nx:
                raise PartialActionError(f"rho({self.X[x]},{self.M.label(m)}) lands outside X")
        extra = set(self.rho) - set(self.domain)
        if extra:
            x, m = min(extra)
            raise PartialActionError(f"rho defined outside the domain at ({self.X[x]},{self.M.label(m)})")

    def act(self, x: int, m: int) -> int | None:
        """x.m, or None when (x, m) is outside the domain."""
        return self.rho.get((x, m))

    def domain_of(self, m: int) -> frozenset[int]:
        """X_m = {x : (x, m) in D}."""
        return frozenset(x for x in range(len(self.X)) if (x, m) in self.domain)

    def sorted_domain(self) -> list[tuple[int, int]]:
        return sorted(self.domain)

    def __eq__(self, other):
        return (isinstance(other, PartialActionDatum) and self.M == other.M and self.X == other.X
                and self.domain == other.domain and dict(self.rho) == dict(other.rho))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class GlobalAction:
    M: FiniteMonoid
    Y: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[y][m] = y.m

    def __post_init__(self):
        ny = len(self.Y)
        if len(self.table) != ny or any(len(r) != len(self.M) for r in self.table):
            raise PartialActionError("action table has the wrong shape")
        e = self.M.identity
        for y in range(ny):
            if self.table[y][e] != y:
                raise PartialActionError(f"y.e != y at {self.Y[y]}")
            for m, n in product(range(len(self.M)), repeat=2):
                if self.table[self.table[y][m]][n] != self.table[y][self.M.mul(m, n)]:
                    raise PartialActionError(
                        f"(y.m).n != y.(mn) at ({self.Y[y]},{self.M.label(m)},{self.M.label(n)})")

    def act(self, y: int, m: int) -> int:
        return self.table[y][m]

    def __len__(self):
        return len(self.Y)

    def __eq__(self, other):
        return (isinstance(other, GlobalAction) and self.M == other.M and self.Y == other.Y
                and self.table == other.table)

    __hash__ = None


@dataclass(frozen=True)
class PartialMorphism:
    source: PartialActionDatum
    target: PartialActionDatum
    f: tuple[int, ...]
    f_dom: Mapping[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, eq=False)
class GlobalizationResult:
    Y: GlobalAction
    epsilon: tuple[int, ...]
    kappa: Mapping[tuple[int, int], int]
    classes: tuple[tuple[tuple[int, int], ...], ...]

    def class_labels(self, d: PartialActionDatum) -> list[list[str]]:
        return [[f"{d.X[x]},{d.M.label(m)}" for (x, m) in cls] for cls in self.classes]


# -- verification ------------------------------------------------------------

def verify_partial_action(d: PartialActionDatum) -> Verdict:
    """Unitality and partial associativity, with the first failing witness."""
    M, nx = d.M, len(d.X)
    e = M.identity
    for x in range(nx):
        if (x, e) not in d.domain:
            return failed("PA1", {"x": d.X[x]}, "X_e != X")
        if d.rho[(x, e)] != x:
            return failed("PA1", {"x": d.X[x]}, "alpha_e != id")
    dom = [d.domain_of(m) for m in range(len(M))]
    for m, n in product(range(len(M)), repeat=2):
        mn = M.mul(m, n)
        for x in range(nx):
            lhs = x in dom[m] and d.rho[(x, m)] in dom[n]
            rhs = x in dom[m] and x in dom[mn]
            wit = {"m": M.label(m), "n": M.label(n), "x": d.X[x]}
            if lhs != rhs:
                return failed("PA2", wit, "alpha_m^-1(X_n) != X_m & X_mn")
            if lhs and d.rho[(d.rho[(x, m)], n)] != d.rho[(x, mn)]:
                return failed("PA2", wit, "(x.m).n != x.(mn)")
    return passed("PA1+PA2")


def iterated_pullbacks(d: PartialActionDatum) -> tuple[frozenset, frozenset]:
    """The two sets (X.M).M and X.(M.M) as triples (x, m, n)."""
    M = d.M
    left = frozenset((x, m, n) for (x, m) in d.domain for n in range(len(M))
                     if (d.rho[(x, m)], n) in d.domain)
    right = frozenset((x, m, n) for (x, m) in d.domain for n in range(len(M))
                      if (x, M.mul(m, n)) in d.domain)
    return left, right


def view_global_as_partial(Y: GlobalAction) -> PartialActionDatum:
    dom = frozenset(product(range(len(Y.Y)), range(len(Y.M))))
    return PartialActionDatum(Y.M, Y.Y, dom, {(y, m): Y.act(y, m) for (y, m) in dom})


def induce_from_global(Y: GlobalAction, subset: Iterable[int]) -> PartialActionDatum:
    """Restrict a global action to a subset: D = {(x, m) : x.m stays in the subset}."""
    sub = sorted(set(subset))
    if not sub:
        raise PartialActionError("subset must be nonempty")
    pos = {y: i for i, y in enumerate(sub)}
    dom, rho = set(), {}
    for i, y in enumerate(sub):
        for m in range(len(Y.M)):
            z = Y.act(y, m)
            if z in pos:
                dom.add((i, m))
                rho[(i, m)] = pos[z]
    return PartialActionDatum(Y.M, tuple(Y.Y[y] for y in sub), frozenset(dom), rho)


def verify_morphism(mor: PartialMorphism) -> Verdict:
    src, dst = mor.source, mor.target
    if src.M != dst.M:
        return failed("morphism", None, "source and target live over different monoids")
    if len(mor.f) != len(src.X) or any(not 0 <= y < len(dst.X) for y in mor.f):
        return failed("morphism", None, "f is not a map X -> X'")
    for (x, m) in src.sorted_domain():
        wit = {"x": src.X[x], "m": src.M.label(m)}
        if (x, m) not in mor.f_dom:
            return failed("morphism", wit, "f.M undefined")
        img = mor.f_dom[(x, m)]
        if img not in dst.domain:
            return failed("morphism", wit, "f.M leaves the target domain")
        if img != (mor.f[x], m):
            return failed("morphism", wit, "(f x M) o pi != pi' o f.M")
        if mor.f[src.rho[(x, m)]] != dst.rho[img]:
            return failed("morphism", wit, "f o rho != rho' o f.M")
    return passed("morphism")


def morphism_from_map(src: PartialActionDatum, dst: PartialActionDatum, f: Sequence[int]) -> PartialMorphism:
    """The pair (f, f x M restricted to D); used when the target is global."""
    return PartialMorphism(src, dst, tuple(f), {(x, m): (f[x], m) for (x, m) in src.domain})


# -- globalization -----------------------------------------------------------

def globalize_set(d: PartialActionDatum) -> GlobalizationResult:
    v = verify_partial_action(d)
    if not v.ok:
        raise PartialActionError(f"partial action axioms fail: {v.detail} at {v.witness}")
    M = d.M
    nm = len(M)
    nx = len(d.X)
    uf = UnionFind(nx * nm)
    for (x, m) in d.domain:
        xm = d.rho[(x, m)]
        for n in range(nm):
            uf.union(xm * nm + n, x * nm + M.mul(m, n))
    groups = uf.classes()
    cls_of = {}
    for k, g in enumerate(groups):
        for i in g:
            cls_of[i] = k
    table = []
    for g in groups:
        row = []
        for n in range(nm):
            targets = {cls_of[(i // nm) * nm + M.mul(i % nm, n)] for i in g}
            if len(targets) != 1:
                raise IllDefinedAction(f"[x,m].n is not well defined on class {g}")
            row.append(targets.pop())
        table.append(tuple(row))
    classes = tuple(tuple((i // nm, i % nm) for i in g) for g in groups)
    labels = tuple(f"[{d.X[c[0][0]]},{M.label(c[0][1])}]" for c in classes)
    Y = GlobalAction(M, labels, tuple(table))
    kappa = {(x, m): cls_of[x * nm + m] for x in range(nx) for m in range(nm)}
    eps = tuple(kappa[(x, M.identity)] for x in range(nx))
    if len(set(eps)) != nx:
        raise IllDefinedAction("epsilon_X is not injective")
    return GlobalizationResult(Y, eps, kappa, classes)


def check_GL1_pullback(d: PartialActionDatum, res: GlobalizationResult) -> Verdict:
    """D is exactly kappa^-1(eps(X)) and rho = eps^-1 o kappa there."""
    inv = {y: x for x, y in enumerate(res.epsilon)}
    for x, m in product(range(len(d.X)), range(len(d.M))):
        k = res.kappa[(x, m)]
        wit = {"x": d.X[x], "m": d.M.label(m)}
        if ((x, m) in d.domain) != (k in inv):
            return failed("GL1", wit, "D != kappa^-1(eps(X))")
        if (x, m) in d.domain and inv[k] != d.rho[(x, m)]:
            return failed("GL1", wit, "rho != eps^-1 o kappa")
    for x, m in product(range(len(d.X)), range(len(d.M))):
        if res.kappa[(x, m)] != res.Y.act(res.epsilon[x], m):
            return failed("GL1", {"x": d.X[x], "m": d.M.label(m)}, "kappa != act o (eps x M)")
    return passed("GL1")


def _backtrack_maps(n_src: int, n_dst: int, constraints) -> list[tuple[int, ...]]:
    """All maps range(n_src) -> range(n_dst) satisfying the constraints.

    constraints[i] lists predicates to test once points 0..i are assigned.
    """
    out = []
    vals = [0] * n_src

    def go(i):
        if i == n_src:
            out.append(tuple(vals))
            return
        for v in range(n_dst):
            vals[i] = v
            if all(c(vals) for c in constraints[i]):
                go(i + 1)

    go(0)
    return out


def equivariant_maps(Y: GlobalAction, Z: GlobalAction) -> list[tuple[int, ...]]:
    """Hom of global M-sets Y -> Z."""
    cons: list[list] = [[] for _ in range(len(Y))]
    for y in range(len(Y)):
        for m in range(len(Y.M)):
            t = Y.act(y, m)
            last = max(y, t)
            cons[last].append(lambda v, y=y, m=m, t=t: Z.act(v[y], m) == v[t])
    return _backtrack_maps(len(Y), len(Z), cons)


def partial_to_global_maps(d: PartialActionDatum, Z: GlobalAction) -> list[tuple[int, ...]]:
    """Maps f: X -> Z with f(x).m = f(x.m) on D, i.e. partial morphisms X -> I(Z)."""
    cons: list[list] = [[] for _ in range(len(d.X))]
    for (x, m) in d.domain:
        t = d.rho[(x, m)]
        cons[max(x, t)].append(lambda v, x=x, m=m, t=t: Z.act(v[x], m) == v[t])
    return _backtrack_maps(len(d.X), len(Z), cons)


def check_GL2_universal(d: PartialActionDatum, res: GlobalizationResult, Z: GlobalAction,
                        cap: int = DEFAULT_ENUMERATION_CAP) -> Verdict:
    """eta -> eta o eps is a bijection Hom(Y, Z) -> Hom_partial(X, I(Z))."""
    if Z.M != d.M:
        return failed("GL2", None, "target lives over a different monoid")
    if len(Z) ** len(res.Y) > cap or len(Z) ** len(d.X) > cap:
        raise EnumerationTooLarge(f"|Z|^|Y| = {len(Z)}^{len(res.Y)} exceeds cap {cap}")
    homs = equivariant_maps(res.Y, Z)
    partial = set(partial_to_global_maps(d, Z))
    images = [tuple(eta[res.epsilon[x]] for x in range(len(d.X))) for eta in homs]
    if len(set(images)) != len(images):
        return failed("GL2", {"hom_global": len(homs)}, "restriction is not injective")
    if set(images) != partial:
        missing = sorted(partial - set(images))
        return failed("GL2", {"unreached": [list(m) for m in missing[:1]]}, "restriction is not surjective")
    return passed("GL2", f"{len(homs)} maps on each side")


def induced_global_map(mor: PartialMorphism, res_src: GlobalizationResult,
                       res_dst: GlobalizationResult) -> tuple[int, ...]:
    """[x, m] -> [f(x), m]; raises IllDefinedAction if it is not well defined."""
    out = {}
    for k, cls in enumerate(res_src.classes):
        imgs = {res_dst.kappa[(mor.f[x], m)] for (x, m) in cls}
        if len(imgs) != 1:
            raise IllDefinedAction(f"induced map not well defined on class {k}")
        out[k] = imgs.pop()
    return tuple(out[k] for k in range(len(res_src.classes)))


def is_equivariant(f: Sequence[int], Y: GlobalAction, Z: GlobalAction) -> bool:
    return all(f[Y.act(y, m)] == Z.act(f[y], m) for y in range(len(Y)) for m in range(len(Y.M)))


def is_isomorphism(f: Sequence[int], Y: GlobalAction, Z: GlobalAction) -> bool:
    return len(Y) == len(Z) and len(set(f)) == len(Z) and is_equivariant(f, Y, Z)


# -- seeded random inputs ----------------------------------------------------

def random_monoid(rng: random.Random, max_size: int = 5) -> FiniteMonoid:
    """A cyclic group or a transformation monoid on at most 3 points, of size <= max_size."""
    while True:
        if rng.random() < 0.3:
            return cyclic(rng.randint(1, max_size))
        n = rng.randint(2, 3)
        gens = [[rng.randrange(n) for _ in range(n)] for _ in range(rng.randint(1, 2))]
        try:
            return transformation_monoid(n, gens, size_cap=max_size)
        except MonoidError:
            continue


def random_cyclic_mset(rng: random.Random, M: FiniteMonoid) -> GlobalAction:
    """A quotient of the right regular action of M by a random congruence."""
    nm = len(M)
    uf = UnionFind(nm)
    todo = [(rng.randrange(nm), rng.randrange(nm)) for _ in range(rng.randint(0, 2))]
    while todo:
        a, b = todo.pop()
        if uf.union(a, b):
            todo.extend((M.mul(a, n), M.mul(b, n)) for n in range(nm))
    roots = sorted({uf.find(a) for a in range(nm)})
    pos = {r: i for i, r in enumerate(roots)}
    table = tuple(tuple(pos[uf.find(M.mul(r, n))] for n in range(nm)) for r in roots)
    return GlobalAction(M, tuple(M.label(r) for r in roots), table)


def disjoint_union(Y: GlobalAction, Z: GlobalAction) -> GlobalAction:
    off = len(Y)
    labels = tuple(f"{y}'" for y in Y.Y) + tuple(f"{z}\"" for z in Z.Y)
    table = Y.table + tuple(tuple(off + t for t in row) for row in Z.table)
    return GlobalAction(Y.M, labels, table)


def random_partial_action(rng: random.Random, max_x: int = 5, max_m: int = 5,
                          M: FiniteMonoid | None = None) -> PartialActionDatum:
    """A verified partial action with |X| <= max_x over a monoid of size <= max_m.

    Half the draws sample rho directly and keep the first one that satisfies
    the axioms; the rest restrict a random global action to a random subset.
    """
    M = M or random_monoid(rng, max_m)
    nm = len(M)
    if rng.random() < 0.5:
        for _ in range(40):
            nx = rng.randint(1, max_x)
            dom = {(x, M.identity) for x in range(nx)}
            rho = {(x, M.identity): x for x in range(nx)}
            for x in range(nx):
                for m in range(nm):
                    if m != M.identity and rng.random() < 0.5:
                        dom.add((x, m))
                        rho[(x, m)] = rng.randrange(nx)
            d = PartialActionDatum(M, tuple(f"x{i}" for i in range(nx)), frozenset(dom), rho)
            if verify_partial_action(d).ok:
                return d
    k = rng.randint(1, max_x)
    Y = random_cyclic_mset(rng, M)
    while len(Y) < k + rng.randint(0, 2):
        Y = disjoint_union(Y, random_cyclic_mset(rng, M))
    return induce_from_global(Y, rng.sample(range(len(Y)), k))
