"""Partial actions of finite topological monoids on finite spaces.

Indexing conventions: a pair (x, m) of X x M sits at x*|M| + m; the domain D
is indexed in the order of `PartialActionDatum.sorted_domain()`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from . import fintop
from .fintop import (FinTopology, bits, initial_topology, is_continuous, is_open_embedding,
                     product_topology, quotient_topology, subspace_topology, to_mask)
from .monoid import FiniteMonoid, cyclic, is_group, semilattice2
from .report import Verdict, failed, passed
from .setact import (GlobalAction, GlobalizationResult, PartialActionDatum, globalize_set,
                     induce_from_global, verify_partial_action)


class TopActionError(ValueError):
    pass


class ActionNotContinuous(TopActionError):
    def __init__(self, which: str, witness):
        super().__init__(f"{which} is not continuous: preimage of {witness} is not open")
        self.which = which
        self.witness = witness


@dataclass(frozen=True)
class TopMonoid:
    monoid: FiniteMonoid
    topology: FinTopology

    def __post_init__(self):
        M, t = self.monoid, self.topology
        if t.carrier_size != len(M):
            raise TopActionError("topology carrier does not match the monoid")
        n = len(M)
        mult = [M.mul(a, b) for a in range(n) for b in range(n)]
        if not is_continuous(mult, product_topology(t, t), t):
            raise TopActionError("multiplication is not continuous")
        ok, inv = is_group(M)
        if ok and not is_continuous(inv, t, t):
            raise TopActionError("inversion is not continuous")


def multiplication_is_continuous(M: FiniteMonoid, t: FinTopology) -> bool:
    n = len(M)
    return is_continuous([M.mul(a, b) for a in range(n) for b in range(n)], product_topology(t, t), t)


@dataclass(frozen=True, eq=False)
class TopPartialModule:
    base: PartialActionDatum
    tX: FinTopology
    tM: TopMonoid
    tD: FinTopology

    def __post_init__(self):
        if self.tX.carrier_size != len(self.base.X):
            raise TopActionError("tX carrier does not match X")
        if self.tM.monoid != self.base.M:
            raise TopActionError("topological monoid does not match the datum")
        if self.tD.carrier_size != len(self.base.domain):
            raise TopActionError("tD carrier does not match the domain")

    @property
    def domain_list(self) -> list[tuple[int, int]]:
        return self.base.sorted_domain()

    @property
    def nm(self) -> int:
        return len(self.base.M)

    def pi(self) -> list[int]:
        """Inclusion D -> X x M as a list of product indices."""
        return [x * self.nm + m for (x, m) in self.domain_list]

    def rho(self) -> list[int]:
        return [self.base.rho[p] for p in self.domain_list]

    def product(self) -> FinTopology:
        return product_topology(self.tX, self.tM.topology)

    def domain_label(self, u: int) -> list[list[str]]:
        dl = self.domain_list
        return [[self.base.X[dl[i][0]], self.base.M.label(dl[i][1])] for i in bits(u)]


@dataclass(frozen=True, eq=False)
class TopGlobalizationResult:
    set_result: GlobalizationResult
    tY: FinTopology
    initial: FinTopology
    globalizable: bool
    witness: dict | None = None
    checks: list[Verdict] = field(default_factory=list)


def subspace_domain_topology(d: PartialActionDatum, tX: FinTopology, tM: FinTopology) -> FinTopology:
    nm = len(d.M)
    return subspace_topology(product_topology(tX, tM), [x * nm + m for (x, m) in d.sorted_domain()])


def initial_domain_topology(m: TopPartialModule) -> FinTopology:
    """Coarsest topology on D making pi and rho continuous."""
    return initial_topology(len(m.domain_list), [(m.product(), m.pi()), (m.tX, m.rho())])


def _pullback_topologies(m: TopPartialModule):
    """Topologies of (X.M).M and X.(M.M) on their common set of triples."""
    d = m.base
    M = d.M
    nm = len(M)
    dl = m.domain_list
    pos = {p: i for i, p in enumerate(dl)}
    left = sorted((x, a, n) for (x, a) in dl for n in range(nm) if (d.rho[(x, a)], n) in d.domain)
    right = sorted((x, a, n) for (x, a) in dl for n in range(nm) if (x, M.mul(a, n)) in d.domain)
    if left != right:
        return left, right, None, None
    DM = product_topology(m.tD, m.tM.topology)
    to_DM = [pos[(x, a)] * nm + n for (x, a, n) in left]
    rho_leg = [pos[(d.rho[(x, a)], n)] for (x, a, n) in left]
    delta_leg = [pos[(x, M.mul(a, n))] for (x, a, n) in left]
    t_left = initial_topology(len(left), [(DM, to_DM), (m.tD, rho_leg)])
    t_right = initial_topology(len(left), [(DM, to_DM), (m.tD, delta_leg)])
    return left, right, t_left, t_right


def verify_top_module(m: TopPartialModule) -> Verdict:
    v = verify_partial_action(m.base)
    if not v.ok:
        return v
    M = m.base.M
    tMt = m.tM.topology
    if not multiplication_is_continuous(M, tMt):
        return failed("Delta continuous", None, "multiplication on M is not continuous")
    P = m.product()
    w = fintop.continuity_witness(m.pi(), m.tD, P)
    if w is not None:
        return failed("pi continuous", {"open": _pair_labels(m, w)}, "ActionNotContinuous: pi_X")
    w = fintop.continuity_witness(m.rho(), m.tD, m.tX)
    if w is not None:
        return failed("rho continuous", {"open": [m.base.X[i] for i in bits(w)]},
                      "ActionNotContinuous: rho_X")
    left, right, tl, tr = _pullback_topologies(m)
    if tl is None:
        return failed("theta", None, "iterated pullbacks differ as sets")
    if tl != tr:
        for i in range(len(left)):
            if tl.minimal[i] != tr.minimal[i]:
                x, a, n = left[i]
                return failed("theta", {"x": m.base.X[x], "m": M.label(a), "n": M.label(n)},
                              "theta is not a homeomorphism")
    return passed("geometric partial module")


def require_top_module(m: TopPartialModule) -> None:
    """verify_top_module, raising on failure."""
    v = verify_top_module(m)
    if v.ok:
        return
    if v.name in ("pi continuous", "rho continuous"):
        raise ActionNotContinuous(v.name.split()[0], v.witness)
    raise TopActionError(f"{v.name}: {v.detail} at {v.witness}")


def _pair_labels(m: TopPartialModule, u: int) -> list[list[str]]:
    nm = m.nm
    return [[m.base.X[i // nm], m.base.M.label(i % nm)] for i in bits(u)]


def is_topological_partial_action(m: TopPartialModule) -> bool:
    """pi: D -> X x M is an open embedding."""
    return is_open_embedding(m.pi(), m.tD, m.product())


def tpa_remarks(m: TopPartialModule) -> dict[str, tuple[bool, bool]]:
    """Per monoid element: (X_m open in X, alpha_m continuous on X_m)."""
    d = m.base
    out = {}
    for a in range(len(d.M)):
        dom = sorted(d.domain_of(a))
        is_open = m.tX.is_open(to_mask(dom))
        if dom:
            sub = subspace_topology(m.tX, dom)
            cont = is_continuous([d.rho[(x, a)] for x in dom], sub, m.tX)
        else:
            cont = True
        out[d.M.label(a)] = (is_open, cont)
    return out


def _top_witness(m: TopPartialModule, tstar: FinTopology) -> dict:
    for i in range(len(m.domain_list)):
        u = m.tD.minimal[i]
        if not tstar.is_open(u):
            return {"open": m.domain_label(u), "in": "tD", "not_in": "initial"}
    for i in range(len(m.domain_list)):
        u = tstar.minimal[i]
        if not m.tD.is_open(u):
            return {"open": m.domain_label(u), "in": "initial", "not_in": "tD"}
    return {}


def action_topology_checks(res: GlobalizationResult, tY: FinTopology, tM: FinTopology) -> bool:
    Y = res.Y
    nm = len(Y.M)
    act = [Y.act(y, n) for y in range(len(Y)) for n in range(nm)]
    return is_continuous(act, product_topology(tY, tM), tY)


def globalize_top(m: TopPartialModule) -> TopGlobalizationResult:
    res = globalize_set(m.base)
    d = m.base
    nm = m.nm
    nx = len(d.X)
    P = m.product()
    kappa = [res.kappa[(x, a)] for x in range(nx) for a in range(nm)]
    tY = quotient_topology(P, kappa, len(res.Y))
    tstar = initial_domain_topology(m)
    ok = m.tD == tstar
    checks = []
    if not action_topology_checks(res, tY, m.tM.topology):
        raise TopActionError("quotient topology does not make the global action continuous")
    checks.append(passed("action continuous on Y"))
    if ok:
        v = check_GL1_top(m, res, tY)
        if not v.ok:
            raise TopActionError(f"GL1 cross-check failed: {v.detail}")
        checks.append(v)
    return TopGlobalizationResult(res, tY, tstar, ok, None if ok else _top_witness(m, tstar), checks)


def check_GL1_top(m: TopPartialModule, res: GlobalizationResult, tY: FinTopology) -> Verdict:
    """D with tD is the Top pullback of kappa and eps, built as a subspace of (X x M) x X."""
    d = m.base
    nm, nx = m.nm, len(d.X)
    big = product_topology(m.product(), m.tX)
    pts = [(p, x) for p in range(nx * nm) for x in range(nx)
           if res.kappa[(p // nm, p % nm)] == res.epsilon[x]]
    comparison = [(xm[0] * nm + xm[1]) * nx + d.rho[xm] for xm in m.domain_list]
    if sorted(comparison) != sorted(p * nx + x for p, x in pts):
        return failed("GL1 (Top)", None, "comparison map is not a bijection onto the pullback")
    pulled = subspace_topology(big, comparison)
    if pulled != m.tD:
        return failed("GL1 (Top)", None, "tD differs from the pullback topology")
    return passed("GL1 (Top)")


def check_kappa_identity(m: TopPartialModule, res: TopGlobalizationResult) -> Verdict:
    """kappa^-1(eps(V)) = pi(rho^-1(V)) for every open V of X."""
    d = m.base
    nm = m.nm
    sres = res.set_result
    pi, rho = m.pi(), m.rho()
    for V in m.tX.opens:
        eps_v = {sres.epsilon[x] for x in bits(V)}
        lhs = to_mask(x * nm + a for x in range(len(d.X)) for a in range(nm)
                      if sres.kappa[(x, a)] in eps_v)
        rhs = to_mask(pi[i] for i in range(len(pi)) if V >> rho[i] & 1)
        if lhs != rhs:
            return failed("kappa identity", {"V": [d.X[i] for i in bits(V)]},
                          "kappa^-1(eps(V)) != pi(rho^-1(V))")
    return passed("kappa identity")


def check_epsilon_open_embedding(m: TopPartialModule, res: TopGlobalizationResult) -> bool:
    if not res.globalizable:
        raise TopActionError("epsilon is only meaningful for globalizable modules")
    ok = is_open_embedding(list(res.set_result.epsilon), m.tX, res.tY)
    if is_topological_partial_action(m):
        if not ok:
            raise TopActionError("topological partial action whose epsilon is not an open embedding")
        v = check_kappa_identity(m, res)
        if not v.ok:
            raise TopActionError(f"{v.detail} at {v.witness}")
    return ok


def induce_from_global_top(Y: GlobalAction, tY: FinTopology, tM: TopMonoid,
                           subset: Sequence[int]) -> TopPartialModule:
    nm = len(Y.M)
    act = [Y.act(y, n) for y in range(len(Y)) for n in range(nm)]
    w = fintop.continuity_witness(act, product_topology(tY, tM.topology), tY)
    if w is not None:
        raise ActionNotContinuous("global action", [Y.Y[y] for y in bits(w)])
    sub = sorted(set(subset))
    base = induce_from_global(Y, sub)
    tX = subspace_topology(tY, sub)
    tD = subspace_domain_topology(base, tX, tM.topology)
    mod = TopPartialModule(base, tX, tM, tD)
    if is_open_embedding(sub, tX, tY) and not is_topological_partial_action(mod):
        raise TopActionError("restriction along an open embedding is not a topological partial action")
    return mod


# -- exhaustive enumeration --------------------------------------------------

def small_monoids(max_size: int = 2) -> list[FiniteMonoid]:
    """Every monoid of order <= 2 up to isomorphism (larger orders are not catalogued)."""
    out = [cyclic(1)]
    if max_size >= 2:
        out += [cyclic(2), semilattice2()]
    return out


def all_partial_actions(M: FiniteMonoid, nx: int) -> Iterator[PartialActionDatum]:
    """Every partial action of M on range(nx) passing the axioms."""
    labels = tuple(f"x{i}" for i in range(nx))
    e = M.identity
    others = [a for a in range(len(M)) if a != e]
    slots = [(x, a) for a in others for x in range(nx)]
    # each slot is either undefined (None) or sent to some point
    for vals in product([None] + list(range(nx)), repeat=len(slots)):
        dom = {(x, e) for x in range(nx)}
        rho = {(x, e): x for x in range(nx)}
        for s, v in zip(slots, vals):
            if v is not None:
                dom.add(s)
                rho[s] = v
        d = PartialActionDatum(M, labels, frozenset(dom), rho)
        if verify_partial_action(d).ok:
            yield d


def domain_topology_candidates(m_base: PartialActionDatum, tX: FinTopology, tM: FinTopology,
                               exhaustive_max: int = 4) -> list[FinTopology]:
    """Topologies on D making pi and rho continuous.

    Exhaustive (all topologies finer than the initial one) when |D| is at most
    `exhaustive_max`; otherwise a finite family: the initial topology joined with
    the subspace topologies of every finer product topology tX' x tM'.
    """
    nm = len(m_base.M)
    dl = m_base.sorted_domain()
    pi = [x * nm + a for (x, a) in dl]
    rho = [m_base.rho[p] for p in dl]
    P = product_topology(tX, tM)
    tstar = initial_topology(len(dl), [(P, pi), (tX, rho)])
    if len(dl) <= exhaustive_max:
        return fintop.finer_topologies(tstar)
    seen = {tstar}
    out = [tstar]
    for sx in fintop.finer_topologies(tX):
        for sm in fintop.finer_topologies(tM):
            sub = subspace_topology(product_topology(sx, sm), pi)
            joined = FinTopology(len(dl), [a & b for a, b in zip(sub.minimal, tstar.minimal)])
            if joined not in seen:
                seen.add(joined)
                out.append(joined)
    return out


def enumerate_top_bases(max_x: int = 3, max_m: int = 2
                        ) -> Iterator[tuple[PartialActionDatum, FinTopology, TopMonoid]]:
    """Every (datum, tX, tM) below the size bounds; tD is left open."""
    for M in small_monoids(max_m):
        for tMt in fintop.all_topologies(len(M)):
            if not multiplication_is_continuous(M, tMt):
                continue
            try:
                tM = TopMonoid(M, tMt)
            except TopActionError:
                continue
            for nx in range(1, max_x + 1):
                datums = list(all_partial_actions(M, nx))
                for tX in fintop.all_topologies(nx):
                    for d in datums:
                        yield d, tX, tM


def enumerate_top_modules(max_x: int = 3, max_m: int = 2, exhaustive_max: int = 4
                          ) -> Iterator[TopPartialModule]:
    """Every verified topological partial-module structure in the given size range
    (all of them when |D| <= exhaustive_max, see domain_topology_candidates)."""
    for d, tX, tM in enumerate_top_bases(max_x, max_m):
        for tD in domain_topology_candidates(d, tX, tM.topology, exhaustive_max):
            mod = TopPartialModule(d, tX, tM, tD)
            if verify_top_module(mod).ok:
                yield mod
