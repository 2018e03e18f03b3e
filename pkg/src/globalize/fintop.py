"""Topologies on finite carriers, stored as families of open sets (bitsets).

Point i of a carrier is bit i. Every finite topology is determined by the
smallest open neighbourhood of each point; those are cached and used for the
constructions, while `opens` always returns the full canonically sorted family.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_POINTS = 64


class TopologyError(ValueError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, u, v):
        super().__init__(f"union of {sorted(bits(u))} and {sorted(bits(v))} is not open")
        self.witness = (u, v)


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, u, v):
        super().__init__(f"intersection of {sorted(bits(u))} and {sorted(bits(v))} is not open")
        self.witness = (u, v)


class NotSurjective(TopologyError):
    pass


def bits(u: int) -> list[int]:
    out = []
    i = 0
    while u:
        if u & 1:
            out.append(i)
        u >>= 1
        i += 1
    return out


def to_mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _preimage(f: Sequence[int], u: int) -> int:
    m = 0
    for i, y in enumerate(f):
        if u >> y & 1:
            m |= 1 << i
    return m


def _image(f: Sequence[int], u: int) -> int:
    m = 0
    for i in bits(u):
        m |= 1 << f[i]
    return m


class FinTopology:
    """A topology on range(carrier_size)."""

    __slots__ = ("carrier_size", "minimal", "_opens")

    def __init__(self, carrier_size: int, minimal: Sequence[int]):
        if carrier_size > MAX_POINTS:
            raise TopologyError(f"carrier of {carrier_size} points exceeds {MAX_POINTS}")
        self.carrier_size = carrier_size
        self.minimal = tuple(minimal)
        self._opens = None

    @property
    def full(self) -> int:
        return (1 << self.carrier_size) - 1

    @property
    def opens(self) -> tuple[int, ...]:
        if self._opens is None:
            fam = {0}
            for u in set(self.minimal):
                fam |= {v | u for v in fam}
            self._opens = tuple(sorted(fam))
        return self._opens

    def is_open(self, u: int) -> bool:
        return all(self.minimal[x] & ~u == 0 for x in bits(u))

    def interior(self, u: int) -> int:
        return to_mask(x for x in bits(u) if self.minimal[x] & ~u == 0)

    def is_finer_than(self, other: "FinTopology") -> bool:
        return all(self.minimal[x] & ~other.minimal[x] == 0 for x in range(self.carrier_size))

    def __eq__(self, other):
        return (isinstance(other, FinTopology) and self.carrier_size == other.carrier_size
                and self.minimal == other.minimal)

    def __hash__(self):
        return hash((self.carrier_size, self.minimal))

    def __repr__(self):
        return f"FinTopology({self.carrier_size}, opens={[bits(u) for u in self.opens]})"


def _minimal_from_opens(n: int, opens: Sequence[int]) -> list[int]:
    full = (1 << n) - 1
    mins = []
    for x in range(n):
        m = full
        for u in opens:
            if u >> x & 1:
                m &= u
        mins.append(m)
    return mins


def validate_topology(carrier_size: int, opens: Iterable) -> FinTopology:
    """Check that a family of subsets (bitsets or point iterables) is a topology."""
    fam = set()
    full = (1 << carrier_size) - 1
    for u in opens:
        m = u if isinstance(u, int) else to_mask(u)
        if m & ~full:
            raise TopologyError(f"open set {bits(m)} is not a subset of the carrier")
        fam.add(m)
    if 0 not in fam:
        raise TopologyError("the empty set must be open")
    if full not in fam:
        raise TopologyError("the whole carrier must be open")
    ordered = sorted(fam)
    for u, v in combinations(ordered, 2):
        if u | v not in fam:
            raise NotClosedUnderUnion(u, v)
        if u & v not in fam:
            raise NotClosedUnderIntersection(u, v)
    t = FinTopology(carrier_size, _minimal_from_opens(carrier_size, ordered))
    t._opens = tuple(ordered)
    return t


def discrete(n: int) -> FinTopology:
    return FinTopology(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> FinTopology:
    full = (1 << n) - 1
    return FinTopology(n, [full] * n)


def generated_topology(n: int, subbasis: Iterable) -> FinTopology:
    """Coarsest topology containing the given subsets."""
    sets = [u if isinstance(u, int) else to_mask(u) for u in subbasis]
    return FinTopology(n, _minimal_from_opens(n, sets))


def product_topology(t1: FinTopology, t2: FinTopology) -> FinTopology:
    """Product on carrier1 x carrier2, pair (i, j) at index i*size2 + j."""
    n2 = t2.carrier_size
    mins = []
    for i in range(t1.carrier_size):
        rows = bits(t1.minimal[i])
        for j in range(n2):
            m = 0
            for r in rows:
                m |= t2.minimal[j] << (r * n2)
            mins.append(m)
    return FinTopology(t1.carrier_size * n2, mins)


def subspace_topology(t: FinTopology, subset: Sequence[int]) -> FinTopology:
    """Topology induced on `subset`; point k of the result is subset[k]."""
    return initial_topology(len(subset), [(t, list(subset))])


def quotient_topology(t: FinTopology, q: Sequence[int], target_size: int | None = None) -> FinTopology:
    """Finest topology on the image making q continuous."""
    if target_size is None:
        target_size = max(q) + 1 if q else 0
    if set(q) != set(range(target_size)):
        raise NotSurjective("quotient map is not surjective")
    mins = []
    for y in range(target_size):
        v = 1 << y
        while True:
            grow = 0
            for x in bits(_preimage(q, v)):
                grow |= t.minimal[x]
            nv = v | _image(q, grow)
            if nv == v:
                break
            v = nv
        mins.append(v)
    return FinTopology(target_size, mins)


def initial_topology(carrier_size: int, maps: Sequence[tuple[FinTopology, Sequence[int]]]) -> FinTopology:
    """Coarsest topology making every (target, f) in `maps` continuous."""
    full = (1 << carrier_size) - 1
    mins = []
    for x in range(carrier_size):
        m = full
        for target, f in maps:
            m &= _preimage(f, target.minimal[f[x]])
        mins.append(m)
    return FinTopology(carrier_size, mins)


def is_continuous(f: Sequence[int], src: FinTopology, dst: FinTopology) -> bool:
    """Preimages of the basic opens of dst are open (enough since they form a basis)."""
    return all(src.is_open(_preimage(f, u)) for u in set(dst.minimal))


def continuity_witness(f: Sequence[int], src: FinTopology, dst: FinTopology) -> int | None:
    """An open set of dst whose preimage is not open, or None."""
    for u in dst.opens:
        if not src.is_open(_preimage(f, u)):
            return u
    return None


def is_open_embedding(f: Sequence[int], src: FinTopology, dst: FinTopology) -> bool:
    if len(set(f)) != len(f):
        return False
    if not is_continuous(f, src, dst):
        return False
    if not dst.is_open(to_mask(f)):
        return False
    return initial_topology(src.carrier_size, [(dst, f)]) == src


def is_hausdorff(t: FinTopology) -> bool:
    """Every two points have disjoint neighbourhoods; for finite spaces this is discreteness."""
    sep = all(t.minimal[x] & t.minimal[y] == 0
              for x, y in combinations(range(t.carrier_size), 2))
    assert sep == (t == discrete(t.carrier_size))
    return sep


@lru_cache(maxsize=None)
def all_topologies(n: int) -> tuple[FinTopology, ...]:
    """Every topology on n points (29 for n = 3, 355 for n = 4)."""
    if n > 5:
        raise TopologyError("exhaustive enumeration is limited to 5 points")
    return tuple(finer_topologies(indiscrete(n)))


def finer_topologies(t: FinTopology) -> list[FinTopology]:
    """All topologies on the same carrier that contain every open of t."""
    n = t.carrier_size
    choices = []
    for x in range(n):
        others = [y for y in bits(t.minimal[x]) if y != x]
        opts = []
        for r in range(len(others) + 1):
            for c in combinations(others, r):
                opts.append((1 << x) | to_mask(c))
        choices.append(opts)
    out = []
    mins = [0] * n

    def consistent(k):
        # y in U_x forces U_y inside U_x, for all assigned x, y
        for x in range(k + 1):
            for y in bits(mins[x]):
                if y <= k and mins[y] & ~mins[x]:
                    return False
        return True

    def go(k):
        if k == n:
            out.append(FinTopology(n, mins))
            return
        for m in choices[k]:
            mins[k] = m
            if consistent(k):
                go(k + 1)

    go(0)
    return out
