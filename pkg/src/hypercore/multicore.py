"""Total multi-cores for commodity graphs: the interval family of the demand
pairs, the constructive hitting-set route, and brute-force oracles for the
hitting, packing, and multi-core numbers at desk scale.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .graphs import Ball, DistanceMatrix, Graph, intercepts_pair, interval
from .halfint import HalfInt
from .quasiconvex import QSetFamily, greedy_hit_pack, neighborhood


@dataclass(frozen=True)
class CommodityGraph:
    """Profile X plus the demand pairs F whose traffic must be intercepted."""

    profile: tuple[int, ...]
    demands: tuple[tuple[int, int], ...]

    def __post_init__(self):
        members = set(self.profile)
        for x, y in self.demands:
            if x == y:
                raise ValueError(f"demand pair ({x},{y}) has equal endpoints")
            if x not in members or y not in members:
                raise ValueError(f"demand pair ({x},{y}) leaves the profile")

    @classmethod
    def from_pairs(
        cls, pairs: Sequence[tuple[int, int]], profile: Sequence[int] | None = None
    ) -> "CommodityGraph":
        if profile is None:
            profile = sorted({v for p in pairs for v in p})
        return cls(profile=tuple(sorted(set(profile))), demands=tuple(tuple(p) for p in pairs))


@dataclass(frozen=True)
class MultiCoreResult:
    centers: tuple[int, ...]
    radius: int
    covered: bool


def interval_family(dm: DistanceMatrix, R: CommodityGraph) -> QSetFamily:
    """One measured quasiconvex set per demand pair: its interval.  Duplicate
    demand pairs keep duplicate sets (multiset semantics)."""
    if not R.demands:
        raise ValueError("commodity graph has no demand pairs")
    return QSetFamily.measure(
        dm,
        [interval(dm, x, y) for x, y in R.demands],
        names=[f"I({x},{y})" for x, y in R.demands],
    )


def multicore_construct(
    g: Graph, dm: DistanceMatrix, R: CommodityGraph, r: int, delta: HalfInt
) -> MultiCoreResult:
    """Centers of radius-r balls jointly intercepting every demand pair.

    Runs the greedy hitting/packing pass on the demand intervals with gap
    r - 5*delta (clamped at 0); hitting the (r - delta)-inflation of an
    interval is enough to intercept every geodesic of its pair at radius r.
    The returned flag records the exhaustive per-pair interception check.
    Requires r >= 8*delta, the hypothesis under which the covering radius
    collapses below r - delta.
    """
    floor8 = (delta * 8).floor()
    if r < floor8:
        raise ValueError(
            f"radius r={r} below 8*delta={delta * 8}: the multi-core construction "
            f"requires r >= 8*delta"
        )
    fam = interval_family(dm, R)
    gap = max((HalfInt(r) - delta * 5).floor(), 0)
    hp = greedy_hit_pack(dm, g, fam, gap, delta)
    centers = hp.hitting_set
    covered = all(
        any(intercepts_pair(g, dm, Ball(c, r), x, y) for c in centers) for x, y in R.demands
    )
    return MultiCoreResult(centers=centers, radius=r, covered=covered)


def _interception_masks(g: Graph, dm: DistanceMatrix, R: CommodityGraph, r: int) -> list[int]:
    """Per-vertex bitmask of demand pairs intercepted by a radius-r ball."""
    masks = [0] * g.n
    for v in range(g.n):
        b = Ball(v, r)
        for i, (x, y) in enumerate(R.demands):
            if intercepts_pair(g, dm, b, x, y):
                masks[v] |= 1 << i
    return masks


def brute_sigma(
    g: Graph, dm: DistanceMatrix, R: CommodityGraph, r: int, k_max: int
) -> int | None:
    """Exact smallest number of radius-r balls intercepting all demand pairs,
    or None when every size up to k_max fails.  Exhaustive; oracle scale only."""
    if not R.demands:
        raise ValueError("commodity graph has no demand pairs")
    masks = _interception_masks(g, dm, R, r)
    full = (1 << len(R.demands)) - 1
    candidates = [v for v in range(g.n) if masks[v]]
    for k in range(1, k_max + 1):
        for combo in combinations(candidates, k):
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                return k
    return None


def brute_tau(n: int, vertex_sets: Sequence[Sequence[int]], k_max: int | None = None) -> int | None:
    """Exact hitting number of a family of vertex sets by exhaustive search."""
    sets = [frozenset(s) for s in vertex_sets]
    if any(not s for s in sets):
        raise ValueError("cannot hit an empty set")
    limit = len(sets) if k_max is None else k_max
    full = (1 << len(sets)) - 1
    hit_mask = [0] * n
    for i, s in enumerate(sets):
        for v in s:
            hit_mask[v] |= 1 << i
    candidates = [v for v in range(n) if hit_mask[v]]
    for k in range(1, limit + 1):
        for combo in combinations(candidates, k):
            acc = 0
            for v in combo:
                acc |= hit_mask[v]
            if acc == full:
                return k
    return None


def brute_pi(vertex_sets: Sequence[Sequence[int]]) -> int:
    """Exact packing number: largest subfamily of pairwise disjoint sets."""
    sets = [frozenset(s) for s in vertex_sets]
    m = len(sets)
    best = 0
    for mask in range(1, 1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        ok = True
        for a in range(len(chosen)):
            for b in range(a + 1, len(chosen)):
                if sets[chosen[a]] & sets[chosen[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = len(chosen)
    return best


def inflate_family(dm: DistanceMatrix, R: CommodityGraph, r: int) -> list[list[int]]:
    """r-inflations of the demand intervals, as plain vertex lists."""
    return [neighborhood(dm, interval(dm, x, y), r) for x, y in R.demands]
