"""Beam enumeration and the single-ball total beam core, plus the structural
inequalities tying diameter, radius, center, and the beam-core midpoint
together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import (
    Ball,
    DistanceMatrix,
    Graph,
    ball_members,
    descend_geodesic,
    distances_avoiding,
    interval,
    set_distance,
)
from .halfint import HalfInt
from .hyperbolicity import eccentricity_profile, mutually_distant_pair


@dataclass(frozen=True)
class BeamCoreResult:
    pair: tuple[int, int]
    midpoint: int
    radius: int
    all_beams_intercepted: bool


@dataclass(frozen=True)
class BeamSeparationReport:
    max_distance: int
    bound: int
    within_bound: bool


@dataclass(frozen=True)
class StructuralReport:
    diameter: int
    radius: int
    center: tuple[int, ...]
    midpoint: int
    delta: HalfInt
    diam_rad_holds: bool
    max_center_distance: int
    close_to_center_holds: bool


def beam_pairs(dm: DistanceMatrix) -> list[tuple[int, int]]:
    """All ordered pairs (x, y) with y a furthest vertex from x."""
    d = dm.d
    ecc = d.max(axis=1)
    pairs = []
    for x in range(dm.n):
        for y in np.flatnonzero(d[x] == ecc[x]):
            pairs.append((x, int(y)))
    return pairs


def _midpoint(g: Graph, dm: DistanceMatrix, u: int, v: int) -> int:
    # middle vertex of the deterministic (u,v)-geodesic, nearer u on ties
    path = descend_geodesic(g, dm, u, v)
    return path[(len(path) - 1) // 2]


def total_beam_core(g: Graph, dm: DistanceMatrix, delta: HalfInt) -> BeamCoreResult:
    """Ball of radius floor(2*delta) around the middle of a geodesic between
    mutually distant vertices, verified against every beam pair.

    The verification deletes the ball once and re-runs BFS from each beam
    source, which is equivalent to the per-pair interception test.
    """
    u, v = mutually_distant_pair(g, delta)
    mid = _midpoint(g, dm, u, v)
    radius = (delta * 2).floor()
    inside = frozenset(ball_members(dm, Ball(mid, max(radius, 0))))
    d = dm.d
    ecc = d.max(axis=1)
    ok = True
    for x in range(g.n):
        if not ok:
            break
        targets = [int(y) for y in np.flatnonzero(d[x] == ecc[x])]
        if x in inside or all(t in inside for t in targets):
            continue
        dist = distances_avoiding(g, inside, x)
        for t in targets:
            if t not in inside and dist[t] == d[x, t]:
                ok = False
                break
    return BeamCoreResult(
        pair=(u, v), midpoint=mid, radius=max(radius, 0), all_beams_intercepted=ok
    )


def beams_pairwise_close(dm: DistanceMatrix, delta: HalfInt) -> BeamSeparationReport:
    """Maximum distance between intervals of distinct beam pairs, compared to
    the 2*delta closeness bound.

    The interval of a beam pair contains every beam geodesic between its
    endpoints, so the interval-to-interval distance lower-bounds the
    geodesic-to-geodesic one; the bound holds for it a fortiori.
    """
    seen: set[frozenset[int]] = set()
    intervals: list[list[int]] = []
    for x, y in beam_pairs(dm):
        key = frozenset((x, y))
        if key not in seen:
            seen.add(key)
            intervals.append(interval(dm, x, y))
    worst = 0
    for i in range(len(intervals)):
        for j in range(i + 1, len(intervals)):
            gap = set_distance(dm, intervals[i], intervals[j])
            if gap > worst:
                worst = gap
    bound = (delta * 2).floor()
    return BeamSeparationReport(max_distance=worst, bound=bound, within_bound=worst <= bound)


def structural_checks(g: Graph, dm: DistanceMatrix, delta: HalfInt) -> StructuralReport:
    """Evaluate diam >= 2*rad - 2*delta - 1 and C(G) inside B(m, 4*delta + 1)
    with the supplied thin-triangle constant, m being the beam-core midpoint."""
    prof = eccentricity_profile(dm)
    u, v = mutually_distant_pair(g, delta)
    mid = _midpoint(g, dm, u, v)
    diam_rad_holds = prof.diameter >= 2 * prof.radius - delta * 2 - 1
    max_center_distance = max(int(dm.d[mid, c]) for c in prof.center)
    close_holds = max_center_distance <= delta * 4 + 1
    return StructuralReport(
        diameter=prof.diameter,
        radius=prof.radius,
        center=prof.center,
        midpoint=mid,
        delta=delta,
        diam_rad_holds=bool(diam_rad_holds),
        max_center_distance=max_center_distance,
        close_to_center_holds=bool(close_holds),
    )
