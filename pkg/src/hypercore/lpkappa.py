"""Covering and packing for families whose members are unions of at most
kappa quasiconvex sets: the Gamma incidence structure, the fractional
packing/hitting linear programs, their roundings, and the end-to-end
procedure whose certificates bound the hitting set by 2*kappa^2 times the
packing.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import DistanceMatrix, Graph, set_distance
from .halfint import HalfInt
from .quasiconvex import QSet, QSetFamily, covering_radius, greedy_hit_pack
from .simplex import LPInstance, solve_lp

ONE = Fraction(1)


@dataclass(frozen=True)
class KappaQSet:
    """A family member: the union of at most kappa measured quasiconvex parts."""

    parts: tuple[QSet, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a member needs at least one part")

    @property
    def union(self) -> tuple[int, ...]:
        return tuple(sorted({v for p in self.parts for v in p.members}))

    @property
    def epsilon(self) -> int:
        return max(p.epsilon for p in self.parts)


@dataclass(frozen=True)
class GammaIndex:
    """Incidence between vertices and members at a fixed radius.

    gamma_v[v] holds the members within the radius of v; gamma_i[i] holds
    every member sharing such a witness vertex with member i (a symmetric
    relation containing i itself).
    """

    radius: int
    gamma_v: tuple[frozenset[int], ...]
    gamma_i: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class KappaHitPackResult:
    hitting_set: tuple[int, ...]
    packing: tuple[int, ...]
    kappa: int
    r: int
    r_star: int
    r_prime: int
    packing_optimum: Fraction
    hitting_optimum: Fraction
    hitting_ok: bool
    packing_ok: bool
    bound_ok: bool


def _member_distances(dm: DistanceMatrix, family: Sequence[KappaQSet]) -> np.ndarray:
    """m x n matrix of d(v, member union)."""
    return np.stack([dm.d[:, list(kq.union)].min(axis=1) for kq in family])


def gamma_sets(dm: DistanceMatrix, family: Sequence[KappaQSet], r: int) -> GammaIndex:
    if r < 0:
        raise ValueError(f"negative gamma radius {r}")
    near = _member_distances(dm, family) <= r  # m x n
    m, n = near.shape
    gamma_v = tuple(frozenset(np.flatnonzero(near[:, v]).tolist()) for v in range(n))
    gamma_i = tuple(
        frozenset(np.flatnonzero((near & near[i]).any(axis=1)).tolist()) for i in range(m)
    )
    return GammaIndex(radius=r, gamma_v=gamma_v, gamma_i=gamma_i)


def build_packing_lp(gamma: GammaIndex, m: int, num_vertices: int) -> LPInstance:
    """max sum x_i subject to, per vertex v, sum of x_i over gamma_v[v] <= 1."""
    triplets = [
        (v, i, ONE) for v in range(num_vertices) for i in sorted(gamma.gamma_v[v])
    ]
    return LPInstance(
        direction="max",
        num_vars=m,
        num_rows=num_vertices,
        objective=(ONE,) * m,
        triplets=tuple(triplets),
        senses=("<=",) * num_vertices,
        rhs=(ONE,) * num_vertices,
    )


def build_hitting_lp(family: Sequence[KappaQSet], dm: DistanceMatrix, r: int) -> LPInstance:
    """min sum y_v subject to, per member, sum of y_v over its r-neighborhood >= 1."""
    if r < 0:
        raise ValueError(f"negative hitting radius {r}")
    near = _member_distances(dm, family) <= r
    m, n = near.shape
    triplets = [(i, int(v), ONE) for i in range(m) for v in np.flatnonzero(near[i])]
    return LPInstance(
        direction="min",
        num_vars=n,
        num_rows=m,
        objective=(ONE,) * n,
        triplets=tuple(triplets),
        senses=(">=",) * m,
        rhs=(ONE,) * m,
    )


def round_packing(
    x: Sequence[Fraction], gamma: GammaIndex, family: Sequence[KappaQSet]
) -> list[int]:
    """Integral packing from a fractional solution of the wider-radius LP.

    Repeatedly selects a member whose remaining Gamma-neighborhood carries
    fractional mass at most 2*kappa (one always exists for a feasible input)
    and discards that neighborhood.  The result is a packing at the gamma
    radius of size at least sum(x) / (2*kappa).
    """
    kappa = max(len(kq.parts) for kq in family)
    remaining = set(range(len(family)))
    packing: list[int] = []
    while remaining:
        pick = -1
        for i in sorted(remaining):
            mass = sum((x[j] for j in gamma.gamma_i[i] if j in remaining), Fraction(0))
            if mass <= 2 * kappa:
                pick = i
                break
        if pick < 0:
            raise RuntimeError(
                "no member with Gamma mass <= 2*kappa: input was not a feasible "
                "fractional packing (or the family's epsilon/delta were mismeasured)"
            )
        packing.append(pick)
        remaining -= gamma.gamma_i[pick]
    return packing


def round_hitting(
    y: Sequence[Fraction],
    family: Sequence[KappaQSet],
    dm: DistanceMatrix,
    g: Graph,
    r: int,
    delta: HalfInt,
    *,
    z: int = 0,
) -> list[int]:
    """Integral hitting set from a fractional cover at radius r.

    Each member is represented by the part whose r-neighborhood carries the
    most fractional mass (first part on ties); the greedy hitting/packing
    pass over the representatives yields the vertices.
    """
    d = dm.d
    reps: list[QSet] = []
    for kq in family:
        best = None
        best_mass = None
        for part in kq.parts:
            cols = list(part.members)
            mask = d[:, cols].min(axis=1) <= r
            mass = sum((y[int(v)] for v in np.flatnonzero(mask)), Fraction(0))
            if best_mass is None or mass > best_mass:
                best = part
                best_mass = mass
        reps.append(best)
    rep_family = QSetFamily(sets=tuple(reps))
    hp = greedy_hit_pack(dm, g, rep_family, r, delta, z=z)
    return list(hp.hitting_set)


def kappa_hit_pack(
    g: Graph,
    dm: DistanceMatrix,
    family: Sequence[KappaQSet],
    r: int,
    epsilon: int,
    delta: HalfInt,
    *,
    z: int = 0,
) -> KappaHitPackResult:
    """End-to-end covering/packing with verified certificates.

    With r_star = r + eps + 3*delta and r_prime = r_star + eps + 3*delta
    (both floored), solves the fractional packing LP at r_star and rounds it
    to an r-packing P, solves the fractional hitting LP at r_star and rounds
    it to an r_prime-hitting set T, then checks exhaustively that P is
    pairwise 2r-apart, that T reaches every member within r_prime, and that
    |T| <= 2*kappa^2*|P|.  Requires r >= eps + 2*delta, under which the two
    classical forms of the intermediate radius coincide.
    """
    if not family:
        raise ValueError("empty family")
    kappa = max(len(kq.parts) for kq in family)
    measured = max(kq.epsilon for kq in family)
    if measured > epsilon:
        raise ValueError(
            f"family has measured quasiconvexity defect {measured}, larger than "
            f"the stated epsilon {epsilon}"
        )
    if HalfInt(r) < epsilon + delta * 2:
        raise ValueError(
            f"r={r} violates the hypothesis r >= epsilon + 2*delta "
            f"= {epsilon + delta * 2}"
        )
    r_star = covering_radius(r, epsilon, delta).floor()
    r_prime = (r_star + epsilon + delta * 3).floor()

    m = len(family)
    gamma_r = gamma_sets(dm, family, r)
    gamma_rs = gamma_sets(dm, family, r_star)

    pack_sol = solve_lp(build_packing_lp(gamma_rs, m, dm.n))
    hit_sol = solve_lp(build_hitting_lp(family, dm, r_star))
    if pack_sol.status != "optimal" or hit_sol.status != "optimal":
        raise RuntimeError(
            f"LP solve failed: packing={pack_sol.status}, hitting={hit_sol.status}"
        )

    packing = round_packing(pack_sol.values, gamma_r, family)
    hitting = round_hitting(hit_sol.values, family, dm, g, r_star, delta, z=z)

    unions = [list(kq.union) for kq in family]
    packing_ok = all(
        set_distance(dm, unions[packing[a]], unions[packing[b]]) > 2 * r
        for a in range(len(packing))
        for b in range(a + 1, len(packing))
    )
    d = dm.d
    hitting_ok = all(
        min(int(d[t, list(kq.union)].min()) for t in hitting) <= r_prime for kq in family
    )
    bound_ok = len(hitting) <= 2 * kappa * kappa * len(packing)

    return KappaHitPackResult(
        hitting_set=tuple(hitting),
        packing=tuple(packing),
        kappa=kappa,
        r=r,
        r_star=r_star,
        r_prime=r_prime,
        packing_optimum=pack_sol.objective,
        hitting_optimum=hit_sol.objective,
        hitting_ok=hitting_ok,
        packing_ok=packing_ok,
        bound_ok=bound_ok,
    )
