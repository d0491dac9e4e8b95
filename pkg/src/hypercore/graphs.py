"""Graph substrate: adjacency, BFS, all-pairs distances, intervals, balls,
Gromov products, set distances, and the ball interception test.

Graphs and distance matrices are immutable after construction and safe to
share across threads; every operation here is a pure function of them.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .halfint import HalfInt

DEFAULT_MATRIX_CAP = 2000


class Graph:
    """Undirected connected simple graph on dense vertex ids 0..n-1."""

    __slots__ = ("n", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], *, validate: bool = True):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        adjacency: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        for nbrs in adjacency:
            nbrs.sort()
        self.n = n
        self.adjacency = adjacency
        if validate:
            dist = bfs_distances(self, 0)
            if -1 in dist:
                raise ValueError(
                    f"graph is disconnected: vertex {dist.index(-1)} unreachable from 0"
                )

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Ball:
    """Closed ball B(center, radius) = all vertices within the radius."""

    center: int
    radius: int

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"ball radius must be nonnegative, got {self.radius}")


class DistanceMatrix:
    """All-pairs hop distances, materialized as an n x n integer array."""

    __slots__ = ("d",)

    def __init__(self, d: np.ndarray):
        self.d = np.asarray(d, dtype=np.int64)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def dist(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def eccentricities(self) -> np.ndarray:
        return self.d.max(axis=1)

    def validate(self, g: Graph | None = None) -> None:
        """Raise if any metric invariant fails.  O(n^3); meant for tests."""
        d = self.d
        n = self.n
        if d.shape != (n, n):
            raise ValueError("distance matrix is not square")
        if (d.diagonal() != 0).any():
            raise ValueError("nonzero diagonal entry")
        if (d != d.T).any():
            raise ValueError("asymmetric distances")
        off = d[~np.eye(n, dtype=bool)]
        if n > 1 and (off < 1).any():
            raise ValueError("distinct vertices at distance < 1")
        for k in range(n):
            if (d > d[:, k : k + 1] + d[k : k + 1, :]).any():
                raise ValueError(f"triangle inequality fails through vertex {k}")
        if g is not None:
            for u, v in g.edges():
                if (np.abs(d[:, u] - d[:, v]) > 1).any():
                    raise ValueError(f"edge ({u},{v}) violates 1-Lipschitz rows")


def _check_vertex(n: int, v: int, name: str = "vertex") -> None:
    if not (0 <= v < n):
        raise ValueError(f"{name} {v} out of range for n={n}")


def check_vertices(n: int, vs: Iterable[int], name: str = "vertex set") -> list[int]:
    """Validate and normalize a vertex collection (sorted, deduplicated).

    Guards the public operations that index numpy arrays with caller-supplied
    ids, where a negative id would silently wrap instead of failing.
    """
    out = sorted(set(vs))
    for v in out:
        if not (0 <= v < n):
            raise ValueError(f"{name} contains vertex {v}, out of range for n={n}")
    return out


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    _check_vertex(g.n, source, "source")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def distance_matrix(g: Graph, *, cap: int = DEFAULT_MATRIX_CAP) -> DistanceMatrix:
    """BFS from every vertex.  Refuses graphs above ``cap`` vertices rather
    than allocating n^2 integers silently."""
    if g.n > cap:
        raise ValueError(
            f"graph has {g.n} vertices, above the all-pairs cap of {cap}; "
            f"pass cap= explicitly to materialize the matrix anyway"
        )
    d = np.empty((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        row = bfs_distances(g, v)
        if -1 in row:
            raise ValueError(f"graph is disconnected: no path between {v} and {row.index(-1)}")
        d[v] = row
    return DistanceMatrix(d)


def interval(dm: DistanceMatrix, u: int, v: int) -> list[int]:
    """All vertices metrically between u and v: d(u,x)+d(x,v) = d(u,v)."""
    _check_vertex(dm.n, u, "u")
    _check_vertex(dm.n, v, "v")
    d = dm.d
    return np.flatnonzero(d[u] + d[v] == d[u, v]).tolist()


def ball_members(dm: DistanceMatrix, b: Ball) -> list[int]:
    _check_vertex(dm.n, b.center, "ball center")
    return np.flatnonzero(dm.d[b.center] <= b.radius).tolist()


def gromov_product(dm: DistanceMatrix, y: int, z: int, w: int) -> HalfInt:
    """(y|z)_w = (d(y,w) + d(z,w) - d(y,z)) / 2, exactly."""
    for name, x in (("y", y), ("z", z), ("w", w)):
        _check_vertex(dm.n, x, name)
    d = dm.d
    return HalfInt.from_doubled(int(d[y, w]) + int(d[z, w]) - int(d[y, z]))


def set_distance(dm: DistanceMatrix, X: Sequence[int], Y: Sequence[int]) -> int:
    """min d(x,y) over x in X, y in Y; 0 iff the sets intersect."""
    xs = check_vertices(dm.n, X, "X")
    ys = check_vertices(dm.n, Y, "Y")
    if not xs or not ys:
        raise ValueError("set_distance needs two nonempty vertex sets")
    return int(dm.d[np.ix_(xs, ys)].min())


def distances_avoiding(g: Graph, blocked: Iterable[int], source: int) -> list[int]:
    """BFS distances in the subgraph with ``blocked`` vertices deleted.

    Returns -1 for unreachable vertices and for the blocked ones.  The
    source itself must not be blocked.
    """
    blocked_set = set(blocked)
    dist = [-1] * g.n
    if source in blocked_set:
        raise ValueError(f"source {source} is a blocked vertex")
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0 and w not in blocked_set:
                dist[w] = du
                queue.append(w)
    return dist


def intercepts_pair(g: Graph, dm: DistanceMatrix, b: Ball, x: int, y: int) -> bool:
    """True iff every (x,y)-geodesic meets the ball.

    Computed by deleting the ball's vertices and testing whether the (x,y)
    distance strictly increases (or x and y fall apart).  If x or y already
    lies inside the ball the pair counts as intercepted: the degenerate
    geodesic endpoint is trivially hit.
    """
    _check_vertex(g.n, x, "x")
    _check_vertex(g.n, y, "y")
    members = ball_members(dm, b)
    inside = set(members)
    if x in inside or y in inside:
        return True
    dist = distances_avoiding(g, inside, x)
    return dist[y] != dm.dist(x, y)


def descend_geodesic(g: Graph, dm: DistanceMatrix, start: int, goal: int) -> list[int]:
    """One concrete geodesic from start to goal.

    Greedy descent on the distance-to-goal field, taking the smallest-id
    neighbor at every step, so the result is deterministic.
    """
    _check_vertex(g.n, start, "start")
    _check_vertex(g.n, goal, "goal")
    d = dm.d
    path = [start]
    cur = start
    while cur != goal:
        target = int(d[cur, goal]) - 1
        cur = min(w for w in g.adjacency[cur] if d[w, goal] == target)
        path.append(cur)
    return path
