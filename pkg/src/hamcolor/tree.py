"""Tree structure plus the weight-center machinery everything else builds on.

A tree is stored as an immutable adjacency structure over dense vertex ids
0..n-1.  :func:`analyze` roots the tree at its weight center(s) -- the
vertices minimising the total distance to all others -- and records, per
vertex, its level (distance to the nearest weight center), its parent on the
way down, the branch it belongs to, and which weight center owns it.  Those
ingredients give the distance decomposition

    d(u, v) = level(u) + level(v) - 2 * common_ancestor_level(u, v)
              + crosses_center_edge(u, v)

used throughout for bound arithmetic and ordering certificates.

A tree has either one weight center or two adjacent ones; in the latter case
removing the joining edge leaves two components of equal order.  Vertices
hanging off a child of a weight center form a *branch*; two branches rooted at
the same center are *different*, two branches rooted at distinct centers are
*opposite*.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import BadVertexIdError, NotATreeError


class BranchRelation(str, Enum):
    SAME = "same"
    DIFFERENT = "different"
    OPPOSITE = "opposite"
    INVOLVES_CENTER = "involves_center"


class Tree:
    """Immutable undirected tree on vertices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise BadVertexIdError(f"order must be a positive integer, got {n!r}")
        norm = []
        seen = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise BadVertexIdError(f"edge {e!r} is not a vertex pair") from None
            if not isinstance(u, int) or not isinstance(v, int):
                raise BadVertexIdError(f"edge {e!r} has non-integer endpoints")
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexIdError(f"edge {e!r} outside vertex range 0..{n - 1}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise NotATreeError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        if len(norm) != n - 1:
            raise NotATreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        # connectivity; with exactly n-1 edges this also rules out cycles
        if n > 1:
            dist = self.distances_from(0)
            if min(dist) < 0:
                raise NotATreeError("graph is not connected")
        self._dist_matrix: list[list[int]] | None = None

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not (0 <= v < self.n):
            raise BadVertexIdError(f"vertex {v!r} outside 0..{self.n - 1}")

    def distances_from(self, src: int) -> list[int]:
        """BFS distances from ``src``; -1 marks unreachable vertices."""
        self.check_vertex(src)
        dist = [-1] * self.n
        dist[src] = 0
        dq = deque([src])
        while dq:
            u = dq.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    dq.append(v)
        return dist

    def distance_matrix(self) -> list[list[int]]:
        """All-pairs distances (cached; treat as read-only)."""
        if self._dist_matrix is None:
            self._dist_matrix = [self.distances_from(v) for v in range(self.n)]
        return self._dist_matrix

    @cached_property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    @cached_property
    def _diameter_path(self) -> list[int]:
        if self.n == 1:
            return [0]
        da = self.distances_from(0)
        a = da.index(max(da))
        db = self.distances_from(a)
        b = db.index(max(db))
        # walk back from b to a along decreasing distance
        path = [b]
        cur = b
        while cur != a:
            cur = next(x for x in self.adj[cur] if db[x] == db[cur] - 1)
            path.append(cur)
        return path

    @cached_property
    def diameter(self) -> int:
        return len(self._diameter_path) - 1

    def __repr__(self) -> str:  # pragma: no cover
        return f"Tree(n={self.n}, edges={list(self.edges)})"


def build_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate and construct a :class:`Tree`."""
    return Tree(n, edges)


def vertex_weight(tree: Tree, v: int) -> int:
    """Total distance from ``v`` to every vertex of the tree."""
    return sum(tree.distances_from(v))


def all_vertex_weights(tree: Tree) -> list[int]:
    """Total-distance weights of all vertices in O(n) by rerooting.

    Moving the root across an edge towards a subtree with s vertices changes
    the weight by n - 2*s.
    """
    n = tree.n
    if n == 1:
        return [0]
    order = [0]
    parent = [-1] * n
    dist = [-1] * n
    dist[0] = 0
    dq = deque([0])
    while dq:
        u = dq.popleft()
        for v in tree.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                order.append(v)
                dq.append(v)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    weights = [0] * n
    weights[0] = sum(dist)
    for u in order[1:]:
        weights[u] = weights[parent[u]] + n - 2 * size[u]
    return weights

def weight_centers(tree: Tree) -> frozenset[int]:
    """Vertices of minimum total distance; always one vertex or two adjacent ones."""
    w = all_vertex_weights(tree)
    lo = min(w)
    return frozenset(v for v in range(tree.n) if w[v] == lo)


def graph_centers(tree: Tree) -> frozenset[int]:
    """Vertices of minimum eccentricity: the middle of any diameter path."""
    path = tree._diameter_path
    d = len(path) - 1
    if d % 2 == 0:
        return frozenset({path[d // 2]})
    return frozenset({path[d // 2], path[d // 2 + 1]})


class RootedView:
    """A tree rooted at its weight center(s), with per-vertex bookkeeping.

    Attributes
    ----------
    tree            the underlying :class:`Tree`
    weight_centers  frozenset of one or two vertex ids
    bicentral       True when there are two weight centers
    level           tuple, distance to the nearest weight center
    parent          tuple, previous vertex towards the owning center (None at centers)
    side            tuple, id of the owning weight center
    branch          tuple, branch index or None for the centers
    branch_roots    tuple, attachment vertex (level 1) of each branch, by branch index
    total_level     sum of all levels
    """

    def __init__(self, tree: Tree):
        self.tree = tree
        n = tree.n
        self.weight_centers = weight_centers(tree)
        self.bicentral = len(self.weight_centers) == 2
        centers = sorted(self.weight_centers)
        if self.bicentral:
            w1, w2 = centers
            assert w2 in tree.adj[w1], "two weight centers must be adjacent"
        level: list[int | None] = [None] * n
        parent: list[int | None] = [None] * n
        side: list[int | None] = [None] * n
        root_of: list[int | None] = [None] * n
        dq: deque[int] = deque()
        for w in centers:
            level[w] = 0
            side[w] = w
            dq.append(w)
        while dq:
            u = dq.popleft()
            for v in tree.adj[u]:
                if level[v] is None:
                    level[v] = level[u] + 1
                    parent[v] = u
                    side[v] = side[u]
                    root_of[v] = v if u in self.weight_centers else root_of[u]
                    dq.append(v)
        roots = sorted(v for v in range(n) if root_of[v] == v)
        index = {r: i for i, r in enumerate(roots)}
        self.level: tuple[int, ...] = tuple(level)  # type: ignore[arg-type]
        self.parent: tuple[int | None, ...] = tuple(parent)
        self.side: tuple[int, ...] = tuple(side)  # type: ignore[arg-type]
        self.branch: tuple[int | None, ...] = tuple(
            None if root_of[v] is None else index[root_of[v]] for v in range(n)
        )
        self.branch_roots: tuple[int, ...] = tuple(roots)
        self.total_level = sum(self.level)
        if self.bicentral:
            halves = [sum(1 for v in range(n) if side[v] == w) for w in centers]
            assert halves[0] == halves[1] == n // 2, "weight-bicentral halves must balance"

    @property
    def n(self) -> int:
        return self.tree.n

    def branch_members(self, branch_id: int) -> list[int]:
        """Vertices of one branch, ascending by id."""
        return [v for v in range(self.n) if self.branch[v] == branch_id]

    def common_ancestor_level(self, u: int, v: int) -> int:
        """Deepest level shared by the ancestor chains of ``u`` and ``v``.

        Every vertex counts as an ancestor of itself; the chain of a vertex
        runs up to its owning weight center.  Vertices owned by different
        weight centers share no ancestors, giving 0.
        """
        self.tree.check_vertex(u)
        self.tree.check_vertex(v)
        if self.side[u] != self.side[v]:
            return 0
        a, b = u, v
        while a != b:
            if self.level[a] < self.level[b]:
                b = self.parent[b]  # type: ignore[assignment]
            else:
                a = self.parent[a]  # type: ignore[assignment]
        return self.level[a]

    def crosses_center_edge(self, u: int, v: int) -> bool:
        """True when the u-v path uses the edge joining two weight centers."""
        self.tree.check_vertex(u)
        self.tree.check_vertex(v)
        return self.bicentral and self.side[u] != self.side[v]

    def detour_distance(self, u: int, v: int) -> int:
        """Path distance computed from levels, shared-ancestor depth and the
        center-edge crossing; equals plain BFS distance on trees."""
        self.tree.check_vertex(u)
        self.tree.check_vertex(v)
        if u == v:
            return 0
        d = self.level[u] + self.level[v] - 2 * self.common_ancestor_level(u, v)
        if self.crosses_center_edge(u, v):
            d += 1
        return d

    def branch_relation(self, u: int, v: int) -> BranchRelation:
        """Classify how the branches of two distinct vertices relate."""
        self.tree.check_vertex(u)
        self.tree.check_vertex(v)
        if u == v:
            raise BadVertexIdError("branch relation needs two distinct vertices")
        if u in self.weight_centers or v in self.weight_centers:
            return BranchRelation.INVOLVES_CENTER
        if self.branch[u] == self.branch[v]:
            return BranchRelation.SAME
        if self.side[u] != self.side[v]:
            return BranchRelation.OPPOSITE
        return BranchRelation.DIFFERENT


def analyze(tree: Tree) -> RootedView:
    """Root ``tree`` at its weight center(s) and compute the per-vertex data."""
    return RootedView(tree)
