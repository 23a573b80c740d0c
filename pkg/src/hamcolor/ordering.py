"""Ordering certificates and the arithmetic coloring they induce.

A hamiltonian coloring must satisfy  d(u, v) + |h(u) - h(v)| >= n - 1  for
every vertex pair.  On trees whose weight-center lower bound is attained, an
optimal coloring can be read off a vertex ordering x_0 .. x_{n-1}: walk the
ordering and add, at each step,

    increment(i) = (n - 1 - b) - level(x_i) - level(x_{i+1})

where b is 1 for two weight centers and 0 for one.  This module provides

* ``check_spacing``       -- the exact pairwise condition: the induced coloring
                             is optimal if and only if it holds;
* ``certify_alternation`` -- a cheaper sufficient condition: endpoint levels,
                             branch alternation of consecutive vertices, and
                             consecutive distances at most n/2;
* ``certify_alternation_db`` -- drops the distance cap on trees whose diameter
                             is at most n/2 (there it holds for free);
* ``search_ordering``     -- a deterministic greedy that tries to build a
                             certified ordering.

Everything here requires n >= 4 and maximum degree >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import diameter_at_most_half, is_applicable, lower_bound_weight
from .errors import (
    NegativeIncrementError,
    NotApplicableError,
    NotAPermutationError,
    SearchFailedError,
)
from .tree import RootedView


@dataclass(frozen=True)
class Coloring:
    """Vertex colors indexed by vertex id."""

    colors: tuple[int, ...]

    @property
    def span(self) -> int:
        return max(self.colors) - min(self.colors)

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class SpacingCheck:
    ok: bool
    violation: tuple[int, int] | None = None
    reason: str | None = None


@dataclass(frozen=True)
class Certificate:
    """Outcome of certifying an ordering.

    ``kind`` is "alternation_db", "alternation" or "none"; any kind other
    than "none" claims the induced coloring attains the weight-center lower
    bound, recorded in ``claimed_span``.
    """

    kind: str
    ordering: tuple[int, ...] | None
    claimed_span: int | None
    reason: str | None = None


def validate_ordering(n: int, order: Sequence[int]) -> list[int]:
    """Check that ``order`` is a permutation of 0..n-1 and return it as a list."""
    o = list(order)
    if len(o) != n or sorted(o) != list(range(n)):
        raise NotAPermutationError(f"ordering must be a permutation of 0..{n - 1}, got {o!r}")
    return o


def _require_applicable(rv: RootedView) -> None:
    if not is_applicable(rv.tree):
        raise NotApplicableError(
            f"ordering certificates need order >= 4 and max degree >= 3 "
            f"(got n={rv.n}, max degree {rv.tree.max_degree})"
        )


def _endpoint_levels_ok(rv: RootedView, order: Sequence[int]) -> bool:
    # One weight center: one endpoint is the center, the other at level 1.
    # Two centers: both endpoints are centers.  Only the sum matters.
    want = 0 if rv.bicentral else 1
    return rv.level[order[0]] + rv.level[order[-1]] == want


def check_spacing(rv: RootedView, order: Sequence[int]) -> SpacingCheck:
    """Exact pairwise condition for the induced coloring to be optimal.

    Beyond the endpoint levels, every pair i < j must satisfy

        d(x_i, x_j) >= sum_{t=i}^{j-1} (level(x_t) + level(x_{t+1}))
                       - (j - i) * (n - 1 - b) + (n - 1).

    Returns the first violating pair of positions, scanning i then j.
    """
    _require_applicable(rv)
    o = validate_ordering(rv.n, order)
    n = rv.n
    b = 1 if rv.bicentral else 0
    if not _endpoint_levels_ok(rv, o):
        return SpacingCheck(
            False,
            None,
            f"endpoint levels {rv.level[o[0]]}+{rv.level[o[-1]]} != {1 - b}",
        )
    lev = [rv.level[v] for v in o]
    prefix = [0] * n
    for m in range(1, n):
        prefix[m] = prefix[m - 1] + lev[m - 1] + lev[m]
    dm = rv.tree.distance_matrix()
    step = n - 1 - b
    for i in range(n - 1):
        row = dm[o[i]]
        for j in range(i + 1, n):
            rhs = prefix[j] - prefix[i] - (j - i) * step + (n - 1)
            if row[o[j]] < rhs:
                return SpacingCheck(
                    False, (i, j), f"positions {i},{j}: distance {row[o[j]]} < required {rhs}"
                )
    return SpacingCheck(True)


def coloring_from_ordering(rv: RootedView, order: Sequence[int]) -> Coloring:
    """Arithmetic coloring along ``order``; rejects any negative increment.

    The resulting span is an identity of the ordering's endpoint levels:
    (n - 1) * (n - 1 - b) - 2 * total_level + level(x_0) + level(x_{n-1}).
    """
    o = validate_ordering(rv.n, order)
    base = rv.n - 1 - (1 if rv.bicentral else 0)
    colors = [0] * rv.n
    c = 0
    for i in range(rv.n - 1):
        inc = base - rv.level[o[i]] - rv.level[o[i + 1]]
        if inc < 0:
            raise NegativeIncrementError(
                f"step {i} ({o[i]} -> {o[i + 1]}) would add {inc}"
            )
        c += inc
        colors[o[i + 1]] = c
    return Coloring(tuple(colors))


def _alternation_reason(rv: RootedView, order: Sequence[int], check_cap: bool) -> str | None:
    """None when the ordering satisfies the sufficient conditions, else why not."""
    n = rv.n
    b = 1 if rv.bicentral else 0
    if not _endpoint_levels_ok(rv, order):
        return f"endpoint levels {rv.level[order[0]]}+{rv.level[order[-1]]} != {1 - b}"
    for i in range(n - 1):
        u, v = order[i], order[i + 1]
        # consecutive vertices must share no ancestors, and with two centers
        # must sit on opposite sides of the center edge
        if rv.common_ancestor_level(u, v) != 0:
            return f"positions {i},{i + 1}: vertices {u},{v} share a branch"
        if rv.bicentral and not rv.crosses_center_edge(u, v):
            return f"positions {i},{i + 1}: vertices {u},{v} on the same side of the center edge"
        if check_cap:
            d = rv.detour_distance(u, v)
            if 2 * d > n:
                return f"positions {i},{i + 1}: distance {d} exceeds n/2"
    return None


def certify_alternation(rv: RootedView, order: Sequence[int]) -> Certificate:
    """Sufficient conditions: endpoint levels, alternation, distance cap n/2."""
    _require_applicable(rv)
    o = validate_ordering(rv.n, order)
    reason = _alternation_reason(rv, o, check_cap=True)
    if reason is not None:
        return Certificate("none", None, None, reason)
    return Certificate("alternation", tuple(o), lower_bound_weight(rv))


def certify_alternation_db(rv: RootedView, order: Sequence[int]) -> Certificate:
    """Alternation certificate without the distance cap, on diameter <= n/2 trees."""
    _require_applicable(rv)
    o = validate_ordering(rv.n, order)
    if not diameter_at_most_half(rv.tree):
        return Certificate(
            "none", None, None, f"diameter {rv.tree.diameter} exceeds n/2"
        )
    reason = _alternation_reason(rv, o, check_cap=False)
    if reason is not None:
        return Certificate("none", None, None, reason)
    return Certificate("alternation_db", tuple(o), lower_bound_weight(rv))


def _branch_queues(rv: RootedView) -> dict[int, list[int]]:
    """Per-branch stacks popping deepest-first (ties to the smaller id)."""
    queues: dict[int, list[int]] = {i: [] for i in range(len(rv.branch_roots))}
    for v in range(rv.n):
        bid = rv.branch[v]
        if bid is not None:
            queues[bid].append(v)
    for q in queues.values():
        q.sort(key=lambda v: (rv.level[v], -v))
    return queues


def search_ordering(rv: RootedView) -> list[int]:
    """Deterministic greedy: start at a weight center, then repeatedly take the
    deepest unplaced vertex from an allowed branch (a different branch with one
    center, the opposite side with two), preferring branches with the most
    unplaced vertices and breaking ties by smallest branch id.  The produced
    ordering is certified before being returned; failure raises
    :class:`SearchFailedError` (which is not a proof that no ordering exists).
    """
    _require_applicable(rv)
    queues = _branch_queues(rv)
    centers = sorted(rv.weight_centers)
    if rv.bicentral:
        w, w2 = centers
        by_side: dict[int, list[int]] = {w: [], w2: []}
        for bid, root in enumerate(rv.branch_roots):
            by_side[rv.side[root]].append(bid)
        order = [w]
        side = w2
        for _ in range(rv.n - 2):
            best = None
            for bid in by_side[side]:
                if queues[bid]:
                    key = (-len(queues[bid]), bid)
                    if best is None or key < best:
                        best = key
            if best is None:
                raise SearchFailedError("ran out of vertices on one side of the center edge")
            order.append(queues[best[1]].pop())
            side = w if side == w2 else w2
        order.append(w2)
    else:
        (w,) = centers
        order = [w]
        prev = None
        for _ in range(rv.n - 1):
            best = None
            for bid, q in queues.items():
                if q and bid != prev:
                    key = (-len(q), bid)
                    if best is None or key < best:
                        best = key
            if best is None:
                raise SearchFailedError("all unplaced vertices share one branch")
            prev = best[1]
            order.append(queues[prev].pop())
    cert = certify_alternation(rv, order)
    if cert.kind == "none":
        raise SearchFailedError(f"greedy ordering failed certification: {cert.reason}")
    return order
