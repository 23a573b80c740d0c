"""Generators for tree families with closed-form hamiltonian chromatic numbers.

Four families are provided, each with a documented vertex-id layout and, where
known, the expected order, total level and hamiltonian chromatic number:

* stars:        hub 0, leaves 1..n-1;
* brooms:       path 0..d-1 with vertex 0 the hub, leaves d..n-1 on the hub.
                Two one-parameter sub-families are recognised and carry
                closed forms: d = 2k with n = k(2k+1), and d = 2k+1 with
                n = (k+1)(2k+1);
* a-trees:      indexed by d >= 2 (the instance has diameter d - 1).  The base
                cases are a single edge (d = 2) and the 4-leaf star (d = 3);
                each growth step
                gives the two diameter-end leaves three children apiece (the
                last child extends the diameter) and every other leaf one
                child.  New ids are assigned in ascending order of the parent
                leaf's id;
* caterpillars: spine 0..m-1, every inner spine vertex brought up to degree d
                by legs, which take ids m.. grouped by spine vertex.

``family_ordering`` produces an ordering whose induced coloring attains the
weight-center lower bound, certified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import ordering as _ord
from .bounds import is_applicable
from .errors import BadParamsError, InternalError, NotApplicableError
from .tree import RootedView, Tree, analyze


@dataclass(frozen=True)
class FamilySpec:
    """What a generator produced and what values it promises."""

    family: str  # star | broom | broom_even | broom_odd | a_tree | caterpillar
    params: dict[str, int] = field(compare=False)
    expected_n: int = 0
    expected_hc: int | None = None
    expected_total_level: int | None = None


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InternalError(f"{what} is not an integer: {x}")
    return int(x)


def gen_star(n: int) -> tuple[Tree, FamilySpec]:
    """Star on n >= 3 vertices; hub 0."""
    if not isinstance(n, int) or n < 3:
        raise BadParamsError(f"star needs n >= 3, got {n!r}")
    tree = Tree(n, [(0, i) for i in range(1, n)])
    spec = FamilySpec(
        family="star",
        params={"n": n},
        expected_n=n,
        expected_hc=(n - 2) ** 2,
        expected_total_level=n - 1,
    )
    return tree, spec


def gen_broom(n: int, d: int) -> tuple[Tree, FamilySpec]:
    """Broom: a d-vertex path with n-d extra leaves on the hub end.

    Ids: path 0..d-1 (0 is the hub), leaves d..n-1.  The expected fields are
    filled only for the two recognised one-parameter sub-families.
    """
    if not isinstance(n, int) or not isinstance(d, int) or not n > d >= 2:
        raise BadParamsError(f"broom needs n > d >= 2, got n={n!r}, d={d!r}")
    edges = [(i, i + 1) for i in range(d - 1)]
    edges += [(0, i) for i in range(d, n)]
    tree = Tree(n, edges)
    family = "broom"
    hc = total = None
    if d % 2 == 0:
        k = d // 2
        if n == k * (2 * k + 1):
            family = "broom_even"
            total = 2 * k * (2 * k - 1)
            hc = 4 * k**4 + 4 * k**3 - 11 * k**2 + 2 * k + 2
    else:
        k = (d - 1) // 2
        if k >= 1 and n == (k + 1) * (2 * k + 1):
            family = "broom_odd"
            total = 2 * k * (2 * k + 1)
            hc = (2 * k + 1) * (2 * k**3 + 5 * k**2 - 2 * k - 1) + 2
    spec = FamilySpec(
        family=family,
        params={"n": n, "d": d},
        expected_n=n,
        expected_hc=hc,
        expected_total_level=total,
    )
    return tree, spec


def _grow_a_tree(
    n: int,
    edges: list[tuple[int, int]],
    pendants: list[int],
    ends: tuple[int, int],
) -> tuple[int, list[int], tuple[int, int]]:
    """One growth step; returns (new order, new pendant list, new ends)."""
    left, right = ends
    nxt = n
    new_pendants: list[int] = []
    new_left = new_right = -1
    for u in pendants:
        if u == left or u == right:
            kids = [nxt, nxt + 1, nxt + 2]
            nxt += 3
        else:
            kids = [nxt]
            nxt += 1
        for c in kids:
            edges.append((u, c))
        new_pendants.extend(kids)
        if u == left:
            new_left = kids[-1]
        elif u == right:
            new_right = kids[-1]
    return nxt, new_pendants, (new_left, new_right)


def gen_a_tree(d: int) -> tuple[Tree, FamilySpec]:
    """A-tree with index d >= 2 (single edge at d=2, 4-leaf star at d=3).

    The generated tree has diameter d - 1.
    """
    if not isinstance(d, int) or d < 2:
        raise BadParamsError(f"a-tree needs index d >= 2, got {d!r}")
    if d % 2 == 0:
        k = d // 2
        n, edges, pendants, ends = 2, [(0, 1)], [0, 1], (0, 1)
        expected_n = 2 * k**2
        total = _as_int(Fraction(k * (k - 1) * (4 * k + 1), 3), "a-tree total level")
        hc = _as_int(
            Fraction(2 * (k - 1) * (6 * k**3 + 2 * k**2 - 4 * k - 3), 3), "a-tree span"
        )
    else:
        k = (d - 1) // 2
        n, edges, pendants, ends = 5, [(0, i) for i in range(1, 5)], [1, 2, 3, 4], (1, 2)
        expected_n = 2 * k * (k + 1) + 1
        total = _as_int(Fraction(2 * k * (k + 1) * (2 * k + 1), 3), "a-tree total level")
        hc = _as_int(Fraction(4 * k * (k + 1) * (3 * k**2 + k - 1), 3), "a-tree span") + 1
    for _ in range(k - 1):
        n, pendants, ends = _grow_a_tree(n, edges, pendants, ends)
    if n != expected_n:
        raise InternalError(f"a-tree growth produced {n} vertices, expected {expected_n}")
    tree = Tree(n, edges)
    spec = FamilySpec(
        family="a_tree",
        params={"d": d},
        expected_n=expected_n,
        expected_hc=hc,
        expected_total_level=total,
    )
    return tree, spec


def gen_caterpillar(m: int, d: int) -> tuple[Tree, FamilySpec]:
    """Caterpillar: spine of m >= 3 vertices, inner spine vertices of degree d >= 3.

    Ids: spine 0..m-1, then d-2 legs per inner spine vertex, grouped by spine
    position.  m=3 gives the star on d+1 vertices.
    """
    if not isinstance(m, int) or not isinstance(d, int) or m < 3 or d < 3:
        raise BadParamsError(f"caterpillar needs m >= 3 and d >= 3, got m={m!r}, d={d!r}")
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for s in range(1, m - 1):
        for _ in range(d - 2):
            edges.append((s, nxt))
            nxt += 1
    tree = Tree(nxt, edges)
    if m % 2 == 1:
        k = (m - 1) // 2
        expected_n = (2 * k - 1) * (d - 1) + 2
        total = (k * (k + 1) - 1) * (d - 1) + 1
        hc = _as_int(
            Fraction(2 * d - 3, 2 * d - 2) * (expected_n - 2) ** 2 + Fraction(d - 1, 2),
            "caterpillar span",
        )
    else:
        k = m // 2
        expected_n = 2 * k * (d - 1) - 2 * (d - 2)
        total = k * (k - 1) * (d - 1)
        hc = _as_int(
            Fraction(2 * d - 3, 2 * d - 2) * (expected_n - 2) ** 2, "caterpillar span"
        )
    if nxt != expected_n:
        raise InternalError(f"caterpillar has {nxt} vertices, expected {expected_n}")
    spec = FamilySpec(
        family="caterpillar",
        params={"m": m, "d": d},
        expected_n=expected_n,
        expected_hc=hc,
        expected_total_level=total,
    )
    return tree, spec


def generate(family: str, params: dict[str, int]) -> tuple[Tree, FamilySpec]:
    """Dispatch by family name ("a-tree" and "a_tree" both accepted)."""
    f = family.replace("-", "_")
    try:
        if f == "star":
            return gen_star(params["n"])
        if f in ("broom", "broom_even", "broom_odd"):
            return gen_broom(params["n"], params["d"])
        if f == "a_tree":
            return gen_a_tree(params["d"])
        if f == "caterpillar":
            return gen_caterpillar(params["m"], params["d"])
    except KeyError as e:
        raise BadParamsError(f"family {family!r} needs parameter {e.args[0]!r}") from None
    raise BadParamsError(f"unknown family {family!r}")


def closed_form_hc(spec: FamilySpec) -> int:
    """Closed-form hamiltonian chromatic number for a recognised family instance."""
    if spec.family in ("star", "broom_even", "broom_odd", "a_tree", "caterpillar"):
        assert spec.expected_hc is not None
        return spec.expected_hc
    raise BadParamsError(f"no closed form for family {spec.family!r} with {spec.params}")


def _broom_ordering(n: int, d: int) -> list[int]:
    # hub, then path vertices deepest-first interleaved with leaves, then the
    # remaining leaves; the final vertex is a leaf at level 1
    path = list(range(d - 1, 0, -1))
    leaves = list(range(d, n))
    seq: list[int] = []
    for i, p in enumerate(path):
        seq.append(p)
        if i < len(path) - 1:
            seq.append(leaves[i])
    seq.extend(leaves[len(path) - 1 :])
    return [0] + seq


def _a_tree_ordering(rv: RootedView) -> list[int]:
    members = [rv.branch_members(b) for b in range(len(rv.branch_roots))]

    def by_size(bids: list[int]) -> list[int]:
        return sorted(bids, key=lambda b: (-len(members[b]), b))

    if rv.bicentral:
        w, w2 = sorted(rv.weight_centers)
        far = by_size([b for b, r in enumerate(rv.branch_roots) if rv.side[r] == w2])
        near = by_size([b for b, r in enumerate(rv.branch_roots) if rv.side[r] == w])
        odd_stream = [v for b in far for v in members[b]]
        even_stream = [v for b in near for v in members[b]]
        tail = [w2]
    else:
        (w,) = rv.weight_centers
        bids = by_size(list(range(len(rv.branch_roots))))
        if len(bids) != 4:
            raise InternalError(f"a-tree with one weight center must have 4 branches, got {len(bids)}")
        t1, t2, t3, t4 = bids
        root4 = rv.branch_roots[t4]
        odd_stream = members[t1] + members[t3]
        even_stream = members[t2] + [v for v in members[t4] if v != root4]
        tail = [root4]
    order = [w]
    oi = ei = 0
    for i in range(1, rv.n - 1):
        if i % 2 == 1:
            order.append(odd_stream[oi])
            oi += 1
        else:
            order.append(even_stream[ei])
            ei += 1
    if oi != len(odd_stream) or ei != len(even_stream):
        raise InternalError("a-tree ordering did not exhaust its branch streams")
    return order + tail


def family_ordering(spec: FamilySpec, tree: Tree) -> list[int]:
    """Ordering attaining the weight-center lower bound for a family instance.

    Stars, caterpillars and unrecognised brooms use the greedy search; the
    recognised broom and a-tree sub-families use their explicit constructions.
    The result is always certified; a certification failure on a recognised
    instance is a bug and raises :class:`InternalError`.
    """
    if not is_applicable(tree):
        raise NotApplicableError(
            f"no ordering certificate for n={tree.n}, max degree {tree.max_degree}"
        )
    rv = analyze(tree)
    if spec.family in ("star", "caterpillar", "broom"):
        return _ord.search_ordering(rv)
    if spec.family in ("broom_even", "broom_odd"):
        if rv.weight_centers != frozenset({0}):
            raise InternalError(
                f"{spec.family} must be weight-centered at the hub, got {sorted(rv.weight_centers)}"
            )
        order = _broom_ordering(spec.params["n"], spec.params["d"])
    elif spec.family == "a_tree":
        order = _a_tree_ordering(rv)
    else:
        raise BadParamsError(f"unknown family {spec.family!r}")
    cert = _ord.certify_alternation(rv, order)
    if cert.kind == "none":
        raise InternalError(f"{spec.family} ordering failed certification: {cert.reason}")
    return order
