"""Hamiltonian chromatic numbers of trees.

A hamiltonian coloring assigns non-negative integer colors so that every
vertex pair satisfies  d(u, v) + |h(u) - h(v)| >= n - 1;  the hamiltonian
chromatic number is the least possible span (max color minus min color).

Modules
-------
tree      tree structure, weight centers, levels, branch bookkeeping
bounds    weight-center and graph-center lower bounds
ordering  ordering certificates and the arithmetic coloring they induce
families  stars, brooms, a-trees, caterpillars with closed forms
solver    verification and exact branch-and-bound search
io        text formats and DOT export
cli       command-line interface
"""

from . import errors
from .bounds import (
    BoundReport,
    center_total_level,
    compare_bounds,
    diameter_at_most_half,
    is_applicable,
    lower_bound_center,
    lower_bound_weight,
)
from .families import (
    FamilySpec,
    closed_form_hc,
    family_ordering,
    gen_a_tree,
    gen_broom,
    gen_caterpillar,
    gen_star,
    generate,
)
from .ordering import (
    Certificate,
    Coloring,
    SpacingCheck,
    certify_alternation,
    certify_alternation_db,
    check_spacing,
    coloring_from_ordering,
    search_ordering,
    validate_ordering,
)
from .solver import (
    ExactResult,
    Violation,
    exact_hc,
    min_span_for_order,
    search_backend,
    verify_coloring,
)
from .tree import (
    BranchRelation,
    RootedView,
    Tree,
    all_vertex_weights,
    analyze,
    build_tree,
    graph_centers,
    vertex_weight,
    weight_centers,
)

__version__ = "0.1.0"
