"""Command-line interface.

Verbs: gen, analyze, color, exact, verify, compare, dot.  Exit codes:
0 success, 1 parse/validation problem, 2 verification failure, 3 size or
budget limit, 4 no certified ordering found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .bounds import compare_bounds, diameter_at_most_half, is_applicable
from .errors import (
    BadParamsError,
    BadVertexIdError,
    FormatError,
    HamcolorError,
    IncompleteColoringError,
    InternalError,
    NegativeColorError,
    NegativeIncrementError,
    NotApplicableError,
    NotAPermutationError,
    NotATreeError,
    SearchFailedError,
    TooLargeError,
)
from .io import (
    format_coloring,
    format_ordering,
    format_tree,
    load_tree,
    parse_coloring_text,
    to_dot,
)
from .ordering import (
    certify_alternation,
    certify_alternation_db,
    coloring_from_ordering,
    search_ordering,
)
from .solver import exact_hc, search_backend, verify_coloring
from .tree import analyze, graph_centers

_VALIDATION_ERRORS = (
    FormatError,
    NotATreeError,
    BadVertexIdError,
    BadParamsError,
    NotApplicableError,
    NotAPermutationError,
    NegativeIncrementError,
    IncompleteColoringError,
    NegativeColorError,
)


def _emit(args: argparse.Namespace, data: dict) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
        return
    for key, val in data.items():
        if isinstance(val, bool):
            val = "true" if val else "false"
        elif isinstance(val, (list, tuple)):
            val = " ".join(str(x) for x in val)
        print(f"{key}: {val}")


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _parse_params(raw: str) -> dict[str, int]:
    params: dict[str, int] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, val = item.partition("=")
        if not sep:
            raise BadParamsError(f"parameter {item!r} is not key=value")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise BadParamsError(f"parameter {item!r} needs an integer value") from None
    return params


def _cmd_gen(args: argparse.Namespace) -> int:
    tree, spec = families.generate(args.family, _parse_params(args.params))
    meta = {
        "family": spec.family,
        "params": ",".join(f"{k}={v}" for k, v in spec.params.items()),
        "expected_n": spec.expected_n,
        "expected_hc": spec.expected_hc,
        "expected_total_level": spec.expected_total_level,
    }
    text = format_tree(tree, meta)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    tree, _ = load_tree(args.file)
    rv = analyze(tree)
    centers = graph_centers(tree)
    data: dict = {
        "n": tree.n,
        "max_degree": tree.max_degree,
        "diameter": tree.diameter,
        "weight_centers": sorted(rv.weight_centers),
        "graph_centers": sorted(centers),
        "weight_bicentral": rv.bicentral,
        "center_bicentral": len(centers) == 2,
        "total_level_weight": rv.total_level,
        "diam_within_half": diameter_at_most_half(tree),
        "upper_bound_trivial": (tree.n - 2) ** 2 if tree.n >= 2 else 0,
        "applicable": is_applicable(tree),
    }
    if is_applicable(tree) or args.force:
        report = compare_bounds(tree, force=True)
        data["total_level_center"] = report.center_total_level
        data["lb_weight"] = report.lb_weight
        data["lb_center"] = report.lb_center
        data["lb_difference"] = report.difference
        if not report.applicable:
            data["certifying"] = False
    _emit(args, data)
    return 0


def _family_spec_from_meta(tree, meta: dict[str, str]):
    """Regenerate the family instance recorded in tree-file metadata."""
    if "family" not in meta or "params" not in meta:
        return None
    gen_tree, spec = families.generate(meta["family"], _parse_params(meta["params"]))
    if gen_tree.edges != tree.edges or gen_tree.n != tree.n:
        raise FormatError("tree does not match its family metadata")
    return spec


def _cmd_color(args: argparse.Namespace) -> int:
    tree, meta = load_tree(args.file)
    rv = analyze(tree)
    spec = _family_spec_from_meta(tree, meta)
    if spec is not None:
        order = families.family_ordering(spec, tree)
    else:
        order = search_ordering(rv)
    cert = certify_alternation_db(rv, order)
    if cert.kind == "none":
        cert = certify_alternation(rv, order)
    if cert.kind == "none":
        raise InternalError(f"produced ordering failed certification: {cert.reason}")
    coloring = coloring_from_ordering(rv, order)
    bad = verify_coloring(rv, coloring)
    if bad:
        raise InternalError(f"certified coloring has {len(bad)} violations")
    if coloring.span != cert.claimed_span:
        raise InternalError(f"span {coloring.span} != certified {cert.claimed_span}")
    out = args.coloring_out or args.file + ".coloring"
    _write(out, format_coloring(coloring))
    if args.ordering_out:
        _write(args.ordering_out, format_ordering(order))
    _emit(
        args,
        {
            "ordering": list(order),
            "certificate": cert.kind,
            "span": coloring.span,
            "colors": list(coloring.colors),
            "coloring_file": out,
        },
    )
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    tree, _ = load_tree(args.file)
    rv = analyze(tree)
    res = exact_hc(rv, limit=args.limit, budget=args.budget, workers=args.threads)
    out = args.coloring_out or args.file + ".hc.coloring"
    _write(out, format_coloring(res.witness))
    _emit(
        args,
        {
            "hc": res.hc,
            "explored": res.explored,
            "limit_hit": res.limit_hit,
            "backend": search_backend(),
            "witness_span": res.witness.span,
            "witness_file": out,
        },
    )
    return 3 if res.limit_hit else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tree, _ = load_tree(args.tree)
    with open(args.coloring, encoding="utf-8") as fh:
        coloring = parse_coloring_text(fh.read(), tree.n)
    rv = analyze(tree)
    violations = verify_coloring(rv, coloring)
    data: dict = {"valid": not violations, "span": coloring.span}
    if violations:
        data["violations"] = len(violations)
    _emit(args, data)
    if violations and not args.json:
        for viol in violations:
            print(f"violation: u={viol.u} v={viol.v} required={viol.required} actual={viol.actual}")
    return 2 if violations else 0


def _cmd_compare(args: argparse.Namespace) -> int:
    tree, _ = load_tree(args.file)
    report = compare_bounds(tree, force=args.force)
    _emit(
        args,
        {
            "n": report.n,
            "applicable": report.applicable,
            "lb_weight": report.lb_weight,
            "lb_center": report.lb_center,
            "difference": report.difference,
            "weight_bicentral": report.weight_bicentral,
            "center_bicentral": report.center_bicentral,
            "total_level_weight": report.weight_total_level,
            "total_level_center": report.center_total_level,
            "diam_within_half": report.diam_within_half,
        },
    )
    return 0


def _cmd_dot(args: argparse.Namespace) -> int:
    tree, _ = load_tree(args.file)
    coloring = None
    if args.coloring:
        with open(args.coloring, encoding="utf-8") as fh:
            coloring = parse_coloring_text(fh.read(), tree.n)
    text = to_dot(tree, coloring)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcolor",
        description="Hamiltonian chromatic numbers of trees: bounds, certified colorings, exact search.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family instance")
    p.add_argument("--family", required=True, choices=["star", "broom", "a-tree", "caterpillar"])
    p.add_argument("--params", required=True, help="comma-separated key=value, e.g. n=10,d=4")
    p.add_argument("-o", "--output", help="write the tree file here (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="structure and bounds of a tree")
    p.add_argument("file")
    p.add_argument("--force", action="store_true", help="evaluate bounds even when non-certifying")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("color", parents=[common], help="certified optimal coloring via an ordering")
    p.add_argument("file")
    p.add_argument("--coloring-out", help="coloring file path (default FILE.coloring)")
    p.add_argument("--ordering-out", help="also write the ordering here")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("exact", parents=[common], help="exact search (small trees)")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=10, help="refuse trees larger than this (default 10)")
    p.add_argument("--budget", type=int, default=None, help="node budget; best-so-far on exhaustion")
    p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--coloring-out", help="witness file path (default FILE.hc.coloring)")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("verify", parents=[common], help="check a coloring file against a tree")
    p.add_argument("tree")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", parents=[common], help="compare the two lower bounds")
    p.add_argument("file")
    p.add_argument("--force", action="store_true", help="evaluate bounds even when non-certifying")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("dot", parents=[common], help="DOT export, optionally labelled by a coloring")
    p.add_argument("file")
    p.add_argument("coloring", nargs="?", default=None)
    p.add_argument("-o", "--output", help="write DOT here (default stdout)")
    p.set_defaults(func=_cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except TooLargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except SearchFailedError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except HamcolorError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
