#!/usr/bin/env python3
"""Benchmark the exact-search kernels: compiled extension vs pure Python.

Runs the identical branch-and-bound on the same trees with both kernels,
checks that spans, witness orderings and node counts agree exactly, and
reports wall time and speedup.  Random trees come from a seeded Prufer
decode, so runs are reproducible.

    python3 benchmarks/bench_exact.py
    python3 benchmarks/bench_exact.py --sizes 8 9 10 --trials 2
"""

import argparse
import random
import time

from hamcolor import _bnb_py
from hamcolor.families import gen_broom, gen_star
from hamcolor.solver import _flat_distances
from hamcolor.tree import Tree, analyze

try:
    from hamcolor import _bnb
except ImportError:
    _bnb = None


def random_tree(n: int, rng: random.Random) -> Tree:
    if n <= 2:
        return Tree(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    pool = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = pool.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            pool.append(v)
            pool.sort()
    edges.append((pool[0], pool[1]))
    return Tree(n, edges)


def timed(kernel, dist, n):
    start = time.perf_counter()
    span, order, nodes, hit = kernel.bnb_exact(dist, n, -1, (), -1)
    return time.perf_counter() - start, span, order, nodes


def bench_one(label: str, tree: Tree) -> None:
    dist = _flat_distances(analyze(tree))
    t_py, span_py, order_py, nodes_py = timed(_bnb_py, dist, tree.n)
    if _bnb is None:
        print(f"{label:<18} n={tree.n:<3} hc={span_py:<5} nodes={nodes_py:<10} "
              f"pure={t_py * 1e3:9.1f} ms   (no compiled kernel)")
        return
    t_cy, span_cy, order_cy, nodes_cy = timed(_bnb, dist, tree.n)
    assert (span_py, order_py, nodes_py) == (span_cy, order_cy, nodes_cy), \
        f"kernel mismatch on {label}"
    speedup = t_py / t_cy if t_cy > 0 else float("inf")
    print(f"{label:<18} n={tree.n:<3} hc={span_py:<5} nodes={nodes_py:<10} "
          f"pure={t_py * 1e3:9.1f} ms   compiled={t_cy * 1e3:8.1f} ms   x{speedup:.1f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[7, 8, 9],
                        help="orders of random trees to solve (default 7 8 9)")
    parser.add_argument("--trials", type=int, default=2,
                        help="random trees per size (default 2)")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--skip-families", action="store_true",
                        help="only run the random trees")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    if not args.skip_families:
        bench_one("star n=8", gen_star(8)[0])
        bench_one("broom n=9 d=4", gen_broom(9, 4)[0])
    for n in args.sizes:
        for t in range(args.trials):
            bench_one(f"random #{t}", random_tree(n, rng))


if __name__ == "__main__":
    main()
