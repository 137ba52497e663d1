#!/usr/bin/env python3
"""Search small weighted trees for nonisomorphic pairs sharing X.

Trees on up to ``--max-order`` vertices (weights up to ``--max-weight``,
total weight fixed) are enumerated up to isomorphism and bucketed by X.
"""

from __future__ import annotations

import argparse
from collections import defaultdict
from itertools import product

from chromsym.catalogue import connected_multigraphs
from chromsym.chromatic import xfn
from chromsym.graphs import WeightedGraph, is_isomorphic


def trees(order: int):
    return [e for e in connected_multigraphs(order, order - 1, loops=False) if len(set(e)) == order - 1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--max-weight", type=int, default=2)
    ap.add_argument("--total", type=int, default=None, help="only trees of this total weight")
    args = ap.parse_args()
    buckets = defaultdict(list)
    for n in range(1, args.max_order + 1):
        for edges in trees(n):
            for w in product(range(1, args.max_weight + 1), repeat=n):
                if args.total is not None and sum(w) != args.total:
                    continue
                g = WeightedGraph(w, edges)
                bucket = buckets[xfn(g)]
                if not any(is_isomorphic(g, h) for h in bucket):
                    bucket.append(g)
    found = [b for b in buckets.values() if len(b) > 1]
    print(f"{sum(len(b) for b in buckets.values())} weighted trees, {len(found)} X-collisions")
    for b in found:
        for g in b:
            print("  ", g.weights, list(g.edges))
        print()


if __name__ == "__main__":
    main()
