#!/usr/bin/env python3
"""Build the two 8-vertex weighted trees alpha o (P3, (1,2,1)) and compare them."""

from __future__ import annotations

import argparse
import json

from chromsym import graphs as G
from chromsym.chromatic import xfn


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--weights", default="1,2,1", help="weights of the base path")
    ap.add_argument("--a", type=int, default=0)
    ap.add_argument("--z", type=int, default=1)
    ap.add_argument("--write", metavar="DIR", help="also write tree1.json and tree2.json here")
    args = ap.parse_args()

    base = G.weighted_path(tuple(int(x) for x in args.weights.split(",")))
    t1 = G.compose_graph((1, 2), base, args.a, args.z)
    t2 = G.compose_graph((2, 1), base, args.a, args.z)
    x1, x2 = xfn(t1), xfn(t2)
    print("tree (1,2):", json.dumps(t1.to_json()))
    print("tree (2,1):", json.dumps(t2.to_json()))
    print("X equal:   ", x1 == x2)
    print("isomorphic:", G.is_isomorphic(t1, t2))
    print("X =", x1.pretty())
    if args.write:
        for name, t in (("tree1", t1), ("tree2", t2)):
            with open(f"{args.write}/{name}.json", "w") as fh:
                json.dump(t.to_json(), fh)


if __name__ == "__main__":
    main()
