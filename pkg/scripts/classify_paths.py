#!/usr/bin/env python3
"""Group weighted paths by their X and compare with the factorization classes.

For each size n, every composition is bucketed by the power-sum expansion of
its weighted path.  Buckets are checked against ``equivalence_class`` and the
class-size histogram is printed.
"""

from __future__ import annotations

import argparse
import json
from collections import Counter, defaultdict

from chromsym import compositions as C
from chromsym.bases import weighted_path_to_p


def classify(n: int) -> dict:
    buckets = defaultdict(list)
    for alpha in C.compositions_of(n):
        buckets[weighted_path_to_p(alpha)].append(alpha)
    mismatches = [b for b in buckets.values() if sorted(b, key=C.composition_key) != C.equivalence_class(b[0])]
    sizes = Counter(len(b) for b in buckets.values())
    nontrivial = [b for b in buckets.values() if C.path_class_count(b[0]) > 1]
    return {
        "n": n,
        "compositions": 2 ** (n - 1),
        "classes": len(buckets),
        "class_sizes": dict(sorted(sizes.items())),
        "mismatches": len(mismatches),
        "classes_with_several_paths": len(nontrivial),
        "example": [list(a) for a in nontrivial[0]] if nontrivial else None,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=10)
    ap.add_argument("--json", action="store_true", help="one JSON object per size")
    args = ap.parse_args()
    for n in range(1, args.max_size + 1):
        row = classify(n)
        if args.json:
            print(json.dumps(row))
        else:
            print(f"n={n:2d}  classes={row['classes']:4d}  sizes={row['class_sizes']}  "
                  f"several-paths={row['classes_with_several_paths']}  mismatches={row['mismatches']}")


if __name__ == "__main__":
    main()
