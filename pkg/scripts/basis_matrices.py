#!/usr/bin/env python3
"""Print change-of-basis matrices and determinants for the built-in families."""

from __future__ import annotations

import argparse

from chromsym.bases import family_matrix, load_family
from chromsym.linalg import determinant


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", default="wpath,paths,stars")
    ap.add_argument("--max-degree", type=int, default=5)
    args = ap.parse_args()
    for key in args.families.split(","):
        fam = load_family(key)
        for n in range(1, args.max_degree + 1):
            m = family_matrix(fam, n)
            print(f"[{fam.name}] degree {n}, det = {determinant(m.as_lists())}")
            width = max(len(str(x)) for row in m.rows for x in row)
            for lam, row in zip(m.order, m.rows):
                print(f"  {str(lam):<16}" + " ".join(str(x).rjust(width) for x in row))


if __name__ == "__main__":
    main()
