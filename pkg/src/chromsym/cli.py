"""Command-line interface.

    chromsym xfn GRAPH.json [--algo subsets|delcon|mobius]
    chromsym equal GRAPH1.json GRAPH2.json
    chromsym path-x "1,2,1,3,2" [--basis p|path]
    chromsym ribbon "2,1,3" [--basis h|p]
    chromsym compose "1,2" "1,2"
    chromsym factorize "1,2,1,3,2"
    chromsym class "1,2,1,3,2"
    chromsym equiv "1,2,1,3,2" "1,3,2,1,2"
    chromsym compose-graph "1,2" GRAPH.json --a 0 --z 1
    chromsym basis-matrix --family paths|stars|wpath|mixed|table:FILE --degree 4
    chromsym verify kdeletion GRAPH.json --cycle "0-1,1-2,0-2" --edge "0-1"
    chromsym verify incexc COARSE.json FINE.json --eprime "1-2,1-2"
    chromsym verify reciprocity|neat --family paths --degree 6
    chromsym chromatic GRAPH.json --k 3

Output is JSON by default; ``--output pretty`` renders for humans.  Errors go
to stderr as ``{"error": {"kind": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from chromsym import bases, chromatic, compositions as comp, graphs, symfunc
from chromsym.errors import ChromsymError

EXIT_FAILED_CHECK = 1
EXIT_MALFORMED = 3
EXIT_CODES = {
    "domain": 4,
    "resource": 5,
    "precondition": 6,
    "invariant": 7,
    "oracle": 8,
}


class MalformedInput(Exception):
    kind = "malformed"


def parse_composition(text: str) -> comp.Composition:
    text = text.strip().strip("[]()")
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise MalformedInput(f"cannot parse composition {text!r}; use comma-separated integers") from None
    return comp.composition(parts)


def parse_edges(text: str) -> list[tuple[int, int]]:
    out = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        try:
            i, j = (int(x) for x in token.split("-"))
        except ValueError:
            raise MalformedInput(f"cannot parse edge {token!r}; use I-J") from None
        out.append((i, j))
    return out


def load_graph(path: str) -> graphs.WeightedGraph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from None
    return graphs.WeightedGraph.from_json(data)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _fmt_comp(alpha) -> str:
    return "(" + ",".join(map(str, alpha)) + ")"


def _combo_json(combo) -> list:
    return [{"coeff": str(Fraction(c)), "partition": list(lam)} for lam, c in combo.items()]


def _combo_pretty(combo, symbol: str) -> str:
    if not combo:
        return "0"
    out = []
    for lam, c in combo.items():
        c = Fraction(c)
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        out.append(("- " if c < 0 else "+ ") + f"{mag}{symbol}{_fmt_comp(lam)}")
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _matrix_pretty(m: bases.BasisMatrix) -> str:
    labels = [_fmt_comp(lam) for lam in m.order]
    cells = [[str(x) for x in row] for row in m.rows]
    width = max([len(s) for row in cells for s in row] + [1])
    lw = max(len(s) for s in labels)
    lines = [f"degree {m.degree}; columns p" + " p".join(labels)]
    for lab, row in zip(labels, cells):
        lines.append(f"X{lab:<{lw}} | " + " ".join(s.rjust(width) for s in row))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def cmd_xfn(args):
    f = chromatic.xfn(load_graph(args.graph), args.algo)
    return f.to_json(), f.pretty()


def cmd_equal(args):
    g, h = load_graph(args.graph1), load_graph(args.graph2)
    same = chromatic.xfn(g, args.algo) == chromatic.xfn(h, args.algo)
    return {"equal": same}, f"equal: {str(same).lower()}"


def cmd_path_x(args):
    alpha = parse_composition(args.alpha)
    if args.basis == "path":
        combo = bases.weighted_path_in_path_basis(alpha)
        return {"basis": "path", "terms": _combo_json(combo)}, _combo_pretty(combo, "X_P")
    f = bases.weighted_path_to_p(alpha)
    return f.to_json(), f.pretty()


def cmd_ribbon(args):
    alpha = parse_composition(args.alpha)
    if args.basis == "h":
        combo = symfunc.ribbon_to_h(alpha)
        return {"basis": "h", "terms": _combo_json(combo)}, _combo_pretty(combo, "h")
    f = symfunc.ribbon_to_p(alpha)
    return f.to_json(), f.pretty()


def cmd_compose(args):
    out = comp.compose(parse_composition(args.alpha), parse_composition(args.beta))
    return list(out), _fmt_comp(out)


def cmd_factorize(args):
    factors = comp.irreducible_factorization(parse_composition(args.alpha))
    return [list(f) for f in factors], " o ".join(map(_fmt_comp, factors))


def cmd_class(args):
    alpha = parse_composition(args.alpha)
    members = comp.equivalence_class(alpha)
    data = {"class": [list(m) for m in members], "paths_up_to_isomorphism": comp.path_class_count(alpha)}
    pretty = "\n".join(map(_fmt_comp, members)) + f"\npaths up to isomorphism: {data['paths_up_to_isomorphism']}"
    return data, pretty


def cmd_equiv(args):
    same = comp.equivalent(parse_composition(args.alpha), parse_composition(args.beta))
    return {"equivalent": same}, f"equivalent: {str(same).lower()}"


def cmd_compose_graph(args):
    g = graphs.compose_graph(parse_composition(args.alpha), load_graph(args.graph), args.a, args.z)
    return g.to_json(), f"weights {list(g.weights)}\nedges {[list(e) for e in g.edges]}"


def cmd_basis_matrix(args):
    m = bases.family_matrix(bases.load_family(args.family), args.degree)
    return m.to_json(), _matrix_pretty(m)


def cmd_chromatic(args):
    g = load_graph(args.graph)
    value = chromatic.chromatic_polynomial(g, args.k, args.algo)
    return value, str(value)


def _verify_result(ok: bool, detail) -> tuple:
    data = {"ok": ok, "detail": detail}
    return data, f"ok: {str(ok).lower()}"


def cmd_verify(args):
    if args.what == "kdeletion":
        if len(args.graphs) != 1 or not args.cycle or not args.edge:
            raise MalformedInput("verify kdeletion needs GRAPH.json, --cycle and --edge")
        edge = parse_edges(args.edge)
        if len(edge) != 1:
            raise MalformedInput("--edge takes exactly one edge")
        rep = chromatic.verify_k_deletion(load_graph(args.graphs[0]), parse_edges(args.cycle), edge[0])
        return _verify_result(rep.ok, {"cycle_length": rep.detail["cycle_length"], "sum": rep.lhs.to_json()})
    if args.what == "incexc":
        if len(args.graphs) != 2 or args.eprime is None:
            raise MalformedInput("verify incexc needs COARSE.json FINE.json and --eprime")
        rep = chromatic.verify_inclusion_exclusion(
            load_graph(args.graphs[0]), load_graph(args.graphs[1]), parse_edges(args.eprime)
        )
        return _verify_result(rep.ok, rep.to_json()["detail"])
    if args.family is None or args.degree is None:
        raise MalformedInput(f"verify {args.what} needs --family and --degree")
    fam = bases.load_family(args.family)
    if args.what == "neat":
        res = bases.is_neat(fam, args.degree)
        return _verify_result(res.ok, res.to_json())
    ok = bases.reciprocity_check(fam, args.degree)
    return _verify_result(ok, {"family": fam.name, "degree": args.degree})


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromsym", description=__doc__.split("\n\n")[0])
    parser.add_argument("--output", choices=["json", "pretty"], default="json")
    sub = parser.add_subparsers(dest="verb", required=True)
    algo = dict(choices=sorted(chromatic.ALGORITHMS), default="delcon")

    s = sub.add_parser("xfn", help="extended chromatic symmetric function in p")
    s.add_argument("graph")
    s.add_argument("--algo", **algo)
    s.set_defaults(func=cmd_xfn)

    s = sub.add_parser("equal", help="compare X of two weighted graphs")
    s.add_argument("graph1")
    s.add_argument("graph2")
    s.add_argument("--algo", **algo)
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("path-x", help="X of the weighted path with weights alpha")
    s.add_argument("alpha")
    s.add_argument("--basis", choices=["p", "path"], default="p")
    s.set_defaults(func=cmd_path_x)

    s = sub.add_parser("ribbon", help="ribbon Schur function r_alpha")
    s.add_argument("alpha")
    s.add_argument("--basis", choices=["h", "p"], default="p")
    s.set_defaults(func=cmd_ribbon)

    for verb, func, names in (
        ("compose", cmd_compose, ("alpha", "beta")),
        ("factorize", cmd_factorize, ("alpha",)),
        ("class", cmd_class, ("alpha",)),
        ("equiv", cmd_equiv, ("alpha", "beta")),
    ):
        s = sub.add_parser(verb)
        for name in names:
            s.add_argument(name)
        s.set_defaults(func=func)

    s = sub.add_parser("compose-graph", help="alpha o (G, w) with distinguished vertices a, z")
    s.add_argument("alpha")
    s.add_argument("graph")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--z", type=int, required=True)
    s.set_defaults(func=cmd_compose_graph)

    s = sub.add_parser("basis-matrix", help="family basis expressed in power sums")
    s.add_argument("--family", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_basis_matrix)

    s = sub.add_parser("verify", help="check an identity")
    s.add_argument("what", choices=["kdeletion", "incexc", "reciprocity", "neat"])
    s.add_argument("graphs", nargs="*")
    s.add_argument("--cycle")
    s.add_argument("--edge")
    s.add_argument("--eprime")
    s.add_argument("--family")
    s.add_argument("--degree", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("chromatic", help="chromatic polynomial value")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--algo", **algo)
    s.set_defaults(func=cmd_chromatic)
    return parser


def _error(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": {"kind": kind, "message": message}}), file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, pretty = args.func(args)
    except MalformedInput as exc:
        return _error("malformed", str(exc), EXIT_MALFORMED)
    except ChromsymError as exc:
        return _error(exc.kind, str(exc), EXIT_CODES.get(exc.kind, 1))
    except (KeyError, TypeError) as exc:
        return _error("malformed", f"bad input structure: {exc}", EXIT_MALFORMED)
    if args.output == "pretty":
        print(pretty)
    else:
        print(json.dumps(data))
    if args.verb == "verify" and not data["ok"]:
        return EXIT_FAILED_CHECK
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
