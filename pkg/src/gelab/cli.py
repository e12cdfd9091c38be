"""Command-line front end.

Subcommands cover every public operation: entropy, chif, symmetric,
maximizer, gadget, substitute, blowup, union. Graphs are read from
edge-list or DIMACS files; constructed graphs are emitted as edge lists
with a comment header documenting the label map, so they re-parse
identically.

Exit codes: 0 success (and "yes" verdicts), 1 "no" verdicts, 2 parse or
usage errors, 3 solver non-convergence, 4 enumeration cap exceeded. The
environment variable GELAB_CAP overrides the default enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characterize import is_entropy_maximizer, is_symmetric
from .constructions import GadgetSpec, blow_up, hardness_gadget, substitute, union
from .entropy import DEFAULT_TOL, entropy
from .errors import CapExceeded, GelabError, ParseError
from .exactlp import fractional_chromatic_number
from .graphs import Distribution, Graph
from .io import format_graph, format_rational, parse_distribution, parse_graph
from .oracle import brute_entropy

EXIT_OK = 0
EXIT_NO = 1
EXIT_PARSE = 2
EXIT_NONCONVERGENCE = 3
EXIT_CAP = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load_graph(args, attr: str = "graph") -> Graph:
    return parse_graph(_read(getattr(args, attr)), getattr(args, "format", None))


def _load_distribution(args, g: Graph) -> Distribution:
    path = getattr(args, "dist", None)
    if path is None:
        return Distribution.uniform(g.n)
    dist, warnings = parse_distribution(_read(path), g.n)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return dist


def _set_members(s) -> list[int]:
    return list(s.sorted_members())


def _certificate_json(cm) -> dict:
    return {
        "fold": cm.fold,
        "covered": sorted(cm.covered),
        "sets": [
            {"set": _set_members(s), "multiplicity": m}
            for s, m in sorted(cm.multiplicities.items(), key=lambda kv: _set_members(kv[0]))
        ],
    }


def _certificate_text(cm) -> str:
    lines = [f"cover fold: {cm.fold} ({cm.size} sets counted with multiplicity)"]
    for s, m in sorted(cm.multiplicities.items(), key=lambda kv: _set_members(kv[0])):
        lines.append(f"  {m} x {{{', '.join(map(str, _set_members(s)))}}}")
    return "\n".join(lines)


def cmd_entropy(args) -> int:
    g = _load_graph(args)
    p = _load_distribution(args, g)
    result = entropy(g, p, tol=args.tol, cap=args.cap)
    oracle_value = None
    if args.oracle:
        oracle_value = brute_entropy(g, p, seed_base=args.seed)
    if args.json:
        payload = {
            "value": result.value,
            "gap": result.gap,
            "iterations": result.iterations,
            "converged": result.converged,
            "minimizer": {str(v): c for v, c in enumerate(result.minimizer.coords)},
            "decomposition": [
                {"set": _set_members(s), "weight": w}
                for s, w in result.minimizer.decomposition
            ],
        }
        if oracle_value is not None:
            payload["oracle_value"] = oracle_value
        print(json.dumps(payload))
    else:
        print(f"entropy: {result.value:.12f} bits")
        print(f"gap: {result.gap:.3e}")
        print(f"iterations: {result.iterations}")
        if oracle_value is not None:
            print(f"oracle: {oracle_value:.12f} bits")
    if not result.converged:
        print("warning: solver did not converge to tolerance", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


def cmd_chif(args) -> int:
    g = _load_graph(args)
    chi, coloring = fractional_chromatic_number(g, cap=args.cap)
    if args.json:
        print(json.dumps({
            "chi_f": format_rational(chi),
            "decimal": float(chi),
            "coloring": [
                {"set": _set_members(s), "weight": format_rational(w)}
                for s, w in sorted(coloring.weights.items(), key=lambda kv: _set_members(kv[0]))
            ],
        }))
    else:
        print(f"chi_f: {format_rational(chi)} (= {float(chi):.6f})")
        for s, w in sorted(coloring.weights.items(), key=lambda kv: _set_members(kv[0])):
            print(f"  {format_rational(w)} x {{{', '.join(map(str, _set_members(s)))}}}")
    return EXIT_OK


def cmd_symmetric(args) -> int:
    g = _load_graph(args)
    verdict = is_symmetric(g, cap=args.cap)
    if args.json:
        print(json.dumps({
            "symmetric": verdict.is_symmetric,
            "chi_f": format_rational(verdict.chi_f),
            "n_over_alpha": format_rational(verdict.n_over_alpha),
            "certificate": _certificate_json(verdict.certificate)
            if verdict.certificate else None,
        }))
    else:
        word = "symmetric" if verdict.is_symmetric else "not symmetric"
        print(f"{word}: chi_f = {format_rational(verdict.chi_f)}, "
              f"n/alpha = {format_rational(verdict.n_over_alpha)}")
        if verdict.certificate:
            print(_certificate_text(verdict.certificate))
    return EXIT_OK if verdict.is_symmetric else EXIT_NO


def cmd_maximizer(args) -> int:
    g = _load_graph(args)
    p = _load_distribution(args, g)
    verdict = is_entropy_maximizer(g, p, cap=args.cap)
    if args.json:
        print(json.dumps({
            "maximizer": verdict.is_maximizer,
            "chi_f_support": format_rational(verdict.chi_f_support),
            "alpha_p": format_rational(verdict.alpha_p),
            "reason": verdict.reason,
            "certificate": _certificate_json(verdict.certificate)
            if verdict.certificate else None,
        }))
    else:
        word = "maximizer" if verdict.is_maximizer else "not a maximizer"
        print(f"{word}: chi_f(support) = {format_rational(verdict.chi_f_support)}, "
              f"alpha_P = {format_rational(verdict.alpha_p)}")
        if verdict.certificate:
            print(_certificate_text(verdict.certificate))
        elif verdict.reason:
            print(f"reason: {verdict.reason}")
    return EXIT_OK if verdict.is_maximizer else EXIT_NO


def _emit_graph(args, g: Graph, comments: list[str]) -> int:
    if args.json:
        print(json.dumps({
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "labels": comments,
        }))
    else:
        sys.stdout.write(format_graph(g, comments))
    return EXIT_OK


def cmd_gadget(args) -> int:
    f = _load_graph(args)
    spec = GadgetSpec(f, args.k)
    g = hardness_gadget(spec)
    comments = [f"hardness gadget: base graph n={f.n}, k={args.k}"]
    comments += [f"{label} = {spec.role(label)}" for label in range(g.n)]
    return _emit_graph(args, g, comments)


def cmd_substitute(args) -> int:
    g = _load_graph(args, "graph")
    f = parse_graph(_read(args.inner), getattr(args, "format", None))
    sub = substitute(g, args.vertex, f)
    comments = [f"substitution of a {f.n}-vertex graph for vertex {args.vertex}"]
    comments += [f"g {old} -> {new}" for old, new in sorted(sub.outer_map.items())]
    comments += [f"f {old} -> {new}" for old, new in sorted(sub.inner_map.items())]
    return _emit_graph(args, sub.graph, comments)


def cmd_blowup(args) -> int:
    g = _load_graph(args)
    p = _load_distribution(args, g)
    blown, spec = blow_up(g, p)
    comments = [f"blow-up with denominator m={spec.m}"]
    comments += [
        f"v {v} -> copies {spec.block(v).start}..{spec.block(v).stop - 1}"
        for v in range(g.n)
    ]
    return _emit_graph(args, blown, comments)


def cmd_union(args) -> int:
    f = _load_graph(args, "graph")
    g = parse_graph(_read(args.other), getattr(args, "format", None))
    return _emit_graph(args, union(f, g), ["union of two graphs on a shared vertex set"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelab",
        description="Graph entropy, fractional chromatic numbers, and "
                    "entropy-maximizer certificates.",
    )
    parser.add_argument("--version", action="version", version=f"gelab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dist=False, dist_required=False):
        p.add_argument("graph", help="graph file (edge list or DIMACS; '-' for stdin)")
        if dist:
            if dist_required:
                p.add_argument("dist", help="distribution file with 'v p_v' lines")
            else:
                p.add_argument("dist", nargs="?", default=None,
                               help="distribution file; uniform when omitted")
        p.add_argument("--format", choices=["edge-list", "dimacs"], default=None,
                       help="input graph format (default: auto-detect)")
        p.add_argument("--cap", type=int, default=None,
                       help="enumeration vertex cap (default 40; env GELAB_CAP)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("entropy", help="compute H(G,P) with a certified gap")
    common(p, dist=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help="duality-gap tolerance in bits (default 1e-9)")
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force oracle (n <= 10)")
    p.add_argument("--seed", type=int, default=0,
                   help="base seed for the oracle multi-start")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("chif", help="exact fractional chromatic number")
    common(p)
    p.set_defaults(func=cmd_chif)

    p = sub.add_parser("symmetric", help="is the uniform distribution a maximizer?")
    common(p)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("maximizer", help="does P maximize the entropy of G?")
    common(p, dist=True, dist_required=True)
    p.set_defaults(func=cmd_maximizer)

    p = sub.add_parser("gadget", help="emit the symmetry-hardness gadget")
    common(p)
    p.add_argument("--k", type=int, required=True, help="independent-set size parameter")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("substitute", help="substitute a graph for a vertex")
    p.add_argument("graph", help="outer graph file")
    p.add_argument("vertex", type=int, help="vertex of the outer graph to replace")
    p.add_argument("inner", help="graph file substituted for the vertex")
    p.add_argument("--format", choices=["edge-list", "dimacs"], default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_substitute)

    p = sub.add_parser("blowup", help="blow up vertices by a rational distribution")
    common(p, dist=True)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("union", help="union of two graphs on one vertex set")
    p.add_argument("graph", help="first graph file")
    p.add_argument("other", help="second graph file")
    p.add_argument("--format", choices=["edge-list", "dimacs"], default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_union)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GelabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
