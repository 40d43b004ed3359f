"""Command-line interface.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
Summaries are single-line ``key=value`` records on stdout.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import algebraic, constructions, graph as gr, search
from .errors import SROError
from .graphio import encode_graph6, format_edges, read_graph
from .poly import char_poly
from .spectral import signless_laplacian_radius, spectrum

# flags whose values may start with "-" (e.g. "--quadratic -2,-2")
_VALUE_FLAGS = {"--quadratic", "--integer", "--trig", "--alpha"}


class UsageError(Exception):
    pass


def _pair(text: str, sep: str, what: str) -> tuple[int, int]:
    parts = text.split(sep)
    if len(parts) != 2:
        raise UsageError(f"{what} must look like a{sep}b, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"{what} must hold two integers, got {text!r}") from None


def _emit_graph(g: gr.Graph, fmt: str, out) -> None:
    if fmt == "edges":
        out.write(format_edges(g))
    else:
        out.write(encode_graph6(g).decode("ascii") + "\n")


def _fmt(x: float) -> str:
    # cos rounding leaves residue like 1e-16 where the value is exactly 0
    return f"{0.0 if abs(x) < 1e-14 else x:.15g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sro", description="Spectral radius order toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("g6", "edges"), default="g6")
        return p

    p = with_format(sub.add_parser("realize", help="graph realizing the largest root of x^2+bx+c"))
    p.add_argument("--quadratic", required=True, metavar="b,c")
    p.add_argument("--M", type=int, default=None)

    p = with_format(sub.add_parser("classify", help="classify 2cos(2*pi*k/n)"))
    p.add_argument("--trig", required=True, metavar="k/n")

    p = sub.add_parser("kappa", help="exhaustive spectral radius order search")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--quadratic", metavar="b,c")
    group.add_argument("--integer", type=int, metavar="LAMBDA")
    p.add_argument("--max-order", type=int, default=search.DEFAULT_MAX_ORDER)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("spectrum", help="adjacency eigenvalues")
    p.add_argument("graph")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("graph")

    p = sub.add_parser("verify", help="certify a graph's spectral radius")
    p.add_argument("graph")
    p.add_argument("--quadratic", required=True, metavar="b,c")

    p = with_format(sub.add_parser("family", help="standard graph families"))
    p.add_argument("name", choices=("bipartite", "join", "path", "complete", "regular"))
    p.add_argument("params", type=int, nargs="+")

    p = with_format(sub.add_parser("product", help="Cartesian (--sum) or Kronecker (--prod) product"))
    op = p.add_mutually_exclusive_group(required=True)
    op.add_argument("--sum", action="store_true")
    op.add_argument("--prod", action="store_true")
    p.add_argument("g1")
    p.add_argument("g2")

    p = with_format(sub.add_parser("signless", help="graph realizing the signless Laplacian radius"))
    p.add_argument("graph")

    p = sub.add_parser("hoffman", help="Hoffman limit point alpha_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("equiangular", help="equiangular line count for large d")
    p.add_argument("--alpha", required=True, metavar="p/q")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kappa", type=int, default=None)
    return parser


def _normalize(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


_FAMILY_ARITY = {"bipartite": 2, "join": 2, "path": 1, "complete": 1, "regular": 2}


def _family(name: str, params: list[int]) -> gr.Graph:
    if len(params) != _FAMILY_ARITY[name]:
        raise UsageError(f"family {name} takes {_FAMILY_ARITY[name]} integer parameter(s)")
    if name == "bipartite":
        return constructions.family_bipartite_witness(*params)
    if name == "join":
        return constructions.family_join_witness(*params)
    if name == "path":
        return gr.path(*params)
    if name == "complete":
        return gr.complete(*params)
    return constructions.regular_graph(*params)


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd == "realize":
        b, c = _pair(args.quadratic, ",", "--quadratic")
        g = constructions.realize_quadratic(b, c, args.M)
        verdict = search.verify_radius(g, algebraic.QuadraticTarget(b, c))
        _emit_graph(g, args.format, out)
        out.write(f"lambda1={_fmt(verdict.numeric_radius)} certified={'true' if verdict.ok else 'false'}\n")
        return 0 if verdict.ok else 1

    if cmd == "classify":
        k, n = _pair(args.trig, "/", "--trig")
        res = algebraic.classify_leq2(k, n)
        value = algebraic.TrigTarget(k, n).value
        if isinstance(res, algebraic.PathOrder):
            witness = gr.path(res.witness_order)
            out.write(f"result=PathOrder q={res.q} lambda={_fmt(value)} witness={encode_graph6(witness).decode()}\n")
        elif isinstance(res, algebraic.SpecialTwo):
            witness = gr.complete(3)
            out.write(f"result=SpecialTwo lambda=2 witness={encode_graph6(witness).decode()}\n")
        else:
            line = f"result=Rejected reason={res.reason} lambda={_fmt(value)}"
            if res.conjugate is not None:
                j, m = res.conjugate
                line += f" conjugate={j}/{m} conjugate_value={_fmt(res.conjugate_value)}"
            out.write(line + "\n")
            return 0
        if args.format == "edges":
            out.write(format_edges(witness))
        return 0

    if cmd == "kappa":
        if args.quadratic is not None:
            target = algebraic.QuadraticTarget(*_pair(args.quadratic, ",", "--quadratic"))
        else:
            target = args.integer
        cap = search.enumeration_cap()
        if args.max_order > cap:
            raise SROError(
                f"--max-order {args.max_order} exceeds the enumeration cap {cap}"
                f" (raise with SRO_MAX_ORDER, hard limit {search.HARD_MAX_ORDER})"
            )
        cert = search.kappa(
            target,
            args.max_order,
            use_pruning=not args.no_prune,
            jobs=args.jobs,
            progress=lambda st: err.write(st.line() + "\n"),
        )
        if isinstance(cert.result, search.Found):
            w = encode_graph6(cert.result.witness).decode()
            out.write(f"kappa={cert.result.order} witness={w}\n")
        else:
            out.write(f"result=NotUpTo bound={cert.result.bound}\n")
        return 0

    if cmd == "spectrum":
        spec = spectrum(read_graph(args.graph), args.tol)
        for x in spec.eigenvalues:
            out.write(_fmt(x) + "\n")
        return 0

    if cmd == "charpoly":
        out.write(str(char_poly(read_graph(args.graph))) + "\n")
        return 0

    if cmd == "verify":
        b, c = _pair(args.quadratic, ",", "--quadratic")
        verdict = search.verify_radius(read_graph(args.graph), algebraic.QuadraticTarget(b, c))
        out.write(f"verdict={'true' if verdict.ok else 'false'} lambda1={_fmt(verdict.numeric_radius)}\n")
        for reason in verdict.reasons:
            err.write(f"reason: {reason}\n")
        return 0 if verdict.ok else 1

    if cmd == "family":
        _emit_graph(_family(args.name, args.params), args.format, out)
        return 0

    if cmd == "product":
        g1, g2 = read_graph(args.g1), read_graph(args.g2)
        g = constructions.realize_sum(g1, g2) if args.sum else constructions.realize_product(g1, g2)
        _emit_graph(g, args.format, out)
        return 0

    if cmd == "signless":
        g = read_graph(args.graph)
        mu = signless_laplacian_radius(g)
        _emit_graph(constructions.realize_signless_laplacian_radius(g), args.format, out)
        out.write(f"mu={_fmt(mu)}\n")
        return 0

    if cmd == "hoffman":
        out.write(f"{algebraic.hoffman_alpha(args.n):.12f}\n")
        return 0

    if cmd == "equiangular":
        p, q = _pair(args.alpha, "/", "--alpha")
        lam = algebraic.lambda_from_alpha(p, q)
        kap = args.kappa
        if kap is None:
            if lam.denominator != 1 or lam < 1:
                raise SROError(f"lambda = {lam} is not a positive integer; pass --kappa")
            kap = int(lam) + 1
        out.write(f"{algebraic.equiangular_count(args.dim, kap)}\n")
        return 0

    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(_normalize(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out, err)
    except UsageError as exc:
        err.write(f"sro: usage error: {exc}\n")
        return 2
    except (SROError, OSError) as exc:
        err.write(f"sro: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
