"""Command-line front end.

Every subcommand reads a graph file and prints a deterministic text result.
Exit status is 0 on success, 1 for a mathematical error (for example a
cyclic graph passed to ``classify``) and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .classify import ClassificationError, classify
from .graph import Graph, GraphError, condition_L, is_acyclic, singular_vertices, sinks
from .groupoid import effectiveness_witness, isotropy_generator
from .leavitt import (
    LeavittElement, ReductionError, check_reduction, lpa_is_zero, lpa_normal_form,
    lpa_reduce_degree_zero, pi_from_steinberg, pi_to_steinberg, render_leavitt,
)
from .parse import (
    ParseError, parse_boundary_path, parse_expression, parse_graph, parse_steinberg,
)
from .scalars import Ring
from .steinberg import SteinbergElement, render_steinberg, st_normalize, st_reduce_homogeneous


def _names(items) -> str:
    items = list(items)
    return " ".join(items) if items else "none"


def cmd_info(E: Graph, ring: Ring, args) -> list:
    acyclic, cycle = is_acyclic(E)
    has_L, bad = condition_L(E)
    witness = effectiveness_witness(E)
    return [
        f"vertices: {len(E.vertices)}",
        f"edges: {len(E.edges)}",
        f"sinks: {_names(sinks(E))}",
        f"singular: {_names(v for v in E.vertices if v in singular_vertices(E))}",
        "acyclic: true" if acyclic else f"acyclic: false (witness cycle: {cycle})",
        "condition_L: true" if has_L else f"condition_L: false (witness cycle: {bad})",
        "effective: true" if witness is None else f"effective: false (witness {witness})",
    ]


def cmd_eq(E, ring, args) -> list:
    x = parse_expression(E, ring, args.x)
    y = parse_expression(E, ring, args.y)
    return ["equal" if lpa_is_zero(x - y) else "not equal"]


def cmd_normalform(E, ring, args) -> list:
    return [render_leavitt(lpa_normal_form(parse_expression(E, ring, args.x)))]


def cmd_mul(E, ring, args) -> list:
    x = parse_expression(E, ring, args.x)
    y = parse_expression(E, ring, args.y)
    return [render_leavitt(lpa_normal_form(x * y))]


def cmd_pi(E, ring, args) -> list:
    return [render_steinberg(pi_to_steinberg(parse_expression(E, ring, args.x)))]


def cmd_pi_inv(E, ring, args) -> list:
    f = parse_steinberg(E, ring, args.f)
    return [render_leavitt(lpa_normal_form(pi_from_steinberg(st_normalize(f))))]


def cmd_classify(E, ring, args) -> list:
    return [classify(E, ring).render()]


def cmd_reduce(E, ring, args) -> list:
    x = parse_expression(E, ring, args.x)
    alpha, beta, s = lpa_reduce_degree_zero(x)
    if not check_reduction(x, alpha, beta, s):
        raise ReductionError("reduction failed verification")
    ghost = render_leavitt(LeavittElement.ghost_path(E, ring, alpha))
    path = render_leavitt(LeavittElement.path(E, ring, beta))
    rhs = render_leavitt(LeavittElement.vertex(E, ring, alpha.rng) * s)
    return [f"alpha={alpha} beta={beta} s={s}",
            f"verified: {ghost} ({render_leavitt(x)}) {path} = {rhs}"]


def cmd_isotropy(E, ring, args) -> list:
    g = isotropy_generator(parse_boundary_path(E, args.path))
    return ["trivial" if g is None else f"infinite cyclic, period {g.k}"]


def cmd_convolve(E, ring, args) -> list:
    f = parse_steinberg(E, ring, args.f)
    g = parse_steinberg(E, ring, args.g)
    return [render_steinberg(f * g)]


def cmd_st_reduce(E, ring, args) -> list:
    h = parse_steinberg(E, ring, args.f)
    C, V, r = st_reduce_homogeneous(h)
    one_C = SteinbergElement.indicator(E, ring, C)
    one_V = SteinbergElement.indicator(E, ring, V)
    if not (one_C * h * one_V - one_V * r).is_zero():
        raise ReductionError("reduction failed verification")
    return [f"C={C} V={V} r={r}", f"verified: 1_{C} * h * 1_{V} = {r}*{V}"]


_COMMANDS = {
    "info": (cmd_info, [], "graph summary and groupoid properties"),
    "eq": (cmd_eq, ["x", "y"], "decide whether two expressions are equal"),
    "normalform": (cmd_normalform, ["x"], "normal form in the special-edge basis"),
    "mul": (cmd_mul, ["x", "y"], "product of two expressions, in normal form"),
    "pi": (cmd_pi, ["x"], "image in the Steinberg algebra"),
    "pi-inv": (cmd_pi_inv, ["f"], "preimage of a Steinberg element, in normal form"),
    "classify": (cmd_classify, [], "matrix algebra decomposition of an acyclic graph"),
    "reduce": (cmd_reduce, ["x"], "alpha, beta, s with alpha* x beta = s r(alpha)"),
    "isotropy": (cmd_isotropy, ["path"], "isotropy group at a boundary path"),
    "convolve": (cmd_convolve, ["f", "g"], "convolution of two Steinberg elements"),
    "st-reduce": (cmd_st_reduce, ["f"], "C, V, r with 1_C * f * 1_V = r 1_V"),
}


def build_parser() -> argparse.ArgumentParser:
    ring_opt = argparse.ArgumentParser(add_help=False)
    ring_opt.add_argument("--ring", default=argparse.SUPPRESS,
                          help="coefficient ring: int, rat or mod:<n> (default rat)")
    parser = argparse.ArgumentParser(prog="lpa", parents=[ring_opt],
                                     description="Exact computation in Leavitt path and Steinberg algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, params, text) in _COMMANDS.items():
        p = sub.add_parser(name, parents=[ring_opt], help=text)
        p.add_argument("graph", help="graph file")
        for param in params:
            p.add_argument(param)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = _COMMANDS[args.command][0]
    try:
        try:
            ring = Ring.parse(getattr(args, "ring", "rat"))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        with open(args.graph, encoding="utf-8") as fh:
            E = parse_graph(fh.read())
        lines = fn(E, ring, args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ClassificationError, ReductionError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
