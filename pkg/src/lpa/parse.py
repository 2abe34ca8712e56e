"""Text formats: graph files, Leavitt expressions, boundary paths, Steinberg elements.

Graph files are line oriented with ``#`` comments and three directives::

    vertex <name>
    edge <name> <source> <range>
    singular <vertex>

Expressions look like ``2 e f* - 1/2 v``: factors are separated by
whitespace, ``*`` marks a ghost edge, a bare coefficient c stands for c times
the unit. Boundary paths are ``e1,e2;(f1,f2)`` (a lasso), ``e1,e2`` or a
vertex name. Steinberg elements are sums of ``c*Z(alpha|beta\\{F})``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .graph import Graph, GraphError, Path
from .groupoid import BisectionAtom, atom
from .leavitt import LeavittElement
from .pathspace import BoundaryPath, Finite, Lasso
from .scalars import Ring
from .steinberg import SteinbergElement


class ParseError(Exception):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


# -- graphs

_ARITY = {"vertex": 1, "edge": 3, "singular": 1}


def parse_graph(text: str) -> Graph:
    vertices, edges, singular = [], [], []
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        (word, col), args = tokens[0], tokens[1:]
        if word not in _ARITY:
            raise ParseError(f"unknown directive {word!r}", lineno, col)
        n = _ARITY[word]
        if len(args) != n:
            plural = "argument" if n == 1 else "arguments"
            raise ParseError(f"expected {n} {plural}", lineno, col)
        names = [a for a, _ in args]
        if word == "vertex":
            vertices.append(names[0])
            where[names[0]] = (lineno, args[0][1])
        elif word == "edge":
            edges.append(tuple(names))
            where[names[0]] = (lineno, args[0][1])
            for (name, c) in args[1:]:
                where.setdefault(("ref", name), (lineno, c))
        else:
            singular.append((names[0], lineno, args[0][1]))
    vset = set(vertices)
    for e, s, r in edges:
        for v in (s, r):
            if v not in vset:
                raise ParseError(f"unknown vertex {v!r}", *where[("ref", v)])
    for v, lineno, col in singular:
        if v not in vset:
            raise ParseError(f"unknown vertex {v!r}", lineno, col)
    emitters = {s for _, s, _ in edges}
    drop = {v for v, _, _ in singular}
    ck2 = [v for v in vertices if v in emitters and v not in drop]
    try:
        return Graph(vertices, edges, ck2)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(E: Graph) -> str:
    lines = [f"vertex {v}" for v in E.vertices]
    lines += [f"edge {e} {s} {r}" for e, s, r in E.edge_triples()]
    lines += [f"singular {v}" for v in E.vertices if E.out_edges(v) and not E.is_regular(v)]
    return "\n".join(lines) + "\n"


# -- paths

def _name(E: Graph, tok: str, col: int) -> str:
    if not (E.is_vertex(tok) or E.is_edge(tok)):
        raise ParseError(f"unknown identifier {tok!r}", column=col)
    return tok


def parse_path(E: Graph, text: str, col: int = 1) -> Path:
    """``e1,e2,...`` or a vertex name."""
    text = text.strip()
    if not text:
        raise ParseError("empty path", column=col)
    if E.is_vertex(text):
        return E.vertex(text)
    names = [t.strip() for t in text.split(",")]
    for n in names:
        if not E.is_edge(n):
            raise ParseError(f"unknown edge {n!r}", column=col)
    try:
        return E.path(names)
    except GraphError as exc:
        raise ParseError(str(exc), column=col) from None


def parse_boundary_path(E: Graph, text: str) -> BoundaryPath:
    text = text.strip()
    m = re.fullmatch(r"([^;]*);\s*\(([^)]*)\)", text)
    if m is None:
        p = parse_path(E, text)
        if E.is_regular(p.rng):
            raise ParseError(f"{p} ends at {p.rng}, where CK2 holds, so it is not a boundary path")
        return Finite(p)
    cycle = parse_path(E, m.group(2), m.start(2) + 1)
    prefix = parse_path(E, m.group(1)) if m.group(1).strip() else E.vertex(cycle.src)
    try:
        return Lasso(prefix, cycle)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


# -- coefficients

def _coefficient(tok: str) -> Fraction:
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ZeroDivisionError
        return Fraction(int(p), int(q))
    return Fraction(int(tok))


def _ring_value(ring: Ring, value: Fraction, col: int):
    try:
        return ring(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"coefficient {value} is not in {ring}", column=col) from None


# -- Leavitt expressions

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][\w.]*)(?P<star>\*)?|(?P<op>[+-]))")


def _tokens(text: str) -> list:
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        start = m.start(m.lastgroup) + 1
        if m.group("num"):
            out.append(("num", m.group("num"), start))
        elif m.group("id"):
            out.append(("id", (m.group("id"), bool(m.group("star"))), start))
        else:
            out.append(("op", m.group("op"), start))
        pos = m.end()
    return out


def _generator(E: Graph, ring: Ring, name: str, ghost: bool, col: int) -> LeavittElement:
    _name(E, name, col)
    if E.is_vertex(name):
        return LeavittElement.vertex(E, ring, name)
    if ghost:
        return LeavittElement.ghost(E, ring, name)
    return LeavittElement.edge(E, ring, name)


def parse_expression(E: Graph, ring: Ring, text: str) -> LeavittElement:
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty expression", column=1)
    total = LeavittElement.zero(E, ring)
    i, sign, first = 0, 1, True
    while i < len(toks):
        kind, val, col = toks[i]
        if kind == "op":
            sign = -1 if val == "-" else 1
            i += 1
            if i == len(toks):
                raise ParseError("expression ends after an operator", column=col)
            kind, val, col = toks[i]
            if kind == "op":
                raise ParseError(f"unexpected {val!r}", column=col)
        elif not first:
            raise ParseError("expected '+' or '-'", column=col)
        coeff = Fraction(sign)
        term = None
        while i < len(toks) and toks[i][0] != "op":
            kind, val, col = toks[i]
            if kind == "num":
                try:
                    coeff *= _coefficient(val)
                except ZeroDivisionError:
                    raise ParseError("zero denominator", column=col) from None
            else:
                g = _generator(E, ring, val[0], val[1], col)
                term = g if term is None else term * g
            i += 1
        if term is None:
            term = LeavittElement.one(E, ring)
        total = total + term * _ring_value(ring, coeff, col)
        first = False
        sign = 1
    return total


# -- Steinberg elements

_ATOM = re.compile(r"\s*(?:(?P<coeff>-?\d+(?:/\d+)?)\s*\*\s*)?Z\(\s*(?P<a>[^|)]*)\|(?P<b>[^\\)]*)"
                   r"(?:\\\{(?P<F>[^}]*)\})?\s*\)\s*")


def parse_atom(E: Graph, text: str, col: int = 1) -> BisectionAtom:
    m = _ATOM.fullmatch(text)
    if m is None or m.group("coeff"):
        raise ParseError(f"malformed atom {text.strip()!r}", column=col)
    return _atom_from_match(E, m, col)


def _atom_from_match(E: Graph, m, col: int) -> BisectionAtom:
    alpha = parse_path(E, m.group("a"), col)
    beta = parse_path(E, m.group("b"), col)
    F = [f.strip() for f in m.group("F").split(",")] if m.group("F") else []
    for f in F:
        if not E.is_edge(f):
            raise ParseError(f"unknown edge {f!r}", column=col)
    try:
        return atom(E, alpha, beta, F)
    except GraphError as exc:
        raise ParseError(str(exc), column=col) from None


def parse_steinberg(E: Graph, ring: Ring, text: str) -> SteinbergElement:
    if text.strip() == "0":
        return SteinbergElement.zero(E, ring)
    terms = []
    pos, sign = 0, 1
    first = True
    while True:
        m = re.compile(r"\s*([+-])").match(text, pos)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            pos = m.end()
        elif not first:
            if text[pos:].strip():
                raise ParseError("expected '+' or '-'", column=pos + 1)
            break
        m = _ATOM.match(text, pos)
        if m is None:
            raise ParseError("expected a term c*Z(alpha|beta)", column=pos + 1)
        coeff = _coefficient(m.group("coeff")) if m.group("coeff") else Fraction(1)
        A = _atom_from_match(E, m, pos + 1)
        terms.append((_ring_value(ring, sign * coeff, pos + 1), A))
        pos, sign, first = m.end(), 1, False
        if pos >= len(text):
            break
    return SteinbergElement(E, ring, terms)
