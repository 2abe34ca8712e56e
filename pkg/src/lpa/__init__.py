"""Exact computation in Leavitt path algebras and Steinberg algebras of graph groupoids."""

from .classify import Classification, MatrixAlgebraElement, classify, explicit_iso
from .graph import Graph, GraphError, Path, condition_L, is_acyclic, line_graph, rose, toeplitz
from .groupoid import BisectionAtom, GroupoidElement, atom_mul, effectiveness_witness
from .leavitt import (
    LeavittElement, Monomial, efamily_verify, lpa_is_zero, lpa_normal_form,
    lpa_reduce_degree_zero, pi_from_steinberg, pi_to_steinberg,
)
from .parse import ParseError, parse_expression, parse_graph, parse_steinberg
from .pathspace import Finite, Lasso
from .scalars import Integers, IntegersMod, Rationals, Ring
from .steinberg import SteinbergElement, st_reduce_homogeneous

__all__ = [
    "BisectionAtom", "Classification", "Finite", "Graph", "GraphError", "GroupoidElement",
    "Integers", "IntegersMod", "Lasso", "LeavittElement", "MatrixAlgebraElement", "Monomial",
    "ParseError", "Path", "Rationals", "Ring", "SteinbergElement", "atom_mul", "classify",
    "condition_L", "effectiveness_witness", "efamily_verify", "explicit_iso", "is_acyclic",
    "line_graph", "lpa_is_zero", "lpa_normal_form", "lpa_reduce_degree_zero",
    "parse_expression", "parse_graph", "parse_steinberg", "pi_from_steinberg",
    "pi_to_steinberg", "rose", "st_reduce_homogeneous", "toeplitz",
]
