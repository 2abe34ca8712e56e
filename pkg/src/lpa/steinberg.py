"""The Steinberg algebra of the boundary path groupoid.

Elements are finite R-linear combinations of indicator functions of bisection
atoms. Representations are not unique (1_Z(v) = 1_Z(e|e) + 1_Z(f|f) in the
rose with two petals), so equality is decided by normalizing the difference:
after refinement into pairwise disjoint nonempty atoms with nonzero
coefficients, an element is zero exactly when no terms remain.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .graph import Graph, GraphError
from .groupoid import (
    BisectionAtom, GroupoidElement, atom_contains, atom_difference,
    atom_element_at_range, atom_intersect, atom_is_empty, atom_mul,
    atom_sort_key, unit_atom,
)
from .scalars import Ring, RingMismatch, Scalar


class SteinbergElement:
    """An immutable linear combination sum c_i 1_{A_i}."""

    __slots__ = ("graph", "ring", "terms", "normalized")

    def __init__(self, graph: Graph, ring: Ring, terms: Iterable = (), normalized: bool = False):
        terms = tuple((ring(c), A) for c, A in terms)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "normalized", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("SteinbergElement is immutable")

    @classmethod
    def indicator(cls, graph: Graph, ring: Ring, A: Optional[BisectionAtom], coeff=1):
        if A is None:
            return cls(graph, ring, (), normalized=True)
        return cls(graph, ring, [(coeff, A)])

    @classmethod
    def zero(cls, graph: Graph, ring: Ring):
        return cls(graph, ring, (), normalized=True)

    def _check(self, other: SteinbergElement):
        if not isinstance(other, SteinbergElement):
            raise TypeError(f"expected a SteinbergElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine {self.ring} and {other.ring}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("elements live over different graphs")

    def __add__(self, other):
        return st_add(self, other)

    def __sub__(self, other):
        return st_add(self, st_scale(self.ring(-1), other))

    def __neg__(self):
        return st_scale(self.ring(-1), self)

    def __mul__(self, other):
        if isinstance(other, SteinbergElement):
            return st_convolve(self, other)
        return st_scale(self.ring(other), self)

    def __rmul__(self, other):
        return st_scale(self.ring(other), self)

    def is_zero(self) -> bool:
        return not st_normalize(self).terms

    def __eq__(self, other):
        if not isinstance(other, SteinbergElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __call__(self, g: GroupoidElement) -> Scalar:
        return st_evaluate(self, g)

    def degrees(self) -> set:
        return {A.degree for _, A in st_normalize(self).terms}

    def atoms(self) -> list:
        return [A for _, A in self.terms]

    def __str__(self):
        return render_steinberg(self)

    def __repr__(self):
        return f"SteinbergElement({self})"


def _sort_terms(E: Graph, terms: list) -> tuple:
    return tuple(sorted(terms, key=lambda t: (t[1].degree, atom_sort_key(E, t[1]))))


def st_normalize(f: SteinbergElement) -> SteinbergElement:
    """Refine into pairwise disjoint nonempty atoms with nonzero coefficients."""
    if f.normalized:
        return f
    E = f.graph
    cells = []
    for c, A in f.terms:
        if c.is_zero() or atom_is_empty(E, A):
            continue
        refined = []
        leftover = [A]
        for d, cell in cells:
            inter = atom_intersect(E, cell, A)
            if inter is None:
                refined.append((d, cell))
                continue
            refined.append((d + c, inter))
            refined.extend((d, P) for P in atom_difference(E, cell, A))
            leftover = [Q for L in leftover for Q in atom_difference(E, L, cell)]
        refined.extend((c, L) for L in leftover)
        cells = refined
    cells = [(c, A) for c, A in cells if not c.is_zero()]
    return SteinbergElement(E, f.ring, _sort_terms(E, cells), normalized=True)


def st_evaluate(f: SteinbergElement, g: GroupoidElement) -> Scalar:
    total = f.ring.zero()
    for c, A in f.terms:
        if atom_contains(A, g):
            total = total + c
    return total


def st_add(f: SteinbergElement, g: SteinbergElement) -> SteinbergElement:
    f._check(g)
    return st_normalize(SteinbergElement(f.graph, f.ring, f.terms + g.terms))


def st_scale(r: Scalar, f: SteinbergElement) -> SteinbergElement:
    r = f.ring(r)
    return st_normalize(SteinbergElement(f.graph, f.ring, [(r * c, A) for c, A in f.terms]))


def st_convolve(f: SteinbergElement, g: SteinbergElement) -> SteinbergElement:
    """Convolution; on indicators of bisections 1_A * 1_B = 1_{AB}."""
    f._check(g)
    E = f.graph
    terms = []
    for c, A in f.terms:
        for d, B in g.terms:
            AB = atom_mul(E, A, B)
            if AB is not None:
                terms.append((c * d, AB))
    return st_normalize(SteinbergElement(E, f.ring, terms))


def st_convolve_pointwise(f: SteinbergElement, g: SteinbergElement, gamma: GroupoidElement) -> Scalar:
    """(f * g)(gamma) = sum over gamma = zeta eta of f(zeta) g(eta), by brute force.

    Every zeta in supp f with codomain c(gamma) lies in some term's bisection,
    which holds at most one such zeta; eta is then zeta^-1 gamma.
    """
    total = f.ring.zero()
    for c, A in f.terms:
        zeta = atom_element_at_range(A, gamma.x)
        if zeta is None:
            continue
        eta = zeta.inverse() * gamma
        for d, B in g.terms:
            if atom_contains(B, eta):
                total = total + c * d
    return total


def st_involution(f: SteinbergElement) -> SteinbergElement:
    conj = f.ring.conjugate
    return SteinbergElement(f.graph, f.ring, [(conj(c), A.inverse()) for c, A in f.terms],
                            normalized=False)


def st_degree_component(f: SteinbergElement, n: int) -> SteinbergElement:
    f = st_normalize(f)
    return SteinbergElement(f.graph, f.ring, [(c, A) for c, A in f.terms if A.degree == n],
                            normalized=True)


def st_local_unit(E: Graph, ring: Ring, V: Iterable[str]) -> SteinbergElement:
    """sum over v in V of 1_{Z(v)}: a local unit for everything supported over V."""
    V = sorted(set(V), key=E.vertex_key)
    if not V:
        raise ValueError("local unit needs a nonempty vertex set")
    return st_normalize(SteinbergElement(E, ring, [(1, unit_atom(E, v)) for v in V]))


def support_vertices(f: SteinbergElement) -> set:
    """Sources of the alpha and beta paths of the terms of f."""
    out = set()
    for _, A in f.terms:
        out.add(A.alpha.src)
        out.add(A.beta.src)
    return out


def st_reduce_homogeneous(h: SteinbergElement) -> tuple:
    """Return (C, V, r) with 1_C * h * 1_V = r 1_V, V a nonempty unit-space atom.

    ``h`` must be nonzero and homogeneous. Multiplying by the inverse B of the
    first disjoint term moves h into degree 0 with r 1_{BB^-1} as its unit
    part; the remaining atoms Z(gamma|delta) have gamma != delta of equal
    length, so they vanish once V is cut down to a cylinder Z(w) with w at
    least that long.
    """
    E = h.graph
    h = st_normalize(h)
    if not h.terms:
        raise ValueError("zero element")
    if len({A.degree for _, A in h.terms}) != 1:
        raise ValueError("not homogeneous")
    r, D1 = h.terms[0]
    B = D1.inverse()
    rest = []
    for _, D in h.terms[1:]:
        BD = atom_mul(E, B, D)
        if BD is not None:
            rest.append(BD)
    w, F = D1.beta, D1.F
    V = BisectionAtom(w, w, F)

    def separated(V):
        for K in rest:
            VK = atom_mul(E, V, K)
            if VK is not None and atom_mul(E, VK, V) is not None:
                return False
        return True

    while not separated(V):
        free = [e for e in E.out_edges(w.rng) if e not in F]
        if not free:
            # V is the single finite path w; no non-unit atom meets it on both sides
            raise AssertionError(f"cannot separate {V} from {rest}")
        w = w + E.edge_path(free[0])
        F = frozenset()
        V = BisectionAtom(w, w)
    C = atom_mul(E, V, B)
    return C, V, r


def render_steinberg(f: SteinbergElement) -> str:
    if not f.terms:
        return "0"
    return " + ".join(f"{c}*{A}" for c, A in f.terms)
