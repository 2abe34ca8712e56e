"""Seeded random generators for paths, atoms, elements and graphs."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph, Path
from .groupoid import BisectionAtom, atom_is_empty
from .leavitt import LeavittElement, Monomial
from .scalars import Ring
from .steinberg import SteinbergElement


def random_coefficient(ring: Ring, rnd: random.Random, bound: int = 3):
    while True:
        c = ring(rnd.randint(-bound, bound))
        if not c.is_zero():
            return c


def random_path(E: Graph, rnd: random.Random, max_len: int, source: Optional[str] = None) -> Path:
    v = source if source is not None else rnd.choice(E.vertices)
    p = E.vertex(v)
    for _ in range(rnd.randint(0, max_len)):
        out = E.out_edges(p.rng)
        if not out:
            break
        p = p + E.edge_path(rnd.choice(out))
    return p


def _paths_ending_at(E: Graph, rnd: random.Random, v: str, max_len: int) -> Path:
    """A random path with range v, built backwards."""
    p = E.vertex(v)
    for _ in range(rnd.randint(0, max_len)):
        inc = E.in_edges(p.src)
        if not inc:
            break
        p = E.edge_path(rnd.choice(inc)) + p
    return p


def random_monomial(E: Graph, rnd: random.Random, max_len: int = 2,
                    degree: Optional[int] = None) -> Monomial:
    """mu nu* with |mu|, |nu| <= max_len (and |mu| - |nu| = degree when possible)."""
    for _ in range(50):
        mu = random_path(E, rnd, max_len)
        nu = _paths_ending_at(E, rnd, mu.rng, max_len)
        if degree is None or len(mu) - len(nu) == degree:
            return Monomial(mu, nu)
    # fall back to equal-length tails for degree 0
    mu = random_path(E, rnd, max_len)
    return Monomial(mu, mu)


def random_leavitt(E: Graph, ring: Ring, rnd: random.Random, terms: int = 3,
                   max_len: int = 2, degree: Optional[int] = None) -> LeavittElement:
    n = rnd.randint(1, terms)
    return LeavittElement(E, ring, [(random_coefficient(ring, rnd), random_monomial(E, rnd, max_len, degree))
                                    for _ in range(n)])


def random_nonzero_leavitt(E: Graph, ring: Ring, rnd: random.Random, **kw) -> LeavittElement:
    while True:
        x = random_leavitt(E, ring, rnd, **kw)
        if not x.is_zero():
            return x


def random_atom(E: Graph, rnd: random.Random, max_len: int = 2) -> BisectionAtom:
    """A random nonempty bisection atom Z(alpha, beta, F)."""
    while True:
        m = random_monomial(E, rnd, max_len)
        out = E.out_edges(m.mu.rng)
        F = frozenset(e for e in out if rnd.random() < 0.3)
        A = BisectionAtom(m.mu, m.nu, F)
        if not atom_is_empty(E, A):
            return A


def random_steinberg(E: Graph, ring: Ring, rnd: random.Random, terms: int = 3,
                     max_len: int = 2, degree: Optional[int] = None) -> SteinbergElement:
    out = []
    for _ in range(rnd.randint(1, terms)):
        while True:
            A = random_atom(E, rnd, max_len)
            if degree is None or A.degree == degree:
                break
        out.append((random_coefficient(ring, rnd), A))
    return SteinbergElement(E, ring, out)


def random_acyclic_graph(rnd: random.Random, max_vertices: int = 6, max_edges: int = 8) -> Graph:
    """Vertices v1..vn with every edge going from a lower to a higher index."""
    n = rnd.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    if n > 1:
        for k in range(rnd.randint(0, max_edges)):
            i = rnd.randrange(n - 1)
            j = rnd.randrange(i + 1, n)
            edges.append((f"e{k + 1}", verts[i], verts[j]))
    return Graph(verts, edges)

