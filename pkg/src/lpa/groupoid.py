"""The boundary path groupoid of a graph and its compact open bisections.

A groupoid element is a triple (x, k, y) of boundary paths x, y that are
tail equivalent with lag k. The bisection atoms

    Z(alpha, beta, F) = {(alpha z, |alpha| - |beta|, beta z) : z avoids F}

are closed under products, inverses and intersections, and set differences
split into finitely many disjoint atoms. Functions returning an atom use
``None`` for the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, Path, exitless_cycles
from .pathspace import (
    BoundaryPath, Finite, Lasso, bpath_key, drop, has_prefix, prepend,
    sample_boundary_paths,
)


@dataclass(frozen=True)
class LagSet:
    """The lags {base + m * period}; period 0 means the lag is unique."""

    base: int
    period: int = 0

    def __contains__(self, k: int) -> bool:
        if self.period == 0:
            return k == self.base
        return (k - self.base) % self.period == 0

    def lags(self, radius: int = 1) -> list:
        if self.period == 0:
            return [self.base]
        return [self.base + m * self.period for m in range(-radius, radius + 1)]


def tail_equivalent(x: BoundaryPath, y: BoundaryPath) -> Optional[LagSet]:
    """All lags k with x ~_k y, or None when x and y are not tail equivalent."""
    if isinstance(x, Finite) and isinstance(y, Finite):
        if x.path.rng != y.path.rng:
            return None
        return LagSet(x.length - y.length)
    if isinstance(x, Finite) or isinstance(y, Finite):
        return None
    c, d = x.cycle, y.cycle
    n = len(c)
    if len(d) != n:
        return None
    for j in range(n):
        if c.edges[j:] + c.edges[:j] == d.edges:
            k = len(x.prefix) + j - len(y.prefix)
            return LagSet(k % n, n)
    return None


@dataclass(frozen=True)
class GroupoidElement:
    x: BoundaryPath
    k: int
    y: BoundaryPath

    def __post_init__(self):
        lags = tail_equivalent(self.x, self.y)
        if lags is None or self.k not in lags:
            raise GraphError(f"{self.x} and {self.y} are not tail equivalent with lag {self.k}")

    def inverse(self) -> GroupoidElement:
        return GroupoidElement(self.y, -self.k, self.x)

    def is_unit(self) -> bool:
        return self.k == 0 and self.x == self.y

    def is_isotropy(self) -> bool:
        return self.x == self.y

    def __mul__(self, other: GroupoidElement) -> GroupoidElement:
        if self.y != other.x:
            raise GraphError("elements are not composable")
        return GroupoidElement(self.x, self.k + other.k, other.y)

    def __str__(self):
        return f"({self.x}, {self.k}, {self.y})"


def unit(x: BoundaryPath) -> GroupoidElement:
    return GroupoidElement(x, 0, x)


def isotropy_generator(p: BoundaryPath) -> Optional[GroupoidElement]:
    """Generator (p, |cycle|, p) of the isotropy group at a lasso; None if trivial."""
    if isinstance(p, Lasso):
        return GroupoidElement(p, p.period, p)
    return None


@dataclass(frozen=True)
class BisectionAtom:
    alpha: Path
    beta: Path
    F: frozenset = frozenset()

    def __post_init__(self):
        if self.alpha.rng != self.beta.rng:
            raise GraphError(f"r({self.alpha}) != r({self.beta})")
        object.__setattr__(self, "F", frozenset(self.F))

    @property
    def degree(self) -> int:
        return len(self.alpha) - len(self.beta)

    def is_unit_atom(self) -> bool:
        return self.alpha == self.beta

    def inverse(self) -> BisectionAtom:
        return BisectionAtom(self.beta, self.alpha, self.F)

    def __str__(self):
        if not self.F:
            return f"Z({self.alpha}|{self.beta})"
        return f"Z({self.alpha}|{self.beta}\\{{{','.join(sorted(self.F))}}})"


def atom(E: Graph, alpha: Path, beta: Path, F=()) -> BisectionAtom:
    """Validated constructor (edges of F must start at r(alpha))."""
    F = frozenset(F)
    for e in F:
        if E.source(e) != alpha.rng:
            raise GraphError(f"edge {e} does not start at {alpha.rng}")
    return BisectionAtom(alpha, beta, F)


def unit_atom(E: Graph, v: str, F=()) -> BisectionAtom:
    p = E.vertex(v)
    return atom(E, p, p, F)


def atom_is_empty(E: Graph, A: BisectionAtom) -> bool:
    v = A.alpha.rng
    return E.is_regular(v) and A.F == frozenset(E.out_edges(v))


def _nonempty(E: Graph, A: BisectionAtom) -> Optional[BisectionAtom]:
    return None if atom_is_empty(E, A) else A


def atom_sort_key(E: Graph, A: BisectionAtom) -> tuple:
    return (len(A.alpha), E.path_key(A.alpha), E.path_key(A.beta),
            tuple(sorted(E.edge_key(e) for e in A.F)))


def atom_canonical(E: Graph, A: BisectionAtom) -> BisectionAtom:
    """The shortest representation of the set A.

    Z(a e, b e) equals Z(a, b, s(e)E1 minus {e}) when s(e) is a CK2 vertex, so
    contracting shared final edges while F is empty reaches a unique form.
    """
    alpha, beta, F = A.alpha, A.beta, A.F
    while (not F and len(alpha) and len(beta) and alpha.last_edge() == beta.last_edge()
           and E.is_regular(E.source(alpha.last_edge()))):
        e = alpha.last_edge()
        alpha = alpha.slice(0, len(alpha) - 1)
        beta = beta.slice(0, len(beta) - 1)
        F = frozenset(E.out_edges(alpha.rng)) - {e}
    return BisectionAtom(alpha, beta, F)


def atom_equal(E: Graph, A: Optional[BisectionAtom], B: Optional[BisectionAtom]) -> bool:
    """Set equality of atoms (None is the empty set)."""
    if A is None or B is None:
        return (A is None or atom_is_empty(E, A)) and (B is None or atom_is_empty(E, B))
    return atom_canonical(E, A) == atom_canonical(E, B)


def atom_contains(A: BisectionAtom, g: GroupoidElement) -> bool:
    if g.k != A.degree:
        return False
    if not has_prefix(g.x, A.alpha) or not has_prefix(g.y, A.beta):
        return False
    tail = drop(g.x, len(A.alpha))
    if tail != drop(g.y, len(A.beta)):
        return False
    return tail.edge(0) is None or tail.edge(0) not in A.F


def atom_element_at_range(A: BisectionAtom, x: BoundaryPath) -> Optional[GroupoidElement]:
    """The unique element of the bisection A with codomain x, if any."""
    if not has_prefix(x, A.alpha):
        return None
    z = drop(x, len(A.alpha))
    if z.edge(0) is not None and z.edge(0) in A.F:
        return None
    return GroupoidElement(x, A.degree, prepend(A.beta, z))


def _split(p: Path, q: Path) -> Optional[Path]:
    """kappa with q = p kappa, or None."""
    if p.is_prefix_of(q):
        return q.tail(len(p))
    return None


def atom_mul(E: Graph, A: BisectionAtom, B: BisectionAtom) -> Optional[BisectionAtom]:
    """The set product AB of Z(alpha,beta,F) and Z(gamma,delta,H)."""
    alpha, beta, F = A.alpha, A.beta, A.F
    gamma, delta, H = B.alpha, B.beta, B.F
    if beta == gamma:
        return _nonempty(E, BisectionAtom(alpha, delta, F | H))
    kappa = _split(gamma, beta)
    if kappa is not None:
        if kappa.first_edge() in H:
            return None
        return _nonempty(E, BisectionAtom(alpha, delta + kappa, F))
    kappa = _split(beta, gamma)
    if kappa is not None:
        if kappa.first_edge() in F:
            return None
        return _nonempty(E, BisectionAtom(alpha + kappa, delta, H))
    return None


def atom_inverse(A: BisectionAtom) -> BisectionAtom:
    return A.inverse()


def atom_intersect(E: Graph, A: BisectionAtom, B: BisectionAtom) -> Optional[BisectionAtom]:
    alpha, beta, F = A.alpha, A.beta, A.F
    gamma, delta, H = B.alpha, B.beta, B.F
    if A.degree != B.degree:
        return None
    if alpha == gamma and beta == delta:
        return _nonempty(E, BisectionAtom(alpha, beta, F | H))
    kappa = _split(gamma, alpha)
    if kappa is not None and len(kappa) and _split(delta, beta) == kappa:
        return None if kappa.first_edge() in H else _nonempty(E, A)
    kappa = _split(alpha, gamma)
    if kappa is not None and len(kappa) and _split(beta, delta) == kappa:
        return None if kappa.first_edge() in F else _nonempty(E, B)
    return None


def atom_difference(E: Graph, A: BisectionAtom, B: BisectionAtom) -> list:
    """Pairwise disjoint nonempty atoms whose union is A minus B."""
    if atom_is_empty(E, A):
        return []
    C = atom_intersect(E, A, B)
    if C is None:
        return [A]
    alpha, beta, F = A.alpha, A.beta, A.F
    pieces = []
    if C.alpha == alpha and C.beta == beta:
        for e in C.F - F:
            pieces.append(BisectionAtom(alpha + E.edge_path(e), beta + E.edge_path(e)))
    else:
        kappa = C.alpha.tail(len(alpha))
        pieces.append(BisectionAtom(alpha, beta, F | {kappa.edges[0]}))
        for j in range(1, len(kappa)):
            k = kappa.head(j)
            pieces.append(BisectionAtom(alpha + k, beta + k, {kappa.edges[j]}))
        for e in C.F:
            k = kappa + E.edge_path(e)
            pieces.append(BisectionAtom(alpha + k, beta + k))
    pieces = [P for P in pieces if not atom_is_empty(E, P)]
    pieces.sort(key=lambda P: atom_sort_key(E, P))
    return pieces


def effectiveness_witness(E: Graph) -> Optional[BisectionAtom]:
    """None if the groupoid is effective, else Z(cc, c) for an exitless cycle c.

    Only exitless cycles through CK2 vertices are obstructions: a cycle that
    passes a declared-singular vertex is approximated by finite boundary
    paths ending there, which have trivial isotropy.
    """
    for c in exitless_cycles(E):
        if all(E.is_regular(v) for v in c.verts):
            return BisectionAtom(c + c, c)
    return None


def atom_elements(E: Graph, A: BisectionAtom, depth: int) -> list:
    """Sampled members (alpha z, k, beta z) of A for boundary paths z from r(alpha)."""
    out = []
    for z in sample_boundary_paths(E, depth, source=A.alpha.rng):
        if z.edge(0) is not None and z.edge(0) in A.F:
            continue
        out.append(GroupoidElement(prepend(A.alpha, z), A.degree, prepend(A.beta, z)))
    return out


def sample_elements(E: Graph, depth: int, radius: int = 1) -> list:
    """Groupoid elements (x, k, y) over sampled boundary paths x, y."""
    pts = sample_boundary_paths(E, depth)
    out = []
    for x in pts:
        for y in pts:
            lags = tail_equivalent(x, y)
            if lags is None:
                continue
            for k in lags.lags(radius):
                out.append(GroupoidElement(x, k, y))
    return out


def element_key(E: Graph, g: GroupoidElement) -> tuple:
    return (bpath_key(E, g.x), g.k, bpath_key(E, g.y))
