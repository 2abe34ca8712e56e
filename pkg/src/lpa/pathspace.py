"""Boundary paths and the Boolean algebra of cylinder sets Z(alpha, F).

Infinite boundary paths are represented only when eventually periodic, as
lassos ``prefix cycle cycle ...`` in a canonical form, so equality of
boundary paths is equality of dataclasses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, GraphError, Path, paths_from


@dataclass(frozen=True)
class Finite:
    """A finite boundary path (its range is not a CK2 vertex)."""

    path: Path

    @property
    def src(self) -> str:
        return self.path.src

    @property
    def length(self) -> int:
        return len(self.path)

    def edge(self, i: int) -> Optional[str]:
        return self.path.edges[i] if i < len(self.path) else None

    def __str__(self):
        return str(self.path)


def _primitive_root(cycle: Path) -> Path:
    n = len(cycle)
    for d in range(1, n):
        if n % d == 0 and cycle.edges == cycle.edges[:d] * (n // d):
            return cycle.slice(0, d)
    return cycle


@dataclass(frozen=True)
class Lasso:
    """The infinite path ``prefix cycle cycle ...``.

    Construction canonicalizes: the cycle is replaced by its primitive root,
    then trailing prefix edges that agree with the end of the cycle are
    rolled into it by rotating the cycle right.
    """

    prefix: Path
    cycle: Path

    def __post_init__(self):
        prefix, cycle = self.prefix, self.cycle
        if len(cycle) == 0 or cycle.src != cycle.rng:
            raise GraphError(f"lasso cycle {cycle} is not a closed path")
        if prefix.rng != cycle.src:
            raise GraphError(f"lasso prefix {prefix} does not end where {cycle} starts")
        cycle = _primitive_root(cycle)
        n = len(cycle)
        while len(prefix) and prefix.last_edge() == cycle.last_edge():
            cycle = cycle.slice(n - 1) + cycle.slice(0, n - 1)
            prefix = prefix.slice(0, len(prefix) - 1)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    @property
    def src(self) -> str:
        return self.prefix.src

    @property
    def length(self) -> None:
        return None

    @property
    def period(self) -> int:
        return len(self.cycle)

    def edge(self, i: int) -> str:
        p = len(self.prefix)
        if i < p:
            return self.prefix.edges[i]
        return self.cycle.edges[(i - p) % len(self.cycle)]

    def __str__(self):
        head = ",".join(self.prefix.edges)
        return f"{head};({','.join(self.cycle.edges)})"


BoundaryPath = Union[Finite, Lasso]


def boundary_finite(E: Graph, path: Path) -> Finite:
    if E.is_regular(path.rng):
        raise GraphError(f"{path} ends at the regular vertex {path.rng}, not a boundary path")
    return Finite(path)


def edges_upto(x: BoundaryPath, n: int) -> tuple:
    """The first n edges of x (fewer if x is a shorter finite path)."""
    if isinstance(x, Finite):
        return x.path.edges[:n]
    return tuple(x.edge(i) for i in range(n))


def has_prefix(x: BoundaryPath, alpha: Path) -> bool:
    if x.src != alpha.src:
        return False
    n = len(alpha)
    if isinstance(x, Finite) and x.length < n:
        return False
    return edges_upto(x, n) == alpha.edges


def drop(x: BoundaryPath, n: int) -> BoundaryPath:
    """sigma^n(x)."""
    if n == 0:
        return x
    if isinstance(x, Finite):
        if n > x.length:
            raise GraphError(f"cannot shift {x} by {n}")
        return Finite(x.path.tail(n))
    p = len(x.prefix)
    if n <= p:
        return Lasso(x.prefix.tail(n), x.cycle)
    k = (n - p) % len(x.cycle)
    c = x.cycle
    rotated = c.slice(k) + c.slice(0, k) if k else c
    return Lasso(Path((rotated.src,)), rotated)


def shift(x: BoundaryPath) -> BoundaryPath:
    """The one-sided shift: remove the first edge."""
    if isinstance(x, Finite) and x.length == 0:
        raise GraphError("shift of a vertex")
    return drop(x, 1)


def prepend(alpha: Path, x: BoundaryPath) -> BoundaryPath:
    """The boundary path alpha x (requires r(alpha) = s(x))."""
    if isinstance(x, Finite):
        return Finite(alpha + x.path)
    return Lasso(alpha + x.prefix, x.cycle)


def bpath_eq(x: BoundaryPath, y: BoundaryPath) -> bool:
    return x == y


def expand(x: BoundaryPath, n: int) -> tuple:
    """First n edges (for oracle comparisons); finite paths are not padded."""
    return edges_upto(x, n)


@dataclass(frozen=True)
class CylinderAtom:
    """Z(alpha, F): boundary paths extending alpha whose next edge avoids F."""

    alpha: Path
    F: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "F", frozenset(self.F))

    def __str__(self):
        if not self.F:
            return f"Z({self.alpha})"
        return f"Z({self.alpha}\\{{{','.join(sorted(self.F))}}})"


def cylinder(E: Graph, alpha: Path, F=()) -> CylinderAtom:
    F = frozenset(F)
    for e in F:
        if E.source(e) != alpha.rng:
            raise GraphError(f"edge {e} does not start at r({alpha}) = {alpha.rng}")
    return CylinderAtom(alpha, F)


def cyl_contains(Z: CylinderAtom, x: BoundaryPath) -> bool:
    if not has_prefix(x, Z.alpha):
        return False
    nxt = x.edge(len(Z.alpha))
    return nxt is None or nxt not in Z.F


def cyl_is_empty(E: Graph, Z: CylinderAtom) -> bool:
    v = Z.alpha.rng
    return E.is_regular(v) and Z.F == frozenset(E.out_edges(v))


def cyl_intersect(E: Graph, Z1: CylinderAtom, Z2: CylinderAtom) -> Optional[CylinderAtom]:
    """Intersection of two cylinder atoms; None when empty."""
    if len(Z1.alpha) > len(Z2.alpha):
        Z1, Z2 = Z2, Z1
    a, b = Z1.alpha, Z2.alpha
    if a == b:
        out = CylinderAtom(a, Z1.F | Z2.F)
    elif a.is_prefix_of(b) and b.edges[len(a)] not in Z1.F:
        out = Z2
    else:
        return None
    return None if cyl_is_empty(E, out) else out


def bpath_key(E: Graph, x: BoundaryPath) -> tuple:
    if isinstance(x, Finite):
        return (0, E.path_key(x.path))
    return (1, len(x.prefix) + len(x.cycle), E.path_key(x.prefix), E.path_key(x.cycle))


def sample_boundary_paths(E: Graph, depth: int, source: Optional[str] = None) -> list:
    """Every finite boundary path of length <= depth and every canonical lasso
    with |prefix| + |cycle| <= depth, optionally restricted to one source."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    starts = E.vertices if source is None else (source,)
    found = set()
    for v in starts:
        for p in paths_from(E, v, depth):
            if not E.is_regular(p.rng):
                found.add(Finite(p))
            budget = depth - len(p)
            if budget >= 1:
                for c in paths_from(E, p.rng, budget):
                    if len(c) and c.rng == c.src:
                        found.add(Lasso(p, c))
    return sorted(found, key=lambda x: bpath_key(E, x))
