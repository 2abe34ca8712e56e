"""Finite directed graphs with a designated set of CK2 vertices, and their paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    """A finite path, stored as its vertex sequence and edge sequence.

    ``verts`` has one more entry than ``edges``; a length-0 path is a vertex.
    Carrying the vertices makes slicing and concatenation graph-free.
    """

    verts: tuple
    edges: tuple = ()

    @property
    def src(self) -> str:
        return self.verts[0]

    @property
    def rng(self) -> str:
        return self.verts[-1]

    def __len__(self):
        return len(self.edges)

    def is_vertex(self) -> bool:
        return not self.edges

    def __add__(self, other: Path) -> Path:
        if self.rng != other.src:
            raise GraphError(f"cannot concatenate {self} and {other}: {self.rng} != {other.src}")
        return Path(self.verts + other.verts[1:], self.edges + other.edges)

    def slice(self, i: int, j: Optional[int] = None) -> Path:
        """Subpath made of edges i..j-1 (a vertex when i == j)."""
        if j is None:
            j = len(self.edges)
        return Path(self.verts[i:j + 1], self.edges[i:j])

    def head(self, n: int) -> Path:
        return self.slice(0, n)

    def tail(self, n: int) -> Path:
        """Drop the first n edges."""
        return self.slice(n)

    def is_prefix_of(self, other: Path) -> bool:
        n = len(self.edges)
        return (self.src == other.src and len(other.edges) >= n
                and other.edges[:n] == self.edges)

    def first_edge(self) -> Optional[str]:
        return self.edges[0] if self.edges else None

    def last_edge(self) -> Optional[str]:
        return self.edges[-1] if self.edges else None

    def __str__(self):
        return ",".join(self.edges) if self.edges else self.verts[0]

    def __repr__(self):
        return f"Path({self})"


class Graph:
    """E = (E0, E1, r, s) together with the vertices where CK2 is imposed.

    ``ck2`` defaults to every vertex that emits an edge, which gives the
    Leavitt path algebra of the finite graph. Removing a vertex from ``ck2``
    declares it singular (a sink, or a truncated infinite emitter).
    """

    def __init__(self, vertices: Sequence[str], edges: Sequence[tuple],
                 ck2: Optional[Iterable[str]] = None):
        self.vertices = tuple(vertices)
        self.edges = tuple(e for e, _, _ in edges)
        names = list(self.vertices) + list(self.edges)
        if len(set(names)) != len(names):
            seen, dup = set(), None
            for n in names:
                if n in seen:
                    dup = n
                    break
                seen.add(n)
            raise GraphError(f"duplicate name {dup!r}")
        vset = set(self.vertices)
        self._src = {}
        self._rng = {}
        for e, s, r in edges:
            if s not in vset or r not in vset:
                raise GraphError(f"edge {e} has unknown endpoint")
            self._src[e] = s
            self._rng[e] = r
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for e in self.edges:
            self._out[self._src[e]].append(e)
            self._in[self._rng[e]].append(e)
        self._out = {v: tuple(es) for v, es in self._out.items()}
        self._in = {v: tuple(es) for v, es in self._in.items()}
        if ck2 is None:
            ck2 = [v for v in self.vertices if self._out[v]]
        ck2 = frozenset(ck2)
        for v in ck2:
            if v not in vset:
                raise GraphError(f"unknown vertex {v!r} in ck2 set")
            if not self._out[v]:
                raise GraphError(f"vertex {v} emits no edges and cannot satisfy CK2")
        self.ck2 = ck2
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}

    # -- basic accessors

    def source(self, e: str) -> str:
        return self._src[e]

    def range(self, e: str) -> str:
        return self._rng[e]

    def out_edges(self, v: str) -> tuple:
        return self._out[v]

    def in_edges(self, v: str) -> tuple:
        return self._in[v]

    def is_vertex(self, name: str) -> bool:
        return name in self._vertex_index

    def is_edge(self, name: str) -> bool:
        return name in self._edge_index

    def is_regular(self, v: str) -> bool:
        return v in self.ck2

    def is_sink(self, v: str) -> bool:
        return not self._out[v]

    def edge_key(self, e: str) -> int:
        return self._edge_index[e]

    def vertex_key(self, v: str) -> int:
        return self._vertex_index[v]

    def path_key(self, p: Path) -> tuple:
        """Order paths by (length, edge sequence in edge order, source vertex)."""
        return (len(p), tuple(self._edge_index[e] for e in p.edges), self._vertex_index[p.src])

    def has_default_ck2(self) -> bool:
        return self.ck2 == frozenset(v for v in self.vertices if self._out[v])

    def special_edge(self, v: str) -> Optional[str]:
        """The first edge emitted by a CK2 vertex; None elsewhere."""
        return self._out[v][0] if v in self.ck2 else None

    # -- paths

    def vertex(self, v: str) -> Path:
        if v not in self._vertex_index:
            raise GraphError(f"unknown vertex {v!r}")
        return Path((v,))

    def path(self, edges: Iterable[str]) -> Path:
        edges = tuple(edges)
        if not edges:
            raise GraphError("use vertex() for length-0 paths")
        verts = []
        for i, e in enumerate(edges):
            if e not in self._edge_index:
                raise GraphError(f"unknown edge {e!r}")
            if i == 0:
                verts.append(self._src[e])
            elif self._src[e] != verts[-1]:
                raise GraphError(f"edges {edges[i - 1]} and {e} are not composable")
            verts.append(self._rng[e])
        return Path(tuple(verts), edges)

    def edge_path(self, e: str) -> Path:
        return Path((self._src[e], self._rng[e]), (e,))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices == other.vertices and self.ck2 == other.ck2
                and [(e, self._src[e], self._rng[e]) for e in self.edges]
                == [(e, other._src[e], other._rng[e]) for e in other.edges])

    def __hash__(self):
        return hash((self.vertices, self.edges, self.ck2))

    def edge_triples(self) -> list:
        return [(e, self._src[e], self._rng[e]) for e in self.edges]

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def singular_vertices(E: Graph) -> set:
    return {v for v in E.vertices if v not in E.ck2}


def sinks(E: Graph) -> list:
    return [v for v in E.vertices if E.is_sink(v)]


def _shortest_cycle_from(E: Graph, v: str) -> Optional[Path]:
    # BFS over edges; the first edge returning to v closes a shortest cycle at v
    parent = {v: None}
    queue = deque([v])
    while queue:
        w = queue.popleft()
        for e in E.out_edges(w):
            r = E.range(e)
            if r == v:
                edges = [e]
                x = w
                while parent[x] is not None:
                    edges.append(parent[x])
                    x = E.source(parent[x])
                return E.path(reversed(edges))
            if r not in parent:
                parent[r] = e
                queue.append(r)
    return None


def shortest_cycle(E: Graph) -> Optional[Path]:
    best = None
    for v in E.vertices:
        c = _shortest_cycle_from(E, v)
        if c is not None and (best is None or E.path_key(c) < E.path_key(best)):
            best = c
    return best


def is_acyclic(E: Graph) -> tuple:
    """Return ``(True, None)`` or ``(False, witness)`` with a shortest cycle."""
    c = shortest_cycle(E)
    return (c is None, c)


def exitless_cycles(E: Graph) -> list:
    """All cycles without an exit, each rotated to start at its earliest vertex.

    A cycle has no exit exactly when every vertex on it emits a single edge,
    so these cycles live in the functional subgraph of out-degree-1 vertices.
    """
    nxt = {v: E.out_edges(v)[0] for v in E.vertices if len(E.out_edges(v)) == 1}
    found = []
    seen = set()
    for v in E.vertices:
        if v not in nxt or v in seen:
            continue
        order = []
        pos = {}
        w = v
        while w in nxt and w not in pos and w not in seen:
            pos[w] = len(order)
            order.append(w)
            w = E.range(nxt[w])
        if w in pos:
            loop = order[pos[w]:]
            start = min(loop, key=E.vertex_key)
            i = loop.index(start)
            loop = loop[i:] + loop[:i]
            found.append(E.path(nxt[x] for x in loop))
        seen.update(order)
    return found


def condition_L(E: Graph) -> tuple:
    """Return ``(True, None)`` if every cycle has an exit, else ``(False, cycle)``."""
    cycles = exitless_cycles(E)
    if cycles:
        return (False, cycles[0])
    return (True, None)


def disjoint_union(E: Graph, F: Graph, prefixes=("L.", "R.")) -> Graph:
    pl, pr = prefixes
    vertices = [pl + v for v in E.vertices] + [pr + v for v in F.vertices]
    edges = ([(pl + e, pl + s, pl + r) for e, s, r in E.edge_triples()]
             + [(pr + e, pr + s, pr + r) for e, s, r in F.edge_triples()])
    ck2 = [pl + v for v in E.ck2] + [pr + v for v in F.ck2]
    return Graph(vertices, edges, ck2)


def paths_into(E: Graph, v: str, max_len: Optional[int] = None) -> list:
    """All paths with range v (v itself included), up to ``max_len`` edges.

    Unbounded enumeration is only allowed on acyclic graphs. Output is sorted
    by length, then edge sequence in graph edge order.
    """
    if max_len is None:
        ok, c = is_acyclic(E)
        if not ok:
            raise GraphError(f"unbounded enumeration on cyclic graph (cycle {c})")
        max_len = len(E.vertices)
    layer = [E.vertex(v)]
    out = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for e in E.in_edges(p.src):
                nxt.append(E.edge_path(e) + p)
        if not nxt:
            break
        out.extend(nxt)
        layer = nxt
    out.sort(key=E.path_key)
    return out


def paths_from(E: Graph, v: str, max_len: int) -> list:
    """All paths with source v of length at most ``max_len``."""
    layer = [E.vertex(v)]
    out = list(layer)
    for _ in range(max_len):
        nxt = [p + E.edge_path(e) for p in layer for e in E.out_edges(p.rng)]
        if not nxt:
            break
        out.extend(nxt)
        layer = nxt
    out.sort(key=E.path_key)
    return out


def all_paths(E: Graph, max_len: int) -> list:
    out = []
    for v in E.vertices:
        out.extend(paths_from(E, v, max_len))
    out.sort(key=E.path_key)
    return out


# -- named example graphs

def line_graph(n: int) -> Graph:
    """A_n: v1 -e1-> v2 -> ... -> vn."""
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
    return Graph(vertices, edges)


def rose(n: int) -> Graph:
    """R_n: n loops at a single vertex v (e, f for n <= 2, else e1..en)."""
    names = ["e", "f"] if n == 2 else (["e"] if n == 1 else [f"e{i}" for i in range(1, n + 1)])
    return Graph(["v"], [(x, "v", "v") for x in names])


def toeplitz() -> Graph:
    """T: loop e at u and an edge f from u to the sink v."""
    return Graph(["u", "v"], [("e", "u", "u"), ("f", "u", "v")])
