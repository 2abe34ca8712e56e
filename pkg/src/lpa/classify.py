"""Finite-dimensional Leavitt path algebras as direct sums of matrix algebras.

For a finite acyclic graph with sinks v_1, ..., v_t, L_R(E) is the direct sum
of the matrix algebras M_{n(v_i)}(R), where n(v) counts the paths ending at v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, is_acyclic, paths_into, sinks
from .leavitt import LeavittElement, Monomial
from .scalars import Ring, RingMismatch


class ClassificationError(ValueError):
    pass


class MatrixAlgebraElement:
    """An element of M_{n_1}(R) + ... + M_{n_t}(R), stored block by block."""

    __slots__ = ("ring", "blocks")

    def __init__(self, ring: Ring, blocks: Sequence):
        blocks = tuple(tuple(tuple(ring(a) for a in row) for row in B) for B in blocks)
        for B in blocks:
            if any(len(row) != len(B) for row in B):
                raise ValueError("blocks must be square")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixAlgebraElement is immutable")

    @classmethod
    def zero(cls, ring: Ring, sizes: Sequence[int]):
        return cls(ring, [[[0] * n for _ in range(n)] for n in sizes])

    @classmethod
    def identity(cls, ring: Ring, sizes: Sequence[int]):
        return cls(ring, [[[int(i == j) for j in range(n)] for i in range(n)] for n in sizes])

    @classmethod
    def unit(cls, ring: Ring, sizes: Sequence[int], block: int, i: int, j: int, coeff=1):
        """coeff * E_{i,j} (0-based) in the given block."""
        data = [[[0] * n for _ in range(n)] for n in sizes]
        data[block][i][j] = coeff
        return cls(ring, data)

    @property
    def sizes(self) -> tuple:
        return tuple(len(B) for B in self.blocks)

    def _check(self, other):
        if not isinstance(other, MatrixAlgebraElement):
            raise TypeError(f"expected a MatrixAlgebraElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine {self.ring} and {other.ring}")
        if other.sizes != self.sizes:
            raise ValueError(f"block sizes differ: {self.sizes} vs {other.sizes}")

    def __add__(self, other):
        self._check(other)
        return MatrixAlgebraElement(self.ring, [
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(B1, B2)]
            for B1, B2 in zip(self.blocks, other.blocks)])

    def __neg__(self):
        return MatrixAlgebraElement(self.ring, [[[-a for a in row] for row in B] for B in self.blocks])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MatrixAlgebraElement):
            r = self.ring(other)
            return MatrixAlgebraElement(self.ring, [[[r * a for a in row] for row in B]
                                                    for B in self.blocks])
        self._check(other)
        zero = self.ring.zero()
        out = []
        for A, B in zip(self.blocks, other.blocks):
            # sparse row-by-row product; images of monomials are mostly zero
            Bnz = [[(j, b) for j, b in enumerate(row) if not b.is_zero()] for row in B]
            C = []
            for row in A:
                acc = [zero] * len(A)
                for k, a in enumerate(row):
                    if a.is_zero():
                        continue
                    for j, b in Bnz[k]:
                        acc[j] = acc[j] + a * b
                C.append(acc)
            out.append(C)
        return MatrixAlgebraElement(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def is_zero(self) -> bool:
        return all(a.is_zero() for B in self.blocks for row in B for a in row)

    def __eq__(self, other):
        if not isinstance(other, MatrixAlgebraElement):
            return NotImplemented
        return self.ring == other.ring and self.blocks == other.blocks

    __hash__ = None

    def degree(self) -> Optional[int]:
        """j - i shared by all nonzero entries E_{i,j}; 0 for the zero element."""
        degs = {j - i for B in self.blocks for i, row in enumerate(B)
                for j, a in enumerate(row) if not a.is_zero()}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        parts = []
        for B in self.blocks:
            parts.append("[" + "; ".join(" ".join(str(a) for a in row) for row in B) + "]")
        return " (+) ".join(parts)

    def __repr__(self):
        return f"MatrixAlgebraElement({self})"


def matrix_degree(x: MatrixAlgebraElement) -> Optional[int]:
    return x.degree()


@dataclass(frozen=True)
class Classification:
    sinks: tuple
    counts: tuple
    ring: Ring

    @property
    def dimension(self) -> int:
        return sum(n * n for n in self.counts)

    def render(self) -> str:
        blocks = " (+) ".join(f"M_{n}({self.ring})" for n in self.counts)
        return f"{blocks or '0'}, dim {self.dimension}"

    def __str__(self):
        return self.render()


def _require_finite_dimensional(E: Graph):
    ok, witness = is_acyclic(E)
    if not ok:
        raise ClassificationError(f"not acyclic (witness cycle {witness})")
    if not E.has_default_ck2():
        raise ClassificationError("non-default ck2 set")


def classify(E: Graph, ring: Ring) -> Classification:
    _require_finite_dimensional(E)
    sk = tuple(sinks(E))
    counts = tuple(len(paths_into(E, v)) for v in sk)
    return Classification(sk, counts, ring)


def expand_to_sinks(x: LeavittElement) -> LeavittElement:
    """Apply CK2 until every monomial has a sink as its range."""
    E = x.graph
    out = []
    work = list(x.terms)
    while work:
        c, m = work.pop()
        v = m.mu.rng
        if E.is_sink(v):
            out.append((c, m))
            continue
        for e in E.out_edges(v):
            ep = E.edge_path(e)
            work.append((c, Monomial(m.mu + ep, m.nu + ep)))
    return LeavittElement(E, x.ring, out)


def explicit_iso(E: Graph, x: LeavittElement) -> MatrixAlgebraElement:
    """The isomorphism onto the direct sum of matrix algebras: mu nu* -> E_{mu, nu}."""
    _require_finite_dimensional(E)
    sk = sinks(E)
    index = {}
    sizes = []
    for b, v in enumerate(sk):
        ps = paths_into(E, v)
        sizes.append(len(ps))
        for i, p in enumerate(ps):
            index[p] = (b, i)
    data = [[[x.ring.zero()] * n for _ in range(n)] for n in sizes]
    for c, m in expand_to_sinks(x).terms:
        b, i = index[m.mu]
        _, j = index[m.nu]
        data[b][i][j] = data[b][i][j] + c
    return MatrixAlgebraElement(x.ring, data)


def line_graph_family(n: int, ring: Ring) -> dict:
    """The matrix-unit Leavitt family of A_n in M_n(R): v_i -> E_ii, e_j -> E_{j,j+1}, e_j* -> E_{j+1,j}."""
    sizes = [n]
    images = {}
    for i in range(1, n + 1):
        images[f"v{i}"] = MatrixAlgebraElement.unit(ring, sizes, 0, i - 1, i - 1)
    for j in range(1, n):
        images[f"e{j}"] = MatrixAlgebraElement.unit(ring, sizes, 0, j - 1, j)
        images[f"e{j}*"] = MatrixAlgebraElement.unit(ring, sizes, 0, j, j - 1)
    return images
