"""The Leavitt path algebra L_R(E) and its isomorphism with the Steinberg algebra.

Elements are linear combinations of monomials mu nu* with r(mu) = r(nu).
Products use the monomial rule only; the CK2 relation enters through two
independent zero tests that must agree:

* transport through pi into the Steinberg algebra and normalize there;
* rewrite gamma gamma* = w - sum of the other e e* for the special (first)
  edge gamma at each CK2 vertex w, which leaves a linearly independent set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from .graph import Graph, GraphError, Path, all_paths, condition_L
from .groupoid import BisectionAtom
from .scalars import Ring, RingMismatch, Scalar
from .steinberg import SteinbergElement, st_normalize


class InconsistencyError(AssertionError):
    """The two zero tests disagreed; this is a bug, not a user error."""


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    """mu nu* with r(mu) = r(nu)."""

    mu: Path
    nu: Path

    def __post_init__(self):
        if self.mu.rng != self.nu.rng:
            raise GraphError(f"monomial {self.mu} ({self.nu})* has mismatched ranges")

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    def star(self) -> Monomial:
        return Monomial(self.nu, self.mu)

    def __str__(self):
        return render_monomial(self)


def render_monomial(m: Monomial) -> str:
    parts = list(m.mu.edges) + [e + "*" for e in reversed(m.nu.edges)]
    if not parts:
        return m.mu.src
    return " ".join(parts)


def monomial_key(E: Graph, m: Monomial) -> tuple:
    return (m.degree, len(m.mu) + len(m.nu), E.path_key(m.mu), E.path_key(m.nu))


def monomial_mul(m: Monomial, n: Monomial) -> Optional[Monomial]:
    """(mu nu*)(gamma lambda*) by the monomial product rule; None for zero."""
    mu, nu, gamma, lam = m.mu, m.nu, n.mu, n.nu
    if gamma.is_prefix_of(nu):
        kappa = nu.tail(len(gamma))
        return Monomial(mu, lam + kappa)
    if nu.is_prefix_of(gamma):
        kappa = gamma.tail(len(nu))
        return Monomial(mu + kappa, lam)
    return None


class LeavittElement:
    """An immutable element sum c_i mu_i nu_i* of L_R(E)."""

    __slots__ = ("graph", "ring", "terms")

    def __init__(self, graph: Graph, ring: Ring, terms: Iterable = ()):
        acc = {}
        for c, m in terms:
            c = ring(c)
            acc[m] = acc[m] + c if m in acc else c
        ordered = sorted(((c, m) for m, c in acc.items() if not c.is_zero()),
                         key=lambda t: monomial_key(graph, t[1]))
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("LeavittElement is immutable")

    @classmethod
    def zero(cls, graph: Graph, ring: Ring) -> LeavittElement:
        return cls(graph, ring)

    @classmethod
    def monomial(cls, graph: Graph, ring: Ring, mu: Path, nu: Path, coeff=1) -> LeavittElement:
        return cls(graph, ring, [(coeff, Monomial(mu, nu))])

    @classmethod
    def vertex(cls, graph: Graph, ring: Ring, v: str) -> LeavittElement:
        p = graph.vertex(v)
        return cls.monomial(graph, ring, p, p)

    @classmethod
    def edge(cls, graph: Graph, ring: Ring, e: str) -> LeavittElement:
        return cls.monomial(graph, ring, graph.edge_path(e), graph.vertex(graph.range(e)))

    @classmethod
    def ghost(cls, graph: Graph, ring: Ring, e: str) -> LeavittElement:
        return cls.monomial(graph, ring, graph.vertex(graph.range(e)), graph.edge_path(e))

    @classmethod
    def path(cls, graph: Graph, ring: Ring, p: Path) -> LeavittElement:
        return cls.monomial(graph, ring, p, graph.vertex(p.rng))

    @classmethod
    def ghost_path(cls, graph: Graph, ring: Ring, p: Path) -> LeavittElement:
        return cls.monomial(graph, ring, graph.vertex(p.rng), p)

    @classmethod
    def one(cls, graph: Graph, ring: Ring) -> LeavittElement:
        """sum of all vertices (the unit, as E0 is finite)."""
        return cls(graph, ring, [(1, Monomial(graph.vertex(v), graph.vertex(v)))
                                 for v in graph.vertices])

    def _check(self, other):
        if not isinstance(other, LeavittElement):
            raise TypeError(f"expected a LeavittElement, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine {self.ring} and {other.ring}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("elements live over different graphs")

    def __add__(self, other):
        self._check(other)
        return LeavittElement(self.graph, self.ring, self.terms + other.terms)

    def __sub__(self, other):
        self._check(other)
        return LeavittElement(self.graph, self.ring,
                              self.terms + tuple((-c, m) for c, m in other.terms))

    def __neg__(self):
        return LeavittElement(self.graph, self.ring, [(-c, m) for c, m in self.terms])

    def __mul__(self, other):
        if isinstance(other, LeavittElement):
            return lpa_mul(self, other)
        r = self.ring(other)
        return LeavittElement(self.graph, self.ring, [(r * c, m) for c, m in self.terms])

    def __rmul__(self, other):
        r = self.ring(other)
        return LeavittElement(self.graph, self.ring, [(r * c, m) for c, m in self.terms])

    def star(self) -> LeavittElement:
        return lpa_involution(self)

    def is_zero(self) -> bool:
        return lpa_is_zero(self)

    def is_syntactically_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LeavittElement):
            return NotImplemented
        return lpa_is_zero(self - other)

    __hash__ = None

    def degrees(self) -> set:
        return {m.degree for _, m in self.terms}

    def __str__(self):
        return render_leavitt(self)

    def __repr__(self):
        return f"LeavittElement({self})"


def render_leavitt(x: LeavittElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, (c, m) in enumerate(x.terms):
        body = render_monomial(m)
        negative = x.ring.kind != "mod" and c.value < 0
        mag = -c if negative else c
        text = body if mag.is_one() else f"{mag} {body}"
        if i == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f"{'-' if negative else '+'} {text}")
    return " ".join(out)


def lpa_mul(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    x._check(y)
    terms = []
    for c, m in x.terms:
        for d, n in y.terms:
            p = monomial_mul(m, n)
            if p is not None:
                terms.append((c * d, p))
    return LeavittElement(x.graph, x.ring, terms)


def _reducible(E: Graph, m: Monomial) -> Optional[str]:
    e = m.mu.last_edge()
    if e is None or e != m.nu.last_edge():
        return None
    return e if E.special_edge(E.source(e)) == e else None


def lpa_normal_form(x: LeavittElement) -> LeavittElement:
    """Rewrite every mu' g g* nu'* (g special) to mu' nu'* - sum_{e != g} mu' e e* nu'*."""
    E = x.graph
    acc = {}
    work = list(x.terms)
    while work:
        c, m = work.pop()
        e = _reducible(E, m)
        if e is None:
            acc[m] = acc[m] + c if m in acc else c
            continue
        mu = m.mu.slice(0, len(m.mu) - 1)
        nu = m.nu.slice(0, len(m.nu) - 1)
        work.append((c, Monomial(mu, nu)))
        for f in E.out_edges(mu.rng):
            if f != e:
                fp = E.edge_path(f)
                work.append((-c, Monomial(mu + fp, nu + fp)))
    return LeavittElement(E, x.ring, [(c, m) for m, c in acc.items()])


def pi_to_steinberg(x: LeavittElement) -> SteinbergElement:
    """The graded isomorphism on monomials: mu nu* -> 1_{Z(mu|nu)}."""
    terms = [(c, BisectionAtom(m.mu, m.nu)) for c, m in x.terms]
    return st_normalize(SteinbergElement(x.graph, x.ring, terms))


def pi_from_steinberg(f: SteinbergElement) -> LeavittElement:
    """1_{Z(mu|nu minus F)} -> mu nu* - sum_{e in F} mu e e* nu*."""
    E = f.graph
    terms = []
    for c, A in f.terms:
        terms.append((c, Monomial(A.alpha, A.beta)))
        for e in A.F:
            ep = E.edge_path(e)
            terms.append((-c, Monomial(A.alpha + ep, A.beta + ep)))
    return LeavittElement(E, f.ring, terms)


def lpa_is_zero(x: LeavittElement) -> bool:
    via_pi = not pi_to_steinberg(x).terms
    via_rewriting = not lpa_normal_form(x).terms
    if via_pi != via_rewriting:
        raise InconsistencyError(
            f"zero tests disagree on {x}: pi says {via_pi}, normal form says {via_rewriting}")
    return via_pi


def lpa_involution(x: LeavittElement) -> LeavittElement:
    conj = x.ring.conjugate
    return LeavittElement(x.graph, x.ring, [(conj(c), m.star()) for c, m in x.terms])


def lpa_degree_component(x: LeavittElement, n: int) -> LeavittElement:
    return LeavittElement(x.graph, x.ring, [(c, m) for c, m in x.terms if m.degree == n])


def lpa_reduce_degree_zero(x: LeavittElement) -> tuple:
    """Find (alpha, beta, s) with s != 0 and alpha* x beta = s r(alpha).

    Follows the induction on the length of the degree-zero monomials: a
    combination of vertices is cut down by its first vertex; a sink vertex
    term v gives v x v = s v; a singular vertex with an edge e not starting
    any alpha_i gives e* x e = s r(e); otherwise every vertex term is
    expanded by CK2 and a nonzero block e* x f of shorter monomials is
    treated recursively.
    """
    E = x.graph
    if x.degrees() - {0}:
        raise ReductionError("degree nonzero")
    if lpa_is_zero(x):
        raise ReductionError("zero input")
    prefix_a = prefix_b = None
    while True:
        vertex_terms = [(c, m) for c, m in x.terms if m.mu.is_vertex()]
        path_terms = [(c, m) for c, m in x.terms if not m.mu.is_vertex()]
        if not path_terms:
            s, m = vertex_terms[0]
            return _finish(prefix_a, prefix_b, m.mu, m.mu, s)
        done = None
        for s, m in vertex_terms:
            v = m.mu.src
            if E.is_sink(v):
                done = (m.mu, m.mu, s)
                break
        if done is None:
            starts = {m.mu.first_edge() for _, m in path_terms}
            for s, m in vertex_terms:
                v = m.mu.src
                if E.is_regular(v):
                    continue
                spare = [e for e in E.out_edges(v) if e not in starts]
                if not spare:
                    raise ReductionError(f"insufficient truncation at singular vertex {v}")
                ep = E.edge_path(spare[0])
                done = (ep, ep, s)
                break
        if done is not None:
            a, b, s = done
            return _finish(prefix_a, prefix_b, a, b, s)
        # every vertex term is regular: expand by CK2 and split into blocks e(...)f*
        expanded = list(path_terms)
        for c, m in vertex_terms:
            for e in E.out_edges(m.mu.src):
                ep = E.edge_path(e)
                expanded.append((c, Monomial(ep, ep)))
        blocks = {}
        for c, m in expanded:
            key = (m.mu.first_edge(), m.nu.first_edge())
            blocks.setdefault(key, []).append((c, Monomial(m.mu.tail(1), m.nu.tail(1))))
        for (e, f) in sorted(blocks, key=lambda k: (E.edge_key(k[0]), E.edge_key(k[1]))):
            block = LeavittElement(E, x.ring, blocks[(e, f)])
            if block.terms and not lpa_is_zero(block):
                break
        else:
            raise InconsistencyError(f"nonzero {x} has only zero blocks")
        prefix_a = E.edge_path(e) if prefix_a is None else prefix_a + E.edge_path(e)
        prefix_b = E.edge_path(f) if prefix_b is None else prefix_b + E.edge_path(f)
        x = block


def _finish(prefix_a: Optional[Path], prefix_b: Optional[Path], a: Path, b: Path,
            s: Scalar) -> tuple:
    if prefix_a is None:
        return a, b, s
    return prefix_a + a, prefix_b + b, s


def check_reduction(x: LeavittElement, alpha: Path, beta: Path, s: Scalar) -> bool:
    """Verify alpha* x beta = s r(alpha) by multiplication and zero-testing."""
    E, R = x.graph, x.ring
    lhs = LeavittElement.ghost_path(E, R, alpha) * x * LeavittElement.path(E, R, beta)
    rhs = LeavittElement.vertex(E, R, alpha.rng) * s
    return not s.is_zero() and lpa_is_zero(lhs - rhs)


def irreducible_monomials(E: Graph, max_len: int) -> list:
    """Monomials mu nu* with |mu|, |nu| <= max_len not ending in g g* for a special edge g."""
    paths = all_paths(E, max_len)
    by_range = {}
    for p in paths:
        by_range.setdefault(p.rng, []).append(p)
    out = []
    for v in E.vertices:
        for mu in by_range.get(v, []):
            for nu in by_range.get(v, []):
                m = Monomial(mu, nu)
                if _reducible(E, m) is None:
                    out.append(m)
    out.sort(key=lambda m: monomial_key(E, m))
    return out


# -- Leavitt E-families in other algebras

@dataclass
class EFamilyReport:
    relations: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    nonzero_vertices: bool = True
    zero_vertex: Optional[str] = None
    graded: Optional[bool] = None
    certificates: list = field(default_factory=list)

    @property
    def is_family(self) -> bool:
        return all(self.relations.values())

    def lines(self) -> list:
        out = []
        for name, ok in self.relations.items():
            line = f"{name}: {'holds' if ok else 'fails'}"
            if not ok:
                line += f" ({self.failures[name]})"
            out.append(line)
        out.append("r v nonzero: " + ("yes" if self.nonzero_vertices else f"no ({self.zero_vertex})"))
        if self.graded is not None:
            out.append(f"degrees respected: {'yes' if self.graded else 'no'}")
        out.append("injective: " + (", ".join(self.certificates) if self.certificates else "no certificate"))
        return out


def efamily_verify(E: Graph, images: Mapping[str, object], probes: Iterable = (1,),
                   degree: Optional[Callable] = None) -> EFamilyReport:
    """Check the Leavitt E-family relations for generator images in a target algebra.

    ``images`` maps each vertex name, edge name and ``e*`` to a target element.
    Targets need ``+``, ``-``, ``*``, scalar multiplication and an exact
    ``is_zero()``. ``probes`` are the ring elements r for the r v != 0 check;
    ``degree`` returns the degree of a homogeneous target element or None.
    """
    def img(name):
        if name not in images:
            raise KeyError(f"no image for generator {name!r}")
        val = images[name]
        if not callable(getattr(val, "is_zero", None)):
            raise TypeError(f"target element for {name!r} has no exact equality")
        return val

    def eq(a, b):
        return (a - b).is_zero()

    rep = EFamilyReport()
    V = E.vertices
    checks = {"V": [], "E1": [], "E2": [], "CK1": [], "CK2": []}
    for v in V:
        checks["V"].append((f"{v}^2 = {v}", lambda v=v: eq(img(v) * img(v), img(v))))
        for w in V:
            if w != v:
                checks["V"].append((f"{v} {w} = 0", lambda v=v, w=w: (img(v) * img(w)).is_zero()))
    for e in E.edges:
        s, r = E.source(e), E.range(e)
        checks["E1"].append((f"{s} {e} = {e}", lambda e=e, s=s: eq(img(s) * img(e), img(e))))
        checks["E1"].append((f"{e} {r} = {e}", lambda e=e, r=r: eq(img(e) * img(r), img(e))))
        checks["E2"].append((f"{e}* {s} = {e}*", lambda e=e, s=s: eq(img(e + "*") * img(s), img(e + "*"))))
        checks["E2"].append((f"{r} {e}* = {e}*", lambda e=e, r=r: eq(img(r) * img(e + "*"), img(e + "*"))))
        for f in E.edges:
            if f == e:
                checks["CK1"].append((f"{e}* {e} = {r}", lambda e=e, r=r: eq(img(e + "*") * img(e), img(r))))
            else:
                checks["CK1"].append((f"{e}* {f} = 0", lambda e=e, f=f: (img(e + "*") * img(f)).is_zero()))
    for v in V:
        if v in E.ck2:
            def ck2(v=v):
                total = None
                for e in E.out_edges(v):
                    t = img(e) * img(e + "*")
                    total = t if total is None else total + t
                return eq(img(v), total)
            rhs = " + ".join(f"{e} {e}*" for e in E.out_edges(v))
            checks["CK2"].append((f"{v} = {rhs}", ck2))
    for name, items in checks.items():
        rep.relations[name] = True
        for text, fn in items:
            if not fn():
                rep.relations[name] = False
                rep.failures[name] = text
                break
    for v in V:
        for r in probes:
            if (r * img(v)).is_zero():
                rep.nonzero_vertices = False
                rep.zero_vertex = f"{r} {v}"
                break
        if not rep.nonzero_vertices:
            break
    if degree is not None:
        ok = all(degree(img(v)) == 0 for v in V)
        ok = ok and all(degree(img(e)) == 1 and degree(img(e + "*")) == -1 for e in E.edges)
        rep.graded = ok
    if rep.is_family and rep.nonzero_vertices:
        if rep.graded:
            rep.certificates.append("graded-injective (graded uniqueness theorem)")
        if condition_L(E)[0]:
            rep.certificates.append("CK-injective (Cuntz-Krieger uniqueness theorem, Condition (L))")
    return rep


def standard_family(E: Graph, ring: Ring, target: str = "steinberg") -> dict:
    """Generator images: in L_R(E) itself, or via pi in the Steinberg algebra."""
    images = {}
    for v in E.vertices:
        images[v] = LeavittElement.vertex(E, ring, v)
    for e in E.edges:
        images[e] = LeavittElement.edge(E, ring, e)
        images[e + "*"] = LeavittElement.ghost(E, ring, e)
    if target == "steinberg":
        images = {k: pi_to_steinberg(x) for k, x in images.items()}
    elif target != "leavitt":
        raise ValueError(f"unknown target {target!r}")
    return images


def steinberg_degree(f: SteinbergElement) -> Optional[int]:
    degs = f.degrees()
    if len(degs) == 1:
        return next(iter(degs))
    return 0 if not degs else None
