"""Finite abstract simplicial complexes.

A simplex is a strictly increasing tuple of integer vertex ids.  A
:class:`SimplicialComplex` stores every face of every simplex it contains
and is never mutated after construction; all operations here return new
complexes.  Vertex ids are plain integers; optional display names ride
along in ``names`` and are shared (not copied) by derived complexes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import ContainmentError, JoinError, MalformedInputError, NotASimplexError

Simplex = tuple  # tuple[int, ...], strictly increasing

_NO_NAMES: Mapping[int, str] = MappingProxyType({})


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Sort ``vertices`` into a simplex, rejecting empty input and repeats."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise MalformedInputError("a simplex needs at least one vertex")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise MalformedInputError(f"duplicate vertex {a} in simplex {vs}")
    return vs


def faces(sigma: Simplex, include_self: bool = True):
    """All nonempty faces of ``sigma``."""
    top = len(sigma) if include_self else len(sigma) - 1
    for r in range(1, top + 1):
        yield from combinations(sigma, r)


def dim(sigma: Simplex) -> int:
    return len(sigma) - 1


class SimplicialComplex:
    """An immutable finite simplicial complex given by its full simplex set."""

    __slots__ = ("_simplices", "_names", "__dict__")

    def __init__(self, simplices: Iterable[Simplex] = (), names: Optional[Mapping[int, str]] = None):
        self._simplices = frozenset(simplices)
        if names is None:
            names = _NO_NAMES
        elif not isinstance(names, MappingProxyType):
            names = MappingProxyType(dict(names))
        self._names = names

    # -- basic accessors -------------------------------------------------
    @property
    def simplices(self) -> frozenset:
        return self._simplices

    @property
    def names(self) -> Mapping[int, str]:
        return self._names

    def name(self, v: int) -> str:
        return self._names.get(v, str(v))

    def simplex_names(self, sigma: Simplex) -> list:
        return [self.name(v) for v in sigma]

    @cached_property
    def _ids_by_name(self) -> dict:
        return {self.name(v): v for v in self.vertices}

    def vertex_id(self, name: str) -> int:
        try:
            return self._ids_by_name[name]
        except KeyError:
            raise NotASimplexError((name,)) from None

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self):
        return iter(self.sorted_simplices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self.vertices)}, simplices={len(self)}, dim={self.dimension})"

    @property
    def is_empty(self) -> bool:
        return not self._simplices

    # -- cached structure ------------------------------------------------
    @cached_property
    def sorted_simplices(self) -> tuple:
        return tuple(sorted(self._simplices, key=lambda s: (len(s), s)))

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted(s[0] for s in self._simplices if len(s) == 1))

    @cached_property
    def dimension(self) -> int:
        return max((len(s) for s in self._simplices), default=0) - 1

    def simplices_of_dim(self, q: int) -> tuple:
        return self._by_dim.get(q, ())

    @cached_property
    def _by_dim(self) -> dict:
        out: dict = {}
        for s in self.sorted_simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {q: tuple(v) for q, v in out.items()}

    @cached_property
    def f_vector(self) -> tuple:
        return tuple(len(self.simplices_of_dim(q)) for q in range(self.dimension + 1))

    @cached_property
    def euler_characteristic(self) -> int:
        return sum((-1) ** q * f for q, f in enumerate(self.f_vector))

    @cached_property
    def edges(self) -> tuple:
        return self.simplices_of_dim(1)

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return MappingProxyType({v: frozenset(ws) for v, ws in adj.items()})

    @cached_property
    def maximal_simplices(self) -> tuple:
        simplices = self._simplices
        out = []
        for s in self.sorted_simplices:
            ss = set(s)
            # s is maximal iff no one-vertex extension exists
            nbrs = self.adjacency[s[0]] if len(s) else ()
            if not any(w not in ss and tuple(sorted(s + (w,))) in simplices for w in nbrs):
                out.append(s)
        return tuple(sorted(out))

    @cached_property
    def _star(self) -> dict:
        star: dict = {v: [] for v in self.vertices}
        for m in self.maximal_simplices:
            for v in m:
                star[v].append(m)
        return star

    def maximal_cofaces(self, sigma: Simplex) -> list:
        """Maximal simplices containing ``sigma``."""
        if sigma not in self._simplices:
            raise NotASimplexError(sigma)
        ss = set(sigma)
        return [m for m in self._star[sigma[0]] if ss.issubset(m)]

    @cached_property
    def _csr(self):
        order = self.vertices
        index = {v: i for i, v in enumerate(order)}
        indptr = np.zeros(len(order) + 1, dtype=np.int64)
        rows = []
        for i, v in enumerate(order):
            row = sorted(index[w] for w in self.adjacency[v])
            rows.extend(row)
            indptr[i + 1] = indptr[i] + len(row)
        return order, index, indptr, np.asarray(rows, dtype=np.int64)

    def csr(self):
        """``(order, index, indptr, indices)``: the 1-skeleton in CSR form over dense indices."""
        return self._csr

    def is_closed(self) -> bool:
        return all(f in self._simplices for s in self._simplices for f in faces(s, include_self=False))

    def skeleton(self, q: int) -> "SimplicialComplex":
        return SimplicialComplex((s for s in self._simplices if len(s) <= q + 1), self._names)

    def with_names(self, names: Mapping[int, str]) -> "SimplicialComplex":
        return SimplicialComplex(self._simplices, names)


def closure(simplices: Iterable[Simplex]) -> set:
    out: set = set()
    for s in simplices:
        if s in out:
            continue
        out.update(faces(s))
    return out


def build_complex(maximal: Iterable[Iterable[int]], names: Optional[Mapping[int, str]] = None) -> SimplicialComplex:
    """Close a list of simplices under taking faces."""
    return SimplicialComplex(closure(make_simplex(s) for s in maximal), names)


def simplex_complex(sigma: Simplex, names=None) -> SimplicialComplex:
    """The closure of a single simplex."""
    return SimplicialComplex(faces(tuple(sigma)), names)


def join(sigma: Simplex, rho: Simplex) -> Simplex:
    if set(sigma) & set(rho):
        raise JoinError(f"cannot join {tuple(sigma)} and {tuple(rho)}: shared vertices")
    return tuple(sorted(tuple(sigma) + tuple(rho)))


def link(X: SimplicialComplex, sigma: Simplex) -> SimplicialComplex:
    """``{tau : tau disjoint from sigma, tau * sigma in X}``."""
    sigma = tuple(sigma)
    ss = set(sigma)
    pieces = []
    for m in X.maximal_cofaces(sigma):
        rest = tuple(v for v in m if v not in ss)
        if rest:
            pieces.append(rest)
    return SimplicialComplex(closure(pieces), X.names)


def full_subcomplex(X: SimplicialComplex, V: Iterable[int]) -> SimplicialComplex:
    V = set(V)
    return SimplicialComplex((s for s in X.simplices if V.issuperset(s)), X.names)


def complement_subcomplex(X: SimplicialComplex, L) -> SimplicialComplex:
    """Largest subcomplex of ``X`` on the vertices not in ``L``.

    ``L`` may be a subcomplex or any iterable of vertices.
    """
    removed = set(L.vertices) if isinstance(L, SimplicialComplex) else set(L)
    return full_subcomplex(X, set(X.vertices) - removed)


def fullness_witness(X: SimplicialComplex, Y: SimplicialComplex) -> Optional[Simplex]:
    """A vertex set of ``Y`` spanning a simplex of ``X`` but not of ``Y``, or None.

    Candidates are grown one vertex at a time along edges of ``Y`` and only
    while they still span in ``X``, so sizes never exceed ``dim(X) + 1``.
    """
    for s in Y.simplices:
        if s not in X.simplices:
            raise ContainmentError(s)
    V = set(Y.vertices)
    for a, b in X.edges:
        if a in V and b in V and (a, b) not in Y.simplices:
            return (a, b)
    layer = list(Y.edges)
    yadj = Y.adjacency
    while layer:
        nxt = []
        for s in layer:
            common = set(yadj[s[0]])
            for v in s[1:]:
                common &= yadj[v]
            for w in sorted(common):
                if w <= s[-1]:
                    continue
                t = s + (w,)
                if t in X.simplices:
                    if t not in Y.simplices:
                        return t
                    nxt.append(t)
        layer = nxt
    return None


def is_full(X: SimplicialComplex, Y: SimplicialComplex) -> bool:
    return fullness_witness(X, Y) is None


def is_subcomplex(X: SimplicialComplex, Y: SimplicialComplex) -> bool:
    return Y.simplices <= X.simplices


def intersection(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(X.simplices & Y.simplices, X.names)


def union(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(X.simplices | Y.simplices, X.names)


@dataclass(frozen=True)
class BarycentricMap:
    """First barycentric subdivision together with its barycenter bookkeeping.

    Vertex ``i`` of ``complex`` is the barycenter of ``simplex_of[i]``.
    """

    complex: SimplicialComplex
    barycenter: Mapping[Simplex, int]
    simplex_of: tuple

    def chain(self, tau: Simplex) -> tuple:
        """The flag of original simplices spanned by a simplex of the subdivision."""
        return tuple(sorted((self.simplex_of[b] for b in tau), key=len))


def barycentric_subdivision(X: SimplicialComplex) -> BarycentricMap:
    order = X.sorted_simplices
    bary = {s: i for i, s in enumerate(order)}
    names = {i: "b[" + "/".join(X.simplex_names(s)) + "]" for i, s in enumerate(order)}
    chains = []
    for m in X.maximal_simplices:
        for perm in permutations(m):
            chains.append(tuple(sorted(bary[tuple(sorted(perm[: j + 1]))] for j in range(len(m)))))
    sd = SimplicialComplex(closure(chains), names)
    return BarycentricMap(sd, MappingProxyType(bary), order)
