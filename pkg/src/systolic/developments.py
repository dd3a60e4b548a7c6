"""Finite groups, Cayley graphs and balls in Bass–Serre trees of free products.

Groups are carried as verified multiplication tables over ``0..n-1``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .complex import SimplicialComplex, build_complex
from .errors import GeneratingSetError, GroupAxiomError
from .generators import GeneratedComplex


@dataclass(frozen=True)
class FiniteGroupTable:
    table: tuple
    identity: int
    inverses: tuple
    name: str = "G"
    labels: Optional[tuple] = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def order_profile(self) -> tuple:
        """Sorted multiset of element orders; an isomorphism invariant."""
        return tuple(sorted(self.element_order(g) for g in range(self.order)))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def generated_subgroup(self, gens) -> frozenset:
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)


def from_table(table: Sequence[Sequence[int]], name: str = "G", labels=None) -> FiniteGroupTable:
    """Validate ``table`` as a group multiplication table.

    Raises :class:`GroupAxiomError` with a witness (an offending triple,
    row, or element) when closure, identity, inverse or associativity fails.
    """
    n = len(table)
    if n == 0:
        raise GroupAxiomError("empty table")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    for a, row in enumerate(rows):
        if len(row) != n:
            raise GroupAxiomError("table is not square", witness=(a,))
        for b, x in enumerate(row):
            if not 0 <= x < n:
                raise GroupAxiomError("product outside the group", witness=(a, b))
    ident = next((e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))), None)
    if ident is None:
        raise GroupAxiomError("no two-sided identity")
    inv = []
    for a in range(n):
        b = next((b for b in range(n) if rows[a][b] == ident and rows[b][a] == ident), None)
        if b is None:
            raise GroupAxiomError("element without inverse", witness=(a,))
        inv.append(b)
    for a, b, c in itertools.product(range(n), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise GroupAxiomError("associativity fails", witness=(a, b, c))
    return FiniteGroupTable(rows, ident, tuple(inv), name, tuple(labels) if labels else None)


def _from_elements(elements, op, name, label=str) -> FiniteGroupTable:
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return from_table(table, name, [label(e) for e in elements])


def cyclic_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise GroupAxiomError("cyclic group order must be positive")
    return from_table([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def _compose(p, q):
    return tuple(p[i] for i in q)


def symmetric_group(n: int) -> FiniteGroupTable:
    """Permutations of ``0..n-1`` in lexicographic order; ``(pq)(i) = p(q(i))``."""
    if not 1 <= n <= 5:
        raise GroupAxiomError("symmetric_group supports 1 <= n <= 5")
    return _from_elements(itertools.permutations(range(n)), _compose, f"S{n}", lambda p: "".join(map(str, p)))


def permutation_group(generators, name: str) -> FiniteGroupTable:
    gens = [tuple(g) for g in generators]
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return _from_elements(sorted(seen), _compose, name, lambda p: "".join(map(str, p)))


def dihedral_group(m: int) -> FiniteGroupTable:
    """Symmetries of the ``m``-gon (order ``2m``), ``m >= 3``."""
    if m < 3:
        raise GroupAxiomError("dihedral_group needs m >= 3")
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return permutation_group([rot, ref], f"D{m}")


def alternating_group(n: int) -> FiniteGroupTable:
    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0

    perms = [p for p in itertools.permutations(range(n)) if even(p)]
    return _from_elements(perms, _compose, f"A{n}", lambda p: "".join(map(str, p)))


def dicyclic_group(n: int) -> FiniteGroupTable:
    """``<a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>`` of order ``4n``; n=2 is Q8."""
    if n < 2:
        raise GroupAxiomError("dicyclic_group needs n >= 2")
    m = 2 * n

    def op(p, q):
        (k, e), (l, f) = p, q
        if e == 0:
            return ((k + l) % m, f)
        if f == 0:
            return ((k - l) % m, 1)
        return ((k - l + n) % m, 0)

    name = "Q8" if n == 2 else f"Dic{n}"
    return _from_elements([(k, e) for e in (0, 1) for k in range(m)], op, name, lambda p: f"a{p[0]}x{p[1]}")


def quaternion_group() -> FiniteGroupTable:
    return dicyclic_group(2)


def direct_product(G: FiniteGroupTable, H: FiniteGroupTable) -> FiniteGroupTable:
    elems = [(g, h) for g in range(G.order) for h in range(H.order)]
    return _from_elements(
        elems,
        lambda p, q: (G.mul(p[0], q[0]), H.mul(p[1], q[1])),
        f"{G.name}x{H.name}",
        lambda p: f"({G.label(p[0])},{H.label(p[1])})",
    )


def small_groups(max_order: int = 12) -> list:
    """One representative of every isomorphism class of groups of order ``<= max_order`` (at most 12)."""
    if max_order > 12:
        raise ValueError("catalogue only covers orders up to 12")
    Z = cyclic_group
    catalogue = {
        1: lambda: [Z(1)],
        2: lambda: [Z(2)],
        3: lambda: [Z(3)],
        4: lambda: [Z(4), direct_product(Z(2), Z(2))],
        5: lambda: [Z(5)],
        6: lambda: [Z(6), symmetric_group(3)],
        7: lambda: [Z(7)],
        8: lambda: [Z(8), direct_product(Z(4), Z(2)), direct_product(direct_product(Z(2), Z(2)), Z(2)),
                    dihedral_group(4), quaternion_group()],
        9: lambda: [Z(9), direct_product(Z(3), Z(3))],
        10: lambda: [Z(10), dihedral_group(5)],
        11: lambda: [Z(11)],
        12: lambda: [Z(12), direct_product(Z(6), Z(2)), alternating_group(4), dihedral_group(6), dicyclic_group(3)],
    }
    out = []
    for n in range(1, max_order + 1):
        out.extend(catalogue[n]())
    return out


@dataclass(frozen=True)
class CayleyGraph:
    group: FiniteGroupTable
    generators: tuple
    adjacency: dict

    @property
    def vertices(self) -> tuple:
        return tuple(range(self.group.order))

    def components(self, removed=()) -> list:
        removed = set(removed)
        seen, comps = set(), []
        for s in self.vertices:
            if s in removed or s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in seen and w not in removed:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    @property
    def generates(self) -> bool:
        return len(self.components()) == 1

    @property
    def degree(self) -> int:
        return len(self.generators)

    def as_complex(self) -> SimplicialComplex:
        edges = [(u, w) for u in self.vertices for w in self.adjacency[u] if u < w]
        singles = [(v,) for v in self.vertices]
        return build_complex(edges + singles, {g: self.group.label(g) for g in self.vertices})


def cayley_graph(G: FiniteGroupTable, S) -> CayleyGraph:
    """``g ~ g s`` for ``s`` in ``S``; ``S`` must avoid the identity and be inverse-closed."""
    S = tuple(sorted(set(S)))
    for s in S:
        if not 0 <= s < G.order:
            raise GeneratingSetError(f"{s} is not an element of {G.name}")
    if G.identity in S:
        raise GeneratingSetError("generating set contains the identity")
    missing = [s for s in S if G.inverses[s] not in S]
    if missing:
        raise GeneratingSetError(f"generating set not closed under inverses: missing inverse of {missing[0]}")
    adj = {g: frozenset(G.mul(g, s) for s in S) for g in range(G.order)}
    return CayleyGraph(G, S, adj)


def inverse_closed_subsets(G: FiniteGroupTable):
    """Every inverse-closed subset of ``G`` minus the identity, in a fixed order."""
    units = sorted({tuple(sorted({g, G.inverses[g]})) for g in range(G.order) if g != G.identity})
    for mask in range(1 << len(units)):
        yield tuple(sorted(x for i, u in enumerate(units) if mask >> i & 1 for x in u))


def generating_sets(G: FiniteGroupTable):
    for S in inverse_closed_subsets(G):
        if len(G.generated_subgroup(S)) == G.order:
            yield S


def vertex_complement_connected(graph, v) -> bool:
    """Is the graph with ``v`` deleted connected?  (Empty or one-vertex results count as connected.)

    ``graph`` is a :class:`CayleyGraph` or a mapping from vertices to neighbours.
    """
    adj = graph.adjacency if isinstance(graph, CayleyGraph) else graph
    rest = [u for u in adj if u != v]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    queue = deque([rest[0]])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w != v and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(rest)


def _strip(word, factor):
    return word[:-1] if word and word[-1][0] == factor else word


def _word_name(G1, G2, t, word):
    groups = {1: G1, 2: G2}
    letters = "".join(f"{'ab'[f - 1]}{groups[f].label(g)}" for f, g in word)
    return f"g{t}[{letters}]"


def segment_development_ball(G1: FiniteGroupTable, G2: FiniteGroupTable, r: int) -> GeneratedComplex:
    """Ball of radius ``r`` around the base edge in the Bass–Serre tree of ``G1 * G2``.

    A vertex is a coset ``w G_t`` named by its normal form: an alternating
    word of nontrivial letters not ending in a ``G_t`` letter.  The edge
    ``w`` joins ``w G_1`` and ``w G_2``.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    groups = {1: G1, 2: G2}
    start = [(1, ()), (2, ())]
    dist = {v: 0 for v in start}
    edges = {((1, ()), (2, ()))}
    frontier = list(start)
    for d in range(1, r + 1):
        nxt = []
        for t, u in frontier:
            G = groups[t]
            for g in range(G.order):
                w = u if g == G.identity else u + ((t, g),)
                nb = (3 - t, _strip(w, 3 - t))
                if nb not in dist:
                    dist[nb] = d
                    nxt.append(nb)
                if nb in dist:
                    pair = ((t, u), nb) if t == 1 else (nb, (t, u))
                    edges.add(pair)
        frontier = nxt
    order = sorted(dist, key=lambda v: (dist[v], v[0], v[1]))
    vid = {v: i for i, v in enumerate(order)}
    names = {vid[v]: _word_name(G1, G2, v[0], v[1]) for v in order}
    X = build_complex(sorted((vid[a], vid[b]) for a, b in edges), names)
    outer = frozenset(vid[v] for v in order if dist[v] == r)
    return GeneratedComplex(
        X, "segment_development_ball", (G1.name, G2.name, r), (0, 1), max(r - 1, 0), outer,
        frozenset({"tree", "chamber", "flag", "connected"}),
        {"distance": {vid[v]: dist[v] for v in order}},
    )
