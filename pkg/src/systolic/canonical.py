"""Canonical labelling of simplicial complexes.

Colour refinement on vertices (seeded by per-dimension simplex counts)
followed by an individualise-and-refine search.  The certificate is the
lexicographically least relabelled simplex list over all leaves, so two
complexes are isomorphic exactly when their certificates agree.  Meant for
desk-scale complexes: the search has no automorphism pruning.
"""
from __future__ import annotations

from typing import Optional

from .complex import SimplicialComplex


def _refine(X: SimplicialComplex, colour: dict) -> dict:
    adj = X.adjacency
    while True:
        sig = {v: (colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in colour}
        keys = sorted(set(sig.values()))
        rank = {k: i for i, k in enumerate(keys)}
        new = {v: rank[sig[v]] for v in colour}
        if len(keys) == len(set(colour.values())):
            return new
        colour = new


def _initial_colours(X: SimplicialComplex) -> dict:
    counts = {v: [0] * (X.dimension + 1) for v in X.vertices}
    for s in X.simplices:
        for v in s:
            counts[v][len(s) - 1] += 1
    keys = sorted({tuple(c) for c in counts.values()})
    rank = {k: i for i, k in enumerate(keys)}
    return {v: rank[tuple(c)] for v, c in counts.items()}


def _certificate(X: SimplicialComplex, perm: dict) -> tuple:
    return tuple(sorted((len(s), tuple(sorted(perm[v] for v in s))) for s in X.simplices))


def canonical_labelling(X: SimplicialComplex, fixed: Optional[dict] = None):
    """Return ``(certificate, labelling)`` with ``labelling`` a vertex -> 0..n-1 map.

    ``fixed`` optionally pre-colours vertices (e.g. to pin a base vertex);
    only isomorphisms preserving those colours are then considered.
    """
    colour = _initial_colours(X)
    if fixed:
        colour = {v: (fixed.get(v, -1), c) for v, c in colour.items()}
        keys = sorted(set(colour.values()))
        colour = {v: keys.index(c) for v, c in colour.items()}
    best = [None, None]

    def search(col):
        col = _refine(X, col)
        cells: dict = {}
        for v, c in col.items():
            cells.setdefault(c, []).append(v)
        if len(cells) == len(col):
            cert = _certificate(X, col)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, dict(col)
            return
        target = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        for v in sorted(cells[target]):
            nxt = {u: 2 * c + (0 if u == v else 1) if c >= target else 2 * c for u, c in col.items()}
            search(nxt)

    if X.is_empty:
        return (), {}
    search(colour)
    return best[0], best[1]


def canonical_form(X: SimplicialComplex, fixed: Optional[dict] = None) -> tuple:
    return canonical_labelling(X, fixed)[0]


def find_isomorphism(X: SimplicialComplex, Y: SimplicialComplex, fixed_x=None, fixed_y=None) -> Optional[dict]:
    """A simplicial isomorphism ``X -> Y`` as a vertex map, or None."""
    if X.f_vector != Y.f_vector:
        return None
    cx, lx = canonical_labelling(X, fixed_x)
    cy, ly = canonical_labelling(Y, fixed_y)
    if cx != cy:
        return None
    inv = {c: v for v, c in ly.items()}
    phi = {v: inv[c] for v, c in lx.items()}
    assert all(tuple(sorted(phi[v] for v in s)) in Y.simplices for s in X.simplices)
    return phi


def is_isomorphic(X: SimplicialComplex, Y: SimplicialComplex) -> bool:
    return find_isomorphism(X, Y) is not None
