"""Combinatorial balls and spheres, projections, and the retractions between ball subdivisions.

Maps between barycentric subdivisions are stored on simplices: the
barycenter of ``nu`` goes to the barycenter of ``image[nu]``.  A simplex of
the subdivision is a chain ``nu_0 < ... < nu_k``; the map is simplicial iff
the images of every chain are again a chain, which for a flag codomain (any
barycentric subdivision is flag) is the pairwise condition checked here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from . import kernels
from .complex import (
    BarycentricMap,
    SimplicialComplex,
    barycentric_subdivision,
    closure,
    faces,
    full_subcomplex,
    link,
)
from .errors import NotASimplexError, SystolicityViolation


class BallTower:
    """Balls ``B_i`` and spheres ``S_i`` around a base simplex, for ``i <= imax``.

    Balls come from the inductive star construction; vertex distances come
    from a BFS on the 1-skeleton.  The two are cross-checked on every level.
    With ``imax=None`` the tower grows until the ball stops changing.
    """

    def __init__(self, X: SimplicialComplex, base, imax: Optional[int] = None):
        base = tuple(sorted(base))
        if base not in X.simplices:
            raise NotASimplexError(base)
        if imax is not None and imax < 0:
            raise ValueError("imax must be non-negative")
        self.complex = X
        self.base = base
        order, index, indptr, indices = X.csr()
        raw = kernels.bfs_distances(indptr, indices, [index[v] for v in base])
        self.distance: Mapping[int, int] = {v: int(d) for v, d in zip(order, raw) if d >= 0}

        balls = [frozenset(faces(base))]
        while imax is None or len(balls) <= imax:
            prev_vertices = {s[0] for s in balls[-1] if len(s) == 1}
            grown = closure(m for v in sorted(prev_vertices) for m in X._star[v])
            grown = frozenset(grown | balls[-1])
            if imax is None and grown == balls[-1]:
                break
            balls.append(grown)
        self._balls = [SimplicialComplex(b, X.names) for b in balls]
        self.imax = len(self._balls) - 1
        # grown to exhaustion: every larger ball equals the last one
        self.complete = imax is None
        for i, B in enumerate(self._balls):
            expected = {v for v, d in self.distance.items() if d <= i}
            if set(B.vertices) != expected:
                raise SystolicityViolation(
                    f"ball B_{i} vertices disagree with BFS distances", witness=sorted(set(B.vertices) ^ expected)
                )
        self._spheres: dict = {}

    def _check(self, i: int):
        if i < 0:
            raise IndexError("radius must be non-negative")
        if i > self.imax and not self.complete:
            raise IndexError(f"tower only built to radius {self.imax}")

    def ball(self, i: int) -> SimplicialComplex:
        if i > self.imax and self.complete:
            return self._balls[-1]
        self._check(i)
        return self._balls[i]

    def sphere(self, i: int) -> SimplicialComplex:
        if i not in self._spheres:
            B = self.ball(i)
            self._spheres[i] = full_subcomplex(B, self.vertices_at(i))
        return self._spheres[i]

    def vertices_at(self, i: int) -> list:
        return sorted(v for v, d in self.distance.items() if d == i)

    def simplex_distance(self, sigma) -> int:
        return min(self.distance[v] for v in sigma)

    def in_interior(self, sigma, i: int) -> bool:
        """Whether the open simplex ``sigma`` lies in the interior of ``B_i``."""
        return sigma in self.ball(i).simplices and sigma not in self.sphere(i).simplices


def ball_tower(X: SimplicialComplex, sigma, imax: Optional[int] = None) -> BallTower:
    return BallTower(X, sigma, imax)


def projection(X: SimplicialComplex, tower: BallTower, tau) -> tuple:
    """The simplex ``S_{i-1} ∩ X_tau`` for ``tau`` in ``S_i``, ``i > 0``.

    Raises :class:`SystolicityViolation` when that intersection is not a
    single nonempty simplex.
    """
    tau = tuple(sorted(tau))
    ds = {tower.distance.get(v) for v in tau}
    if len(ds) != 1 or None in ds:
        raise ValueError(f"{tau} is not contained in a single sphere")
    i = ds.pop()
    if i == 0:
        raise ValueError("projection is only defined on spheres of positive radius")
    if tau not in tower.sphere(i).simplices:
        raise ValueError(f"{tau} is not a simplex of S_{i}")
    ts = set(tau)
    rho = set()
    for m in X.maximal_cofaces(tau):
        rho.update(v for v in m if v not in ts and tower.distance[v] == i - 1)
    rho = tuple(sorted(rho))
    if not rho:
        raise SystolicityViolation(f"{tau} has no neighbours in S_{i - 1}", witness=tau)
    if tuple(sorted(ts | set(rho))) not in X.simplices:
        raise SystolicityViolation(f"S_{i - 1} ∩ link of {tau} is not a single simplex", witness=rho)
    if rho not in tower.sphere(i - 1).simplices:
        raise SystolicityViolation(f"projection {rho} of {tau} is not a simplex of S_{i - 1}", witness=rho)
    return rho


def projection_link_sides(X: SimplicialComplex, tower: BallTower, tau):
    """Both sides of ``X_tau ∩ B_i = B_1(rho, X_tau)`` and ``X_tau ∩ S_i = S_1(rho, X_tau)``.

    Returns ``(rho, (lhs_ball, rhs_ball), (lhs_sphere, rhs_sphere))``; the
    left sides are intersections in ``X``, the right sides come from a
    separate tower built inside the link.
    """
    rho = projection(X, tower, tau)
    i = tower.distance[tau[0]]
    L = link(X, tau)
    lhs_ball = SimplicialComplex(L.simplices & tower.ball(i).simplices, X.names)
    lhs_sphere = SimplicialComplex(L.simplices & tower.sphere(i).simplices, X.names)
    inner = BallTower(L, rho, 1)
    return rho, (lhs_ball, inner.ball(1)), (lhs_sphere, inner.sphere(1))


@dataclass
class SimplexMap:
    """A map of barycentric subdivisions recorded on simplices."""

    domain: SimplicialComplex
    codomain: SimplicialComplex
    image: dict = field(default_factory=dict)

    def __call__(self, nu):
        return self.image[tuple(nu)]

    def simpliciality_witness(self):
        """A pair ``nu < mu`` whose images are not nested, or None."""
        cod = self.codomain.simplices
        for mu in self.domain.sorted_simplices:
            a = self.image[mu]
            if a not in cod:
                return (mu,)
            sa = set(a)
            for nu in faces(mu, include_self=False):
                sb = set(self.image[nu])
                if not (sa <= sb or sb <= sa):
                    return (nu, mu)
        return None

    def is_simplicial(self) -> bool:
        return self.simpliciality_witness() is None

    def fixes(self, sub: SimplicialComplex) -> bool:
        return all(self.image.get(s) == s for s in sub.simplices)

    def maps_into(self, source: SimplicialComplex, target: SimplicialComplex) -> bool:
        return all(self.image[s] in target.simplices for s in source.simplices)

    def compose(self, inner: "SimplexMap") -> "SimplexMap":
        """``self ∘ inner``."""
        return SimplexMap(inner.domain, self.codomain, {s: self.image[t] for s, t in inner.image.items()})

    def on_barycenters(self):
        """``(domain', codomain', vertex map)`` on explicit barycentric subdivisions."""
        dom: BarycentricMap = barycentric_subdivision(self.domain)
        cod: BarycentricMap = barycentric_subdivision(self.codomain)
        vmap = {dom.barycenter[s]: cod.barycenter[t] for s, t in self.image.items()}
        return dom, cod, vmap


def contraction_image(X: SimplicialComplex, tower: BallTower, nu, i: int) -> tuple:
    """Where the elementary contraction onto ``B_i`` sends the barycenter of ``nu``.

    ``nu ∩ B_i`` when that is nonempty, otherwise the simplex
    ``X_nu ∩ B_i`` (the projection of ``nu``).
    """
    nu = tuple(nu)
    part = tuple(v for v in nu if tower.distance[v] <= i)
    if part:
        if part not in tower.ball(i).simplices:
            raise SystolicityViolation(f"{part} spans in X but not in B_{i}", witness=part)
        return part
    return projection(X, tower, nu)


def elementary_contraction(X: SimplicialComplex, tower: BallTower, i: int) -> SimplexMap:
    """The simplicial retraction ``B_{i+1}' -> B_i'``, with its contract checked."""
    dom, cod = tower.ball(i + 1), tower.ball(i)
    pi = SimplexMap(dom, cod, {nu: contraction_image(X, tower, nu, i) for nu in dom.sorted_simplices})
    bad = pi.simpliciality_witness()
    if bad is not None:
        raise SystolicityViolation(f"contraction onto B_{i} is not simplicial", witness=bad)
    outer = full_subcomplex(dom, [v for v in dom.vertices if tower.distance[v] >= i])
    if not pi.maps_into(outer, tower.sphere(i)):
        bad = next(s for s in outer.sorted_simplices if pi.image[s] not in tower.sphere(i).simplices)
        raise SystolicityViolation(f"image of {bad} leaves S_{i}", witness=bad)
    return pi


def retraction(X: SimplicialComplex, tower: BallTower, i: int, j: int) -> SimplexMap:
    """``π_{B_i} ∘ ... ∘ π_{B_{j-1}}`` on ``B_j'``."""
    if j <= i:
        raise ValueError("retraction needs j > i")
    P = elementary_contraction(X, tower, j - 1)
    for m in range(j - 2, i - 1, -1):
        P = elementary_contraction(X, tower, m).compose(P)
    outer = full_subcomplex(tower.ball(j), [v for v in tower.ball(j).vertices if tower.distance[v] >= i])
    if not P.maps_into(outer, tower.sphere(i)):
        raise SystolicityViolation(f"retraction does not map B_{j} minus the interior of B_{i} into S_{i}")
    if not P.fixes(tower.ball(i)):
        raise SystolicityViolation(f"retraction does not fix B_{i}")
    return P


def retract_simplex(X: SimplicialComplex, tower: BallTower, nu, i: int) -> tuple:
    """Image of one barycenter under the composite retraction onto ``B_i``."""
    nu = tuple(nu)
    top = max(tower.distance[v] for v in nu)
    while top > i:
        nu = contraction_image(X, tower, nu, top - 1)
        top = max(tower.distance[v] for v in nu)
    return nu


@dataclass
class PushedPath:
    vertices: list
    images: list
    closed: bool


def push_path(X: SimplicialComplex, tower: BallTower, i: int, path) -> PushedPath:
    """Push a 1-skeleton path in ``S_j`` (``j > i``) down to a path in ``S_i``.

    The input's vertex and edge barycenters are retracted onto ``B_i``; each
    lands in a simplex of ``S_i`` and consecutive images are nested, so
    walking from simplex to simplex (moving only when the current vertex
    drops out) gives a 1-skeleton path in ``S_i``.
    """
    path = list(path)
    if not path:
        return PushedPath([], [], False)
    js = {tower.distance.get(v) for v in path}
    if len(js) != 1 or None in js:
        raise ValueError("path must lie in a single sphere")
    j = js.pop()
    if j <= i:
        raise ValueError("path must lie in a sphere of radius greater than i")
    for a, b in zip(path, path[1:]):
        if a != b and (min(a, b), max(a, b)) not in X.simplices:
            raise ValueError(f"{a} and {b} are not adjacent")
    bary = [(path[0],)]
    for a, b in zip(path, path[1:]):
        if a != b:
            bary.append((min(a, b), max(a, b)))
        bary.append((b,))
    images = [retract_simplex(X, tower, nu, i) for nu in bary]
    sphere = tower.sphere(i).simplices
    for nu, im in zip(bary, images):
        if im not in sphere:
            raise SystolicityViolation(f"barycenter of {nu} retracts outside S_{i}", witness=nu)
    current = images[0][0]
    out = [current]
    for prev, im in zip(images, images[1:]):
        if not (set(prev) <= set(im) or set(im) <= set(prev)):
            raise SystolicityViolation("consecutive retracted barycenters are not nested", witness=(prev, im))
        if current not in im:
            current = im[0]
            out.append(current)
    closed = len(path) > 1 and path[0] == path[-1]
    if closed and out[-1] != out[0]:
        if (min(out[0], out[-1]), max(out[0], out[-1])) not in sphere:
            raise SystolicityViolation("pushed loop does not close", witness=(out[0], out[-1]))
        out.append(out[0])
    return PushedPath(out, images, closed)
