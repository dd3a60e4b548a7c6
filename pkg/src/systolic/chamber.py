"""Chamber complexes, the link-complement condition R(v, X), and lifting paths between spheres."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .balls import BallTower, projection
from .complex import SimplicialComplex, faces, full_subcomplex, link
from .errors import ChamberStructureError, RConditionViolation, SystolicityViolation
from .homology import components


@dataclass
class ChamberReport:
    """Chamber-complex predicates of a finite complex.

    ``is_chamber`` means the complex is the union of its top simplices;
    ``thick`` is the additional requirement that each codimension-1 face lies
    in at least two chambers.  Both together are the full chamber-complex
    condition (``strict_chamber``); finite patches of infinite complexes are
    typically chamber but not thick along their truncation boundary.
    """

    is_chamber: bool
    chamber_dimension: int
    gallery_connected: bool
    normal: bool
    pseudomanifold: bool
    thick: bool
    thin_faces: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def strict_chamber(self) -> bool:
        return self.is_chamber and self.thick

    def thick_away_from(self, frontier: Iterable[int]) -> bool:
        """Thickness ignoring codimension-1 faces that touch ``frontier``."""
        fr = set(frontier)
        return not any(not fr.intersection(f) for f in self.thin_faces)

    def as_dict(self, X: Optional[SimplicialComplex] = None) -> dict:
        def nm(s):
            return [X.name(v) for v in s] if X is not None else list(s)

        return {
            "is_chamber": self.is_chamber,
            "dimension": self.chamber_dimension,
            "gallery_connected": self.gallery_connected,
            "normal": self.normal,
            "pseudomanifold": self.pseudomanifold,
            "thick": self.thick,
            "thin_faces": [nm(f) for f in self.thin_faces],
            "witnesses": {k: (nm(v) if isinstance(v, tuple) else v) for k, v in self.witnesses.items()},
        }


def _gallery_components(X: SimplicialComplex) -> int:
    n = X.dimension
    chambers = X.simplices_of_dim(n)
    if n == 0:
        return 1 if chambers else 0
    by_face: dict = {}
    for c in chambers:
        for f in faces(c):
            if len(f) == n:
                by_face.setdefault(f, []).append(c)
    seen = set()
    count = 0
    for c in chambers:
        if c in seen:
            continue
        count += 1
        seen.add(c)
        queue = deque([c])
        while queue:
            d = queue.popleft()
            for f in (d[:j] + d[j + 1:] for j in range(len(d))):
                for e in by_face[f]:
                    if e not in seen:
                        seen.add(e)
                        queue.append(e)
    return count


def is_gallery_connected(X: SimplicialComplex) -> bool:
    n = X.dimension
    pure = all(len(m) == n + 1 for m in X.maximal_simplices)
    return pure and _gallery_components(X) == 1


def chamber_report(X: SimplicialComplex) -> ChamberReport:
    if X.is_empty:
        raise ValueError("chamber_report needs a nonempty complex")
    n = X.dimension
    witnesses: dict = {}
    low = [m for m in X.maximal_simplices if len(m) != n + 1]
    pure = not low
    if low:
        witnesses["non_chamber_maximal"] = low[0]
    chambers = X.simplices_of_dim(n)
    if n == 0:
        counts = {(): len(chambers)}
    else:
        counts = {f: 0 for f in X.simplices_of_dim(n - 1)}
        for c in chambers:
            for j in range(len(c)):
                counts[c[:j] + c[j + 1:]] += 1
    thin = sorted(f for f, c in counts.items() if c < 2)
    thick = not thin
    if thin:
        witnesses["thin_face"] = thin[0]
    exact_two = all(c == 2 for c in counts.values())
    if not exact_two:
        witnesses["non_manifold_face"] = min(f for f, c in counts.items() if c != 2)
    gallery = pure and _gallery_components(X) == 1
    if pure and not gallery:
        witnesses["gallery_components"] = _gallery_components(X)
    normal = gallery
    if gallery:
        for s in X.sorted_simplices:
            L = link(X, s)
            if L.dimension >= 1 and not is_gallery_connected(L):
                normal = False
                witnesses["non_gallery_connected_link"] = s
                break
    return ChamberReport(
        is_chamber=pure,
        chamber_dimension=n,
        gallery_connected=gallery,
        normal=normal,
        pseudomanifold=pure and exact_two,
        thick=thick,
        thin_faces=thin,
        witnesses=witnesses,
    )


def _distances_in(X: SimplicialComplex, sources) -> dict:
    adj = X.adjacency
    dist = {s: 0 for s in sources}
    queue = deque(sorted(dist))
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def outside_open_ball(X: SimplicialComplex, sigma, radius: int = 2) -> SimplicialComplex:
    """``X`` minus the open ball of the given radius around ``sigma``.

    As a space this is the full subcomplex on the vertices at distance at
    least ``radius`` from ``sigma``.
    """
    dist = _distances_in(X, sigma)
    return full_subcomplex(X, [v for v in X.vertices if dist.get(v, radius) >= radius])


@dataclass
class RConditionResult:
    vertex: int
    holds: bool
    failing_simplex: Optional[tuple] = None
    component_count: Optional[int] = None
    failures: list = field(default_factory=list)
    vacuous: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def as_dict(self, X: Optional[SimplicialComplex] = None) -> dict:
        def nm(s):
            return [X.name(v) for v in s] if X is not None else list(s)

        return {
            "vertex": X.name(self.vertex) if X is not None else self.vertex,
            "holds": self.holds,
            "failing_simplex": nm(self.failing_simplex) if self.failing_simplex else None,
            "component_count": self.component_count,
            "vacuous_simplices": len(self.vacuous),
        }


def r_condition(X: SimplicialComplex, v: int) -> RConditionResult:
    """For every simplex of the link of ``v``, the link minus the open 2-ball around it is connected.

    An empty complement is recorded in ``vacuous`` and counts as connected.
    """
    if (v,) not in X.simplices:
        raise ValueError(f"{v} is not a vertex")
    L = link(X, (v,))
    failures, vacuous = [], []
    for sigma in L.sorted_simplices:
        rest = outside_open_ball(L, sigma, 2)
        if rest.is_empty:
            vacuous.append(sigma)
            continue
        c = len(components(rest))
        if c != 1:
            failures.append((sigma, c))
    if failures:
        sigma, c = failures[0]
        return RConditionResult(v, False, sigma, c, failures, vacuous)
    return RConditionResult(v, True, None, 1, [], vacuous)


@dataclass
class Codim2Result:
    holds: bool
    failure: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def codim2_condition(X: SimplicialComplex, vertices: Optional[Iterable[int]] = None) -> Codim2Result:
    """Connected links in codimension >= 2 and connected link complements in codimension 2.

    With ``vertices`` given, only simplices inside that vertex set are tested
    (useful to stay away from the boundary of a truncation).
    """
    n = X.dimension
    allowed = set(vertices) if vertices is not None else None
    for kappa in X.sorted_simplices:
        if len(kappa) - 1 > n - 2:
            continue
        if allowed is not None and not allowed.issuperset(kappa):
            continue
        L = link(X, kappa)
        if L.is_empty or len(components(L)) != 1:
            return Codim2Result(False, "disconnected link", (kappa,))
        if len(kappa) - 1 == n - 2:
            for rho in L.sorted_simplices:
                rest = outside_open_ball(L, rho, 2)
                if not rest.is_empty and len(components(rest)) != 1:
                    return Codim2Result(False, "disconnected link complement", (kappa, rho))
    return Codim2Result(True)


@dataclass
class LiftedVertex:
    vertex: int
    role: str  # "w" (over a path vertex) or "z" (over a path edge)
    index: int
    projection: tuple


@dataclass
class LiftResult:
    source: list
    vertices: list
    entries: list
    closed: bool
    checks: list = field(default_factory=list)


def _top_face_containing(S: SimplicialComplex, edge, n: int):
    want = n  # an (n-1)-simplex has n vertices
    es = set(edge)
    cands = [s for s in S.simplices_of_dim(want - 1) if es.issubset(s)]
    return min(cands) if cands else None


def lift_path(
    X: SimplicialComplex, tower: BallTower, k: int, path, check_r: bool = True
) -> LiftResult:
    """Lift a path in the 1-skeleton of ``S_k`` to one in ``S_{k+1}``.

    For each edge an (n-1)-simplex of ``S_k`` through it and a vertex of
    ``S_{k+1}`` coning it off are chosen (smallest labels first); consecutive
    cone vertices are joined by a BFS inside the part of the shared path
    vertex's link outside the open 2-ball around its projection.  The
    returned path is checked against the two same-simplex conditions before
    it is returned.  A closed input (first vertex repeated at the end) gives
    a closed lift.
    """
    path = list(path)
    if not path:
        raise ValueError("empty path")
    n = X.dimension
    S_k, S_next = tower.sphere(k), tower.sphere(k + 1)
    for v in path:
        if tower.distance.get(v) != k:
            raise ValueError(f"vertex {v} is not in S_{k}")
    for a, b in zip(path, path[1:]):
        if a == b or (min(a, b), max(a, b)) not in S_k.simplices:
            raise ValueError(f"{a} and {b} are not joined by an edge of S_{k}")
    if check_r:
        seen = set()
        for v in path:
            if v in seen:
                continue
            seen.add(v)
            res = r_condition(X, v)
            if not res.holds:
                raise RConditionViolation(v, res.failing_simplex)

    def region(v):
        L = link(X, (v,))
        sigma = projection(X, tower, (v,)) if k > 0 else ()
        verts = outside_open_ball(L, sigma, 2).vertices if sigma else [
            w for w in L.vertices if tower.distance[w] == k + 1
        ]
        for w in verts:
            if tower.distance[w] != k + 1:
                raise SystolicityViolation(f"link region of {v} leaves S_{k + 1}", witness=(w,))
        return full_subcomplex(L, verts)

    def connect(v, a, b):
        R = region(v)
        if a == b:
            return []
        if (a,) not in R.simplices or (b,) not in R.simplices:
            raise RConditionViolation(v, message=f"lift endpoints leave the link region of {v}")
        prev = {a: None}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                break
            for w in sorted(R.adjacency[u]):
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        if b not in prev:
            raise RConditionViolation(v, message=f"cannot join {a} and {b} in the link of {v} off the 2-ball")
        walk = [b]
        while walk[-1] != a:
            walk.append(prev[walk[-1]])
        return walk[::-1][1:-1]

    closed = len(path) >= 3 and path[0] == path[-1]
    edges = list(zip(path, path[1:]))
    rhos, zs = [], []
    for a, b in edges:
        rho = _top_face_containing(S_k, (a, b), n)
        if rho is None:
            raise ChamberStructureError(f"no {n - 1}-simplex of S_{k} contains edge {(a, b)}", witness=(a, b))
        cone = set()
        rs = set(rho)
        for m in X.maximal_cofaces(rho):
            cone.update(w for w in m if w not in rs and tower.distance[w] == k + 1)
        if not cone:
            raise ChamberStructureError(f"{rho} has no cone vertex in S_{k + 1}", witness=rho)
        rhos.append(rho)
        zs.append(min(cone))

    entries = []

    def add(vertex, role, index):
        entries.append(LiftedVertex(vertex, role, index, projection(X, tower, (vertex,))))

    if len(path) == 1:
        R = region(path[0])
        if R.is_empty:
            raise ChamberStructureError(f"vertex {path[0]} has no neighbours in S_{k + 1}", witness=(path[0],))
        add(R.vertices[0], "w", 0)
    elif closed:
        m = len(edges)
        for i in range(m):
            add(zs[i], "z", i)
            nxt = (i + 1) % m
            for w in connect(path[i + 1], zs[i], zs[nxt]):
                add(w, "w", (i + 1) % m)
        add(zs[0], "z", 0)
    else:
        for i in range(len(edges)):
            if i > 0:
                for w in connect(path[i], zs[i - 1], zs[i]):
                    add(w, "w", i)
            add(zs[i], "z", i)

    checks = []
    sk = S_k.simplices
    for e in entries:
        if e.role == "w":
            need = set(e.projection) | {path[e.index]}
            label = f"P({X.name(e.vertex)}) shares a simplex of S_{k} with v{e.index}={X.name(path[e.index])}"
        else:
            need = set(e.projection) | set(edges[e.index])
            label = f"P({X.name(e.vertex)}) shares a simplex of S_{k} with edge e{e.index}={X.name(edges[e.index][0])}-{X.name(edges[e.index][1])}"
        ok = tuple(sorted(need)) in sk
        checks.append((label, ok))
        if not ok:
            raise SystolicityViolation(f"lift check failed: {label}", witness=(e.vertex,))
    verts = [e.vertex for e in entries]
    for a, b in zip(verts, verts[1:]):
        if a != b and (min(a, b), max(a, b)) not in S_next.simplices:
            raise SystolicityViolation(f"lifted path jumps from {a} to {b}", witness=(a, b))
    return LiftResult(path, verts, entries, closed, checks)


@dataclass
class SphereSequence:
    radii: list
    component_counts: list
    sizes: list


def sphere_connectivity_sequence(X: SimplicialComplex, tower: BallTower, kmax: int) -> SphereSequence:
    radii = list(range(1, kmax + 1))
    counts, sizes = [], []
    for k in radii:
        S = tower.sphere(k)
        counts.append(len(components(S)))
        sizes.append(len(S.vertices))
    return SphereSequence(radii, counts, sizes)
