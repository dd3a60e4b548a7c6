"""Deterministic example complexes.

Lattice constructions use axial coordinates ``(x, y)`` on the triangular
lattice: the six neighbours of a point differ from it by ``±(1, 0)``,
``±(0, 1)`` and ``±(1, -1)``.  Vertex ids are fixed by the construction so
that, for instance, ``triangular_disk(R)`` is literally a subcomplex of
``triangular_disk(R + 1)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from .complex import SimplicialComplex, build_complex
from .errors import MalformedInputError

AXIAL_DIRECTIONS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


@dataclass(frozen=True)
class GeneratedComplex:
    """A generated complex plus what the generator knows about it.

    ``frontier`` holds the vertices created by truncating an infinite
    complex (empty for genuinely finite ones); ``safe_radius`` is the
    largest radius around ``base`` whose balls stay off the frontier.
    """

    complex: SimplicialComplex
    name: str
    params: tuple
    base: tuple
    safe_radius: int
    frontier: frozenset = frozenset()
    tags: frozenset = frozenset()
    marks: dict = field(default_factory=dict, compare=False)

    @property
    def label(self) -> str:
        return f"{self.name}({', '.join(map(str, self.params))})"


def hex_norm(x: int, y: int) -> int:
    return (abs(x) + abs(y) + abs(x + y)) // 2


def _radius_to_frontier(X: SimplicialComplex, base, frontier) -> int:
    dist = {v: 0 for v in base}
    queue = deque(base)
    adj = X.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if not frontier:
        return max(dist.values())
    return max(min(dist[f] for f in frontier if f in dist) - 1, 0)


def _lattice_triangles(points):
    pts = set(points)
    tris = []
    for x, y in sorted(pts):
        up = ((x + 1, y), (x, y + 1))
        down = ((x + 1, y), (x + 1, y - 1))
        for a, b in (up, down):
            if a in pts and b in pts:
                tris.append(((x, y), a, b))
    return tris


def hex_ring(r: int):
    if r == 0:
        return [(0, 0)]
    x, y = AXIAL_DIRECTIONS[4][0] * r, AXIAL_DIRECTIONS[4][1] * r
    out = []
    for i in range(6):
        for _ in range(r):
            out.append((x, y))
            x, y = x + AXIAL_DIRECTIONS[i][0], y + AXIAL_DIRECTIONS[i][1]
    return out


def triangular_disk(R: int) -> GeneratedComplex:
    """Hexagonal patch of radius ``R`` of the triangulated plane, centred at vertex 0."""
    if R < 1:
        raise MalformedInputError("triangular_disk needs R >= 1")
    order = [p for r in range(R + 1) for p in hex_ring(r)]
    vid = {p: i for i, p in enumerate(order)}
    names = {i: f"{x}:{y}" for (x, y), i in vid.items()}
    X = build_complex(([vid[p] for p in t] for t in _lattice_triangles(order)), names)
    frontier = frozenset(vid[p] for p in hex_ring(R))
    return GeneratedComplex(
        X, "triangular_disk", (R,), (0,), R - 1, frontier,
        frozenset({"flag", "6-large", "locally-6-large", "systolic", "chamber", "normal", "connected"}),
        {"coords": {i: p for p, i in vid.items()}, "ring": {vid[p]: hex_norm(*p) for p in order}},
    )


def flat_torus(n: int) -> GeneratedComplex:
    """The ``n x n`` quotient of the triangulated plane; 6-large once ``n >= 7``."""
    if n < 7:
        raise MalformedInputError("flat_torus needs n >= 7 (shorter essential loops break 6-largeness)")

    def v(x, y):
        return (x % n) * n + (y % n)

    tris = []
    for x in range(n):
        for y in range(n):
            tris.append((v(x, y), v(x + 1, y), v(x, y + 1)))
            tris.append((v(x, y), v(x + 1, y), v(x + 1, y - 1)))
    names = {v(x, y): f"{x}:{y}" for x in range(n) for y in range(n)}
    X = build_complex(tris, names)
    from .largeness import is_k_large  # local import: largeness imports nothing from here

    if not is_k_large(X, 6).is_k_large:
        raise AssertionError("flat torus failed its 6-largeness self-check")
    return GeneratedComplex(
        X, "flat_torus", (n,), (0,), n // 4, frozenset(),
        frozenset({"flag", "6-large", "locally-6-large", "chamber", "normal", "pseudomanifold", "connected"}),
        {"coords": {v(x, y): (x, y) for x in range(n) for y in range(n)}},
    )


def _finite(X: SimplicialComplex, name, params, tags, base=(0,)) -> GeneratedComplex:
    return GeneratedComplex(X, name, params, base, _radius_to_frontier(X, base, ()), frozenset(), frozenset(tags))


def platonic(name: str) -> GeneratedComplex:
    """Boundary of the tetrahedron, the octahedron or the icosahedron."""
    if name == "tetra_boundary":
        tris = [t for t in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))]
        tags = {"not-flag", "sphere", "chamber", "pseudomanifold", "connected"}
    elif name == "octahedron":
        tris = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
        tags = {"flag", "not-6-large", "sphere", "chamber", "normal", "pseudomanifold", "connected"}
    elif name == "icosahedron":
        top, bottom = 0, 11

        def up(i):
            return 1 + i % 5

        def lo(i):
            return 6 + i % 5

        tris = []
        for i in range(5):
            tris += [(top, up(i), up(i + 1)), (up(i), up(i + 1), lo(i)),
                     (up(i + 1), lo(i), lo(i + 1)), (bottom, lo(i), lo(i + 1))]
        tags = {"flag", "not-6-large", "sphere", "chamber", "normal", "pseudomanifold", "connected"}
    else:
        raise MalformedInputError(f"unknown platonic solid {name!r}")
    return _finite(build_complex(tris), "platonic", (name,), tags)


def wheel(m: int) -> GeneratedComplex:
    """Cone (hub 0) over the ``m``-cycle on vertices ``1..m``."""
    if m < 3:
        raise MalformedInputError("wheel needs m >= 3")
    tris = [(0, 1 + i, 1 + (i + 1) % m) for i in range(m)]
    tags = {"flag", "chamber", "normal", "connected"} if m > 3 else {"not-flag", "chamber", "normal", "connected"}
    if m >= 6:
        tags |= {"6-large", "locally-6-large", "systolic"}
    elif m >= 4:
        tags |= {"not-locally-6-large"}
    return _finite(build_complex(tris), "wheel", (m,), tags)


def _half_plane_points(size: int):
    return [(x, y) for y in range(size + 1) for x in range(-size, size + 1) if hex_norm(x, y) <= size]


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            self.parent[hi] = lo


def glued_halfplanes(k: int, size: int) -> GeneratedComplex:
    """Stage ``k`` of the half-plane gluing, each half-plane cut at radius ``size``.

    Half-plane ``j`` occupies ``y >= 0`` with ``b_j = (0, 0)``, ``a_j = (0, 1)``
    and ray ``r_j`` running up the ``y`` axis from ``a_j``.  Going from stage
    ``t`` to ``t + 1``, the ray of the new half-plane is laid along the
    boundary half-line of the lowest-index half-plane whose boundary edge at
    ``b_i`` is still uncovered (right side before left side).
    """
    if k < 1:
        raise MalformedInputError("glued_halfplanes needs k >= 1")
    if size < max(k, 2):
        raise MalformedInputError("glued_halfplanes needs size >= max(k, 2)")
    pts = _half_plane_points(size)
    uf = _UnionFind()
    for j in range(1, k + 1):
        for x, y in pts:
            uf.find((j, x, y))
    uncovered = {1: [1, -1]}
    gluings = []
    for t in range(1, k):
        i = min(j for j, sides in uncovered.items() if sides)
        side = uncovered[i].pop(0)
        new = t + 1
        for s in range(size):
            uf.union((new, 0, 1 + s), (i, side * s, 0))
        uncovered[new] = [1, -1]
        gluings.append((new, i, "right" if side == 1 else "left"))
    classes: dict = {}
    for key in uf.parent:
        classes.setdefault(uf.find(key), []).append(key)
    reps = sorted(classes, key=lambda r: min(classes[r]))
    vid = {r: n for n, r in enumerate(reps)}
    names, b_ids = {}, {}
    for r in reps:
        keys = sorted(classes[r])
        bs = [j for (j, x, y) in keys if x == 0 and y == 0]
        if bs:
            names[vid[r]] = f"b{bs[0]}"
            for j in bs:
                b_ids[j] = vid[r]
        else:
            j, x, y = keys[0]
            names[vid[r]] = f"h{j}:{x}:{y}"
    tris = []
    for j in range(1, k + 1):
        for t in _lattice_triangles(pts):
            tris.append([vid[uf.find((j,) + p)] for p in t])
    X = build_complex(tris, names)
    frontier = frozenset(vid[uf.find(key)] for key in uf.parent if hex_norm(key[1], key[2]) == size)
    seams = frozenset(vid[r] for r in reps if len(classes[r]) > 1)
    interior = frozenset(
        vid[r] for r in reps
        if len(classes[r]) == 1 and classes[r][0][2] > 0 and hex_norm(classes[r][0][1], classes[r][0][2]) < size
    )
    glued_b = sorted(i for i, _, _ in ((i, n, s) for n, i, s in gluings))
    base = (b_ids[1],)
    marks = {
        "b": dict(sorted(b_ids.items())),
        "glued_b": sorted(set(glued_b)),
        "seams": seams,
        "interior_lattice": interior,
        "gluings": gluings,
    }
    tags = {"flag", "chamber", "normal", "connected", "locally-6-large"}
    if k == 1:
        tags |= {"systolic"}
    return GeneratedComplex(
        X, "glued_halfplanes", (k, size), base, _radius_to_frontier(X, base, frontier), frontier,
        frozenset(tags), marks,
    )
