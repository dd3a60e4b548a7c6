"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v -s`` (or ``python tests/test_acceptance.py``)
to see the summary lines.
"""
from __future__ import annotations

import json
import os
import random
import subprocess
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
if HERE not in sys.path:
    sys.path.insert(0, HERE)

import oracles  # noqa: E402
from systolic.balls import (  # noqa: E402
    BallTower,
    elementary_contraction,
    projection,
    projection_link_sides,
    push_path,
    retraction,
)
from systolic.canonical import find_isomorphism  # noqa: E402
from systolic.chamber import chamber_report, r_condition, sphere_connectivity_sequence  # noqa: E402
from systolic.cli import run  # noqa: E402
from systolic.complex import full_subcomplex, is_full, link  # noqa: E402
from systolic.developments import (  # noqa: E402
    cayley_graph,
    cyclic_group,
    generating_sets,
    segment_development_ball,
    small_groups,
    symmetric_group,
    vertex_complement_connected,
)
from systolic.generators import flat_torus, glued_halfplanes, platonic, triangular_disk, wheel  # noqa: E402
from systolic.homology import IntegerMatrix, boundary_matrix, homology, smith_normal_form  # noqa: E402
from systolic.largeness import is_flag, is_k_large  # noqa: E402

RESULTS: dict = {}


def report(n: int, title: str, failures: list):
    ok = not failures
    line = f"criterion {n:2d} [{'PASS' if ok else 'FAIL'}] {title}"
    if failures:
        line += " -- " + "; ".join(str(f) for f in failures[:3])
    RESULTS[n] = line
    print(line, flush=True)
    assert ok, line


def check(failures, cond, msg):
    if not cond:
        failures.append(msg)


def cycle_order(X, vs):
    vs = set(vs)
    cyc = [min(vs)]
    while len(cyc) < len(vs):
        cyc.append(min(w for w in X.adjacency[cyc[-1]] if w in vs and w not in cyc))
    return cyc


def test_criterion_01_largeness_suite():
    f = []
    for name in ("octahedron", "icosahedron"):
        X = platonic(name).complex
        rep = is_k_large(X, 6)
        check(f, oracles.is_flag(X) and rep.is_flag, f"{name} should be flag")
        check(f, not rep.is_k_large, f"{name} should not be 6-large")
        cyc = rep.offending_cycle
        check(f, cyc is not None and cyc in oracles.chordless_cycles(X, 5), f"{name} witness {cyc} not an induced cycle")
    tet = is_flag(platonic("tetra_boundary").complex)
    check(f, not tet.is_flag and tet.offending_clique == (0, 1, 2, 3), "tetra_boundary should fail flagness")
    report(1, "sphere corpus: flag spheres are not 6-large (induced-cycle witnesses), tetrahedron not flag", f)


def test_criterion_02_full_subcomplexes_and_links():
    f = []
    rng = random.Random(2024)
    for g in (flat_torus(7), wheel(6), triangular_disk(4)):
        X = g.complex
        check(f, is_k_large(X, 6).is_k_large, f"{g.label} not 6-large")
        for _ in range(200):
            V = rng.sample(X.vertices, rng.randint(1, len(X.vertices)))
            Y = full_subcomplex(X, V)
            if not is_k_large(Y, 6).is_k_large:
                f.append(f"{g.label}: full subcomplex on {sorted(V)} not 6-large")
                break
        for s in X.sorted_simplices:
            L = link(X, s)
            if not L.is_empty and not is_k_large(L, 6).is_k_large:
                f.append(f"{g.label}: link of {s} not 6-large")
                break
    report(2, "200 random full subcomplexes and all links of 6-large complexes are 6-large", f)


def _oracle_sides(X, simplices, by_vertex, ball_i, sphere_i, tau, rho):
    # link by definition, over the simplices through tau
    ts = set(tau)
    L = {s for s in simplices if not ts & set(s) and tuple(sorted(ts | set(s))) in X.simplices}
    lhs_ball = L & ball_i
    lhs_sphere = L & sphere_i
    # B_1(rho, L): every simplex of L lying in a simplex of L that meets rho, plus faces of rho
    rs = set(rho)
    meets = [t for t in L if rs & set(t)]
    rhs_ball = {s for s in L if any(set(s) <= set(t) for t in meets)} | {s for s in L if set(s) <= rs}
    near = {s[0] for s in rhs_ball if len(s) == 1}
    dist1 = near - rs
    rhs_sphere = {s for s in rhs_ball if set(s) <= dist1}
    return lhs_ball, rhs_ball, lhs_sphere, rhs_sphere


def test_criterion_03_balls_spheres_projection():
    f = []
    for g in (triangular_disk(5), flat_torus(9)):
        X = g.complex
        simplices = list(X.simplices)
        for v in X.vertices:
            T = BallTower(X, (v,), g.safe_radius + 1)
            dist = oracles.distances(X, [v])
            for i in range(g.safe_radius + 1):
                ball_i = oracles.ball_fast(X, (v,), i)
                sphere_i = {s for s in ball_i if all(dist[u] == i for u in s)}
                B, S = T.ball(i), T.sphere(i)
                check(f, B.simplices == ball_i, f"{g.label} B_{i}({v}) differs from oracle")
                check(f, S.simplices == sphere_i, f"{g.label} S_{i}({v}) differs from oracle")
                for Z, nm in ((B, "B"), (S, "S")):
                    check(f, is_full(X, Z), f"{g.label} {nm}_{i}({v}) not full")
                    check(f, is_k_large(Z, 6).is_k_large, f"{g.label} {nm}_{i}({v}) not 6-large")
                if i == 0:
                    continue
                for tau in S.sorted_simplices:
                    try:
                        rho, (lb, rb), (ls, rs) = projection_link_sides(X, T, tau)
                    except Exception as exc:  # noqa: BLE001
                        f.append(f"{g.label} projection of {tau} failed: {exc}")
                        continue
                    olb, orb, ols, ors = _oracle_sides(X, simplices, None, ball_i, sphere_i, tau, rho)
                    check(f, rho in X.simplices and rho in T.sphere(i - 1).simplices, f"rho {rho} not a simplex")
                    check(f, lb.simplices == olb and rb.simplices == orb, f"{g.label} ball sides differ at {tau}")
                    check(f, ls.simplices == ols and rs.simplices == ors, f"{g.label} sphere sides differ at {tau}")
                    check(f, olb == orb and ols == ors, f"{g.label} link-ball identity fails at {tau} (oracle)")
    report(3, "balls/spheres full and 6-large; projections are simplices; link-ball identities hold", f)


def test_criterion_04_retractions():
    f = []
    cases = [(triangular_disk(5), [0, 7, 20]), (flat_torus(9), [0, 40])]
    for g, bases in cases:
        X = g.complex
        for v in bases:
            T = BallTower(X, (v,), g.safe_radius + 1)
            top = g.safe_radius if g.name == "triangular_disk" else g.safe_radius
            for i in range(0, top):
                try:
                    pi = elementary_contraction(X, T, i)
                except Exception as exc:  # noqa: BLE001
                    f.append(f"{g.label} contraction {i} at {v}: {exc}")
                    continue
                check(f, pi.is_simplicial(), f"{g.label} pi_{i} not simplicial")
                check(f, pi.fixes(T.ball(i)), f"{g.label} pi_{i} moves B_{i}")
                outer = full_subcomplex(T.ball(i + 1), [u for u in T.ball(i + 1).vertices if T.distance[u] >= i])
                check(f, pi.maps_into(outer, T.sphere(i)), f"{g.label} pi_{i} leaves S_{i}")
                dom, cod, vmap = pi.on_barycenters()
                check(f, all(tuple(sorted({vmap[b] for b in s})) in cod.complex.simplices
                             for s in dom.complex.simplices), f"{g.label} pi_{i} not simplicial on subdivisions")
                for j in range(i + 1, top + 1):
                    P = retraction(X, T, i, j)
                    check(f, P.fixes(T.ball(i)), f"{g.label} P_{i},{j} not identity on B_{i}")
    X = triangular_disk(5).complex
    T = BallTower(X, (0,))
    cyc = cycle_order(X, T.vertices_at(2))
    pushed = push_path(X, T, 1, cyc + [cyc[0]])
    walk = pushed.vertices
    check(f, len(cyc) == 12, "S_2 is not a 12-cycle")
    check(f, walk[0] == walk[-1], "pushed path is not closed")
    check(f, set(walk) <= set(T.vertices_at(1)), "pushed path leaves S_1")
    check(f, all(a == b or (min(a, b), max(a, b)) in T.sphere(1).simplices for a, b in zip(walk, walk[1:])),
          "pushed path is not a walk")
    report(4, "elementary contractions simplicial, fix B_i, land in S_i; P restricts to identity; S_2 pushes to closed walk", f)


def test_criterion_05_small_balls_isomorphic():
    f = []
    torus, disk = flat_torus(7).complex, triangular_disk(5).complex
    ref = BallTower(disk, (0,), 2).ball(2)
    for v in torus.vertices:
        B = BallTower(torus, (v,), 2).ball(2)
        phi = find_isomorphism(B, ref, {v: 0}, {0: 0})
        if phi is None:
            f.append(f"B_2({v}) in the torus is not isomorphic to the lattice ball")
        elif not oracles.complexes_isomorphic(B, ref):
            f.append(f"networkx disagrees at {v}")
    report(5, "B_2(v) in flat_torus(7) is isomorphic to B_2 in triangular_disk(5) (canonical labelling)", f)


def test_criterion_06_spheres_in_lattice():
    f = []
    g = triangular_disk(5)
    X = g.complex
    T = BallTower(X, g.base)
    for k in range(1, g.safe_radius + 1):
        S, S_next = T.sphere(k), T.sphere(k + 1)
        rep = chamber_report(S)
        check(f, rep.is_chamber and rep.thick and rep.chamber_dimension == 1, f"S_{k} is not a 1-dim chamber complex")
        for e in S.simplices_of_dim(1):
            ext = [w for w in S_next.vertices if tuple(sorted(e + (w,))) in X.simplices]
            check(f, bool(ext), f"edge {e} of S_{k} does not extend into S_{k + 1}")
    seq = sphere_connectivity_sequence(X, T, g.safe_radius)
    check(f, seq.sizes == [6 * k for k in seq.radii], f"sphere sizes {seq.sizes}")
    check(f, seq.component_counts == [1] * g.safe_radius, f"sphere components {seq.component_counts}")
    interior = [v for v in X.vertices if v not in g.frontier]
    bad = [v for v in interior if not r_condition(X, v).holds]
    check(f, not bad, f"R fails at interior vertices {bad}")
    report(6, "lattice spheres: 1-dim chamber complexes, extend outward, sizes 6k, connected; R at interior vertices", f)


def test_criterion_07_halfplane_counterexample():
    f = []
    g = glued_halfplanes(3, 8)
    X = g.complex
    failing = {v for v in X.vertices if not r_condition(X, v).holds}
    b = g.marks["b"]
    glued_b = {b[i] for i in g.marks["glued_b"]}
    check(f, glued_b <= failing, "R holds at a glued b_i")
    check(f, not failing & g.marks["interior_lattice"], "R fails at an interior lattice vertex")
    expected = {v for v in b.values() if v in failing} | glued_b
    extra = sorted(X.name(v) for v in failing - expected)
    check(f, not extra, f"R also fails off the b_i at {len(extra)} seam vertices, e.g. {extra[:4]}")
    T = BallTower(X, (b[2],), 2)
    ends = [X.name(w) for w in sorted(X.adjacency[b[1]]) if T.distance[w] == 1]
    out, code = run(["lift", "gen:glued_halfplanes:3:8", "--base", "b2", "--k", "1",
                     f"--path={ends[0]},b1,{ends[-1]}", "--json"])
    rep = json.loads(out)
    check(f, code == 1 and rep.get("failing_vertex", "").startswith("b"), f"lift exit {code}, report {rep}")
    report(7, "half-plane gluing: R fails exactly at the b_i, never at interior lattice vertices; lift exits 1 naming b_i", f)


def test_criterion_08_homology_oracle():
    f = []
    H = homology(platonic("octahedron").complex)
    check(f, (H.group(0), H.group(1), H.group(2)) == ("0", "0", "Z"), f"octahedron {H.as_dict()}")
    H = homology(flat_torus(7).complex)
    check(f, (H.group(0), H.group(1), H.group(2)) == ("0", "Z^2", "Z"), f"torus {H.as_dict()}")
    S2 = BallTower(triangular_disk(4).complex, (0,), 2).sphere(2)
    check(f, homology(S2).group(1) == "Z", "lattice S_2 H1")
    corpus = [platonic(n).complex for n in ("tetra_boundary", "octahedron", "icosahedron")]
    corpus += [flat_torus(7).complex, triangular_disk(4).complex, wheel(6).complex, glued_halfplanes(2, 4).complex]
    for X in corpus:
        for q in range(X.dimension + 1):
            if not (boundary_matrix(X, q) @ boundary_matrix(X, q + 1)).is_zero():
                f.append(f"boundary squared nonzero in degree {q}")
    rng = random.Random(8)
    for _ in range(50):
        rows = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(6)]
        M = IntegerMatrix.from_rows(rows)
        F = smith_normal_form(M, keep_transforms=True)
        check(f, F.verify(M), f"SNF transforms fail on {rows}")
        check(f, F.diagonal == oracles.sympy_invariant_factors(rows), f"SNF diagonal differs from sympy on {rows}")
    report(8, "homology of octahedron, torus, lattice sphere; boundary squared zero; SNF re-multiplication", f)


def _ends(spec):
    out, code = run(["ends", spec, "--json"])
    return json.loads(out), code


def test_criterion_09_ends_probe():
    f = []
    rep, code = _ends("gen:triangular_disk:6")
    counts = [r["complement_components"] for r in rep["table"] if r["k"] <= rep["safe_radius"]]
    check(f, code == 0 and counts == [1] * len(counts) and len(counts) == 6, f"lattice {counts}")
    rep, _ = _ends("gen:segment_development_ball:Z2:Z2:6")
    counts = {r["k"]: r["complement_components"] for r in rep["table"]}
    check(f, all(counts[k] == 2 for k in range(1, 6)), f"Z2*Z2 {counts}")
    rep, _ = _ends("gen:segment_development_ball:Z2:Z3:5")
    seq = [r["complement_components"] for r in rep["table"]]
    check(f, all(a < b for a, b in zip(seq, seq[1:])), f"Z2*Z3 {seq}")
    report(9, "ends: lattice one end, Z2*Z2 tree two ends, Z2*Z3 tree growing", f)


def test_criterion_10_cayley_and_trees():
    f = []
    graphs = 0
    for G in small_groups(12):
        for S in generating_sets(G):
            C = cayley_graph(G, S)
            graphs += 1
            for v in C.vertices:
                if not vertex_complement_connected(C, v):
                    f.append(f"{G.name} S={S} v={v}")
    check(f, graphs > 0, "no Cayley graphs enumerated")
    pairs = [(cyclic_group(2), cyclic_group(2), 6), (cyclic_group(2), cyclic_group(3), 5),
             (cyclic_group(3), symmetric_group(3), 3), (cyclic_group(4), cyclic_group(5), 3)]
    for G1, G2, r in pairs:
        g = segment_development_ball(G1, G2, r)
        X = g.complex
        nv, ne = X.f_vector
        check(f, ne == nv - 1 and len(oracles.chordless_cycles(X, nv)) == 0 and X.dimension == 1, f"{g.label} not a tree")
        rep = chamber_report(X)
        check(f, rep.is_chamber and rep.chamber_dimension == 1 and rep.gallery_connected, f"{g.label} not a chamber complex")
    report(10, f"vertex complements connected in all {graphs} connected Cayley graphs (order <= 12); tree balls are 1-dim chamber trees", f)


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run([sys.executable, "-m", "systolic", *args], capture_output=True, env=env)
    return proc.returncode, proc.stdout


def test_criterion_11_determinism():
    f = []
    commands = [
        ["generate", "triangular_disk", "3"],
        ["generate", "flat_torus", "7"],
        ["generate", "glued_halfplanes", "3", "5"],
        ["generate", "segment_development_ball", "Z2", "Z3", "4"],
        ["check", "gen:platonic:icosahedron", "--json"],
        ["sphere", "gen:triangular_disk:4", "--radius", "2", "--emit", "dot", "--json"],
        ["ends", "gen:segment_development_ball:Z2:Z3:4", "--json"],
        ["lift", "gen:triangular_disk:4", "--k", "1", "--path=-1:1,0:1,1:0,1:-1,0:-1,-1:0,-1:1", "--json"],
    ]
    for args in commands:
        a, b = _cli(args, 1), _cli(args, 987)
        check(f, a == b and a[1], f"{' '.join(args)} differs between runs")
    report(11, "byte-identical generator output and reports across runs (different hash seeds)", f)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
