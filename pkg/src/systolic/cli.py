"""Command-line front end.

Every command builds a JSON-ready report dict; ``--json`` prints it (sorted
keys, so output is byte-stable) and otherwise a plain-text rendering of the
same dict is shown.  Exit status: 0 all checks passed, 1 a check failed,
2 malformed input.

An INPUT is either a path to an ``scx 1`` file or a generator spec such as
``gen:triangular_disk:4`` or ``gen:segment_development_ball:Z2:Z3:5``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import developments, fileformat, generators
from .balls import BallTower
from .chamber import chamber_report, lift_path
from .complex import SimplicialComplex, complement_subcomplex, fullness_witness
from .errors import (
    ChamberStructureError,
    MalformedInputError,
    NotASimplexError,
    RConditionViolation,
    SystolicityViolation,
)
from .homology import components, homology
from .largeness import check_systolic, is_flag, is_k_large, is_locally_k_large

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2


class CliError(Exception):
    def __init__(self, message, code=EXIT_MALFORMED, report=None):
        self.code = code
        self.report = report
        super().__init__(message)


# -- generator registry --------------------------------------------------

def parse_group(token: str) -> developments.FiniteGroupTable:
    m = re.fullmatch(r"(Z|S|D|A|Dic)(\d+)|(Q8)", token)
    if not m:
        raise MalformedInputError(f"unknown group {token!r} (use Zn, Sn, Dn, A4, Q8, Dicn)")
    if m.group(3):
        return developments.quaternion_group()
    kind, n = m.group(1), int(m.group(2))
    try:
        return {
            "Z": developments.cyclic_group,
            "S": developments.symmetric_group,
            "D": developments.dihedral_group,
            "A": developments.alternating_group,
            "Dic": developments.dicyclic_group,
        }[kind](n)
    except (ValueError, TypeError) as exc:
        raise MalformedInputError(str(exc)) from None


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInputError(f"expected an integer parameter, got {token!r}") from None


GENERATORS = {
    "triangular_disk": ((_int,), generators.triangular_disk),
    "flat_torus": ((_int,), generators.flat_torus),
    "platonic": ((str,), generators.platonic),
    "wheel": ((_int,), generators.wheel),
    "glued_halfplanes": ((_int, _int), generators.glued_halfplanes),
    "segment_development_ball": ((parse_group, parse_group, _int), developments.segment_development_ball),
}


def generate(name: str, params) -> generators.GeneratedComplex:
    if name not in GENERATORS:
        raise MalformedInputError(f"unknown generator {name!r}; known: {', '.join(sorted(GENERATORS))}")
    parsers, fn = GENERATORS[name]
    params = list(params)
    if len(params) != len(parsers):
        raise MalformedInputError(f"{name} takes {len(parsers)} parameter(s), got {len(params)}")
    return fn(*(p(x) for p, x in zip(parsers, params)))


@dataclass
class Loaded:
    complex: SimplicialComplex
    base: Optional[tuple]
    safe_radius: Optional[int]
    source: str


def load(spec: str) -> Loaded:
    if spec.startswith("gen:"):
        name, *params = spec[4:].split(":")
        g = generate(name, params)
        return Loaded(g.complex, g.base, g.safe_radius, spec)
    cf = fileformat.read(spec)
    return Loaded(cf.complex, cf.base, cf.safe_radius, spec)


def resolve_base(X: SimplicialComplex, loaded: Loaded, text: Optional[str]) -> tuple:
    if text is None:
        if loaded.base is not None:
            return loaded.base
        return (X.vertices[0],)
    try:
        sigma = tuple(sorted(X.vertex_id(n) for n in text.replace(",", " ").split()))
    except NotASimplexError as exc:
        raise CliError(f"base vertex {exc.simplex[0]!r} not in complex") from None
    if not sigma or sigma not in X.simplices:
        raise CliError(f"base {text!r} is not a simplex of the complex")
    return sigma


def names(X, vs):
    return None if vs is None else [X.name(v) for v in vs]


# -- commands ------------------------------------------------------------

def cmd_check(args) -> tuple:
    L = load(args.input)
    X = L.complex
    k = args.k
    if k < 4:
        raise CliError("-k must be at least 4")
    flag = is_flag(X)
    large = is_k_large(X, k)
    local = is_locally_k_large(X, k)
    verdict = check_systolic(X, budget=args.systolic_budget)
    chamber = chamber_report(X)
    report = {
        "command": "check",
        "input": L.source,
        "vertices": len(X.vertices),
        "f_vector": list(X.f_vector),
        "k": k,
        "flag": {"holds": flag.is_flag, "witness_clique": names(X, flag.offending_clique)},
        "is_k_large": {
            "holds": large.is_k_large,
            "witness_cycle": names(X, large.offending_cycle),
            "witness_clique": names(X, large.offending_clique),
        },
        "locally_k_large": {
            "holds": local.holds,
            "witness_simplex": names(X, local.failing_simplex),
            "witness_link_cycle": names(X, local.failing_report.offending_cycle) if local.failing_report else None,
            "witness_link_clique": names(X, local.failing_report.offending_clique) if local.failing_report else None,
        },
        "chamber": chamber.as_dict(X),
        "systolic": verdict.as_dict(X),
    }
    ok = flag.is_flag and large.is_k_large and local.holds and verdict.verified
    report["passed"] = ok
    return report, EXIT_OK if ok else EXIT_FAIL


def _tower(X, base, radius):
    try:
        return BallTower(X, base, radius + 1)
    except SystolicityViolation as exc:
        raise CliError(str(exc), EXIT_FAIL, {"error": str(exc), "witness": names(X, exc.witness)}) from None


def _export(S: SimplicialComplex, fmt: str):
    if fmt == "json":
        return {
            "vertices": [S.name(v) for v in S.vertices],
            "simplices": sorted(sorted(S.name(v) for v in s) for s in S.simplices),
        }
    lines = ["graph sphere {"]
    lines += [f'  "{S.name(v)}";' for v in S.vertices]
    lines += [f'  "{S.name(a)}" -- "{S.name(b)}";' for a, b in S.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_sphere(args) -> tuple:
    L = load(args.input)
    X = L.complex
    base = resolve_base(X, L, args.base)
    k = args.radius
    if k < 0:
        raise CliError("--radius must be non-negative")
    T = _tower(X, base, k)
    S, B = T.sphere(k), T.ball(k)
    report = {
        "command": "sphere",
        "input": L.source,
        "base": names(X, base),
        "radius": k,
        "safe_radius": L.safe_radius,
        "beyond_safe_radius": L.safe_radius is not None and k > L.safe_radius,
        "vertices": names(X, S.vertices),
        "f_vector": list(S.f_vector),
    }
    if S.is_empty:
        report.update(empty=True, passed=True)
        return report, EXIT_OK
    fw_x, fw_b = fullness_witness(X, S), fullness_witness(B, S)
    large = is_k_large(S, 6)
    H = homology(S)
    report.update(
        empty=False,
        components=[names(X, c) for c in components(S)],
        full_in_complex={"holds": fw_x is None, "witness": names(X, fw_x)},
        full_in_ball={"holds": fw_b is None, "witness": names(X, fw_b)},
        six_large={"holds": large.is_k_large, "witness_cycle": names(X, large.offending_cycle),
                   "witness_clique": names(X, large.offending_clique)},
        chamber=chamber_report(S).as_dict(X),
        homology={"H0": H.group(0), "H1": H.group(1), "groups": H.as_dict()},
    )
    if args.emit:
        report["export"] = {"format": args.emit, "data": _export(S, args.emit)}
    ok = fw_x is None and fw_b is None and large.is_k_large
    report["passed"] = ok
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_ends(args) -> tuple:
    L = load(args.input)
    X = L.complex
    base = resolve_base(X, L, args.base)
    kmax = args.kmax if args.kmax is not None else (L.safe_radius if L.safe_radius is not None else 3)
    if kmax < 0:
        raise CliError("--kmax must be non-negative")
    T = _tower(X, base, kmax)
    rows = []
    for k in range(kmax + 1):
        rest = complement_subcomplex(X, T.ball(k))
        rows.append({
            "k": k,
            "complement_components": len(components(rest)) if not rest.is_empty else 0,
            "complement_vertices": len(rest.vertices),
            "sphere_vertices": len(T.vertices_at(k)),
            "beyond_safe_radius": L.safe_radius is not None and k > L.safe_radius,
        })
    report = {
        "command": "ends",
        "input": L.source,
        "base": names(X, base),
        "kmax": kmax,
        "safe_radius": L.safe_radius,
        "table": rows,
        "passed": True,
    }
    return report, EXIT_OK


def cmd_lift(args) -> tuple:
    L = load(args.input)
    X = L.complex
    base = resolve_base(X, L, args.base)
    k = args.k
    try:
        path = [X.vertex_id(n) for n in args.path.split(",") if n]
    except NotASimplexError as exc:
        raise CliError(f"path vertex {exc.simplex[0]!r} not in complex") from None
    if not path:
        raise CliError("--path is empty")
    T = _tower(X, base, k + 1)
    report = {"command": "lift", "input": L.source, "base": names(X, base), "k": k, "path": names(X, path)}
    try:
        res = lift_path(X, T, k, path)
    except RConditionViolation as exc:
        report.update(
            passed=False, error="R-condition violation", failing_vertex=X.name(exc.vertex),
            failing_simplex=names(X, exc.simplex), message=str(exc).replace(str(exc.vertex), X.name(exc.vertex)),
        )
        return report, EXIT_FAIL
    except (ChamberStructureError, SystolicityViolation) as exc:
        w = exc.witness
        report.update(passed=False, error=str(exc), witness=names(X, w) if isinstance(w, tuple) else w)
        return report, EXIT_FAIL
    except ValueError as exc:
        raise CliError(str(exc)) from None
    report.update(
        passed=True,
        closed=res.closed,
        lifted=names(X, res.vertices),
        entries=[{"vertex": X.name(e.vertex), "role": e.role, "index": e.index,
                  "projection": names(X, e.projection)} for e in res.entries],
        checks=[{"check": label, "ok": ok} for label, ok in res.checks],
    )
    return report, EXIT_OK


def cmd_generate(args) -> tuple:
    g = generate(args.name, args.params)
    text = fileformat.serialize(g.complex, g.base, g.safe_radius, comment=f"generated by systolic: {g.label}")
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        report = {"command": "generate", "generator": g.label, "output": args.output,
                  "vertices": len(g.complex.vertices), "f_vector": list(g.complex.f_vector), "passed": True}
        return report, EXIT_OK
    return text, EXIT_OK


# -- rendering -----------------------------------------------------------

def render_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    out = []
    for key in report:
        value = report[key]
        if isinstance(value, dict):
            out.append(f"{pad}{key}:")
            out.append(render_text(value, indent + 1))
        elif key == "checks":
            out.append(f"{pad}checks:")
            out.extend(f"{pad}  [{'ok' if c['ok'] else 'FAIL'}] {c['check']}" for c in value)
        elif key == "table":
            out.append(f"{pad}table:")
            out.extend(f"{pad}  " + "  ".join(f"{k}={v}" for k, v in row.items()) for row in value)
        elif isinstance(value, str) and "\n" in value:
            out.append(f"{pad}{key}:")
            out.extend(f"{pad}  {line}" for line in value.splitlines())
        else:
            out.append(f"{pad}{key}: {value}")
    return "\n".join(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="systolic", description="Checks and probes for systolic simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("input", help="scx file path or gen:NAME:PARAM:... spec")
        sp.add_argument("--json", action="store_true", help="print the machine-readable report")

    c = sub.add_parser("check", help="flag / largeness / chamber / systolicity checks")
    common(c)
    c.add_argument("-k", type=int, default=6)
    c.add_argument("--systolic-budget", type=int, default=10_000)

    s = sub.add_parser("sphere", help="the combinatorial sphere S_k around a base simplex")
    common(s)
    s.add_argument("--base")
    s.add_argument("--radius", type=int, default=1)
    s.add_argument("--emit", choices=("dot", "json"))

    e = sub.add_parser("ends", help="components of the complement of B_k for k = 0..kmax")
    common(e)
    e.add_argument("--base")
    e.add_argument("--kmax", type=int)

    li = sub.add_parser("lift", help="lift a path in S_k to S_{k+1}")
    common(li)
    li.add_argument("--base")
    li.add_argument("--k", type=int, required=True)
    li.add_argument("--path", required=True, help="comma-separated vertex names")

    g = sub.add_parser("generate", help="write a generated complex as an scx file")
    g.add_argument("name")
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.add_argument("--json", action="store_true")
    return p


COMMANDS = {"check": cmd_check, "sphere": cmd_sphere, "ends": cmd_ends, "lift": cmd_lift, "generate": cmd_generate}


def run(argv=None) -> tuple:
    """Parse ``argv`` and run the command; returns ``(output_text, exit_code)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", EXIT_MALFORMED if exc.code else EXIT_OK
    as_json = getattr(args, "json", False)
    try:
        report, code = COMMANDS[args.command](args)
    except (CliError, MalformedInputError, NotASimplexError) as exc:
        code = getattr(exc, "code", EXIT_MALFORMED)
        report = {"command": args.command, "passed": False, "error": str(exc)}
        extra = getattr(exc, "report", None)
        if extra:
            report.update(extra)
    if isinstance(report, str):
        return report, code
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n", code
    return render_text(report) + "\n", code


def main(argv=None) -> int:
    text, code = run(argv)
    stream = sys.stdout if code != EXIT_MALFORMED else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
