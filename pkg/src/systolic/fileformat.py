"""The ``scx 1`` text format.

::

    scx 1
    # comments run to the end of the line
    @base c
    @safe_radius 3
    a b c
    c d

One maximal simplex per line, as whitespace-separated vertex names.
Vertex ids are assigned in natural name order, so reading is independent of
line order and writing is byte-deterministic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .complex import SimplicialComplex, build_complex
from .errors import MalformedInputError

HEADER = "scx 1"
_TOKEN = re.compile(r"(\d+)")
_BAD_NAME = re.compile(r"[\s#]|^@")


def natural_key(name: str) -> tuple:
    """Sort key treating digit runs as integers (``v2 < v10``)."""
    return tuple((0, int(t), "") if t.isdigit() else (1, 0, t) for t in _TOKEN.split(name) if t)


@dataclass(frozen=True)
class ComplexFile:
    complex: SimplicialComplex
    base: Optional[tuple] = None  # vertex ids
    safe_radius: Optional[int] = None


def named_simplices(X: SimplicialComplex) -> frozenset:
    """The simplex set with vertices replaced by names: equality up to relabelling ids."""
    return frozenset(frozenset(X.name(v) for v in s) for s in X.simplices)


def parse(text: str) -> ComplexFile:
    lines = text.splitlines()
    body = []
    header_seen = False
    meta: dict = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line.split() != HEADER.split():
                raise MalformedInputError(f"line {lineno}: expected header {HEADER!r}, got {line!r}")
            header_seen = True
            continue
        if line.startswith("@"):
            key, _, value = line.partition(" ")
            key = key[1:]
            if key not in ("base", "safe_radius"):
                raise MalformedInputError(f"line {lineno}: unknown directive @{key}")
            if key in meta:
                raise MalformedInputError(f"line {lineno}: duplicate @{key}")
            meta[key] = (lineno, value.split())
            continue
        toks = line.split()
        if len(set(toks)) != len(toks):
            raise MalformedInputError(f"line {lineno}: repeated vertex in simplex {toks}")
        body.append(toks)
    if not header_seen:
        raise MalformedInputError("empty input: missing 'scx 1' header")
    if not body:
        raise MalformedInputError("no simplices")
    names = sorted({t for toks in body for t in toks}, key=natural_key)
    vid = {n: i for i, n in enumerate(names)}
    X = build_complex(([vid[t] for t in toks] for toks in body), {i: n for n, i in vid.items()})
    base = None
    if "base" in meta:
        lineno, toks = meta["base"]
        try:
            base = tuple(sorted(vid[t] for t in toks))
        except KeyError as exc:
            raise MalformedInputError(f"line {lineno}: @base names unknown vertex {exc.args[0]}") from None
        if not toks or base not in X.simplices:
            raise MalformedInputError(f"line {lineno}: @base is not a simplex")
    radius = None
    if "safe_radius" in meta:
        lineno, toks = meta["safe_radius"]
        if len(toks) != 1 or not toks[0].isdigit():
            raise MalformedInputError(f"line {lineno}: @safe_radius needs one non-negative integer")
        radius = int(toks[0])
    return ComplexFile(X, base, radius)


def read(path) -> ComplexFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from None


def serialize(X: SimplicialComplex, base=None, safe_radius: Optional[int] = None, comment: Optional[str] = None) -> str:
    for v in X.vertices:
        if _BAD_NAME.search(X.name(v)) or not X.name(v):
            raise MalformedInputError(f"vertex name {X.name(v)!r} cannot be written")
    if len({X.name(v) for v in X.vertices}) != len(X.vertices):
        raise MalformedInputError("vertex names are not unique")
    out = [HEADER]
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    if base is not None:
        out.append("@base " + " ".join(sorted((X.name(v) for v in base), key=natural_key)))
    if safe_radius is not None:
        out.append(f"@safe_radius {int(safe_radius)}")
    rows = sorted(sorted((X.name(v) for v in m), key=natural_key) for m in X.maximal_simplices)
    rows.sort(key=lambda r: (-len(r), [natural_key(n) for n in r]))
    out.extend(" ".join(r) for r in rows)
    return "\n".join(out) + "\n"
