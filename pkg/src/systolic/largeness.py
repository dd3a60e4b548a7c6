"""Flagness, k-largeness, local k-largeness and a budgeted systolicity check."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import kernels
from .complex import SimplicialComplex, link
from .homology import components, first_homology
from .presentation import edge_path_presentation


@dataclass(frozen=True)
class LargenessReport:
    is_flag: bool
    k_tested: int
    is_k_large: bool
    offending_cycle: Optional[tuple] = None
    offending_clique: Optional[tuple] = None

    def __bool__(self):
        return self.is_k_large

    def as_dict(self, X: Optional[SimplicialComplex] = None) -> dict:
        def names(vs):
            if vs is None:
                return None
            return [X.name(v) for v in vs] if X is not None else list(vs)

        return {
            "is_flag": self.is_flag,
            "k": self.k_tested,
            "is_k_large": self.is_k_large,
            "offending_cycle": names(self.offending_cycle),
            "offending_clique": names(self.offending_clique),
        }


def non_flag_witness(X: SimplicialComplex) -> Optional[tuple]:
    """Smallest-size clique of the 1-skeleton spanning no simplex, or None.

    Every proper subset of the returned clique spans a simplex.
    """
    adj = X.adjacency
    layer = X.edges
    while layer:
        nxt = []
        for s in layer:
            common = set(adj[s[0]])
            for v in s[1:]:
                common &= adj[v]
            for w in sorted(common):
                if w <= s[-1]:
                    continue
                t = s + (w,)
                if t not in X.simplices:
                    return t
                nxt.append(t)
        layer = nxt
    return None


def is_flag(X: SimplicialComplex) -> LargenessReport:
    """Flagness, reported as 4-largeness (the two notions coincide)."""
    clique = non_flag_witness(X)
    flag = clique is None
    return LargenessReport(is_flag=flag, k_tested=4, is_k_large=flag, offending_clique=clique)


def induced_cycles(X: SimplicialComplex, lmax: int) -> list:
    """Chordless cycles of the 1-skeleton with ``4 <= length <= lmax``.

    Each cycle appears once, starting at its smallest vertex and oriented so
    the second vertex is smaller than the last.
    """
    if lmax < 3:
        raise ValueError("lmax must be at least 3")
    order, _, indptr, indices = X.csr()
    return [tuple(order[i] for i in c) for c in kernels.induced_cycles(indptr, indices, lmax)]


def first_induced_cycle(X: SimplicialComplex, lmax: int) -> Optional[tuple]:
    cycles = induced_cycles(X, lmax) if lmax >= 4 else []
    if not cycles:
        return None
    return min(cycles, key=lambda c: (len(c), c))


def is_k_large(X: SimplicialComplex, k: int) -> LargenessReport:
    if k < 4:
        raise ValueError("k must be at least 4")
    clique = non_flag_witness(X)
    if clique is not None:
        return LargenessReport(False, k, False, offending_clique=clique)
    cycle = first_induced_cycle(X, k - 1)
    return LargenessReport(True, k, cycle is None, offending_cycle=cycle)


@dataclass(frozen=True)
class LocalLargenessReport:
    holds: bool
    k: int
    simplices_checked: int
    failing_simplex: Optional[tuple] = None
    failing_report: Optional[LargenessReport] = None

    def __bool__(self):
        return self.holds


def is_locally_k_large(X: SimplicialComplex, k: int) -> LocalLargenessReport:
    """Every link of a nonempty simplex is k-large; empty links pass."""
    if k < 4:
        raise ValueError("k must be at least 4")
    checked = 0
    for sigma in X.sorted_simplices:
        L = link(X, sigma)
        checked += 1
        if L.is_empty:
            continue
        rep = is_k_large(L, k)
        if not rep.is_k_large:
            return LocalLargenessReport(False, k, checked, sigma, rep)
    return LocalLargenessReport(True, k, checked)


class Verdict(str, Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass
class SystolicVerdict:
    status: Verdict
    reason: str
    witness: Optional[object] = None
    certificate: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.status is Verdict.VERIFIED

    def as_dict(self, X: Optional[SimplicialComplex] = None) -> dict:
        w = self.witness
        if X is not None and isinstance(w, tuple):
            w = [X.name(v) for v in w]
        return {"status": self.status.value, "reason": self.reason, "witness": w, "certificate": self.certificate}


def check_systolic(X: SimplicialComplex, budget: int = 10_000) -> SystolicVerdict:
    """Three-valued test of: connected, locally 6-large and simply connected.

    Refutations carry a witness.  ``Verified`` is only returned when the
    edge-path group presentation is reduced to the trivial group within
    ``budget`` Tietze moves.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if X.is_empty:
        return SystolicVerdict(Verdict.REFUTED, "empty complex")
    comps = components(X)
    if len(comps) > 1:
        return SystolicVerdict(Verdict.REFUTED, "disconnected", witness=(comps[0][0], comps[1][0]))
    local = is_locally_k_large(X, 6)
    if not local.holds:
        rep = local.failing_report
        return SystolicVerdict(
            Verdict.REFUTED,
            "not locally 6-large",
            witness=local.failing_simplex,
            certificate={
                "link_cycle": list(rep.offending_cycle) if rep.offending_cycle else None,
                "link_clique": list(rep.offending_clique) if rep.offending_clique else None,
            },
        )
    b1, tors = first_homology(X)
    if b1 or tors:
        return SystolicVerdict(
            Verdict.REFUTED, "H1 nonzero", witness=None, certificate={"h1_rank": b1, "h1_torsion": list(tors)}
        )
    pres = edge_path_presentation(X)
    start = pres.generator_count
    outcome = pres.reduce(budget)
    cert = {"h1_rank": 0, "generators": start, "tietze_moves": pres.moves, "remaining_generators": pres.generator_count}
    if outcome == "trivial":
        return SystolicVerdict(Verdict.VERIFIED, "presentation reduced to trivial group", certificate=cert)
    return SystolicVerdict(Verdict.UNKNOWN, f"presentation reduction {outcome}", certificate=cert)
