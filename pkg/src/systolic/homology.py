"""Integer simplicial homology via Smith normal form.

All arithmetic is on Python integers, so there is no overflow no matter how
entries grow during elimination.  Homology is reduced throughout: degree 0
uses the augmentation ``C_0 -> Z`` as its boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex import SimplicialComplex
from . import kernels


class IntegerMatrix:
    """Dense integer matrix stored as a list of row lists."""

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        self.data = [list(map(int, r)) for r in data]
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise ValueError("matrix data does not match its shape")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    def copy(self):
        return IntegerMatrix(self.rows, self.cols, self.data)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.data]
        return IntegerMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.data == other.data and self.shape == other.shape

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols})"


def boundary_matrix(X: SimplicialComplex, q: int) -> IntegerMatrix:
    """Matrix of the boundary map from q-chains to (q-1)-chains.

    Bases are the simplices of each dimension in lexicographic order and
    the face omitting position ``j`` gets sign ``(-1)**j``.  For ``q = 0``
    this is the augmentation row of ones.
    """
    cols = X.simplices_of_dim(q)
    if q == 0:
        return IntegerMatrix(1, len(cols), [[1] * len(cols)])
    rows = X.simplices_of_dim(q - 1)
    index = {s: i for i, s in enumerate(rows)}
    M = IntegerMatrix(len(rows), len(cols))
    for j, s in enumerate(cols):
        for k in range(len(s)):
            M.data[index[s[:k] + s[k + 1:]]][j] = -1 if k % 2 else 1
    return M


@dataclass
class SmithForm:
    """``left @ M @ right == D`` with ``D`` diagonal; transforms kept only on request."""

    diagonal: list
    rank: int
    shape: tuple
    left: Optional[IntegerMatrix] = None
    right: Optional[IntegerMatrix] = None

    def diagonal_matrix(self) -> IntegerMatrix:
        m, n = self.shape
        D = IntegerMatrix(m, n)
        for i, d in enumerate(self.diagonal):
            D.data[i][i] = d
        return D

    def verify(self, M: IntegerMatrix) -> bool:
        if self.left is None or self.right is None:
            raise ValueError("transforms were not kept")
        divides = all(b % a == 0 for a, b in zip(self.diagonal, self.diagonal[1:]))
        positive = all(d > 0 for d in self.diagonal)
        return divides and positive and (self.left @ M @ self.right) == self.diagonal_matrix()


def _unit_pivot_eliminate(M: IntegerMatrix):
    """Sparsely eliminate unit pivots; return (number eliminated, dense remainder rows).

    With a pivot ``+-1`` at ``(r, c)`` every other entry of column ``c`` is
    cleared by row operations, after which column operations clear row ``r``
    without touching any other row; so row ``r`` and column ``c`` simply drop
    out and contribute an invariant factor 1.
    """
    rows = {i: {j: a for j, a in enumerate(r) if a} for i, r in enumerate(M.data)}
    rows = {i: r for i, r in rows.items() if r}
    col_rows: dict = {}
    for i, r in rows.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)
    units = 0
    while True:
        pick = None
        for i, r in rows.items():
            if pick is not None and len(r) >= pick[0]:
                continue
            for j, a in r.items():
                if a == 1 or a == -1:
                    if pick is None or (len(r), len(col_rows[j])) < pick[:2]:
                        pick = (len(r), len(col_rows[j]), i, j)
            if pick is not None and pick[0] == 1:
                break
        if pick is None:
            break
        _, _, pi, pj = pick
        prow = rows.pop(pi)
        p = prow[pj]
        for j in prow:
            col_rows[j].discard(pi)
        for i in sorted(col_rows[pj]):
            r = rows[i]
            c = r[pj] * p  # r -= c * prow
            for j, a in prow.items():
                v = r.get(j, 0) - c * a
                if v:
                    if j not in r:
                        col_rows[j].add(i)
                    r[j] = v
                else:
                    if j in r:
                        del r[j]
                        col_rows[j].discard(i)
            if not r:
                del rows[i]
        del col_rows[pj]
        units += 1
    cols = sorted({j for r in rows.values() for j in r})
    cidx = {j: k for k, j in enumerate(cols)}
    dense = []
    for i in sorted(rows):
        line = [0] * len(cols)
        for j, a in rows[i].items():
            line[cidx[j]] = a
        dense.append(line)
    return units, dense, len(cols)


def smith_normal_form(M: IntegerMatrix, keep_transforms: bool = False) -> SmithForm:
    """Smith normal form ``D = U M V`` with ``d_1 | d_2 | ...`` all positive.

    Without transforms, unit pivots are first eliminated sparsely (the usual
    case for boundary matrices); the remainder goes through the dense loop.
    """
    if not keep_transforms:
        units, rest, ncols = _unit_pivot_eliminate(M)
        tail = _dense_snf(IntegerMatrix(len(rest), ncols, rest), False) if rest else None
        diagonal = [1] * units + (tail.diagonal if tail else [])
        return SmithForm(diagonal=diagonal, rank=len(diagonal), shape=(M.rows, M.cols))
    return _dense_snf(M, True)


def _dense_snf(M: IntegerMatrix, keep_transforms: bool) -> SmithForm:
    m, n = M.rows, M.cols
    A = [list(r) for r in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)] if keep_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if keep_transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        rs, rd = A[src], A[dst]
        for k in range(n):
            if rs[k]:
                rd[k] += c * rs[k]
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(m):
                if us[k]:
                    ud[k] += c * us[k]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in A:
            if row[src]:
                row[dst] += c * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += c * row[src]

    diagonal = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived; make it the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            if p == 1 or p == -1:
                break
            bad = next((i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
        diagonal.append(A[t][t])
        t += 1
    return SmithForm(
        diagonal=diagonal,
        rank=len(diagonal),
        shape=(m, n),
        left=IntegerMatrix(m, m, U) if U is not None else None,
        right=IntegerMatrix(n, n, V) if V is not None else None,
    )


@dataclass
class HomologyProfile:
    """Reduced integral homology: ``betti[q]`` and ``torsion[q]`` for degrees 0..dim."""

    betti: tuple
    torsion: tuple
    chain_ranks: tuple = field(default=())

    def group(self, q: int) -> str:
        if q < 0 or q >= len(self.betti):
            return "0"
        parts = []
        b = self.betti[q]
        if b:
            parts.append("Z" if b == 1 else f"Z^{b}")
        parts += [f"Z/{d}" for d in self.torsion[q]]
        return " + ".join(parts) if parts else "0"

    def is_trivial(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    @property
    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic recovered from the reduced Betti numbers."""
        return 1 + sum((-1) ** q * b for q, b in enumerate(self.betti))

    def as_dict(self) -> dict:
        return {f"H{q}": {"betti": self.betti[q], "torsion": list(self.torsion[q])} for q in range(len(self.betti))}


def homology(X: SimplicialComplex) -> HomologyProfile:
    if X.is_empty:
        raise ValueError("homology of the empty complex is not supported")
    top = X.dimension
    forms = [smith_normal_form(boundary_matrix(X, q)) for q in range(top + 2)]
    betti, torsion = [], []
    for q in range(top + 1):
        nq = len(X.simplices_of_dim(q))
        betti.append(nq - forms[q].rank - forms[q + 1].rank)
        torsion.append(tuple(d for d in forms[q + 1].diagonal if d > 1))
    return HomologyProfile(tuple(betti), tuple(torsion), X.f_vector)


def first_homology(X: SimplicialComplex) -> tuple:
    """``(betti_1, torsion_1)`` without computing higher degrees."""
    if X.dimension < 1:
        return 0, ()
    n1 = len(X.simplices_of_dim(1))
    r1 = smith_normal_form(boundary_matrix(X, 1)).rank
    f2 = smith_normal_form(boundary_matrix(X, 2))
    return n1 - r1 - f2.rank, tuple(d for d in f2.diagonal if d > 1)


def components(X: SimplicialComplex) -> list:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    order, _, indptr, indices = X.csr()
    if not order:
        return []
    labels = kernels.component_labels(indptr, indices)
    groups: dict = {}
    for v, lab in zip(order, labels):
        groups.setdefault(int(lab), []).append(v)
    return [tuple(groups[k]) for k in sorted(groups)]


def is_connected(X: SimplicialComplex) -> bool:
    return len(components(X)) == 1
