"""Smith normal form over the integers and its uses on presentations.

Python integers are unbounded, so no intermediate value can wrap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation, Word

Matrix = list[list[int]]


@dataclass(frozen=True)
class SnfResult:
    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def smith_normal_form(a: Sequence[Sequence[int]], cols: int | None = None) -> SnfResult:
    """Return ``U, D, V`` with ``U a V = D`` diagonal, ``d_1 | d_2 | ...``, entries >= 0.

    ``cols`` fixes the width when ``a`` has no rows.
    """
    m = len(a)
    n = len(a[0]) if m else (cols or 0)
    A = [[int(x) for x in row] for row in a]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        if q:
            A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        if q:
            for row in A:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        done = False
            if done:
                # enforce divisibility of the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SnfResult(U, A, V)


def exponent_matrix(p: Presentation) -> Matrix:
    col = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for name, e in r:
            row[col[name]] += e
        rows.append(row)
    return rows


def exponent_vector(p: Presentation, w: Word) -> list[int]:
    col = {g: j for j, g in enumerate(p.generators)}
    v = [0] * len(p.generators)
    for name, e in w:
        if name not in col:
            raise ValueError(f"generator {name!r} not in presentation")
        v[col[name]] += e
    return v


@dataclass(frozen=True)
class AbelianGroup:
    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianGroup:
    res = smith_normal_form(exponent_matrix(p), cols=len(p.generators))
    diag = res.diagonal
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroup(torsion, len(p.generators) - res.rank)


def in_row_lattice(p: Presentation, w: Word, res: SnfResult | None = None) -> bool:
    """Whether the exponent vector of ``w`` is an integer combination of relator rows."""
    if res is None:
        res = smith_normal_form(exponent_matrix(p), cols=len(p.generators))
    v = exponent_vector(p, w)
    # v = x A  <=>  v V = (x U^-1) D
    vv = [sum(v[k] * res.V[k][j] for k in range(len(v))) for j in range(len(v))]
    diag = res.diagonal
    for j, x in enumerate(vv):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            if x:
                return False
        elif x % d:
            return False
    return True


def abelian_consequence_check(p: Presentation, claimed: Sequence[Word]) -> list[bool]:
    res = smith_normal_form(exponent_matrix(p), cols=len(p.generators))
    return [in_row_lattice(p, w, res) for w in claimed]
