"""Smith normal form over the integers.

Matrices are plain lists of row lists of Python ints, so entries never
overflow.  Pivots are chosen by minimal absolute value, which keeps the
intermediate entries small on the sparse boundary matrices this package
produces.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]

__all__ = ["smith_normal_form", "invariant_factors", "matmul", "identity", "rank"]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for t in range(inner):
            a = row[t]
            if a:
                brow = B[t]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += a * brow[j]
        out.append(acc)
    return out


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient, so remainders have |r| <= |b|/2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


class _Reducer:
    def __init__(self, M: Sequence[Sequence[int]], track: bool):
        self.A = [list(map(int, row)) for row in M]
        self.m = len(self.A)
        self.n = len(self.A[0]) if self.m else 0
        self.track = track
        if track:
            self.U = identity(self.m)
            self.V = identity(self.n)

    # Row operations act on U from the left, column operations on V from the right.
    def swap_rows(self, i, j):
        if i != j:
            self.A[i], self.A[j] = self.A[j], self.A[i]
            if self.track:
                self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.A:
                row[i], row[j] = row[j], row[i]
            if self.track:
                for row in self.V:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, src, dst, q):
        """row[dst] += q * row[src]"""
        if q:
            a, b = self.A[src], self.A[dst]
            for j in range(self.n):
                if a[j]:
                    b[j] += q * a[j]
            if self.track:
                a, b = self.U[src], self.U[dst]
                for j in range(self.m):
                    if a[j]:
                        b[j] += q * a[j]

    def add_col(self, src, dst, q):
        """col[dst] += q * col[src]"""
        if q:
            for row in self.A:
                if row[src]:
                    row[dst] += q * row[src]
            if self.track:
                for row in self.V:
                    if row[src]:
                        row[dst] += q * row[src]

    def negate_row(self, i):
        self.A[i] = [-x for x in self.A[i]]
        if self.track:
            self.U[i] = [-x for x in self.U[i]]

    def min_pivot(self, t):
        best = None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def run(self) -> int:
        """Diagonalise in place; return the rank."""
        A = self.A
        t = 0
        while t < min(self.m, self.n):
            piv = self.min_pivot(t)
            if piv is None:
                break
            _, i, j = piv
            self.swap_rows(t, i)
            self.swap_cols(t, j)
            while True:
                p = A[t][t]
                done = True
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        self.add_row(t, i, -_round_div(A[i][t], p))
                        if A[i][t]:
                            done = False
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        self.add_col(t, j, -_round_div(A[t][j], p))
                        if A[t][j]:
                            done = False
                if not done:
                    # a smaller remainder appeared in row/column t; move it to the pivot
                    best = (abs(p), t, t)
                    for i in range(t + 1, self.m):
                        if A[i][t] and abs(A[i][t]) < best[0]:
                            best = (abs(A[i][t]), i, t)
                    for j in range(t + 1, self.n):
                        if A[t][j] and abs(A[t][j]) < best[0]:
                            best = (abs(A[t][j]), t, j)
                    self.swap_rows(t, best[1])
                    self.swap_cols(t, best[2])
                    continue
                # row and column cleared; enforce divisibility of the remaining block
                bad = None
                for i in range(t + 1, self.m):
                    row = A[i]
                    for j in range(t + 1, self.n):
                        if row[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                self.add_row(bad, t, 1)
            if A[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` and ``U``, ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.
    """
    r = _Reducer(M, track=True)
    r.run()
    return r.A, r.U, r.V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisor-chain order."""
    r = _Reducer(M, track=False)
    k = r.run()
    return [r.A[i][i] for i in range(k)]


def rank(M: Sequence[Sequence[int]]) -> int:
    return len(invariant_factors(M))
