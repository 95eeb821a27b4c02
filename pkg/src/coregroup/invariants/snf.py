"""Smith normal form over the integers, exact, with unimodular transforms."""

from __future__ import annotations

from ..presentations import IntegerMatrix


def _as_rows(m) -> tuple[list[list[int]], int, int]:
    if isinstance(m, IntegerMatrix):
        return m.tolist(), m.rows, m.cols
    rows = [list(map(int, r)) for r in m]
    cols = len(rows[0]) if rows else 0
    return rows, len(rows), cols


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_decomposition(m, cols: int | None = None):
    """Return ``(D, U, V)`` with ``D = U * A * V`` in Smith normal form.

    ``U`` and ``V`` are unimodular.  Pivots are chosen by minimal absolute
    value.  ``cols`` is only needed for a list input with zero rows.
    """
    A, nr, nc = _as_rows(m)
    if cols is not None and nr == 0:
        nc = cols
    U = _identity(nr)
    V = _identity(nc)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row dst += c * row src
        for M in (A, U):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, c):
        for M in (A, V):
            for row in M:
                row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                cands = [(abs(A[i][t]), i, t) for i in range(t, nr) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t, nc) if A[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1
    return A, U, V


def smith_normal_form(m, cols: int | None = None) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... padded with zeros to min(rows, cols)."""
    D, _, _ = smith_decomposition(m, cols)
    r = min(len(D), len(D[0]) if D else 0)
    return tuple(D[i][i] for i in range(r))
