"""Exact Gaussian elimination over any Python field type."""

from __future__ import annotations


def nullspace(rows: list[list], ncols: int) -> list[list]:
    """Basis of ``{x : rows @ x == 0}`` by reduced row echelon form.

    Entries may be any exact field elements supporting ``+ - * /`` and
    truthiness as a zero test.
    """
    m = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for row, pc in enumerate(pivots):
            vec[pc] = -m[row][fc]
        basis.append(vec)
    return basis
