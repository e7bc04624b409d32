"""Independent reference implementations used only to cross-check the library.

These deliberately avoid the code paths under test: the determinant oracle
is cofactor (Laplace) expansion, usable up to n ~ 7.
"""

from __future__ import annotations

from circdet import GaussInt


def _as_gauss(x) -> GaussInt:
    return x if isinstance(x, GaussInt) else GaussInt(x, 0)


def laplace_det(matrix) -> GaussInt:
    """Exact determinant by cofactor expansion along the first row."""
    m = [[_as_gauss(x) for x in row] for row in matrix]
    n = len(m)

    def rec(rows: list[int], cols: list[int]) -> GaussInt:
        if len(rows) == 1:
            return m[rows[0]][cols[0]]
        total = GaussInt(0, 0)
        r = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            sub = rec(rest, cols[:idx] + cols[idx + 1:])
            term = m[r][c] * sub
            total = total + term if idx % 2 == 0 else total - term
        return total

    return rec(list(range(n)), list(range(n)))
