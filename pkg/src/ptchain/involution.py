"""The involution extending particle-hole symmetry to permutations and tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permutations import Permutation, check_permutation
from .tableaux import PermutationTableau, conjugate_shape, is_topmost_one, restricted_cells, unrestricted_rows


def invol_perm(p: Sequence[int]) -> Permutation:
    """``p(1) -> n+1-p(1)`` and ``p(i) -> n+1-p(n+2-i)`` for ``i >= 2``."""
    p = check_permutation(p)
    n = len(p)
    return (n + 1 - p[0],) + tuple(n + 1 - p[n + 1 - i] for i in range(2, n + 1))


@dataclass(frozen=True)
class ConjugateTableau:
    """Transposed filling: row ``j`` holds column ``j`` of the source.

    ``width`` is the row count of the source tableau, kept so that trailing
    zero-length rows survive a round trip.
    """

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    width: int


def _transpose(shape, rows, n_out: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    out_shape = tuple(sum(1 for r in shape if r > c) for c in range(n_out))
    return out_shape, tuple(tuple(rows[i][j] for i in range(h)) for j, h in enumerate(out_shape))


def conjugate(t: PermutationTableau | ConjugateTableau):
    """Transpose a tableau; applied to a :class:`ConjugateTableau` it transposes back."""
    if isinstance(t, ConjugateTableau):
        shape, rows = _transpose(t.shape, t.rows, t.width)
        return PermutationTableau(shape, rows)
    shape, rows = _transpose(t.shape, t.rows, t.n_cols)
    return ConjugateTableau(shape, rows, t.n_rows)


def _rightmost_restricted_zeros(t: PermutationTableau) -> set[tuple[int, int]]:
    best: dict[int, int] = {}
    for i, j in restricted_cells(t):
        best[i] = max(best.get(i, 0), j)
    return {(i, j) for i, j in best.items()}


def invol_tableau(t: PermutationTableau) -> PermutationTableau:
    """Tableau-side involution, compatible with :func:`invol_perm` through phi.

    A tableau with K rows and column lengths c_1..c_m maps to shape
    ``(K-1, c_1-1, ..., c_m-1)``.  Its top row marks which rows 2..K of ``t``
    are unrestricted; every other cell copies a cell of the transpose, flipped
    when that cell is a topmost one or a rightmost restricted zero.
    """
    k = t.n_rows
    cols = conjugate_shape(t.shape)
    shape = (k - 1,) + tuple(c - 1 for c in cols)
    free = set(unrestricted_rows(t))
    flip = _rightmost_restricted_zeros(t)
    top = tuple(1 if j + 1 in free else 0 for j in range(1, k))
    body = []
    for i in range(2, len(shape) + 1):
        row = []
        for j in range(1, shape[i - 1] + 1):
            src = t.cell(j + 1, i - 1)
            if is_topmost_one(t, j + 1, i - 1) or (j + 1, i - 1) in flip:
                src = 1 - src
            row.append(src)
        body.append(tuple(row))
    return PermutationTableau(shape, (top,) + tuple(body))
