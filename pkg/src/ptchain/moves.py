"""The PT chain: moves on permutation tableaux that project onto the PASEP.

Moves are discovered from the projected word: a leading hole gives the enter
move, each ``10`` at sites ``(k, k+1)`` a hop right, each ``01`` a hop left and
a trailing particle the exit move.  Site ``k`` of the word is step ``k + 1`` of
the boundary path, so every S step is a row and every W step a column.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import A, B, ONE, Q, LaurentPoly
from .pasep import scaled
from .tableaux import (
    PermutationTableau,
    State,
    conjugate_shape,
    is_topmost_one,
    shape_path,
    state_from_shape,
)


class MoveKind(str, enum.Enum):
    ENTER_LEFT = "EnterLeft"
    HOP_RIGHT_1 = "HopRightCase1"
    HOP_RIGHT_2 = "HopRightCase2"
    HOP_RIGHT_3 = "HopRightCase3"
    EXIT_RIGHT = "ExitRight"
    HOP_LEFT = "HopLeft"


@dataclass(frozen=True)
class PtMove:
    kind: MoveKind
    site_index: int  # k for the pair (k, k+1); 0 for entering, N for exiting
    row_index: int  # 1-based tableau row acted on
    target: PermutationTableau
    rate: LaurentPoly

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "row_index": self.row_index,
            "site_index": self.site_index,
            "target": {"shape": list(self.target.shape), "rows": [list(r) for r in self.target.rows]},
            "rate": str(self.rate),
        }


def project(t: PermutationTableau) -> State:
    return state_from_shape(t.shape)


def _n_sites(s: PermutationTableau) -> int:
    return s.half_perimeter - 1


def _row_of_step(shape) -> dict[int, int]:
    """Map 1-based path position of each S step to its 1-based row."""
    out, row = {}, 0
    for pos, step in enumerate(shape_path(shape), start=1):
        if step == "S":
            row += 1
            out[pos] = row
    return out


def _insert_zero_row(rows: list[list[int]], length: int) -> None:
    # below every row at least as long: "as far south as possible"
    pos = sum(1 for r in rows if len(r) >= length)
    rows.insert(pos, [0] * length)


def _delete_column(rows: list[list[int]], c: int) -> None:
    for r in rows:
        if len(r) > c:
            del r[c]


def _insert_column(rows: list[list[int]], bits: list[int]) -> None:
    # right of every column at least as tall: "as far east as possible"
    h = len(bits)
    heights = conjugate_shape(tuple(len(r) for r in rows)) if rows and rows[0] else ()
    pos = sum(1 for x in heights if x >= h)
    for i, bit in enumerate(bits):
        rows[i].insert(pos, bit)


def _build(rows: list[list[int]]) -> PermutationTableau:
    return PermutationTableau(tuple(len(r) for r in rows), tuple(tuple(r) for r in rows))


def _lengths(s: PermutationTableau, j: int) -> tuple[int, int]:
    """``(lambda_j, lambda_{j+1})`` with rows past the bottom read as 0."""
    below = s.shape[j] if j < s.n_rows else 0
    return s.shape[j - 1], below


def enter_left(s: PermutationTableau) -> PtMove | None:
    lam1, lam2 = _lengths(s, 1)
    if lam1 == 0 or lam1 == lam2:
        return None
    rows = [list(r) for r in s.rows]
    _delete_column(rows, lam1 - 1)
    _insert_zero_row(rows, lam1 - 1)
    return PtMove(MoveKind.ENTER_LEFT, 0, 1, _build(rows), scaled(A, _n_sites(s)))


def _outer_corner_site(s: PermutationTableau, j: int) -> int | None:
    for pos, row in _row_of_step(s.shape).items():
        if row == j:
            path = shape_path(s.shape)
            if pos >= 2 and pos < len(path) and path[pos] == "W":
                return pos - 1
            return None
    return None


def hop_right(s: PermutationTableau, j: int) -> PtMove:
    """Hop right at the outer corner ending row ``j`` (``j >= 2``)."""
    if not 2 <= j <= s.n_rows:
        raise ValueError(f"row {j} cannot carry a hop right")
    lam_j, lam_next = _lengths(s, j)
    site = _outer_corner_site(s, j)
    if lam_j == lam_next or site is None:
        raise ValueError(f"row {j} is not an outer corner of shape {s.shape}")
    rows = [list(r) for r in s.rows]
    n = _n_sites(s)
    if s.cell(j, lam_j) == 0:
        del rows[j - 1]
        _insert_zero_row(rows, lam_j - 1)
        kind = MoveKind.HOP_RIGHT_1
    elif not is_topmost_one(s, j, lam_j):
        rows[j - 1].pop()
        kind = MoveKind.HOP_RIGHT_2
    else:
        _delete_column(rows, lam_j - 1)
        _insert_column(rows, [0] * (j - 2) + [1])
        kind = MoveKind.HOP_RIGHT_3
    return PtMove(kind, site, j, _build(rows), scaled(ONE, n))


def exit_right(s: PermutationTableau) -> PtMove | None:
    t = s.n_rows
    if t < 2 or s.shape[-1] != 0:
        return None
    rows = [list(r) for r in s.rows[:-1]]
    _insert_column(rows, [0] * (t - 2) + [1])
    n = _n_sites(s)
    return PtMove(MoveKind.EXIT_RIGHT, n, t, _build(rows), scaled(B, n))


def hop_left(s: PermutationTableau, j: int) -> PtMove:
    """Grow row ``j + 1`` by a cell holding 1 (needs ``lambda_j > lambda_{j+1}``)."""
    if not 1 <= j < s.n_rows:
        raise ValueError(f"row {j} has no row below it")
    lam_j, lam_next = _lengths(s, j)
    if lam_j == lam_next:
        raise ValueError(f"no inner corner below row {j} of shape {s.shape}")
    rows = [list(r) for r in s.rows]
    rows[j].append(1)
    step_of_row = {row: pos for pos, row in _row_of_step(s.shape).items()}
    site = step_of_row[j + 1] - 2
    return PtMove(MoveKind.HOP_LEFT, site, j, _build(rows), scaled(Q, _n_sites(s)))


def pt_transitions(s: PermutationTableau) -> list[PtMove]:
    """All moves out of ``s``, ordered by site; the self-loop stays implicit."""
    tau = project(s)
    n = len(tau)
    row_at = _row_of_step(s.shape)
    moves: list[PtMove] = []
    if tau[0] == 0:
        moves.append(enter_left(s))
    for k in range(1, n):
        if tau[k - 1] == 1 and tau[k] == 0:
            moves.append(hop_right(s, row_at[k + 1]))
        elif tau[k - 1] == 0 and tau[k] == 1:
            moves.append(hop_left(s, row_at[k + 2] - 1))
    if tau[-1] == 1:
        moves.append(exit_right(s))
    return moves


def class_out_rate(cls: int, n: int, n_sites: int) -> LaurentPoly:
    """Total out-rate of a state in the given block-alternation class."""
    if cls == 1:
        total = n * ONE + (n - 1) * Q
    elif cls == 2:
        total = n * ONE + n * Q + B
    elif cls == 3:
        total = n * ONE + n * Q + A
    elif cls == 4:
        total = (n - 1) * ONE + n * Q + A + B
    else:
        raise ValueError(f"unknown class {cls}")
    return total * Fraction(1, n_sites + 1)


def state_class(x) -> tuple[int, int]:
    """Block-alternation class of a word and its count of block pairs.

    1: starts with a particle and ends with a hole (2n blocks);
    2: particle ... particle (2n+1 blocks); 3: hole ... hole (2n+1 blocks);
    4: hole ... particle (2n blocks).
    """
    x = tuple(x)
    if not x:
        raise ValueError("the empty word has no class")
    blocks = 1 + sum(1 for i in range(len(x) - 1) if x[i] != x[i + 1])
    first, last = x[0], x[-1]
    if first == 1 and last == 0:
        return 1, blocks // 2
    if first == 1 and last == 1:
        return 2, (blocks - 1) // 2
    if first == 0 and last == 0:
        return 3, (blocks - 1) // 2
    return 4, blocks // 2
