"""Young diagrams, PASEP words and permutation tableaux.

Shapes are tuples of row lengths, top to bottom, weakly decreasing.  Zero-length
rows are kept: a shape ``(2, 1, 0)`` has three rows and two columns, so its
half-perimeter is 5.  PASEP states are tuples of 0/1 bits.

A shape of half-perimeter ``N + 1`` is read as a lattice path of south (S) and
west (W) steps from its north-east corner.  The first step is always S, and
step ``i + 1`` is S exactly when site ``i`` of the corresponding PASEP word is
occupied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import LaurentPoly

Shape = tuple[int, ...]
State = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


def check_shape(shape: Sequence[int]) -> Shape:
    shape = tuple(int(x) for x in shape)
    if not shape:
        raise ValueError("a shape needs at least one row")
    if any(x < 0 for x in shape):
        raise ValueError(f"negative row length in {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"row lengths must weakly decrease: {shape}")
    return shape


def half_perimeter(shape: Shape) -> int:
    return len(shape) + shape[0]


def conjugate_shape(shape: Shape) -> Shape:
    """Column lengths, left to right (empty tuple when there are no columns)."""
    return tuple(sum(1 for r in shape if r > c) for c in range(shape[0]))


def shape_path(shape: Shape) -> str:
    """The S/W boundary path from the north-east corner."""
    steps = []
    for i, length in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        steps.append("S")
        steps.append("W" * (length - below))
    return "".join(steps)


def shape_from_path(path: str) -> Shape:
    if not path or path[0] != "S":
        raise ValueError("a boundary path starts with a south step")
    rows = []
    west_after = path.count("W")
    for step in path:
        if step == "S":
            rows.append(west_after)
        elif step == "W":
            west_after -= 1
        else:
            raise ValueError(f"bad path step {step!r}")
    return tuple(rows)


def shape_from_state(tau: Sequence[int]) -> Shape:
    return shape_from_path("S" + "".join("S" if x else "W" for x in tau))


def state_from_shape(shape: Shape) -> State:
    shape = check_shape(shape)
    if half_perimeter(shape) < 2:
        raise ValueError("half-perimeter 1 has no PASEP sites")
    return tuple(1 if step == "S" else 0 for step in shape_path(shape)[1:])


def parse_state(text: str) -> State:
    """Accepts ``0``/``1`` or ``.``/``*`` (empty/occupied)."""
    table = {"0": 0, "1": 1, ".": 0, "*": 1}
    try:
        bits = tuple(table[ch] for ch in text.strip())
    except KeyError as exc:
        raise ValueError(f"bad state character {exc.args[0]!r} in {text!r}") from None
    if not bits:
        raise ValueError("empty state")
    return bits


def format_state(tau: Sequence[int]) -> str:
    return "".join(str(x) for x in tau)


def all_states(n_sites: int) -> list[State]:
    """All words of length ``n_sites`` in ascending binary order."""
    return [tuple((k >> (n_sites - 1 - i)) & 1 for i in range(n_sites)) for k in range(2**n_sites)]


def shapes_of_half_perimeter(hp: int) -> list[Shape]:
    """All shapes of half-perimeter ``hp`` in descending lexicographic order."""
    if hp < 1:
        raise ValueError("half-perimeter must be at least 1")
    if hp == 1:
        return [(0,)]
    return sorted((shape_from_state(t) for t in all_states(hp - 1)), reverse=True)


@dataclass(frozen=True)
class PermutationTableau:
    shape: Shape
    rows: Rows

    def __post_init__(self):
        shape = check_shape(self.shape)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        _check_dimensions(shape, rows)
        if not is_valid_filling(shape, rows):
            raise ValueError(f"not a permutation tableau: {shape} {rows}")

    @property
    def half_perimeter(self) -> int:
        return half_perimeter(self.shape)

    @property
    def n_rows(self) -> int:
        return len(self.shape)

    @property
    def n_cols(self) -> int:
        return self.shape[0]

    def cell(self, i: int, j: int) -> int:
        """Entry in row ``i``, column ``j`` (both 1-based)."""
        return self.rows[i - 1][j - 1]

    def to_json(self) -> str:
        return json.dumps({"shape": list(self.shape), "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> PermutationTableau:
        data = json.loads(text)
        return cls(tuple(data["shape"]), tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        lines = ["".join(str(x) for x in row) or "-" for row in self.rows]
        return "/".join(lines)


def _check_dimensions(shape: Shape, rows: Sequence[Sequence[int]]) -> None:
    if len(rows) != len(shape) or any(len(r) != n for r, n in zip(rows, shape)):
        raise ValueError(f"filling {rows} does not fit shape {shape}")


def is_valid_filling(shape: Sequence[int], rows: Sequence[Sequence[int]]) -> bool:
    """Check both tableau conditions for a 0/1 filling of ``shape``.

    Raises ValueError if the filling does not have the dimensions of the shape.
    """
    shape = check_shape(shape)
    _check_dimensions(shape, rows)
    for c in range(shape[0]):
        if not any(row[c] for row in rows if len(row) > c):
            return False
    for i, row in enumerate(rows):
        seen_one = False
        for c, x in enumerate(row):
            if x == 0 and seen_one and any(rows[k][c] for k in range(i)):
                return False
            seen_one = seen_one or x == 1
    return True


def is_valid_tableau(t: PermutationTableau) -> bool:
    return is_valid_filling(t.shape, t.rows)


def restricted_cells(t: PermutationTableau) -> set[tuple[int, int]]:
    """1-based cells holding a 0 with a 1 somewhere above it."""
    out = set()
    for c in range(t.n_cols):
        above = False
        for i, row in enumerate(t.rows):
            if len(row) <= c:
                break
            if row[c] == 1:
                above = True
            elif above:
                out.add((i + 1, c + 1))
    return out


def unrestricted_rows(t: PermutationTableau) -> list[int]:
    restricted = {i for i, _ in restricted_cells(t)}
    return [i for i in range(1, t.n_rows + 1) if i not in restricted]


def is_topmost_one(t: PermutationTableau, i: int, j: int) -> bool:
    return t.cell(i, j) == 1 and not any(t.cell(k, j) for k in range(1, i))


def tableau_stats(t: PermutationTableau) -> tuple[int, int, int]:
    """``(rk, f, u)``: superfluous ones, ones in row 1, unrestricted rows minus one."""
    ones = sum(sum(row) for row in t.rows)
    rk = ones - t.n_cols
    f = sum(t.rows[0])
    u = len(unrestricted_rows(t)) - 1
    return rk, f, u


def weight(t: PermutationTableau) -> LaurentPoly:
    rk, f, u = tableau_stats(t)
    return LaurentPoly.monomial(1, rk, -f, -u)


def _fillings(shape: Shape) -> Iterator[Rows]:
    # Cells are visited row by row; trying 0 before 1 yields ascending order of the
    # concatenated bits.  Condition (2) is checked as each 0 is placed, condition (1)
    # when the bottom cell of a column is placed.
    cells = [(i, c) for i, length in enumerate(shape) for c in range(length)]
    heights = conjugate_shape(shape)
    grid = [[0] * length for length in shape]
    col_ones = [0] * shape[0]
    row_ones = [0] * len(shape)

    def place(k: int) -> Iterator[Rows]:
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, c = cells[k]
        last_in_col = i == heights[c] - 1
        # try 0
        if not (col_ones[c] and row_ones[i]) and not (last_in_col and col_ones[c] == 0):
            grid[i][c] = 0
            yield from place(k + 1)
        grid[i][c] = 1
        col_ones[c] += 1
        row_ones[i] += 1
        yield from place(k + 1)
        col_ones[c] -= 1
        row_ones[i] -= 1
        grid[i][c] = 0

    yield from place(0)


@lru_cache(maxsize=None)
def tableaux_of_shape(shape: Shape) -> tuple[PermutationTableau, ...]:
    shape = check_shape(shape)
    return tuple(PermutationTableau(shape, rows) for rows in _fillings(shape))


@lru_cache(maxsize=None)
def _enumerate(hp: int) -> tuple[PermutationTableau, ...]:
    out: list[PermutationTableau] = []
    for shape in shapes_of_half_perimeter(hp):
        out.extend(tableaux_of_shape(shape))
    return tuple(out)


def enumerate_tableaux(hp: int) -> list[PermutationTableau]:
    """All permutation tableaux of half-perimeter ``hp``.

    Shapes come in descending lexicographic order; within a shape, fillings
    come in ascending order of their concatenated row bits.
    """
    return list(_enumerate(hp))


def f_lambda(shape: Sequence[int]) -> LaurentPoly:
    """Weight generating function of all tableaux of the given shape."""
    return LaurentPoly.sum(weight(t) for t in tableaux_of_shape(check_shape(shape)))


def empty_tableau(n_rows: int) -> PermutationTableau:
    return PermutationTableau((0,) * n_rows, ((),) * n_rows)
