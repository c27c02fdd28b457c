"""The bijection from permutation tableaux to permutations, and the PT chain
carried over to the symmetric group.

Permutations are tuples in one-line notation over ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, NamedTuple, Sequence

from .algebra import LaurentPoly
from .moves import pt_transitions
from .pasep import scaled
from .algebra import A, B, ONE, Q
from .tableaux import PermutationTableau, State, enumerate_tableaux, shape_path

Permutation = tuple[int, ...]


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_permutation(text: str) -> Permutation:
    """``7,4,8,3,6,2,1,5``, or a plain digit string when n <= 9."""
    text = text.strip()
    if "," in text:
        return check_permutation(int(x) for x in text.split(","))
    if not text.isdigit():
        raise ValueError(f"bad permutation {text!r}")
    return check_permutation(int(ch) for ch in text)


def format_permutation(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


# -- the bijection --------------------------------------------------------


def boundary_labels(shape) -> tuple[list[int], list[int]]:
    """Labels of row ends and column bottoms.

    The boundary steps are numbered 1..n from north-east to south-west; a row
    takes the label of its S step and a column the label of its W step.
    Returned lists are indexed by 0-based row and column.
    """
    rows: list[int] = []
    cols_from_right: list[int] = []
    for label, step in enumerate(shape_path(shape), start=1):
        (rows if step == "S" else cols_from_right).append(label)
    return rows, cols_from_right[::-1]


def phi(t: PermutationTableau) -> Permutation:
    """Follow the zig-zag paths of the tableau diagram."""
    rows, cols = t.rows, t.n_cols
    row_label, col_label = boundary_labels(t.shape)
    n = t.half_perimeter
    height = [sum(1 for r in rows if len(r) > c) for c in range(cols)]

    def below(i, c):
        return next((k for k in range(i + 1, height[c]) if rows[k][c]), None)

    def right(i, c):
        return next((k for k in range(c + 1, len(rows[i])) if rows[i][k]), None)

    def zigzag(i, c, going_south):
        while True:
            if going_south:
                k = below(i, c)
                if k is None:
                    return col_label[c]
                i = k
            else:
                k = right(i, c)
                if k is None:
                    return row_label[i]
                c = k
            going_south = not going_south

    image = [0] * n
    for i, label in enumerate(row_label):
        ones = [c for c, x in enumerate(rows[i]) if x]
        image[label - 1] = zigzag(i, ones[0], True) if ones else label
    for c, label in enumerate(col_label):
        top = next(i for i in range(height[c]) if rows[i][c])
        image[label - 1] = zigzag(top, c, False)
    return tuple(image)


@lru_cache(maxsize=None)
def _phi_table(n: int) -> dict[Permutation, PermutationTableau]:
    table = {}
    for t in enumerate_tableaux(n):
        p = phi(t)
        if p in table:
            raise RuntimeError(f"phi is not injective at n={n}: {p}")
        table[p] = t
    return table


def phi_inverse(p: Sequence[int]) -> PermutationTableau:
    p = check_permutation(p)
    return _phi_table(len(p))[p]


# -- statistics -----------------------------------------------------------


class PermStats(NamedTuple):
    crossings: int
    f: int
    u: int
    weak_excedances: frozenset
    fixed_points: frozenset


def weak_excedances(p: Permutation) -> frozenset:
    return frozenset(i for i, v in enumerate(p, start=1) if v >= i)


def crossings(p: Permutation) -> int:
    n, count = len(p), 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pi, pj = p[i - 1], p[j - 1]
            if i < j <= pi < pj or pi < pj < i < j:
                count += 1
    return count


def special_lr_maxima(p: Permutation) -> list[int]:
    return [i for i in range(2, len(p) + 1) if p[i - 1] > max(p[: i - 1]) and p[i - 1] > p[0]]


def special_rl_minima(p: Permutation) -> list[int]:
    n = len(p)
    return [i for i in range(1, n + 1) if all(p[i - 1] < p[j - 1] for j in range(i + 1, n + 1)) and p[i - 1] < p[0]]


def perm_stats(p: Sequence[int]) -> PermStats:
    p = check_permutation(p)
    return PermStats(
        crossings=crossings(p),
        f=len(special_rl_minima(p)),
        u=len(special_lr_maxima(p)),
        weak_excedances=weak_excedances(p),
        fixed_points=frozenset(i for i, v in enumerate(p, start=1) if v == i),
    )


def perm_weight(p: Sequence[int]) -> LaurentPoly:
    s = perm_stats(p)
    return LaurentPoly.monomial(1, s.crossings, -s.f, -s.u)


def project_perm(p: Sequence[int]) -> State:
    w = weak_excedances(check_permutation(p))
    return tuple(1 if i + 1 in w else 0 for i in range(1, len(p)))


# -- collapse and normalization -------------------------------------------


@dataclass(frozen=True)
class LabeledPermutation:
    """A bijection of a finite ordered label set onto itself."""

    mapping: tuple[tuple[Hashable, Hashable], ...]

    def __post_init__(self):
        mapping = tuple(sorted(dict(self.mapping).items()))
        object.__setattr__(self, "mapping", mapping)
        if sorted(v for _, v in mapping) != [k for k, _ in mapping]:
            raise ValueError(f"not a bijection of its ground set: {mapping}")

    @classmethod
    def from_one_line(cls, ground: Sequence, images: Sequence) -> LabeledPermutation:
        if len(ground) != len(images):
            raise ValueError("ground set and images differ in length")
        return cls(tuple(zip(ground, images)))

    @property
    def ground(self) -> tuple:
        return tuple(k for k, _ in self.mapping)

    @property
    def images(self) -> tuple:
        return tuple(v for _, v in self.mapping)

    def as_dict(self) -> dict:
        return dict(self.mapping)


def collapse(p: LabeledPermutation, i) -> LabeledPermutation:
    """Remove ``i`` and send its preimage to its image."""
    m = p.as_dict()
    if i not in m:
        raise ValueError(f"{i} is not in the ground set")
    if m[i] == i:
        raise ValueError(f"cannot collapse at the fixed point {i}")
    pre = next(k for k, v in m.items() if v == i)
    m[pre] = m.pop(i)
    return LabeledPermutation(tuple(m.items()))


def normalize(p: LabeledPermutation) -> Permutation:
    rank = {label: r for r, label in enumerate(p.ground, start=1)}
    return tuple(rank[v] for v in p.images)


# -- the chain on permutations --------------------------------------------


def _doubled(p: Permutation) -> dict[int, int]:
    # label i becomes 2i, so i + 1/2 is the odd label 2i + 1
    return {2 * i: 2 * v for i, v in enumerate(p, start=1)}


def _finish(m: dict[int, int]) -> Permutation:
    return normalize(LabeledPermutation(tuple(m.items())))


def _collapsed(m: dict[int, int], label: int) -> dict[int, int]:
    if m[label] == label:
        m = dict(m)
        del m[label]
        return m
    return collapse(LabeledPermutation(tuple(m.items())), label).as_dict()


def perm_transitions(p: Sequence[int]) -> list[tuple[Permutation, LaurentPoly]]:
    """Moves out of a permutation of ``1..N+1``, ordered by site.

    Rules act by collapsing a label, inserting a fixed point or a new minimal
    non-excedance at a half-integer label, or swapping two adjacent images.
    """
    p = check_permutation(p)
    n_plus = len(p)
    n_sites = n_plus - 1
    exc = weak_excedances(p)

    def non_exc_after(k):
        # least non-excedance greater than k, or n + 1 when there is none
        return next((x for x in range(k + 1, n_plus + 1) if x not in exc), n_plus + 1)

    out: list[tuple[Permutation, LaurentPoly]] = []
    if n_plus >= 2 and p[1] == 1:
        i = non_exc_after(2) - 1
        m = _collapsed(_doubled(p), 4)
        m[2 * i + 1] = 2 * i + 1
        out.append((_finish(m), scaled(A, n_sites)))
    for i in range(1, n_plus):
        pi, pnext = p[i - 1], p[i]
        if i >= 2 and pi >= i and pnext < i + 1:
            if pi == i:
                j = non_exc_after(i + 1) - 1
                m = _collapsed(_doubled(p), 2 * i)
                m[2 * j + 1] = 2 * j + 1
            elif pnext < i:
                m = list(p)
                m[i - 1], m[i] = pnext, pi
                out.append((tuple(m), scaled(ONE, n_sites)))
                continue
            else:
                j = max(x for x in range(1, i) if x in exc)
                m = _collapsed(_doubled(p), 2 * i + 2)
                b = next(k for k, v in m.items() if v == 2 * j)
                m[b] = 2 * j + 1
                m[2 * j + 1] = 2 * j
            out.append((_finish(m), scaled(ONE, n_sites)))
        elif pi < i and pnext >= i + 1:
            m = list(p)
            m[i - 1], m[i] = pnext, pi
            out.append((tuple(m), scaled(Q, n_sites)))
    if n_plus >= 2 and p[-1] == n_plus:
        i = max(x for x in range(1, n_plus) if x in exc)
        m = _collapsed(_doubled(p), 2 * n_plus)
        a = next(k for k, v in m.items() if v == 2 * i)
        m[a] = 2 * i + 1
        m[2 * i + 1] = 2 * i
        out.append((_finish(m), scaled(B, n_sites)))
    return out


def transported_transitions(p: Sequence[int]) -> list[tuple[Permutation, LaurentPoly]]:
    """The tableau moves of ``phi_inverse(p)`` pushed through ``phi``."""
    return [(phi(m.target), m.rate) for m in pt_transitions(phi_inverse(p))]
