"""The discrete-time PASEP on words in {0,1}^N."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import A, B, ONE, Q, LaurentPoly
from .tableaux import State


@dataclass(frozen=True)
class PasepParams:
    q: Fraction
    alpha: Fraction
    beta: Fraction
    n_sites: int | None = None

    def __post_init__(self):
        for name in ("q", "alpha", "beta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def in_box(self) -> bool:
        return 0 <= self.q <= 1 and 0 < self.alpha <= 1 and 0 < self.beta <= 1

    def check(self) -> PasepParams:
        if not self.in_box():
            raise ValueError(
                f"parameters outside 0 <= q <= 1, 0 < alpha, beta <= 1: "
                f"q={self.q}, alpha={self.alpha}, beta={self.beta}"
            )
        return self

    def evaluate(self, p: LaurentPoly) -> Fraction:
        return p.evaluate(self.q, self.alpha, self.beta)


def scaled(rate: LaurentPoly, n_sites: int) -> LaurentPoly:
    return rate * Fraction(1, n_sites + 1)


def pasep_transitions(x: Sequence[int]) -> list[tuple[State, LaurentPoly]]:
    """Off-diagonal moves out of ``x``, ordered by site.

    The enter move (site 0) comes first and the exit move (site N) last; the
    hops at sites ``(k, k+1)`` are listed in between.  The self-loop is left
    implicit.
    """
    x = tuple(x)
    n = len(x)
    out: list[tuple[State, LaurentPoly]] = []
    if n and x[0] == 0:
        out.append(((1,) + x[1:], scaled(A, n)))
    for k in range(n - 1):
        if x[k] == 1 and x[k + 1] == 0:
            out.append((x[:k] + (0, 1) + x[k + 2 :], scaled(ONE, n)))
        elif x[k] == 0 and x[k + 1] == 1:
            out.append((x[:k] + (1, 0) + x[k + 2 :], scaled(Q, n)))
    if n and x[-1] == 1:
        out.append((x[:-1] + (0,), scaled(B, n)))
    return out


def particle_hole(x: Sequence[int]) -> State:
    """Reverse the word and swap particles with holes."""
    return tuple(1 - v for v in reversed(tuple(x)))


def out_rate(x: Sequence[int]) -> LaurentPoly:
    total = LaurentPoly()
    for _, rate in pasep_transitions(x):
        total = total + rate
    return total
