"""Transition systems for the three chains and exact checks on them.

Every chain is held symbolically: edge rates are Laurent polynomials in q, a, b
and self-loops are implicit.  Instantiating at rational parameters gives an
exact row-stochastic matrix stored as sparse rows.
"""

from __future__ import annotations

import bisect
import csv
import io
import itertools
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Sequence

import numpy as np

from .algebra import LaurentPoly
from .moves import project, pt_transitions
from .pasep import PasepParams, pasep_transitions
from .permutations import format_permutation, perm_transitions, project_perm
from .tableaux import all_states, enumerate_tableaux, format_state, weight

log = logging.getLogger(__name__)

CHAINS = ("pasep", "pt", "perm")


class SingularSystemError(ArithmeticError):
    """The linear system has no unique solution (e.g. a reducible chain)."""


@dataclass
class TransitionSystem:
    chain: str
    n_sites: int
    states: list
    edges: dict[tuple[int, int], LaurentPoly]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.states)}
        self.succ: list[list[tuple[int, LaurentPoly]]] = [[] for _ in self.states]
        for (i, j), rate in sorted(self.edges.items()):
            if i == j:
                raise ValueError("self-loops are implicit and must not be stored")
            self.succ[i].append((j, rate))
        if not self.labels:
            self.labels = [str(s) for s in self.states]

    def __len__(self) -> int:
        return len(self.states)

    def out_rate(self, i: int) -> LaurentPoly:
        return LaurentPoly.sum(rate for _, rate in self.succ[i])

    def instantiate(self, params: PasepParams) -> list[dict[int, Fraction]]:
        """Exact transition matrix rows, diagonal included."""
        rows = []
        for i, succ in enumerate(self.succ):
            row: dict[int, Fraction] = {}
            for j, rate in succ:
                val = params.evaluate(rate)
                if val < 0:
                    raise ValueError(f"negative rate {val} on edge {i}->{j}")
                if val:
                    row[j] = val
            stay = 1 - sum(row.values(), Fraction(0))
            if stay < 0:
                raise ValueError(f"row {i} has out-rate {1 - stay} > 1")
            if stay:
                row[i] = stay
            rows.append(row)
        return rows


def _system_from(chain, n_sites, states, moves, label) -> TransitionSystem:
    index = {s: i for i, s in enumerate(states)}
    edges: dict[tuple[int, int], LaurentPoly] = {}
    for i, s in enumerate(states):
        for target, rate in moves(s):
            key = (i, index[target])
            edges[key] = edges.get(key, LaurentPoly()) + rate
    return TransitionSystem(chain, n_sites, list(states), edges, [label(s) for s in states])


def build_system(chain: str, n: int) -> TransitionSystem:
    """The PASEP on ``n`` sites, or the PT chain on tableaux / permutations of size ``n + 1``."""
    if n < 1:
        raise ValueError("need at least one site")
    if chain == "pasep":
        return _system_from(chain, n, all_states(n), pasep_transitions, format_state)
    if chain == "pt":
        return _system_from(
            chain,
            n,
            enumerate_tableaux(n + 1),
            lambda s: [(m.target, m.rate) for m in pt_transitions(s)],
            lambda s: f"{format_state(project(s))}:{s}",
        )
    if chain == "perm":
        perms = list(itertools.permutations(range(1, n + 2)))
        return _system_from(
            chain,
            n,
            perms,
            perm_transitions,
            lambda p: f"{format_state(project_perm(p))}:{format_permutation(p)}",
        )
    raise ValueError(f"unknown chain {chain!r}; expected one of {CHAINS}")


# -- reports ---------------------------------------------------------------


@dataclass
class Report:
    check: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: Report) -> Report:
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def to_dict(self) -> dict:
        return {"check": self.check, "checked": self.checked, "passed": self.passed, "violations": self.violations}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_balance(sys: TransitionSystem, weight_fn: Callable[[Hashable], LaurentPoly]) -> Report:
    """Check in-flow equals out-flow at every state, as polynomial identities."""
    weights = [weight_fn(s) for s in sys.states]
    inflow = [LaurentPoly() for _ in sys.states]
    for i, succ in enumerate(sys.succ):
        for j, rate in succ:
            inflow[j] = inflow[j] + weights[i] * rate
    report = Report(f"balance:{sys.chain}:N={sys.n_sites}")
    for t in range(len(sys)):
        lhs, rhs = inflow[t], weights[t] * sys.out_rate(t)
        report.checked += 1
        if lhs != rhs:
            report.violations.append({"state": sys.labels[t], "lhs": str(lhs), "rhs": str(rhs)})
    return report


# -- exact linear algebra -------------------------------------------------


def solve_sparse(equations: Sequence[dict[int, Fraction]], rhs: Sequence[Fraction], n_vars: int) -> list[Fraction]:
    """Exact Gaussian elimination on sparse rational rows.

    The pivot for each variable is the first unused equation (by position)
    that contains it; exact arithmetic needs no numerical pivoting.
    """
    rows = [dict(e) for e in equations]
    b = [Fraction(x) for x in rhs]
    if len(rows) != n_vars:
        raise ValueError("need a square system")
    holders: dict[int, set[int]] = {v: set() for v in range(n_vars)}
    for r, row in enumerate(rows):
        for v, c in list(row.items()):
            if c == 0:
                del row[v]
            else:
                holders[v].add(r)
    used: set[int] = set()
    pivot_row: list[int] = []
    for v in range(n_vars):
        free = [r for r in holders[v] if r not in used]
        if not free:
            raise SingularSystemError(f"no pivot for variable {v}")
        pr = min(free)
        used.add(pr)
        pivot_row.append(pr)
        prow, pval = rows[pr], rows[pr][v]
        for r in free:
            if r == pr:
                continue
            row = rows[r]
            factor = row[v] / pval
            for w, c in prow.items():
                new = row.get(w, Fraction(0)) - factor * c
                if new:
                    if w not in row:
                        holders[w].add(r)
                    row[w] = new
                elif w in row:
                    del row[w]
                    holders[w].discard(r)
            b[r] -= factor * b[pr]
    x = [Fraction(0)] * n_vars
    for v in reversed(range(n_vars)):
        prow = rows[pivot_row[v]]
        acc = b[pivot_row[v]] - sum((c * x[w] for w, c in prow.items() if w != v), Fraction(0))
        x[v] = acc / prow[v]
    return x


@dataclass
class Distribution:
    labels: list[str]
    probs: list[Fraction]

    def __getitem__(self, i: int) -> Fraction:
        return self.probs[i]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.labels, self.probs))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["state", "probability_num", "probability_den"])
        for label, p in zip(self.labels, self.probs):
            w.writerow([label, p.numerator, p.denominator])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            [{"state": s, "probability": f"{p.numerator}/{p.denominator}"} for s, p in zip(self.labels, self.probs)],
            indent=2,
        )


def stationary_exact(sys: TransitionSystem, params: PasepParams) -> Distribution:
    """Unique invariant distribution of the instantiated chain, exactly."""
    params.check()
    matrix = sys.instantiate(params)
    n = len(sys)
    eqs: list[dict[int, Fraction]] = [dict() for _ in range(n)]
    for i, row in enumerate(matrix):
        for j, p in row.items():
            eqs[j][i] = eqs[j].get(i, Fraction(0)) + p
    for j in range(n):
        eqs[j][j] = eqs[j].get(j, Fraction(0)) - 1
    # one balance equation is redundant; replace the last by the normalization
    eqs[-1] = {i: Fraction(1) for i in range(n)}
    rhs = [Fraction(0)] * (n - 1) + [Fraction(1)]
    x = solve_sparse(eqs, rhs, n)
    return Distribution(list(sys.labels), x)


def step(matrix: list[dict[int, Fraction]], v: dict[int, Fraction]) -> dict[int, Fraction]:
    """One step of a row vector: ``v P``."""
    out: dict[int, Fraction] = {}
    for i, mass in v.items():
        for j, p in matrix[i].items():
            out[j] = out.get(j, Fraction(0)) + mass * p
    return {j: m for j, m in out.items() if m}


def verify_projection(
    m: TransitionSystem,
    n: TransitionSystem,
    f: Callable[[Hashable], Hashable],
    t_max: int = 12,
    params: PasepParams | None = None,
) -> Report:
    """Check that ``m`` projects to ``n`` under the state map ``f``.

    Edge-level: every positive transition of ``m`` carries the rate of its
    image in ``n``, and each transition of ``n`` lifts uniquely from every
    state of the source fiber.  Walk-level: for every start state and every
    ``t <= t_max``, fiber sums of the time-``t`` law of ``m`` equal the
    time-``t`` law of ``n``.
    """
    if params is None:
        params = PasepParams(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))
    params.check()
    report = Report(f"projection:{m.chain}->{n.chain}:N={m.n_sites}")
    image = [n.index[f(s)] for s in m.states]
    if set(image) != set(range(len(n))):
        report.violations.append({"kind": "surjectivity", "missing": len(n) - len(set(image))})
        return report
    fiber: list[list[int]] = [[] for _ in n.states]
    for x, y in enumerate(image):
        fiber[y].append(x)

    n_rates = [dict(succ) for succ in n.succ]
    for x1, succ in enumerate(m.succ):
        y1 = image[x1]
        for x2, rate in succ:
            report.checked += 1
            if n_rates[y1].get(image[x2]) != rate:
                report.violations.append(
                    {"kind": "rate", "from": m.labels[x1], "to": m.labels[x2], "rate": str(rate),
                     "image_rate": str(n_rates[y1].get(image[x2], LaurentPoly()))}
                )
        for y2, rate in n.succ[y1]:
            report.checked += 1
            lifts = [(x2, r) for x2, r in succ if image[x2] == y2]
            if len(lifts) != 1 or lifts[0][1] != rate:
                report.violations.append(
                    {"kind": "lift", "from": m.labels[x1], "image_edge": f"{n.labels[y1]}->{n.labels[y2]}",
                     "lifts": len(lifts)}
                )

    pm, pn = m.instantiate(params), n.instantiate(params)
    for x1 in range(len(m)):
        report.checked += 1
        if pm[x1].get(x1, 0) != pn[image[x1]].get(image[x1], 0):
            report.violations.append({"kind": "self-loop", "state": m.labels[x1]})

    walks: dict[int, list[dict[int, Fraction]]] = {}
    for x0 in range(len(m)):
        y0 = image[x0]
        if y0 not in walks:
            w = {y0: Fraction(1)}
            seq = [w]
            for _ in range(t_max):
                w = step(pn, w)
                seq.append(w)
            walks[y0] = seq
        v = {x0: Fraction(1)}
        for t in range(t_max + 1):
            if t:
                v = step(pm, v)
            summed: dict[int, Fraction] = {}
            for x, mass in v.items():
                summed[image[x]] = summed.get(image[x], Fraction(0)) + mass
            report.checked += 1
            if summed != walks[y0][t]:
                report.violations.append({"kind": "walk", "start": m.labels[x0], "t": t})
    return report


def fiber_sums(dist: Distribution, sys: TransitionSystem, target: TransitionSystem, f) -> list[Fraction]:
    out = [Fraction(0)] * len(target)
    for s, p in zip(sys.states, dist.probs):
        out[target.index[f(s)]] += p
    return out


def partition_function(n: int) -> LaurentPoly:
    """Sum of tableau weights over half-perimeter ``n + 1``."""
    if n < 1:
        raise ValueError("need at least one site")
    return LaurentPoly.sum(weight(t) for t in enumerate_tableaux(n + 1))


# -- Monte Carlo ----------------------------------------------------------


def trajectory(sys: TransitionSystem, params: PasepParams, seed: int, steps: int, start: int = 0) -> np.ndarray:
    """State indices visited at times 1..steps.

    Uses numpy's PCG64 generator seeded with ``seed``: one uniform draw per
    step picks an outgoing edge by cumulative probability, or the self-loop.
    """
    params.check()
    if steps < 1:
        raise ValueError("steps must be positive")
    targets, cums = [], []
    for succ in sys.succ:
        acc, tj, cj = Fraction(0), [], []
        for j, rate in succ:
            acc += params.evaluate(rate)
            tj.append(j)
            cj.append(float(acc))
        targets.append(tj)
        cums.append(cj)
    draws = np.random.default_rng(seed).random(steps)
    path = np.empty(steps, dtype=np.int64)
    s = start
    for k, u in enumerate(draws.tolist()):
        idx = bisect.bisect_right(cums[s], u)
        if idx < len(targets[s]):
            s = targets[s][idx]
        path[k] = s
    return path


def simulate(
    sys: TransitionSystem, params: PasepParams, seed: int, steps: int, burn_in: float = 0.1, start: int = 0
) -> Distribution:
    """Occupation frequencies after discarding the first ``burn_in`` fraction of steps."""
    path = trajectory(sys, params, seed, steps, start)
    kept = path[int(steps * burn_in):]
    counts = np.bincount(kept, minlength=len(sys))
    total = int(counts.sum())
    return Distribution(list(sys.labels), [Fraction(int(c), total) for c in counts])


def tv_distance(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum((abs(Fraction(a) - Fraction(b)) for a, b in zip(p, q, strict=True)), Fraction(0)) / 2


# -- export -----------------------------------------------------------------


def rate_label(rate: LaurentPoly) -> str:
    """``1/(N+1)``, ``q/(N+1)``, ``a/(N+1)`` or ``b/(N+1)`` for a scaled unit rate."""
    if rate.is_monomial():
        (exps, _), = rate
        name = {(0, 0, 0): "1", (1, 0, 0): "q", (0, 1, 0): "a", (0, 0, 1): "b"}.get(exps)
        if name is not None:
            return f"{name}/(N+1)"
    return str(rate)


def to_dot(sys: TransitionSystem) -> str:
    lines = [f'digraph "{sys.chain}_N{sys.n_sites}" {{']
    for i, label in enumerate(sys.labels):
        lines.append(f'  s{i} [label="{label}"];')
    for (i, j), rate in sorted(sys.edges.items()):
        lines.append(f'  s{i} -> s{j} [label="{rate_label(rate)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_json(sys: TransitionSystem) -> str:
    return json.dumps(
        [{"from": sys.labels[i], "to": sys.labels[j], "rate": str(r)} for (i, j), r in sorted(sys.edges.items())],
        indent=2,
    )
