"""Exhaustive verification suites.

Each suite returns a :class:`~ptchain.analysis.Report`; an empty violation
list means the checked identities hold for every object up to the size bound.
Sizes are given as the number of PASEP sites ``N``; tableaux and permutations
then have size ``N + 1``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

from .algebra import A, B, ONE, Q, LaurentPoly
from .analysis import Report, build_system, fiber_sums, stationary_exact, verify_balance, verify_projection
from .involution import invol_perm, invol_tableau
from .moves import MoveKind, class_out_rate, project, pt_transitions, state_class
from .pasep import PasepParams, out_rate, particle_hole
from .permutations import (
    boundary_labels,
    perm_stats,
    perm_weight,
    phi,
    phi_inverse,
    project_perm,
)
from .tableaux import (
    PermutationTableau,
    all_states,
    enumerate_tableaux,
    f_lambda,
    is_topmost_one,
    shape_from_state,
    tableau_stats,
    weight,
)

SUITES = ("balance", "projection", "bijection", "involution", "outrates")

EXAMPLE_TABLEAU = PermutationTableau((4, 4, 4, 3), ((1, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1), (0, 0, 1)))
EXAMPLE_PERM = (7, 4, 8, 3, 6, 2, 1, 5)

DEFAULT_PARAMS = PasepParams(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


def balance_suite(n_max: int) -> Report:
    report = Report("balance")
    for n in range(1, n_max + 1):
        report.merge(verify_balance(build_system("pt", n), weight))
    return report


def projection_suite(n_max: int, t_max: int = 12, params: PasepParams = DEFAULT_PARAMS) -> Report:
    report = Report("projection")
    for n in range(1, n_max + 1):
        pasep = build_system("pasep", n)
        pt = build_system("pt", n)
        report.merge(verify_projection(pt, pasep, project, t_max, params))
        report.merge(verify_projection(build_system("perm", n), pasep, project_perm, t_max, params))
        lifted = fiber_sums(stationary_exact(pt, params), pt, pasep, project)
        report.checked += 1
        if lifted != stationary_exact(pasep, params).probs:
            report.violations.append({"kind": "stationary-fibers", "N": n})
    return report


def bijection_suite(n_max: int) -> Report:
    report = Report("bijection")
    for size in range(1, n_max + 2):
        seen = set()
        for t in enumerate_tableaux(size):
            p = phi(t)
            seen.add(p)
            stats = perm_stats(p)
            row_label, _ = boundary_labels(t.shape)
            empty = {row_label[i] for i, row in enumerate(t.rows) if not any(row)}
            report.checked += 1
            problems = []
            if (stats.crossings, stats.f, stats.u) != tableau_stats(t):
                problems.append("stats")
            if stats.weak_excedances != frozenset(row_label):
                problems.append("weak-excedances")
            if stats.fixed_points != frozenset(empty):
                problems.append("fixed-points")
            if phi_inverse(p) != t:
                problems.append("inverse")
            if problems:
                report.violations.append({"tableau": str(t), "perm": list(p), "problems": problems})
        report.checked += 1
        if len(seen) != math.factorial(size) or seen != set(itertools.permutations(range(1, size + 1))):
            report.violations.append({"kind": "not-bijective", "size": size, "images": len(seen)})
    if n_max + 1 >= 8:
        report.checked += 1
        p = phi(EXAMPLE_TABLEAU)
        if p != EXAMPLE_PERM or p[0] != 7 or p[5] != 2:
            report.violations.append({"kind": "worked-example", "got": list(p)})
    return report


def _automorphism(sys, invol) -> list[dict]:
    """Edges ``x -> y`` with no matching ``I(x) -> I(y)`` carrying the a/b-swapped rate."""
    bad = []
    for (i, j), rate in sys.edges.items():
        key = (sys.index[invol(sys.states[i])], sys.index[invol(sys.states[j])])
        if sys.edges.get(key) != rate.swap_ab():
            bad.append({"edge": f"{sys.labels[i]}->{sys.labels[j]}", "rate": str(rate)})
    return bad


def involution_suite(n_max: int, chain_n_max: int = 4) -> Report:
    report = Report("involution")
    for size in range(1, n_max + 2):
        for p in itertools.permutations(range(1, size + 1)):
            bar = invol_perm(p)
            s, sb = perm_stats(p), perm_stats(bar)
            problems = []
            if invol_perm(bar) != p:
                problems.append("not-involutive")
            if size >= 2 and project_perm(p) != particle_hole(project_perm(bar)):
                problems.append("projection")
            if s.crossings != sb.crossings:
                problems.append("crossings")
            if s.u != sb.f or s.f != sb.u:
                problems.append("f/u swap")
            if perm_weight(p) != perm_weight(bar).swap_ab():
                problems.append("weight swap")
            report.checked += 1
            if problems:
                report.violations.append({"perm": list(p), "problems": problems})
        for t in enumerate_tableaux(size):
            tb = invol_tableau(t)
            report.checked += 1
            if invol_tableau(tb) != t or phi(tb) != invol_perm(phi(t)):
                report.violations.append({"tableau": str(t), "kind": "tableau-involution"})
        if size >= 2:
            for tau in all_states(size - 1):
                report.checked += 1
                if f_lambda(shape_from_state(tau)) != f_lambda(shape_from_state(particle_hole(tau))).swap_ab():
                    report.violations.append({"state": list(tau), "kind": "generating-function symmetry"})
    for n in range(1, min(n_max, chain_n_max) + 1):
        for sys, invol in ((build_system("perm", n), invol_perm), (build_system("pt", n), invol_tableau)):
            report.checked += len(sys.edges)
            report.violations.extend(_automorphism(sys, invol))
    return report


def _outer_corners(t: PermutationTableau) -> list[int]:
    """Rows ``j >= 2`` ending in an outer corner (the hop-right rows)."""
    shape = t.shape + (0,)
    return [j for j in range(2, t.n_rows + 1) if shape[j - 1] > shape[j]]


def _inner_corners(t: PermutationTableau) -> int:
    return sum(1 for j in range(1, t.n_rows) if t.shape[j - 1] > t.shape[j])


def inflow_profile(n: int) -> dict[PermutationTableau, Counter]:
    """For each tableau T, count in-moves by (kind, wt(Q) rate (N+1) / wt(T))."""
    profile: dict[PermutationTableau, Counter] = {t: Counter() for t in enumerate_tableaux(n + 1)}
    for s in profile:
        for m in pt_transitions(s):
            coeff = weight(s) * m.rate * (n + 1) * weight(m.target).monomial_inverse()
            profile[m.target][(m.kind, coeff)] += 1
    return profile


def outrates_suite(n_max: int) -> Report:
    report = Report("outrates")
    for n in range(1, n_max + 1):
        for tau in all_states(n):
            cls, k = state_class(tau)
            report.checked += 1
            if out_rate(tau) != class_out_rate(cls, k, n):
                report.violations.append({"state": list(tau), "kind": "pasep-out-rate"})
        for t, counts in inflow_profile(n).items():
            tau = project(t)
            cls, k = state_class(tau)
            total = LaurentPoly.sum(m.rate for m in pt_transitions(t))
            report.checked += 1
            if total != class_out_rate(cls, k, n):
                report.violations.append({"tableau": str(t), "kind": "pt-out-rate"})
            expected = _expected_inflow(t, cls, k)
            got = _observed_inflow(counts)
            report.checked += 1
            if got != expected:
                report.violations.append(
                    {"tableau": str(t), "kind": "inflow", "expected": dict(expected), "got": dict(got)}
                )
    return report


def _expected_inflow(t: PermutationTableau, cls: int, k: int) -> Counter:
    corners = _outer_corners(t)
    zeros = sum(1 for j in corners if t.cell(j, t.shape[j - 1]) == 0)
    necessary = sum(
        1 for j in corners if t.cell(j, t.shape[j - 1]) == 1 and is_topmost_one(t, j, t.shape[j - 1])
    )
    out = Counter(
        {
            "zero-corner": zeros,
            "necessary-corner": necessary,
            "superfluous-corner": len(corners) - zeros - necessary,
            "inner-corner": _inner_corners(t),
            "alpha": 1 if cls in (3, 4) else 0,
            "beta": 1 if cls in (2, 4) else 0,
        }
    )
    assert len(corners) == (k - 1 if cls == 4 else k)
    return +out


def _observed_inflow(counts: Counter) -> Counter:
    out = Counter()
    for (kind, coeff), c in counts.items():
        if coeff == A:
            out["alpha"] += c
        elif coeff == B:
            out["beta"] += c
        elif coeff == Q and kind is MoveKind.HOP_RIGHT_2:
            out["inner-corner"] += c
        elif coeff == ONE and kind in (MoveKind.HOP_RIGHT_1, MoveKind.ENTER_LEFT):
            out["zero-corner"] += c
        elif coeff == ONE and kind in (MoveKind.HOP_RIGHT_3, MoveKind.EXIT_RIGHT):
            out["necessary-corner"] += c
        elif coeff == ONE and kind is MoveKind.HOP_LEFT:
            out["superfluous-corner"] += c
        else:
            out[f"unexpected:{kind.value}:{coeff}"] += c
    return +out


def run_suite(name: str, n_max: int) -> Report:
    if name == "balance":
        return balance_suite(n_max)
    if name == "projection":
        return projection_suite(n_max)
    if name == "bijection":
        return bijection_suite(n_max)
    if name == "involution":
        return involution_suite(n_max)
    if name == "outrates":
        return outrates_suite(n_max)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
