"""Brute-force reference implementations for the test suite.

Nothing here sits on the decision path: these are independent baselines the
exact algebra is checked against.  The discretized ones are deliberate lower
bounds; the schedule enumerator is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Atom, BOTTOM, Energy, LinearRtef, Time
from .matrix import RtefMatrix, mat_mul, mat_sup
from .model import RteaModel

ZERO = Fraction(0)


@dataclass(frozen=True)
class DpConfig:
    """Time grid for the dynamic program: ``delta * max_steps`` is the horizon."""

    delta: Fraction
    max_steps: int

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("delta must be positive")
        if self.max_steps < 0:
            raise ValueError("max_steps must be non-negative")


def _grid_best(model: RteaModel, x0: Fraction, delta: Fraction, steps: int):
    """Grid-delay exploration of the run relation.

    Returns two per-state maxima over the whole horizon: ``arrival`` levels
    (just after a jump into the state, or the start configuration; runs end
    on arrival, waiting afterwards earns nothing) and ``presence`` levels
    (including subsequent waiting, usable as the launch level of a later
    jump).
    """
    rates = dict(model.states)
    level: dict[str, Optional[Fraction]] = {n: None for n in rates}
    level[model.initial] = Fraction(x0)
    arrival = dict(level)
    presence = dict(level)
    for step in range(steps + 1):
        # close under zero-delay jumps; prices are non-positive, so simple
        # paths suffice and |S| relaxation rounds reach the fixpoint
        for _ in range(len(rates)):
            changed = False
            for tr in model.transitions:
                src = level[tr.src]
                if src is None or src < tr.bound:
                    continue
                out = src + tr.price
                if arrival[tr.dst] is None or arrival[tr.dst] < out:
                    arrival[tr.dst] = out
                if level[tr.dst] is None or level[tr.dst] < out:
                    level[tr.dst] = out
                    changed = True
            if not changed:
                break
        for name, val in level.items():
            if val is not None and (presence[name] is None or presence[name] < val):
                presence[name] = val
        if step < steps:
            level = {
                n: (None if v is None else v + rates[n] * delta)
                for n, v in level.items()
            }
    return arrival, presence


def dp_lower_bound(model: RteaModel, x0: Fraction, horizon: Fraction, cfg: DpConfig) -> Energy:
    """Discretized best final level at an accepting state.

    Delays are restricted to multiples of ``cfg.delta``, so the result never
    exceeds the exact behavior and converges to it as the grid refines.
    """
    if cfg.delta * cfg.max_steps != horizon:
        raise ValueError("delta * max_steps must equal the horizon")
    arrival, _ = _grid_best(model, Fraction(x0), cfg.delta, cfg.max_steps)
    out = BOTTOM
    for name in model.accepting:
        val = arrival[name]
        if val is not None and out < Energy.of(val):
            out = Energy.of(val)
    return out


def compose_split_oracle(l1: LinearRtef, l2: LinearRtef, x: Energy, t: Fraction, grid: int) -> Energy:
    """Best two-stage value over an even grid of budget splits.

    A lower bound on the composition; exact whenever the optimal split lies
    on the grid.
    """
    if grid <= 0:
        raise ValueError("grid must be positive")
    t = Fraction(t)
    best = BOTTOM
    for i in range(grid + 1):
        t1 = t * i / grid
        v = l2.eval(l1.eval(x, Time(t1)), Time(t - t1))
        if best < v:
            best = v
    return best


def exact_schedule_value(atoms: Sequence[Atom], x: Fraction, t: Fraction) -> Energy:
    """Exact optimum over all delay assignments for one step sequence.

    Solves the schedule polytope by vertex enumeration (the polytope is
    bounded, so the linear objective peaks at a vertex).  Works on raw,
    un-normalized sequences and is independent of the greedy evaluator.
    """
    x, t = Fraction(x), Fraction(t)
    n = len(atoms)
    if n == 0:
        return Energy.of(x)
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = []  # a . w >= c
    for i in range(n):
        unit = tuple(Fraction(int(j == i)) for j in range(n))
        rows.append((unit, ZERO))
    rows.append((tuple(Fraction(-1) for _ in range(n)), -t))
    paid = ZERO
    for i, a in enumerate(atoms):
        coeffs = tuple(atoms[j].rate if j <= i else ZERO for j in range(n))
        rows.append((coeffs, a.bound - x - paid))
        paid += a.price
    best: Optional[Fraction] = None
    for picks in itertools.combinations(range(len(rows)), n):
        point = _solve_square([rows[i][0] for i in picks], [rows[i][1] for i in picks])
        if point is None:
            continue
        if all(sum(c * w for c, w in zip(coeffs, point)) >= rhs for coeffs, rhs in rows):
            gain = sum(a.rate * w for a, w in zip(atoms, point))
            if best is None or gain > best:
                best = gain
    if best is None:
        return BOTTOM
    return Energy.of(x + best + paid)


def _solve_square(mat: list[tuple[Fraction, ...]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    n = len(rhs)
    a = [list(row) + [v] for row, v in zip(mat, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def buchi_unroll(model: RteaModel, x0: Fraction, horizon: Fraction, repetitions: int) -> bool:
    """Semi-decision for endless accepting runs within a finite horizon.

    Searches grid-delay runs to an accepting state, then certifies endless
    repetition by a free (all prices zero) cycle whose bounds the reached
    level already clears; such a cycle repeats forever with zero delay.
    A True answer is definitive, False is inconclusive.
    """
    if repetitions <= 0:
        raise ValueError("repetitions must be positive")
    horizon = Fraction(horizon)
    if horizon > 0:
        delta = horizon / repetitions
        steps = repetitions
    else:
        delta = Fraction(1)
        steps = 0
    _, presence = _grid_best(model, Fraction(x0), delta, steps)
    for name in model.accepting:
        level = presence[name]
        if level is not None and _free_cycle_at(model, name, level):
            return True
    return False


def _free_cycle_at(model: RteaModel, state: str, level: Fraction) -> bool:
    edges: dict[str, list[str]] = {}
    for tr in model.transitions:
        if tr.price == 0 and tr.bound <= level:
            edges.setdefault(tr.src, []).append(tr.dst)
    frontier = list(edges.get(state, ()))
    seen = set(frontier)
    while frontier:
        cur = frontier.pop()
        if cur == state:
            return True
        for nxt in edges.get(cur, ()):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return False


def truncated_path_sum(m: RtefMatrix, max_length: int) -> RtefMatrix:
    """Supremum of all path products up to ``max_length`` steps (plus the
    identity), accumulated by repeated multiplication; a lower bound on the
    closure that matches it once powers stabilize.

    One unchanged accumulation step implies all longer paths are dominated
    (acc*M <= acc from then on), so the loop may stop early without changing
    the result.
    """
    acc = RtefMatrix.identity(m.dim())
    power = acc
    for _ in range(max_length):
        power = mat_mul(power, m)
        grown = mat_sup(acc, power)
        if grown == acc:
            break
        acc = grown
    return acc
