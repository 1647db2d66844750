"""Exact algebra of real-time energy functions.

A staircase component models one path through an automaton: wait in
successively faster states until each threshold is met, then pay the whole
accumulated cost on the final jump.  General functions are finite suprema of
such components.  All arithmetic is exact rational; ``bottom`` ("no feasible
schedule") is a value, not an error, and absorbs every operation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Optional

from .linear2d import Constraint, feasible_point

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = [
    "Energy",
    "Time",
    "Atom",
    "LinearRtef",
    "Rtef",
    "BOTTOM",
    "INFINITY",
    "TIME_INF",
    "atom",
    "normalize",
    "precedes",
    "leq_linear",
    "order_witness",
    "component_cells",
    "Cell",
]


@total_ordering
class Energy:
    """A battery level in the flat-bottomed lattice: bot < finite < inf."""

    __slots__ = ("rank", "value")

    def __init__(self, rank: int, value: Optional[Fraction] = None):
        self.rank = rank  # 0 bottom, 1 finite, 2 infinity
        self.value = value

    @staticmethod
    def of(x) -> "Energy":
        q = Fraction(x)
        if q < 0:
            raise ValueError(f"energy must be non-negative: {q}")
        return Energy(1, q)

    @property
    def is_bottom(self) -> bool:
        return self.rank == 0

    @property
    def is_finite(self) -> bool:
        return self.rank == 1

    @property
    def is_infinite(self) -> bool:
        return self.rank == 2

    def text(self) -> str:
        if self.rank == 0:
            return "bot"
        if self.rank == 2:
            return "inf"
        return str(self.value)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Energy)
            and self.rank == other.rank
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.rank, self.value))

    def __lt__(self, other: "Energy") -> bool:
        if self.rank != other.rank:
            return self.rank < other.rank
        return self.rank == 1 and self.value < other.value

    def __repr__(self):
        return f"Energy({self.text()})"


BOTTOM = Energy(0)
INFINITY = Energy(2)


@total_ordering
class Time:
    """An available-time budget: a finite non-negative rational or infinity."""

    __slots__ = ("value",)

    def __init__(self, value: Optional[Fraction] = None):
        if value is not None:
            value = Fraction(value)
            if value < 0:
                raise ValueError(f"time must be non-negative: {value}")
        self.value = value  # None encodes infinity

    @staticmethod
    def of(x) -> "Time":
        if isinstance(x, Time):
            return x
        if isinstance(x, str) and x.strip().lower() == "inf":
            return TIME_INF
        return Time(Fraction(x))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def text(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __eq__(self, other) -> bool:
        return isinstance(other, Time) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other: "Time") -> bool:
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __repr__(self):
        return f"Time({self.text()})"


TIME_INF = Time()


@dataclass(frozen=True)
class Atom:
    """One delay-then-jump step: earn ``rate`` per time unit, jump once the
    level reaches ``bound`` and pay ``price``."""

    rate: Fraction
    price: Fraction
    bound: Fraction

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError(f"rate must be non-negative: {self.rate}")
        if self.price > 0:
            raise ValueError(f"price must be non-positive: {self.price}")
        if self.bound < -self.price:
            raise ValueError(f"bound {self.bound} below -price {-self.price}")

    def key(self):
        return (self.rate, self.price, self.bound)

    def __repr__(self):
        return f"Atom({self.rate}, {self.price}, {self.bound})"


def atom(rate, price, bound) -> Atom:
    return Atom(Fraction(rate), Fraction(price), Fraction(bound))


@dataclass(frozen=True)
class LinearRtef:
    """A path function in staircase form: rates strictly increase, thresholds
    never decrease, and the whole price sits on the final step.  The empty
    sequence is the identity function."""

    atoms: tuple[Atom, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.atoms, self.atoms[1:]):
            if not a.rate < b.rate:
                raise ValueError("rates must strictly increase; use normalize()")
            if not a.bound <= b.bound:
                raise ValueError("bounds must not decrease; use normalize()")
        for a in self.atoms[:-1]:
            if a.price != 0:
                raise ValueError("only the final step may carry a price; use normalize()")

    @property
    def is_identity(self) -> bool:
        return not self.atoms

    def last_rate(self) -> Fraction:
        if not self.atoms:
            raise ValueError("the identity component has no final rate")
        return self.atoms[-1].rate

    def sort_key(self):
        return tuple(a.key() for a in self.atoms)

    def eval(self, x: Energy, t: Time) -> Energy:
        """Best reachable level from ``x`` within time ``t``.

        Greedy schedule: wait the minimum at each step to meet its threshold,
        spend every leftover instant in the final (fastest) state.  Infinite
        time takes the supremum over finite budgets.
        """
        if x.is_bottom:
            return BOTTOM
        if x.is_infinite:
            return INFINITY
        if not self.atoms:
            return x
        first = self.atoms[0]
        last = self.atoms[-1]
        if t.is_infinite:
            if first.rate == 0 and x.value < first.bound:
                return BOTTOM
            if last.rate > 0:
                return INFINITY
            return Energy.of(x.value + last.price)  # lone zero-rate step
        cur = x.value
        rem = t.value
        for a in self.atoms:
            if cur < a.bound:
                if a.rate == 0:
                    return BOTTOM
                wait = (a.bound - cur) / a.rate
                if wait > rem:
                    return BOTTOM
                cur = a.bound
                rem -= wait
        return Energy.of(cur + last.rate * rem + last.price)

    def __repr__(self):
        return "LinearRtef(" + " ".join(repr(a) for a in self.atoms) + ")"


def normalize(seq: Iterable[Atom]) -> LinearRtef:
    """Rewrite an arbitrary step sequence into staircase form.

    Any step whose rate does not exceed its predecessor's is absorbed into
    the predecessor (left to right, to a fixpoint), then one sweep defers
    every price onto the final step.  The induced function is unchanged;
    tests verify this against schedule-enumeration oracles.
    """
    atoms = list(seq)
    i = 0
    while i + 1 < len(atoms):
        a, b = atoms[i], atoms[i + 1]
        if a.rate >= b.rate:
            atoms[i : i + 2] = [Atom(a.rate, a.price + b.price, max(a.bound, b.bound - a.price))]
        else:
            i += 1
    for i in range(len(atoms) - 1):
        a, b = atoms[i], atoms[i + 1]
        atoms[i] = Atom(a.rate, ZERO, a.bound)
        atoms[i + 1] = Atom(b.rate, a.price + b.price, max(a.bound, b.bound - a.price))
    return LinearRtef(tuple(atoms))


def precedes(lhs: LinearRtef, rhs: LinearRtef) -> bool:
    """Scheduling preorder on nonempty components: by final rate."""
    return lhs.last_rate() <= rhs.last_rate()


@dataclass(frozen=True)
class Rtef:
    """A finite supremum of staircase components, kept sorted and duplicate
    free; the empty supremum is the all-bottom function."""

    components: tuple[LinearRtef, ...] = ()

    def __post_init__(self):
        keys = [c.sort_key() for c in self.components]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("components must be sorted and unique; use Rtef.of()")

    @staticmethod
    def of(components: Iterable[LinearRtef]) -> "Rtef":
        return Rtef(tuple(sorted(set(components), key=LinearRtef.sort_key)))

    @staticmethod
    def bottom() -> "Rtef":
        return _BOTTOM_RTEF

    @staticmethod
    def one() -> "Rtef":
        return _ONE_RTEF

    @property
    def is_empty(self) -> bool:
        return not self.components

    def eval(self, x: Energy, t: Time) -> Energy:
        best = BOTTOM
        for c in self.components:
            v = c.eval(x, t)
            if best < v:
                best = v
        return best

    def compose(self, other: "Rtef") -> "Rtef":
        """Sequential composition: split the time budget optimally."""
        comps = [
            normalize(a.atoms + b.atoms)
            for a in self.components
            for b in other.components
        ]
        return Rtef.of(comps).prune()

    def sup(self, other: "Rtef") -> "Rtef":
        return Rtef.of(self.components + other.components).prune()

    def prune(self) -> "Rtef":
        """Drop components pointwise dominated by another retained one."""
        comps = self.components
        if len(comps) <= 1:
            return self
        keep = []
        for i, c in enumerate(comps):
            dominated = any(
                j != i and leq_linear(c, d) and (j < i or not leq_linear(d, c))
                for j, d in enumerate(comps)
            )
            if not dominated:
                keep.append(c)
        return Rtef(tuple(keep))

    def star(self) -> "Rtef":
        """Least fixpoint of iteration: supremum of the compositions of every
        rate-ordered subset of the non-identity components."""
        loops = sorted(
            (c for c in self.components if c.atoms),
            key=lambda c: c.atoms[-1].rate,
        )
        comps = [LinearRtef()]
        for r in range(1, len(loops) + 1):
            for pick in itertools.combinations(loops, r):
                comps.append(normalize(tuple(a for c in pick for a in c.atoms)))
        return Rtef.of(comps).prune()

    def leq(self, other: "Rtef") -> bool:
        """Exact pointwise comparison over every energy/time pair."""
        return _order_violation(self.components, other.components) is None

    def __repr__(self):
        return "Rtef{" + ", ".join(repr(c) for c in self.components) + "}"


_BOTTOM_RTEF = Rtef()
_ONE_RTEF = Rtef((LinearRtef(),))


# ---------------------------------------------------------------------------
# Cell decomposition: per x-strip affine data used by the order decision and
# by the region exporter.

@dataclass(frozen=True)
class Cell:
    """One vertical strip of a component's domain.

    For x in [lo, hi): defined where t >= max(0, wait_x*x + wait_c), there
    evaluating to value_t*t + value_x*x + value_c.  Strips below an
    unreachable first threshold are marked infeasible.
    """

    lo: Fraction
    hi: Optional[Fraction]
    feasible: bool
    wait_x: Fraction = ZERO
    wait_c: Fraction = ZERO
    value_t: Fraction = ZERO
    value_x: Fraction = ZERO
    value_c: Fraction = ZERO


@lru_cache(maxsize=None)
def component_cells(l: LinearRtef) -> tuple[Cell, ...]:
    if not l.atoms:
        return (Cell(ZERO, None, True, ZERO, ZERO, ZERO, ONE, ZERO),)
    atoms = l.atoms
    n = len(atoms)
    rn, bn, price = atoms[-1].rate, atoms[-1].bound, atoms[-1].price
    bounds = [a.bound for a in atoms]
    rates = [a.rate for a in atoms]
    climb = [ZERO] * n  # time to raise the level from bounds[j] past the rest
    for j in range(n - 2, -1, -1):
        climb[j] = climb[j + 1] + (bounds[j + 1] - bounds[j]) / rates[j + 1]
    cells = []
    for j in range(n + 1):
        lo = ZERO if j == 0 else bounds[j - 1]
        hi = bounds[j] if j < n else None
        if hi is not None and lo == hi:
            continue
        if j == n:
            cells.append(Cell(lo, None, True, ZERO, ZERO, rn, ONE, price))
        elif rates[j] == 0:
            cells.append(Cell(lo, hi, False))
        else:
            wx = -ONE / rates[j]
            wc = bounds[j] / rates[j] + climb[j]
            cells.append(Cell(lo, hi, True, wx, wc, rn, -rn * wx, bn + price - rn * wc))
    return tuple(cells)


def _active_cell(cells: tuple[Cell, ...], x: Fraction) -> Cell:
    for c in cells:
        if c.lo <= x and (c.hi is None or x < c.hi):
            return c
    raise AssertionError("cells cover [0, inf)")


def _cuts(fcomps, gcomps) -> list[Fraction]:
    cuts = {ZERO}
    for l in (*fcomps, *gcomps):
        cuts.update(a.bound for a in l.atoms)
    return sorted(cuts)


def _spans(cuts: list[Fraction]):
    return list(zip(cuts, cuts[1:])) + [(cuts[-1], None)]


# ---------------------------------------------------------------------------
# Order decision.  A violation of f <= g is a point where some component of f
# is defined and beats every component of g; within one x-strip everything is
# affine, so emptiness of the violation set is an exact two-variable linear
# satisfiability question.

def _covers(g: Cell, f: Cell, lo: Fraction, hi: Optional[Fraction]) -> bool:
    """Whether g alone dominates f on this whole strip (exact for affine
    data: endpoint checks suffice, the unbounded strip is slope-free)."""
    if not g.feasible or g.value_t < f.value_t:
        return False
    for x in (lo,) if hi is None else (lo, hi):
        tf = max(ZERO, f.wait_x * x + f.wait_c)
        tg = max(ZERO, g.wait_x * x + g.wait_c)
        if tg > tf:
            return False
        gap = (
            (g.value_t - f.value_t) * tf
            + (g.value_x - f.value_x) * x
            + (g.value_c - f.value_c)
        )
        if gap < 0:
            return False
    return True


@lru_cache(maxsize=None)
def leq_linear(lhs: LinearRtef, rhs: LinearRtef) -> bool:
    """Pointwise comparison of two single components."""
    if lhs == rhs:
        return True
    spans = _spans(_cuts((lhs,), (rhs,)))
    if _limit_slice_witness((lhs,), (rhs,), spans) is not None:
        return False
    lcells = component_cells(lhs)
    rcells = component_cells(rhs)
    for lo, hi in spans:
        fc = _active_cell(lcells, lo)
        if not fc.feasible:
            continue
        if not _covers(_active_cell(rcells, lo), fc, lo, hi):
            return False
    return True


def _violation_point(
    fc: Cell, gcells: list[Cell], lo: Fraction, hi: Optional[Fraction]
) -> Optional[tuple[Fraction, Fraction]]:
    """A point of the strip where f is defined and beats every g, or None.

    The strip's right edge is excluded: a violation exactly there reappears
    in the next strip with that strip's (correct) cell data, while here the
    edge may sit on a feasibility jump of some g.
    """
    base = [
        Constraint(ONE, ZERO, -lo),
        Constraint(ZERO, ONE, ZERO),
        Constraint(-fc.wait_x, ONE, -fc.wait_c),
    ]
    if hi is not None:
        base.append(Constraint(-ONE, ZERO, hi, strict=True))
    for picks in itertools.product((False, True), repeat=len(gcells)):
        cons = list(base)
        for gc, too_early in zip(gcells, picks):
            if too_early:
                # below g's feasibility boundary: t < wait_g(x)
                cons.append(Constraint(gc.wait_x, -ONE, gc.wait_c, strict=True))
            else:
                # g defined but strictly below f: value_g < value_f
                cons.append(
                    Constraint(
                        fc.value_x - gc.value_x,
                        fc.value_t - gc.value_t,
                        fc.value_c - gc.value_c,
                        strict=True,
                    )
                )
        point = feasible_point(cons)
        if point is not None:
            return point
    return None


def _limit_profile(comps, x_lo: Fraction):
    """Behavior at infinite time on the strip starting at ``x_lo``:
    (reaches infinity, best finite offset c meaning x + c, or None)."""
    best: Optional[Fraction] = None
    unbounded = False
    for l in comps:
        if not l.atoms:
            best = ZERO if best is None else max(best, ZERO)
            continue
        first, last = l.atoms[0], l.atoms[-1]
        if first.rate == 0 and x_lo < first.bound:
            continue
        if last.rate > 0:
            unbounded = True
        else:
            best = last.price if best is None else max(best, last.price)
    return unbounded, best


def _limit_slice_witness(fcomps, gcomps, spans) -> Optional[Fraction]:
    for lo, _hi in spans:
        f_unb, f_best = _limit_profile(fcomps, lo)
        g_unb, g_best = _limit_profile(gcomps, lo)
        if f_unb and not g_unb:
            return lo
        if f_best is not None and not g_unb and (g_best is None or g_best < f_best):
            return lo
    return None


def _order_violation(
    fcomps: tuple[LinearRtef, ...], gcomps: tuple[LinearRtef, ...]
) -> Optional[tuple[Energy, Time]]:
    """A point where the supremum of ``fcomps`` strictly exceeds that of
    ``gcomps``, or None when none exists anywhere (including infinities)."""
    if fcomps == gcomps or not fcomps:
        return None
    if not gcomps:
        return (INFINITY, Time(ZERO))
    gset = set(gcomps)
    fcomps = tuple(f for f in fcomps if f not in gset)
    if not fcomps:
        return None
    spans = _spans(_cuts(fcomps, gcomps))
    at_infinity = _limit_slice_witness(fcomps, gcomps, spans)
    if at_infinity is not None:
        return (Energy.of(at_infinity), TIME_INF)
    gcells_all = [component_cells(g) for g in gcomps]
    for lf in fcomps:
        fcells = component_cells(lf)
        for lo, hi in spans:
            fc = _active_cell(fcells, lo)
            if not fc.feasible:
                continue
            active = [c for c in (_active_cell(cells, lo) for cells in gcells_all) if c.feasible]
            if any(_covers(gc, fc, lo, hi) for gc in active):
                continue
            point = _violation_point(fc, active, lo, hi)
            if point is not None:
                return (Energy.of(point[0]), Time(point[1]))
    return None


def order_witness(f: Rtef, g: Rtef) -> Optional[tuple[Energy, Time]]:
    """A concrete (energy, time) pair where ``f`` beats ``g``, or None when
    f <= g holds everywhere; negative order answers are thereby directly
    checkable by evaluation."""
    return _order_violation(f.components, g.components)
