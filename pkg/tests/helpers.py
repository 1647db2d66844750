"""Shared builders and seeded generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from rtenergy import (
    Atom,
    Energy,
    LinearRtef,
    Rtef,
    TIME_INF,
    Time,
    normalize,
    parse_model,
)

MODELS = Path(__file__).resolve().parent.parent / "models"


def A(rate, price, bound) -> Atom:
    return Atom(Fraction(rate), Fraction(price), Fraction(bound))


def lin(*triples) -> LinearRtef:
    return LinearRtef(tuple(A(*t) for t in triples))


def rtef(*components) -> Rtef:
    return Rtef.of(components)


def ev(f: Rtef, x, t) -> Energy:
    return f.eval(Energy.of(x), Time.of(t))


def load_model(name: str):
    return parse_model((MODELS / name).read_text(encoding="utf-8"))


# the two loop functions from the worked closure example
F1 = lin((0, 0, 30), (4, -10, 30))
F2 = lin((0, 0, 20), (1, 0, 40), (5, -50, 50))

SAT_TOP_RAW = (A(0, -20, 20), A(2, -20, 20), A(5, -10, 10))
SAT_TOP_NF = lin((0, 0, 20), (2, 0, 40), (5, -50, 50))


# --- seeded random generators -------------------------------------------------

def rand_frac(rng: random.Random, lo, hi, den=2) -> Fraction:
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def rand_atom(rng: random.Random) -> Atom:
    rate = rng.choice([Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5, 2)])
    price = -rand_frac(rng, 0, 3)
    bound = -price + rand_frac(rng, 0, 4)
    return Atom(rate, price, bound)


def rand_linear(rng: random.Random, max_atoms=3, allow_identity=True) -> LinearRtef:
    lo = 0 if allow_identity else 1
    return normalize([rand_atom(rng) for _ in range(rng.randint(lo, max_atoms))])


def rand_rtef(rng: random.Random, max_comps=3, max_atoms=3, allow_empty=True) -> Rtef:
    lo = 0 if allow_empty else 1
    return Rtef.of([rand_linear(rng, max_atoms) for _ in range(rng.randint(lo, max_comps))])


SAMPLE_XS = [Fraction(v) for v in (0, 1, Fraction(5, 2), 5, 10, Fraction(35, 2), 20, 31, 50)]
SAMPLE_TS = [Fraction(v) for v in (0, Fraction(1, 2), 1, 3, 7, Fraction(25, 2), 30)]


def sample_points(with_inf=False):
    points = [(Energy.of(x), Time(t)) for x in SAMPLE_XS for t in SAMPLE_TS]
    if with_inf:
        points += [(Energy.of(x), TIME_INF) for x in SAMPLE_XS]
    return points


def rand_model_text(rng: random.Random, n_states=3, accepting=None) -> str:
    """Small automaton with grid-friendly numbers: rates in {0,1,2,4} so all
    greedy waits have power-of-two denominators."""
    names = [f"s{i}" for i in range(n_states)]
    rates = [rng.choice([0, 1, 2, 4]) for _ in names]
    accepting = {n_states - 1} if accepting is None else set(accepting)
    lines = ["rtea {"]
    for i, name in enumerate(names):
        flags = " initial" if i == 0 else ""
        if i in accepting:
            flags += " accepting"
        lines.append(f"  state {name} rate {rates[i]}{flags};")
    n_edges = rng.randint(n_states - 1, 2 * n_states)
    edges = set()
    # guarantee a path to the accepting state
    for i in range(n_states - 1):
        edges.add((i, i + 1))
    while len(edges) < n_edges:
        edges.add((rng.randrange(n_states), rng.randrange(n_states)))
    for i, j in sorted(edges):
        price = -rng.randint(0, 3)
        bound = -price + rng.randint(0, 4)
        lines.append(f"  trans {names[i]} -> {names[j]} price {price} bound {bound};")
    lines.append("}")
    return "\n".join(lines)


def rand_model_text_two_accepting(rng: random.Random, n_states=4) -> str:
    accepting = rng.sample(range(n_states), 2)
    return rand_model_text(rng, n_states, accepting=accepting)
