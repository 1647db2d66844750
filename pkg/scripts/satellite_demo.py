#!/usr/bin/env python3
"""Walk the satellite deployment model through its energy/time story.

Prints the exact best final level for a sweep of initial levels and time
budgets, and the verdicts for the landmark points: a full battery needs no
time, 40 units need 2 time units in the fast state, the minimal 20-unit
battery needs 10 time units, and below 20 nothing ever works.
"""

from fractions import Fraction
from pathlib import Path

from rtenergy import Energy, Time, finite_behavior, parse_model, to_matrix_rep

MODELS = Path(__file__).resolve().parent.parent / "models"


def main():
    model = parse_model((MODELS / "satellite.rtea").read_text())
    behavior = finite_behavior(to_matrix_rep(model))
    print(f"behavior components: {len(behavior.components)}")
    for comp in behavior.components:
        print(f"  {comp}")
    print()
    landmark = [(50, 0), (40, 2), (20, 10), (20, Fraction(39, 4)), (19, 10**6)]
    for x0, t in landmark:
        value = behavior.eval(Energy.of(x0), Time.of(t))
        print(f"start {str(x0):>8}, budget {str(t):>8}: best final level = {value.text()}")
    print()
    print("sweep (rows: initial level, cols: time budget)")
    budgets = [0, 2, 4, 6, 8, 10, 12]
    print("      " + "".join(f"{b:>8}" for b in budgets))
    for x0 in (15, 20, 25, 30, 40, 50, 60):
        row = [behavior.eval(Energy.of(x0), Time.of(b)).text() for b in budgets]
        print(f"{x0:>5} " + "".join(f"{v:>8}" for v in row))


if __name__ == "__main__":
    main()
