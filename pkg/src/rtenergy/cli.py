"""Command line: reachability/coverability/endless-run checks and JSON export.

Exit codes: 0 for a positive answer, 1 for a negative one, 2 for usage,
parse or validation errors.  All output is deterministic JSON on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import Energy, Time
from .matrix import buchi_behavior, finite_behavior, mat_star
from .model import ModelError, RteaModel, parse_model, to_matrix_rep
from .oracles import DpConfig, buchi_unroll, dp_lower_bound
from .rational import format_rational, parse_rational
from .regions import component_json, function_json


@dataclass(frozen=True)
class Query:
    """One decoded command-line question against one model file."""

    kind: str  # reach | cover | buchi | eval | dump | normalize
    model_path: str
    x0: Optional[Fraction] = None
    time: Optional[Time] = None
    target: Optional[Fraction] = None
    what: str = "behavior"
    verify: bool = False

    def __post_init__(self):
        if self.kind == "cover" and self.target is None:
            raise ValueError("cover requires --target")

    def echo(self) -> dict:
        out = {"kind": self.kind, "model": self.model_path}
        if self.x0 is not None:
            out["x0"] = format_rational(self.x0)
        if self.time is not None:
            out["time"] = self.time.text()
        if self.target is not None:
            out["target"] = format_rational(self.target)
        return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtenergy",
        description="Decide energy-feasibility questions on real-time energy automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide reach, cover or buchi")
    check.add_argument("kind", choices=("reach", "cover", "buchi"))
    _query_flags(check)

    ev = sub.add_parser("eval", help="evaluate the finite behavior at a point")
    _query_flags(ev)

    dump = sub.add_parser("dump", help="export behavior functions as JSON")
    dump.add_argument("--model", required=True)
    dump.add_argument("--what", choices=("behavior", "star"), default="behavior")

    norm = sub.add_parser("normalize", help="normal form of a single-path model")
    norm.add_argument("--model", required=True)
    return parser


def _query_flags(p: argparse.ArgumentParser):
    p.add_argument("--model", required=True)
    p.add_argument("--x0", required=True, help="initial energy (decimal or p/q)")
    p.add_argument("--time", required=True, help="time budget (decimal, p/q, or inf)")
    p.add_argument("--target", help="coverability target energy")
    p.add_argument("--verify", action="store_true", help="cross-run the brute-force oracle")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ModelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _load(path: str) -> RteaModel:
    return parse_model(Path(path).read_text(encoding="utf-8"))


def _dispatch(args) -> int:
    if args.command == "dump":
        return _run_dump(Query("dump", args.model, what=args.what))
    if args.command == "normalize":
        return _run_normalize(Query("normalize", args.model))
    kind = args.kind if args.command == "check" else "eval"
    query = Query(
        kind,
        args.model,
        x0=parse_rational(args.x0),
        time=Time.of(args.time),
        target=parse_rational(args.target) if args.target is not None else None,
        verify=args.verify,
    )
    return _run_check(query)


def _run_check(q: Query) -> int:
    model = _load(q.model_path)
    rep = to_matrix_rep(model)
    report: dict = {}
    if q.kind == "buchi":
        answer = buchi_behavior(rep).eval(Energy.of(q.x0), q.time)
        report["answer"] = answer
        if not q.time.is_infinite:
            report["note"] = "zeno: finite-horizon query asks for infinitely many jumps in bounded time"
    else:
        value = finite_behavior(rep).eval(Energy.of(q.x0), q.time)
        if q.kind == "cover":
            answer = value.is_infinite or (value.is_finite and value.value >= q.target)
        else:
            answer = not value.is_bottom
        report["answer"] = answer
        report["value"] = value.text()
    if q.verify:
        report["oracle"] = _oracle_report(q.kind, model, q.x0, q.time)
    report["query"] = q.echo()
    print(json.dumps(report))
    return 0 if report["answer"] else 1


def _oracle_report(kind: str, model: RteaModel, x0: Fraction, horizon: Time) -> dict:
    method = "buchi_unroll" if kind == "buchi" else "dp_lower_bound"
    if horizon.is_infinite:
        return {"method": method, "skipped": "unbounded horizon"}
    if kind == "buchi":
        return {
            "method": method,
            "repetitions": 32,
            "value": buchi_unroll(model, x0, horizon.value, 32),
        }
    if horizon.value > 0:
        cfg = DpConfig(horizon.value / 16, 16)
    else:
        cfg = DpConfig(Fraction(1), 0)
    value = dp_lower_bound(model, x0, horizon.value, cfg)
    return {"method": method, "delta": format_rational(cfg.delta), "value": value.text()}


def _run_dump(q: Query) -> int:
    model = _load(q.model_path)
    rep = to_matrix_rep(model)
    if q.what == "behavior":
        print(json.dumps(function_json(finite_behavior(rep))))
        return 0
    star = mat_star(rep.matrix)
    out = {
        "states": list(rep.state_names),
        "entries": [[function_json(star.rows[i][j]) for j in range(star.n_cols)] for i in range(star.n_rows)],
    }
    print(json.dumps(out))
    return 0


def _run_normalize(q: Query) -> int:
    model = _load(q.model_path)
    atoms = _chain_atoms(model)
    from .algebra import normalize  # local import keeps cli deps obvious

    normal = normalize(atoms)
    out = {
        "input": {
            "atoms": [
                [format_rational(a.rate), format_rational(a.price), format_rational(a.bound)]
                for a in atoms
            ]
        },
        "normalized": component_json(normal),
    }
    print(json.dumps(out))
    return 0


def _chain_atoms(model: RteaModel):
    """Atoms along the unique path of a linear model, initial to accepting."""
    from .algebra import Atom

    outgoing: dict[str, list] = {}
    for tr in model.transitions:
        outgoing.setdefault(tr.src, []).append(tr)
    atoms = []
    current = model.initial
    visited = {current}
    while current not in model.accepting:
        nexts = outgoing.get(current, [])
        if len(nexts) != 1:
            raise ValueError(f"model is not a single chain: state {current!r} has {len(nexts)} outgoing transitions")
        tr = nexts[0]
        atoms.append(Atom(model.rate_of(tr.src), tr.price, tr.bound))
        current = tr.dst
        if current in visited:
            raise ValueError("model is not a single chain: cycle detected")
        visited.add(current)
    if len(model.transitions) != len(atoms):
        raise ValueError("model is not a single chain: unreachable transitions present")
    return tuple(atoms)


if __name__ == "__main__":
    raise SystemExit(main())
