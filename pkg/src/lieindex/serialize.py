"""JSON interchange for algebras, functionals, graphs, and reports.

Scalars travel as strings "p" or "p/q" so payloads stay exact. All dumps are
deterministic: keys sorted, compact separators unless pretty-printing.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import LieAlgebra
from .index import IndexReport, LinearFunctional, StabilizerResult

_SCALAR_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")


def format_scalar(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s: Any) -> Fraction:
    if not isinstance(s, str) or not _SCALAR_RE.match(s):
        raise ValueError(f"malformed rational {s!r}; expected 'p' or 'p/q'")
    return Fraction(s)


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), coeffs in sorted(g.brackets.items()):
        brackets.append(
            {"i": i, "j": j, "c": {str(k): format_scalar(c) for k, c in sorted(coeffs.items())}}
        )
    return {"dim": g.dim, "labels": list(g.labels), "brackets": brackets}


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def algebra_from_dict(d: Any) -> LieAlgebra:
    _expect(isinstance(d, dict), "algebra payload must be an object")
    _expect(isinstance(d.get("dim"), int) and not isinstance(d["dim"], bool), "dim must be an integer")
    n = d["dim"]
    labels = d.get("labels")
    if labels is not None:
        _expect(
            isinstance(labels, list) and all(isinstance(s, str) for s in labels),
            "labels must be a list of strings",
        )
        labels = tuple(labels)
    raw = d.get("brackets", [])
    _expect(isinstance(raw, list), "brackets must be a list")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in raw:
        _expect(isinstance(entry, dict), "each bracket must be an object")
        i, j, c = entry.get("i"), entry.get("j"), entry.get("c")
        _expect(isinstance(i, int) and isinstance(j, int), "bracket indices must be integers")
        _expect(isinstance(c, dict), "bracket coefficients must be an object")
        _expect((i, j) not in brackets, f"duplicate bracket entry for ({i}, {j})")
        coeffs = {}
        for k, v in c.items():
            _expect(isinstance(k, str) and k.isdigit(), f"coefficient key {k!r} must be a digit string")
            coeffs[int(k)] = parse_scalar(v)
        brackets[(i, j)] = coeffs
    return LieAlgebra(n, labels, brackets)


def functional_to_dict(ell: LinearFunctional) -> dict:
    return {"coords": [format_scalar(c) for c in ell.coords]}


def functional_from_dict(d: Any) -> LinearFunctional:
    _expect(isinstance(d, dict) and isinstance(d.get("coords"), list), "functional payload must have a coords list")
    return LinearFunctional(tuple(parse_scalar(c) for c in d["coords"]))


def report_to_dict(report: IndexReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = [format_scalar(c) for c in report.witness.coords]
    return {
        "dim": report.dim,
        "index": report.index,
        "generic_rank": report.generic_rank,
        "method": report.method,
        "witness": witness,
        "center_dim": report.center_dim,
    }


def stabilizer_to_dict(result: StabilizerResult) -> dict:
    n = result.stabilizer.ambient_dim
    return {
        "dim": n,
        "functional": functional_to_dict(result.functional),
        "form_rank": n - result.dim,
        "stabilizer_dim": result.dim,
        "stabilizer_basis": [[format_scalar(c) for c in v] for v in result.stabilizer.basis],
    }


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
