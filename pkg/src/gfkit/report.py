"""Reports shared by the CLI and the table registry, with csv/json/latex renderers.

Rendering is deterministic: keys are sorted, rationals print as ``p/q`` in
lowest terms, floats print with ``repr`` (shortest round-trip form), and
nothing time- or host-dependent is ever written.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

FORMATS = ("csv", "json", "latex")


@dataclass
class Report:
    """Tabular result plus structured metadata.

    ``rows`` is the primary table; ``matrices`` (name -> lower-triangular rows)
    is an optional layout hint used by the LaTeX renderer.
    """

    kind: str
    columns: list[str]
    rows: list[list[Any]]
    meta: dict[str, Any] = field(default_factory=dict)
    matrices: dict[str, list[list[Any]]] = field(default_factory=dict)
    config: dict[str, Any] = field(default_factory=dict)


def scalar(x: Any) -> Any:
    """JSON-safe form of a value: exact rationals become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, dict):
        return {str(k): scalar(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [scalar(v) for v in x]
    return str(x)


def _cell(x: Any) -> str:
    v = scalar(x)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _dumps(obj: Any, indent: int | None = None) -> str:
    return json.dumps(scalar(obj), sort_keys=True, indent=indent, separators=(",", ":") if indent is None else None)


def to_json(rep: Report) -> str:
    body = {
        "kind": rep.kind,
        "config": rep.config,
        "columns": rep.columns,
        "rows": rep.rows,
        "meta": rep.meta,
    }
    if rep.matrices:
        body["matrices"] = rep.matrices
    return _dumps(body, indent=2) + "\n"


def to_csv(rep: Report) -> str:
    buf = io.StringIO()
    buf.write(f"# config: {_dumps(rep.config)}\n")
    if rep.meta:
        buf.write(f"# meta: {_dumps(rep.meta)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(rep.columns)
    for r in rep.rows:
        w.writerow([_cell(x) for x in r])
    return buf.getvalue()


def _tex(x: Any) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        sign = "-" if x < 0 else ""
        return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"
    return _cell(x).replace("_", "\\_").replace("&", "\\&").replace("#", "\\#")


def _bmatrix(rows: list[list[Any]]) -> str:
    n = len(rows)
    lines = []
    for r in rows:
        full = list(r) + [0] * (n - len(r))
        lines.append(" & ".join(_tex(x) for x in full))
    return "\\begin{bmatrix}\n" + " \\\\\n".join(lines) + "\n\\end{bmatrix}"


def to_latex(rep: Report) -> str:
    out = [f"% gfkit {rep.kind}", f"% config: {_dumps(rep.config)}"]
    if rep.matrices:
        for name, rows in rep.matrices.items():
            out.append(f"% {name}")
            out.append(_bmatrix(rows))
        return "\n".join(out) + "\n"
    spec = "|".join("c" for _ in rep.columns)
    out.append(f"\\begin{{tabular}}{{||{spec}||}} \\hline\\hline")
    out.append(" & ".join(_tex(c) for c in rep.columns) + " \\\\ \\hline")
    for r in rep.rows:
        out.append(" & ".join(_tex(x) for x in r) + " \\\\")
    out.append("\\hline\\hline")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(rep)
    if fmt == "csv":
        return to_csv(rep)
    if fmt == "latex":
        return to_latex(rep)
    raise ValueError(f"format must be one of {FORMATS}")
