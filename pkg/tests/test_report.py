from __future__ import annotations

import json
from fractions import Fraction

import pytest

from gfkit.report import Report, render, scalar, to_csv, to_json, to_latex


def sample() -> Report:
    return Report(
        "demo",
        ["n", "value"],
        [[1, Fraction(1, 3)], [2, Fraction(-4)], [3, 0.1], [4, None]],
        {"ok": True},
        config={"subcommand": "demo", "seed": 7},
    )


def test_scalar_forms():
    assert scalar(Fraction(6, 4)) == "3/2"
    assert scalar(Fraction(-8, 2)) == "-4"
    assert scalar(1 + 2j) == {"re": 1.0, "im": 2.0}
    assert scalar({"a": [Fraction(1, 2)]}) == {"a": ["1/2"]}


def test_csv_layout():
    lines = to_csv(sample()).splitlines()
    assert lines[0] == '# config: {"seed":7,"subcommand":"demo"}'
    assert lines[1] == '# meta: {"ok":true}'
    assert lines[2:] == ["n,value", "1,1/3", "2,-4", "3,0.1", "4,"]


def test_json_is_sorted_and_parses():
    text = to_json(sample())
    obj = json.loads(text)
    assert list(obj) == sorted(obj)
    assert obj["rows"][0] == [1, "1/3"]
    assert "matrices" not in obj


def test_latex_tabular_and_bmatrix():
    tex = to_latex(sample())
    assert "\\begin{tabular}" in tex and "\\frac{1}{3}" in tex
    rep = Report("m", [], [], matrices={"A": [[1], [Fraction(-1, 2), 1]]})
    tex = to_latex(rep)
    assert "\\begin{bmatrix}\n1 & 0 \\\\\n-\\frac{1}{2} & 1\n\\end{bmatrix}" in tex


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(sample(), "xml")


def test_render_is_deterministic():
    assert all(render(sample(), f) == render(sample(), f) for f in ("csv", "json", "latex"))
