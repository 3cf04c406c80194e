"""Registry of regenerable published tables.

Every entry rebuilds its values from the library definitions and compares
them with the frozen published values in :mod:`gfkit._printed` or
:mod:`gfkit._signtables`.  The comparison is reported, never enforced here:
``gfkit verify`` is where mismatches become failures.
"""

from __future__ import annotations

import re
from typing import Callable

from . import _printed
from . import corrstat as cs
from . import gcdsums as gs
from . import lgf
from . import signsmooth as ss
from .report import Report
from .trimatrix import TriMatrix

# (q;q)_inf through q^26: exponents with nonzero coefficient and their signs.
PENTAGONAL_26 = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1, 22: 1, 26: 1}


def _triangle_rows(M: TriMatrix) -> list[list[int]]:
    return M.as_ints()


def _long_rows(name: str, ours: list[list[int]], printed: list[list[int]] | None) -> list[list]:
    rows = []
    for n, r in enumerate(ours, 1):
        for k, v in enumerate(r, 1):
            p = printed[n - 1][k - 1] if printed is not None and n <= len(printed) and k <= len(printed[n - 1]) else None
            rows.append([name, n, k, v, p])
    return rows


def _matrix_table(kind: str, blocks: dict[str, tuple[list[list[int]], list[list[int]] | None]]) -> Report:
    rows: list[list] = []
    bad = []
    for name, (ours, printed) in blocks.items():
        rows += _long_rows(name, ours, printed)
        if printed is not None and ours[: len(printed)] != printed:
            bad.append(name)
    meta = {"matches_printed": not bad, "mismatched_blocks": bad}
    return Report(kind, ["matrix", "n", "k", "value", "printed"], rows, meta, {k: v[0] for k, v in blocks.items()})


def table_A(n: int) -> Report:
    """A_n (the factorization matrix for C = (q;q)_inf) and its inverse by the closed form."""
    if n < 1:
        raise ValueError("n must be positive")
    A = lgf.snk(lgf.euler_product(n), n)
    closed = lgf.snk_inverse_closed(n)
    numeric = A.inverse()
    blocks = {
        f"A{n}": (_triangle_rows(A), _printed.A_MATRICES.get(n)),
        f"A{n}_inv": (_triangle_rows(closed), _printed.A_INVERSES.get(n)),
    }
    rep = _matrix_table(f"table:A{n}", blocks)
    rep.meta["closed_inverse_equals_numeric"] = closed == numeric
    return rep


def table_mu(N: int = 17) -> Report:
    return _matrix_table("table:mu-triangle", {"mu": (gs.mu_triangle(N).rows(), _printed.MU_TRIANGLE)})


def table_t(N: int = 13) -> Report:
    return _matrix_table(
        "table:t-matrix",
        {
            "t": (gs.t_matrix(N + 1).as_ints(), _printed.T_MATRIX),
            "t_inv": (gs.t_inverse(N).as_ints(), _printed.T_INVERSE),
        },
    )


def table_pentagonal(N: int = 26) -> Report:
    P = lgf.euler_product(N)
    rows = [[n, P[n], PENTAGONAL_26.get(n, 0) if n <= 26 else None] for n in range(N + 1)]
    ok = all(r[1] == r[2] for r in rows if r[2] is not None)
    return Report("table:pentagonal", ["n", "coeff", "printed"], rows, {"matches_printed": ok})


def table_corr_lgf(N: int = 2000, pairs: list[tuple[int, int]] | None = None) -> Report:
    """Corr_LGF and its hat variant for the tabulated (a, b), next to the printed values."""
    rows = []
    for a, b in pairs or list(_printed.CORR_LGF):
        r = cs.corr_lgf(a, b, N)
        h = cs.corr_lgf(a, b, N, hat=True)
        printed = float(_printed.CORR_LGF[(a, b)]) if (a, b) in _printed.CORR_LGF else None
        diff = None if printed is None else abs(r.value - printed)
        rows.append([a, b, r.value, h.value, printed, diff, r.converged, r.extrapolated])
    within = [abs(d) <= 0.05 for *_, d, _, _ in rows if d is not None]
    meta = {
        "N": N,
        "truncation": "square",
        "matches_printed": bool(within) and all(within),
        "pairs_within_0.05": sum(within),
        "pairs_compared": len(within),
        "all_converged": all(r[6] for r in rows),
    }
    cols = ["a", "b", "corr_lgf", "corr_lgf_hat", "printed", "abs_diff", "converged", "aitken"]
    return Report("table:corr-lgf", cols, rows, meta)


def table_sign(table_id: str) -> Report:
    (n1, n2), (k1, k2), _ = ss._parse_table_id(table_id)
    chk = ss.compare_table(table_id)
    ours = ss.table_dump(table_id, len(ss.printed_table(table_id)))
    cols = ["n", f"{n1}_inv", f"{k1}[{n1}_inv]", f"{k2}[{n1}_inv]", f"{n2}_inv", f"{k1}[{n2}_inv]", f"{k2}[{n2}_inv]"]
    meta = {"matches_printed": chk.ok, "cells": chk.cells, "max_decimal_residual": chk.max_residual, "mismatches": chk.mismatches}
    return Report(f"table:{table_id}", cols, [list(r) for r in ours], meta)


_FIXED: dict[str, Callable[[], Report]] = {
    "pentagonal": table_pentagonal,
    "mu-triangle": table_mu,
    "t-matrix": table_t,
    "corr-lgf": table_corr_lgf,
    **{tid: (lambda tid=tid: table_sign(tid)) for tid in ss.TABLE_IDS},
}


def table_ids() -> list[str]:
    """Ids regenerated by ``gfkit tables`` with no ``--id``."""
    return ["pentagonal"] + [f"A{n}" for n in range(1, 6)] + ["mu-triangle", "t-matrix", "corr-lgf", *ss.TABLE_IDS]


def build_table(table_id: str, N: int | None = None) -> Report:
    """Regenerate one table.  ``A<n>`` accepts any n >= 1; ``N`` resizes the
    triangles and sets the corr-lgf truncation."""
    m = re.fullmatch(r"A(\d+)", table_id)
    if m:
        return table_A(int(m.group(1)))
    if table_id not in _FIXED:
        raise KeyError(f"unknown table id {table_id!r}; known: {', '.join(table_ids())} (A<n> for any n)")
    if N is not None and table_id in ("mu-triangle", "t-matrix", "corr-lgf", "pentagonal"):
        return {"mu-triangle": table_mu, "t-matrix": table_t, "corr-lgf": table_corr_lgf, "pentagonal": table_pentagonal}[table_id](N)
    return _FIXED[table_id]()
