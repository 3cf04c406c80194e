"""``gfkit`` command-line front end.

Every command builds a :class:`~gfkit.report.Report` whose ``config`` field is
the full :class:`RunConfig`, then renders it as csv, json or latex.  Output
depends only on the RunConfig, so identical invocations are byte-identical.

Exit codes: 0 success, 1 a verification failure, 2 bad arguments or input.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence, TextIO

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from . import arithfn as af
from . import corrstat as cs
from . import gcdsums as gs
from . import genconv as gc
from . import lgf
from . import signsmooth as ss
from . import suites
from . import tables
from .errors import GfkitError, UnknownFunction
from .pseries import Series, partitions_list, pochhammer, series_arith, theta3_power
from .report import FORMATS, Report, render
from .trimatrix import TriMatrix

_NOT_ECHOED = {"func", "config", "format", "out", "default_format"}


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a command's output."""

    subcommand: str
    action: str | None
    format: str
    seed: int
    params: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


class UsageError(Exception):
    """Bad input detected after argument parsing."""


# ------------------------------------------------------------------ input specs


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def resolve_fn(text: str, N: int, seed: int) -> Callable[[int], object]:
    """Arithmetic function from a name: sign-table names, builtins, or ``rand[:seed]``."""
    if text == "rand" or text.startswith("rand:"):
        s = int(text[5:]) if text.startswith("rand:") else seed
        return suites.random_fn(random.Random(s), N, text)
    if text in ss.FUNCTIONS:
        return ss.FUNCTIONS[text]
    return af.builtin(text)


def resolve_series(text: str, N: int, seed: int) -> Series:
    """Series from ``euler``, ``geometric``, ``pochhammer:a,b,sign``, ``theta3:k``,
    ``cab:a,b``, ``lambert:<fn>``, ``partitions:<kind>`` or ``coeffs:c0,c1,...``."""
    head, _, rest = text.partition(":")
    args = rest.split(",") if rest else []
    try:
        if head == "euler":
            return lgf.euler_product(N)
        if head == "geometric":
            return Series([1] * (N + 1), N)
        if head == "pochhammer":
            a, b, sign = args
            return pochhammer(int(a), int(b), sign, N)
        if head == "theta3":
            return theta3_power(int(args[0]) if args else 1, N)
        if head == "cab":
            return cs.cab_series(int(args[0]), int(args[1]), N)
        if head == "lambert":
            return Series(list(series_from_fn(resolve_fn(rest, N, seed), N)), N)
        if head == "partitions":
            return Series(partitions_list(rest or "P", N), N)
        if head == "coeffs":
            return Series([parse_fraction(x) for x in args], N)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad series spec {text!r}: {exc}") from exc
    raise UsageError(f"unknown series spec {text!r}")


def series_from_fn(f: Callable[[int], object], N: int) -> list[Fraction]:
    from .pseries import lambert_series

    return list(lambert_series(f, N).coeffs)


def resolve_kernel(text: str, N: int, seed: int) -> Callable[[int, int], object]:
    """Kernel preset (one, k, n, binom, B), ``csv:<path>``, or ``rand[:seed]`` (entries in 1..9)."""
    if text == "rand" or text.startswith("rand:"):
        rng = random.Random(int(text[5:]) if text.startswith("rand:") else seed)
        tab = {(n, k): rng.randint(1, 9) for n in range(1, N + 2) for k in range(1, n + 1)}
        return lambda n, k: tab.get((n, k), 0)
    if text == "divisor":
        return lambda n, k: 1 if n % k == 0 else 0
    return gc.kernel_from_spec(text)


# ------------------------------------------------------------------ report helpers


def _matrix_report(kind: str, mats: dict[str, TriMatrix | list[list[Any]]]) -> Report:
    rows = []
    shown = {}
    for name, M in mats.items():
        data = M.rows() if isinstance(M, TriMatrix) else M
        shown[name] = data
        for n, r in enumerate(data, 1):
            for k, v in enumerate(r, 1):
                rows.append([name, n, k, v])
    return Report(kind, ["matrix", "n", "k", "value"], rows, {}, shown)


def _values_report(kind: str, name: str, values: Sequence[object], start: int = 1) -> Report:
    return Report(kind, ["n", name], [[n, v] for n, v in enumerate(values, start)])


# ------------------------------------------------------------------ commands


def cmd_series(a: argparse.Namespace) -> Report:
    if a.action == "expand":
        s = resolve_series(a.C, a.N, a.seed)
        return _values_report("series", "coeff", list(s.coeffs), 0)
    if a.action == "arith":
        x = resolve_series(a.a, a.N, a.seed)
        y = resolve_series(a.b, a.N, a.seed) if a.b else None
        if a.op != "recip" and y is None:
            raise UsageError(f"--b is required for {a.op}")
        return _values_report("series", "coeff", list(series_arith(x, y, a.op).coeffs), 0)
    if a.action == "partitions":
        return _values_report("partitions", a.kind, partitions_list(a.kind, a.N), 0)
    raise UsageError(a.action)


def cmd_fn(a: argparse.Namespace) -> Report:
    if a.action == "list":
        names = sorted(set(af.builtin_names()) | set(ss.FUNCTIONS))
        return Report("fn-list", ["name"], [[x] for x in names])
    f = resolve_fn(a.name, a.n, a.seed)
    if a.action == "eval":
        return _values_report("fn", a.name, [f(n) for n in range(1, a.n + 1)])
    if a.action == "inverse":
        if isinstance(f(1), float):
            vals: list = af.dirichlet_inverse_real(f, a.n)[1:]
        else:
            inv = af.dirichlet_inverse_fn(f)
            vals = [inv(n) for n in range(1, a.n + 1)]
        return _values_report("fn-inverse", f"{a.name}_inv", vals)
    raise UsageError(a.action)


def cmd_lgf(a: argparse.Namespace) -> Report:
    if a.action == "matrix":
        C = resolve_series(a.C, a.N, a.seed)
        S = lgf.snk(C, a.N)
        mats: dict[str, TriMatrix] = {"s": S}
        if a.inverse:
            mats["s_inv"] = S.inverse()
        return _matrix_report("lgf-matrix", mats)
    if a.action == "af":
        f = resolve_fn(a.f, a.N, a.seed)
        return _values_report("lgf-af", "a_f", [lgf.af_sum(f, n) for n in range(1, a.N + 1)])
    raise UsageError(a.action)


def _case_record(c: suites.Case) -> dict[str, Any]:
    status = ("conflict-reproduced" if c.ok else "conflict-not-reproduced") if c.conflict else ("pass" if c.ok else "fail")
    return {"claim": c.name, "range": c.range, "status": status, "max_residual": c.residual, "detail": c.detail}


def cmd_gcd(a: argparse.Namespace) -> Report:
    if a.action == "mu-triangle":
        return _matrix_report("mu-triangle", {"mu": gs.mu_triangle(a.N).rows()})
    if a.action == "t-matrix":
        return _matrix_report("t-matrix", {"t": gs.t_matrix(a.N), "t_inv": gs.t_inverse(a.N)})
    if a.action == "u-inverse":
        f = resolve_fn(a.f, a.N, a.seed)
        if a.w is None:
            U = gs.u_inverse(f, a.N)
            return _matrix_report("u-inverse", {"u_inv": [[p.to_str() for p in r] for r in U.rows()]})
        w = parse_fraction(a.w)
        u = gs.u_matrix(f, w, a.N)
        uinv = gs.u_inverse(f, a.N).evaluate(w)
        rep = _matrix_report("u-inverse", {"u": u, "u_inv": uinv})
        rep.meta["product_is_identity"] = (u @ uinv).is_identity()
        return rep
    if a.action == "ramanujan":
        rows = []
        for q in range(1, a.qmax + 1):
            for n in range(1, a.nmax + 1):
                z = gs.ramanujan_c(q, n, "exponential")
                rows.append([q, n, gs.ramanujan_c(q, n), gs.ramanujan_c(q, n, "partition"), z.real])
        return Report("ramanujan", ["q", "n", "divisor", "partition", "exponential_re"], rows)
    if a.action == "verify":
        kw = {"kmax": a.kmax} if a.suite == "dft" else {}
        res = suites.run_suite(a.suite, a.seed, **kw)
        recs = [_case_record(c) for c in res.cases]
        rep = Report("gcd-verify", ["claim", "range", "status", "max_residual"], [[r["claim"], r["range"], r["status"], r["max_residual"]] for r in recs])
        rep.meta = {k: v for k, v in res.summary().items() if k != "conflicts"}
        rep.meta["reports"] = recs
        return rep
    raise UsageError(a.action)


def cmd_genconv(a: argparse.Namespace) -> Report:
    if a.action == "kernel":
        K = resolve_kernel(a.K0, a.N, a.seed)
        return _matrix_report("kernel", {a.K0: TriMatrix.from_function(K, a.N)})
    if a.action == "invert":
        K = resolve_kernel(a.K0, a.N, a.seed)
        g = resolve_fn(a.g, a.N, a.seed)
        Kred = gc.reduced_inverse_kernel(K, a.N) if a.method == "formula" else None
        vals = [gc.k_mobius_invert(g, K, n, method=a.method, Kred=Kred) for n in range(1, a.N + 1)]
        return _values_report("k-invert", "f", vals)
    if a.action == "d-inverse":
        D = resolve_kernel(a.D, a.N, a.seed)
        g = resolve_fn(a.g, a.N + 1, a.seed)
        return _values_report("d-inverse", f"g_inv[{a.method}]", gc.d_inverse_values(g, D, a.N, method=a.method))
    if a.action == "factor":
        K = resolve_kernel(a.K0, a.N, a.seed)
        fac = gc.k_factorization(K, a.N)
        rep = _matrix_report("k-factorization", {"S": fac.S, "S_inv": fac.S_inv})
        rep.meta["product_is_identity"] = (fac.S @ fac.S_inv).is_identity()
        return rep
    raise UsageError(a.action)


def _figure(path: str, xs: Sequence[float], series: dict[str, Sequence[float]], xlabel: str, title: str, *, step: bool = False) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=100)
    for label, ys in series.items():
        (ax.step if step else ax.plot)(xs, ys, label=label, **({"where": "post"} if step else {"marker": "o"}))
    ax.set_xlabel(xlabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)


def cmd_corr(a: argparse.Namespace) -> Report:
    if a.action == "lgf":
        cps = [int(x) for x in a.checkpoints.split(",")] if a.checkpoints else None
        r = cs.corr_lgf(a.a, a.b, a.N, hat=a.hat, include_zero=not a.exclude_zero, checkpoints=cps, tol=a.tol)
        meta = r.to_dict()
        meta.pop("partials")
        rep = Report("corr-lgf", ["N", "partial"], [list(p) for p in r.partials], meta)
        if a.trace:
            trace = Report("corr-lgf-trace", ["N", "partial"], rep.rows, {}, config=_config_dict(a))
            Path(a.trace).write_text(render(trace, "csv"))
        if a.figure:
            _figure(a.figure, [p[0] for p in r.partials], {r.statistic: [p[1] for p in r.partials]}, "N (square truncation)", f"C_{{{a.a},{a.b}}}")
        return rep
    if a.action == "omega":
        return Report("omega-average", ["key", "value"], [[k, v] for k, v in cs.omega_avg_order(a.a, a.b, a.x).items()])
    if a.action == "a0":
        C = cs.cab_series(a.a, a.b, a.N)
        step = max(1, a.N // 10)
        pts = sorted(set(range(step, a.N + 1, step)) | {a.N})
        return Report("a0-trace", ["N", "A0"], [[M, cs.a0(C, a.delta, M)] for M in pts], {"limit_2^(3/4)a^(-1/4)": 2**0.75 * a.a**-0.25})
    if a.action == "delta":
        D = resolve_kernel(a.D, a.xmax, a.seed)
        res = cs.delta_estimate(D, a.xmax)
        return Report("delta-estimate", ["key", "value"], [[k, v] for k, v in sorted(res.items()) if not isinstance(v, list)])
    raise UsageError(a.action)


def cmd_smooth(a: argparse.Namespace) -> Report:
    if a.action == "transform":
        f = resolve_fn(a.f, a.N, a.seed)
        vals = ss.transform_values(a.kind, [f(n) for n in range(1, a.N + 1)], a.N, exact=not isinstance(f(1), float))
        return _values_report("transform", f"{a.kind}[{a.f}]", vals)
    if a.action == "probe":
        f = resolve_fn(a.f, a.H, a.seed)
        prof = ss.sign_profile(a.kind, f, a.H)
        rows = [[n, v, s] for n, (v, s) in enumerate(zip(prof.values, prof.signs), 1)]
        meta = {"kind": a.kind, "last_change": prof.last_change, "tail_sign": prof.tail_sign, "probe": ss.conjecture_probe(f, a.H)}
        if a.figure:
            _figure(a.figure, list(range(1, a.H + 1)), {f"sgn {a.kind}[{a.f}^-1]": list(prof.signs)}, "n", f"sign profile, H = {a.H}", step=True)
        return Report("sign-profile", ["n", "value", "sign"], rows, meta)
    if a.action == "table":
        return tables.build_table(a.id)
    raise UsageError(a.action)


def _run_one(name: str, seed: int) -> suites.SuiteResult:
    return suites.run_suite(name, seed)


def run_suites(names: list[str], seed: int) -> list[suites.SuiteResult]:
    """Run suites, in worker processes when GFKIT_THREADS > 1; results keep input order."""
    workers = cs._threads()
    if workers > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(workers, len(names))) as ex:
            return list(ex.map(_run_one, names, [seed] * len(names)))
    return [_run_one(n, seed) for n in names]


def cmd_verify(a: argparse.Namespace) -> Report:
    names = list(suites.ALL_SUITES) if a.suite == "all" else [a.suite]
    results = run_suites(names, a.seed)
    summaries = [r.summary() for r in results]
    rows = []
    for r in results:
        for c in r.cases:
            rec = _case_record(c)
            rows.append([r.suite, rec["claim"], rec["status"], rec["max_residual"]])
    meta = {
        "suite": a.suite,
        "cases": sum(s["cases"] for s in summaries),
        "failures": sum(s["failures"] for s in summaries),
        "max_residual": max((s["max_residual"] for s in summaries), default=0.0),
        "suites": [{k: s[k] for k in ("suite", "cases", "failures", "max_residual", "failed")} for s in summaries],
        "conflicts": [dict(c, suite=s["suite"]) for s in summaries for c in s["conflicts"]],
    }
    return Report("verify", ["suite", "claim", "status", "max_residual"], rows, meta)


def cmd_tables(a: argparse.Namespace) -> Report:
    if a.list:
        return Report("table-list", ["id"], [[t] for t in tables.table_ids()])
    if a.id:
        return tables.build_table(a.id, a.N)
    outdir = Path(a.out or "tables")
    outdir.mkdir(parents=True, exist_ok=True)
    ext = {"csv": "csv", "json": "json", "latex": "tex"}[a.format]
    rows = []
    for tid in tables.table_ids():
        rep = tables.build_table(tid)
        rep.config = dict(_config_dict(a), params=dict(_config_dict(a)["params"], id=tid))
        path = outdir / f"{tid}.{ext}"
        path.write_text(render(rep, a.format))
        rows.append([tid, str(path), rep.meta.get("matches_printed")])
    a.out = None  # the index goes to stdout
    return Report("tables-index", ["id", "path", "matches_printed"], rows)


COMMANDS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "series": cmd_series,
    "fn": cmd_fn,
    "lgf": cmd_lgf,
    "gcd": cmd_gcd,
    "genconv": cmd_genconv,
    "corr": cmd_corr,
    "smooth": cmd_smooth,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 2 with usage, as argparse does, but never for --help
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=None, help="output format")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--config", default=None, help="TOML file with default option values")
    p.add_argument("--seed", type=int, default=None, help="seed for sampled functions and kernels")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = _Parser(prog="gfkit", description="Generating-function factorizations, gcd sums and sign transforms.", parents=[common])
    sub = root.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def group(name: str, help_: str) -> argparse._SubParsersAction:
        p = sub.add_parser(name, help=help_)
        return p.add_subparsers(dest="action", required=True, parser_class=_Parser)

    def leaf(g, name: str, help_: str, default_format: str = "csv") -> argparse.ArgumentParser:
        p = g.add_parser(name, help=help_, parents=[common])
        p.set_defaults(default_format=default_format)
        return p

    g = group("series", "power series")
    p = leaf(g, "expand", "coefficients of a series spec")
    p.add_argument("--C", required=True)
    p.add_argument("--N", type=int, default=20)
    p = leaf(g, "arith", "add, sub, mul or recip")
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.add_argument("--op", choices=["add", "sub", "mul", "recip"], required=True)
    p.add_argument("--N", type=int, default=20)
    p = leaf(g, "partitions", "partition-type sequences")
    p.add_argument("--kind", default="P", choices=["P", "PHAT", "Q", "QBIG", "P1", "P2"])
    p.add_argument("--N", type=int, default=20)

    g = group("fn", "arithmetic functions")
    p = leaf(g, "eval", "values f(1..n)")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, default=20)
    p = leaf(g, "inverse", "Dirichlet inverse values")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, default=20)
    leaf(g, "list", "known function names")

    g = group("lgf", "Lambert series factorizations")
    p = leaf(g, "matrix", "factorization matrix s(n,k) for a series C")
    p.add_argument("--C", default="euler")
    p.add_argument("--N", type=int, default=10)
    p.add_argument("--inverse", action="store_true")
    p = leaf(g, "af", "a_f(n) = [q^n] (q;q) L_f(q)")
    p.add_argument("--f", required=True)
    p.add_argument("--N", type=int, default=20)

    g = group("gcd", "type I and type II gcd sums")
    p = leaf(g, "mu-triangle", "the inversion triangle")
    p.add_argument("--N", type=int, default=17)
    p = leaf(g, "t-matrix", "t(n,k) and its inverse")
    p.add_argument("--N", type=int, default=13)
    p = leaf(g, "u-inverse", "u^-1(f,w), symbolic in w unless --w is given")
    p.add_argument("--f", default="id")
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--w", default=None)
    p = leaf(g, "ramanujan", "Ramanujan sums by three routes")
    p.add_argument("--qmax", type=int, default=12)
    p.add_argument("--nmax", type=int, default=12)
    p = leaf(g, "verify", "run the gcd or dft suite", "json")
    p.add_argument("--suite", choices=["dft", "gcdsums"], default="dft")
    p.add_argument("--kmax", type=int, default=60)

    g = group("genconv", "K- and D-convolutions")
    p = leaf(g, "kernel", "tabulate a kernel")
    p.add_argument("--K0", default="binom")
    p.add_argument("--N", type=int, default=8)
    p = leaf(g, "invert", "generalized Mobius inversion of g = f *_K 1")
    p.add_argument("--K0", default="binom")
    p.add_argument("--g", required=True)
    p.add_argument("--N", type=int, default=20)
    p.add_argument("--method", choices=["formula", "substitution"], default="formula")
    p = leaf(g, "d-inverse", "inverse under D-convolution")
    p.add_argument("--D", default="binom")
    p.add_argument("--g", required=True)
    p.add_argument("--N", type=int, default=12)
    p.add_argument("--method", choices=["recursive", "matrix", "closed"], default="recursive")
    p = leaf(g, "factor", "K-factorization matrix and inverse")
    p.add_argument("--K0", default="binom")
    p.add_argument("--N", type=int, default=8)

    g = group("corr", "correlation statistics")
    p = leaf(g, "lgf", "Corr_LGF(C_{a,b}) with its truncation trace", "json")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, default=2000)
    p.add_argument("--hat", action="store_true", help="average-order variant")
    p.add_argument("--exclude-zero", action="store_true", help="start rho at c_1")
    p.add_argument("--checkpoints", default=None, help="comma-separated truncations")
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--trace", default=None, help="CSV file for the trace")
    p.add_argument("--figure", default=None, help="PNG file plotting the trace")
    p = leaf(g, "omega", "average order of omega along n(an +- b)/2", "json")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=float, default=1e5)
    p = leaf(g, "a0", "A_0 trace for C_{a,b}")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--delta", type=float, default=0.25)
    p.add_argument("--N", type=int, default=10000)
    p = leaf(g, "delta", "log-log slope of max_k |M_{D,k}(x)|", "json")
    p.add_argument("--D", default="divisor")
    p.add_argument("--xmax", type=int, default=200)

    g = group("smooth", "partition sign transforms")
    p = leaf(g, "transform", "T[f](1..N)")
    p.add_argument("--f", required=True)
    p.add_argument("--kind", choices=ss.KINDS, default="s1")
    p.add_argument("--N", type=int, default=16)
    p = leaf(g, "probe", "sign profile of T[f^-1] up to H")
    p.add_argument("--f", required=True)
    p.add_argument("--kind", choices=ss.KINDS, default="s2")
    p.add_argument("--H", type=int, default=200)
    p.add_argument("--figure", default=None, help="PNG file plotting the signs")
    p = leaf(g, "table", "one of the ten sign tables")
    p.add_argument("--id", required=True, choices=ss.TABLE_IDS)

    p = sub.add_parser("verify", help="invariant suites", parents=[common])
    p.add_argument("--suite", choices=["all", *suites.ALL_SUITES], default="all")
    p.set_defaults(default_format="json", action=None)

    p = sub.add_parser("tables", help="regenerate published tables", parents=[common])
    p.add_argument("--id", default=None, help="one table id; all tables into --out DIR otherwise")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--list", action="store_true")
    p.set_defaults(default_format="csv", action=None)
    return root


# ------------------------------------------------------------------ config and entry point


def _load_config(path: str | None) -> dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc


def _apply_config(ns: argparse.Namespace, cfg: dict[str, Any], explicit: set[str]) -> None:
    """Top-level keys, then ``[subcommand]``, then ``["subcommand.action"]``; command line wins."""
    layers = [
        {k: v for k, v in cfg.items() if not isinstance(v, dict)},
        cfg.get(ns.subcommand, {}),
        cfg.get(f"{ns.subcommand}.{ns.action}", {}) if ns.action else {},
    ]
    for layer in layers:
        for k, v in layer.items():
            key = k.replace("-", "_")
            if key in explicit or key in _NOT_ECHOED - {"format", "out"}:
                continue
            if not hasattr(ns, key):
                raise UsageError(f"config key {k!r} is not an option of {ns.subcommand} {ns.action or ''}".rstrip())
            setattr(ns, key, v)


def _explicit_keys(argv: Sequence[str]) -> set[str]:
    return {a[2:].split("=", 1)[0].replace("-", "_") for a in argv if a.startswith("--")}


def _config_dict(ns: argparse.Namespace) -> dict[str, Any]:
    params = {k: v for k, v in sorted(vars(ns).items()) if k not in _NOT_ECHOED | {"subcommand", "action", "seed"}}
    return RunConfig(ns.subcommand, ns.action, ns.format, ns.seed, params).to_dict()


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        _apply_config(ns, _load_config(ns.config), _explicit_keys(argv))
        ns.format = ns.format or ns.default_format
        ns.seed = 7 if ns.seed is None else ns.seed
        rep = COMMANDS[ns.subcommand](ns)
    except (GfkitError, UsageError, KeyError, ValueError, IndexError, OSError) as exc:
        if isinstance(exc, UnknownFunction):
            msg = f"unknown function {exc.args[0]!r}; see `gfkit fn list`"
        else:
            msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"gfkit: error: {msg}", file=sys.stderr)
        return 2
    rep.config = rep.config or _config_dict(ns)
    text = render(rep, ns.format)
    if ns.out:
        Path(ns.out).write_text(text)
    else:
        out.write(text)
    if ns.subcommand == "verify" or (ns.subcommand == "gcd" and ns.action == "verify"):
        return 1 if rep.meta["failures"] else 0
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
