"""Command-line front end.

Two subcommands:

* ``verify <identity> [--a 2 --b 1 ...]`` checks one identity instance and
  prints a single-case report;
* ``suite <name|all> [--config PATH] [--tol R] [--jobs N] [--format F]
  [--out PATH]`` runs parameter grids for one or all suites.

Reports are JSON (default), CSV, or markdown.  Exit codes: 0 when every case
passes, 1 when any case fails or errors, 2 for usage/configuration problems.

A config file is JSON with the SuiteConfig field names::

    {"suites": ["ezz"], "grids": {"ezz": {"a": [2], "b": [1], "n": [0, 1]}},
     "tolerance": 1e-9, "parallelism": 2, "output_format": "json",
     "output_path": null}

Grids given in a config file override the built-in defaults key by key; see
``default_grids`` for every suite's grid schema.  The proofcert grid accepts
``"mutation_canary": true``, which appends one deliberately failing case
(a perturbed telescoping certificate asserted to hold) for exercising the
exit-code contract.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import identities, legendre, proofcert
from .algebra import RatFunc
from .identities import EzzParams, IdentityReport, TheoremParams
from .legendre import DegenerateParameters
from .quadrature import DEFAULT_REL_TOL, NonConvergence, tanh_sinh_integrate
from .special import GammaRangeError, ParameterPole, SeriesDiverges

SUITE_NAMES = ("ezz", "theorem", "appell", "gen", "chv", "proofcert", "legendre")
OUTPUT_FORMATS = ("json", "csv", "markdown")
DEFAULT_SUITE_TOL = 1e-9
_TOL_MIN, _TOL_MAX = 1e-14, 1e-2

#: Exceptions that turn a case into an "error" record instead of aborting.
_CASE_ERRORS = (
    NonConvergence,
    SeriesDiverges,
    ParameterPole,
    GammaRangeError,
    DegenerateParameters,
    ValueError,
    ZeroDivisionError,
    RuntimeError,
)


class ConfigError(ValueError):
    """Invalid SuiteConfig contents or grid values."""


@dataclass(frozen=True)
class Case:
    identity: str
    params: dict
    thunk: Callable[[], IdentityReport]

    def sort_key(self):
        return (self.identity, tuple(sorted((k, float(v)) for k, v in self.params.items())))


@dataclass(frozen=True)
class CaseError:
    identity: str
    params: dict
    message: str

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(sorted(self.params.items())),
            "error": self.message,
        }


@dataclass
class SuiteConfig:
    """Run plan: which suites, their grids, tolerance, and output routing."""

    suites: list = field(default_factory=lambda: list(SUITE_NAMES))
    grids: dict = field(default_factory=dict)
    tolerance: float = DEFAULT_SUITE_TOL
    parallelism: int = 1
    output_format: str = "json"
    output_path: str | None = None

    def validate(self) -> None:
        if not self.suites:
            raise ConfigError("no suites selected")
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {s!r}; known: {', '.join(SUITE_NAMES)}")
        for s in self.grids:
            if s not in SUITE_NAMES:
                raise ConfigError(f"grid given for unknown suite {s!r}")
        if not _TOL_MIN <= self.tolerance <= _TOL_MAX:
            raise ConfigError(
                f"tolerance must lie in [{_TOL_MIN:g}, {_TOL_MAX:g}], got {self.tolerance:g}"
            )
        if not (isinstance(self.parallelism, int) and self.parallelism >= 1):
            raise ConfigError(f"parallelism must be a positive integer, got {self.parallelism!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"unknown output format {self.output_format!r}; known: {', '.join(OUTPUT_FORMATS)}"
            )

    def to_dict(self) -> dict:
        return {
            "suites": list(self.suites),
            "grids": self.grids,
            "tolerance": self.tolerance,
            "parallelism": self.parallelism,
            "output_format": self.output_format,
            "output_path": self.output_path,
        }

    @staticmethod
    def from_dict(data: dict) -> "SuiteConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - set(SuiteConfig.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        cfg = SuiteConfig()
        for name in SuiteConfig.__dataclass_fields__:
            if name in data:
                setattr(cfg, name, data[name])
        return cfg


@dataclass
class SuiteReport:
    """Outcome of one suite: config echo, per-case results, summary, wall time."""

    suite: str
    tolerance: float
    grid: dict
    cases: list
    summary: dict
    wall_ms: float

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tolerance": self.tolerance,
            "config": {"grid": self.grid},
            "cases": [c.to_dict() for c in self.cases],
            "summary": dict(self.summary),
            "wall_ms": self.wall_ms,
        }


# ---------------------------------------------------------------------------
# default grids and case builders
# ---------------------------------------------------------------------------


def default_grids() -> SuiteConfig:
    """Built-in run plan covering every parameter regime of the identities.

    Grid schemas (all values may be overridden per suite via a config file):

    * ezz:       {"a": [...], "b": [...], "n": [...]}
    * theorem:   {"cases": [{"a":..,"b":..,"k":..,"n":..,"s":..,"l":..}, ...]}
    * appell:    {"params": [[alpha, beta, beta_prime], ...], "x": [...],
                  "y": [...]}  (points with |(y-x)/(y-1)| > 0.95 are skipped)
    * gen:       same schema as appell, no skip filter
    * chv:       {"b": [...], "n_max": int}
    * proofcert: {"moebius_pairs": [[str, str], ...] (exact rationals),
                  "log_points": [[a, b], ...], "t_values": [...],
                  "ode_pairs": [[str, str], ...], "ode_n_max": int,
                  "mutation_count": int, "mutation_canary": bool}
    * legendre:  {"n_max": int, "c3_n_max": int}
    """
    theorem_ab = [(2.0, 1.0), (5.0, 0.2), (1.0, 1.0), (1.5, 0.7), (0.5, 3.0), (0.8, 1.3)]
    theorem_knsl = [
        (0.0, 0.0, 0.0, 0.0),
        (1.0, 2.0, 0.5, 1.0),
        (2.5, -0.5, 0.5, 1.25),
        (-0.5, 1.5, -0.5, 0.0),
        (0.5, 0.5, 2.0, -0.25),
        (2.0, 1.0, 1.0, 1.0),
        (1.5, -0.3, -0.75, 0.5),
        (3.0, 2.0, 1.5, 2.5),
    ]
    theorem_cases = [
        {"a": a, "b": b, "k": k, "n": n, "s": s, "l": l}
        for (a, b) in theorem_ab
        for (k, n, s, l) in theorem_knsl
    ]
    hyper_grid = {
        "params": [[1.0, 1.0, 1.0], [1.5, 2.0, 1.0], [2.5, 1.0, 2.0]],
        "x": [-0.8, -0.4, -0.1, 0.0, 0.3],
        "y": [-0.8, -0.4, -0.1, 0.0, 0.3],
    }
    grids = {
        "ezz": {
            "a": [0.3, 1.0, 2.0, 5.0],
            "b": [0.2, 1.0, 2.0],
            "n": [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, -0.5, 0.5, 2.5],
        },
        "theorem": {"cases": theorem_cases},
        "appell": hyper_grid,
        "gen": hyper_grid,
        "chv": {"b": [0.5, 1.0, 2.0], "n_max": 6},
        "proofcert": {
            "moebius_pairs": [["2", "1"], ["1/2", "1/3"], ["7", "2"], ["3/5", "9/4"]],
            "log_points": [[2.0, 1.0], [0.5, 0.3], [3.0, 0.2]],
            "t_values": [0.0, 0.1, -0.1, 0.5, -0.5],
            "ode_pairs": [
                ["2", "1"], ["1/2", "1/3"], ["3", "2"], ["5", "2"], ["7", "3"],
                ["3/2", "1/2"], ["5/2", "1/5"], ["4", "1"], ["1/3", "1/4"], ["6", "5"],
            ],
            "ode_n_max": 10,
            "mutation_count": 10,
            "mutation_canary": False,
        },
        "legendre": {"n_max": 12, "c3_n_max": 30},
    }
    return SuiteConfig(suites=list(SUITE_NAMES), grids=grids)


def _sorted_cases(cases: list[Case]) -> list[Case]:
    return sorted(cases, key=Case.sort_key)


def _cases_ezz(grid: dict, tol: float) -> list[Case]:
    cases = []
    for a in grid["a"]:
        for b in grid["b"]:
            for n in grid["n"]:
                p = EzzParams(float(a), float(b), float(n))
                cases.append(
                    Case("ezz", {"a": p.a, "b": p.b, "n": p.n},
                         lambda p=p: identities.verify_ezz(p, tol))
                )
    return _sorted_cases(cases)


def _cases_theorem(grid: dict, tol: float) -> list[Case]:
    cases = []
    for entry in grid["cases"]:
        p = TheoremParams(**{k: float(entry[k]) for k in ("a", "b", "k", "n", "s", "l")})
        params = {"a": p.a, "b": p.b, "k": p.k, "n": p.n, "s": p.s, "l": p.l}
        cases.append(Case("theorem", params, lambda p=p: identities.verify_theorem_main(p, tol)))
    return _sorted_cases(cases)


def _hyper_points(grid: dict):
    for alpha, beta, beta_prime in grid["params"]:
        if not (alpha > 0 and beta > 0 and beta_prime > 0 and beta + beta_prime > alpha):
            raise ConfigError(
                f"inadmissible parameter triple ({alpha}, {beta}, {beta_prime})"
            )
        for x in grid["x"]:
            for y in grid["y"]:
                if not (abs(x) < 1 and abs(y) < 1):
                    raise ConfigError(f"grid point out of range: x={x}, y={y}")
                yield float(alpha), float(beta), float(beta_prime), float(x), float(y)


def _cases_appell(grid: dict, tol: float) -> list[Case]:
    cases = []
    for alpha, beta, beta_prime, x, y in _hyper_points(grid):
        if abs((y - x) / (y - 1.0)) > 0.95:
            continue  # transformed series argument outside the clamp
        params = {"alpha": alpha, "beta": beta, "beta_prime": beta_prime, "x": x, "y": y}
        cases.append(
            Case("appell", params,
                 lambda a=alpha, b=beta, bp=beta_prime, x=x, y=y:
                 identities.verify_appell_identity(a, b, bp, x, y, tol))
        )
    return _sorted_cases(cases)


def _cases_gen(grid: dict, tol: float) -> list[Case]:
    cases = []
    for alpha, beta, beta_prime, x, y in _hyper_points(grid):
        params = {"alpha": alpha, "beta": beta, "beta_prime": beta_prime, "x": x, "y": y}
        cases.append(
            Case("gen", params,
                 lambda a=alpha, b=beta, bp=beta_prime, x=x, y=y:
                 identities.verify_gen_integral(a, b, bp, x, y, tol))
        )
    return _sorted_cases(cases)


def _cases_chv(grid: dict, tol: float) -> list[Case]:
    cases = []
    n_max = int(grid["n_max"])
    for b in grid["b"]:
        if not float(b) > 0:
            raise ConfigError(f"chv grid requires b > 0, got {b}")
        for n in range(n_max + 1):
            for k in range(n + 1):
                cases.append(
                    Case("chv", {"b": float(b), "n": n, "k": k},
                         lambda b=float(b), n=n, k=k: identities.verify_chv(b, n, k, tol))
                )
    return _sorted_cases(cases)


def _ezz_integral(a: float, b: float, n: int, side: str) -> float:
    """One side of the base identity by quadrature (lhs: product denominator,
    rhs: linear denominator)."""
    if side == "lhs":
        smooth = lambda x: ((x + a) * (x + b)) ** -(n + 1.0)  # noqa: E731
    else:
        smooth = lambda x: ((a - b) * x + (a + 1.0) * b) ** -(n + 1.0)  # noqa: E731
    f = identities.make_integrand(float(n), float(n), smooth)
    return tanh_sinh_integrate(f, DEFAULT_REL_TOL).value


def _cases_proofcert(grid: dict, tol: float) -> list[Case]:
    cases = [
        Case("telescope_R1", {},
             lambda: IdentityReport.from_bool(
                 "telescope_R1", {}, proofcert.verify_telescoping_certificate("R1"))),
        Case("telescope_R2", {},
             lambda: IdentityReport.from_bool(
                 "telescope_R2", {}, proofcert.verify_telescoping_certificate("R2"))),
        Case("generating_invariants", {},
             lambda: IdentityReport.from_bool(
                 "generating_invariants", {}, proofcert.check_invariants_match())),
        Case("boundary_R1", {},
             lambda: IdentityReport.from_bool(
                 "boundary_R1", {}, proofcert.boundary_term("R1") == RatFunc(2))),
        Case("boundary_R2", {},
             lambda: IdentityReport.from_bool(
                 "boundary_R2", {}, proofcert.boundary_term("R2") == RatFunc(2))),
    ]

    for which in ("R1", "R2"):
        for i in range(int(grid.get("mutation_count", 10))):
            cases.append(
                Case("certificate_mutation_rejected",
                     {"r": 1.0 if which == "R1" else 2.0, "index": i},
                     lambda w=which, i=i: IdentityReport.from_bool(
                         "certificate_mutation_rejected",
                         {"r": 1.0 if w == "R1" else 2.0, "index": i},
                         not proofcert.verify_telescoping_certificate(
                             w, proofcert.mutated_certificate(w, i)))))

    for pair in grid.get("moebius_pairs", []):
        fa, fb = Fraction(pair[0]), Fraction(pair[1])
        if fa <= 0 or fb <= 0:
            raise ConfigError(f"moebius pair must be positive, got {pair}")
        params = {"a": float(fa), "b": float(fb)}

        def moebius_ok(fa=fa, fb=fb):
            ok = (
                proofcert.moebius_map(0, fa, fb) == 1
                and proofcert.moebius_map(1, fa, fb) == 0
                and proofcert.moebius_map(proofcert.INFINITY, fa, fb) == -fb
            )
            if fa != fb:
                ok = ok and proofcert.moebius_map(fb * (fa + 1) / (fb - fa), fa, fb) == -fa
            return ok

        cases.append(
            Case("moebius_singular_points", params,
                 lambda fa=fa, fb=fb, params=params: IdentityReport.from_bool(
                     "moebius_singular_points", params, moebius_ok(fa, fb))))

    p1, p2 = proofcert.build_p1_p2()
    for a, b in grid.get("log_points", []):
        for t in grid.get("t_values", []):
            params = {"a": float(a), "b": float(b), "t": float(t)}

            def log_case(a=float(a), b=float(b), t=float(t), params=params):
                lhs = proofcert.reciprocal_quadratic_integral(*p1.coefficients_at(a, b, t))
                rhs = proofcert.reciprocal_quadratic_integral(*p2.coefficients_at(a, b, t))
                return IdentityReport.build("generating_integral_equal", params, lhs, rhs, tol)

            cases.append(Case("generating_integral_equal", params, log_case))

    n_max = int(grid.get("ode_n_max", 10))
    for pair in grid.get("ode_pairs", []):
        fa, fb = Fraction(pair[0]), Fraction(pair[1])
        coeff_vals = proofcert.taylor_coeff_floats(fa, fb, n_max + 1)
        af, bf = float(fa), float(fb)
        for n in range(n_max + 1):
            c_val = coeff_vals[n]
            for side in ("lhs", "rhs"):
                params = {"a": af, "b": bf, "n": n}
                cases.append(
                    Case(f"ode_vs_{side}", params,
                         lambda af=af, bf=bf, n=n, c=c_val, side=side, params=params:
                         IdentityReport.build(
                             f"ode_vs_{side}", params, c,
                             _ezz_integral(af, bf, n, side), tol)))

    if grid.get("mutation_canary"):
        # deliberately failing case: asserts a perturbed certificate still
        # telescopes; used to exercise the runner's exit-code contract
        cases.append(
            Case("mutation_canary", {"index": 0.0},
                 lambda: IdentityReport.from_bool(
                     "mutation_canary", {"index": 0.0},
                     proofcert.verify_telescoping_certificate(
                         "R1", proofcert.mutated_certificate("R1", 0)))))
    return _sorted_cases(cases)


def _cases_legendre(grid: dict, tol: float) -> list[Case]:
    cases = []
    n_max = int(grid["n_max"])
    for n in range(n_max + 1):
        for k in range(n + 1):
            for name, fn in (
                ("di_symmetry", legendre.verify_di_symmetry),
                ("corollary2", legendre.verify_corollary2),
                ("corollary4", legendre.verify_corollary4),
            ):
                cases.append(
                    Case(name, {"n": n, "k": k},
                         lambda name=name, fn=fn, n=n, k=k:
                         IdentityReport.from_bool(name, {"n": n, "k": k}, fn(n, k))))

    for n in range(n_max + 1):
        def eigen(n=n):
            pn = legendre.legendre_poly(n)
            lhs = (legendre.ExactPoly((-1, 0, 1)) * pn.derivative()).derivative()
            return IdentityReport.from_bool("eigenfunction", {"n": n}, lhs == n * (n + 1) * pn)

        cases.append(Case("eigenfunction", {"n": n}, eigen))

    c3_max = int(grid["c3_n_max"])
    for n in range(c3_max + 1):
        for k in range(n + 1):
            for l in range(n + 1):
                cases.append(
                    Case("corollary3", {"n": n, "k": k, "l": l},
                         lambda n=n, k=k, l=l: IdentityReport.from_bool(
                             "corollary3", {"n": n, "k": k, "l": l},
                             legendre.verify_corollary3(n, k, l))))
    return _sorted_cases(cases)


_SUITE_BUILDERS = {
    "ezz": _cases_ezz,
    "theorem": _cases_theorem,
    "appell": _cases_appell,
    "gen": _cases_gen,
    "chv": _cases_chv,
    "proofcert": _cases_proofcert,
    "legendre": _cases_legendre,
}


# ---------------------------------------------------------------------------
# execution and rendering
# ---------------------------------------------------------------------------


def build_cases(suite: str, grid: dict, tol: float) -> list[Case]:
    try:
        return _SUITE_BUILDERS[suite](grid, tol)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"invalid grid for suite {suite!r}: {e}") from e


def _run_one(case: Case):
    try:
        return case.thunk()
    except _CASE_ERRORS as e:
        return CaseError(case.identity, case.params, f"{type(e).__name__}: {e}")


def _run_cases(cases: list[Case], parallelism: int) -> list:
    if parallelism <= 1:
        return [_run_one(c) for c in cases]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_run_one, cases))


def run_suite(config: SuiteConfig) -> list[SuiteReport]:
    """Execute every suite in the config; cases run (possibly concurrently)
    in deterministic sorted order, and reports echo the grids used."""
    config.validate()
    defaults = default_grids().grids
    reports = []
    for suite in config.suites:
        grid = {**defaults[suite], **config.grids.get(suite, {})}
        cases = build_cases(suite, grid, config.tolerance)
        start = time.perf_counter()
        outcomes = _run_cases(cases, config.parallelism)
        wall_ms = (time.perf_counter() - start) * 1e3
        summary = {
            "pass": sum(1 for o in outcomes if isinstance(o, IdentityReport) and o.passed),
            "fail": sum(1 for o in outcomes if isinstance(o, IdentityReport) and not o.passed),
            "error": sum(1 for o in outcomes if isinstance(o, CaseError)),
        }
        reports.append(SuiteReport(suite, config.tolerance, grid, outcomes, summary, wall_ms))
    return reports


def exit_code(reports: list[SuiteReport]) -> int:
    bad = sum(r.summary["fail"] + r.summary["error"] for r in reports)
    return 1 if bad else 0


def render_json(reports: list[SuiteReport]) -> str:
    payload = [r.to_dict() for r in reports]
    return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)


def render_csv(reports: list[SuiteReport]) -> str:
    param_keys = sorted({k for r in reports for c in r.cases for k in c.params})
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["suite", "identity", *param_keys, "lhs", "rhs", "abs_err", "rel_err", "tol", "pass", "error"]
    )
    for r in reports:
        for c in r.cases:
            base = [r.suite, c.identity] + [c.params.get(k, "") for k in param_keys]
            if isinstance(c, IdentityReport):
                writer.writerow(base + [c.lhs, c.rhs, c.abs_err, c.rel_err, c.tol, c.passed, ""])
            else:
                writer.writerow(base + ["", "", "", "", "", "", c.message])
    return out.getvalue()


def _fmt_params(params: dict) -> str:
    return ", ".join(f"{k}={v:g}" for k, v in sorted(params.items()))


def render_markdown(reports: list[SuiteReport]) -> str:
    lines = []
    for r in reports:
        s = r.summary
        lines.append(f"## suite: {r.suite}")
        lines.append("")
        lines.append(
            f"tolerance {r.tolerance:g} | pass {s['pass']} | fail {s['fail']} "
            f"| error {s['error']} | wall {r.wall_ms:.1f} ms"
        )
        lines.append("")
        lines.append("| identity | params | lhs | rhs | rel_err | pass |")
        lines.append("|---|---|---|---|---|---|")
        for c in r.cases:
            if isinstance(c, IdentityReport):
                lines.append(
                    f"| {c.identity} | {_fmt_params(c.params)} | {c.lhs!r} | {c.rhs!r} "
                    f"| {c.rel_err:.3e} | {'yes' if c.passed else 'NO'} |"
                )
            else:
                lines.append(
                    f"| {c.identity} | {_fmt_params(c.params)} | error | {c.message} | - | NO |"
                )
        lines.append("")
    return "\n".join(lines)


_RENDERERS = {"json": render_json, "csv": render_csv, "markdown": render_markdown}


def emit(reports: list[SuiteReport], output_format: str, output_path: str | None) -> None:
    text = _RENDERERS[output_format](reports)
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# single-identity verification
# ---------------------------------------------------------------------------


def _need(args, names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise ConfigError(f"missing required options: {', '.join('--' + n for n in missing)}")


def _verify_cases(args) -> list:
    tol = args.tol if args.tol is not None else identities.DEFAULT_TOL
    name = args.identity
    if name == "ezz":
        _need(args, ["a", "b", "n"])
        return [identities.verify_ezz(EzzParams(args.a, args.b, args.n), tol)]
    if name == "theorem":
        _need(args, ["a", "b", "k", "n", "s", "l"])
        return [identities.verify_theorem_main(
            TheoremParams(args.a, args.b, args.k, args.n, args.s, args.l), tol)]
    if name == "5ezz":
        _need(args, ["a", "b", "k", "l", "s"])
        return [identities.verify_5ezz(args.a, args.b, args.k, args.l, args.s, tol)]
    if name == "appell":
        _need(args, ["alpha", "beta", "beta-prime", "x", "y"])
        return [identities.verify_appell_identity(
            args.alpha, args.beta, args.beta_prime, args.x, args.y, tol)]
    if name == "gen":
        _need(args, ["alpha", "beta", "beta-prime", "x", "y"])
        return [identities.verify_gen_integral(
            args.alpha, args.beta, args.beta_prime, args.x, args.y, tol)]
    if name == "chv":
        _need(args, ["b", "n", "k"])
        return [identities.verify_chv(args.b, int(args.n), int(args.k), tol)]
    if name == "gamma-mixed":
        _need(args, ["alpha", "beta", "gamma", "m", "n"])
        return [identities.verify_gamma_mixed_partial(
            args.alpha, args.beta, args.gamma, int(args.m), int(args.n))]
    if name == "telescope":
        return [
            IdentityReport.from_bool(
                f"telescope_{w}", {}, proofcert.verify_telescoping_certificate(w))
            for w in ("R1", "R2")
        ]
    if name == "invariants":
        return [IdentityReport.from_bool(
            "generating_invariants", {}, proofcert.check_invariants_match())]
    if name in ("di-symmetry", "corollary2", "corollary4"):
        _need(args, ["n", "k"])
        fn = {
            "di-symmetry": legendre.verify_di_symmetry,
            "corollary2": legendre.verify_corollary2,
            "corollary4": legendre.verify_corollary4,
        }[name]
        n, k = int(args.n), int(args.k)
        return [IdentityReport.from_bool(name, {"n": n, "k": k}, fn(n, k))]
    if name == "corollary3":
        _need(args, ["n", "k", "l"])
        n, k, l = int(args.n), int(args.k), int(args.l)
        return [IdentityReport.from_bool(
            name, {"n": n, "k": k, "l": l}, legendre.verify_corollary3(n, k, l))]
    if name == "3f2":
        _need(args, ["n", "k", "l"])
        n, k, l = int(args.n), int(args.k), int(args.l)
        from .algebra import binomial

        value = legendre.terminating_3f2(n, k, l)
        ref = Fraction(binomial(2 * l, n - k), binomial(2 * l, n + k))
        return [IdentityReport.build(
            "3f2", {"n": n, "k": k, "l": l}, float(value), float(ref), 0.0)]
    raise ConfigError(f"unknown identity {name!r}")


VERIFY_IDENTITIES = (
    "ezz", "theorem", "5ezz", "appell", "gen", "chv", "gamma-mixed",
    "telescope", "invariants", "di-symmetry", "corollary2", "corollary3",
    "corollary4", "3f2",
)


# ---------------------------------------------------------------------------
# argument parsing and entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intident",
        description="Verify definite-integral and hypergeometric identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a single identity instance")
    v.add_argument("identity", choices=VERIFY_IDENTITIES)
    for opt in ("a", "b", "n", "k", "s", "l", "x", "y", "alpha", "beta", "beta-prime", "gamma", "m"):
        v.add_argument(f"--{opt}", type=float, default=None)
    v.add_argument("--tol", type=float, default=None, help="residual tolerance")
    v.add_argument("--format", choices=OUTPUT_FORMATS, default="json")
    v.add_argument("--out", default=None, help="write the report to this path")

    s = sub.add_parser("suite", help="run one suite or all of them over grids")
    s.add_argument("name", choices=SUITE_NAMES + ("all",))
    s.add_argument("--config", default=None, help="JSON file with SuiteConfig fields")
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--jobs", type=int, default=None, help="parallel case evaluation")
    s.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    s.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            try:
                cases = _verify_cases(args)
            except _CASE_ERRORS as e:
                if isinstance(e, ConfigError):
                    raise
                print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
                return 1
            tol = args.tol if args.tol is not None else identities.DEFAULT_TOL
            report = SuiteReport(
                suite=f"verify:{args.identity}",
                tolerance=tol,
                grid={},
                cases=cases,
                summary={
                    "pass": sum(c.passed for c in cases),
                    "fail": sum(not c.passed for c in cases),
                    "error": 0,
                },
                wall_ms=0.0,
            )
            emit([report], args.format, args.out)
            return 0 if all(c.passed for c in cases) else 1

        config = SuiteConfig() if args.config is None else _load_config(args.config)
        config.suites = list(SUITE_NAMES) if args.name == "all" else [args.name]
        if args.tol is not None:
            config.tolerance = args.tol
        if args.jobs is not None:
            config.parallelism = args.jobs
        if args.format is not None:
            config.output_format = args.format
        if args.out is not None:
            config.output_path = args.out
        reports = run_suite(config)
        emit(reports, config.output_format, config.output_path)
        return exit_code(reports)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2


def _load_config(path: str) -> SuiteConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path!r}: {e}") from e
    return SuiteConfig.from_dict(data)


if __name__ == "__main__":
    sys.exit(main())
