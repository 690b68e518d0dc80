"""Command line interface: tables, verification suites, and sweeps.

All inputs are rational literals (``p`` or ``p/r``); floats are rejected at
the parser. Output is deterministic: same configuration, byte-identical
bytes, in both text and JSON formats. Exit code 0 means every check
passed, 1 means at least one identity FAILed, 2 means a parameter or
usage ERROR.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import (
    casimir_centrality,
    qhahn_embedding,
    verify_affine_relations,
    verify_raw_relations,
)
from .biorth import (
    verify_adjoint_gevp,
    verify_adjoint_structure,
    verify_biorthogonality,
)
from .pastro import (
    baxter_coefficients,
    biorthogonal_partner,
    grid_weights,
    norm_constant,
    pastro_poly,
    verify_baxter_consistency,
)
from .qcore import ParameterError, QParams, format_rational, parse_rational
from .qdiff import (
    verify_contiguity,
    verify_gevp,
    verify_qdiff_equation,
    verify_recurrence,
)
from .report import (
    Check,
    ERROR,
    Report,
    SKIP,
    matrix_to_json,
    poly_to_json,
    vector_to_json,
)

__all__ = ["RunConfig", "run", "emit", "main", "admissible_draws", "verify_suite"]


@dataclass
class RunConfig:
    """One CLI invocation: the subcommand plus every knob it may read."""

    command: str
    q: Fraction = Fraction(1, 2)
    a: Fraction = Fraction(3)
    b: Fraction = Fraction(1, 5)
    mu: Fraction = Fraction(2, 3)
    n_max: int = 8
    N: int = 4
    fmt: str = "text"
    seed: int = 1
    draws: int = 5


def _admissibility_issues(params: QParams, n_max: int) -> list[str]:
    """Vanishing factors for the verify suite, including the b -> bq shift."""
    issues = params.vanishing_factors(n_max + 2)
    shifted = params.with_b(params.b * params.q)
    issues += [f"(at shifted b -> bq) {text}" for text in shifted.vanishing_factors(n_max)]
    return issues


def verify_suite(params: QParams, n_max: int) -> list[Check]:
    """Every polynomial/operator identity at one parameter triple, n <= n_max."""
    checks: list[Check] = []
    for n in range(n_max + 1):
        checks.append(verify_gevp(n, params))
    for n in range(n_max + 1):
        checks.append(verify_qdiff_equation(n, params))
    for n in range(n_max + 1):
        checks.extend(verify_recurrence(n, params))
    for n in range(n_max + 1):
        checks.extend(verify_contiguity(n, params))
    checks.extend(verify_baxter_consistency(n_max, params))
    return checks


def _error_check(context: dict[str, str], message: str) -> Check:
    return Check(
        name="parameters",
        identity="admissible parameter configuration",
        params=context,
        status=ERROR,
        witness=message,
    )


def _cmd_table(config: RunConfig) -> tuple[Report, dict, list[str]]:
    report = Report()
    extra: dict = {}
    lines: list[str] = []
    context = {
        "q": format_rational(config.q),
        "a": format_rational(config.a),
        "b": format_rational(config.b),
        "n_max": str(config.n_max),
    }
    try:
        params = QParams(config.q, config.a, config.b)
        issues = _admissibility_issues(params, config.n_max)
        if issues:
            report.checks.append(_error_check(context, "; ".join(issues)))
            return report, extra, lines
        polys = [pastro_poly(n, params) for n in range(config.n_max + 1)]
        partners = [biorthogonal_partner(n, params) for n in range(config.n_max + 1)]
        data = baxter_coefficients(config.n_max, params)
    except ParameterError as exc:
        report.checks.append(_error_check(context, str(exc)))
        return report, extra, lines

    extra = {
        "params": context,
        "pastro": [poly_to_json(p) for p in polys],
        "partners": [poly_to_json(r) for r in partners],
        "alpha": vector_to_json(data.alpha),
        "beta": vector_to_json(data.beta),
        "h": vector_to_json(data.h),
    }
    for n, poly in enumerate(polys):
        lines.append(f"P_{n} = {poly}")
    for n, partner in enumerate(partners):
        lines.append(f"R_{n} = {partner}")
    for n in range(config.n_max + 1):
        lines.append(
            f"alpha_{n} = {format_rational(data.alpha[n])}   "
            f"beta_{n} = {format_rational(data.beta[n])}   "
            f"h_{n} = {format_rational(data.h[n])}"
        )
    return report, extra, lines


def _cmd_verify(config: RunConfig) -> tuple[Report, dict, list[str]]:
    report = Report()
    context = {
        "q": format_rational(config.q),
        "a": format_rational(config.a),
        "b": format_rational(config.b),
        "n_max": str(config.n_max),
    }
    try:
        params = QParams(config.q, config.a, config.b)
        issues = _admissibility_issues(params, config.n_max)
        if issues:
            report.checks.append(_error_check(context, "; ".join(issues)))
            return report, {}, []
        report.extend(verify_suite(params, config.n_max))
    except ParameterError as exc:
        report.checks.append(_error_check(context, str(exc)))
    return report, {}, []


def _cmd_biorth(config: RunConfig) -> tuple[Report, dict, list[str]]:
    report = Report()
    extra: dict = {}
    lines: list[str] = []
    context = {
        "q": format_rational(config.q),
        "b": format_rational(config.b),
        "N": str(config.N),
    }
    try:
        gram, biorth_checks = verify_biorthogonality(config.N, config.b, config.q)
        report.extend(verify_adjoint_structure(config.N, config.b, config.q))
        for n in range(config.N):
            report.extend(verify_adjoint_gevp(n, config.N, config.b, config.q))
        report.extend(biorth_checks)
    except ParameterError as exc:
        report.checks.append(_error_check(context, str(exc)))
        return report, extra, lines

    weights = grid_weights(config.N, config.b, config.q)
    params = QParams(weights.q, weights.q ** (1 - config.N), weights.b)
    h = [norm_constant(n, params) for n in range(config.N)]
    extra = {
        "params": context,
        "grid": vector_to_json(weights.grid),
        "weights": vector_to_json(weights.w),
        "h": vector_to_json(h),
        "gram": matrix_to_json(gram),
    }
    lines.append("grid:    " + "  ".join(vector_to_json(weights.grid)))
    lines.append("weights: " + "  ".join(vector_to_json(weights.w)))
    lines.append("h:       " + "  ".join(vector_to_json(h)))
    lines.append("gram:")
    for row in matrix_to_json(gram):
        lines.append("  " + "  ".join(row))
    return report, extra, lines


def _cmd_algebra(config: RunConfig) -> tuple[Report, dict, list[str]]:
    report = Report()
    extra: dict = {}
    lines: list[str] = []
    context = {
        "q": format_rational(config.q),
        "a": format_rational(config.a),
        "b": format_rational(config.b),
        "mu": format_rational(config.mu),
    }
    try:
        params = QParams(config.q, config.a, config.b)
        report.extend(verify_raw_relations(params))
        report.extend(verify_affine_relations(params))
        report.extend(casimir_centrality(params))
        constants, pencil_checks = qhahn_embedding(params, config.mu)
        report.extend(pencil_checks)
    except ParameterError as exc:
        report.checks.append(_error_check(context, str(exc)))
        return report, extra, lines

    gamma4_json = [
        {"shift": shift} | poly_to_json(coefficient)
        for shift, coefficient in constants.gamma4.items()
    ]
    extra = {
        "params": context,
        "alpha1": format_rational(constants.alpha1),
        "alpha2": format_rational(constants.alpha2),
        "gamma1": format_rational(constants.gamma1),
        "gamma2": format_rational(constants.gamma2),
        "gamma3": format_rational(constants.gamma3),
        "gamma4": gamma4_json,
        "degenerate_pencil": constants.degenerate,
        "presentation": {"beta1": "0", "beta2": "1", "delta1": "0", "delta2": "1"},
    }
    lines.append(f"alpha1 = {format_rational(constants.alpha1)}")
    lines.append(f"alpha2 = {format_rational(constants.alpha2)}")
    lines.append(f"gamma1 = {format_rational(constants.gamma1)}")
    lines.append(f"gamma2 = {format_rational(constants.gamma2)}")
    lines.append(f"gamma3 = {format_rational(constants.gamma3)}")
    lines.append(f"gamma4 = {constants.gamma4}")
    lines.append(f"degenerate pencil: {'yes' if constants.degenerate else 'no'}")
    return report, extra, lines


def _draw_triple(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    def rational() -> Fraction:
        return Fraction(rng.randint(-6, 6), rng.randint(1, 6))

    return rational(), rational(), rational()


def admissible_draws(seed: int, count: int, n_max: int) -> list[QParams]:
    """Deterministic admissible parameter triples (inadmissible draws skipped)."""
    rng = random.Random(seed)
    out: list[QParams] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000:
            raise RuntimeError("could not draw enough admissible parameter triples")
        q, a, b = _draw_triple(rng)
        try:
            params = QParams(q, a, b)
        except ParameterError:
            continue
        if _admissibility_issues(params, n_max):
            continue
        out.append(params)
    return out


def _cmd_sweep(config: RunConfig) -> tuple[Report, dict, list[str]]:
    report = Report()
    rng = random.Random(config.seed)
    accepted: list[tuple[str, QParams]] = []
    attempts = 0
    while len(accepted) < config.draws and attempts < 1000:
        attempts += 1
        label = f"draw-{attempts}"
        q, a, b = _draw_triple(rng)
        drawn = {
            "draw": label,
            "q": format_rational(q),
            "a": format_rational(a),
            "b": format_rational(b),
        }
        try:
            params = QParams(q, a, b)
        except ParameterError as exc:
            report.checks.append(
                Check(
                    name="sweep-draw",
                    identity="admissible parameter draw",
                    params=drawn,
                    status=SKIP,
                    witness=str(exc),
                )
            )
            continue
        issues = _admissibility_issues(params, config.n_max)
        if issues:
            report.checks.append(
                Check(
                    name="sweep-draw",
                    identity="admissible parameter draw",
                    params=drawn,
                    status=SKIP,
                    witness="; ".join(issues),
                )
            )
            continue
        accepted.append((label, params))
        for check in verify_suite(params, config.n_max):
            report.checks.append(replace(check, params=check.params | {"draw": label}))
    return report, {"draws_requested": config.draws, "draws_run": len(accepted)}, []


_COMMANDS = {
    "table": _cmd_table,
    "verify": _cmd_verify,
    "biorth": _cmd_biorth,
    "algebra": _cmd_algebra,
    "sweep": _cmd_sweep,
}


def run(config: RunConfig) -> tuple[Report, dict, list[str]]:
    """Execute one configuration; returns (report, json extras, text lines)."""
    try:
        handler = _COMMANDS[config.command]
    except KeyError:
        raise ValueError(f"unknown command {config.command!r}") from None
    return handler(config)


def emit(report: Report, extra: dict, lines: list[str], fmt: str) -> str:
    """Render a finished run in the requested format (stable byte-for-byte)."""
    if fmt == "json":
        return report.render_json(extra)
    parts = list(lines)
    parts.append(report.render_text())
    return "\n".join(parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=parse_rational, default=Fraction(1, 2), help="deformation parameter (rational literal)")
    common.add_argument("--a", type=parse_rational, default=Fraction(3), help="first family parameter (rational literal)")
    common.add_argument("--b", type=parse_rational, default=Fraction(1, 5), help="second family parameter (rational literal)")
    common.add_argument("--mu", type=parse_rational, default=Fraction(2, 3), help="pencil parameter (rational literal)")
    common.add_argument("--nmax", dest="n_max", type=int, default=8, help="largest degree to cover")
    common.add_argument("--N", dest="N", type=int, default=4, help="grid size for the truncated representation")
    common.add_argument("--seed", type=int, default=1, help="seed for the sweep draws")
    common.add_argument("--draws", type=int, default=5, help="number of admissible sweep points")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text", help="output format")

    parser = argparse.ArgumentParser(
        prog="pastroq",
        description="Exact construction and verification of a biorthogonal "
        "polynomial family and its q-difference operator triple.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="emit P_n, R_n and the recurrence data")
    sub.add_parser("verify", parents=[common], help="run every polynomial/operator identity check")
    sub.add_parser("biorth", parents=[common], help="run the grid, adjoint and biorthogonality checks")
    sub.add_parser("algebra", parents=[common], help="run the algebra relation checks")
    sub.add_parser("sweep", parents=[common], help="run the verify suite at seeded random points")
    return parser


def main(argv: list[str] | None = None) -> None:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        q=args.q,
        a=args.a,
        b=args.b,
        mu=args.mu,
        n_max=args.n_max,
        N=args.N,
        fmt=args.fmt,
        seed=args.seed,
        draws=args.draws,
    )
    report, extra, lines = run(config)
    print(emit(report, extra, lines, config.fmt))
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
