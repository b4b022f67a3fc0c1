# poly_ldc_lib/cli.py
"""
Command surface of poly-ldc.

Every command builds a Report; `--json` prints it as sorted, indented JSON on
stdout, otherwise a short text rendering is printed. Library errors become
exit codes through EXIT_CODES, and a failing law exits with 1.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import typer
from thefuzz import process

from . import config
from .algebra import FiniteMonoid, linear_bialgebra, verify_linear_bialgebra
from .closure import close, coclose
from .cores import in_left_core, in_right_core, verify_core_membership
from .duality import canonical_dual, cyclic_pairs, search_duals, verify_dual_pair, verify_mix_eta_epsilon, verify_retract_section
from .errors import DomainMismatch, InvalidMonoid, NotRepresentable, ParseError, PolyLDCError, SizeCap
from .expr import evaluate_expr, format_expr, parse
from .laws import SUITES, run_suite
from .logger import logger, setup_logger
from .models import LawReport, Report
from .monoidal import substitute, tensor
from .polycore import Polynomial, evaluate, format_forest, format_polynomial, hom_count

EXIT_LAW_FAILED = 1
EXIT_UNKNOWN_NAME = 8

EXIT_CODES = {
    SizeCap: 3,
    DomainMismatch: 4,
    ParseError: 5,
    NotRepresentable: 6,
    InvalidMonoid: 7,
}

SIDES = ("left", "right")

app = typer.Typer(help="Finite polynomial functors as an isomix linearly distributive category.", add_completion=False)


@dataclass
class Options:
    json: bool = False
    cap: Optional[int] = None
    seed: int = 0


class UnknownName(PolyLDCError):
    def __init__(self, kind: str, name: str, choices: List[str]):
        self.kind = kind
        self.name = name
        suggestion, score = process.extractOne(name, choices)
        self.suggestion = suggestion if score >= 50 else None
        hint = f", did you mean '{suggestion}'?" if self.suggestion else ""
        super().__init__(f"Unknown {kind} '{name}'{hint} Choose one of: {', '.join(choices)}")


def exit_code_for(error: PolyLDCError) -> int:
    if isinstance(error, UnknownName):
        return EXIT_UNKNOWN_NAME
    for cls, code in EXIT_CODES.items():
        if isinstance(error, cls):
            return code
    return EXIT_LAW_FAILED


def _options(ctx: typer.Context) -> Options:
    return ctx.obj if isinstance(ctx.obj, Options) else Options()


def _emit(options: Options, report: Report) -> None:
    typer.echo(report.to_json() if options.json else report.to_text())


def _run(ctx: typer.Context, command: str, build: Callable[[], Report]) -> None:
    """Run `build` under the requested cap, print the report and exit with its status."""
    options = _options(ctx)
    try:
        with config.size_cap(options.cap):
            report = build()
    except PolyLDCError as e:
        code = exit_code_for(e)
        logger.info(f"Command {command} failed with {type(e).__name__}: {e}")
        if options.json:
            _emit(options, Report(command, {"error": type(e).__name__, "message": str(e)}, code))
        else:
            typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=code)
    report.command = command
    _emit(options, report)
    if report.exit_status:
        raise typer.Exit(code=report.exit_status)


def _polynomial(text: str) -> Polynomial:
    return evaluate_expr(parse(text))


def _law_lines(reports: List[LawReport]) -> List[str]:
    lines = []
    for report in reports:
        lines.append(str(report))
        lines.extend(f"  {failure}" for failure in report.failures())
    return lines


def _law_report(command_results: Dict[str, Any], reports: List[LawReport], header: List[str]) -> Report:
    passed = all(r.passed for r in reports)
    results = dict(command_results)
    results["laws"] = [r.to_json() for r in reports]
    results["pass"] = passed
    return Report("", results, 0 if passed else EXIT_LAW_FAILED, header + _law_lines(reports))


@app.callback()
def main(
    ctx: typer.Context,
    json: bool = typer.Option(False, "--json", help="Print the report as JSON."),
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Size cap on materialized tables."),
    seed: int = typer.Option(0, "--seed", help="Seed for sampled law checks."),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Log level on stderr, e.g. DEBUG."),
):
    try:
        loaded = config.reload_settings()
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="environment")
    try:
        setup_logger(level=log_level or loaded.log_level)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--log-level")
    ctx.obj = Options(json=json, cap=cap, seed=seed)


@app.command()
def show(
    ctx: typer.Context,
    expr: str,
    forest: bool = typer.Option(False, "--forest", help="Draw one corolla per position."),
    unicode: bool = typer.Option(False, "--unicode", help="Print with ⊗, ◁ and superscripts."),
):
    """Parse an expression and print it with its normal form."""

    def build() -> Report:
        tree = parse(expr)
        p = evaluate_expr(tree)
        results: Dict[str, Any] = {
            "expr": format_expr(tree, unicode=unicode),
            "polynomial": format_polynomial(p, unicode=unicode),
            "positions": p.num_positions,
            "cards": list(p.cards),
        }
        lines = [f"{results['expr']} = {results['polynomial']}"]
        if forest:
            results["forest"] = format_forest(p)
            lines.extend(results["forest"])
        return Report("show", results, lines=lines)

    _run(ctx, "show", build)


@app.command("eval")
def eval_command(
    ctx: typer.Context,
    expr: str,
    at: int = typer.Option(..., "--at", min=0, help="Size of the set to evaluate at."),
):
    """Cardinality of p(X) for |X| = N."""

    def build() -> Report:
        p = _polynomial(expr)
        size = evaluate(p, at).size
        return Report("eval", {"polynomial": str(p), "at": at, "size": size}, lines=[f"{p} at {at} = {size}"])

    _run(ctx, "eval", build)


@app.command()
def homcount(ctx: typer.Context, dom: str, cod: str):
    """Number of maps between two polynomials."""

    def build() -> Report:
        p, q = _polynomial(dom), _polynomial(cod)
        count = hom_count(p, q)
        return Report("homcount", {"dom": str(p), "cod": str(q), "count": count}, lines=[str(count)])

    _run(ctx, "homcount", build)


def _binary(name: str, operation: Callable[[Polynomial, Polynomial], Polynomial], help_text: str) -> None:
    def command(ctx: typer.Context, left: str, right: str):
        def build() -> Report:
            p, q = _polynomial(left), _polynomial(right)
            result = operation(p, q)
            return Report(
                name,
                {"left": str(p), "right": str(q), "result": str(result)},
                lines=[str(result)],
            )

        _run(ctx, name, build)

    command.__doc__ = help_text
    app.command(name)(command)


_binary("tensor", tensor, "Dirichlet product p ⊗ q.")
_binary("sub", substitute, "Substitution product p ◁ q.")
_binary("close", close, "Closure [p, q], right adjoint of - ⊗ p.")
_binary("coclose", coclose, "Coclosure of p over q, left adjoint of - ◁ q.")


@app.command("check-dual")
def check_dual(
    ctx: typer.Context,
    size: int = typer.Option(..., "--size", min=0, help="Size of A in Ay -| y^A."),
):
    """Verify the canonical duality Ay ⊣⊣ y^A."""

    def build() -> Report:
        w = canonical_dual(size)
        reports = [verify_dual_pair(w), verify_mix_eta_epsilon(w), verify_retract_section(w)]
        return _law_report({"left": str(w.left), "right": str(w.right)}, reports, [f"{w.left} -| {w.right}"])

    _run(ctx, "check-dual", build)


@app.command("search-duals")
def search_duals_command(
    ctx: typer.Context,
    max_pos: int = typer.Option(..., "--max-pos", min=0),
    max_dir: int = typer.Option(..., "--max-dir", min=0),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Process pool size."),
):
    """Every dual pair with both legs inside the bounds."""

    def build() -> Report:
        results = search_duals(max_pos, max_dir, workers=workers)
        cyclic = cyclic_pairs(results)
        lines = [f"{r.left} -| {r.right}  ({len(r.witnesses)} witnesses)" for r in results]
        lines.append("cyclic: " + ", ".join(f"({r.left}, {r.right})" for r in cyclic))
        return Report(
            "search-duals",
            {
                "bounds": [max_pos, max_dir],
                "pairs": [r.to_json() for r in results],
                "cyclic": [[str(r.left), str(r.right)] for r in cyclic],
            },
            lines=lines,
        )

    _run(ctx, "search-duals", build)


@app.command()
def core(
    ctx: typer.Context,
    expr: str,
    max_probe: int = typer.Option(3, "--max-probe", min=0, help="Probe polynomials up to this many positions and directions."),
):
    """Left and right core membership, by shape and by probing indep."""

    def build() -> Report:
        p = _polynomial(expr)
        reports = [verify_core_membership(p, max_probe, side) for side in SIDES]
        left, right = in_left_core(p), in_right_core(p)
        header = [f"left-core: {str(left).lower()}", f"right-core: {str(right).lower()}"]
        return _law_report({"polynomial": str(p), "left_core": left, "right_core": right}, reports, header)

    _run(ctx, "core", build)


def _resolve(kind: str, name: str, choices: List[str]) -> str:
    if name not in choices:
        raise UnknownName(kind, name, choices)
    return name


@app.command("check-bialgebra")
def check_bialgebra(
    ctx: typer.Context,
    monoid: Path = typer.Option(..., "--monoid", exists=True, dir_okay=False, help="Monoid table as JSON."),
    side: str = typer.Option("left", "--side", help="left (on My) or right (on y^M)."),
):
    """Every law of the linear bialgebra built from a finite monoid."""

    def build() -> Report:
        chosen = _resolve("side", side, list(SIDES))
        m = FiniteMonoid.load(monoid)
        report = verify_linear_bialgebra(linear_bialgebra(m, chosen))
        return _law_report({"side": chosen, "monoid": m.to_json()}, [report], [])

    _run(ctx, "check-bialgebra", build)


@app.command()
def laws(
    ctx: typer.Context,
    suite: str = typer.Option(..., "--suite", help=f"One of: {', '.join(SUITES)}."),
):
    """Run a named law suite."""
    options = _options(ctx)

    def build() -> Report:
        name = _resolve("suite", suite, list(SUITES))
        report = run_suite(name, seed=options.seed)
        return _law_report({"suite": name, "seed": options.seed}, [report], [])

    _run(ctx, "laws", build)
