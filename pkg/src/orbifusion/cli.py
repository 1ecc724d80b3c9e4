"""Command-line front end for the orbifold catalog.

Subcommands query one level-``k`` catalog at a time: ``catalog`` lists every
irreducible module with weight, quantum dimension, dual and generating
vector; ``fuse``/``coeff``/``dual`` expose the fusion ring; ``qdim`` and
``glob`` the quantum dimensions; ``verify`` runs the identity suites.

Labels on the command line use the grammar ``u:<i>:<j>``, ``t1:<i>:<j>``,
``t2:<i>:<j>`` (lowercase, colon-separated).  Conformal weights are always
printed as exact fractions, never floats.  Exit status: 0 success, 1
verification failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal

import click
import mpmath

from .labels import IrrLabel, enumerate_irreducibles, parse_label
from .weights import conformal_weight, generator_desc
from .qdim import global_dimension, qdim_numeric
from .fusion import contragredient, fuse_irreducible, fusion_coefficient
from .verify import run_suites

FORMATS = click.Choice(["json", "csv", "markdown"])
SUITE_NAMES = ["unit", "comm", "assoc", "dual", "qdim", "oracle", "catalog", "all"]


def _check_level(ctx, param, value: int) -> int:
    if value < 1:
        raise click.BadParameter(f"level must be >= 1, got {value}")
    return value


_level_option = click.option(
    "--level", "-k", "k", type=int, required=True, callback=_check_level,
    help="Level k of the catalog (k >= 1).",
)


def _label(text: str, k: int) -> IrrLabel:
    try:
        return parse_label(text, k)
    except ValueError as err:
        raise click.UsageError(str(err))


def _fixed(value: mpmath.mpf, decimals: int) -> str:
    """Render a non-negative value with exactly ``decimals`` decimal places."""
    digits = mpmath.nstr(value, decimals + 15)
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(digits).quantize(quantum, rounding=ROUND_HALF_EVEN))


def _emit(text: str, out) -> None:
    click.echo(text, file=out)  # click writes to stdout when out is None


def _markdown_table(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(" --- " for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines)


def _csv_table(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


@click.group()
def main() -> None:
    """Exact data of the Z3-orbifold affine sl2 catalog at level k."""


@main.command()
@_level_option
@click.option("--format", "-f", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--out", type=click.File("w"), default=None, help="Write the document to a file.")
def catalog(k: int, fmt: str, out) -> None:
    """List all 9(k+1) irreducible modules with their invariants."""
    rows = []
    for lab in enumerate_irreducibles(k):
        rows.append(
            {
                "label": lab.token(),
                "pretty": lab.pretty(k),
                "weight": str(conformal_weight(lab, k)),
                "qdim": _fixed(qdim_numeric(lab, k, precision=20), 12),
                "dual": contragredient(lab, k).token(),
                "generator": generator_desc(lab, k),
            }
        )
    if fmt == "json":
        doc = {"level": k, "modules": {row["label"]: {key: row[key] for key in ("pretty", "weight", "qdim", "dual", "generator")} for row in rows}}
        _emit(json.dumps(doc, indent=2), out)
    elif fmt == "csv":
        header = ["label", "pretty", "weight", "qdim", "dual", "generator"]
        _emit(_csv_table(header, [[row[h] for h in header] for row in rows]), out)
    else:
        header = ["module", "weight", "qdim", "dual", "generator"]
        dual_pretty = {row["label"]: row["pretty"] for row in rows}
        body = [[row["pretty"], row["weight"], row["qdim"], dual_pretty[row["dual"]], row["generator"]] for row in rows]
        _emit(_markdown_table(header, body), out)


@main.command()
@_level_option
@click.argument("a")
@click.argument("b")
@click.option("--format", "-f", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--out", type=click.File("w"), default=None, help="Write the document to a file.")
def fuse(k: int, a: str, b: str, fmt: str, out) -> None:
    """Fusion product A x B as a multiplicity vector."""
    product = fuse_irreducible(_label(a, k), _label(b, k), k)
    entries = [(lab.token(), mult) for lab, mult in product.items()]
    if fmt == "json":
        _emit(json.dumps(dict(entries)), out)
    elif fmt == "csv":
        _emit(_csv_table(["label", "multiplicity"], [[tok, str(m)] for tok, m in entries]), out)
    else:
        pretty = {lab.token(): lab.pretty(k) for lab in product}
        _emit(_markdown_table(["module", "multiplicity"], [[pretty[tok], str(m)] for tok, m in entries]), out)


@main.command()
@_level_option
@click.argument("a")
@click.argument("b")
@click.argument("c")
def coeff(k: int, a: str, b: str, c: str) -> None:
    """Fusion coefficient: multiplicity of C in A x B."""
    click.echo(fusion_coefficient(_label(a, k), _label(b, k), _label(c, k), k))


@main.command()
@_level_option
@click.argument("a")
def dual(k: int, a: str) -> None:
    """Label of the contragredient module of A."""
    click.echo(contragredient(_label(a, k), k).token())


@main.command()
@_level_option
@click.argument("a")
@click.option("--digits", type=click.IntRange(min=1), default=12, show_default=True,
              help="Decimal places to print.")
def qdim(k: int, a: str, digits: int) -> None:
    """Quantum dimension of A, printed to the requested precision."""
    value = qdim_numeric(_label(a, k), k, precision=digits + 5)
    click.echo(_fixed(value, digits))


@main.command()
@_level_option
def glob(k: int) -> None:
    """Global dimension 9 * sum of squared quantum dimensions."""
    exact, numeric = global_dimension(k)
    click.echo(json.dumps({"level": k, "exact": str(exact), "numeric": _fixed(numeric, 12)}))


@main.command()
@_level_option
@click.option("--suite", type=click.Choice(SUITE_NAMES), default="all", show_default=True)
@click.option("--cap", type=int, default=None,
              help="Exhaustive-sweep level cap; beyond it suites sample randomly.")
@click.option("--seed", type=int, default=None, help="Seed for sampled sweeps.")
def verify(k: int, suite: str, cap: int | None, seed: int | None) -> None:
    """Run verification suites; exit 1 if any identity fails."""
    if suite == "all":
        names = ["catalog", "unit", "comm", "assoc", "dual", "qdim"]
        if k == 1:
            names.append("oracle")
    else:
        names = [suite]
    try:
        reports = run_suites(names, k, cap=cap, seed=seed)
    except ValueError as err:
        raise click.UsageError(str(err))
    failed = False
    for report in reports:
        click.echo(report.summary())
        if not report.passed:
            failed = True
            for failure in report.failures[:20]:
                click.echo(f"  {failure.render()}", err=True)
            if len(report.failures) > 20:
                click.echo(f"  ... {len(report.failures) - 20} more failures", err=True)
    if failed:
        sys.exit(1)


def run(argv: list[str] | None = None) -> int:
    """Invoke the command line programmatically, returning the exit status."""
    try:
        main.main(args=argv, prog_name="orbifusion", standalone_mode=True)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
