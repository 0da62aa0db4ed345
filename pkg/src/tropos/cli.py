"""Tropos CLI - Command-line interface.

Usage:
    tropos classify matrix.yaml [--strict] [--json]
    tropos factor matrix.yaml --out factors.json
    tropos spectrum matrix.yaml --lift random --seed 7
    tropos verify --seed 3
"""

import json
import logging
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from tropos import __version__
from tropos.types import Command, LiftStrategy, RunConfig, RunResult

console = Console()
err_console = Console(stderr=True)
app = typer.Typer(
    name="tropos",
    help="Tropical total positivity: classify, factor and lift max-plus matrices",
    no_args_is_help=True,
)

INPUT_HELP = "Input document (YAML or JSON)"


def setup_logging(verbose: bool = False) -> None:
    """Set up logging with rich handler on stderr so JSON output stays clean."""
    level = logging.DEBUG if verbose else logging.INFO

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_time=False, show_path=False)],
    )

    logging.getLogger("tropos").setLevel(level)


def _execute(
    command: Command,
    inputs: list[Path],
    output_json: bool,
    verbose: bool,
    cap: int | None = None,
    seed: int | None = None,
    lift: LiftStrategy | None = None,
    strict: bool = False,
    out: Path | None = None,
) -> None:
    from tropos.modules.pipeline import run

    setup_logging(verbose=verbose)

    try:
        config = RunConfig(
            command=command,
            inputs=inputs,
            cap=cap,
            seed=seed,
            lift=lift,
            strict=strict,
            out=out,
        )
        result = run(config)
    except (ValueError, OSError) as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(2) from e

    if output_json:
        _output_json(result)
    else:
        _output_rich(command, result)

    if result.exit_code:
        raise typer.Exit(result.exit_code)


# ============================================================================
# Output
# ============================================================================


def _output_json(result: RunResult) -> None:
    """Output the payload as JSON."""
    print(json.dumps(result.payload, indent=2))


def _matrix_table(title: str, rows: list[list[str]]) -> Table:
    table = Table(title=title, show_header=False)
    for _ in rows[0] if rows else []:
        table.add_column(justify="right")
    for row in rows:
        table.add_row(*row)
    return table


def _flag(value: Any) -> str:
    if value is None:
        return "[dim]n/a[/dim]"
    return "[green]✓[/green]" if value else "[red]✗[/red]"


def _output_rich(command: Command, result: RunResult) -> None:
    """Output the payload with rich formatting."""
    payload = result.payload
    if "error" in payload:
        style = "red" if result.exit_code != 1 else "yellow"
        console.print(Panel(
            f"[{style}]{payload['error']}:[/{style}] {payload['message']}",
            title="tropos",
            border_style=style,
        ))
        return

    if command is Command.CLASSIFY:
        table = Table(title="Positivity classes")
        table.add_column("Class", style="cyan")
        table.add_column("Holds")
        for name in ("tp_trop", "tn_trop", "tp2", "tn2", "dd", "ndd"):
            table.add_row(name, _flag(payload.get(name)))
        console.print(table)
        witness = payload.get("witness")
        if witness:
            console.print(
                f"[bold]Witness:[/bold] rows {witness['rows']} cols {witness['cols']} "
                f"is {witness['tag']} (weight {witness['weight']})"
            )
    elif command is Command.FACTOR:
        table = Table(title=f"Jacobi factors (n = {payload['n']})")
        table.add_column("#", style="dim")
        table.add_column("Kind", style="cyan")
        table.add_column("i")
        table.add_column("a", justify="right")
        for position, f in enumerate(payload["factors"], 1):
            table.add_row(str(position), f["kind"], str(f["i"]), f["a"])
        console.print(table)
    elif command is Command.VERIFY:
        table = Table(title="Worked examples")
        table.add_column("Example", style="cyan")
        table.add_column("Result")
        table.add_column("Detail", style="dim")
        for r in payload["results"]:
            table.add_row(r["name"], _flag(r["passed"]), r["detail"])
        console.print(table)
    elif command is Command.STIEFEL_INVERT and payload.get("candidate"):
        console.print(_matrix_table("Candidate B", payload["candidate"]))
        mismatch = payload.get("mismatch")
        if mismatch:
            console.print(
                f"[bold]Mismatch:[/bold] subset {mismatch['subset']} "
                f"given {mismatch['given']}, recomputed {mismatch['computed']}"
            )
    elif "entries" in payload:
        console.print(_matrix_table("Matrix", payload["entries"]))
        if "series" in payload:
            console.print(_matrix_table("Series lift", payload["series"]))
    else:
        console.print_json(data=payload)

    style = {0: "green", 1: "yellow"}.get(result.exit_code, "red")
    mark = "✓" if result.exit_code == 0 else "✗"
    console.print(Panel(f"[{style}]{mark} {result.message}[/{style}]", border_style=style))


# ============================================================================
# Commands
# ============================================================================


@app.command()
def classify(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    strict: bool = typer.Option(
        False, "--strict", help="Test TP^trop instead of TN^trop"
    ),
    cap: int = typer.Option(None, "--cap", help="Brute-force size cap for dominance checks"),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Classify a tropical matrix (TP, TN, dominance); exit 1 if the class fails."""
    _execute(Command.CLASSIFY, [matrix], output_json, verbose, cap=cap, strict=strict, out=out)


@app.command()
def staircase(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Decompose a finite Monge matrix into staircase matrices."""
    _execute(Command.STAIRCASE, [matrix], output_json, verbose, out=out)


@app.command()
def echelon(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Show the support pattern and test the double echelon property."""
    _execute(Command.ECHELON, [matrix], output_json, verbose, out=out)


@app.command()
def factor(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Factor a TN^trop matrix into elementary Jacobi matrices."""
    _execute(Command.FACTOR, [matrix], output_json, verbose, out=out)


@app.command()
def product(
    factors: Path = typer.Argument(..., help="Factors document (YAML or JSON)", exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Multiply a list of Jacobi factors."""
    _execute(Command.PRODUCT, [factors], output_json, verbose, out=out)


@app.command()
def spectrum(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    lift: LiftStrategy = typer.Option(
        None, "--lift", "-l", help="Compare against a lift (canonical, hadamard, random)"
    ),
    seed: int = typer.Option(None, "--seed", help="Seed for the random lift"),
    cap: int = typer.Option(None, "--cap", help="Brute-force size cap for the char. polynomial"),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Tropical characteristic polynomial and eigenvalues."""
    _execute(
        Command.SPECTRUM, [matrix], output_json, verbose, cap=cap, seed=seed, lift=lift, out=out
    )


@app.command()
def plucker(
    matrix: Path = typer.Argument(..., help=INPUT_HELP, exists=True),
    lift: LiftStrategy = typer.Option(
        None, "--lift", "-l", help="Also compute the Plucker vector of a lift"
    ),
    seed: int = typer.Option(None, "--seed", help="Seed for the random lift"),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Tropical Plucker coordinates of a k x n matrix."""
    _execute(Command.PLUCKER, [matrix], output_json, verbose, seed=seed, lift=lift, out=out)


@app.command("stiefel-invert")
def stiefel_invert(
    vector: Path = typer.Argument(..., help="Plucker vector document", exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Recover a Monge matrix from a Plucker vector; exit 1 if it is not in the image."""
    _execute(Command.STIEFEL_INVERT, [vector], output_json, verbose, out=out)


@app.command("network-weight")
def network_weight(
    network: Path = typer.Argument(..., help="Network document", exists=True),
    lift: LiftStrategy = typer.Option(
        None, "--lift", "-l", help="Lift the series weights (canonical, hadamard, random)"
    ),
    seed: int = typer.Option(None, "--seed", help="Seed for the random lift"),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Weight matrix of a planar network."""
    _execute(
        Command.NETWORK_WEIGHT,
        [network],
        output_json,
        verbose,
        seed=seed,
        lift=lift,
        out=out,
    )


@app.command("factor-to-network")
def factor_to_network(
    source: Path = typer.Argument(..., help="Matrix or factors document", exists=True),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Build the ladder network of a factorization (or of a TN^trop matrix)."""
    _execute(Command.FACTOR_TO_NETWORK, [source], output_json, verbose, out=out)


@app.command()
def verify(
    seed: int = typer.Option(None, "--seed", help="Seed for the randomized sweep"),
    cap: int = typer.Option(None, "--cap", help="Minor enumeration cap for the sweep"),
    out: Path = typer.Option(None, "--out", "-o", help="Also write the JSON report here"),
    output_json: bool = typer.Option(False, "--json", "-j", help="Output results as JSON"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
) -> None:
    """Run the built-in worked examples and a seeded sweep; exit 3 on any failure."""
    _execute(Command.VERIFY, [], output_json, verbose, cap=cap, seed=seed, out=out)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"tropos version {__version__}")


if __name__ == "__main__":
    app()
