# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

from collections.abc import Iterable, Mapping

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from ..demos.base import Demo, DemoResult
from ..groups.freeprod import FWord, format_fword
from ..oracle.brunnian import BrunnianReport
from ..words.base import Word
from ..words.moves import MoveSpec
from ..words.parser import format_word
from .config import Config


class CLIConsole:
    """Console for printing results on stdout and errors on stderr."""

    def __init__(self):
        self.console: Console = Console()
        self.error_console: Console = Console(stderr=True)

    def print_result(self, text: str) -> None:
        """Print a serialized word on one line, exactly as given."""
        self.console.print(text, soft_wrap=True, markup=False, highlight=False)

    def print_error(self, message: str) -> None:
        self.error_console.print(f"[red]Error:[/red] {message}", soft_wrap=True, highlight=False)

    def print_moves(self, w: Word, moves: Iterable[MoveSpec]) -> None:
        table = Table(title="Applicable Moves")
        table.add_column("Position", style="cyan", justify="right")
        table.add_column("Relation", style="green")
        table.add_column("Letters", style="white")
        for move in moves:
            window = w.with_letters(w.letters[move.position : move.position + move.relation.span])
            table.add_row(str(move.position), move.relation.value, format_word(window))
        self.console.print(table)

    def print_profile(self, title: str, profile: Mapping[tuple[int, ...], FWord]) -> None:
        table = Table(title=title)
        table.add_column("Labels", style="cyan")
        table.add_column("Value", style="green", overflow="fold")
        for labels, value in profile.items():
            table.add_row(",".join(str(x) for x in labels), format_fword(value))
        self.console.print(table)

    def print_brunnian_report(self, report: BrunnianReport) -> None:
        table = Table(title="Strand Deletions")
        table.add_column("Strand", style="cyan", justify="right")
        table.add_column("Result", style="green")
        table.add_column("Deleted Word", style="white", overflow="fold")
        for strand in report.strands:
            status = "trivial" if strand.trivial else "nontrivial"
            if not strand.trivial and not report.exact:
                status = "not reduced to 1"
            table.add_row(str(strand.strand), status, format_word(strand.deleted_word))
        self.console.print(table)
        if report.word_checked:
            if report.word_trivial is None:
                status = (
                    "[yellow]undecided[/yellow] (image size limit reached)"
                    if report.exact
                    else "not reduced to 1"
                )
            else:
                status = "trivial" if report.word_trivial else "nontrivial"
            self.console.print(f"[bold]Whole braid:[/bold] {status}")

    def print_demo_result(self, result: DemoResult) -> None:
        table = Table(title=f"Demo {result.demo_id}")
        table.add_column("Check", style="cyan")
        table.add_column("Status")
        table.add_column("Value", overflow="fold")
        for check in result.checks:
            if check.passed:
                table.add_row(check.label, "[green]pass[/green]", check.actual)
            else:
                table.add_row(
                    check.label,
                    "[red]FAIL[/red]",
                    f"expected: {check.expected}\nactual:   {check.actual}",
                )
        self.console.print(table)
        for note in result.notes:
            self.console.print(Panel(note, title="Reported discrepancy", border_style="yellow"))

    def print_demos(self, demos: Iterable[Demo]) -> None:
        table = Table(title="Available Demos")
        table.add_column("Demo", style="cyan")
        table.add_column("Description", style="green")
        for demo in demos:
            table.add_row(demo.name, demo.description)
        self.console.print(table)

    def print_config(self, config: Config, config_file: str, found: bool) -> None:
        if config.load_warning:
            self.console.print(
                Panel(
                    f"[yellow]{escape(config.load_warning)}[/yellow]\n\nUsing default settings.",
                    title="Configuration Status",
                    border_style="yellow",
                )
            )
        elif not found:
            self.console.print(
                Panel(
                    f"""[yellow]No configuration file found at: {config_file}[/yellow]

Using default settings.""",
                    title="Configuration Status",
                    border_style="yellow",
                )
            )
        general_table = Table(title="General Settings")
        general_table.add_column("Setting", style="cyan")
        general_table.add_column("Value", style="green")
        general_table.add_row("Reduce phi images", str(config.reduce_phi))
        general_table.add_row("Reduce printed words", str(config.reduce_output))
        general_table.add_row("Parallel strand checks", str(config.parallel_strand_checks))
        self.console.print(general_table)

        relabel_table = Table(title="Relabeling")
        relabel_table.add_column("Map", style="cyan")
        relabel_table.add_column("Mode", style="green")
        for hom, mode in config.relabel.items():
            relabel_table.add_row(hom, mode.value)
        self.console.print(relabel_table)
