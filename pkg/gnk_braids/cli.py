# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Command Line Interface for gnk-braids."""

import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import click

from . import __version__
from .demos import demos_registry, get_demo
from .groups.freeprod import format_fword
from .invariants.profile import InvariantKind, compute_invariant, invariant_profile
from .maps.base import RelabelMode
from .maps.deletion import delete_strand_g3, delete_strand_pb, project_g3_to_g2
from .maps.embedding import phi
from .maps.parity import f_parity, psi
from .oracle.brunnian import BrunnianReport, is_brunnian, is_brunnian_g3
from .utils.cli_console import CLIConsole
from .utils.config import Config, load_config
from .utils.constants import DEFAULT_CONFIG_FILE
from .utils.errors import GnkError
from .utils.trace_recorder import TraceRecorder
from .words.base import LetterKind, StrandSet, Word, reduce_involutive
from .words.moves import applicable_moves
from .words.parser import format_word, parse_word

cli_console = CLIConsole()

# Alphabet each map reads.
HOM_SOURCE: dict[str, LetterKind] = {
    "p": LetterKind.PB,
    "q": LetterKind.G3,
    "r": LetterKind.G3,
    "phi": LetterKind.PB,
    "psi": LetterKind.G2,
    "f": LetterKind.G3,
}

GROUP_CHOICE = click.Choice([kind.value for kind in LetterKind])
RELABEL_CHOICE = click.Choice([mode.value for mode in RelabelMode])


def word_options(func: Any) -> Any:
    """Options shared by every command that reads a word."""
    func = click.option(
        "--trace-file",
        "-t",
        is_flag=False,
        flag_value="",
        default=None,
        help="Record the pipeline to a JSON trace (default path when no value is given)",
    )(func)
    func = click.option("--n", "n", type=int, help="Strand count; the support becomes 1..n")(func)
    func = click.option(
        "--file", "-f", "file_path", help="Read the word from a file ('-' for standard input)"
    )(func)
    func = click.option("--word", "-w", "word_text", help="The word, e.g. 'a(1,2) a(1,3)'")(func)
    return func


def config_option(func: Any) -> Any:
    return click.option(
        "--config-file", help="Path to configuration file", default=DEFAULT_CONFIG_FILE
    )(func)


def read_word_text(word_text: str | None, file_path: str | None) -> str:
    if word_text is not None and file_path is not None:
        raise click.UsageError("Cannot use both --word and --file.")
    if word_text is not None:
        return word_text
    if file_path is None:
        raise click.UsageError("Must provide either --word or --file.")
    if file_path == "-":
        return click.get_text_stream("stdin").read()
    try:
        return Path(file_path).read_text(encoding="utf-8")
    except OSError as e:
        raise click.UsageError(f"Cannot read {file_path}: {e}") from None


def parse_labels(text: str, count: int, option: str) -> tuple[int, ...]:
    try:
        labels = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(
            f"expected {count} comma-separated labels", param_hint=option
        ) from None
    if len(labels) != count:
        raise click.BadParameter(f"expected {count} labels, got {len(labels)}", param_hint=option)
    return labels


def make_recorder(trace_file: str | None) -> TraceRecorder | None:
    if trace_file is None:
        return None
    return TraceRecorder(trace_file or None)


@contextmanager
def domain_errors(recorder: TraceRecorder | None) -> Iterator[None]:
    """Turn domain errors into exit code 1 with the message on stderr."""
    try:
        yield
    except GnkError as e:
        if recorder is not None:
            recorder.finalize_recording(False, error=e.message)
        cli_console.print_error(e.message)
        sys.exit(1)


def record_config_warning(recorder: TraceRecorder | None, config: Config) -> None:
    if recorder is not None and config.load_warning:
        recorder.record_stage("config", {}, config.load_warning)


def finish(recorder: TraceRecorder | None, result: str) -> None:
    if recorder is not None:
        recorder.finalize_recording(True, result)


def load_word(text: str, kind: LetterKind | None, n: int | None) -> Word:
    support = StrandSet.range(n) if n is not None else None
    return parse_word(text, kind, support)


def output_word(w: Word, config: Config) -> str:
    return format_word(reduce_involutive(w) if config.reduce_output else w)


@click.group()
@click.version_option(version=__version__)
def cli():
    """gnk-cli - words, homomorphisms and invariants of G_n^k and pure braid groups."""
    pass


@cli.command()
@word_options
@click.option("--group", "-g", "group", type=GROUP_CHOICE, help="Alphabet of the word")
@click.option("--moves", is_flag=True, help="List the relation moves applicable to the word")
def reduce(
    word_text: str | None,
    file_path: str | None,
    n: int | None,
    trace_file: str | None,
    group: str | None = None,
    moves: bool = False,
):
    """Cancel adjacent inverse letters until none is left."""
    text = read_word_text(word_text, file_path)
    recorder = make_recorder(trace_file)
    with domain_errors(recorder):
        if recorder is not None:
            recorder.start_recording("reduce", {"group": group, "n": n}, text)
        w = load_word(text, LetterKind(group) if group else None, n)
        if moves:
            cli_console.print_moves(w, applicable_moves(w))
        reduced = format_word(reduce_involutive(w))
        if recorder is not None:
            recorder.record_stage("reduce_involutive", {}, reduced)
    cli_console.print_result(reduced)
    finish(recorder, reduced)


def apply_map(
    w: Word, hom: str, m: int | None, n: int | None, relabel: RelabelMode, config: Config
) -> Word:
    if hom == "phi":
        if n is None:
            raise click.UsageError("--hom phi needs --n.")
        return phi(w, n, reduce=config.reduce_phi)
    if m is None:
        raise click.UsageError(f"--hom {hom} needs --m.")
    match hom:
        case "p":
            return delete_strand_pb(w, m, relabel)
        case "q":
            return delete_strand_g3(w, m, relabel)
        case "r":
            return project_g3_to_g2(w, m, relabel)
        case "psi":
            return psi(w, m, relabel)
        case _:
            return f_parity(w, m, relabel)


@cli.command(name="map")
@word_options
@config_option
@click.option("--hom", "hom", type=click.Choice(list(HOM_SOURCE)), required=True)
@click.option("--m", "m", type=int, help="Label of the deleted strand")
@click.option("--relabel", type=RELABEL_CHOICE, help="Label handling of deletion maps")
@click.option("--reduce-phi/--no-reduce-phi", default=None, help="Reduce phi_n images")
def map_command(
    word_text: str | None,
    file_path: str | None,
    n: int | None,
    config_file: str,
    trace_file: str | None,
    hom: str,
    m: int | None = None,
    relabel: str | None = None,
    reduce_phi: bool | None = None,
):
    """Apply one of the homomorphisms p, q, r, phi, psi, f."""
    text = read_word_text(word_text, file_path)
    recorder = make_recorder(trace_file)
    with domain_errors(recorder):
        config = load_config(config_file, reduce_phi=reduce_phi)
        mode = RelabelMode(relabel) if relabel else config.relabel_for(hom)
        if recorder is not None:
            recorder.start_recording(
                "map", {"hom": hom, "m": m, "n": n, "relabel": mode.value}, text
            )
            record_config_warning(recorder, config)
        image = apply_map(load_word(text, HOM_SOURCE[hom], n), hom, m, n, mode, config)
        result = output_word(image, config)
        if recorder is not None:
            recorder.record_stage(hom, {"m": m, "n": n, "relabel": mode.value}, result)
    cli_console.print_result(result)
    finish(recorder, result)


@cli.command()
@word_options
@click.option(
    "--kind", "kind", type=click.Choice([k.value for k in InvariantKind]), required=True
)
@click.option("--pair", help="Pair i,j for rank-2 invariants")
@click.option("--triple", help="Triple i,j,k for rank-3 invariants")
@click.option("--delete", "deleted", type=int, help="Deleted strand for w2del/w3del")
@click.option("--unreduced", is_flag=True, help="Print one letter per crossing")
@click.option("--all", "all_labels", is_flag=True, help="Every pair or triple of the support")
def invariant(
    word_text: str | None,
    file_path: str | None,
    n: int | None,
    trace_file: str | None,
    kind: str,
    pair: str | None = None,
    triple: str | None = None,
    deleted: int | None = None,
    unreduced: bool = False,
    all_labels: bool = False,
):
    """Evaluate a free-product-valued invariant."""
    text = read_word_text(word_text, file_path)
    inv = InvariantKind(kind)
    labels: tuple[int, ...] | None = None
    if not all_labels:
        option, raw = ("--pair", pair) if inv.arity == 2 else ("--triple", triple)
        if raw is None:
            raise click.UsageError(f"--kind {kind} needs {option} (or --all).")
        labels = parse_labels(raw, inv.arity, option)
    if inv.needs_deleted_strand and deleted is None:
        raise click.UsageError(f"--kind {kind} needs --delete.")
    recorder = make_recorder(trace_file)
    with domain_errors(recorder):
        if recorder is not None:
            params = {"kind": kind, "labels": labels, "delete": deleted, "unreduced": unreduced}
            recorder.start_recording("invariant", params, text)
        w = load_word(text, inv.source_kind, n)
        if labels is None:
            profile = invariant_profile(w, inv, deleted, reduced=not unreduced)
            cli_console.print_profile(f"Invariant {kind}", profile)
            result = "; ".join(
                f"{','.join(map(str, combo))}: {format_fword(value)}"
                for combo, value in profile.items()
            )
        else:
            value = compute_invariant(w, inv, labels, deleted, reduced=not unreduced)
            result = format_fword(value)
            cli_console.print_result(result)
        if recorder is not None:
            recorder.record_stage(kind, {"labels": labels, "delete": deleted}, result)
    finish(recorder, result)


def brunnian_verdict(report: BrunnianReport) -> str:
    if report.is_brunnian:
        return "BRUNNIAN"
    return "NOT BRUNNIAN" if report.exact else "INCONCLUSIVE"


@cli.command()
@word_options
@config_option
@click.option(
    "--group",
    "group",
    type=click.Choice([LetterKind.PB.value, LetterKind.G3.value]),
    default=LetterKind.PB.value,
    help="pb decides exactly; g3 only checks that every q_m(w) reduces to 1",
)
@click.option(
    "--parallel/--sequential", default=None, help="Run the strand checks concurrently"
)
@click.option(
    "--check-word",
    is_flag=True,
    help="Also decide whether the braid itself is trivial (gives up on very long images)",
)
def brunnian(
    word_text: str | None,
    file_path: str | None,
    n: int | None,
    config_file: str,
    trace_file: str | None,
    group: str = LetterKind.PB.value,
    parallel: bool | None = None,
    check_word: bool = False,
):
    """Delete each strand in turn and check the result is trivial."""
    text = read_word_text(word_text, file_path)
    recorder = make_recorder(trace_file)
    with domain_errors(recorder):
        config = load_config(config_file, parallel_strand_checks=parallel)
        if recorder is not None:
            recorder.start_recording("brunnian", {"group": group, "n": n}, text)
            record_config_warning(recorder, config)
        if group == LetterKind.PB.value:
            if n is None:
                raise click.UsageError("--group pb needs --n.")
            w = load_word(text, LetterKind.PB, n)
            report = is_brunnian(
                w, n, parallel=config.parallel_strand_checks, check_word=check_word
            )
        else:
            report = is_brunnian_g3(load_word(text, LetterKind.G3, n))
        if recorder is not None:
            for strand in report.strands:
                recorder.record_stage(
                    f"delete_strand_{strand.strand}",
                    {"trivial": strand.trivial},
                    format_word(strand.deleted_word),
                )
            if report.word_checked:
                recorder.record_stage("word_trivial", {}, str(report.word_trivial))
    cli_console.print_brunnian_report(report)
    verdict = brunnian_verdict(report)
    cli_console.print_result(verdict)
    finish(recorder, verdict)


@cli.command()
@click.argument("demo_id", required=False)
@click.option("--all", "run_all", is_flag=True, help="Run every demo")
def demo(demo_id: str | None = None, run_all: bool = False):
    """Recompute a worked example and compare it with its pinned values."""
    if run_all == (demo_id is not None):
        raise click.UsageError("Give exactly one of DEMO_ID or --all.")
    ids = list(demos_registry) if run_all else [demo_id or ""]
    failed: list[str] = []
    with domain_errors(None):
        for name in ids:
            result = get_demo(name).run()
            cli_console.print_demo_result(result)
            if not result.passed:
                failed.append(name)
    if failed:
        cli_console.print_result(f"FAIL: {', '.join(failed)}")
        sys.exit(1)
    cli_console.print_result("pass")


@cli.command()
def demos():
    """Show available demos and their descriptions."""
    cli_console.print_demos(demo_class() for demo_class in demos_registry.values())


@cli.command()
@click.option("--config-file", help="Path to configuration file", default=DEFAULT_CONFIG_FILE)
def show_config(config_file: str):
    """Show current configuration settings."""
    with domain_errors(None):
        config = load_config(config_file)
    cli_console.print_config(config, config_file, Path(config_file).exists())


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
