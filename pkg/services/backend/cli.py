"""
Command-line front end for the Hamming distance-set engine.

Commands:
  enumerate  - addable classes for (n, m)
  classify   - graph, cliques, assembled sets and totals
  verify     - exact check of a point-set file against H(n, m)
  section6   - maximal sets extending H(n, 2) by one dimension
  tables     - largest-total tables as n,d,total CSV
  bench      - timings per (n, m)
"""
import sys
import time
from pathlib import Path
from typing import Callable, List, Optional

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from tqdm import tqdm

from core.config import Settings, use_settings
from core.exceptions import DomainError, HammingSearchError, UnsupportedCaseError, VerificationError
from schemas.reports import BenchRow, ExtendedReport, OutputFormat, ReferenceMismatch, RunConfig, VerifyMode
from services.assembly import (
    classify as classify_nm,
    compare_report,
    enumerate_report,
    load_reference,
    read_points,
    rows_from_csv,
    rows_to_csv,
    table_rows,
    to_json,
    verify_union,
)
from services.extended import classify_extended
from services.search import max_nonmaximal_n, verify_frontier
from utils.cache import ResultCache, cached_result
from utils.logging_config import configure_logging
from utils.memory_monitor import get_memory_info

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class NumberRange(click.ParamType):
    """Integers given as `a-b`, a comma list, or both (`2-5,9`)"""

    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        numbers = set()
        try:
            for part in str(value).split(","):
                part = part.strip()
                if not part:
                    continue
                if "-" in part:
                    low, high = (int(v) for v in part.split("-", 1))
                    if low > high:
                        self.fail(f"empty range {part!r}", param, ctx)
                    numbers.update(range(low, high + 1))
                else:
                    numbers.add(int(part))
        except ValueError:
            self.fail(f"{value!r} is not a range of integers", param, ctx)
        if not numbers:
            self.fail("range is empty", param, ctx)
        return sorted(numbers)


RANGE = NumberRange()

format_option = click.option(
    '--format', 'output_format',
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    help='Output format',
)


def _run_config(ctx, command: str, **values) -> RunConfig:
    base = ctx.obj['settings']
    config = RunConfig(
        command=command,
        cache_dir=base.cache_dir,
        use_cache=base.use_cache,
        threads=base.threads,
        clique_budget=values.pop('clique_budget', None) or base.clique_budget,
        verify=values.pop('verify', None) or base.verify,
        **values,
    )
    settings = base.model_copy(update={
        'verify': config.verify.value,
        'clique_budget': config.clique_budget,
    })
    use_settings(settings)
    ctx.obj['run_settings'] = settings
    return config


def _cache(ctx) -> Optional[ResultCache]:
    settings = ctx.obj['settings']
    return ResultCache(settings.cache_dir) if settings.use_cache else None


def _guarded(ctx, action: Callable[[], int]) -> None:
    """Run a command body and map engine errors to exit codes"""
    try:
        code = action()
    except VerificationError as e:
        err_console.print(f"[red]Verification failed: {e}[/red]")
        if e.first is not None:
            err_console.print(f"  first:  {e.first}\n  second: {e.second}\n  squared distance: {e.sq_dist}")
        code = EXIT_FAILED
    except (DomainError, UnsupportedCaseError) as e:
        err_console.print(f"[red]{e}[/red]")
        code = EXIT_USAGE
    except HammingSearchError as e:
        err_console.print(f"[red]Error: {e}[/red]")
        if ctx.obj.get('debug'):
            err_console.print_exception()
        code = EXIT_FAILED
    ctx.exit(code)


def _report_mismatches(mismatches: List[ReferenceMismatch]) -> int:
    for mismatch in mismatches:
        err_console.print(f"[yellow]reference mismatch n={mismatch.n} m={mismatch.m}: {mismatch.message}[/yellow]")
    return EXIT_FAILED if mismatches else EXIT_OK


def _progress(items: List[int], desc: str):
    return tqdm(items, desc=desc, file=sys.stderr, disable=None, leave=False)


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log progress at INFO level')
@click.option('--debug', is_flag=True, help='Log at DEBUG level and show tracebacks')
@click.option('--cache-dir', type=click.Path(file_okay=False, path_type=Path), help='Result cache directory')
@click.option('--no-cache', is_flag=True, help='Neither read nor write cached results')
@click.option('--threads', type=click.IntRange(min=1), help='Worker threads for pair scans and enumeration')
@click.pass_context
def cli(ctx, verbose: bool, debug: bool, cache_dir: Optional[Path], no_cache: bool, threads: Optional[int]):
    """Maximal m-distance sets containing the embedded Hamming graph H(n, m)

    Settings come from HDS_* environment variables (a .env in the working
    directory is loaded first); flags override them.
    """
    ctx.ensure_object(dict)
    env_path = Path.cwd() / ".env"
    if env_path.exists():
        load_dotenv(env_path)

    try:
        settings = Settings.from_env()
    except ValueError as e:
        raise click.UsageError(f"invalid HDS_* setting: {e}")
    updates = {}
    if cache_dir is not None:
        updates['cache_dir'] = cache_dir
    if no_cache:
        updates['use_cache'] = False
    if threads is not None:
        updates['threads'] = threads
    if debug:
        updates['log_level'] = 'DEBUG'
    elif verbose:
        updates['log_level'] = 'INFO'
    settings = use_settings(settings.model_copy(update=updates))

    configure_logging(settings.log_level)
    ctx.obj['debug'] = debug
    ctx.obj['settings'] = settings


@cli.command('enumerate')
@click.option('--n', 'n_values', type=RANGE, help='Alphabet sizes, e.g. 3-11 or 3,5,9')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Word length')
@click.option('--expanded', is_flag=True, help='Include classes beyond the reduced ones')
@click.option('--frontier', is_flag=True, help='Also check the largest non-maximal n by search')
@format_option
@click.pass_context
def enumerate_cmd(ctx, n_values, m: int, expanded: bool, frontier: bool, output_format: str):
    """List addable classes in class notation"""

    def run() -> int:
        n_range = n_values or list(range(2, max_nonmaximal_n(m) + 1))
        config = _run_config(ctx, 'enumerate', n_values=n_range, m_values=[m], output_format=output_format)
        reports = [enumerate_report(n, m, expanded, config.threads) for n in _progress(config.n_values, "enumerate")]
        frontier_report = verify_frontier(m, threads=config.threads) if frontier else None

        if config.output_format == OutputFormat.JSON:
            payload = {"reports": [r.model_dump(mode="json") for r in reports]}
            if frontier_report is not None:
                payload["frontier"] = {"m": m, "n": frontier_report.n, "confirmed": frontier_report.confirmed}
            click.echo(to_json(payload), nl=False)
        elif config.output_format == OutputFormat.CSV:
            lines = ["n,m,notation,m_value,size,reduced"]
            for r in reports:
                lines.extend(f'{r.n},{r.m},"{c.notation}",{c.m_value},{c.size},{str(c.reduced).lower()}' for c in r.classes)
            click.echo("\n".join(lines))
        else:
            for r in reports:
                if r.maximal:
                    console.print(f"H̃({r.n},{r.m}) is maximal")
                    continue
                table = Table(title=f"Addable classes, n={r.n}, m={r.m}", show_header=True)
                table.add_column("Class")
                table.add_column("M", justify="right")
                table.add_column("Size", justify="right")
                table.add_column("Reduced")
                for c in r.classes:
                    table.add_row(c.notation, c.m_value, str(c.size), "yes" if c.reduced else "")
                console.print(table)
            if frontier_report is not None:
                state = "confirmed" if frontier_report.confirmed else "NOT confirmed"
                console.print(f"Largest non-maximal n for m={m}: {frontier_report.n} ({state})")
        if frontier_report is not None and not frontier_report.confirmed:
            return EXIT_FAILED
        return EXIT_OK

    _guarded(ctx, run)


@cli.command('classify')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Word length')
@click.option('--n', 'n_values', type=RANGE, help='Alphabet sizes; defaults to 2 up to the largest non-maximal n')
@click.option('--verify', type=click.Choice([v.value for v in VerifyMode]), help='Verification level')
@click.option('--clique-budget', type=click.FloatRange(min=0, min_open=True), help='Seconds per clique solve')
@click.option('--expanded', is_flag=True, help='List every block-position variant')
@click.option('--emit-points', type=click.Path(file_okay=False, path_type=Path), help='Write assembled point sets here')
@click.option('--reference', type=click.Path(exists=True, dir_okay=False, path_type=Path), help='Reference rows (CSV or JSON)')
@format_option
@click.pass_context
def classify_cmd(ctx, m, n_values, verify, clique_budget, expanded, emit_points, reference, output_format):
    """Classify maximal sets: graph, cliques, assembled sets and totals"""

    def run() -> int:
        n_range = n_values or list(range(2, max_nonmaximal_n(m) + 1))
        config = _run_config(
            ctx, 'classify', n_values=n_range, m_values=[m], output_format=output_format,
            verify=verify, clique_budget=clique_budget,
        )
        settings = ctx.obj['run_settings']
        cache = _cache(ctx)
        rows = load_reference(reference) if reference else None
        reports = []
        mismatches = []
        for n in _progress(config.n_values, f"classify m={m}"):
            report = classify_nm(n, m, settings, expanded=expanded, cache=cache, emit_points=emit_points)
            reports.append(report)
            mismatches.extend(report.mismatches)
            if rows is not None:
                found, _ = compare_report(report, rows)
                mismatches.extend(found)

        if config.output_format == OutputFormat.JSON:
            click.echo(to_json(reports), nl=False)
        elif config.output_format == OutputFormat.CSV:
            click.echo(rows_to_csv(table_rows(reports)), nl=False)
        else:
            for report in reports:
                _print_classification(report)
        return _report_mismatches(mismatches)

    _guarded(ctx, run)


def _print_classification(report) -> None:
    if report.maximal:
        console.print(f"H̃({report.n},{report.m}) is maximal ({report.largest_total} points)")
        return
    table = Table(title=f"Assembled sets, n={report.n}, m={report.m}", show_header=True)
    table.add_column("Clique")
    table.add_column("Components")
    table.add_column("Added", justify="right")
    table.add_column("Total", justify="right")
    table.add_column("Verified")
    for entry in report.assembled:
        components = "\n".join(f"{c.label} [{c.certificate.value}] {c.size}" for c in entry.components)
        table.add_row("\n".join(entry.clique), components, str(entry.added), str(entry.total),
                      "yes" if entry.verified else "no")
    console.print(table)
    console.print(f"Largest total: [bold]{report.largest_total}[/bold] (d = {report.m * (report.n - 1)})")
    for note in report.notes:
        console.print(f"[dim]{note}[/dim]")


@cli.command('verify')
@click.argument('path', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option('--verify', type=click.Choice([v.value for v in VerifyMode]), help='Verification level')
@format_option
@click.pass_context
def verify_cmd(ctx, path: Path, verify, output_format):
    """Check a point-set file against the embedded H(n, m)"""

    def run() -> int:
        config = _run_config(ctx, 'verify', output_format=output_format, verify=verify)
        settings = ctx.obj['run_settings']
        n, m, points = read_points(path)
        certificate = verify_union(points, n, m, config.verify, settings.sample_pairs,
                                   settings.seed, settings.threads)
        if config.output_format == OutputFormat.JSON:
            click.echo(to_json(certificate), nl=False)
        else:
            status = "[green]passed[/green]" if certificate.passed else "[red]failed[/red]"
            lines = [f"{certificate.points} points, {certificate.pairs} pairs, {status}"]
            lines.extend(f"  d^2 = {d}: {count}" for d, count in certificate.histogram.items())
            if certificate.witness is not None:
                w = certificate.witness
                lines.append(f"witness: {w.first} / {w.second} at d^2 = {w.sq_dist}")
            console.print(Panel("\n".join(lines), title=f"Verification ({certificate.mode.value})"))
        return EXIT_OK if certificate.passed else EXIT_FAILED

    _guarded(ctx, run)


@cli.command('section6')
@click.option('--n', 'n_values', type=RANGE, required=True, help='Alphabet sizes')
@format_option
@click.pass_context
def section6_cmd(ctx, n_values, output_format):
    """Maximal two-distance sets extending H(n, 2) by one dimension"""

    def run() -> int:
        config = _run_config(ctx, 'section6', n_values=n_values, output_format=output_format)

        @cached_result(_cache(ctx), 'section6')
        def extended(n: int) -> dict:
            return classify_extended(n).model_dump(mode="json")

        reports = [ExtendedReport.model_validate(extended(n=n)) for n in _progress(config.n_values, "section6")]
        if config.output_format == OutputFormat.TEXT:
            for report in reports:
                table = Table(title=f"Extended sets, n={report.n}", show_header=True)
                table.add_column("Families")
                table.add_column("Size", justify="right")
                table.add_column("Count", justify="right")
                table.add_column("Affine rank", justify="right")
                for s in report.sets:
                    table.add_row(" u ".join(s.labels), str(s.size), str(s.count),
                                  "" if s.affine_rank is None else str(s.affine_rank))
                console.print(table)
        else:
            click.echo(to_json(reports), nl=False)
        return EXIT_OK

    _guarded(ctx, run)


@cli.command('tables')
@click.option('--m', 'm_values', type=RANGE, required=True, help='Word lengths')
@click.option('--check', type=click.Path(exists=True, dir_okay=False, path_type=Path), help='Expected n,d,total CSV')
@click.option('--verify', type=click.Choice([v.value for v in VerifyMode]), help='Verification level')
@click.pass_context
def tables_cmd(ctx, m_values, check, verify):
    """Largest totals per non-maximal n as n,d,total CSV"""

    def run() -> int:
        _run_config(ctx, 'tables', m_values=m_values, output_format=OutputFormat.CSV, verify=verify)
        settings = ctx.obj['run_settings']
        cache = _cache(ctx)
        reports = []
        for m in m_values:
            for n in _progress(list(range(2, max_nonmaximal_n(m) + 1)), f"tables m={m}"):
                reports.append(classify_nm(n, m, settings, cache=cache))
        rows = table_rows(reports)
        text = rows_to_csv(rows)
        click.echo(text, nl=False)
        if check is not None:
            expected = rows_from_csv(check.read_text())
            if [r.model_dump() for r in expected] != [r.model_dump() for r in rows]:
                err_console.print(f"[red]table differs from {check}[/red]")
                return EXIT_FAILED
        return _report_mismatches([mismatch for report in reports for mismatch in report.mismatches])

    _guarded(ctx, run)


@cli.command('bench')
@click.option('--m', 'm', type=click.IntRange(min=2), required=True, help='Word length')
@click.option('--n', 'n_values', type=RANGE, help='Alphabet sizes')
@format_option
@click.pass_context
def bench_cmd(ctx, m, n_values, output_format):
    """Time uncached classification per n"""

    def run() -> int:
        n_range = n_values or list(range(2, max_nonmaximal_n(m) + 1))
        config = _run_config(ctx, 'bench', n_values=n_range, m_values=[m], output_format=output_format)
        settings = ctx.obj['run_settings']
        rows = []
        mismatches = []
        for n in _progress(config.n_values, f"bench m={m}"):
            start = time.perf_counter()
            report = classify_nm(n, m, settings)
            elapsed = time.perf_counter() - start
            mismatches.extend(report.mismatches)
            rows.append(BenchRow(n=n, m=m, seconds=round(elapsed, 3), classes=len(report.classes),
                                 largest_total=report.largest_total, rss_mb=round(get_memory_info()['rss_mb'], 1)))
        if config.output_format == OutputFormat.JSON:
            click.echo(to_json(rows), nl=False)
        else:
            table = Table(title=f"Classification timings, m={m}", show_header=True)
            for column in ("n", "seconds", "classes", "total", "RSS MB"):
                table.add_column(column, justify="right")
            for row in rows:
                table.add_row(str(row.n), f"{row.seconds:.3f}", str(row.classes), str(row.largest_total), f"{row.rss_mb:.1f}")
            console.print(table)
        return _report_mismatches(mismatches)

    _guarded(ctx, run)


if __name__ == '__main__':
    cli()
