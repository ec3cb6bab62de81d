import datetime
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import click
import humanize

from leafspan.exceptions import InputError, LeafSpanException
from leafspan.solver import solve
from leafspan.toolkit.fileio import read_graph

log = logging.getLogger(__name__)

GRAPH_SUFFIX = ".g"
COLUMNS = ("graph", "v", "e", "bound", "leaves", "margin", "status")


def collect(paths: Iterable[str]) -> List[Path]:
    """Expands directories into their ``*.g`` files, sorted by name."""
    found: List[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            found.extend(sorted(path.glob(f"*{GRAPH_SUFFIX}")))
        else:
            found.append(path)
    return found


def solve_file(path: str, verify: Optional[bool] = None) -> Dict[str, Any]:
    row: Dict[str, Any] = {"graph": path, "v": "-", "e": "-", "bound": "-", "leaves": "-", "margin": "-"}
    try:
        g = read_graph(path)
        row.update(v=g.v, e=g.e)
        cert = solve(g, verify=verify)
    except InputError as exc:
        row["status"] = f"input error: {exc}"
        return row
    except LeafSpanException as exc:
        row["status"] = f"violation: {type(exc).__name__}: {exc}"
        return row
    row.update(
        bound=str(cert.bound),
        leaves=cert.leaves,
        margin=str(cert.margin),
        status="ok" if cert.leaves >= cert.bound else "violation: below bound",
    )
    return row


def format_table(rows: List[Dict[str, Any]]) -> str:
    cells = [list(COLUMNS)] + [[str(row[c]) for c in COLUMNS] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(COLUMNS))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in cells
    )


def run_batch(
    files: List[Path], jobs: int, verify: Optional[bool] = None
) -> Tuple[List[Dict[str, Any]], datetime.timedelta]:
    started = datetime.datetime.now()
    names = [str(f) for f in files]
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(solve_file, names, [verify] * len(names)))
    else:
        rows = [solve_file(name, verify) for name in names]
    return rows, datetime.datetime.now() - started


@click.command("batch")
@click.argument("paths", nargs=-1, required=True, type=click.Path(exists=True))
@click.option("--jobs", "-j", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--verify/--no-verify", default=None, help="Re-check every lifted tree.")
def batch_command(paths: Tuple[str, ...], jobs: int, verify: Optional[bool]) -> None:
    """
    Solves every graph under the given directories or files.

    Exits with 1 if any instance fails.
    """
    files = collect(paths)
    if not files:
        raise click.UsageError(f"no {GRAPH_SUFFIX} files found")
    rows, elapsed = run_batch(files, jobs, verify)
    failed = [row for row in rows if row["status"] != "ok"]

    click.echo(format_table(rows))
    click.echo(
        f"{len(rows)} graphs, {len(failed)} failures in "
        f"{humanize.precisedelta(elapsed, minimum_unit='milliseconds')}"
    )
    for row in failed:
        log.warning("%s: %s", row["graph"], row["status"])
    log.info("batch finished, up for %s", click.get_current_context().find_root().command.get_uptime())
    if failed:
        raise click.exceptions.Exit(1)


def setup(cli) -> None:
    cli.add_command(batch_command)
