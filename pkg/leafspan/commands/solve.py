import logging
from typing import Optional

import click

from leafspan.graph import SpanningForest
from leafspan.solver import replay, solve
from leafspan.toolkit.certificate import read_certificate, write_certificate
from leafspan.toolkit.fileio import read_graph, write_tree

log = logging.getLogger(__name__)


@click.command("solve")
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--tree", "tree_out", type=click.Path(dir_okay=False), help="Write the tree here.")
@click.option("--cert", "cert_out", type=click.Path(dir_okay=False), help="Write the certificate here.")
@click.option(
    "--verify/--no-verify",
    default=None,
    help="Re-check every lifted tree (default from LEAFSPAN_VERIFY_LIFTS).",
)
def solve_command(
    graph_file: str, tree_out: Optional[str], cert_out: Optional[str], verify: Optional[bool]
) -> None:
    """Builds a spanning tree meeting the leaf bound."""
    g = read_graph(graph_file)
    cert = solve(g, verify=verify)
    click.echo(
        f"v={cert.v} e={cert.e} s={cert.s} t={cert.t} bound={cert.bound} "
        f"min_leaves={cert.min_leaves} leaves={cert.leaves} verified={str(cert.verified).lower()}"
    )
    if tree_out:
        write_tree(SpanningForest(vertices=g.adjacency, edges=cert.tree), tree_out)
    if cert_out:
        write_certificate(cert, cert_out)


@click.command("replay")
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.argument("cert_file", type=click.Path(dir_okay=False))
def replay_command(graph_file: str, cert_file: str) -> None:
    """Re-solves a graph and compares the result with a certificate."""
    ok = replay(read_certificate(cert_file), read_graph(graph_file))
    click.echo("certificate reproduced" if ok else "certificate does not match")
    if not ok:
        raise click.exceptions.Exit(1)


def setup(cli) -> None:
    cli.add_command(solve_command)
    cli.add_command(replay_command)
