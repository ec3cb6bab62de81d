from typing import Optional

import click

from leafspan.oracle import max_leaf_exact
from leafspan.toolkit.fileio import dumps_tree, read_graph, write_tree


@click.command("oracle")
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--limit", type=click.IntRange(min=1), help="Candidate sets to try before giving up.")
@click.option("--tree", "tree_out", type=click.Path(dir_okay=False), help="Write the witness here.")
def oracle_command(graph_file: str, limit: Optional[int], tree_out: Optional[str]) -> None:
    """Prints the exact maximum leaf count and a witness tree."""
    result = max_leaf_exact(read_graph(graph_file), limit=limit)
    click.echo(f"u={result.u} explored={result.explored}")
    if tree_out:
        write_tree(result.witness, tree_out)
    else:
        click.echo(dumps_tree(result.witness), nl=False)


def setup(cli) -> None:
    cli.add_command(oracle_command)
