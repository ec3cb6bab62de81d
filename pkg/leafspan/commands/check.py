import click

from leafspan.cost import bound_report
from leafspan.graph import check_tree
from leafspan.toolkit.fileio import read_graph, read_tree


@click.command("check")
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.argument("tree_file", type=click.Path(dir_okay=False))
def check_command(graph_file: str, tree_file: str) -> None:
    """
    Validates a tree against a graph.

    Exits with 1 when the tree does not span the graph.
    """
    g = read_graph(graph_file)
    report = bound_report(g)
    leaves, ok = check_tree(g, read_tree(tree_file))
    meets = ok and leaves >= report.bound
    click.echo(
        f"spanning={str(ok).lower()} leaves={leaves} bound={report.bound} "
        f"min_leaves={report.min_leaves} meets_bound={str(meets).lower()}"
    )
    if not ok:
        raise click.exceptions.Exit(1)


def setup(cli) -> None:
    cli.add_command(check_command)
