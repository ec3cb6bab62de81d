from typing import Dict, Optional, Tuple

import click

from leafspan.toolkit.fileio import dumps_graph, write_graph
from leafspan.toolkit.generators import FAMILIES, GenSpec, generate


def _params(ctx: click.Context, param: click.Parameter, value: Tuple[str, ...]) -> Dict[str, str]:
    parsed = {}
    for item in value:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"expected key=value, got {item!r}")
        parsed[key.replace("-", "_")] = raw
    return parsed


@click.command("gen")
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("params", nargs=-1, callback=_params)
@click.option("--seed", default=0, show_default=True, help="Seed for the random families.")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the graph here instead of stdout.")
def gen_command(family: str, params: Dict[str, str], seed: int, out: Optional[str]) -> None:
    """
    Emits a generated graph.

    \b
    gen gadget
    gen chain k=3
    gen random n=20 m=40 min_degree=3 --seed 1
    gen cubic n=10 --seed 7
    gen petersen
    gen glue first=a.g x1=8 second=b.g x2=6
    """
    g = generate(GenSpec(family=family, params=params, seed=seed))
    if out:
        write_graph(g, out)
    else:
        click.echo(dumps_graph(g), nl=False)


def setup(cli) -> None:
    cli.add_command(gen_command)
