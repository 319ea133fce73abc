# -*- coding: utf-8 -*-
"""Commands generating graphs and deciding colourability."""
from __future__ import annotations

from aiida.cmdline.utils import echo
import click

from aiida_twinwidth.core.coloring import ColoringProgram
from aiida_twinwidth.core.generators import GENERATORS, generate
from aiida_twinwidth.core.widths import Measure, sequence_width

from . import options
from .root import EXIT_SUCCESS, cmd_root


@cmd_root.command('gen')
@click.option('--kind', type=click.Choice(sorted(GENERATORS)), required=True, help='Graph family.')
@click.option('--params', default='', help='Family parameters as `key=value,...`, e.g. `rows=3,cols=3`.')
@click.option('--seed', type=int, default=None, help='Seed of the random families.')
@options.OUTPUT
def cmd_gen(kind, params, seed, output_path):
    """Print a graph of a family."""
    options.emit('graph', generate(kind, params, seed), output_path)
    return EXIT_SUCCESS


@cmd_root.command('color')
@click.option('--q', 'colors', type=click.IntRange(min=0), required=True, help='Number of colours.')
@click.option('--d', 'bound', type=click.IntRange(min=0),
              help='Component width bound; by default the component width of the sequence.')
@options.GRAPH
@options.SEQUENCE
@click.option('--extract', is_flag=True, help='Print a colouring as `v <vertex> <colour>` lines.')
def cmd_color(colors, bound, graph_path, sequence_path, extract):
    """Print YES when the graph is Q-colourable, NO otherwise."""
    graph, sequence = options.load_graph_and_sequence(graph_path, sequence_path)

    if bound is None:
        bound = sequence_width(graph, sequence, Measure.COMPONENT)

    program = ColoringProgram(graph, sequence, colors, bound, keep_witnesses=extract)
    colorable = program.run()
    echo.echo('YES' if colorable else 'NO')

    if colorable and extract:
        for vertex, color in sorted(program.coloring().items()):
            echo.echo(f'v {vertex} {color}')

    return EXIT_SUCCESS
