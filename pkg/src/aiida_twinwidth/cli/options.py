# -*- coding: utf-8 -*-
"""Options and helpers shared by the commands."""
from __future__ import annotations

from aiida.cmdline.utils import echo
import click

from aiida_twinwidth.core.trigraph import apply_sequence
from aiida_twinwidth.core.widths import Measure
from aiida_twinwidth.exceptions import InvalidInputError
from aiida_twinwidth.parsers.files import read_graph, read_sequence, write_text

GRAPH = click.option(
    '--graph', 'graph_path', required=True, type=click.Path(exists=True, dir_okay=False), help='Graph file.'
)
SEQUENCE = click.option(
    '--seq', 'sequence_path', required=True, type=click.Path(exists=True, dir_okay=False), help='Sequence file.'
)
MEASURE = click.option(
    '--measure',
    type=click.Choice([measure.value for measure in Measure]),
    default=Measure.DEGREE.value,
    show_default=True,
    help='Width measure.',
)
OUTPUT = click.option(
    '--output', 'output_path', type=click.Path(dir_okay=False), help='Write the result to this file instead of stdout.'
)


def load_graph_and_sequence(graph_path, sequence_path):
    """Read a graph and a sequence and replay the sequence once, failing with the step index if it is not valid."""
    graph = read_graph(graph_path)
    sequence = read_sequence(sequence_path)

    if sequence.num_vertices != graph.n:
        raise InvalidInputError(f'the sequence is for {sequence.num_vertices} vertices, the graph has {graph.n}')

    apply_sequence(graph, sequence)
    return graph, sequence


def emit(kind: str, value, output_path=None, comments: dict | None = None):
    """Serialize a value, preceded by `# key: value` comment lines, to a file or to stdout."""
    text = ''.join(f'# {key}: {item}\n' for key, item in (comments or {}).items())
    text += write_text(kind, value)

    if output_path is None:
        echo.echo(text, nl=False)
    else:
        with open(output_path, 'w', encoding='utf-8') as handle:
            handle.write(text)
