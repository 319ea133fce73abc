# -*- coding: utf-8 -*-
"""Commands measuring, verifying, building and converting contraction sequences."""
from __future__ import annotations

import math

from aiida.cmdline.utils import echo
import click

from aiida_twinwidth.core import builders
from aiida_twinwidth.core.decompositions import (
    bd_boolean_width,
    bd_to_sequence,
    linear_bd_to_sequence,
    sequence_to_bd,
    sequence_to_linear_bd,
)
from aiida_twinwidth.core.widths import Measure, sequence_width, verify_d_sequence
from aiida_twinwidth.exceptions import InvalidInputError
from aiida_twinwidth.parsers.files import read_decomposition, read_graph
from aiida_twinwidth.utils.defaults import EXACT_NODE_BUDGET

from . import options
from .root import EXIT_LIMIT_EXCEEDED, EXIT_SUCCESS, EXIT_VERIFICATION_FAILED, cmd_root


@cmd_root.command('width')
@options.MEASURE
@options.GRAPH
@options.SEQUENCE
def cmd_width(measure, graph_path, sequence_path):
    """Print the width of a sequence."""
    graph, sequence = options.load_graph_and_sequence(graph_path, sequence_path)
    echo.echo(str(sequence_width(graph, sequence, Measure(measure))))
    return EXIT_SUCCESS


@cmd_root.command('verify')
@options.MEASURE
@click.option('--d', 'bound', type=click.IntRange(min=0), required=True, help='Width bound.')
@options.GRAPH
@options.SEQUENCE
def cmd_verify(measure, bound, graph_path, sequence_path):
    """Check that every partition of a sequence has width at most D; exit with 2 on the first violation."""
    graph, sequence = options.load_graph_and_sequence(graph_path, sequence_path)
    violation = verify_d_sequence(graph, sequence, bound, Measure(measure))

    if violation is None:
        echo.echo(f'OK: {measure} width at most {bound}')
        return EXIT_SUCCESS

    echo.echo(f'VIOLATION step {violation.step} parts {" ".join(map(str, violation.parts))} value {violation.value}')
    return EXIT_VERIFICATION_FAILED


@cmd_root.command('exact')
@options.MEASURE
@options.GRAPH
@click.option('--budget', type=click.IntRange(min=1), default=EXACT_NODE_BUDGET, show_default=True,
              help='Number of search nodes.')
@options.OUTPUT
def cmd_exact(measure, graph_path, budget, output_path):
    """Compute a sequence of minimum width; exit with 3 when the budget runs out before the proof."""
    report = builders.exact_width(read_graph(graph_path), Measure(measure), budget)
    comments = {'width': report.achieved_width, 'exact': report.exact, 'lower_bound': report.lower_bound}
    options.emit('sequence', report.sequence, output_path, comments)

    if not report.exact:
        echo.echo_warning(f'budget exhausted: width in [{report.lower_bound}, {report.achieved_width}]')
        return EXIT_LIMIT_EXCEEDED

    return EXIT_SUCCESS


@cmd_root.command('build')
@click.option('--strategy', type=click.Choice(['greedy', 'contractible', 'partial']), default='greedy',
              show_default=True, help='Sequence builder.')
@options.MEASURE
@options.GRAPH
@click.option('--d', 'bound', type=click.IntRange(min=0), help='Bound of the contractible and partial builders.')
@click.option('--delta', type=click.IntRange(min=0), help='Target total degree of the partial builder.')
@click.option('--predicate', type=click.Choice(list(builders.PAIR_PREDICATES)), default='twins-or-adjacent',
              show_default=True, help='Admissible pairs of the contractible builder.')
@options.OUTPUT
def cmd_build(strategy, measure, graph_path, bound, delta, predicate, output_path):
    """Build a sequence and print it preceded by the build report."""
    graph = read_graph(graph_path)

    if strategy != 'greedy' and bound is None:
        raise click.UsageError(f'the `{strategy}` strategy requires `--d`')
    if strategy == 'partial' and delta is None:
        raise click.UsageError('the `partial` strategy requires `--delta`')

    if strategy == 'greedy':
        report = builders.greedy_sequence(graph, Measure(measure))
    elif strategy == 'contractible':
        report = builders.contractible_sequence(graph, bound, predicate)
    else:
        report = builders.partial_sequence_to_degree(graph, bound, delta)

    comments = {'measure': report.measure.value, 'width': report.achieved_width, 'complete': report.complete}
    if report.stop_reason is not None:
        comments['stop_reason'] = report.stop_reason

    options.emit('sequence', report.sequence, output_path, comments)
    return EXIT_SUCCESS


@cmd_root.command('convert')
@click.argument('direction', type=click.Choice(['bd2seq', 'seq2bd', 'lbd2seq', 'seq2lbd']))
@options.GRAPH
@click.option('--in', 'input_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Decomposition file for `bd2seq` and `lbd2seq`, sequence file otherwise.')
@click.option('--d', 'bound', type=click.IntRange(min=0),
              help='Boolean-width bound of the decomposition; by default the rounded up width of the decomposition.')
@options.OUTPUT
def cmd_convert(direction, graph_path, input_path, bound, output_path):
    """Convert between branch decompositions and contraction sequences."""
    graph = read_graph(graph_path)

    if direction in ('bd2seq', 'lbd2seq'):
        decomposition = read_decomposition(input_path)
        if decomposition.n != graph.n:
            raise InvalidInputError(f'the decomposition has {decomposition.n} leaves, the graph {graph.n} vertices')
        if bound is None:
            bound = math.ceil(bd_boolean_width(graph, decomposition).upper)
        convert = bd_to_sequence if direction == 'bd2seq' else linear_bd_to_sequence
        options.emit('sequence', convert(graph, decomposition, bound), output_path, {'bound': bound})
    else:
        graph, sequence = options.load_graph_and_sequence(graph_path, input_path)
        convert = sequence_to_bd if direction == 'seq2bd' else sequence_to_linear_bd
        options.emit('decomposition', convert(graph, sequence), output_path)

    return EXIT_SUCCESS
