# -*- coding: utf-8 -*-
"""Commands on 0/1 matrices. Row and column indices are 1-based on the command line."""
from __future__ import annotations

from aiida.cmdline.utils import echo
import click

from aiida_twinwidth.core import matrix as calculus
from aiida_twinwidth.exceptions import InvalidInputError
from aiida_twinwidth.parsers.files import read_graph, read_matrix
from aiida_twinwidth.utils.defaults import MATRIX_NODE_BUDGET

from . import options
from .root import EXIT_SUCCESS, cmd_root

MATRIX = click.option(
    '--matrix', 'matrix_path', required=True, type=click.Path(exists=True, dir_okay=False), help='Matrix file.'
)


def parse_parts(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse `1,2/3,4` into the 0-based parts `((0, 1), (2, 3))`; `a-b` stands for the indices `a` to `b`."""
    parts = []
    try:
        for part in text.split('/'):
            indices = []
            for item in part.split(','):
                start, _, stop = item.partition('-')
                indices.extend(range(int(start) - 1, int(stop or start)))
            parts.append(tuple(indices))
    except ValueError as exception:
        raise InvalidInputError(f'invalid parts `{text}`, expected e.g. `1,2/3-5`') from exception
    return tuple(parts)


def parse_range(text: str | None, size: int) -> tuple[int, int]:
    """Parse the 1-based inclusive range `a:b` into the 0-based half open `(a - 1, b)`; `None` is the full range."""
    if text is None:
        return 0, size
    start, sep, stop = text.partition(':')
    try:
        if not sep:
            raise ValueError
        return int(start) - 1, int(stop)
    except ValueError as exception:
        raise InvalidInputError(f'invalid range `{text}`, expected `a:b`') from exception


@cmd_root.group('matrix')
def cmd_matrix():
    """Error values, mixed zones, mixed minors and twin-width of matrices."""


@cmd_matrix.command('error')
@MATRIX
@click.option('--rows', required=True, help='Row parts, e.g. `1,2/3`.')
@click.option('--cols', required=True, help='Column parts, e.g. `1/2-4`.')
def cmd_error(matrix_path, rows, cols):
    """Print the error value of a partition of the rows and columns."""
    matrix = read_matrix(matrix_path)
    echo.echo(str(calculus.error_value(matrix, calculus.MatrixPartition(parse_parts(rows), parse_parts(cols)))))
    return EXIT_SUCCESS


@cmd_matrix.command('mixed')
@MATRIX
@click.option('--rows', help='Row range `a:b`, the whole matrix by default.')
@click.option('--cols', help='Column range `a:b`, the whole matrix by default.')
def cmd_mixed(matrix_path, rows, cols):
    """Print whether a zone is mixed and the position of a corner, if any."""
    matrix = read_matrix(matrix_path)
    row_range = parse_range(rows, matrix.shape[0])
    col_range = parse_range(cols, matrix.shape[1])

    echo.echo('mixed' if calculus.is_mixed(matrix, row_range, col_range) else 'not mixed')

    corner = calculus.find_corner(matrix, row_range, col_range)
    echo.echo('no corner' if corner is None else f'corner {corner[0] + 1} {corner[1] + 1}')
    return EXIT_SUCCESS


@cmd_matrix.command('minor')
@MATRIX
@click.option('--t', 'order', type=click.IntRange(min=1), required=True, help='Order of the mixed minor.')
@click.option('--rows', help='Row parts of a division to check, e.g. `1-2/3-4`.')
@click.option('--cols', help='Column parts of a division to check.')
def cmd_minor(matrix_path, order, rows, cols):
    """Print YES when the matrix has a T-mixed minor, or when the given division is one, NO otherwise."""
    matrix = read_matrix(matrix_path)

    if (rows is None) != (cols is None):
        raise click.UsageError('`--rows` and `--cols` must be given together')

    if rows is None:
        found = calculus.has_t_mixed_minor(matrix, order)
    else:
        division = calculus.MatrixPartition(parse_parts(rows), parse_parts(cols))
        found = calculus.check_t_mixed_minor(matrix, division, order)

    echo.echo('YES' if found else 'NO')
    return EXIT_SUCCESS


@cmd_matrix.command('exact')
@MATRIX
@click.option('--budget', type=click.IntRange(min=1), default=MATRIX_NODE_BUDGET, show_default=True,
              help='Number of search nodes.')
@click.option('--symmetric', is_flag=True, help='Contract the same rows and columns together.')
def cmd_exact(matrix_path, budget, symmetric):
    """Print the twin-width of a small matrix."""
    echo.echo(str(calculus.matrix_twin_width_exact(read_matrix(matrix_path), budget, symmetric=symmetric)))
    return EXIT_SUCCESS


@cmd_matrix.command('mixed-value')
@options.GRAPH
def cmd_mixed_value(graph_path):
    """Print the mixed value of a small graph, over all the orderings of its vertices."""
    echo.echo(str(calculus.graph_mixed_value(read_graph(graph_path))))
    return EXIT_SUCCESS
