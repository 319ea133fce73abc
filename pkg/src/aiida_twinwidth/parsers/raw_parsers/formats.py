# -*- coding: utf-8 -*-
"""Raw parsers and serializers of the graph, sequence, decomposition and matrix text formats.

Every format is line based, uses 1-based ids and treats lines starting with `#` as comments. Parsers return the parsed
object together with a logging container; malformed input raises :class:`~aiida_twinwidth.exceptions.FormatParsingError`
citing the offending line.
"""
from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from aiida_twinwidth.core.decompositions import BranchDecomposition
from aiida_twinwidth.core.trigraph import ContractionSequence, Graph
from aiida_twinwidth.exceptions import FormatParsingError, InvalidContractionError, InvalidInputError
from aiida_twinwidth.utils.mapping import get_logging_container

__all__ = (
    'parse_graph', 'serialize_graph', 'parse_sequence', 'serialize_sequence', 'parse_decomposition',
    'serialize_decomposition', 'parse_matrix', 'serialize_matrix'
)


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield the 1-based line number and the tokens of every non empty, non comment line."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            yield number, stripped.split()


def _integers(tokens: list[str], count: int, number: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise FormatParsingError(f'{what} expects {count - 1} integers, got `{" ".join(tokens)}`', number)
    try:
        return [int(token) for token in tokens[1:]]
    except ValueError as exception:
        raise FormatParsingError(f'{what} expects integers, got `{" ".join(tokens)}`', number) from exception


def _header(lines, keyword: str, count: int) -> tuple[int, list[int]]:
    try:
        number, tokens = next(lines)
    except StopIteration as exception:
        raise FormatParsingError(f'missing `{keyword}` header') from exception
    if tokens[0] != keyword:
        raise FormatParsingError(f'expected the `{keyword}` header, got `{" ".join(tokens)}`', number)
    values = _integers(tokens, count, number, f'the `{keyword}` header')
    if any(value < 0 for value in values):
        raise FormatParsingError(f'the `{keyword}` header has negative values', number)
    return number, values


def parse_graph(text: str):
    """Parse a graph file: a `p <n> <m>` header followed by `m` lines `e <u> <v>`.

    The DIMACS header `p edge <n> <m>` is accepted as well.

    :return: tuple of the :class:`~aiida_twinwidth.core.trigraph.Graph` and the logging container
    """
    logs = get_logging_container()
    lines = _lines(text)

    try:
        number, tokens = next(lines)
    except StopIteration as exception:
        raise FormatParsingError('missing `p` header') from exception
    if tokens[0] != 'p':
        raise FormatParsingError(f'expected the `p` header, got `{" ".join(tokens)}`', number)
    if len(tokens) == 4 and tokens[1] == 'edge':
        logs.debug.append('reading a DIMACS `p edge` header')
        tokens = [tokens[0]] + tokens[2:]
    header_line = number
    n, m = _integers(tokens, 3, number, 'the `p` header')

    edges = []
    seen = set()
    for number, tokens in lines:
        if tokens[0] != 'e':
            raise FormatParsingError(f'expected an `e` line, got `{" ".join(tokens)}`', number)
        u, v = _integers(tokens, 3, number, 'an `e` line')
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatParsingError(f'edge `{u} {v}` has an endpoint outside 1..{n}', number)
        if u == v:
            raise FormatParsingError(f'loop on vertex `{u}`', number)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise FormatParsingError(f'edge `{u} {v}` is given twice', number)
        seen.add(edge)
        edges.append(edge)

    if len(edges) != m:
        raise FormatParsingError(f'the header announces {m} edges but {len(edges)} were given', header_line)

    return Graph(n, edges), logs


def serialize_graph(graph: Graph) -> str:
    """Return the graph file of `graph`, edges in lexicographic order."""
    lines = [f'p {graph.n} {graph.num_edges}']
    lines.extend(f'e {u} {v}' for u, v in graph.edges)
    return '\n'.join(lines) + '\n'


def parse_sequence(text: str):
    """Parse a sequence file: a `s <n> <k>` header followed by `k` lines `c <u> <v>`.

    The `i`-th contraction creates the part `n + i`.

    :return: tuple of the :class:`~aiida_twinwidth.core.trigraph.ContractionSequence` and the logging container
    """
    logs = get_logging_container()
    lines = _lines(text)
    header_line, (n, k) = _header(lines, 's', 3)

    steps = []
    step_lines = []
    for number, tokens in lines:
        if tokens[0] != 'c':
            raise FormatParsingError(f'expected a `c` line, got `{" ".join(tokens)}`', number)
        steps.append(tuple(_integers(tokens, 3, number, 'a `c` line')))
        step_lines.append(number)

    if len(steps) != k:
        raise FormatParsingError(f'the header announces {k} contractions but {len(steps)} were given', header_line)
    if k > max(n - 1, 0):
        raise FormatParsingError(f'{k} contractions exceed the {max(n - 1, 0)} possible on {n} vertices', header_line)

    try:
        sequence = ContractionSequence(n, steps)
    except InvalidContractionError as exception:
        line = step_lines[exception.step - 1] if exception.step else header_line
        raise FormatParsingError(str(exception), line) from exception

    if not sequence.is_full:
        logs.info.append(f'partial sequence of {k} out of {max(n - 1, 0)} contractions')

    return sequence, logs


def serialize_sequence(sequence: ContractionSequence) -> str:
    """Return the sequence file of `sequence`."""
    lines = [f's {sequence.num_vertices} {len(sequence)}']
    lines.extend(f'c {u} {v}' for u, v in sequence.steps)
    return '\n'.join(lines) + '\n'


def parse_decomposition(text: str):
    """Parse a branch decomposition file.

    The `t <nodes>` header is followed by `n <id> <parent>` lines for internal nodes, `l <id> <parent> <vertex>` lines
    for leaves, with parent 0 for the root, and an optional `lin` line asserting that the decomposition is linear.

    :return: tuple of the :class:`~aiida_twinwidth.core.decompositions.BranchDecomposition` and the logging container
    """
    logs = get_logging_container()
    lines = _lines(text)
    header_line, (num_nodes,) = _header(lines, 't', 2)

    parents = {}
    leaves = {}
    linear_line = None

    for number, tokens in lines:
        if tokens[0] == 'lin':
            if len(tokens) != 1:
                raise FormatParsingError('the `lin` line takes no argument', number)
            linear_line = number
            continue
        if tokens[0] == 'n':
            node, parent = _integers(tokens, 3, number, 'an `n` line')
        elif tokens[0] == 'l':
            node, parent, vertex = _integers(tokens, 4, number, 'an `l` line')
            leaves[node] = vertex
        else:
            raise FormatParsingError(f'expected an `n`, `l` or `lin` line, got `{" ".join(tokens)}`', number)
        if node in parents:
            raise FormatParsingError(f'node `{node}` is given twice', number)
        parents[node] = parent

    if len(parents) != num_nodes:
        raise FormatParsingError(f'the header announces {num_nodes} nodes but {len(parents)} were given', header_line)

    try:
        decomposition = BranchDecomposition(parents, leaves)
    except InvalidInputError as exception:
        raise FormatParsingError(str(exception), header_line) from exception

    if linear_line is not None and not decomposition.is_linear():
        raise FormatParsingError('the decomposition is flagged linear but its internal nodes do not form a path',
                                 linear_line)

    logs.debug.append(f'decomposition of {decomposition.n} vertices with {num_nodes} nodes')
    return decomposition, logs


def serialize_decomposition(decomposition: BranchDecomposition) -> str:
    """Return the branch decomposition file of `decomposition`, nodes by increasing id.

    The `lin` line is written for linear decompositions.
    """
    lines = [f't {len(decomposition.parents)}']
    if decomposition.is_linear():
        lines.append('lin')
    for node, parent in sorted(decomposition.parents.items()):
        if node in decomposition.leaves:
            lines.append(f'l {node} {parent} {decomposition.leaves[node]}')
        else:
            lines.append(f'n {node} {parent}')
    return '\n'.join(lines) + '\n'


def parse_matrix(text: str):
    """Parse a matrix file: a `m <r> <c>` header followed by `r` lines of `c` symbols.

    Integer symbols give an integer matrix, any other symbol a matrix of strings.

    :return: tuple of the `numpy` array and the logging container
    """
    logs = get_logging_container()
    lines = _lines(text)
    header_line, (rows, cols) = _header(lines, 'm', 3)

    entries = []
    for number, tokens in lines:
        if len(entries) == rows:
            raise FormatParsingError(f'more than the {rows} announced rows', number)
        if len(tokens) != cols:
            raise FormatParsingError(f'expected {cols} symbols, got {len(tokens)}', number)
        entries.append(tokens)

    if len(entries) != rows:
        raise FormatParsingError(f'the header announces {rows} rows but {len(entries)} were given', header_line)

    try:
        matrix = np.array([[int(token) for token in row] for row in entries], dtype=int).reshape(rows, cols)
    except ValueError:
        matrix = np.array(entries, dtype=str).reshape(rows, cols)
        logs.info.append('the matrix has non integer symbols, read as strings')

    logs.debug.append(f'matrix of {rows}x{cols} over {len(np.unique(matrix))} symbols')
    return matrix, logs


def serialize_matrix(matrix) -> str:
    """Return the matrix file of a two dimensional array."""
    matrix = np.asarray(matrix)
    lines = [f'm {matrix.shape[0]} {matrix.shape[1]}']
    lines.extend(' '.join(str(entry) for entry in row) for row in matrix.tolist())
    return '\n'.join(lines) + '\n'
