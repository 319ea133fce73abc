# -*- coding: utf-8 -*-
"""Matrix partitions, error values, mixed zones and the exact twin-width of small matrices.

Matrices are two dimensional `numpy` arrays over any finite alphabet. Row and column indices are 0-based and ranges are
half open `(start, stop)` pairs.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations

from aiida.common.log import AIIDA_LOGGER
import numpy as np

from aiida_twinwidth.core.bitsets import bits
from aiida_twinwidth.core.trigraph import Graph
from aiida_twinwidth.exceptions import BudgetExceededError, CapExceededError, InvalidInputError
from aiida_twinwidth.utils.defaults import (
    MATRIX_EXACT_MAX_DIMENSION,
    MATRIX_NODE_BUDGET,
    MIXED_MINOR_MAX_DIMENSION,
    MIXED_VALUE_MAX_VERTICES,
)

__all__ = (
    'MatrixPartition', 'as_matrix', 'error_value', 'is_mixed', 'find_corner', 'check_t_mixed_minor',
    'has_t_mixed_minor', 'matrix_twin_width_exact', 'adjacency_matrix', 'graph_mixed_value'
)

LOGGER = AIIDA_LOGGER.getChild('twinwidth')


def as_matrix(matrix) -> np.ndarray:
    """Return `matrix` as a two dimensional array.

    :raises InvalidInputError: if it is not rectangular
    """
    try:
        array = np.asarray(matrix)
    except ValueError as exception:
        raise InvalidInputError('the matrix is not rectangular') from exception
    if array.ndim != 2:
        raise InvalidInputError(f'a matrix must have two dimensions, got {array.ndim}')
    return array


def _normalize_parts(parts: Iterable[Iterable[int]], size: int, side: str) -> tuple[tuple[int, ...], ...]:
    normalized = []
    seen = set()
    for part in parts:
        part = tuple(sorted(int(index) for index in part))
        if not part:
            raise InvalidInputError(f'the {side} partition has an empty part')
        if seen.intersection(part):
            raise InvalidInputError(f'the {side} partition has overlapping parts')
        if size is not None and not all(0 <= index < size for index in part):
            raise InvalidInputError(f'the {side} partition has indices outside 0..{size - 1}')
        seen.update(part)
        normalized.append(part)
    if size is not None and len(seen) != size:
        raise InvalidInputError(f'the {side} partition does not cover the {size} {side}s')
    return tuple(sorted(normalized))


@dataclass(frozen=True)
class MatrixPartition:
    """A partition of the rows and a partition of the columns of a matrix.

    Parts are sorted tuples of indices, and the parts of each side are sorted by their first index.
    """

    row_parts: tuple[tuple[int, ...], ...]
    col_parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'row_parts', _normalize_parts(self.row_parts, None, 'row'))
        object.__setattr__(self, 'col_parts', _normalize_parts(self.col_parts, None, 'column'))

    @classmethod
    def finest(cls, rows: int, cols: int) -> MatrixPartition:
        """Return the partition into singletons."""
        return cls(tuple((i,) for i in range(rows)), tuple((j,) for j in range(cols)))

    @classmethod
    def coarsest(cls, rows: int, cols: int) -> MatrixPartition:
        """Return the partition with a single row part and a single column part."""
        return cls((tuple(range(rows)),), (tuple(range(cols)),))

    @classmethod
    def division(cls, row_bounds: Sequence[int], col_bounds: Sequence[int]) -> MatrixPartition:
        """Return the division whose parts are delimited by the given increasing bounds, e.g. `(0, 2, 4)`."""
        for name, bounds in (('row', row_bounds), ('column', col_bounds)):
            if len(bounds) < 2 or any(start >= stop for start, stop in zip(bounds, bounds[1:])):
                raise InvalidInputError(f'the {name} bounds `{list(bounds)}` are not strictly increasing')
        return cls(
            tuple(tuple(range(start, stop)) for start, stop in zip(row_bounds, row_bounds[1:])),
            tuple(tuple(range(start, stop)) for start, stop in zip(col_bounds, col_bounds[1:])),
        )

    @property
    def is_division(self) -> bool:
        """Return whether every part is an interval of consecutive indices."""
        return all(part[-1] - part[0] + 1 == len(part) for part in self.row_parts + self.col_parts)

    def check(self, matrix: np.ndarray):
        """Check that both sides partition the index sets of `matrix`.

        :raises InvalidInputError: otherwise
        """
        rows, cols = matrix.shape
        _normalize_parts(self.row_parts, rows, 'row')
        _normalize_parts(self.col_parts, cols, 'column')


def _non_constant(zone: np.ndarray) -> bool:
    return bool(zone.size) and bool((zone != zone.flat[0]).any())


def _zone_table(matrix: np.ndarray, row_parts, col_parts) -> np.ndarray:
    """Return the boolean table of the non-constant zones, rows by row part and columns by column part."""
    table = np.zeros((len(row_parts), len(col_parts)), dtype=bool)
    for i, rows in enumerate(row_parts):
        for j, cols in enumerate(col_parts):
            table[i, j] = _non_constant(matrix[np.ix_(rows, cols)])
    return table


def _error_from_table(table: np.ndarray) -> int:
    if not table.size:
        return 0
    return int(max(table.sum(axis=1).max(), table.sum(axis=0).max()))


def error_value(matrix, partition: MatrixPartition) -> int:
    """Return the largest number of non-constant zones in the row or column of a single part."""
    matrix = as_matrix(matrix)
    partition.check(matrix)
    return _error_from_table(_zone_table(matrix, partition.row_parts, partition.col_parts))


def _zone(matrix: np.ndarray, rows: tuple[int, int], cols: tuple[int, int]) -> np.ndarray:
    (row_start, row_stop), (col_start, col_stop) = rows, cols
    if not (0 <= row_start < row_stop <= matrix.shape[0] and 0 <= col_start < col_stop <= matrix.shape[1]):
        raise InvalidInputError(f'the zone {rows} x {cols} is empty or outside the matrix')
    return matrix[row_start:row_stop, col_start:col_stop]


def _zone_is_mixed(zone: np.ndarray) -> bool:
    vertical = bool((zone[1:, :] == zone[:-1, :]).all())
    horizontal = bool((zone[:, 1:] == zone[:, :-1]).all())
    return not vertical and not horizontal


def is_mixed(matrix, rows: tuple[int, int], cols: tuple[int, int]) -> bool:
    """Return whether the zone is neither vertical nor horizontal.

    A zone is vertical when all its columns are constant, `m[i, j] == m[i + 1, j]`, and horizontal when all its rows
    are constant, `m[i, j] == m[i, j + 1]`.
    """
    return _zone_is_mixed(_zone(as_matrix(matrix), rows, cols))


def find_corner(matrix, rows: tuple[int, int], cols: tuple[int, int]) -> tuple[int, int] | None:
    """Return the top left position of the first mixed contiguous 2x2 submatrix of the zone, scanning row by row."""
    zone = _zone(as_matrix(matrix), rows, cols)
    for i in range(zone.shape[0] - 1):
        for j in range(zone.shape[1] - 1):
            if _zone_is_mixed(zone[i:i + 2, j:j + 2]):
                return rows[0] + i, cols[0] + j
    return None


def check_t_mixed_minor(matrix, division: MatrixPartition, t: int) -> bool:
    """Return whether every zone of a `t` by `t` division is mixed.

    :raises InvalidInputError: if the partition is not a division of the matrix into `t` row and `t` column parts
    """
    matrix = as_matrix(matrix)
    division.check(matrix)
    if not division.is_division:
        raise InvalidInputError('a mixed minor is witnessed by a division, got parts that are not intervals')
    if len(division.row_parts) != t or len(division.col_parts) != t:
        raise InvalidInputError(
            f'expected {t} row and column parts, got {len(division.row_parts)} and {len(division.col_parts)}'
        )
    return all(
        _zone_is_mixed(matrix[rows[0]:rows[-1] + 1, cols[0]:cols[-1] + 1])
        for rows in division.row_parts
        for cols in division.col_parts
    )


def _compositions(size: int, t: int):
    """Yield the bounds of every division of `range(size)` into `t` intervals."""
    for cuts in combinations(range(1, size), t - 1):
        yield (0, *cuts, size)


def has_t_mixed_minor(matrix, t: int) -> bool:
    """Return whether some division of the matrix into `t` by `t` zones has only mixed zones.

    :raises CapExceededError: if the matrix has more than `MIXED_MINOR_MAX_DIMENSION` rows or columns
    """
    matrix = as_matrix(matrix)
    rows, cols = matrix.shape
    if rows > MIXED_MINOR_MAX_DIMENSION or cols > MIXED_MINOR_MAX_DIMENSION:
        raise CapExceededError(
            f'mixed minors are enumerated on at most {MIXED_MINOR_MAX_DIMENSION} rows and columns, got {rows}x{cols}'
        )
    if t < 1:
        raise InvalidInputError(f'the order of a mixed minor must be positive, got `{t}`')
    if t > rows or t > cols:
        return False

    mixed = {}

    def zone_mixed(row_range, col_range):
        key = row_range + col_range
        if key not in mixed:
            mixed[key] = _zone_is_mixed(matrix[row_range[0]:row_range[1], col_range[0]:col_range[1]])
        return mixed[key]

    col_divisions = list(_compositions(cols, t))

    for row_bounds in _compositions(rows, t):
        row_ranges = list(zip(row_bounds, row_bounds[1:]))
        for col_bounds in col_divisions:
            col_ranges = list(zip(col_bounds, col_bounds[1:]))
            if all(zone_mixed(row_range, col_range) for row_range in row_ranges for col_range in col_ranges):
                LOGGER.debug(f'{t}-mixed minor at row bounds {row_bounds} and column bounds {col_bounds}')
                return True

    return False


class _MatrixSearch:
    """Iterative deepening over pairs of row and column partitions, encoded as sorted tuples of index masks."""

    def __init__(self, matrix: np.ndarray, symmetric: bool, node_budget: int):
        self.matrix = matrix
        self.symmetric = symmetric
        self.node_budget = node_budget
        self.nodes_explored = 0
        self._values = {}

    def value(self, state) -> int:
        if state not in self._values:
            row_parts, col_parts = ([list(bits(mask)) for mask in side] for side in state)
            self._values[state] = _error_from_table(_zone_table(self.matrix, row_parts, col_parts))
        return self._values[state]

    def initial(self):
        rows, cols = self.matrix.shape
        return tuple(1 << i for i in range(rows)), tuple(1 << j for j in range(cols))

    def children(self, state):
        rows, cols = state

        def merged(side, i, j):
            return tuple(sorted(side[:i] + side[i + 1:j] + side[j + 1:] + (side[i] | side[j],)))

        if self.symmetric:
            for i, j in combinations(range(len(rows)), 2):
                side = merged(rows, i, j)
                yield side, side
            return

        for i, j in combinations(range(len(rows)), 2):
            yield merged(rows, i, j), cols
        for i, j in combinations(range(len(cols)), 2):
            yield rows, merged(cols, i, j)

    @staticmethod
    def is_final(state) -> bool:
        return len(state[0]) == 1 and len(state[1]) == 1

    def greedy(self) -> int:
        state = self.initial()
        width = self.value(state)
        while not self.is_final(state):
            state = min(self.children(state), key=self.value)
            width = max(width, self.value(state))
        return width

    def solve(self, bound: int) -> bool:
        failed = set()

        def search(state):
            if self.is_final(state):
                return True
            self.nodes_explored += 1
            if self.nodes_explored > self.node_budget:
                raise BudgetExceededError('the exact matrix twin-width search ran out of budget', lower=bound)
            for child in sorted((child for child in self.children(state) if child not in failed), key=self.value):
                if self.value(child) <= bound and search(child):
                    return True
            failed.add(state)
            return False

        return search(self.initial())


def matrix_twin_width_exact(matrix, node_budget: int = MATRIX_NODE_BUDGET, symmetric: bool = False) -> int:
    """Return the minimum, over the contraction sequences of the matrix, of the largest error value met.

    A contraction merges two row parts or two column parts. In symmetric mode the matrix must be square and every
    contraction merges the same two parts on both sides, as for the adjacency matrix of a graph.

    :raises CapExceededError: if the matrix has more than `MATRIX_EXACT_MAX_DIMENSION` rows and columns together
    :raises BudgetExceededError: if the search expands more than `node_budget` nodes, with the proven bracket
    """
    matrix = as_matrix(matrix)
    rows, cols = matrix.shape
    if rows + cols > MATRIX_EXACT_MAX_DIMENSION:
        raise CapExceededError(
            f'the exact search accepts at most {MATRIX_EXACT_MAX_DIMENSION} rows and columns together, '
            f'got {rows}x{cols}'
        )
    if rows == 0 or cols == 0:
        raise InvalidInputError('the matrix has no entries')
    if symmetric and rows != cols:
        raise InvalidInputError(f'symmetric contraction needs a square matrix, got {rows}x{cols}')

    search = _MatrixSearch(matrix, symmetric, node_budget)
    upper = search.greedy()
    lower = search.value(search.initial())

    for bound in range(lower, upper):
        try:
            found = search.solve(bound)
        except BudgetExceededError as exception:
            raise BudgetExceededError(
                'the exact matrix twin-width search ran out of budget', lower=exception.lower, upper=upper
            ) from exception
        if found:
            return bound
        LOGGER.debug(f'no matrix contraction sequence of width {bound}, {search.nodes_explored} nodes explored')

    return upper


def adjacency_matrix(graph: Graph, order: Sequence[int] | None = None) -> np.ndarray:
    """Return the adjacency matrix of the graph, rows and columns following the vertex `order`, `1..n` by default."""
    order = list(graph.vertices) if order is None else [int(vertex) for vertex in order]
    if sorted(order) != list(graph.vertices):
        raise InvalidInputError('the order is not a permutation of the vertices')
    matrix = np.zeros((graph.n, graph.n), dtype=int)
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            matrix[i, j] = int(graph.has_edge(u, v))
    return matrix


def _mixed_free_order(matrix: np.ndarray) -> int:
    """Return the least `t` such that the matrix has no `t`-mixed minor."""
    t = 1
    while has_t_mixed_minor(matrix, t):
        t += 1
    return t


def graph_mixed_value(graph: Graph) -> int:
    """Return the least `t` such that some ordering of the vertices gives a `t`-mixed free adjacency matrix.

    All the orderings are tried.

    :raises CapExceededError: beyond `MIXED_VALUE_MAX_VERTICES` vertices
    """
    if graph.n > MIXED_VALUE_MAX_VERTICES:
        raise CapExceededError(
            f'the mixed value is computed on at most {MIXED_VALUE_MAX_VERTICES} vertices, got {graph.n}'
        )
    return min(_mixed_free_order(adjacency_matrix(graph, order)) for order in permutations(graph.vertices))
