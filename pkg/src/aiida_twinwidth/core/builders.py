# -*- coding: utf-8 -*-
"""Builders of contraction sequences: exhaustive search, greedy heuristics and the contractible-class builder."""
from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field, replace
from itertools import combinations

from aiida.common.log import AIIDA_LOGGER

from aiida_twinwidth.core.bitsets import popcount
from aiida_twinwidth.core.trigraph import (
    ContractionSequence,
    Graph,
    Partition,
    contract,
    from_graph,
    max_total_degree,
    total_degree,
)
from aiida_twinwidth.core.widths import Measure, measure_value, sequence_width
from aiida_twinwidth.exceptions import ContractionStuckError, InvalidInputError
from aiida_twinwidth.utils.defaults import EXACT_NODE_BUDGET

__all__ = (
    'BuildReport', 'PairPredicate', 'any_pair', 'twins_or_adjacent', 'PAIR_PREDICATES', 'exact_width',
    'greedy_sequence', 'contractible_sequence', 'partial_sequence_to_degree'
)

LOGGER = AIIDA_LOGGER.getChild('twinwidth')

#: A pair predicate receives the total graph of the current trigraph, as a map from vertex to neighbourhood mask, and
#: two of its vertices.
PairPredicate = Callable[[Mapping[int, int], int, int], bool]

STOP_TARGET_REACHED = 'target-reached'
STOP_NO_ADMISSIBLE_PAIR = 'no-admissible-pair'


@dataclass(frozen=True)
class BuildReport:
    """The outcome of a sequence builder.

    :param sequence: the built sequence
    :param measure: the measure the builder optimised or bounded
    :param widths: width of the returned sequence under each reported measure, recomputed on the sequence itself
    :param nodes_explored: number of search nodes expanded by the exact search
    :param complete: whether the sequence is full
    :param exact: whether the width is proven optimal
    :param lower_bound: best proven lower bound of the width, if any
    :param stop_reason: why a partial builder stopped
    """

    sequence: ContractionSequence
    measure: Measure
    widths: Mapping[Measure, int] = field(default_factory=dict)
    nodes_explored: int = 0
    complete: bool = True
    exact: bool = False
    lower_bound: int | None = None
    stop_reason: str | None = None

    @property
    def achieved_width(self) -> int:
        """Return the width of the sequence under the builder's measure."""
        return self.widths[self.measure]

    def as_dict(self) -> dict:
        """Return a JSON serializable summary, without the sequence."""
        return {
            'measure': self.measure.value,
            'widths': {measure.value: width for measure, width in self.widths.items()},
            'nodes_explored': self.nodes_explored,
            'complete': self.complete,
            'exact': self.exact,
            'lower_bound': self.lower_bound,
            'stop_reason': self.stop_reason,
        }


def _report(graph: Graph, sequence: ContractionSequence, measure: Measure, **kwargs) -> BuildReport:
    widths = {measure: sequence_width(graph, sequence, measure)}
    return BuildReport(sequence=sequence, measure=measure, widths=widths, complete=sequence.is_full, **kwargs)


def _check_graph(graph: Graph):
    if graph.n < 1:
        raise InvalidInputError('sequence builders need at least one vertex')


def greedy_sequence(graph: Graph, measure: Measure | str) -> BuildReport:
    """Build a full sequence contracting, at each step, the pair giving the smallest width under `measure`.

    Ties are broken by the lexicographically smallest pair of part ids.
    """
    _check_graph(graph)
    measure = Measure(measure)
    n = graph.n
    partition = Partition.singletons(graph)
    steps = []

    for step in range(1, n):
        new_id = n + step
        best = None
        for u, v in combinations(partition.ids, 2):
            candidate = partition.merge(u, v, new_id)
            value = measure_value(graph, candidate, measure)
            if best is None or value < best[0]:
                best = (value, u, v, candidate)
        _, u, v, partition = best
        steps.append((u, v))

    report = _report(graph, ContractionSequence(n, steps), measure)
    LOGGER.info(f'greedy {measure.value} sequence of width {report.achieved_width} on {n} vertices')
    return report


class _BudgetExhausted(Exception):
    """Raised internally when the exact search expands more nodes than allowed."""


class _ExactSearch:
    """Depth first search over partitions, encoded as sorted tuples of vertex masks."""

    def __init__(self, graph: Graph, measure: Measure, node_budget: int):
        self.graph = graph
        self.measure = measure
        self.node_budget = node_budget
        self.nodes_explored = 0
        self._values = {}

    def value(self, state: tuple[int, ...]) -> int:
        """Return the width of a partition state, cached across bounds."""
        try:
            return self._values[state]
        except KeyError:
            partition = Partition._from_masks(self.graph, dict(enumerate(state, start=1)))
            value = self._values[state] = measure_value(self.graph, partition, self.measure)
            return value

    def solve(self, bound: int) -> list[tuple[int, int]] | None:
        """Return the merged mask pairs of a sequence of width at most `bound`, or `None` if there is none."""
        failed = set()

        def search(state):
            if len(state) == 1:
                return []

            self.nodes_explored += 1
            if self.nodes_explored > self.node_budget:
                raise _BudgetExhausted

            children = []
            for i, j in combinations(range(len(state)), 2):
                child = tuple(sorted(state[:i] + state[i + 1:j] + state[j + 1:] + (state[i] | state[j],)))
                if child in failed:
                    continue
                value = self.value(child)
                if value <= bound:
                    children.append((value, i, j, child))

            children.sort(key=lambda item: item[0])

            for _, i, j, child in children:
                path = search(child)
                if path is not None:
                    return [(state[i], state[j])] + path

            failed.add(state)
            return None

        initial = tuple(1 << vertex for vertex in self.graph.vertices)
        if self.value(initial) > bound:
            return None
        return search(initial)


def _sequence_from_masks(n: int, path: list[tuple[int, int]]) -> ContractionSequence:
    ids = {1 << vertex: vertex for vertex in range(1, n + 1)}
    steps = []
    for step, (first, second) in enumerate(path, start=1):
        steps.append(tuple(sorted((ids[first], ids[second]))))
        ids[first | second] = n + step
    return ContractionSequence(n, steps)


def exact_width(graph: Graph, measure: Measure | str, node_budget: int = EXACT_NODE_BUDGET) -> BuildReport:
    """Return a sequence of minimum width under `measure`.

    The search deepens the bound from the width of the finest partition up to the greedy width, remembering the
    partitions that failed for the current bound. When the budget runs out the greedy sequence is returned, flagged as
    inexact, together with the best proven lower bound.
    """
    _check_graph(graph)
    measure = Measure(measure)
    greedy = greedy_sequence(graph, measure)
    upper = greedy.achieved_width

    search = _ExactSearch(graph, measure, node_budget)
    lower = search.value(tuple(1 << vertex for vertex in graph.vertices))

    try:
        for bound in range(lower, upper):
            path = search.solve(bound)
            if path is not None:
                sequence = _sequence_from_masks(graph.n, path)
                return _report(
                    graph, sequence, measure, nodes_explored=search.nodes_explored, exact=True, lower_bound=bound
                )
            lower = bound + 1
            LOGGER.debug(f'no {measure.value} sequence of width {bound}, {search.nodes_explored} nodes explored')
    except _BudgetExhausted:
        LOGGER.warning(
            f'exact {measure.value} search stopped after {node_budget} nodes, width in [{lower}, {upper}]'
        )
        return replace(greedy, nodes_explored=search.nodes_explored, exact=False, lower_bound=lower)

    return replace(greedy, nodes_explored=search.nodes_explored, exact=True, lower_bound=upper)


def any_pair(total_graph: Mapping[int, int], u: int, v: int) -> bool:  # pylint: disable=unused-argument
    """Admit every pair."""
    return True


def twins_or_adjacent(total_graph: Mapping[int, int], u: int, v: int) -> bool:
    """Admit adjacent pairs and false twins of the total graph.

    Both contractions keep planar graphs planar: contracting an edge gives a minor and contracting false twins amounts
    to deleting one of them.
    """
    return bool(total_graph[u] >> v & 1) or total_graph[u] == total_graph[v]


PAIR_PREDICATES: dict[str, PairPredicate] = {
    'any-pair': any_pair,
    'twins-or-adjacent': twins_or_adjacent,
}


def _resolve_predicate(predicate: PairPredicate | str) -> PairPredicate:
    if callable(predicate):
        return predicate
    try:
        return PAIR_PREDICATES[predicate]
    except KeyError as exception:
        raise InvalidInputError(
            f'unknown pair predicate `{predicate}`, valid ones are {list(PAIR_PREDICATES)}'
        ) from exception


def contractible_sequence(
    graph: Graph, bound: int, predicate: PairPredicate | str = 'twins-or-adjacent'
) -> BuildReport:
    """Build a full sequence by contracting, in the total graph, admissible pairs of merged degree at most `bound`.

    The pair of smallest merged degree is chosen, ties broken lexicographically. The returned sequence has oriented
    width at most `bound`.

    :raises ContractionStuckError: when no admissible pair has merged degree at most `bound`
    """
    _check_graph(graph)
    predicate = _resolve_predicate(predicate)
    n = graph.n
    total = {vertex: graph.neighbors(vertex) for vertex in graph.vertices}
    steps = []

    for step in range(1, n):
        best = None
        for u, v in combinations(sorted(total), 2):
            if not predicate(total, u, v):
                continue
            degree = popcount((total[u] | total[v]) & ~(1 << u | 1 << v))
            if best is None or degree < best[0]:
                best = (degree, u, v)

        if best is None or best[0] > bound:
            raise ContractionStuckError(step, None if best is None else best[0], bound)

        _, u, v = best
        pair = 1 << u | 1 << v
        new_id = n + step
        merged = (total.pop(u) | total.pop(v)) & ~pair
        for vertex, mask in total.items():
            if mask & pair:
                total[vertex] = mask & ~pair | 1 << new_id
        total[new_id] = merged
        steps.append((u, v))

    return _report(graph, ContractionSequence(n, steps), Measure.ORIENTED)


def partial_sequence_to_degree(graph: Graph, bound: int, max_degree: int) -> BuildReport:
    """Contract greedily, keeping every red degree at most `bound`, until the total graph has degree `max_degree`.

    Among the admissible pairs the one minimising the red degree of the merged vertex, then its total degree, is
    contracted. The report tells whether the run reached the target or ran out of admissible pairs.
    """
    _check_graph(graph)
    n = graph.n
    trigraph = from_graph(graph)
    steps = []

    while True:
        if max_total_degree(trigraph) <= max_degree:
            stop_reason = STOP_TARGET_REACHED
            break

        new_id = n + len(steps) + 1
        best = None
        for u, v in combinations(trigraph.vertices, 2):
            candidate = contract(trigraph, u, v, new_id)
            if candidate.max_red_degree() > bound:
                continue
            score = (candidate.red_degree(new_id), total_degree(candidate, new_id))
            if best is None or score < best[0]:
                best = (score, u, v, candidate)

        if best is None:
            stop_reason = STOP_NO_ADMISSIBLE_PAIR
            break

        _, u, v, trigraph = best
        steps.append((u, v))

    LOGGER.info(f'partial sequence of {len(steps)} steps stopped: {stop_reason}')
    return _report(graph, ContractionSequence(n, steps), Measure.DEGREE, stop_reason=stop_reason)
