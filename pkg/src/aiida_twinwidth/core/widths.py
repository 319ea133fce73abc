# -*- coding: utf-8 -*-
"""The four width measures of a partition and of a contraction sequence."""
from __future__ import annotations

from dataclasses import dataclass
import enum

from aiida.common.log import AIIDA_LOGGER

from aiida_twinwidth.core.bitsets import popcount
from aiida_twinwidth.core.trigraph import (
    ContractionSequence,
    Graph,
    LoopConvention,
    Partition,
    Trigraph,
    directed_red,
    iter_sequence,
    quotient,
    red_components,
)
from aiida_twinwidth.exceptions import InvalidInputError

__all__ = (
    'Measure', 'StepWidths', 'Violation', 'measure_value', 'step_widths', 'sequence_width', 'sequence_widths',
    'verify_d_sequence'
)

LOGGER = AIIDA_LOGGER.getChild('twinwidth')


class Measure(str, enum.Enum):
    """The width measures, each bound to its loop convention."""

    ORIENTED = 'oriented'
    DEGREE = 'degree'
    COMPONENT = 'component'
    TOTAL = 'total'

    @property
    def convention(self) -> LoopConvention:
        """Return the loop convention under which the measure is computed."""
        if self in (Measure.ORIENTED, Measure.DEGREE):
            return LoopConvention.WITHOUT_LOOPS
        return LoopConvention.WITH_LOOPS


@dataclass(frozen=True)
class StepWidths:
    """The four widths of a single partition."""

    oriented: int
    degree: int
    component: int
    total: int

    def __getitem__(self, measure: Measure | str) -> int:
        return getattr(self, Measure(measure).value)


@dataclass(frozen=True)
class Violation:
    """The first step of a sequence whose width exceeds a bound.

    :param step: number of contractions performed when the bound is exceeded, 0 being the initial graph
    :param parts: the part ids realising the offending value
    :param value: the observed width
    """

    step: int
    parts: tuple[int, ...]
    value: int
    measure: Measure
    bound: int


def _oriented_value(graph: Graph, partition: Partition, convention: LoopConvention) -> tuple[int, tuple[int, ...]]:
    directed = directed_red(graph, partition, convention)
    degrees = dict.fromkeys(directed.vertices, 0)
    for tail, _ in directed.red_arcs:
        degrees[tail] += 1
    value = max(degrees.values(), default=0)
    return value, tuple(part for part, degree in degrees.items() if value and degree == value)


def _trigraph_value(trigraph: Trigraph, measure: Measure, with_loops: bool) -> tuple[int, tuple[int, ...]]:
    """Return the value of a non-oriented measure on a trigraph and the parts realising it."""
    loops = trigraph.loops if with_loops else frozenset()

    if measure is Measure.DEGREE:
        degrees = {
            vertex: popcount(trigraph.red_neighbors(vertex)) + (vertex in loops) for vertex in trigraph.vertices
        }
        value = max(degrees.values(), default=0)
        return value, tuple(vertex for vertex, degree in degrees.items() if value and degree == value)

    if measure is Measure.COMPONENT:
        components = red_components(trigraph)
        if not components:
            return 0, ()
        largest = max(components, key=len)
        return len(largest), tuple(sorted(largest))

    value = len(trigraph.red_edges) + len(loops)
    touched = {vertex for edge in trigraph.red_edges for vertex in edge} | loops
    return value, tuple(sorted(touched))


def _evaluate(
    graph: Graph, partition: Partition, measure: Measure, convention: LoopConvention | None
) -> tuple[int, tuple[int, ...]]:
    measure = Measure(measure)
    convention = measure.convention if convention is None else LoopConvention(convention)

    if measure is Measure.ORIENTED:
        return _oriented_value(graph, partition, convention)

    trigraph = quotient(graph, partition, convention)
    return _trigraph_value(trigraph, measure, convention is LoopConvention.WITH_LOOPS)


def measure_value(
    graph: Graph, partition: Partition, measure: Measure | str, convention: LoopConvention | None = None
) -> int:
    """Return the width of a single partition under `measure`.

    :param convention: force a loop convention; by default the one bound to the measure is used
    """
    return _evaluate(graph, partition, measure, convention)[0]


def step_widths(graph: Graph, partition: Partition, convention: LoopConvention | None = None) -> StepWidths:
    """Return the four widths of a partition.

    By default every measure uses its own loop convention. Passing a `convention` computes all four under it, which is
    what makes the chain `oriented <= degree <= component <= total` hold literally under `with_loops`.
    """
    return StepWidths(**{measure.value: measure_value(graph, partition, measure, convention) for measure in Measure})


def _iter_values(graph: Graph, sequence: ContractionSequence, measure: Measure, convention: LoopConvention | None):
    """Yield `(step, value, parts)` for every state of the replay of `sequence`."""
    measure = Measure(measure)
    convention = measure.convention if convention is None else LoopConvention(convention)

    for step, trigraph, partition in iter_sequence(graph, sequence, convention):
        if measure is Measure.ORIENTED:
            value, parts = _oriented_value(graph, partition, convention)
        else:
            value, parts = _trigraph_value(trigraph, measure, convention is LoopConvention.WITH_LOOPS)
        yield step, value, parts


def sequence_width(
    graph: Graph,
    sequence: ContractionSequence,
    measure: Measure | str,
    convention: LoopConvention | None = None,
) -> int:
    """Return the maximum width under `measure` over all the partitions of the sequence, the initial one included.

    :raises InvalidContractionError: if the sequence cannot be replayed, with the step index
    """
    return max(value for _, value, _ in _iter_values(graph, sequence, measure, convention))


def sequence_widths(graph: Graph, sequence: ContractionSequence) -> dict[Measure, int]:
    """Return the width of the sequence under each of the four measures."""
    return {measure: sequence_width(graph, sequence, measure) for measure in Measure}


def verify_d_sequence(
    graph: Graph,
    sequence: ContractionSequence,
    bound: int,
    measure: Measure | str,
    convention: LoopConvention | None = None,
) -> Violation | None:
    """Check that every partition of the sequence has width at most `bound` under `measure`.

    :return: `None` when the sequence is a `bound`-sequence, otherwise the first violation
    :raises InvalidContractionError: if the sequence cannot be replayed; replay errors are never reported as violations
    """
    if bound < 0:
        raise InvalidInputError(f'the bound must be non negative, got `{bound}`')

    measure = Measure(measure)

    for step, value, parts in _iter_values(graph, sequence, measure, convention):
        if value > bound:
            LOGGER.debug(f'{measure.value} width {value} > {bound} at step {step} on parts {parts}')
            return Violation(step=step, parts=parts, value=value, measure=measure, bound=bound)

    return None
