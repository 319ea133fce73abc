# -*- coding: utf-8 -*-
"""Deciding q-colorability by dynamic programming along a contraction sequence of bounded component width.

For every red component the program keeps the complete set of its profiles: the maps from the parts of the component
to the nonempty sets of colours that some proper colouring of the underlying vertices uses on each part. Colour sets
are bit masks of width `q`.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product

from aiida.common.log import AIIDA_LOGGER

from aiida_twinwidth.core.bitsets import iter_bits
from aiida_twinwidth.core.trigraph import ContractionSequence, Graph, LoopConvention, Partition, iter_sequence
from aiida_twinwidth.core.trigraph import red_components as get_red_components
from aiida_twinwidth.core.widths import Measure, verify_d_sequence
from aiida_twinwidth.exceptions import CapExceededError, InternalCheckError, InvalidInputError, SequenceWidthError
from aiida_twinwidth.utils.defaults import ORACLE_MAX_COLORS, ORACLE_MAX_VERTICES

__all__ = ('ColorProfile', 'ColoringProgram', 'q_coloring', 'q_coloring_extract', 'chromatic_oracle')

LOGGER = AIIDA_LOGGER.getChild('twinwidth')

#: Sorted pairs `(part id, colour mask)`.
Assignment = tuple[tuple[int, int], ...]
#: Sorted pairs `(vertex, colour)` with colours in `1..q`.
Witness = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ColorProfile:
    """A realisable colouring profile of a red component."""

    component: frozenset[int]
    assignment: Assignment
    witness: Witness | None = None


class ColoringProgram:
    """The profile dynamic program for q-colorability over a full sequence of component width at most `bound`.

    :param keep_witnesses: store one realising colouring with every profile, needed to extract a colouring
    :param debug: check every inserted profile against its witness; implies `keep_witnesses`
    :raises SequenceWidthError: if the sequence has component width larger than `bound`
    """

    def __init__(
        self,
        graph: Graph,
        sequence: ContractionSequence,
        colors: int,
        bound: int,
        keep_witnesses: bool = False,
        debug: bool = False,
    ):
        if colors < 0:
            raise InvalidInputError(f'the number of colours must be non negative, got `{colors}`')
        if not sequence.is_full:
            raise InvalidInputError('the dynamic program needs a full sequence')

        violation = verify_d_sequence(graph, sequence, bound, Measure.COMPONENT)
        if violation is not None:
            raise SequenceWidthError(violation)

        self.graph = graph
        self.sequence = sequence
        self.colors = colors
        self.bound = bound
        self.keep_witnesses = keep_witnesses or debug
        self.debug = debug
        self.combination_counts = []
        self.profiles: dict[frozenset[int], dict[Assignment, Witness | None]] = {}
        self._result = None

    @property
    def combination_limit(self) -> int:
        """Return the maximum number of profile combinations a single contraction may examine."""
        return (2**self.colors - 1)**(self.bound + 1)

    def _initial_profiles(self):
        self.profiles = {}
        for vertex in self.graph.vertices:
            self.profiles[frozenset({vertex})] = {
                ((vertex, 1 << color),): ((vertex, color + 1),) if self.keep_witnesses else None
                for color in range(self.colors)
            }

    def steps(self) -> Iterator[tuple[int, Partition]]:
        """Run the program, yielding the step and the partition after the initialisation and every contraction.

        The iteration stops early when some component has no profile left.
        """
        states = iter_sequence(self.graph, self.sequence, LoopConvention.WITH_LOOPS)
        _, trigraph, partition = next(states)
        self._initial_profiles()
        self.combination_counts = []
        yield 0, partition

        if any(not profiles for profiles in self.profiles.values()):
            self._result = False
            return

        for step, next_trigraph, next_partition in states:
            u, v, new_id = step_parts = (*self.sequence.steps[step - 1], self.sequence.new_id(step))
            component = next(component for component in get_red_components(next_trigraph) if new_id in component)
            touched = ({u, v} | component) - {new_id}
            fusing = sorted((key for key in self.profiles if key & touched), key=min)

            owner = {part: index for index, key in enumerate(fusing) for part in key}
            crossing = [(x, y)
                        for x in owner
                        for y in iter_bits(trigraph.black_neighbors(x))
                        if x < y and y in owner and owner[x] != owner[y]]

            fused, count = self._combine(fusing, crossing, step_parts, component, next_partition)
            self.combination_counts.append(count)

            if count > self.combination_limit:
                raise InternalCheckError(f'step {step}: {count} combinations exceed the limit {self.combination_limit}')

            for key in fusing:
                del self.profiles[key]
            self.profiles[frozenset(component)] = fused

            LOGGER.debug(f'step {step}: {len(fusing)} components fused, {count} combinations, {len(fused)} profiles')
            trigraph = next_trigraph
            yield step, next_partition

            if not fused:
                self._result = False
                return

        self._result = all(self.profiles.values())

    def _combine(self, fusing, crossing, step_parts, component, partition):
        u, v, new_id = step_parts
        fused = {}
        count = 0

        for combination in product(*(list(self.profiles[key].items()) for key in fusing)):
            count += 1
            colors = {}
            for assignment, _ in combination:
                colors.update(assignment)

            if any(colors[x] & colors[y] for x, y in crossing):
                continue

            colors[new_id] = colors.pop(u) | colors.pop(v)
            assignment = tuple(sorted(colors.items()))
            if assignment in fused:
                continue

            witness = None
            if self.keep_witnesses:
                witness = tuple(sorted(pair for _, part_witness in combination for pair in part_witness))
            if self.debug:
                self._check_profile(component, assignment, witness, partition)
            fused[assignment] = witness

        return fused, count

    def _check_profile(self, component, assignment, witness, partition: Partition):
        """Check that the witness properly colours the component and uses exactly the assigned colour sets."""
        coloring = dict(witness)
        mask = 0
        for part in component:
            mask |= partition.mask(part)

        if set(coloring) != set(iter_bits(mask)):
            raise InternalCheckError(f'the witness of {assignment} does not cover the component {sorted(component)}')
        for vertex in coloring:
            for neighbour in iter_bits(self.graph.neighbors(vertex) & mask):
                if coloring[vertex] == coloring[neighbour]:
                    raise InternalCheckError(f'the witness of {assignment} is not a proper colouring')
        for part, colors in assignment:
            used = 0
            for vertex in iter_bits(partition.mask(part)):
                used |= 1 << (coloring[vertex] - 1)
            if used != colors:
                raise InternalCheckError(f'the witness of {assignment} does not realise the colours of part `{part}`')

    def run(self) -> bool:
        """Run the program to completion and return whether the graph is q-colourable."""
        for _ in self.steps():
            pass
        return self._result

    def component_profiles(self) -> list[ColorProfile]:
        """Return the profiles currently stored, component by component."""
        return [
            ColorProfile(component=key, assignment=assignment, witness=witness)
            for key, profiles in sorted(self.profiles.items(), key=lambda item: min(item[0]))
            for assignment, witness in profiles.items()
        ]

    def coloring(self) -> dict[int, int] | None:
        """Return a proper colouring `vertex -> colour in 1..q` after a successful run, `None` otherwise.

        :raises InternalCheckError: if the assembled colouring is not proper
        """
        if not self._result:
            return None
        if not self.keep_witnesses:
            raise InvalidInputError('colourings can only be extracted when witnesses are kept')
        if self.graph.n == 0:
            return {}

        ((_, profiles),) = self.profiles.items()
        coloring = dict(next(iter(profiles.values())))

        for u, v in self.graph.edges:
            if coloring[u] == coloring[v]:
                raise InternalCheckError(f'the extracted colouring gives the same colour to adjacent `{u}` and `{v}`')
        allowed = set(range(1, self.colors + 1))
        if sorted(coloring) != list(self.graph.vertices) or not set(coloring.values()) <= allowed:
            raise InternalCheckError('the extracted colouring does not give an allowed colour to every vertex')

        return coloring


def q_coloring(graph: Graph, sequence: ContractionSequence, colors: int, bound: int) -> bool:
    """Return whether the graph is `colors`-colourable, using a full sequence of component width at most `bound`.

    :raises SequenceWidthError: if the component width of the sequence exceeds `bound`
    """
    return ColoringProgram(graph, sequence, colors, bound).run()


def q_coloring_extract(graph: Graph, sequence: ContractionSequence, colors: int, bound: int) -> dict[int, int] | None:
    """Return a proper colouring with at most `colors` colours, or `None` when the graph is not colourable."""
    program = ColoringProgram(graph, sequence, colors, bound, keep_witnesses=True)
    program.run()
    return program.coloring()


def chromatic_oracle(graph: Graph, colors: int) -> bool:
    """Decide `colors`-colourability by backtracking, a new colour being at most one more than those used so far.

    :raises CapExceededError: beyond `ORACLE_MAX_VERTICES` vertices or `ORACLE_MAX_COLORS` colours
    """
    if graph.n > ORACLE_MAX_VERTICES or colors > ORACLE_MAX_COLORS:
        raise CapExceededError(
            f'the chromatic oracle accepts at most {ORACLE_MAX_VERTICES} vertices and {ORACLE_MAX_COLORS} colours'
        )
    if colors < 0:
        raise InvalidInputError(f'the number of colours must be non negative, got `{colors}`')

    n = graph.n
    assigned = [0] * (n + 1)

    def extend(vertex: int, used: int) -> bool:
        if vertex > n:
            return True
        forbidden = {assigned[neighbour] for neighbour in iter_bits(graph.neighbors(vertex)) if neighbour < vertex}
        for color in range(1, min(used + 1, colors) + 1):
            if color in forbidden:
                continue
            assigned[vertex] = color
            if extend(vertex + 1, max(used, color)):
                return True
        assigned[vertex] = 0
        return False

    return extend(1, 0)
