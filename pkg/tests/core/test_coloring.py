# -*- coding: utf-8 -*-
"""Tests for the :mod:`aiida_twinwidth.core.coloring` module."""
import pytest

from aiida_twinwidth.core.builders import greedy_sequence
from aiida_twinwidth.core.coloring import (
    ColoringProgram,
    ColorProfile,
    chromatic_oracle,
    q_coloring,
    q_coloring_extract,
)
from aiida_twinwidth.core.generators import generate
from aiida_twinwidth.core.trigraph import ContractionSequence, Graph, Partition
from aiida_twinwidth.core.widths import Measure, sequence_width
from aiida_twinwidth.exceptions import CapExceededError, InternalCheckError, InvalidInputError, SequenceWidthError


def assert_proper_coloring(graph, coloring, colors):
    """Assert that `coloring` properly colours all the vertices of `graph` with colours in `1..colors`."""
    assert sorted(coloring) == list(graph.vertices)
    assert set(coloring.values()) <= set(range(1, colors + 1))
    for u, v in graph.edges:
        assert coloring[u] != coloring[v]


@pytest.mark.parametrize('colors, expected', ((3, False), (4, True)))
def test_q_coloring_figure(generate_graph, generate_sequence, colors, expected):
    """Test the dynamic program on the figure graph, whose chromatic number is 4."""
    assert q_coloring(generate_graph('figure'), generate_sequence('figure'), colors, 3) is expected


def test_q_coloring_extract(generate_graph, generate_sequence):
    """Test that the extracted colouring is proper and that none is returned below the chromatic number."""
    graph = generate_graph('figure')
    sequence = generate_sequence('figure')

    assert_proper_coloring(graph, q_coloring_extract(graph, sequence, 4, 3), 4)
    assert q_coloring_extract(graph, sequence, 3, 3) is None


def test_q_coloring_width_exceeded(generate_graph, generate_sequence):
    """Test that a sequence wider than the bound is refused with the violating step."""
    with pytest.raises(SequenceWidthError) as exception:
        q_coloring(generate_graph('figure'), generate_sequence('figure'), 4, 2)

    assert exception.value.violation.measure is Measure.COMPONENT
    assert exception.value.violation.value == 3


def test_q_coloring_invalid(generate_graph, generate_sequence):
    """Test that partial sequences and negative numbers of colours are refused."""
    with pytest.raises(InvalidInputError):
        q_coloring(generate_graph('figure'), generate_sequence('figure').prefix(2), 4, 3)

    with pytest.raises(InvalidInputError):
        q_coloring(generate_graph('figure'), generate_sequence('figure'), -1, 3)


@pytest.mark.parametrize('colors, expected', ((2, False), (3, True)))
def test_q_coloring_triangle(generate_graph, generate_sequence, colors, expected):
    """Test the dynamic program on the triangle."""
    assert q_coloring(generate_graph('triangle'), generate_sequence('triangle'), colors, 1) is expected


def test_q_coloring_trivial(generate_graph):
    """Test a single vertex without colours and an edgeless graph with a single colour."""
    assert q_coloring(generate_graph('single'), ContractionSequence(1), 0, 1) is False
    assert q_coloring_extract(generate_graph('single'), ContractionSequence(1), 1, 1) == {1: 1}
    assert q_coloring_extract(generate_graph('edgeless'), ContractionSequence(3, [(1, 2), (4, 3)]), 1, 1) == {
        1: 1,
        2: 1,
        3: 1
    }


def test_q_coloring_cycle():
    """Test that odd cycles need three colours."""
    graph = generate('cycle', {'n': 5})
    sequence = greedy_sequence(graph, Measure.COMPONENT).sequence
    bound = sequence_width(graph, sequence, Measure.COMPONENT)

    assert not q_coloring(graph, sequence, 2, bound)
    assert_proper_coloring(graph, q_coloring_extract(graph, sequence, 3, bound), 3)


@pytest.mark.parametrize('seed', range(100))
def test_q_coloring_matches_oracle(generate_random_graph, generate_random_sequence, seed):
    """Test that the dynamic program agrees with the brute-force oracle on random graphs and sequences."""
    graph = generate_random_graph(seed, max_vertices=10)
    if graph.n <= 6:
        sequence = generate_random_sequence(graph.n, seed)
    else:
        sequence = greedy_sequence(graph, Measure.COMPONENT).sequence
    bound = sequence_width(graph, sequence, Measure.COMPONENT)

    for colors in range(5):
        program = ColoringProgram(graph, sequence, colors, bound, debug=True)
        colorable = program.run()

        assert colorable is chromatic_oracle(graph, colors)
        assert all(count <= program.combination_limit for count in program.combination_counts)
        if colorable:
            assert_proper_coloring(graph, program.coloring(), colors)
        else:
            assert program.coloring() is None



def test_coloring_program_profiles(generate_graph, generate_sequence):
    """Test the profiles and the combination counts of the triangle with three colours."""
    program = ColoringProgram(generate_graph('triangle'), generate_sequence('triangle'), 3, 1)

    assert program.combination_limit == 49
    assert program.run()
    assert program.combination_counts == [9, 9]
    assert program.component_profiles() == [ColorProfile(component=frozenset({5}), assignment=((5, 7),))]

    with pytest.raises(InvalidInputError):
        program.coloring()


def test_coloring_program_debug(generate_graph, generate_sequence):
    """Test that the debug mode checks every profile against its witness."""
    graph = generate_graph('figure')
    program = ColoringProgram(graph, generate_sequence('figure'), 4, 3, debug=True)

    assert program.keep_witnesses
    assert program.run()
    assert len(program.combination_counts) == 6
    assert max(program.combination_counts) <= program.combination_limit
    assert_proper_coloring(graph, program.coloring(), 4)


def test_coloring_program_steps(generate_graph, generate_sequence):
    """Test that the program stops as soon as some component has no profile left."""
    program = ColoringProgram(generate_graph('triangle'), generate_sequence('triangle'), 1, 1)
    steps = [step for step, _ in program.steps()]

    assert steps == [0, 1]
    assert program.run() is False
    assert program.coloring() is None


def test_coloring_program_internal_checks(generate_graph, generate_sequence):  # pylint: disable=protected-access
    """Test that corrupted witnesses and profiles are reported as failed internal checks."""
    graph = generate_graph('triangle')
    program = ColoringProgram(graph, generate_sequence('triangle'), 3, 1, debug=True)

    with pytest.raises(InternalCheckError) as exception:
        program._check_profile({1, 2}, ((1, 1), (2, 1)), ((1, 1), (2, 1)), Partition.singletons(graph))

    assert 'is not a proper colouring' in str(exception.value)

    assert program.run()
    program.profiles = {frozenset({5}): {((5, 7),): ((1, 1), (2, 1), (3, 2))}}

    with pytest.raises(InternalCheckError) as exception:
        program.coloring()

    assert 'same colour to adjacent `1` and `2`' in str(exception.value)



def test_chromatic_oracle(generate_graph):
    """Test the brute-force oracle."""
    assert not chromatic_oracle(generate_graph('figure'), 3)
    assert chromatic_oracle(generate_graph('figure'), 4)
    assert chromatic_oracle(generate_graph('edgeless'), 1)
    assert not chromatic_oracle(generate_graph('single'), 0)
    assert chromatic_oracle(Graph(0), 0)


@pytest.mark.parametrize('graph, colors', ((Graph(13), 3), (Graph(3), 5)))
def test_chromatic_oracle_caps(graph, colors):
    """Test that the oracle refuses inputs beyond its caps."""
    with pytest.raises(CapExceededError):
        chromatic_oracle(graph, colors)
