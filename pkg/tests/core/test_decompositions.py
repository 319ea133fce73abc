# -*- coding: utf-8 -*-
"""Tests for the :mod:`aiida_twinwidth.core.decompositions` module."""
import math

import numpy as np
import pytest

from aiida_twinwidth.core.builders import greedy_sequence
from aiida_twinwidth.core.decompositions import (
    BranchDecomposition,
    bd_boolean_width,
    bd_to_sequence,
    cut_profile,
    linear_bd_to_sequence,
    sequence_to_bd,
    sequence_to_linear_bd,
)
from aiida_twinwidth.core.generators import generate
from aiida_twinwidth.core.trigraph import ContractionSequence, Graph
from aiida_twinwidth.core.widths import Measure, sequence_width, verify_d_sequence
from aiida_twinwidth.exceptions import DecompositionWidthExceededError, InvalidInputError


def test_from_order():
    """Test the caterpillar built from a vertex order."""
    decomposition = BranchDecomposition.from_order([1, 2, 3])

    assert decomposition.parents == {1: 4, 2: 4, 4: 5, 3: 5, 5: 0}
    assert decomposition.root == 5
    assert decomposition.n == 3
    assert decomposition.is_linear()
    assert decomposition.children[5] == [3, 4]


def test_balanced():
    """Test that a balanced decomposition of eight vertices is not linear."""
    decomposition = BranchDecomposition.balanced(list(range(1, 9)))

    assert decomposition.n == 8
    assert not decomposition.is_linear()
    assert decomposition.leaf_masks()[decomposition.root] == sum(1 << vertex for vertex in range(1, 9))


def test_random():
    """Test that random decompositions are reproducible for a given seed."""
    assert BranchDecomposition.random(9, seed=5) == BranchDecomposition.random(9, seed=5)
    assert BranchDecomposition.random(9, seed=5).n == 9


@pytest.mark.parametrize(
    'parents, leaves, message', (
        ({1: 3, 2: 3, 3: 0, 4: 0}, {1: 1, 2: 2, 4: 3}, 'exactly one root'),
        ({1: 3, 2: 3, 3: 5, 4: 0}, {1: 1, 2: 2, 4: 3}, 'unknown parent'),
        ({1: 2, 2: 0}, {1: 1}, 'at least two children'),
        ({1: 3, 2: 3, 3: 0}, {1: 1, 2: 3}, 'bijection'),
        ({1: 4, 2: 4, 3: 4, 4: 5, 6: 5, 5: 0}, {1: 1, 2: 2, 3: 3, 6: 4}, 'exactly two children'),
    )
)
def test_decomposition_invalid(parents, leaves, message):
    """Test the validation of the `BranchDecomposition` constructor."""
    with pytest.raises(InvalidInputError) as exception:
        BranchDecomposition(parents, leaves)

    assert message in str(exception.value)


def test_cut_profile(generate_graph):
    """Test the profile of the cut of the path 1-2-3-4 between {1, 2} and {3, 4}."""
    profile = cut_profile(generate_graph('path'), {1, 2})

    assert profile.side == frozenset({1, 2})
    assert profile.other == frozenset({3, 4})
    assert profile.distinct_neighborhoods == 2
    assert profile.union_closure_size == 2
    assert profile.exact
    assert profile.boolean_width == 1.0
    assert profile.lower <= profile.boolean_width <= profile.upper

    with pytest.raises(InvalidInputError):
        cut_profile(generate_graph('path'), {1, 2, 3, 4})


def test_cut_profile_cap():
    """Test that an exceeded union closure cap only brackets the boolean-width."""
    biclique = generate('biclique', {'a': 5, 'b': 5})
    matching = Graph(10, [(vertex, vertex + 5) for vertex in range(1, 6)])

    assert cut_profile(biclique, {1, 2, 3, 4, 5}).union_closure_size == 2
    assert cut_profile(matching, {1, 2, 3, 4, 5}).union_closure_size == 32

    profile = cut_profile(matching, {1, 2, 3, 4, 5}, cap=4)
    assert not profile.exact
    assert profile.boolean_width is None
    assert profile.upper == 5.0
    assert profile.lower == 3.0


def test_bd_boolean_width(generate_graph):
    """Test the boolean-width of the caterpillar of the path."""
    graph = generate_graph('path')
    width = bd_boolean_width(graph, BranchDecomposition.from_order([1, 2, 3, 4]))

    assert width.exact
    assert width.value == 1.0
    assert width.closure_size == 2
    assert width.at_most(1)
    assert not width.at_most(0)

    assert bd_boolean_width(generate_graph('edgeless'), BranchDecomposition.from_order([1, 2, 3])).value == 0.0

    with pytest.raises(InvalidInputError):
        bd_boolean_width(graph, BranchDecomposition.from_order([1, 2, 3]))


def test_bd_to_sequence_clique():
    """Test that any decomposition of a clique, of boolean-width 1, gives a sequence of component width at most 4."""
    graph = generate('clique', {'n': 8})

    for decomposition in (BranchDecomposition.balanced(list(range(1, 9))), BranchDecomposition.random(8, seed=1)):
        sequence = bd_to_sequence(graph, decomposition, 1)
        assert sequence.is_full
        assert verify_d_sequence(graph, sequence, 4, Measure.COMPONENT) is None


@pytest.mark.parametrize('kind, params', (('path', {'n': 8}), ('cycle', {'n': 8}), ('grid', {'rows': 2, 'cols': 4})))
def test_bd_to_sequence(kind, params):
    """Test that converting a decomposition of boolean-width `d` gives component width at most `2^(d + 1)`."""
    graph = generate(kind, params)
    decomposition = BranchDecomposition.from_order(list(graph.vertices))
    bound = math.ceil(bd_boolean_width(graph, decomposition).upper)

    sequence = bd_to_sequence(graph, decomposition, bound)
    assert sequence.is_full
    assert verify_d_sequence(graph, sequence, 2**(bound + 1), Measure.COMPONENT) is None


def test_bd_to_sequence_grid():
    """Test the conversion of a balanced decomposition of the 4x4 grid."""
    graph = generate('grid', {'rows': 4, 'cols': 4})
    decomposition = BranchDecomposition.balanced(list(graph.vertices))
    bound = math.ceil(bd_boolean_width(graph, decomposition).upper)

    sequence = bd_to_sequence(graph, decomposition, bound)
    assert verify_d_sequence(graph, sequence, 2**(bound + 1), Measure.COMPONENT) is None


def test_bd_to_sequence_too_wide(generate_graph):
    """Test that a decomposition wider than the bound is reported with the step."""
    with pytest.raises(DecompositionWidthExceededError) as exception:
        bd_to_sequence(generate_graph('path'), BranchDecomposition.from_order([1, 2, 3, 4]), 0)

    assert exception.value.step == 1


def test_linear_bd_to_sequence():
    """Test that a linear decomposition of linear boolean-width `d` gives a bounded total width."""
    graph = generate('path', {'n': 8})
    decomposition = BranchDecomposition.from_order(list(range(1, 9)))

    sequence = linear_bd_to_sequence(graph, decomposition, 1)
    assert sequence.is_full
    assert sequence_width(graph, sequence, Measure.TOTAL) <= 3 + math.comb(3, 2)

    with pytest.raises(InvalidInputError):
        linear_bd_to_sequence(graph, BranchDecomposition.balanced(list(range(1, 9))), 1)


def test_sequence_to_bd(generate_graph, generate_sequence):
    """Test that a sequence of component width `d` gives a decomposition of boolean-width at most `2^d`."""
    graph = generate_graph('figure')
    sequence = generate_sequence('figure')
    component_width = sequence_width(graph, sequence, Measure.COMPONENT)

    decomposition = sequence_to_bd(graph, sequence)
    assert decomposition.n == 7
    assert bd_boolean_width(graph, decomposition).at_most(2**component_width)


def test_sequence_to_bd_clique():
    """Test the decomposition of a twin sequence of a clique."""
    graph = generate('clique', {'n': 4})
    decomposition = sequence_to_bd(graph, ContractionSequence(4, [(1, 2), (5, 3), (6, 4)]))

    assert bd_boolean_width(graph, decomposition).value == 1.0


def test_sequence_to_bd_invalid(generate_graph, generate_sequence):
    """Test that partial sequences are refused."""
    with pytest.raises(InvalidInputError):
        sequence_to_bd(generate_graph('figure'), generate_sequence('figure').prefix(3))

    with pytest.raises(InvalidInputError):
        sequence_to_linear_bd(generate_graph('figure'), generate_sequence('figure').prefix(3))


def test_sequence_to_linear_bd(generate_graph, generate_sequence):
    """Test that a sequence of total width `d` gives a linear decomposition of boolean-width at most `2^d`."""
    graph = generate_graph('figure')
    sequence = generate_sequence('figure')

    decomposition = sequence_to_linear_bd(graph, sequence)
    assert decomposition.is_linear()
    assert bd_boolean_width(graph, decomposition).at_most(2**sequence_width(graph, sequence, Measure.TOTAL))


def test_round_trip_bounds():
    """Test the bounds of both conversions composed, starting from a greedy component sequence."""
    graph = generate('gnp', {'n': 9, 'p': 0.4}, seed=11)
    sequence = greedy_sequence(graph, Measure.COMPONENT).sequence
    component_width = sequence_width(graph, sequence, Measure.COMPONENT)

    decomposition = sequence_to_bd(graph, sequence)
    width = bd_boolean_width(graph, decomposition)
    assert width.at_most(2**component_width)

    bound = math.ceil(width.upper)
    converted = bd_to_sequence(graph, decomposition, bound)
    assert verify_d_sequence(graph, converted, 2**(bound + 1), Measure.COMPONENT) is None


@pytest.mark.parametrize('seed', range(60))
def test_bd_to_sequence_random(generate_random_graph, seed):
    """Test the bound of the conversion of random decompositions of random graphs."""
    graph = generate_random_graph(seed, max_vertices=10, min_vertices=2)
    decomposition = BranchDecomposition.random(graph.n, seed=seed)
    bound = math.ceil(bd_boolean_width(graph, decomposition).upper)

    sequence = bd_to_sequence(graph, decomposition, bound)
    assert sequence.is_full
    assert verify_d_sequence(graph, sequence, 2**(bound + 1), Measure.COMPONENT) is None


@pytest.mark.parametrize('seed', range(60))
def test_linear_bd_to_sequence_random(generate_random_graph, seed):
    """Test the bound of the conversion of random linear decompositions of random graphs."""
    graph = generate_random_graph(seed, max_vertices=10, min_vertices=2)
    order = [int(vertex) for vertex in np.random.default_rng(seed).permutation(graph.n) + 1]
    decomposition = BranchDecomposition.from_order(order)
    bound = math.ceil(bd_boolean_width(graph, decomposition).upper)
    parts = 2**bound + 1

    sequence = linear_bd_to_sequence(graph, decomposition, bound)
    assert sequence.is_full
    assert verify_d_sequence(graph, sequence, parts + math.comb(parts, 2), Measure.TOTAL) is None


@pytest.mark.parametrize('seed', range(60))
def test_sequence_to_bd_random(generate_random_graph, generate_random_sequence, seed):
    """Test the bounds of the conversions of greedy and random sequences into decompositions."""
    graph = generate_random_graph(seed, max_vertices=10, min_vertices=2)

    for sequence in (greedy_sequence(graph, Measure.COMPONENT).sequence, generate_random_sequence(graph.n, seed)):
        decomposition = sequence_to_bd(graph, sequence)
        assert decomposition.n == graph.n
        assert bd_boolean_width(graph, decomposition).at_most(2**sequence_width(graph, sequence, Measure.COMPONENT))

        decomposition = sequence_to_linear_bd(graph, sequence)
        assert decomposition.is_linear()
        assert bd_boolean_width(graph, decomposition).at_most(2**sequence_width(graph, sequence, Measure.TOTAL))
