# -*- coding: utf-8 -*-
"""Tests for the :mod:`aiida_twinwidth.core.builders` module."""
import numpy as np
import pytest

from aiida_twinwidth.core import builders
from aiida_twinwidth.core.generators import generate
from aiida_twinwidth.core.trigraph import Graph, apply_sequence, max_total_degree
from aiida_twinwidth.core.widths import Measure, sequence_width, verify_d_sequence
from aiida_twinwidth.exceptions import ContractionStuckError, InvalidInputError

#: Planar graphs: the icosahedron, square grids and random Delaunay triangulations.
PLANAR_CORPUS = (
    [('icosahedron', {}, None)] + [('grid', {'rows': k, 'cols': k}, None) for k in range(2, 11)] +
    [('triangulation', {'n': n}, seed) for n in (8, 20, 50) for seed in range(3)]
)


@pytest.mark.parametrize('measure', list(Measure))
def test_greedy_sequence(generate_graph, measure):
    """Test that the greedy builder returns a full sequence whose reported width is its actual width."""
    graph = generate_graph('figure')
    report = builders.greedy_sequence(graph, measure)

    assert report.complete
    assert report.sequence.is_full
    assert report.measure is measure
    assert not report.exact
    assert report.achieved_width == sequence_width(graph, report.sequence, measure)


def test_greedy_sequence_empty():
    """Test that the builders refuse the empty graph."""
    with pytest.raises(InvalidInputError):
        builders.greedy_sequence(Graph(0), Measure.DEGREE)


@pytest.mark.parametrize('graph_id, width', (('path', 1), ('triangle', 0), ('edgeless', 0), ('single', 0)))
def test_exact_width(generate_graph, graph_id, width):
    """Test the exact degree width of small graphs."""
    report = builders.exact_width(generate_graph(graph_id), 'degree')

    assert report.exact
    assert report.achieved_width == width
    assert report.lower_bound == width
    assert report.sequence.is_full


@pytest.mark.parametrize(
    'kind, num_vertices, width',
    [('clique', n, 0) for n in range(1, 9)] + [('path', n, 1) for n in range(4, 9)],
)
def test_exact_width_families(kind, num_vertices, width):
    """Test the exact degree width of cliques and paths."""
    report = builders.exact_width(generate(kind, {'n': num_vertices}), Measure.DEGREE)

    assert report.exact
    assert report.achieved_width == width
    assert report.sequence.is_full


@pytest.mark.parametrize('seed', range(200))
def test_exact_width_random(generate_random_graph, seed):
    """Test that the exact width bounds the greedy width and does not depend on the vertex labels."""
    graph = generate_random_graph(seed, max_vertices=7)
    report = builders.exact_width(graph, Measure.DEGREE)

    assert report.exact
    assert report.achieved_width <= builders.greedy_sequence(graph, Measure.DEGREE).achieved_width
    assert report.achieved_width == sequence_width(graph, report.sequence, Measure.DEGREE)

    permutation = np.random.default_rng(seed).permutation(graph.n) + 1
    relabelled = graph.relabel({vertex: int(image) for vertex, image in zip(graph.vertices, permutation)})

    assert builders.exact_width(relabelled, Measure.DEGREE).achieved_width == report.achieved_width


def test_exact_width_figure(generate_graph):
    """Test that the exact search proves the width of the figure graph and does not exceed the known sequence."""
    graph = generate_graph('figure')
    report = builders.exact_width(graph, Measure.DEGREE)

    assert report.exact
    assert report.achieved_width == report.lower_bound <= 2
    assert verify_d_sequence(graph, report.sequence, report.achieved_width, Measure.DEGREE) is None


@pytest.mark.parametrize('seed', range(10))
def test_exact_width_cograph(seed):
    """Test that cographs have degree width zero."""
    report = builders.exact_width(generate('cograph', 'n=8', seed=seed), Measure.DEGREE)

    assert report.exact
    assert report.achieved_width == 0


def test_exact_width_budget():
    """Test that an exhausted budget returns the greedy sequence, flagged inexact, with a proven lower bound."""
    graph = generate('petersen')
    report = builders.exact_width(graph, Measure.DEGREE, node_budget=1)

    assert not report.exact
    assert report.lower_bound == 1
    assert report.sequence.is_full
    assert report.achieved_width >= 4
    assert report.nodes_explored == 2


def test_build_report_as_dict(generate_graph):
    """Test the serializable summary of a build report."""
    report = builders.exact_width(generate_graph('path'), Measure.DEGREE)

    assert report.as_dict() == {
        'measure': 'degree',
        'widths': {
            'degree': 1
        },
        'nodes_explored': report.nodes_explored,
        'complete': True,
        'exact': True,
        'lower_bound': 1,
        'stop_reason': None,
    }


def test_contractible_sequence(generate_graph):
    """Test the contractible builder on the path, whose contractions keep the merged degree at most one."""
    graph = generate_graph('path')
    report = builders.contractible_sequence(graph, 1)

    assert report.sequence.is_full
    assert report.measure is Measure.ORIENTED
    assert report.achieved_width <= 1


def test_contractible_sequence_any_pair(generate_graph):
    """Test the contractible builder with all pairs admissible."""
    report = builders.contractible_sequence(generate_graph('edgeless'), 0, 'any-pair')

    assert report.sequence.steps == ((1, 2), (3, 4))
    assert report.achieved_width == 0


@pytest.mark.parametrize('kind, params, seed', PLANAR_CORPUS)
def test_contractible_sequence_planar(kind, params, seed):
    """Test that planar graphs are contracted with planarity preserving pairs of merged degree at most 9."""
    graph = generate(kind, params, seed=seed)
    report = builders.contractible_sequence(graph, 9)

    assert report.sequence.is_full
    assert verify_d_sequence(graph, report.sequence, 9, Measure.ORIENTED) is None


def test_contractible_sequence_stuck(generate_graph):
    """Test that the builder reports the step and the smallest merged degree when stuck."""
    with pytest.raises(ContractionStuckError) as exception:
        builders.contractible_sequence(generate_graph('path'), 0)

    assert exception.value.step == 1
    assert exception.value.min_degree == 1
    assert exception.value.bound == 0
    assert 'stuck at step 1' in str(exception.value)


def test_contractible_sequence_predicate():
    """Test custom and unknown pair predicates."""
    report = builders.contractible_sequence(Graph(3), 0, lambda total, u, v: u + v > 3)

    assert report.sequence.steps == ((1, 3), (2, 4))

    with pytest.raises(InvalidInputError):
        builders.contractible_sequence(Graph(3), 0, 'unknown')


def test_twins_or_adjacent():
    """Test the planarity preserving pair predicate on neighbourhood masks."""
    total = {1: 1 << 2, 2: 1 << 1 | 1 << 3, 3: 1 << 2, 4: 0}

    assert builders.twins_or_adjacent(total, 1, 2)
    assert builders.twins_or_adjacent(total, 1, 3)
    assert not builders.twins_or_adjacent(total, 1, 4)
    assert builders.any_pair(total, 1, 4)


def test_partial_sequence_blowup():
    """Test that the partial builder contracts the modules of a blown-up cycle without creating red edges."""
    graph = generate('blowup', {'base': 'cycle', 'n': '5', 'size': '4'})
    report = builders.partial_sequence_to_degree(graph, 0, 2)

    assert graph.n == 20
    assert len(report.sequence) == 15
    assert report.stop_reason == builders.STOP_TARGET_REACHED
    assert not report.complete

    trigraph, _ = apply_sequence(graph, report.sequence)
    assert max_total_degree(trigraph) == 2
    assert trigraph.max_red_degree() == 0


@pytest.mark.parametrize('n', (1, 2, 5))
def test_partial_sequence_clique(n):
    """Test that cliques are contracted down to a single vertex."""
    report = builders.partial_sequence_to_degree(generate('clique', {'n': n}), 0, 0)

    assert len(report.sequence) == n - 1
    assert report.stop_reason == builders.STOP_TARGET_REACHED


def test_partial_sequence_no_admissible_pair(generate_graph):
    """Test that the partial builder stops when every contraction exceeds the red degree bound."""
    report = builders.partial_sequence_to_degree(generate_graph('path'), 0, 0)

    assert len(report.sequence) == 0
    assert report.stop_reason == builders.STOP_NO_ADMISSIBLE_PAIR
