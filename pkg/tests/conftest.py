# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""Initialise a text database and profile for pytest."""
import os

import pytest

pytest_plugins = ['aiida.tools.pytest_fixtures']  # pylint: disable=invalid-name

#: Edges of the seven vertex graph used throughout the tests, whose chromatic number is 4.
FIGURE_EDGES = (
    (1, 2), (1, 4), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)
)
#: A full sequence of the graph above, of oriented width 2, degree width 2, component width 3 and total width 5.
FIGURE_STEPS = ((5, 6), (1, 4), (2, 8), (9, 7), (3, 10), (11, 12))


@pytest.fixture(scope='session')
def filepath_tests():
    """Return the absolute filepath of the `tests` folder.

    .. warning:: if this file moves with respect to the `tests` folder, the implementation should change.

    :return: absolute filepath of `tests` folder which is the basepath for all test resources.
    """
    return os.path.dirname(os.path.abspath(__file__))


@pytest.fixture
def filepath_fixtures(filepath_tests):
    """Return the absolute filepath to the directory containing the file `fixtures`."""
    return os.path.join(filepath_tests, 'fixtures')


@pytest.fixture
def generate_graph():
    """Return a :class:`~aiida_twinwidth.core.trigraph.Graph`."""

    def _generate_graph(graph_id='figure'):
        """Return a :class:`~aiida_twinwidth.core.trigraph.Graph`."""
        from aiida_twinwidth.core.trigraph import Graph

        if graph_id == 'figure':
            return Graph(7, FIGURE_EDGES)
        if graph_id == 'path':
            return Graph(4, [(1, 2), (2, 3), (3, 4)])
        if graph_id == 'triangle':
            return Graph(3, [(1, 2), (1, 3), (2, 3)])
        if graph_id == 'star':
            return Graph(4, [(1, 2), (1, 3), (1, 4)])
        if graph_id == 'edgeless':
            return Graph(3)
        if graph_id == 'single':
            return Graph(1)
        raise KeyError(f"Unknown graph_id='{graph_id}'")

    return _generate_graph


@pytest.fixture
def generate_sequence():
    """Return a :class:`~aiida_twinwidth.core.trigraph.ContractionSequence`."""

    def _generate_sequence(sequence_id='figure'):
        """Return a :class:`~aiida_twinwidth.core.trigraph.ContractionSequence`."""
        from aiida_twinwidth.core.trigraph import ContractionSequence

        if sequence_id == 'figure':
            return ContractionSequence(7, FIGURE_STEPS)
        if sequence_id == 'path':
            return ContractionSequence(4, [(1, 2), (5, 3), (6, 4)])
        if sequence_id == 'triangle':
            return ContractionSequence(3, [(1, 2), (4, 3)])
        raise KeyError(f"Unknown sequence_id='{sequence_id}'")

    return _generate_sequence


@pytest.fixture
def generate_random_graph():
    """Return a random :class:`~aiida_twinwidth.core.trigraph.Graph` of the `gnp` family."""

    def _generate_random_graph(seed, max_vertices=6, min_vertices=1):
        """Return a random graph whose number of vertices and edge probability are drawn from `seed`."""
        import numpy as np

        from aiida_twinwidth.core.generators import generate

        rng = np.random.default_rng(seed)
        num_vertices = int(rng.integers(min_vertices, max_vertices + 1))
        return generate('gnp', {'n': num_vertices, 'p': float(rng.random())}, seed=seed)

    return _generate_random_graph


@pytest.fixture
def generate_random_sequence():
    """Return a random full :class:`~aiida_twinwidth.core.trigraph.ContractionSequence`."""

    def _generate_random_sequence(num_vertices, seed):
        """Return a full sequence contracting two live parts drawn uniformly at every step."""
        import numpy as np

        from aiida_twinwidth.core.trigraph import ContractionSequence

        rng = np.random.default_rng(seed)
        alive = list(range(1, num_vertices + 1))
        steps = []
        for step in range(1, num_vertices):
            u = alive.pop(int(rng.integers(len(alive))))
            v = alive.pop(int(rng.integers(len(alive))))
            steps.append((u, v))
            alive.append(num_vertices + step)
        return ContractionSequence(num_vertices, steps)

    return _generate_random_sequence


@pytest.fixture
def generate_graph_data(generate_graph):
    """Return a `GraphData`."""

    def _generate_graph_data(graph_id='figure'):
        """Return a `GraphData`."""
        from aiida_twinwidth.data import GraphData

        return GraphData(graph=generate_graph(graph_id))

    return _generate_graph_data


@pytest.fixture
def generate_sequence_data(generate_sequence):
    """Return a `ContractionSequenceData`."""

    def _generate_sequence_data(sequence_id='figure'):
        """Return a `ContractionSequenceData`."""
        from aiida_twinwidth.data import ContractionSequenceData

        return ContractionSequenceData(sequence=generate_sequence(sequence_id))

    return _generate_sequence_data


@pytest.fixture
def write_file(tmp_path):
    """Write a text file in a temporary folder and return its path."""

    def _write_file(text, filename='input.txt'):
        """Write a text file in a temporary folder and return its path."""
        filepath = tmp_path / filename
        filepath.write_text(text, encoding='utf-8')
        return str(filepath)

    return _write_file


@pytest.fixture
def run_cli():
    """Invoke the `aiida-twinwidth` command line and return the `click` result."""

    def _run_cli(*args):
        """Invoke the `aiida-twinwidth` command line and return the `click` result."""
        from click.testing import CliRunner

        from aiida_twinwidth.cli import cmd_root

        return CliRunner().invoke(cmd_root, [str(arg) for arg in args])

    return _run_cli
