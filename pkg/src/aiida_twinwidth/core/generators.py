# -*- coding: utf-8 -*-
"""Generators of the graph families used as test corpora and by the `gen` command."""
from __future__ import annotations

from collections.abc import Callable, Mapping

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from aiida_twinwidth.core.trigraph import Graph
from aiida_twinwidth.exceptions import InvalidInputError

__all__ = ('GENERATORS', 'generate', 'parse_params')


def parse_params(text: str | None) -> dict[str, str]:
    """Parse a `key=value,key=value` string into a dictionary of strings."""
    params = {}
    if not text:
        return params
    for item in text.split(','):
        key, sep, value = item.partition('=')
        if not sep or not key.strip():
            raise InvalidInputError(f'invalid generator parameter `{item}`, expected `key=value`')
        params[key.strip()] = value.strip()
    return params


def _int_param(params: Mapping, name: str, minimum: int = 0) -> int:
    try:
        value = params[name]
    except KeyError as exception:
        raise InvalidInputError(f'missing generator parameter `{name}`') from exception
    try:
        number = int(value)
    except (TypeError, ValueError) as exception:
        raise InvalidInputError(f'generator parameter `{name}` must be an integer, got `{value}`') from exception
    if number < minimum:
        raise InvalidInputError(f'generator parameter `{name}` must be at least {minimum}, got `{number}`')
    return number


def _float_param(params: Mapping, name: str) -> float:
    try:
        value = float(params[name])
    except KeyError as exception:
        raise InvalidInputError(f'missing generator parameter `{name}`') from exception
    except (TypeError, ValueError) as exception:
        raise InvalidInputError(f'generator parameter `{name}` must be a number, got `{params[name]}`') from exception
    if not 0.0 <= value <= 1.0:
        raise InvalidInputError(f'generator parameter `{name}` must lie in [0, 1], got `{value}`')
    return value


def _grid_diagonals(rows: int, cols: int) -> nx.Graph:
    graph = nx.grid_2d_graph(rows, cols)
    for i in range(rows - 1):
        for j in range(cols - 1):
            graph.add_edge((i, j), (i + 1, j + 1))
            graph.add_edge((i + 1, j), (i, j + 1))
    return graph


def _blowup(params: Mapping, seed: int | None) -> Graph:
    """Replace every vertex `v` of the base graph by a clique on `(v - 1) * size + 1 .. v * size`.

    Two cliques are completely joined when their vertices are adjacent in the base graph.
    """
    base_params = dict(params)
    base_kind = base_params.pop('base', None)
    if base_kind is None:
        raise InvalidInputError('missing generator parameter `base`')
    if base_kind == 'blowup':
        raise InvalidInputError('a blow-up cannot be the base of a blow-up')
    size = _int_param(base_params, 'size', minimum=1)
    del base_params['size']
    base = generate(base_kind, base_params, seed)

    def module(vertex):
        return range((vertex - 1) * size + 1, vertex * size + 1)

    edges = [(u, v) for vertex in base.vertices for u in module(vertex) for v in module(vertex) if u < v]
    edges.extend((x, y) for u, v in base.edges for x in module(u) for y in module(v))
    return Graph(base.n * size, edges)


def _cograph(n: int, seed: int | None) -> Graph:
    """Return a random cograph: a single vertex or the disjoint union or join of two smaller random cographs."""
    rng = np.random.default_rng(seed)

    def build(vertices: list[int]) -> list[tuple[int, int]]:
        if len(vertices) == 1:
            return []
        split = int(rng.integers(1, len(vertices)))
        left, right = vertices[:split], vertices[split:]
        edges = build(left) + build(right)
        if rng.random() < 0.5:
            edges.extend((u, v) for u in left for v in right)
        return edges

    if n == 0:
        return Graph(0)
    return Graph(n, build(list(range(1, n + 1))))


def _triangulation(n: int, seed: int | None) -> Graph:
    """Return the Delaunay triangulation of `n` uniformly random points of the unit square."""
    rng = np.random.default_rng(seed)
    triangulation = Delaunay(rng.random((n, 2)))
    edges = set()
    for simplex in triangulation.simplices:
        a, b, c = sorted(int(index) + 1 for index in simplex)
        edges.update({(a, b), (a, c), (b, c)})
    return Graph(n, sorted(edges))


GENERATORS: dict[str, tuple[tuple[str, ...], Callable[[Mapping, int | None], Graph]]] = {
    'path': (('n',), lambda p, s: Graph.from_networkx(nx.path_graph(_int_param(p, 'n')))),
    'cycle': (('n',), lambda p, s: Graph.from_networkx(nx.cycle_graph(_int_param(p, 'n', minimum=3)))),
    'clique': (('n',), lambda p, s: Graph.from_networkx(nx.complete_graph(_int_param(p, 'n')))),
    'biclique': (
        ('a', 'b'),
        lambda p, s: Graph.from_networkx(nx.complete_bipartite_graph(_int_param(p, 'a'), _int_param(p, 'b'))),
    ),
    'grid': (
        ('rows', 'cols'),
        lambda p, s: Graph.from_networkx(nx.grid_2d_graph(_int_param(p, 'rows', 1), _int_param(p, 'cols', 1))),
    ),
    'grid_diagonals': (
        ('rows', 'cols'),
        lambda p, s: Graph.from_networkx(_grid_diagonals(_int_param(p, 'rows', 1), _int_param(p, 'cols', 1))),
    ),
    'gnp': (
        ('n', 'p'),
        lambda p, s: Graph.from_networkx(nx.gnp_random_graph(_int_param(p, 'n'), _float_param(p, 'p'), seed=s)),
    ),
    'blowup': (None, _blowup),
    'cograph': (('n',), lambda p, s: _cograph(_int_param(p, 'n'), s)),
    'icosahedron': ((), lambda p, s: Graph.from_networkx(nx.icosahedral_graph())),
    'petersen': ((), lambda p, s: Graph.from_networkx(nx.petersen_graph())),
    'triangulation': (('n',), lambda p, s: _triangulation(_int_param(p, 'n', minimum=3), s)),
}


def generate(kind: str, params: Mapping | str | None = None, seed: int | None = None) -> Graph:
    """Return a graph of the family `kind`.

    Vertices are numbered `1..n`; for families built on labelled nodes, like grids, in sorted node order. The result
    only depends on `kind`, `params` and `seed`.

    :param params: the family parameters, as a dictionary or a `key=value,...` string
    :raises InvalidInputError: for unknown families, unknown or invalid parameters
    """
    try:
        accepted, builder = GENERATORS[kind]
    except KeyError as exception:
        raise InvalidInputError(f'unknown graph family `{kind}`, valid ones are {sorted(GENERATORS)}') from exception

    params = parse_params(params) if params is None or isinstance(params, str) else dict(params)

    if accepted is not None:
        unknown = set(params) - set(accepted)
        if unknown:
            raise InvalidInputError(f'unknown parameters {sorted(unknown)} for `{kind}`, accepted: {list(accepted)}')

    return builder(params, seed)
