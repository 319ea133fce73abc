# -*- coding: utf-8 -*-
"""Module defining the class for simple undirected graphs."""
from __future__ import annotations

import networkx as nx

from aiida_twinwidth.core.trigraph import Graph
from aiida_twinwidth.exceptions import InvalidInputError

from .base import TwinWidthData

__all__ = ('GraphData',)


class GraphData(TwinWidthData):  # pylint: disable=too-many-ancestors
    """A simple undirected graph on the vertices `1..n`, stored as its number of vertices and an edge array."""

    def __init__(self, graph: Graph | nx.Graph | None = None, **kwargs):
        """Instantiate the class.

        :param graph: a :class:`~aiida_twinwidth.core.trigraph.Graph` or a `networkx.Graph`, whose nodes are then
            relabelled `1..n` in sorted order
        """
        super().__init__(**kwargs)

        if graph is not None:
            self.set_graph(graph)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Get the edges as sorted pairs in lexicographic order."""
        return self._get_pairs('edges')

    @property
    def num_edges(self) -> int:
        """Get the number of edges."""
        return self.base.attributes.get('num_edges')

    def set_graph(self, graph: Graph | nx.Graph):
        """Set the graph.

        :raises TypeError: if the graph is neither a `Graph` nor a `networkx.Graph`
        :raises ValueError: if the `networkx.Graph` cannot be converted
        """
        self._if_can_modify()

        if isinstance(graph, nx.Graph):
            try:
                graph = Graph.from_networkx(graph)
            except InvalidInputError as exception:
                raise ValueError(str(exception)) from exception
        elif not isinstance(graph, Graph):
            raise TypeError(f'expected a `Graph` or a `networkx.Graph`, got {type(graph)}')

        self._set_num_vertices(graph.n)
        self._set_pairs('edges', list(graph.edges))
        self.base.attributes.set('num_edges', graph.num_edges)

    def get_graph(self) -> Graph:
        """Return the stored graph as a :class:`~aiida_twinwidth.core.trigraph.Graph`."""
        return Graph(self.num_vertices, self.edges)

    def get_networkx(self) -> nx.Graph:
        """Return the stored graph as a `networkx.Graph` on the nodes `1..n`."""
        return self.get_graph().to_networkx()
