# -*- coding: utf-8 -*-
"""Graphs, trigraphs, partitions and contraction sequences.

All the objects of this module are immutable values: a contraction returns a new trigraph and a sequence is replayed,
never mutated. Vertex sets are bit masks (see :mod:`aiida_twinwidth.core.bitsets`), with bit `v` for vertex `v`.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
import enum

import networkx as nx

from aiida_twinwidth.core.bitsets import bits, iter_bits, lowest_bit, popcount, to_mask
from aiida_twinwidth.exceptions import InvalidContractionError, InvalidInputError

__all__ = (
    'LoopConvention', 'Graph', 'Trigraph', 'DirectedTrigraph', 'Partition', 'ContractionSequence', 'from_graph',
    'contract', 'is_homogeneous', 'is_homogeneous_to', 'quotient', 'directed_red', 'red_components', 'apply_sequence',
    'iter_sequence', 'total_degree', 'max_total_degree', 'compatible_vertex_order'
)


class LoopConvention(str, enum.Enum):
    """Whether the non-singleton parts of a trigraph carry a red loop."""

    WITH_LOOPS = 'with_loops'
    WITHOUT_LOOPS = 'without_loops'


def _as_vertex(value) -> int:
    """Return `value` as a python integer, refusing booleans and non integral values."""
    if isinstance(value, bool):
        raise InvalidInputError(f'`{value}` is not a valid vertex id')
    try:
        vertex = int(value)
    except (TypeError, ValueError) as exception:
        raise InvalidInputError(f'`{value}` is not a valid vertex id') from exception
    if vertex != value:
        raise InvalidInputError(f'`{value}` is not a valid vertex id')
    return vertex


class Graph:
    """A simple undirected graph on the vertices `1..n`."""

    __slots__ = ('_n', '_adjacency')

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        """Construct the graph.

        :param n: number of vertices
        :param edges: unordered pairs of 1-based vertex ids
        :raises InvalidInputError: on loops, duplicated edges or endpoints outside `1..n`
        """
        n = _as_vertex(n)
        if n < 0:
            raise InvalidInputError(f'the number of vertices must be non negative, got `{n}`')

        adjacency = [0] * (n + 1)

        for edge in edges:
            u, v = (_as_vertex(endpoint) for endpoint in edge)
            if u == v:
                raise InvalidInputError(f'loop on vertex `{u}` is not allowed')
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidInputError(f'edge `({u}, {v})` has an endpoint outside 1..{n}')
            if adjacency[u] >> v & 1:
                raise InvalidInputError(f'edge `({u}, {v})` is given twice')
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u

        self._n = n
        self._adjacency = tuple(adjacency)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Return the graph of a `networkx.Graph`, relabelling its nodes `1..n` in sorted order."""
        if graph.is_directed() or graph.is_multigraph():
            raise InvalidInputError('only simple undirected graphs can be converted')
        if nx.number_of_selfloops(graph):
            raise InvalidInputError('graphs with self loops cannot be converted')

        relabelled = nx.convert_node_labels_to_integers(graph, first_label=1, ordering='sorted')
        return cls(relabelled.number_of_nodes(), relabelled.edges())

    def to_networkx(self) -> nx.Graph:
        """Return the graph as a `networkx.Graph` on the nodes `1..n`."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return self._n

    @property
    def vertices(self) -> range:
        """Return the vertex ids `1..n`."""
        return range(1, self._n + 1)

    @property
    def vertex_mask(self) -> int:
        """Return the mask of all vertices."""
        return ((1 << self._n) - 1) << 1

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Return the neighbourhood masks, indexed by vertex id (index 0 is unused)."""
        return self._adjacency

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Return the edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order."""
        return tuple((u, v) for u in self.vertices for v in iter_bits(self._adjacency[u] >> (u + 1) << (u + 1)))

    @property
    def num_edges(self) -> int:
        """Return the number of edges."""
        return sum(popcount(mask) for mask in self._adjacency) // 2

    def neighbors(self, vertex: int) -> int:
        """Return the neighbourhood mask of `vertex`."""
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        """Return the degree of `vertex`."""
        return popcount(self._adjacency[vertex])

    def has_edge(self, u: int, v: int) -> bool:
        """Return whether `u` and `v` are adjacent."""
        return bool(self._adjacency[u] >> v & 1)

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        """Return the isomorphic graph where vertex `v` becomes `mapping[v]`; `mapping` must be a permutation."""
        if sorted(mapping) != list(self.vertices) or sorted(mapping.values()) != list(self.vertices):
            raise InvalidInputError('the relabelling is not a permutation of the vertices')
        return Graph(self._n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f'Graph(n={self._n}, edges={list(self.edges)})'


class Trigraph:
    """A graph whose edges are either black or red, with optional red loops on contracted vertices.

    Vertices are positive part ids. Red loops are only allowed under :attr:`LoopConvention.WITH_LOOPS`.
    """

    __slots__ = ('_black', '_red', '_loops', '_convention')

    def __init__(
        self,
        vertices: Iterable[int],
        black: Iterable[tuple[int, int]] = (),
        red: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
        convention: LoopConvention = LoopConvention.WITHOUT_LOOPS,
    ):
        """Construct the trigraph; a red pair `(u, u)` is read as a loop on `u`.

        :raises InvalidInputError: if the edge sets overlap, contain black loops or unknown ids
        """
        convention = LoopConvention(convention)
        black_masks = {}
        for vertex in vertices:
            vertex = _as_vertex(vertex)
            if vertex < 1:
                raise InvalidInputError(f'part ids must be positive, got `{vertex}`')
            black_masks[vertex] = 0
        red_masks = dict.fromkeys(black_masks, 0)
        loops = {_as_vertex(vertex) for vertex in loops}

        for u, v in black:
            u, v = _as_vertex(u), _as_vertex(v)
            if u == v:
                raise InvalidInputError(f'black loop on `{u}` is not allowed')
            if u not in black_masks or v not in black_masks:
                raise InvalidInputError(f'black edge `({u}, {v})` has an unknown endpoint')
            black_masks[u] |= 1 << v
            black_masks[v] |= 1 << u

        for u, v in red:
            u, v = _as_vertex(u), _as_vertex(v)
            if u not in red_masks or v not in red_masks:
                raise InvalidInputError(f'red edge `({u}, {v})` has an unknown endpoint')
            if u == v:
                loops.add(u)
                continue
            if black_masks[u] >> v & 1:
                raise InvalidInputError(f'edge `({u}, {v})` cannot be both black and red')
            red_masks[u] |= 1 << v
            red_masks[v] |= 1 << u

        if loops and convention is LoopConvention.WITHOUT_LOOPS:
            raise InvalidInputError('red loops require the `with_loops` convention')
        if not loops.issubset(black_masks):
            raise InvalidInputError('red loop on an unknown vertex')

        self._black = black_masks
        self._red = red_masks
        self._loops = to_mask(loops)
        self._convention = convention

    @classmethod
    def _from_masks(cls, black: dict[int, int], red: dict[int, int], loops: int, convention: LoopConvention):
        """Build a trigraph from already consistent masks, skipping validation."""
        trigraph = cls.__new__(cls)
        trigraph._black = black
        trigraph._red = red
        trigraph._loops = loops
        trigraph._convention = convention
        return trigraph

    @property
    def convention(self) -> LoopConvention:
        """Return the loop convention."""
        return self._convention

    @property
    def vertices(self) -> tuple[int, ...]:
        """Return the sorted part ids."""
        return tuple(sorted(self._black))

    @property
    def vertex_mask(self) -> int:
        """Return the mask of the part ids."""
        return to_mask(self._black)

    @property
    def num_vertices(self) -> int:
        """Return the number of vertices."""
        return len(self._black)

    @property
    def black_edges(self) -> frozenset[tuple[int, int]]:
        """Return the black edges as pairs `(u, v)` with `u < v`."""
        return frozenset((u, v) for u, mask in self._black.items() for v in iter_bits(mask) if u < v)

    @property
    def red_edges(self) -> frozenset[tuple[int, int]]:
        """Return the red edges, loops excluded, as pairs `(u, v)` with `u < v`."""
        return frozenset((u, v) for u, mask in self._red.items() for v in iter_bits(mask) if u < v)

    @property
    def loops(self) -> frozenset[int]:
        """Return the vertices carrying a red loop."""
        return frozenset(iter_bits(self._loops))

    def __contains__(self, vertex: int) -> bool:
        return vertex in self._black

    def black_neighbors(self, vertex: int) -> int:
        """Return the mask of the black neighbours of `vertex`."""
        return self._black[vertex]

    def red_neighbors(self, vertex: int) -> int:
        """Return the mask of the red neighbours of `vertex`, loop excluded."""
        return self._red[vertex]

    def has_loop(self, vertex: int) -> bool:
        """Return whether `vertex` carries a red loop."""
        return bool(self._loops >> vertex & 1)

    def red_degree(self, vertex: int) -> int:
        """Return the red degree of `vertex`; a loop counts as one."""
        return popcount(self._red[vertex]) + (self._loops >> vertex & 1)

    def max_red_degree(self) -> int:
        """Return the maximum red degree, zero on the empty trigraph."""
        return max((self.red_degree(vertex) for vertex in self._red), default=0)

    def num_red_edges(self) -> int:
        """Return the number of red edges, loops included."""
        return sum(popcount(mask) for mask in self._red.values()) // 2 + popcount(self._loops)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Trigraph) and self._convention is other._convention and self._black == other._black and
            self._red == other._red and self._loops == other._loops
        )

    def __hash__(self) -> int:
        return hash((self._convention, self.black_edges, self.red_edges, self._loops))

    def __repr__(self) -> str:
        return (
            f'Trigraph(vertices={list(self.vertices)}, black={sorted(self.black_edges)}, '
            f'red={sorted(self.red_edges)}, loops={sorted(self.loops)}, convention={self._convention.value})'
        )


@dataclass(frozen=True)
class DirectedTrigraph:
    """A quotient trigraph whose red edges are oriented away from the non-homogeneous side."""

    vertices: tuple[int, ...]
    black: frozenset[tuple[int, int]]
    red_arcs: frozenset[tuple[int, int]]

    def out_degree(self, vertex: int) -> int:
        """Return the number of red arcs leaving `vertex`, a loop arc included."""
        return sum(1 for tail, _ in self.red_arcs if tail == vertex)

    def max_out_degree(self) -> int:
        """Return the maximum red out-degree."""
        degrees = dict.fromkeys(self.vertices, 0)
        for tail, _ in self.red_arcs:
            degrees[tail] += 1
        return max(degrees.values(), default=0)


class Partition:
    """A labelled partition of the vertex set of a graph."""

    __slots__ = ('_graph', '_parts')

    def __init__(self, graph: Graph, parts: Mapping[int, Iterable[int] | int]):
        """Construct the partition.

        :param graph: the partitioned graph
        :param parts: map from part id to the vertices of the part, given as an iterable or a mask
        :raises InvalidInputError: if the parts are empty, overlap or do not cover the vertices
        """
        masks = {}
        covered = 0

        for part_id, members in parts.items():
            part_id = _as_vertex(part_id)
            if part_id < 1:
                raise InvalidInputError(f'part ids must be positive, got `{part_id}`')
            mask = to_mask(members)
            if not mask:
                raise InvalidInputError(f'part `{part_id}` is empty')
            if mask & ~graph.vertex_mask:
                raise InvalidInputError(f'part `{part_id}` contains vertices outside 1..{graph.n}')
            if mask & covered:
                raise InvalidInputError(f'part `{part_id}` overlaps another part')
            covered |= mask
            masks[part_id] = mask

        if covered != graph.vertex_mask:
            raise InvalidInputError('the parts do not cover all the vertices')

        self._graph = graph
        self._parts = masks

    @classmethod
    def singletons(cls, graph: Graph) -> Partition:
        """Return the finest partition, where part `v` is `{v}`."""
        return cls._from_masks(graph, {vertex: 1 << vertex for vertex in graph.vertices})

    @classmethod
    def _from_masks(cls, graph: Graph, masks: dict[int, int]) -> Partition:
        partition = cls.__new__(cls)
        partition._graph = graph
        partition._parts = masks
        return partition

    @property
    def graph(self) -> Graph:
        """Return the partitioned graph."""
        return self._graph

    @property
    def ids(self) -> tuple[int, ...]:
        """Return the sorted part ids."""
        return tuple(sorted(self._parts))

    @property
    def masks(self) -> dict[int, int]:
        """Return a copy of the map from part id to vertex mask."""
        return dict(self._parts)

    @property
    def parts(self) -> dict[int, frozenset[int]]:
        """Return the map from part id to vertex set."""
        return {part_id: frozenset(iter_bits(mask)) for part_id, mask in self._parts.items()}

    def mask(self, part_id: int) -> int:
        """Return the vertex mask of a part."""
        return self._parts[part_id]

    def part_of(self, vertex: int) -> int:
        """Return the id of the part containing `vertex`."""
        for part_id, mask in self._parts.items():
            if mask >> vertex & 1:
                return part_id
        raise InvalidInputError(f'vertex `{vertex}` is not in the partition')

    def is_singleton(self, part_id: int) -> bool:
        """Return whether the part has a single vertex."""
        mask = self._parts[part_id]
        return mask & (mask - 1) == 0

    def merge(self, u: int, v: int, new_id: int) -> Partition:
        """Return the partition where parts `u` and `v` are replaced by their union, labelled `new_id`."""
        if u == v or u not in self._parts or v not in self._parts:
            raise InvalidContractionError(f'cannot merge parts `{u}` and `{v}`')
        if new_id in self._parts:
            raise InvalidContractionError(f'part id `{new_id}` is already in use')
        masks = dict(self._parts)
        masks[new_id] = masks.pop(u) | masks.pop(v)
        return Partition._from_masks(self._graph, masks)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Return the partition as a sorted tuple of sorted vertex tuples, ignoring the part ids."""
        return tuple(sorted(bits(mask) for mask in self._parts.values()))

    def __len__(self) -> int:
        return len(self._parts)

    def __contains__(self, part_id: int) -> bool:
        return part_id in self._parts

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._graph == other._graph and self._parts == other._parts

    def __hash__(self) -> int:
        return hash((self._graph, frozenset(self._parts.items())))

    def __repr__(self) -> str:
        return f'Partition({ {part_id: list(bits(mask)) for part_id, mask in sorted(self._parts.items())} })'


@dataclass(frozen=True)
class ContractionSequence:
    """An ordered list of contractions of an `n` vertex graph.

    The `k`-th contraction (1-based) merges two live parts into the fresh part `n + k`. The sequence is full when it
    has `n - 1` steps.
    """

    num_vertices: int
    steps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = _as_vertex(self.num_vertices)
        if n < 0:
            raise InvalidInputError(f'the number of vertices must be non negative, got `{n}`')
        steps = tuple((_as_vertex(u), _as_vertex(v)) for u, v in self.steps)
        object.__setattr__(self, 'num_vertices', n)
        object.__setattr__(self, 'steps', steps)

        alive = set(range(1, n + 1))
        for index, (u, v) in enumerate(steps, start=1):
            if u == v:
                raise InvalidContractionError(f'part `{u}` cannot be contracted with itself', step=index)
            for part_id in (u, v):
                if part_id not in alive:
                    raise InvalidContractionError(f'part `{part_id}` is not alive', step=index)
            alive -= {u, v}
            alive.add(n + index)

    @property
    def is_full(self) -> bool:
        """Return whether the sequence contracts the graph down to a single part."""
        return len(self.steps) == max(self.num_vertices - 1, 0)

    def new_id(self, step: int) -> int:
        """Return the id of the part created by the 1-based `step`."""
        return self.num_vertices + step

    def contractions(self) -> Iterator[tuple[int, int, int]]:
        """Yield the triples `(u, v, new_id)` of all steps."""
        for index, (u, v) in enumerate(self.steps, start=1):
            yield u, v, self.num_vertices + index

    def prefix(self, length: int) -> ContractionSequence:
        """Return the partial sequence made of the first `length` steps."""
        return ContractionSequence(self.num_vertices, self.steps[:length])

    def __len__(self) -> int:
        return len(self.steps)


def from_graph(graph: Graph, convention: LoopConvention = LoopConvention.WITHOUT_LOOPS) -> Trigraph:
    """Lift a graph to the all-black trigraph with the same vertices and edges."""
    black = {vertex: graph.neighbors(vertex) for vertex in graph.vertices}
    return Trigraph._from_masks(black, dict.fromkeys(black, 0), 0, LoopConvention(convention))


def contract(trigraph: Trigraph, u: int, v: int, new_id: int) -> Trigraph:
    """Contract the vertices `u` and `v` into `new_id`.

    The edge from `new_id` to another vertex `x` is black iff both `ux` and `vx` are black, and red iff `x` is adjacent
    to at least one of them otherwise. Under the `with_loops` convention the new vertex carries a red loop.

    :raises InvalidContractionError: if `u` or `v` are not distinct vertices or `new_id` is already in use
    """
    black, red = trigraph._black, trigraph._red

    if u == v or u not in black or v not in black:
        raise InvalidContractionError(f'cannot contract `{u}` and `{v}`')
    if new_id in black or new_id < 1:
        raise InvalidContractionError(f'part id `{new_id}` is not fresh')

    pair = 1 << u | 1 << v
    new_black = black[u] & black[v] & ~pair
    new_red = (black[u] | black[v] | red[u] | red[v]) & ~pair & ~new_black
    new_bit = 1 << new_id

    black_masks = {}
    red_masks = {}
    for vertex, mask in black.items():
        if vertex in (u, v):
            continue
        black_masks[vertex] = mask & ~pair | (new_bit if new_black >> vertex & 1 else 0)
        red_masks[vertex] = red[vertex] & ~pair | (new_bit if new_red >> vertex & 1 else 0)
    black_masks[new_id] = new_black
    red_masks[new_id] = new_red

    loops = trigraph._loops & ~pair
    if trigraph.convention is LoopConvention.WITH_LOOPS:
        loops |= new_bit

    return Trigraph._from_masks(black_masks, red_masks, loops, trigraph.convention)


def _checked_sets(x_set, y_set) -> tuple[int, int]:
    x_mask, y_mask = to_mask(x_set), to_mask(y_set)
    if not x_mask or not y_mask:
        raise InvalidInputError('vertex sets must be nonempty')
    if x_mask != y_mask and x_mask & y_mask:
        raise InvalidInputError('distinct vertex sets must be disjoint')
    return x_mask, y_mask


def _traces(graph: Graph, mask: int, target: int) -> tuple[int, int]:
    """Return the union and the intersection of the neighbourhoods of the vertices of `mask` within `target`."""
    adjacency = graph.adjacency
    union, inter = 0, target
    for vertex in iter_bits(mask):
        union |= adjacency[vertex] & target
        inter &= adjacency[vertex]
    return union, inter


def is_homogeneous(graph: Graph, x_set, y_set) -> bool:
    """Return whether there are either all or no edges between the two vertex sets.

    A set is homogeneous with itself iff it is a singleton.

    :raises InvalidInputError: if the sets are empty, or distinct and overlapping
    """
    x_mask, y_mask = _checked_sets(x_set, y_set)
    if x_mask == y_mask:
        return popcount(x_mask) == 1
    union, inter = _traces(graph, x_mask, y_mask)
    return union == 0 or inter == y_mask


def is_homogeneous_to(graph: Graph, y_set, x_set) -> bool:
    """Return whether `y_set` is a module of the subgraph induced by the union of the two sets.

    :raises InvalidInputError: if the sets are empty or overlap
    """
    x_mask, y_mask = _checked_sets(x_set, y_set)
    if x_mask == y_mask:
        raise InvalidInputError('vertex sets must be disjoint')
    union, inter = _traces(graph, y_mask, x_mask)
    return union == inter


def _part_traces(partition: Partition) -> dict[int, tuple[int, int]]:
    graph = partition.graph
    return {part_id: _traces(graph, mask, graph.vertex_mask) for part_id, mask in partition._parts.items()}


def quotient(
    graph: Graph, partition: Partition, convention: LoopConvention = LoopConvention.WITHOUT_LOOPS
) -> Trigraph:
    """Return the quotient trigraph of the partition.

    Two parts are joined by a black edge when complete to each other, and by a red edge when not homogeneous.
    """
    if partition.graph != graph:
        raise InvalidInputError('the partition is not a partition of the given graph')

    convention = LoopConvention(convention)
    masks = partition._parts
    traces = _part_traces(partition)
    black = dict.fromkeys(masks, 0)
    red = dict.fromkeys(masks, 0)
    ids = sorted(masks)

    for index, x in enumerate(ids):
        union, inter = traces[x]
        for y in ids[index + 1:]:
            y_mask = masks[y]
            if inter & y_mask == y_mask:
                black[x] |= 1 << y
                black[y] |= 1 << x
            elif union & y_mask:
                red[x] |= 1 << y
                red[y] |= 1 << x

    loops = 0
    if convention is LoopConvention.WITH_LOOPS:
        loops = to_mask(part_id for part_id in ids if not partition.is_singleton(part_id))

    return Trigraph._from_masks(black, red, loops, convention)


def directed_red(
    graph: Graph, partition: Partition, convention: LoopConvention = LoopConvention.WITHOUT_LOOPS
) -> DirectedTrigraph:
    """Return the quotient with every red edge `XY` oriented `X -> Y` whenever `X` is not homogeneous to `Y`.

    Both orientations may be present. Under `with_loops` every non-singleton part also gets a loop arc.
    """
    trigraph = quotient(graph, partition, convention)
    masks = partition._parts
    arcs = set()

    for x, y in trigraph.red_edges:
        for tail, head in ((x, y), (y, x)):
            union, inter = _traces(graph, masks[tail], masks[head])
            if union != inter:
                arcs.add((tail, head))

    arcs.update((part_id, part_id) for part_id in trigraph.loops)

    return DirectedTrigraph(trigraph.vertices, trigraph.black_edges, frozenset(arcs))


def red_components(trigraph: Trigraph) -> list[frozenset[int]]:
    """Return the connected components of the red graph, ordered by their smallest member."""
    red = trigraph._red
    remaining = trigraph.vertex_mask
    components = []

    while remaining:
        start = lowest_bit(remaining)
        component = frontier = 1 << start
        while frontier:
            reached = 0
            for vertex in iter_bits(frontier):
                reached |= red[vertex]
            frontier = reached & ~component
            component |= frontier
        remaining &= ~component
        components.append(frozenset(iter_bits(component)))

    return components


def iter_sequence(
    graph: Graph,
    sequence: ContractionSequence,
    convention: LoopConvention = LoopConvention.WITHOUT_LOOPS,
) -> Iterator[tuple[int, Trigraph, Partition]]:
    """Replay a contraction sequence.

    Yield the triple `(step, trigraph, partition)` for the initial state (step 0) and after each contraction.

    :raises InvalidInputError: if the sequence was not written for a graph with this number of vertices
    """
    if sequence.num_vertices != graph.n:
        raise InvalidInputError(
            f'the sequence is for {sequence.num_vertices} vertices but the graph has {graph.n} vertices'
        )

    trigraph = from_graph(graph, convention)
    partition = Partition.singletons(graph)
    yield 0, trigraph, partition

    for step, (u, v, new_id) in enumerate(sequence.contractions(), start=1):
        try:
            trigraph = contract(trigraph, u, v, new_id)
        except InvalidContractionError as exception:
            raise InvalidContractionError(str(exception), step=step) from exception
        partition = partition.merge(u, v, new_id)
        yield step, trigraph, partition


def apply_sequence(
    graph: Graph,
    sequence: ContractionSequence,
    steps: int | None = None,
    convention: LoopConvention = LoopConvention.WITHOUT_LOOPS,
) -> tuple[Trigraph, Partition]:
    """Return the trigraph and the partition reached after the first `steps` contractions (all by default)."""
    steps = len(sequence) if steps is None else steps
    if not 0 <= steps <= len(sequence):
        raise InvalidInputError(f'cannot apply {steps} steps of a sequence with {len(sequence)} steps')

    for step, trigraph, partition in iter_sequence(graph, sequence, convention):
        if step == steps:
            return trigraph, partition


def total_degree(trigraph: Trigraph, vertex: int) -> int:
    """Return the degree of `vertex` once the edge colours are forgotten, loop excluded."""
    return popcount(trigraph._black[vertex] | trigraph._red[vertex])


def max_total_degree(trigraph: Trigraph) -> int:
    """Return the maximum degree of the total graph of the trigraph."""
    return max((total_degree(trigraph, vertex) for vertex in trigraph._black), default=0)


def compatible_vertex_order(sequence: ContractionSequence) -> list[int]:
    """Return a vertex order in which every part of every partition of the sequence is an interval."""
    n = sequence.num_vertices
    children = {}
    smallest = {vertex: vertex for vertex in range(1, n + 1)}
    roots = set(smallest)

    for u, v, new_id in sequence.contractions():
        children[new_id] = tuple(sorted((u, v), key=smallest.get))
        smallest[new_id] = min(smallest[u], smallest[v])
        roots -= {u, v}
        roots.add(new_id)

    order = []
    stack = sorted(roots, key=smallest.get, reverse=True)
    while stack:
        node = stack.pop()
        if node in children:
            stack.extend(reversed(children[node]))
        else:
            order.append(node)

    return order
