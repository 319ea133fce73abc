# -*- coding: utf-8 -*-
"""Branch decompositions, boolean-width of cuts and conversions from and to contraction sequences.

A decomposition is stored rooted: `parents` maps every node to its parent (0 for the root) and `leaves` maps every leaf
to the vertex it carries. Widths are computed over all the edges of the tree, which is the unrooted width.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
import math

from aiida.common.log import AIIDA_LOGGER
import numpy as np

from aiida_twinwidth.core.bitsets import iter_bits, lowest_bit, popcount, to_mask
from aiida_twinwidth.core.trigraph import (
    ContractionSequence,
    Graph,
    LoopConvention,
    Trigraph,
    contract,
    from_graph,
    iter_sequence,
    red_components,
)
from aiida_twinwidth.exceptions import DecompositionWidthExceededError, InternalCheckError, InvalidInputError
from aiida_twinwidth.utils.defaults import UNION_CLOSURE_CAP

__all__ = (
    'BranchDecomposition', 'CutProfile', 'BooleanWidth', 'cut_profile', 'bd_boolean_width', 'bd_to_sequence',
    'sequence_to_bd', 'linear_bd_to_sequence', 'sequence_to_linear_bd'
)

LOGGER = AIIDA_LOGGER.getChild('twinwidth')


@dataclass(frozen=True, eq=True)
class BranchDecomposition:
    """A rooted tree whose leaves are in bijection with the vertices `1..n` of a graph.

    Every internal node other than the root has two children; the root has at least two children unless the tree is a
    single leaf.

    :param parents: map from node id to parent id, the root being mapped to 0
    :param leaves: map from leaf node id to vertex
    """

    parents: Mapping[int, int]
    leaves: Mapping[int, int]

    def __post_init__(self):
        parents = {int(node): int(parent) for node, parent in self.parents.items()}
        leaves = {int(node): int(vertex) for node, vertex in self.leaves.items()}
        object.__setattr__(self, 'parents', parents)
        object.__setattr__(self, 'leaves', leaves)

        roots = [node for node, parent in parents.items() if parent == 0]
        if len(roots) != 1:
            raise InvalidInputError(f'a decomposition needs exactly one root, found {len(roots)}')
        if any(node < 1 for node in parents):
            raise InvalidInputError('node ids must be positive')

        for node, parent in parents.items():
            if parent and parent not in parents:
                raise InvalidInputError(f'node `{node}` has the unknown parent `{parent}`')

        children = self.children
        reached = set()
        stack = [roots[0]]
        while stack:
            node = stack.pop()
            reached.add(node)
            stack.extend(children[node])
        if reached != set(parents):
            raise InvalidInputError('the parent links contain a cycle')

        childless = {node for node, nodes in children.items() if not nodes}
        if childless != set(leaves):
            raise InvalidInputError('the leaves must be exactly the nodes without children')
        if sorted(leaves.values()) != list(range(1, len(leaves) + 1)):
            raise InvalidInputError('the leaves are not in bijection with the vertices 1..n')

        for node, nodes in children.items():
            if node == roots[0]:
                if nodes and len(nodes) < 2:
                    raise InvalidInputError('the root must have at least two children')
            elif nodes and len(nodes) != 2:
                raise InvalidInputError(f'internal node `{node}` must have exactly two children')

    @classmethod
    def from_order(cls, order: Sequence[int]) -> BranchDecomposition:
        """Return the linear decomposition (a caterpillar) whose leaves follow `order` from the bottom up."""
        order = [int(vertex) for vertex in order]
        n = len(order)
        if sorted(order) != list(range(1, n + 1)):
            raise InvalidInputError('the order must be a permutation of 1..n')
        if n == 0:
            raise InvalidInputError('a decomposition needs at least one vertex')
        if n == 1:
            return cls({order[0]: 0}, {order[0]: order[0]})

        parents = {}
        current = order[0]
        for index, vertex in enumerate(order[1:], start=1):
            node = n + index
            parents[current] = node
            parents[vertex] = node
            current = node
        parents[current] = 0

        return cls(parents, {vertex: vertex for vertex in order})

    @classmethod
    def balanced(cls, order: Sequence[int]) -> BranchDecomposition:
        """Return the decomposition obtained by recursively halving `order`."""
        order = [int(vertex) for vertex in order]
        n = len(order)
        if sorted(order) != list(range(1, n + 1)) or n == 0:
            raise InvalidInputError('the order must be a nonempty permutation of 1..n')

        parents = {}
        counter = [n]

        def build(segment):
            if len(segment) == 1:
                return segment[0]
            middle = len(segment) // 2
            left, right = build(segment[:middle]), build(segment[middle:])
            counter[0] += 1
            parents[left] = parents[right] = counter[0]
            return counter[0]

        parents[build(order)] = 0
        return cls(parents, {vertex: vertex for vertex in order})

    @classmethod
    def random(cls, n: int, seed: int | None = None) -> BranchDecomposition:
        """Return a random binary decomposition, built by repeatedly joining two random subtrees."""
        if n < 1:
            raise InvalidInputError('a decomposition needs at least one vertex')

        rng = np.random.default_rng(seed)
        subtrees = list(range(1, n + 1))
        parents = {}
        next_node = n
        while len(subtrees) > 1:
            first, second = sorted(rng.choice(len(subtrees), size=2, replace=False), reverse=True)
            next_node += 1
            parents[subtrees.pop(first)] = next_node
            parents[subtrees.pop(second)] = next_node
            subtrees.append(next_node)
        parents[subtrees[0]] = 0

        return cls(parents, {vertex: vertex for vertex in range(1, n + 1)})

    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return len(self.leaves)

    @property
    def root(self) -> int:
        """Return the root node."""
        return next(node for node, parent in self.parents.items() if parent == 0)

    @property
    def children(self) -> dict[int, list[int]]:
        """Return the sorted children of every node."""
        children = {node: [] for node in self.parents}
        for node, parent in sorted(self.parents.items()):
            if parent:
                children[parent].append(node)
        return children

    def leaf_masks(self) -> dict[int, int]:
        """Return, for every node, the mask of the vertices carried by the leaves below it."""
        children = self.children
        masks = {}
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if node in self.leaves:
                masks[node] = 1 << self.leaves[node]
            elif expanded:
                masks[node] = 0
                for child in children[node]:
                    masks[node] |= masks[child]
            else:
                stack.append((node, True))
                stack.extend((child, False) for child in children[node])
        return masks

    def cuts(self) -> list[int]:
        """Return the vertex masks of one side of the bipartition of every tree edge."""
        masks = self.leaf_masks()
        return [mask for node, mask in sorted(masks.items()) if self.parents[node]]

    def is_linear(self) -> bool:
        """Return whether the internal nodes form a path."""
        internal = set(self.parents) - set(self.leaves)
        degrees = dict.fromkeys(internal, 0)
        for node, parent in self.parents.items():
            if node in internal and parent in internal:
                degrees[node] += 1
                degrees[parent] += 1
        return all(degree <= 2 for degree in degrees.values())


@dataclass(frozen=True)
class CutProfile:
    """The neighbourhood structure across a cut `(side, V - side)`.

    :param distinct_neighborhoods: number of distinct traces of neighbourhoods of `side` on the other side
    :param union_closure_size: number of sets realised as the neighbourhood of a subset of `side`; a lower bound when
        the closure was not computed exactly
    """

    side: frozenset[int]
    other: frozenset[int]
    distinct_neighborhoods: int
    union_closure_size: int
    exact: bool

    @property
    def boolean_width(self) -> float | None:
        """Return the boolean-width of the cut, `None` when it was not computed exactly."""
        return math.log2(self.union_closure_size) if self.exact else None

    @property
    def lower(self) -> float:
        """Return the best known lower bound of the boolean-width."""
        return max(math.log2(self.distinct_neighborhoods), math.log2(self.union_closure_size))

    @property
    def upper(self) -> float:
        """Return the best known upper bound of the boolean-width."""
        return self.boolean_width if self.exact else float(self.distinct_neighborhoods)


@dataclass(frozen=True)
class BooleanWidth:
    """The boolean-width of a decomposition, exact or bracketed.

    :param closure_size: largest union closure over all the cuts, a lower bound when inexact
    """

    lower: float
    upper: float
    exact: bool
    closure_size: int

    @property
    def value(self) -> float | None:
        """Return the boolean-width when exact."""
        return self.upper if self.exact else None

    def at_most(self, bound: float) -> bool:
        """Return whether the boolean-width is proven to be at most `bound`."""
        if self.exact:
            return self.closure_size <= 2**bound
        return self.upper <= bound


def _cut_profile(graph: Graph, side: int, cap: int) -> CutProfile:
    other = graph.vertex_mask & ~side
    adjacency = graph.adjacency
    traces = {adjacency[vertex] & other for vertex in iter_bits(side)}

    closure = {0}
    exact = True
    for trace in sorted(traces):
        if trace in closure:
            continue
        closure |= {subset | trace for subset in closure}
        if len(closure) > cap:
            exact = False
            break

    return CutProfile(
        side=frozenset(iter_bits(side)),
        other=frozenset(iter_bits(other)),
        distinct_neighborhoods=len(traces),
        union_closure_size=len(closure),
        exact=exact,
    )


def cut_profile(graph: Graph, side, cap: int = UNION_CLOSURE_CAP) -> CutProfile:
    """Return the profile of the cut between `side` and the remaining vertices.

    The union closure of the neighbourhood traces is enumerated up to `cap` sets; beyond it only the bracket between
    `log2(q)` and `q` is known, `q` being the number of distinct traces.

    :raises InvalidInputError: if the cut is trivial
    """
    side = to_mask(side)
    if not side or side & ~graph.vertex_mask or side == graph.vertex_mask:
        raise InvalidInputError('the cut side must be a nonempty proper subset of the vertices')
    return _cut_profile(graph, side, cap)


def bd_boolean_width(graph: Graph, decomposition: BranchDecomposition, cap: int = UNION_CLOSURE_CAP) -> BooleanWidth:
    """Return the maximum boolean-width over the cuts of all the edges of the decomposition."""
    if decomposition.n != graph.n:
        raise InvalidInputError('the decomposition does not match the number of vertices of the graph')

    lower, upper, closure_size, exact = 0.0, 0.0, 1, True
    for side in decomposition.cuts():
        if side == graph.vertex_mask:
            continue
        profile = _cut_profile(graph, side, cap)
        exact &= profile.exact
        lower = max(lower, profile.lower)
        upper = max(upper, profile.upper)
        closure_size = max(closure_size, profile.union_closure_size)

    if not exact:
        LOGGER.warning(f'union closure cap {cap} exceeded, boolean-width only bracketed in [{lower}, {upper}]')

    return BooleanWidth(lower=lower, upper=upper, exact=exact, closure_size=closure_size)


class _WorkingTree:
    """Mutable rooted binary copy of a decomposition whose leaves carry the live part ids of a trigraph."""

    def __init__(self, decomposition: BranchDecomposition, root: int | None = None):
        neighbours = {node: set() for node in decomposition.parents}
        for node, parent in decomposition.parents.items():
            if parent:
                neighbours[node].add(parent)
                neighbours[parent].add(node)

        self.root = decomposition.root if root is None else root
        self.parent = {self.root: 0}
        self.children = {}
        stack = [self.root]
        while stack:
            node = stack.pop()
            self.children[node] = sorted(neighbours[node] - {self.parent[node]})
            for child in self.children[node]:
                self.parent[child] = node
                stack.append(child)

        self.part = dict(decomposition.leaves)
        self.leaf_of = {part: leaf for leaf, part in self.part.items()}
        self._next_node = max(decomposition.parents) + 1

        for node in [node for node, nodes in self.children.items() if len(nodes) == 1]:
            self._splice(node)
        self._binarize_root()

    def _splice(self, node: int):
        """Remove a node with a single child, attaching the child to the node's parent."""
        (child,) = self.children.pop(node)
        parent = self.parent.pop(node)
        self.parent[child] = parent
        if parent:
            siblings = self.children[parent]
            siblings[siblings.index(node)] = child
        else:
            self.root = child

    def _smallest_part(self, node: int) -> int:
        while node not in self.part:
            node = min(self.children[node], key=self._smallest_part)
        return self.part[node]

    def _binarize_root(self):
        """Replace a root of arity larger than two by a left-deep comb, internal children first."""
        children = self.children[self.root]
        if len(children) <= 2:
            return
        ordered = sorted(children, key=lambda child: (child in self.part, self._smallest_part(child)))
        current = ordered[0]
        for child in ordered[1:-1]:
            node = self._next_node
            self._next_node += 1
            self.children[node] = [current, child]
            self.parent[current] = self.parent[child] = node
            current = node
        self.children[self.root] = [current, ordered[-1]]
        self.parent[current] = self.root

    def statistics(self) -> dict[int, tuple[int, int, int]]:
        """Return, for every node, its depth, its part mask and its smallest part id."""
        depth = {self.root: 0}
        order = [self.root]
        for node in order:
            for child in self.children.get(node, ()):
                depth[child] = depth[node] + 1
                order.append(child)

        masks = {}
        for node in reversed(order):
            if node in self.part:
                masks[node] = 1 << self.part[node]
            else:
                masks[node] = 0
                for child in self.children[node]:
                    masks[node] |= masks[child]

        return {node: (depth[node], masks[node], lowest_bit(masks[node])) for node in order}

    def select(self, minimum_size: int) -> tuple[int, int]:
        """Return the deepest node with at least `minimum_size` leaves and its part mask.

        Ties are broken by the smaller subtree, then by the smallest part id.
        """
        candidates = [(-depth, popcount(mask), smallest, node, mask)
                      for node, (depth, mask, smallest) in self.statistics().items()
                      if popcount(mask) >= minimum_size]
        *_, node, mask = min(candidates)
        return node, mask

    def merge_leaves(self, kept: int, removed: int, new_part: int):
        """Delete the leaf of `removed` and relabel the leaf of `kept` as `new_part`."""
        leaf = self.leaf_of.pop(removed)
        del self.part[leaf]
        parent = self.parent.pop(leaf)
        self.children.pop(leaf, None)
        if parent:
            self.children[parent].remove(leaf)
            if len(self.children[parent]) == 1:
                self._splice(parent)

        leaf = self.leaf_of.pop(kept)
        self.part[leaf] = new_part
        self.leaf_of[new_part] = leaf


def _check_crossing_edges_black(trigraph: Trigraph, tree: _WorkingTree, minimum_size: int, step: int):
    """Check that no red edge leaves the part set of a node with at least `minimum_size` leaves."""
    for node, (_, mask, _) in tree.statistics().items():
        if popcount(mask) < minimum_size:
            continue
        for part in iter_bits(mask):
            if trigraph.red_neighbors(part) & ~mask:
                raise InternalCheckError(f'step {step}: a red edge leaves part `{part}` of decomposition node `{node}`')


def _same_outside_pair(trigraph: Trigraph, inside: int) -> tuple[int, int] | None:
    """Return the lexicographically smallest pair of parts in `inside` with the same neighbourhood outside it."""
    groups = {}
    for part in iter_bits(inside):
        outside = (trigraph.black_neighbors(part) | trigraph.red_neighbors(part)) & ~inside
        groups.setdefault(outside, []).append(part)
    pairs = [tuple(members[:2]) for members in groups.values() if len(members) > 1]
    return min(pairs, default=None)


def _contract_along(
    graph: Graph,
    decomposition: BranchDecomposition,
    bound: int,
    remainder: int,
    root: int | None = None,
    check_invariant: bool = True,
) -> ContractionSequence:
    """Contract same-outside-neighbourhood pairs below the deepest large node until `remainder` parts are left."""
    if decomposition.n != graph.n:
        raise InvalidInputError('the decomposition does not match the number of vertices of the graph')
    if bound < 0:
        raise InvalidInputError(f'the bound must be non negative, got `{bound}`')

    n = graph.n
    minimum_size = 2**bound + 1
    tree = _WorkingTree(decomposition, root)
    trigraph = from_graph(graph)
    steps = []

    while trigraph.num_vertices > remainder:
        step = len(steps) + 1
        node, inside = tree.select(minimum_size)
        if check_invariant:
            _check_crossing_edges_black(trigraph, tree, minimum_size, step)

        pair = _same_outside_pair(trigraph, inside)
        if pair is None:
            raise DecompositionWidthExceededError(
                f'no two parts below node `{node}` share their neighbourhood outside it, '
                f'the decomposition is wider than {bound}', step
            )

        first, second = pair
        trigraph = contract(trigraph, first, second, n + step)
        tree.merge_leaves(first, second, n + step)
        steps.append(pair)
        LOGGER.debug(f'step {step}: contracted {pair} below decomposition node {node}')

    while trigraph.num_vertices > 1:
        step = len(steps) + 1
        first, second = trigraph.vertices[:2]
        trigraph = contract(trigraph, first, second, n + step)
        steps.append((first, second))

    return ContractionSequence(n, steps)


def bd_to_sequence(
    graph: Graph, decomposition: BranchDecomposition, bound: int, check_invariant: bool = True
) -> ContractionSequence:
    """Convert a decomposition of boolean-width `bound` into a sequence of component width at most `2^(bound+1)`.

    While more than `2^(bound+1)` parts are left, the deepest node with at least `2^bound + 1` leaves is selected and
    two of its parts with the same neighbourhood outside of it are contracted; such a pair exists by pigeonhole when
    the boolean-width bound holds. The remaining parts are contracted by increasing id.

    :param check_invariant: check at every step that no red edge crosses the cut of a large node
    :raises DecompositionWidthExceededError: if no suitable pair exists, i.e. the decomposition is wider than `bound`
    """
    return _contract_along(graph, decomposition, bound, 2**(bound + 1), check_invariant=check_invariant)


def linear_bd_to_sequence(
    graph: Graph, decomposition: BranchDecomposition, bound: int, check_invariant: bool = True
) -> ContractionSequence:
    """Convert a linear decomposition of linear boolean-width at most `bound` into a sequence of small total width.

    The decomposition is rooted at an end of its internal path, so that the selected node always has exactly
    `2^bound + 1` leaves. The total width of the output is at most `2^bound + 1 + C(2^bound + 1, 2)`.

    :raises InvalidInputError: if the decomposition is not linear
    :raises DecompositionWidthExceededError: if the decomposition is wider than `bound`
    """
    if not decomposition.is_linear():
        raise InvalidInputError('the decomposition is not linear')

    return _contract_along(
        graph, decomposition, bound, 2**bound + 1, root=_path_end(decomposition), check_invariant=check_invariant
    )


def _path_end(decomposition: BranchDecomposition) -> int:
    """Return an end of the internal path, preferring the current root."""
    internal = set(decomposition.parents) - set(decomposition.leaves)
    if not internal:
        return decomposition.root

    degrees = dict.fromkeys(internal, 0)
    for node, parent in decomposition.parents.items():
        if node in internal and parent in internal:
            degrees[node] += 1
            degrees[parent] += 1

    ends = sorted(node for node, degree in degrees.items() if degree <= 1)
    return decomposition.root if decomposition.root in ends else ends[0]


def _component_masks(trigraph: Trigraph, masks: dict[int, int]) -> list[int]:
    components = []
    for component in red_components(trigraph):
        mask = 0
        for part in component:
            mask |= masks[part]
        components.append(mask)
    return components


def sequence_to_bd(graph: Graph, sequence: ContractionSequence) -> BranchDecomposition:
    """Convert a full sequence of component width `d` into a decomposition of boolean-width at most `2^d`.

    The root keeps one subtree per red component. Whenever a contraction fuses several components, their subtrees are
    hung, ordered by smallest vertex, under a fresh left-deep binary comb which becomes the subtree of the new
    component.

    :raises InvalidInputError: if the sequence is partial
    """
    if not sequence.is_full:
        raise InvalidInputError('only a full sequence can be converted into a decomposition')
    if graph.n == 1:
        return BranchDecomposition({1: 0}, {1: 1})

    n = graph.n
    parents = {}
    subtrees = {1 << vertex: vertex for vertex in graph.vertices}
    next_node = n

    states = iter_sequence(graph, sequence, LoopConvention.WITH_LOOPS)
    next(states)

    for step, trigraph, partition in states:
        fused = partition.mask(sequence.new_id(step))
        component = next(mask for mask in _component_masks(trigraph, partition._parts) if mask & fused)
        merged = sorted((mask for mask in subtrees if mask & component), key=lowest_bit)
        current = subtrees.pop(merged[0])
        for mask in merged[1:]:
            next_node += 1
            parents[current] = parents[subtrees.pop(mask)] = next_node
            current = next_node
        subtrees[component] = current

        if len(subtrees) != len(red_components(trigraph)):
            raise InternalCheckError(f'step {step}: the root star does not match the red components')

    ((_, root),) = subtrees.items()
    parents[root] = 0

    return BranchDecomposition(parents, {vertex: vertex for vertex in graph.vertices})


def sequence_to_linear_bd(graph: Graph, sequence: ContractionSequence) -> BranchDecomposition:
    """Convert a full sequence of total width `d` into a linear decomposition of linear boolean-width at most `2^d`.

    Vertices are ordered by the step at which they first leave a singleton part, ties by id, so that the union of the
    non-singleton parts of every partition is a prefix of the order.

    :raises InvalidInputError: if the sequence is partial
    """
    if not sequence.is_full:
        raise InvalidInputError('only a full sequence can be converted into a decomposition')
    if sequence.num_vertices != graph.n:
        raise InvalidInputError('the sequence does not match the number of vertices of the graph')

    first_step = {}
    for step, (u, v, _) in enumerate(sequence.contractions(), start=1):
        for part in (u, v):
            if part <= graph.n:
                first_step.setdefault(part, step)

    order = sorted(graph.vertices, key=lambda vertex: (first_step.get(vertex, math.inf), vertex))
    return BranchDecomposition.from_order(order)

