# -*- coding: utf-8 -*-
"""Module defining the class for branch decompositions."""
from __future__ import annotations

from aiida_twinwidth.core.decompositions import BranchDecomposition

from .base import TwinWidthData

__all__ = ('BranchDecompositionData',)


class BranchDecompositionData(TwinWidthData):  # pylint: disable=too-many-ancestors
    """A rooted branch decomposition.

    The array `parents` holds the rows `(node, parent)`, the root having parent 0, and the array `leaves` the rows
    `(leaf, vertex)`.
    """

    def __init__(self, decomposition: BranchDecomposition | None = None, **kwargs):
        """Instantiate the class.

        :param decomposition: a :class:`~aiida_twinwidth.core.decompositions.BranchDecomposition`
        """
        super().__init__(**kwargs)

        if decomposition is not None:
            self.set_decomposition(decomposition)

    @property
    def linear(self) -> bool:
        """Get whether the internal nodes of the decomposition form a path."""
        return self.base.attributes.get('linear')

    def set_decomposition(self, decomposition: BranchDecomposition):
        """Set the decomposition.

        :raises TypeError: if `decomposition` is not a `BranchDecomposition`
        """
        self._if_can_modify()

        if not isinstance(decomposition, BranchDecomposition):
            raise TypeError(f'expected a `BranchDecomposition`, got {type(decomposition)}')

        self._set_num_vertices(decomposition.n)
        self._set_pairs('parents', sorted(decomposition.parents.items()))
        self._set_pairs('leaves', sorted(decomposition.leaves.items()))
        self.base.attributes.set('linear', decomposition.is_linear())

    def get_decomposition(self) -> BranchDecomposition:
        """Return the stored decomposition."""
        return BranchDecomposition(dict(self._get_pairs('parents')), dict(self._get_pairs('leaves')))
