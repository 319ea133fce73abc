# -*- coding: utf-8 -*-
"""Module defining the base class of the twin-width data types."""
from __future__ import annotations

from aiida.orm.nodes.data import ArrayData
import numpy as np

__all__ = ('TwinWidthData',)


def _get_valid_pairs(pairs, name: str) -> np.ndarray:
    """Return `pairs` as an integer array of shape (k, 2).

    :raises TypeError: if the pairs are not integers
    :raises ValueError: if the array is not of the correct shape
    """
    if not isinstance(pairs, (list, tuple, np.ndarray)):
        raise TypeError(f'`{name}` must be a list, tuple or numpy.ndarray of pairs')

    array = np.array(pairs)

    if array.size == 0:
        return np.zeros((0, 2), dtype=int)

    if array.ndim != 2 or array.shape[1] != 2:
        raise ValueError(f'`{name}` must have shape (k, 2), got {array.shape}')

    if not np.issubdtype(array.dtype, np.integer):
        raise TypeError(f'`{name}` must only contain integers')

    return array.astype(int)


class TwinWidthData(ArrayData):  # pylint: disable=too-many-ancestors
    """Base class of the data types storing graphs, sequences and decompositions as integer arrays."""

    @property
    def num_vertices(self) -> int:
        """Get the number of vertices of the underlying graph."""
        return self.base.attributes.get('num_vertices')

    def _set_num_vertices(self, value: int):
        """Set the number of vertices."""
        self._if_can_modify()

        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise TypeError('the number of vertices must be an integer')
        if value < 0:
            raise ValueError('the number of vertices must be non negative')

        self.base.attributes.set('num_vertices', int(value))

    def _set_pairs(self, name: str, pairs):
        """Set an integer array of shape (k, 2)."""
        self._if_can_modify()
        self.set_array(name, _get_valid_pairs(pairs, name))

    def _get_pairs(self, name: str) -> list[tuple[int, int]]:
        """Get an array of pairs as a list of tuples of python integers."""
        return [(int(first), int(second)) for first, second in self.get_array(name)]

    @property
    def calcfunctions(self):
        """Namespace to access the calcfunction utilities."""
        from aiida_twinwidth.calculations.functions.sequence_utils import CalcfunctionMixin

        return CalcfunctionMixin(data_node=self)

    def _if_can_modify(self):
        """Check if the object is stored and raise an error if so. To use in every setter."""
        from aiida.common.exceptions import ModificationNotAllowed

        if self.is_stored:
            raise ModificationNotAllowed(
                f'The {self.__class__.__name__} object cannot be modified, it has already been stored'
            )
