# -*- coding: utf-8 -*-
"""Module defining the class for contraction sequences."""
from __future__ import annotations

from aiida_twinwidth.core.trigraph import ContractionSequence
from aiida_twinwidth.exceptions import InvalidInputError

from .base import TwinWidthData

__all__ = ('ContractionSequenceData',)


class ContractionSequenceData(TwinWidthData):  # pylint: disable=too-many-ancestors
    """A full or partial contraction sequence, the `k`-th row of `steps` creating the part `num_vertices + k`."""

    def __init__(self, sequence: ContractionSequence | None = None, **kwargs):
        """Instantiate the class.

        :param sequence: a :class:`~aiida_twinwidth.core.trigraph.ContractionSequence`
        """
        super().__init__(**kwargs)

        if sequence is not None:
            self.set_sequence(sequence)

    @property
    def steps(self) -> list[tuple[int, int]]:
        """Get the contracted pairs."""
        return self._get_pairs('steps')

    @property
    def is_full(self) -> bool:
        """Get whether the sequence contracts the graph down to a single part."""
        return self.base.attributes.get('is_full')

    def set_sequence(self, sequence: ContractionSequence):
        """Set the sequence.

        :raises TypeError: if `sequence` is not a `ContractionSequence`
        """
        self._if_can_modify()

        if not isinstance(sequence, ContractionSequence):
            raise TypeError(f'expected a `ContractionSequence`, got {type(sequence)}')

        self._set_num_vertices(sequence.num_vertices)
        self._set_pairs('steps', list(sequence.steps))
        self.base.attributes.set('is_full', sequence.is_full)

    def get_sequence(self) -> ContractionSequence:
        """Return the stored sequence.

        :raises ValueError: if the stored steps do not form a valid sequence
        """
        try:
            return ContractionSequence(self.num_vertices, self.steps)
        except InvalidInputError as exception:
            raise ValueError(str(exception)) from exception
