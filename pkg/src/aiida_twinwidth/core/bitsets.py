# -*- coding: utf-8 -*-
"""Bit-vector helpers.

Vertex sets and neighbourhoods are python integers: bit `v` is set iff vertex (or part id) `v` belongs to the set.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

__all__ = ('to_mask', 'iter_bits', 'bits', 'popcount', 'lowest_bit')


def to_mask(elements: Iterable[int] | int) -> int:
    """Return the bit mask of the given elements; an integer is taken as an already built mask."""
    if isinstance(elements, int):
        return elements

    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> tuple[int, ...]:
    """Return the positions of the set bits of `mask` as a sorted tuple."""
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    """Return the number of set bits."""
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Return the position of the lowest set bit of a non-zero mask."""
    return (mask & -mask).bit_length() - 1
