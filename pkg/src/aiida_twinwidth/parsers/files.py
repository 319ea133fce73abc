# -*- coding: utf-8 -*-
"""Read and write the text formats from and to files, piping the parser logs into a logger."""
from __future__ import annotations

import logging
import pathlib

from aiida.common.log import AIIDA_LOGGER

from aiida_twinwidth.utils.mapping import emit_logs

from .raw_parsers import formats

__all__ = ('read_graph', 'read_sequence', 'read_decomposition', 'read_matrix', 'write_text', 'SERIALIZERS')

LOGGER = AIIDA_LOGGER.getChild('twinwidth')

SERIALIZERS = {
    'graph': formats.serialize_graph,
    'sequence': formats.serialize_sequence,
    'decomposition': formats.serialize_decomposition,
    'matrix': formats.serialize_matrix,
}


def _read(parser, path: str | pathlib.Path, logger: logging.Logger | None):
    text = pathlib.Path(path).read_text(encoding='utf-8')
    parsed, logs = parser(text)
    emit_logs(logger or LOGGER, logs)
    return parsed


def read_graph(path, logger: logging.Logger | None = None):
    """Return the :class:`~aiida_twinwidth.core.trigraph.Graph` stored in a graph file."""
    return _read(formats.parse_graph, path, logger)


def read_sequence(path, logger: logging.Logger | None = None):
    """Return the :class:`~aiida_twinwidth.core.trigraph.ContractionSequence` stored in a sequence file."""
    return _read(formats.parse_sequence, path, logger)


def read_decomposition(path, logger: logging.Logger | None = None):
    """Return the :class:`~aiida_twinwidth.core.decompositions.BranchDecomposition` stored in a decomposition file."""
    return _read(formats.parse_decomposition, path, logger)


def read_matrix(path, logger: logging.Logger | None = None):
    """Return the matrix stored in a matrix file as a `numpy` array."""
    return _read(formats.parse_matrix, path, logger)


def write_text(kind: str, value, path: str | pathlib.Path | None = None) -> str:
    """Serialize `value` with the serializer of `kind` and write it to `path`, if given.

    :return: the serialized text
    """
    text = SERIALIZERS[kind](value)
    if path is not None:
        pathlib.Path(path).write_text(text, encoding='utf-8')
    return text
