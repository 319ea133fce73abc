# -*- coding: utf-8 -*-
"""Command line interface of aiida-twinwidth."""
from . import cmd_graph, cmd_matrix, cmd_sequence  # pylint: disable=unused-import
from .root import cmd_root

__all__ = ('cmd_root',)
