# -*- coding: utf-8 -*-
"""Readers and writers of the graph, sequence, decomposition and matrix files."""
