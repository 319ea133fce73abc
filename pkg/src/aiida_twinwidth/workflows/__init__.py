# -*- coding: utf-8 -*-
"""Workflows of aiida-twinwidth."""
