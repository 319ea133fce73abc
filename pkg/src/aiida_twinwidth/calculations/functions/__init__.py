# -*- coding: utf-8 -*-
"""Calcfunctions of aiida-twinwidth."""
