# -*- coding: utf-8 -*-
"""Calculations of aiida-twinwidth."""
