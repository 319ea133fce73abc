# -*- coding: utf-8 -*-
"""AiiDA plugin and toolkit for contraction sequences and twin-width measures."""
__version__ = '0.1.0'
