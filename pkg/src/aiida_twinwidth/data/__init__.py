# -*- coding: utf-8 -*-
"""DataTypes for handling graphs, contraction sequences and branch decompositions."""
from .base import *
from .decomposition import *
from .graph import *
from .sequence import *

__all__ = ('TwinWidthData', 'GraphData', 'ContractionSequenceData', 'BranchDecompositionData')
