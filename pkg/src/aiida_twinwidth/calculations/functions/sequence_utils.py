# -*- coding: utf-8 -*-
"""Calcfunctions wrapping the width, builder, conversion and colouring operations with provenance."""
from __future__ import annotations

from aiida import orm
from aiida.engine import ExitCode, calcfunction
from aiida.plugins import DataFactory

from aiida_twinwidth.core import builders
from aiida_twinwidth.core.coloring import q_coloring_extract
from aiida_twinwidth.core.decompositions import (
    bd_to_sequence,
    linear_bd_to_sequence,
    sequence_to_bd,
    sequence_to_linear_bd,
)
from aiida_twinwidth.core.widths import Measure, sequence_width, verify_d_sequence
from aiida_twinwidth.exceptions import ContractionStuckError
from aiida_twinwidth.utils.defaults import EXACT_NODE_BUDGET

__all__ = (
    'compute_sequence_width', 'verify_sequence', 'build_sequence', 'convert_decomposition_to_sequence',
    'convert_sequence_to_decomposition', 'decide_coloring', 'BUILD_STRATEGIES', 'CalcfunctionMixin'
)

#: Accepted builder parameters, per strategy, with their types.
BUILD_STRATEGIES = {
    'greedy': {'measure': (str,)},
    'exact': {'measure': (str,), 'node_budget': (int,)},
    'contractible': {'bound': (int,), 'predicate': (str,)},
    'partial': {'bound': (int,), 'max_degree': (int,)},
}


@calcfunction
def compute_sequence_width(graph, sequence, measure: orm.Str) -> orm.Int:
    """Return the width of a sequence under a measure."""
    return orm.Int(sequence_width(graph.get_graph(), sequence.get_sequence(), Measure(measure.value)))


@calcfunction
def verify_sequence(graph, sequence, bound: orm.Int, measure: orm.Str) -> orm.Dict:
    """Check a sequence against a width bound and return the first violation, if any."""
    violation = verify_d_sequence(graph.get_graph(), sequence.get_sequence(), bound.value, Measure(measure.value))

    if violation is None:
        return orm.Dict({'valid': True, 'violation': None})

    return orm.Dict({
        'valid': False,
        'violation': {
            'step': violation.step,
            'parts': list(violation.parts),
            'value': violation.value,
        },
    })


@calcfunction
def build_sequence(graph, strategy: orm.Str, parameters: orm.Dict | None = None) -> dict:
    """Build a sequence with one of the `BUILD_STRATEGIES` and return it together with the build report.

    The `contractible` strategy returns the exit code 401 when no admissible pair is left.

    :raises ValueError: for unknown strategies or parameters, or missing required parameters
    """
    ContractionSequenceData = DataFactory('twinwidth.sequence')
    parameters = {} if parameters is None else parameters.get_dict()
    the_graph = graph.get_graph()

    if strategy.value not in BUILD_STRATEGIES:
        raise ValueError(f'unknown strategy `{strategy.value}`, valid ones are {list(BUILD_STRATEGIES)}')

    unknown_keys = set(parameters) - set(BUILD_STRATEGIES[strategy.value])
    if unknown_keys:
        raise ValueError(f'unknown parameters {sorted(unknown_keys)} for the `{strategy.value}` strategy')

    accepted = BUILD_STRATEGIES[strategy.value]
    invalid_keys = [key for key, value in parameters.items() if type(value) not in accepted[key]]
    if invalid_keys:
        raise ValueError(f'parameters {sorted(invalid_keys)} of the `{strategy.value}` strategy have invalid types')

    try:
        if strategy.value == 'greedy':
            report = builders.greedy_sequence(the_graph, parameters.get('measure', Measure.DEGREE.value))
        elif strategy.value == 'exact':
            report = builders.exact_width(
                the_graph,
                parameters.get('measure', Measure.DEGREE.value),
                parameters.get('node_budget', EXACT_NODE_BUDGET),
            )
        elif strategy.value == 'contractible':
            report = builders.contractible_sequence(
                the_graph, parameters['bound'], parameters.get('predicate', 'twins-or-adjacent')
            )
        else:
            report = builders.partial_sequence_to_degree(the_graph, parameters['bound'], parameters['max_degree'])
    except KeyError as exception:
        raise ValueError(f'the `{strategy.value}` strategy requires the parameter {exception}') from exception
    except ContractionStuckError as exception:
        return ExitCode(401, f'the contractible builder is stuck: {exception}')

    return {
        'sequence': ContractionSequenceData(sequence=report.sequence),
        'report': orm.Dict(report.as_dict()),
    }


@calcfunction
def convert_decomposition_to_sequence(graph, decomposition, bound: orm.Int):
    """Return the sequence guided by a branch decomposition of boolean-width at most `bound`.

    Linear decompositions are converted with the linear converter, which gives total width bounds.
    """
    ContractionSequenceData = DataFactory('twinwidth.sequence')
    the_decomposition = decomposition.get_decomposition()

    if decomposition.linear:
        sequence = linear_bd_to_sequence(graph.get_graph(), the_decomposition, bound.value)
    else:
        sequence = bd_to_sequence(graph.get_graph(), the_decomposition, bound.value)

    return ContractionSequenceData(sequence=sequence)


@calcfunction
def convert_sequence_to_decomposition(graph, sequence, linear: orm.Bool | None = None):
    """Return the branch decomposition, linear if requested, read off a full contraction sequence."""
    BranchDecompositionData = DataFactory('twinwidth.decomposition')
    convert = sequence_to_linear_bd if linear is not None and linear.value else sequence_to_bd
    return BranchDecompositionData(decomposition=convert(graph.get_graph(), sequence.get_sequence()))


@calcfunction
def decide_coloring(graph, sequence, colors: orm.Int, bound: orm.Int) -> orm.Dict:
    """Decide whether the graph is `colors`-colourable and return a colouring when it is."""
    coloring = q_coloring_extract(graph.get_graph(), sequence.get_sequence(), colors.value, bound.value)

    return orm.Dict({
        'colorable': coloring is not None,
        'coloring': None if coloring is None else {str(vertex): color for vertex, color in coloring.items()},
    })


class CalcfunctionMixin:
    """Set of calcfunctions to be called from the aiida-twinwidth DataTypes.

    The node the namespace is accessed from fills its own role (`graph`, `sequence` or `decomposition`); the other
    nodes are passed as keyword arguments.
    """

    def __init__(self, data_node):
        """Instantiate the class."""
        self._data_node = data_node

    def _nodes(self, **nodes) -> dict:
        roles = {
            'twinwidth.graph': 'graph',
            'twinwidth.sequence': 'sequence',
            'twinwidth.decomposition': 'decomposition',
        }
        for entry_point, role in roles.items():
            if isinstance(self._data_node, DataFactory(entry_point)):
                nodes[role] = self._data_node
        return {role: node for role, node in nodes.items() if node is not None}

    def compute_sequence_width(self, measure: str, graph=None, sequence=None) -> orm.Int:
        """Get the width of the sequence under `measure` through a calcfunction."""
        return compute_sequence_width(**self._nodes(graph=graph, sequence=sequence), measure=orm.Str(measure))

    def verify_sequence(self, bound: int, measure: str, graph=None, sequence=None) -> orm.Dict:
        """Verify the sequence against `bound` through a calcfunction."""
        return verify_sequence(
            **self._nodes(graph=graph, sequence=sequence), bound=orm.Int(bound), measure=orm.Str(measure)
        )

    def build_sequence(self, strategy: str, parameters: dict | None = None) -> dict:
        """Build a sequence of the graph through a calcfunction."""
        inputs = {'graph': self._nodes()['graph'], 'strategy': orm.Str(strategy)}
        if parameters is not None:
            inputs['parameters'] = orm.Dict(parameters)
        return build_sequence(**inputs)

    def convert_decomposition_to_sequence(self, bound: int, graph=None, decomposition=None):
        """Get the sequence guided by the decomposition through a calcfunction."""
        return convert_decomposition_to_sequence(
            **self._nodes(graph=graph, decomposition=decomposition), bound=orm.Int(bound)
        )

    def convert_sequence_to_decomposition(self, linear: bool = False, graph=None, sequence=None):
        """Get the branch decomposition of the sequence through a calcfunction."""
        return convert_sequence_to_decomposition(**self._nodes(graph=graph, sequence=sequence), linear=orm.Bool(linear))

    def decide_coloring(self, colors: int, bound: int, graph=None, sequence=None) -> orm.Dict:
        """Decide the colourability of the graph along the sequence through a calcfunction."""
        return decide_coloring(
            **self._nodes(graph=graph, sequence=sequence), colors=orm.Int(colors), bound=orm.Int(bound)
        )
