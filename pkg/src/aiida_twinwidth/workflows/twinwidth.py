# -*- coding: utf-8 -*-
"""Workflow building, scoring and verifying contraction sequences of a graph."""
from __future__ import annotations

from aiida import orm
from aiida.common import InputValidationError
from aiida.engine import WorkChain, if_

from aiida_twinwidth.calculations.functions.sequence_utils import (
    build_sequence,
    compute_sequence_width,
    convert_sequence_to_decomposition,
    verify_sequence,
)
from aiida_twinwidth.core.widths import Measure
from aiida_twinwidth.data import BranchDecompositionData, ContractionSequenceData, GraphData
from aiida_twinwidth.utils.defaults import get_default_build_options
from aiida_twinwidth.utils.mapping import _lowercase_dict

#: Order in which equally wide sequences are preferred.
_PRIORITIES = ('exact', 'candidate', 'greedy', 'contractible')


def validate_measure(value, _):
    """Validate the `measure` input."""
    if value.value not in [measure.value for measure in Measure]:
        return f'unknown measure `{value.value}`, valid ones are {[measure.value for measure in Measure]}.'


def validate_inputs(inputs, _):
    """Validate the entire inputs namespace."""
    if 'candidate' in inputs:
        candidate = inputs['candidate']

        if candidate.num_vertices != inputs['graph'].num_vertices:
            return (
                f'the candidate sequence is for {candidate.num_vertices} vertices, '
                f"the graph has {inputs['graph'].num_vertices}."
            )

        if not candidate.is_full:
            return 'the candidate sequence must be full.'


class TwinWidthWorkChain(WorkChain):
    """Workflow looking for a contraction sequence of small width under a given measure.

    The greedy builder always runs; the exact search runs on small graphs, the contractible builder when a bound is
    given, and a candidate sequence given in input is scored as well. The narrowest sequence is verified and exposed,
    together with its width, the report of the builder that produced it and, for the component measure, the branch
    decomposition read off the sequence.
    """

    _ENABLED_BUILD_OPTIONS_FLAGS = {
        'exact_max_vertices': [int],
        'node_budget': [int],
        'with_decomposition': [bool],
        'contractible_bound': [int, None],
        'target_width': [int, None],
    }

    @classmethod
    def define(cls, spec):
        """Define inputs, outputs, and outline."""
        super().define(spec)

        spec.input('graph', valid_type=GraphData, help='The graph to contract.')
        spec.input(
            'measure',
            valid_type=orm.Str,
            default=lambda: orm.Str(Measure.DEGREE.value),
            validator=validate_measure,
            help='The width measure to minimise: `oriented`, `degree`, `component` or `total`.',
        )
        spec.input(
            'candidate',
            valid_type=ContractionSequenceData,
            required=False,
            help='A full contraction sequence of the graph to compete with the built ones.',
        )
        spec.input(
            'build_options',
            valid_type=orm.Dict,
            required=False,
            validator=cls._validate_build_options,
            help=(
                'Options for the sequence builders (optional). The following flags are allowed:\n ' +
                '\n '.join(f'{flag_name}' for flag_name in cls._ENABLED_BUILD_OPTIONS_FLAGS)
            ),
        )
        spec.inputs.validator = validate_inputs

        spec.outline(
            cls.setup,
            cls.run_greedy,
            if_(cls.should_run_exact)(
                cls.run_exact,
            ),
            if_(cls.should_run_contractible)(
                cls.run_contractible,
            ),
            if_(cls.should_score_candidate)(
                cls.score_candidate,
            ),
            cls.results,
        )

        spec.output('sequence', valid_type=ContractionSequenceData, help='The narrowest sequence found.')
        spec.output('width', valid_type=orm.Int, help='The width of the output sequence under the measure.')
        spec.output(
            'report',
            valid_type=orm.Dict,
            required=False,
            help='The report of the builder that produced the output sequence; absent when the candidate wins.'
        )
        spec.output(
            'decomposition',
            valid_type=BranchDecompositionData,
            required=False,
            help='The branch decomposition read off the output sequence, for the component measure.'
        )

        spec.exit_code(
            400,
            'ERROR_SEQUENCE_VERIFICATION_FAILED',
            message='The narrowest sequence has width {width}, above the required {bound}.',
        )
        spec.exit_code(
            401,
            'ERROR_CONTRACTION_STUCK',
            message='The contractible builder got stuck before contracting the whole graph.',
        )

    @classmethod
    def _validate_build_options(cls, value, _):
        """Validate the ``build_options`` input namespace."""
        if value:
            try:
                value_dict = _lowercase_dict(value.get_dict(), 'build_options')
            except InputValidationError as exception:
                return str(exception)

            enabled_dict = cls._ENABLED_BUILD_OPTIONS_FLAGS
            unknown_flags = set(value_dict.keys()) - set(enabled_dict.keys())
            if unknown_flags:
                return (
                    f"Unknown flags in 'build_options': {unknown_flags}, "
                    f'allowed flags are {cls._ENABLED_BUILD_OPTIONS_FLAGS.keys()}.'
                )
            invalid_values = [
                value_dict[key]
                for key in value_dict.keys()
                if not (type(value_dict[key]) in enabled_dict[key] or value_dict[key] in enabled_dict[key])
            ]
            if invalid_values:
                return f'Build options must be of the correct type; got invalid values {invalid_values}.'

    def setup(self):
        """Set up the context with the build options and an empty list of candidates."""
        options = get_default_build_options()
        options.update({'contractible_bound': None, 'target_width': None})

        if 'build_options' in self.inputs:
            options.update(_lowercase_dict(self.inputs.build_options.get_dict(), 'build_options'))

        self.ctx.options = options
        self.ctx.candidates = {}

    def _add_candidate(self, label: str, sequence: ContractionSequenceData, report: orm.Dict | None = None):
        """Score a sequence under the measure and store it in the context."""
        width = compute_sequence_width(graph=self.inputs.graph, sequence=sequence, measure=self.inputs.measure)
        self.ctx.candidates[label] = {'sequence': sequence, 'width': width, 'report': report}
        self.report(f'{label} sequence has {self.inputs.measure.value} width {width.value}')

    def run_greedy(self):
        """Build the greedy sequence."""
        results = build_sequence(
            graph=self.inputs.graph,
            strategy=orm.Str('greedy'),
            parameters=orm.Dict({'measure': self.inputs.measure.value}),
        )
        self._add_candidate('greedy', results['sequence'], results['report'])

    def should_run_exact(self):
        """Return whether the graph is small enough for the exact search."""
        return self.inputs.graph.num_vertices <= self.ctx.options['exact_max_vertices']

    def run_exact(self):
        """Run the exact search, which falls back to the greedy sequence when the budget runs out."""
        results = build_sequence(
            graph=self.inputs.graph,
            strategy=orm.Str('exact'),
            parameters=orm.Dict({
                'measure': self.inputs.measure.value,
                'node_budget': self.ctx.options['node_budget'],
            }),
        )
        if not results['report']['exact']:
            self.report('the exact search ran out of budget, the width is an upper bound')
        self._add_candidate('exact', results['sequence'], results['report'])

    def should_run_contractible(self):
        """Return whether a bound for the contractible builder was given."""
        return self.ctx.options['contractible_bound'] is not None

    def run_contractible(self):
        """Run the contractible builder with the requested bound."""
        results, node = build_sequence.run_get_node(
            graph=self.inputs.graph,
            strategy=orm.Str('contractible'),
            parameters=orm.Dict({'bound': self.ctx.options['contractible_bound']}),
        )

        if not node.is_finished_ok:
            self.report(f'the contractible builder failed: {node.exit_message}')
            return self.exit_codes.ERROR_CONTRACTION_STUCK

        self._add_candidate('contractible', results['sequence'], results['report'])

    def should_score_candidate(self):
        """Return whether a candidate sequence was given in input."""
        return 'candidate' in self.inputs

    def score_candidate(self):
        """Score the input candidate."""
        self._add_candidate('candidate', self.inputs.candidate)

    def results(self):
        """Verify and expose the narrowest sequence."""
        label = min(
            self.ctx.candidates,
            key=lambda label: (self.ctx.candidates[label]['width'].value, _PRIORITIES.index(label)),
        )
        best = self.ctx.candidates[label]
        bound = self.ctx.options['target_width']
        bound = best['width'].value if bound is None else bound

        verification = verify_sequence(
            graph=self.inputs.graph, sequence=best['sequence'], bound=orm.Int(bound), measure=self.inputs.measure
        )

        if not verification['valid']:
            return self.exit_codes.ERROR_SEQUENCE_VERIFICATION_FAILED.format(width=best['width'].value, bound=bound)

        self.out('sequence', best['sequence'])
        self.out('width', best['width'])

        if best['report'] is not None:
            self.out('report', best['report'])

        if self.ctx.options['with_decomposition'] and self.inputs.measure.value == Measure.COMPONENT.value:
            self.out(
                'decomposition',
                convert_sequence_to_decomposition(graph=self.inputs.graph, sequence=best['sequence']),
            )

        self.report(f'exposing the {label} sequence of {self.inputs.measure.value} width {best["width"].value}')
