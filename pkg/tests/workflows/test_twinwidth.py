# -*- coding: utf-8 -*-
"""Tests for the :mod:`aiida_twinwidth.workflows.twinwidth` module."""
from aiida import orm
from aiida.engine import run_get_node
import pytest

from aiida_twinwidth.core.widths import Measure, verify_d_sequence
from aiida_twinwidth.workflows.twinwidth import TwinWidthWorkChain, validate_inputs, validate_measure


@pytest.fixture
def generate_workchain_inputs(generate_graph_data):
    """Return the inputs of a `TwinWidthWorkChain`."""

    def _generate_workchain_inputs(graph_id='path', measure='degree', build_options=None):
        """Return the inputs of a `TwinWidthWorkChain`."""
        inputs = {'graph': generate_graph_data(graph_id), 'measure': orm.Str(measure)}
        if build_options is not None:
            inputs['build_options'] = orm.Dict(build_options)
        return inputs

    return _generate_workchain_inputs


@pytest.mark.usefixtures('aiida_profile')
def test_run(generate_workchain_inputs, generate_graph):
    """Test a default run on the path, whose degree width is 1."""
    results, node = run_get_node(TwinWidthWorkChain, **generate_workchain_inputs())

    assert node.is_finished_ok
    assert results['width'].value == 1
    assert results['sequence'].is_full
    assert results['report']['exact']
    assert 'decomposition' not in results
    assert verify_d_sequence(generate_graph('path'), results['sequence'].get_sequence(), 1, Measure.DEGREE) is None


@pytest.mark.usefixtures('aiida_profile')
def test_run_decomposition(generate_workchain_inputs):
    """Test that the decomposition is exposed for the component measure when requested."""
    inputs = generate_workchain_inputs(measure='component', build_options={'with_decomposition': True})
    results, node = run_get_node(TwinWidthWorkChain, **inputs)

    assert node.is_finished_ok
    assert results['decomposition'].num_vertices == 4


@pytest.mark.usefixtures('aiida_profile')
def test_run_candidate(generate_workchain_inputs, generate_sequence_data, generate_graph):
    """Test that a candidate sequence competes with the greedy one."""
    inputs = generate_workchain_inputs('figure', build_options={'exact_max_vertices': 0})
    inputs['candidate'] = generate_sequence_data('figure')
    results, node = run_get_node(TwinWidthWorkChain, **inputs)

    assert node.is_finished_ok
    assert results['width'].value <= 2
    assert verify_d_sequence(
        generate_graph('figure'), results['sequence'].get_sequence(), results['width'].value, Measure.DEGREE
    ) is None


@pytest.mark.usefixtures('aiida_profile')
def test_run_contractible(generate_workchain_inputs):
    """Test that the contractible builder competes when a bound is given."""
    inputs = generate_workchain_inputs(measure='oriented', build_options={'contractible_bound': 2})
    results, node = run_get_node(TwinWidthWorkChain, **inputs)

    assert node.is_finished_ok
    assert results['width'].value <= 1


@pytest.mark.usefixtures('aiida_profile')
def test_run_verification_failed(generate_workchain_inputs):
    """Test that a target width below the best width found gives the exit code 400."""
    _, node = run_get_node(TwinWidthWorkChain, **generate_workchain_inputs(build_options={'target_width': 0}))

    assert node.exit_status == TwinWidthWorkChain.exit_codes.ERROR_SEQUENCE_VERIFICATION_FAILED.status
    assert 'width 1, above the required 0' in node.exit_message


@pytest.mark.usefixtures('aiida_profile')
def test_run_contraction_stuck(generate_workchain_inputs):
    """Test that a stuck contractible builder gives the exit code 401."""
    _, node = run_get_node(TwinWidthWorkChain, **generate_workchain_inputs(build_options={'contractible_bound': 0}))

    assert node.exit_status == TwinWidthWorkChain.exit_codes.ERROR_CONTRACTION_STUCK.status


@pytest.mark.usefixtures('aiida_profile')
def test_validate_inputs(generate_graph_data, generate_sequence_data, generate_sequence):
    """Test the validation of the candidate sequence."""
    from aiida_twinwidth.data import ContractionSequenceData

    assert validate_inputs({'graph': generate_graph_data('figure')}, None) is None
    assert validate_inputs({
        'graph': generate_graph_data('figure'),
        'candidate': generate_sequence_data('figure')
    }, None) is None

    inputs = {'graph': generate_graph_data('path'), 'candidate': generate_sequence_data('figure')}
    message = validate_inputs(inputs, None)
    assert 'is for 7 vertices, the graph has 4' in message

    partial = ContractionSequenceData(sequence=generate_sequence('figure').prefix(2))
    message = validate_inputs({'graph': generate_graph_data('figure'), 'candidate': partial}, None)
    assert message == 'the candidate sequence must be full.'


@pytest.mark.usefixtures('aiida_profile')
def test_validate_measure():
    """Test the validation of the measure."""
    assert validate_measure(orm.Str('total'), None) is None
    assert 'unknown measure `width`' in validate_measure(orm.Str('width'), None)


@pytest.mark.usefixtures('aiida_profile')
@pytest.mark.parametrize(
    'build_options, message', (
        ({'node_budget': 10, 'contractible_bound': None}, None),
        ({'unknown': 1}, "Unknown flags in 'build_options'"),
        ({'node_budget': 'many'}, 'got invalid values'),
        ({'Target_Width': 1, 'target_width': 2}, 'repeated more than once'),
    )
)
def test_validate_build_options(build_options, message):
    """Test the validation of the `build_options` input."""
    result = TwinWidthWorkChain._validate_build_options(orm.Dict(build_options), None)

    if message is None:
        assert result is None
    else:
        assert message in result
