"""Exact few-photon simulation of linear-optical mode networks.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (  # noqa: F401
    CircuitDescription,
    CircuitLayout,
    CircuitParseError,
    DetectorGroup,
    ErrorReport,
    GateCircuit,
    PureState,
    RateTable,
    append_bell_analyzer,
    basis_state,
    beamsplitter_matrix,
    bell_detectors,
    bell_error_probability,
    bell_input_state,
    bell_rate_table,
    build_cnot,
    build_cnot_mismatch,
    coincidence_rate,
    compose,
    embed_two_mode,
    enumerate_fock_states,
    inner_product,
    is_unitary,
    logical_detectors,
    logical_input_state,
    logical_rate_table,
    lower_circuit,
    mode_match_matrix,
    parse_circuit,
    postselect_coincidence,
    serialize_circuit,
    sweep_beamsplitter,
    sweep_mismatch,
    transform_state,
    transition_amplitude,
    unitarity_defect,
    vacuum_state,
)

__version__ = "0.1.0"
