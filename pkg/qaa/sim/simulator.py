"""
Dense Statevector Simulator
Applies the circuit IR to exact double-precision amplitude arrays
"""

import logging
import time
from typing import Mapping, Optional, Union

import numpy as np
import psutil

from ..config import active_config
from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import GateOp
from ..models.state import StateVector
from ..utils.errors import FlagError, SimulationError
from ..utils.logging_config import performance_logger

logger = logging.getLogger(__name__)

Residual = Union[FlagPredicate, Mapping[int, int], str]


def _apply_inplace(tensor: np.ndarray, op: GateOp) -> None:
    """Apply op to a (2,)*n amplitude tensor in place.

    Indexing the control axes with their polarities selects the sub-block on
    which the gate acts; the target axis then shifts left by the number of
    control axes before it.
    """
    index = [slice(None)] * tensor.ndim
    for qubit, polarity in op.controls:
        index[qubit] = polarity
    index = tuple(index)
    block = tensor[index]
    axis = op.target - sum(1 for qubit, _ in op.controls if qubit < op.target)
    updated = np.tensordot(op.matrix(), block, axes=([1], [axis]))
    tensor[index] = np.moveaxis(updated, 0, axis)


class Simulator:
    """Statevector runner bound to one configuration"""

    def __init__(self, config=None):
        config = config or active_config()
        self.max_qubits = config.MAX_QUBITS
        self.check_norm = config.CHECK_NORM
        self.norm_tolerance = config.NORM_TOLERANCE
        self.memory_headroom = config.MEMORY_HEADROOM
        self.slow_threshold = config.SLOW_SIMULATION_THRESHOLD

    def allocate(self, bitstring: str) -> StateVector:
        """Basis state for bitstring, refusing widths beyond the cap or memory

        Raises:
            SimulationError: If the width exceeds MAX_QUBITS or available memory
        """
        num_qubits = len(bitstring)
        if num_qubits > self.max_qubits:
            raise SimulationError(
                f"Circuit needs {num_qubits} qubits, above the simulation cap of {self.max_qubits}")
        size_bytes = 16 * 2 ** num_qubits
        available = psutil.virtual_memory().available
        if size_bytes > self.memory_headroom * available:
            raise SimulationError(
                f"Statevector of {num_qubits} qubits needs {size_bytes / 2**20:.1f} MB; "
                f"only {self.memory_headroom * available / 2**20:.1f} MB allowed")
        performance_logger.log_statevector_allocation(num_qubits, size_bytes / 2**20)
        return StateVector.from_bitstring(bitstring)

    def _assert_norm(self, state: StateVector, op: GateOp) -> None:
        drift = abs(state.norm() - 1.0)
        if drift > self.norm_tolerance:
            raise SimulationError(f"Norm drifted by {drift:.3e} after {op}")

    def apply(self, state: StateVector, op: GateOp) -> StateVector:
        """Return a new state with op applied

        Raises:
            CircuitError: If op is invalid for the state's qubit count
        """
        op.validate(state.num_qubits)
        result = state.copy()
        _apply_inplace(result.tensor(), op)
        if self.check_norm:
            self._assert_norm(result, op)
        return result

    def run(self, circuit: Circuit, input_basis: str) -> StateVector:
        """Apply every op of circuit to the basis state input_basis

        Raises:
            SimulationError: If the bitstring width does not match the layout
        """
        if len(input_basis) != circuit.num_qubits:
            raise SimulationError(
                f"Input width {len(input_basis)} does not match layout width {circuit.num_qubits}")
        circuit.validate()
        state = self.allocate(input_basis)
        tensor = state.tensor()

        start_time = time.perf_counter()
        for op in circuit.ops:
            _apply_inplace(tensor, op)
            if self.check_norm:
                self._assert_norm(state, op)
        execution_time = time.perf_counter() - start_time

        if execution_time > self.slow_threshold:
            performance_logger.log_slow_simulation(
                circuit.meta.get('builder', 'circuit'), circuit.num_qubits, len(circuit.ops),
                execution_time, self.slow_threshold)
        logger.debug(f"Simulated {len(circuit.ops)} ops on {circuit.num_qubits} qubits "
                     f"in {execution_time:.4f}s")
        return state


def apply(state: StateVector, op: GateOp) -> StateVector:
    """Apply one gate with the active configuration"""
    return Simulator().apply(state, op)


def run(circuit: Circuit, input_basis: str) -> StateVector:
    """Run circuit on a basis input with the active configuration"""
    return Simulator().run(circuit, input_basis)


def _residual_bits(residual: Optional[Residual], num_qubits: int) -> dict:
    if residual is None:
        return {}
    if isinstance(residual, FlagPredicate):
        return residual.as_dict()
    if isinstance(residual, str):
        if len(residual) != num_qubits or set(residual) - {'0', '1', 'x'}:
            raise FlagError(f"Residual pattern {residual!r} must use 0/1/x over {num_qubits} qubits")
        return {q: int(c) for q, c in enumerate(residual) if c != 'x'}
    return {int(q): int(b) for q, b in residual.items()}


def flag_amplitude(state: StateVector, flag: FlagPredicate, residual: Optional[Residual] = None) -> complex:
    """Amplitude of the one basis state satisfying flag and residual together

    Raises:
        FlagError: If the patterns overlap or leave a qubit unconstrained
    """
    bits = flag.as_dict()
    extra = _residual_bits(residual, state.num_qubits)
    overlap = set(bits) & set(extra)
    if overlap:
        raise FlagError(f"Flag and residual both constrain qubits {sorted(overlap)}")
    bits.update(extra)
    free = [q for q in range(state.num_qubits) if q not in bits]
    if free:
        raise FlagError(f"Pattern is under-constrained; free qubits {free} match {2 ** len(free)} basis states")
    outside = [q for q in bits if not 0 <= q < state.num_qubits]
    if outside:
        raise FlagError(f"Pattern names qubits {outside} outside a {state.num_qubits}-qubit state")
    index = sum(bit << (state.num_qubits - 1 - q) for q, bit in bits.items())
    return complex(state.amplitudes[index])


def simulate_flag(circuit: Circuit, inputs: Optional[Mapping[str, int]] = None,
                  simulator: Optional[Simulator] = None) -> complex:
    """Run circuit on register inputs and read its flag with the inputs as residual"""
    inputs = dict(inputs or {})
    simulator = simulator or Simulator()
    state = simulator.run(circuit, circuit.layout.encode(inputs))
    return flag_amplitude(state, circuit.flag, circuit.layout.pattern(inputs))
