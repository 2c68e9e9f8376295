"""
Circuit Builder Base
Fluent interface for emitting gates over a register layout
"""

import logging
from contextlib import contextmanager
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import Control, GateKind, GateOp
from ..models.layout import RegisterLayout
from ..utils.errors import CircuitError

logger = logging.getLogger(__name__)


class CircuitBuilder:
    """
    Helper class for building circuits.

    Gate methods return the builder so calls chain. Inside a controlled()
    block every emitted gate picks up the block's extra controls.
    """

    def __init__(self, layout: RegisterLayout, name: str = 'circuit'):
        self.layout = layout
        self.name = name
        self._ops: List[GateOp] = []
        self._context: List[Tuple[Control, ...]] = []

    @property
    def num_qubits(self) -> int:
        return self.layout.num_qubits

    @property
    def ops(self) -> List[GateOp]:
        return list(self._ops)

    def q(self, register: str, index: int = 0) -> int:
        return self.layout.qubit(register, index)

    def qubits(self, register: str) -> List[int]:
        return self.layout.qubits(register)

    def equals(self, register: str, value: int) -> Tuple[Control, ...]:
        """Controls that fire when register holds value"""
        return tuple(sorted(self.layout.pattern({register: value}).items()))

    def _extra_controls(self) -> Tuple[Control, ...]:
        return tuple(c for block in self._context for c in block)

    def gate(self, kind: GateKind, target: int, angle: Optional[float] = None,
             controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        """Append one gate, adding the active block controls"""
        op = GateOp(kind, target, angle, tuple(controls) + self._extra_controls())
        op.validate(self.num_qubits)
        self._ops.append(op)
        return self

    def h(self, target: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.H, target, controls=controls)

    def x(self, target: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.X, target, controls=controls)

    def z(self, target: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.Z, target, controls=controls)

    def s(self, target: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.S, target, controls=controls)

    def sdg(self, target: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.SDG, target, controls=controls)

    def ry(self, target: int, angle: float, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.RY, target, angle, controls)

    def rx(self, target: int, angle: float, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        return self.gate(GateKind.RX, target, angle, controls)

    def h_all(self, qubits: Sequence[int]) -> 'CircuitBuilder':
        for qubit in qubits:
            self.h(qubit)
        return self

    def phase_flip(self, qubit: int, bit: int, controls: Iterable[Control] = ()) -> 'CircuitBuilder':
        """Multiply by -1 the component where qubit holds bit (and controls fire)"""
        if bit:
            return self.z(qubit, controls)
        # X Z X flips the |0> component; the bare X pair cancels when controls fail
        return self.x(qubit).z(qubit, controls).x(qubit)

    @contextmanager
    def controlled(self, controls: Iterable[Control]) -> Iterator['CircuitBuilder']:
        """Condition every gate emitted in the block on controls"""
        self._context.append(tuple(controls))
        try:
            yield self
        finally:
            self._context.pop()

    def extend(self, ops: Iterable[GateOp]) -> 'CircuitBuilder':
        for op in ops:
            self.gate(op.kind, op.target, op.angle, op.controls)
        return self

    def qubit_map(self, layout: RegisterLayout,
                  registers: Optional[Mapping[str, str]] = None) -> Dict[int, int]:
        """Map qubits of layout onto this builder's qubits by register name

        Raises:
            CircuitError: If a register is missing or widths differ
        """
        registers = dict(registers or {})
        mapping = {}
        for reg in layout.registers:
            ours = self.layout.register(registers.get(reg.name, reg.name))
            if ours.width != reg.width:
                raise CircuitError(
                    f"Register '{reg.name}' width {reg.width} does not match '{ours.name}' width {ours.width}")
            mapping.update(zip(reg.qubits, ours.qubits))
        return mapping

    def append_circuit(self, circuit: Circuit,
                       registers: Optional[Mapping[str, str]] = None) -> 'CircuitBuilder':
        """Append another circuit's gates, matching its registers onto ours"""
        mapping = self.qubit_map(circuit.layout, registers)
        return self.extend(op.remap(mapping) for op in circuit.ops)

    def build(self, flag: FlagPredicate, **meta) -> Circuit:
        """Finish the circuit with its flag"""
        meta.setdefault('builder', self.name)
        circuit = Circuit(self.layout, list(self._ops), flag, meta)
        circuit.validate()
        logger.debug(f"Built {self.name}: {len(self._ops)} ops on {self.num_qubits} qubits")
        return circuit
