"""
OpenQASM 2.0 Export and Import
Export lowers multi-controlled gates with the default cost model; import
parses through qiskit and maps instructions back onto GateOps.
"""

import logging
import math
from typing import Iterable, List, Mapping, Optional, Tuple

from qiskit import qasm2

from ..config import active_config
from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import GateKind, GateOp
from ..models.layout import Register, RegisterKind, RegisterLayout
from ..utils.errors import QasmError
from ..utils.logging_config import oracle_logger
from .cost_model import CostModel, decompose_circuit
from .simulator import Simulator, flag_amplitude, simulate_flag

logger = logging.getLogger(__name__)

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";'

# Controlled rotations are not part of qelib1; Rx = S^dagger Ry S
GATE_DEFINITIONS = (
    'gate c_ry(theta) c,t { ry(theta/2) t; cx c,t; ry(-theta/2) t; cx c,t; }\n'
    'gate c_rx(theta) c,t { s t; c_ry(theta) c,t; sdg t; }'
)

_UNCONTROLLED = {GateKind.H: 'h', GateKind.X: 'x', GateKind.Z: 'z', GateKind.S: 's',
                 GateKind.SDG: 'sdg', GateKind.RY: 'ry', GateKind.RX: 'rx'}
_SINGLY_CONTROLLED = {GateKind.H: 'ch', GateKind.X: 'cx', GateKind.Z: 'cz',
                      GateKind.RY: 'c_ry', GateKind.RX: 'c_rx'}
_PHASE = {GateKind.S: math.pi / 2, GateKind.SDG: -math.pi / 2}


def _qubit_names(layout: RegisterLayout) -> List[str]:
    names = []
    for reg in layout.registers:
        names.extend(f"{reg.name}[{i}]" for i in range(reg.width))
    return names


def _statement(op: GateOp, names: List[str]) -> str:
    args = [names[q] for q, _ in op.controls] + [names[op.target]]
    if op.num_controls == 0:
        gate = _UNCONTROLLED[op.kind]
    elif op.num_controls == 1 and op.kind in _PHASE:
        return f"cu1({_PHASE[op.kind]!r}) {', '.join(args)};"
    elif op.num_controls == 1:
        gate = _SINGLY_CONTROLLED[op.kind]
    elif op.num_controls == 2 and op.kind is GateKind.X:
        gate = 'ccx'
    else:
        raise QasmError(f"{op} is not an elementary gate")
    if op.angle is not None:
        gate = f"{gate}({op.angle!r})"
    return f"{gate} {', '.join(args)};"


def _emit(op: GateOp, names: List[str]) -> Iterable[str]:
    flips = [f"x {names[q]};" for q, polarity in op.controls if polarity == 0]
    positive = GateOp(op.kind, op.target, op.angle, tuple((q, 1) for q, _ in op.controls))
    return flips + [_statement(positive, names)] + flips


def export_qasm(circuit: Circuit) -> str:
    """Render circuit as OpenQASM 2.0 text, one qreg per register

    Raises:
        QasmError: If a gate cannot be expressed
    """
    circuit.validate()
    lowered = decompose_circuit(circuit, CostModel.default())
    names = _qubit_names(lowered.layout)
    lines = [HEADER, GATE_DEFINITIONS]
    lines.extend(f"qreg {reg.name}[{reg.width}];" for reg in lowered.layout.registers)
    for op in lowered.ops:
        lines.extend(_emit(op, names))
    logger.debug(f"Exported {len(lowered.ops)} elementary gates on {lowered.num_qubits} qubits")
    return '\n'.join(lines) + '\n'


def _phase_kind(angle: float) -> GateKind:
    for kind, value in _PHASE.items():
        if math.isclose(angle, value, abs_tol=1e-12):
            return kind
    raise QasmError(f"cu1({angle}) has no counterpart in the gate set")


def _to_op(name: str, params: List[float], qubits: List[int]) -> GateOp:
    angle = float(params[0]) if params else None
    if name in ('h', 'x', 'z', 's', 'sdg'):
        return GateOp(GateKind(name), qubits[0])
    if name in ('ry', 'rx'):
        return GateOp(GateKind(name), qubits[0], angle)
    if name in ('cx', 'cz', 'ch'):
        return GateOp(GateKind(name[1]), qubits[1], controls=((qubits[0], 1),))
    if name in ('c_ry', 'c_rx'):
        return GateOp(GateKind(name[2:]), qubits[1], angle, ((qubits[0], 1),))
    if name == 'cu1':
        return GateOp(_phase_kind(angle), qubits[1], controls=((qubits[0], 1),))
    if name == 'ccx':
        return GateOp(GateKind.X, qubits[2], controls=((qubits[0], 1), (qubits[1], 1)))
    raise QasmError(f"Unsupported instruction '{name}'")


def import_qasm(text: str, kinds: Optional[Mapping[str, RegisterKind]] = None) -> Circuit:
    """Parse OpenQASM 2.0 text into a Circuit with an empty flag

    Args:
        text: Program text
        kinds: Optional register kinds by name; unnamed registers become ancillas

    Raises:
        QasmError: If the text does not parse or uses unsupported instructions
    """
    try:
        qc = qasm2.loads(text)
    except qasm2.QASM2ParseError as e:
        raise QasmError(f"Could not parse OpenQASM: {e}") from e

    kinds = dict(kinds or {})
    layout = RegisterLayout(tuple(Register(reg.name, reg.size, kinds.get(reg.name, RegisterKind.ANCILLA))
                                  for reg in qc.qregs))
    ops = []
    for instruction in qc.data:
        name = instruction.operation.name
        if name == 'barrier':
            continue
        qubits = [qc.find_bit(q).index for q in instruction.qubits]
        ops.append(_to_op(name, list(instruction.operation.params), qubits))
    return Circuit(layout, ops, FlagPredicate(), {'builder': 'qasm-import'})


def roundtrip_flag_amplitude(circuit: Circuit, inputs: Optional[Mapping[str, int]] = None,
                             simulator: Optional[Simulator] = None) -> Tuple[complex, complex]:
    """Flag amplitude simulated directly and after export/import

    The decomposition ancillas are pinned to |0> in both input and flag.
    """
    inputs = dict(inputs or {})
    simulator = simulator or Simulator()
    direct = simulate_flag(circuit, inputs, simulator)

    imported = import_qasm(export_qasm(circuit),
                           {reg.name: reg.kind for reg in circuit.layout.registers})
    pinned = [q for q in range(circuit.num_qubits, imported.num_qubits)]
    flag = circuit.flag.merged(FlagPredicate(tuple((q, 0) for q in pinned)))
    state = simulator.run(imported, imported.layout.encode(inputs))
    roundtrip = flag_amplitude(state, flag, imported.layout.pattern(inputs))

    tolerance = active_config().ROUNDTRIP_TOLERANCE
    if abs(direct - roundtrip) > tolerance:
        oracle_logger.log_mismatch(circuit.meta.get('builder', 'circuit') + ' qasm round-trip',
                                   direct, roundtrip, tolerance)
    return direct, roundtrip
