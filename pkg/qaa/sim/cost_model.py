"""
Gate Cost Model and Resource Counting
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import GateKind, GateOp
from ..models.layout import Register, RegisterKind
from ..models.resources import ResourceReport
from ..utils.errors import CircuitError

logger = logging.getLogger(__name__)

ANCILLA_REGISTER = 'mcx_anc'


def gate_class(op: GateOp) -> str:
    """Classify a gate as '1q', '2q', 'toffoli' or 'multi_controlled'"""
    if op.num_controls == 0:
        return '1q'
    if op.num_controls == 1:
        return '2q'
    if op.num_controls == 2 and op.kind is GateKind.X:
        return 'toffoli'
    return 'multi_controlled'


@dataclass(frozen=True)
class CostModel:
    """How gates with two or more controls are priced and decomposed.

    The default model lowers a c-controlled gate (c >= 2, other than a plain
    Toffoli) to a ladder of 2(c-1) Toffolis into c-1 ancillas plus one
    singly-controlled copy of the gate. The native model treats every
    multi-controlled gate as one primitive.
    """
    name: str = 'default'
    native_multi_control: bool = False

    @classmethod
    def default(cls) -> 'CostModel':
        return cls('default', False)

    @classmethod
    def native(cls) -> 'CostModel':
        return cls('native', True)

    @classmethod
    def by_name(cls, name: str) -> 'CostModel':
        models = {'default': cls.default, 'native': cls.native}
        if name not in models:
            raise CircuitError(f"Unknown cost model '{name}'; choose from {sorted(models)}")
        return models[name]()

    def is_elementary(self, op: GateOp) -> bool:
        return gate_class(op) != 'multi_controlled' or self.native_multi_control

    def ancillas_needed(self, op: GateOp) -> int:
        return 0 if self.is_elementary(op) else op.num_controls - 1

    def toffoli_cost(self, op: GateOp) -> int:
        cls = gate_class(op)
        if cls == 'toffoli':
            return 1
        if cls != 'multi_controlled':
            return 0
        return 1 if self.native_multi_control else 2 * (op.num_controls - 1)

    def decompose(self, op: GateOp, ancillas: Sequence[int]) -> List[GateOp]:
        """Lower op onto Toffolis and one singly-controlled gate

        Control polarities are kept on the Toffolis that read them; ancillas
        are returned to |0> by the mirrored ladder.

        Raises:
            CircuitError: If too few ancillas are supplied
        """
        if self.is_elementary(op):
            return [op]
        needed = op.num_controls - 1
        if len(ancillas) < needed:
            raise CircuitError(f"{op} needs {needed} ancillas, got {len(ancillas)}")
        controls = op.controls
        ladder = [GateOp(GateKind.X, ancillas[0], controls=(controls[0], controls[1]))]
        for i in range(1, needed):
            ladder.append(GateOp(GateKind.X, ancillas[i],
                                 controls=(controls[i + 1], (ancillas[i - 1], 1))))
        core = GateOp(op.kind, op.target, op.angle, ((ancillas[needed - 1], 1),))
        return ladder + [core] + ladder[::-1]


def decompose_circuit(circuit: Circuit, cost_model: Optional[CostModel] = None) -> Circuit:
    """Rewrite circuit into elementary gates, appending an ancilla register pinned to |0>"""
    cost_model = cost_model or CostModel.default()
    width = max((cost_model.ancillas_needed(op) for op in circuit.ops), default=0)
    if width == 0:
        return Circuit(circuit.layout, list(circuit.ops), circuit.flag, dict(circuit.meta))

    name = ANCILLA_REGISTER
    suffix = 1
    while name in circuit.layout:
        name = f"{ANCILLA_REGISTER}{suffix}"
        suffix += 1
    layout = circuit.layout.extended([Register(name, width, RegisterKind.ANCILLA)])
    ancillas = layout.qubits(name)
    ops = []
    for op in circuit.ops:
        ops.extend(cost_model.decompose(op, ancillas))
    flag = circuit.flag.merged(FlagPredicate(tuple((q, 0) for q in ancillas)))
    meta = dict(circuit.meta, decomposed=cost_model.name, ancilla_register=name)
    return Circuit(layout, ops, flag, meta)


def count_resources(circuit: Circuit, cost_model: Optional[CostModel] = None) -> ResourceReport:
    """Count qubits and gates by class, with Toffoli-equivalents under cost_model"""
    cost_model = cost_model or CostModel.default()
    counts = Counter({'1q': 0, '2q': 0, 'toffoli': 0, 'multi_controlled': 0})
    rotations = Counter()
    toffolis = 0
    ancillas = 0
    for op in circuit.ops:
        counts[gate_class(op)] += 1
        if op.kind.is_rotation and op.num_controls >= 1:
            rotations[op.num_controls] += 1
        toffolis += cost_model.toffoli_cost(op)
        ancillas = max(ancillas, cost_model.ancillas_needed(op))

    report = ResourceReport(
        total_qubits=circuit.layout.num_qubits,
        extra_qubits=circuit.layout.extra_qubits,
        counts=dict(counts),
        rotations_by_controls=dict(rotations),
        toffoli_equivalent=toffolis,
        ancillas_required=ancillas,
        cost_model=cost_model.name,
    )
    logger.debug(f"Resources for {circuit.meta.get('builder', 'circuit')}: {report.to_dict()}")
    return report
