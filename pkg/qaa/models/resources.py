"""
Resource Report Model
"""

from dataclasses import dataclass, field
from typing import Dict


@dataclass(frozen=True)
class ResourceReport:
    """Qubit and gate counts of one circuit under a named cost model

    counts holds '1q', '2q', 'toffoli' and 'multi_controlled' (gates with two or
    more controls other than a plain Toffoli). rotations_by_controls maps a
    control count k >= 1 to the number of k-controlled Ry/Rx gates.
    """
    total_qubits: int
    extra_qubits: int
    counts: Dict[str, int] = field(default_factory=dict)
    rotations_by_controls: Dict[int, int] = field(default_factory=dict)
    toffoli_equivalent: int = 0
    ancillas_required: int = 0
    cost_model: str = 'default'

    @property
    def multi_controlled_rotations(self) -> int:
        return sum(count for k, count in self.rotations_by_controls.items() if k >= 2)

    @property
    def total_gates(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        """Convert to dictionary (JSON-safe keys)"""
        return {
            'total_qubits': self.total_qubits,
            'extra_qubits': self.extra_qubits,
            'counts': dict(self.counts),
            'controlled_rotations': {str(k): v for k, v in sorted(self.rotations_by_controls.items())},
            'multi_controlled_rotations': self.multi_controlled_rotations,
            'toffoli_equivalent': self.toffoli_equivalent,
            'ancillas_required': self.ancillas_required,
            'cost_model': self.cost_model,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ResourceReport':
        """Create from dictionary"""
        return cls(
            total_qubits=data['total_qubits'],
            extra_qubits=data['extra_qubits'],
            counts=dict(data.get('counts', {})),
            rotations_by_controls={int(k): v for k, v in data.get('controlled_rotations', {}).items()},
            toffoli_equivalent=data.get('toffoli_equivalent', 0),
            ancillas_required=data.get('ancillas_required', 0),
            cost_model=data.get('cost_model', 'default'),
        )
