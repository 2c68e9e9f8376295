"""
Gate Operation Model
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from ..utils.errors import CircuitError

_SQRT1_2 = 1 / np.sqrt(2)


class GateKind(str, Enum):
    """Supported single-target gate kinds"""
    H = 'h'
    X = 'x'
    Z = 'z'
    S = 's'
    SDG = 'sdg'
    RY = 'ry'
    RX = 'rx'

    @property
    def is_rotation(self) -> bool:
        return self in (GateKind.RY, GateKind.RX)


_FIXED_MATRICES = {
    GateKind.H: np.array([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]], dtype=np.complex128),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=np.complex128),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=np.complex128),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=np.complex128),
}

_INVERSE_KIND = {
    GateKind.H: GateKind.H,
    GateKind.X: GateKind.X,
    GateKind.Z: GateKind.Z,
    GateKind.S: GateKind.SDG,
    GateKind.SDG: GateKind.S,
}


def ry_matrix(angle: float) -> np.ndarray:
    """Ry(angle) = exp(-i angle Y / 2); Ry(2t)|0> = cos t|0> + sin t|1>"""
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def rx_matrix(angle: float) -> np.ndarray:
    """Rx(angle) = exp(-i angle X / 2)"""
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


Control = Tuple[int, int]


@dataclass(frozen=True)
class GateOp:
    """One gate application: a 2x2 unitary on target, conditioned on controls.

    controls holds (qubit, polarity) pairs; polarity 1 fires on |1>, 0 on |0>.
    """
    kind: GateKind
    target: int
    angle: Optional[float] = None
    controls: Tuple[Control, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'kind', GateKind(self.kind))
        object.__setattr__(self, 'controls', tuple((int(q), int(p)) for q, p in self.controls))
        if self.kind.is_rotation:
            if self.angle is None:
                raise CircuitError(f"{self.kind.value} gate requires an angle")
            object.__setattr__(self, 'angle', float(self.angle))
        elif self.angle is not None:
            raise CircuitError(f"{self.kind.value} gate takes no angle")

    @property
    def qubits(self) -> Tuple[int, ...]:
        return tuple(q for q, _ in self.controls) + (self.target,)

    @property
    def num_controls(self) -> int:
        return len(self.controls)

    def matrix(self) -> np.ndarray:
        """Return the 2x2 target unitary"""
        if self.kind is GateKind.RY:
            return ry_matrix(self.angle)
        if self.kind is GateKind.RX:
            return rx_matrix(self.angle)
        return _FIXED_MATRICES[self.kind]

    def validate(self, num_qubits: int) -> None:
        """Check qubit range and distinctness

        Raises:
            CircuitError: If an index is out of range or qubits overlap
        """
        qubits = self.qubits
        for q in qubits:
            if not 0 <= q < num_qubits:
                raise CircuitError(f"Qubit index {q} out of range for {num_qubits} qubits in {self}")
        if len(set(qubits)) != len(qubits):
            raise CircuitError(f"Control and target qubits overlap in {self}")
        for q, polarity in self.controls:
            if polarity not in (0, 1):
                raise CircuitError(f"Control polarity must be 0 or 1, got {polarity} on qubit {q}")

    def remap(self, mapping: Dict[int, int]) -> 'GateOp':
        """Return the gate moved onto other qubit indices"""
        return GateOp(self.kind, mapping[self.target], self.angle,
                      tuple((mapping[q], p) for q, p in self.controls))

    def inverse(self) -> 'GateOp':
        if self.kind.is_rotation:
            return GateOp(self.kind, self.target, -self.angle, self.controls)
        return GateOp(_INVERSE_KIND[self.kind], self.target, None, self.controls)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        data = {'kind': self.kind.value, 'target': self.target,
                'controls': [[q, p] for q, p in self.controls]}
        if self.angle is not None:
            data['angle'] = self.angle
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'GateOp':
        """Create from dictionary"""
        return cls(GateKind(data['kind']), data['target'], data.get('angle'),
                   tuple(tuple(c) for c in data.get('controls', [])))

    def __str__(self) -> str:
        angle = f"({self.angle:.6g})" if self.angle is not None else ""
        controls = ",".join(f"{'' if p else '!'}{q}" for q, p in self.controls)
        prefix = f"c[{controls}]-" if controls else ""
        return f"{prefix}{self.kind.value}{angle} q{self.target}"
