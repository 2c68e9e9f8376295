"""
Statevector Model
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from ..utils.errors import SimulationError
from .layout import RegisterLayout


def complex_to_dict(value: complex) -> dict:
    """JSON form of a complex amplitude"""
    value = complex(value)
    return {'re': float(value.real), 'im': float(value.imag)}


@dataclass
class StateVector:
    """Dense amplitude array over num_qubits qubits, qubit 0 most significant"""
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.num_qubits < 1:
            raise SimulationError(f"StateVector needs at least one qubit, got {self.num_qubits}")
        if self.amplitudes.shape != (2 ** self.num_qubits,):
            raise SimulationError(
                f"Amplitude array of shape {self.amplitudes.shape} does not match {self.num_qubits} qubits")

    @classmethod
    def basis(cls, num_qubits: int, index: int = 0) -> 'StateVector':
        amplitudes = np.zeros(2 ** num_qubits, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(num_qubits, amplitudes)

    @classmethod
    def from_bitstring(cls, bitstring: str) -> 'StateVector':
        if not bitstring or set(bitstring) - {'0', '1'}:
            raise SimulationError(f"Invalid basis bitstring {bitstring!r}")
        return cls.basis(len(bitstring), int(bitstring, 2))

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def copy(self) -> 'StateVector':
        return StateVector(self.num_qubits, self.amplitudes.copy())

    def amplitude(self, bitstring: str) -> complex:
        return complex(self.amplitudes[int(bitstring, 2)])

    def tensor(self) -> np.ndarray:
        """View with one axis per qubit"""
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def support(self, threshold: float = 1e-15) -> List[str]:
        """Bitstrings whose amplitude exceeds threshold"""
        return [format(int(index), f'0{self.num_qubits}b')
                for index in np.flatnonzero(np.abs(self.amplitudes) > threshold)]

    def register_values(self, layout: RegisterLayout, threshold: float = 1e-15) -> List[Dict[str, int]]:
        """Register values of every basis state in the support"""
        return [layout.decode(basis) for basis in self.support(threshold)]

    def to_dict(self, threshold: float = 1e-15, layout: Optional[RegisterLayout] = None) -> dict:
        """Convert to dictionary, listing amplitudes above threshold by bitstring

        With a layout each entry also carries its register values.
        """
        entries: List[dict] = []
        for basis in self.support(threshold):
            entry = complex_to_dict(self.amplitude(basis))
            entry['basis'] = basis
            if layout is not None:
                entry['registers'] = layout.decode(basis)
            entries.append(entry)
        return {'num_qubits': self.num_qubits, 'amplitudes': entries}
