"""
Register Layout Model
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Tuple

from ..utils.errors import CircuitError


class RegisterKind(str, Enum):
    """Role of a register; data and input registers are not counted as extra qubits"""
    DATA = 'data'
    INPUT = 'input'
    CONTROL = 'control'
    WORK = 'work'
    PARAMETER = 'parameter'
    ANCILLA = 'ancilla'

    @property
    def is_extra(self) -> bool:
        return self not in (RegisterKind.DATA, RegisterKind.INPUT)


@dataclass(frozen=True)
class Register:
    """Named qubit range; the first qubit is the most significant bit"""
    name: str
    width: int
    kind: RegisterKind = RegisterKind.WORK
    offset: int = 0

    @property
    def qubits(self) -> List[int]:
        return list(range(self.offset, self.offset + self.width))

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'name': self.name, 'width': self.width, 'kind': RegisterKind(self.kind).value}


@dataclass(frozen=True)
class RegisterLayout:
    """Ordered registers laid out back to back over the simulator's qubits"""
    registers: Tuple[Register, ...] = field(default_factory=tuple)

    def __post_init__(self):
        placed = []
        offset = 0
        names = set()
        for reg in self.registers:
            if isinstance(reg, (tuple, list)):
                reg = Register(*reg)
            if reg.name in names:
                raise CircuitError(f"Duplicate register name '{reg.name}'")
            if reg.width < 1:
                raise CircuitError(f"Register '{reg.name}' must have width >= 1, got {reg.width}")
            names.add(reg.name)
            placed.append(Register(reg.name, int(reg.width), RegisterKind(reg.kind), offset))
            offset += reg.width
        object.__setattr__(self, 'registers', tuple(placed))

    @classmethod
    def of(cls, *specs: Tuple[str, int, RegisterKind]) -> 'RegisterLayout':
        """Build a layout from (name, width, kind) triples, skipping zero widths"""
        return cls(tuple(Register(name, width, kind) for name, width, kind in specs if width > 0))

    @property
    def num_qubits(self) -> int:
        return sum(reg.width for reg in self.registers)

    @property
    def names(self) -> List[str]:
        return [reg.name for reg in self.registers]

    @property
    def extra_qubits(self) -> int:
        return sum(reg.width for reg in self.registers if reg.kind.is_extra)

    def __contains__(self, name: str) -> bool:
        return any(reg.name == name for reg in self.registers)

    def register(self, name: str) -> Register:
        for reg in self.registers:
            if reg.name == name:
                return reg
        raise CircuitError(f"Unknown register '{name}'; layout has {self.names}")

    def qubits(self, name: str) -> List[int]:
        return self.register(name).qubits

    def qubit(self, name: str, index: int = 0) -> int:
        reg = self.register(name)
        if not 0 <= index < reg.width:
            raise CircuitError(f"Index {index} out of range for register '{name}' of width {reg.width}")
        return reg.offset + index

    def pattern(self, values: Mapping[str, int]) -> Dict[int, int]:
        """Map register values onto per-qubit bits (most significant bit first)"""
        bits = {}
        for name, value in values.items():
            reg = self.register(name)
            value = int(value)
            if not 0 <= value < 2 ** reg.width:
                raise CircuitError(f"Value {value} does not fit register '{name}' of width {reg.width}")
            for t, q in enumerate(reg.qubits):
                bits[q] = (value >> (reg.width - 1 - t)) & 1
        return bits

    def encode(self, values: Mapping[str, int] = None) -> str:
        """Build an input bitstring; registers not named start at zero"""
        bits = self.pattern(values or {})
        return ''.join(str(bits.get(q, 0)) for q in range(self.num_qubits))

    def decode(self, bitstring: str) -> Dict[str, int]:
        """Split a bitstring back into register values"""
        if len(bitstring) != self.num_qubits:
            raise CircuitError(f"Bitstring width {len(bitstring)} does not match layout width {self.num_qubits}")
        return {reg.name: int(bitstring[reg.offset:reg.offset + reg.width], 2) for reg in self.registers}

    def extended(self, registers: Iterable[Register]) -> 'RegisterLayout':
        """Return a layout with registers appended"""
        return RegisterLayout(self.registers + tuple(registers))

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'registers': [reg.to_dict() for reg in self.registers]}

    @classmethod
    def from_dict(cls, data: dict) -> 'RegisterLayout':
        """Create from dictionary"""
        return cls(tuple(Register(r['name'], r['width'], RegisterKind(r.get('kind', 'work')))
                         for r in data['registers']))
