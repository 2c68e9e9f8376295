"""
Circuit and Flag Predicate Models
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

from .gate import GateOp
from .layout import RegisterLayout
from ..utils.errors import CircuitError, FlagError


@dataclass(frozen=True)
class FlagPredicate:
    """Required bits on a subset of qubits; other qubits are free"""
    constraints: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        constraints = tuple((int(q), int(b)) for q, b in self.constraints)
        qubits = [q for q, _ in constraints]
        if len(set(qubits)) != len(qubits):
            raise FlagError(f"Flag constrains a qubit twice: {constraints}")
        for q, bit in constraints:
            if bit not in (0, 1):
                raise FlagError(f"Flag bit must be 0 or 1, got {bit} on qubit {q}")
        object.__setattr__(self, 'constraints', constraints)

    @classmethod
    def from_bits(cls, bits: Mapping[int, int]) -> 'FlagPredicate':
        return cls(tuple(sorted(bits.items())))

    @classmethod
    def on_registers(cls, layout: RegisterLayout, values: Mapping[str, int]) -> 'FlagPredicate':
        """Flag requiring each named register to hold the given value"""
        return cls.from_bits(layout.pattern(values))

    @property
    def qubits(self) -> List[int]:
        return [q for q, _ in self.constraints]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.constraints)

    def shifted(self, mapping: Mapping[int, int]) -> 'FlagPredicate':
        """Move the constraints onto other qubit indices"""
        return FlagPredicate(tuple((mapping[q], b) for q, b in self.constraints))

    def merged(self, other: 'FlagPredicate') -> 'FlagPredicate':
        """Conjunction of two predicates over disjoint qubits"""
        overlap = set(self.qubits) & set(other.qubits)
        if overlap:
            raise FlagError(f"Flag predicates overlap on qubits {sorted(overlap)}")
        return FlagPredicate(self.constraints + other.constraints)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'constraints': [[q, b] for q, b in self.constraints]}


@dataclass
class Circuit:
    """Ordered gate list over a register layout, with the flag that carries its result"""
    layout: RegisterLayout
    ops: List[GateOp] = field(default_factory=list)
    flag: FlagPredicate = field(default_factory=FlagPredicate)
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def num_qubits(self) -> int:
        return self.layout.num_qubits

    def validate(self) -> None:
        """Check every op and the flag against the layout

        Raises:
            CircuitError: If an op or flag references an undeclared qubit
        """
        n = self.num_qubits
        for op in self.ops:
            op.validate(n)
        for q in self.flag.qubits:
            if not 0 <= q < n:
                raise CircuitError(f"Flag qubit {q} out of range for {n} qubits")

    def inverse_ops(self) -> List[GateOp]:
        """Gate list of the inverse circuit"""
        return [op.inverse() for op in reversed(self.ops)]

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            'layout': self.layout.to_dict(),
            'ops': [op.to_dict() for op in self.ops],
            'flag': self.flag.to_dict(),
            'meta': dict(self.meta),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Circuit':
        """Create from dictionary"""
        return cls(
            layout=RegisterLayout.from_dict(data['layout']),
            ops=[GateOp.from_dict(op) for op in data.get('ops', [])],
            flag=FlagPredicate(tuple(tuple(c) for c in data.get('flag', {}).get('constraints', []))),
            meta=dict(data.get('meta', {})),
        )
