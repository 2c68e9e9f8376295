"""
Amplitude Arithmetic Primitives
Multiplication and addition blocks, the weighted LCU combiner and the
binary-controlled rotation cascade.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import Control, GateKind, GateOp
from ..models.layout import Register, RegisterKind, RegisterLayout
from ..models.plans import AngleFactor, ceil_log2
from ..utils.errors import ValidationError
from ..utils.validators import require, validate_choice, validate_integer, validate_numeric
from .base import CircuitBuilder

logger = logging.getLogger(__name__)

PREPARERS = ('auto', 'hadamard', 'weighted')

Angle = Union[AngleFactor, float]


def _angle_factor(theta: Angle) -> AngleFactor:
    return theta if isinstance(theta, AngleFactor) else AngleFactor(theta)


def multiply_block(thetas: Sequence[Angle]) -> Circuit:
    """Product of cosines on the amplitude of work=0^k, ancilla=1.

    Each work qubit gets Ry(2 theta_t); one k-controlled X with all controls
    on |0> marks the product component in the ancilla.
    """
    if not thetas:
        raise ValidationError("multiply_block needs at least one angle")
    factors = [_angle_factor(t) for t in thetas]
    k = len(factors)
    layout = RegisterLayout.of(('work', k, RegisterKind.WORK), ('anc', 1, RegisterKind.ANCILLA))
    b = CircuitBuilder(layout, 'multiply_block')
    work = b.qubits('work')
    for qubit, factor in zip(work, factors):
        b.ry(qubit, 2 * factor.theta)
    b.x(b.q('anc'), controls=[(qubit, 0) for qubit in work])
    flag = FlagPredicate.on_registers(layout, {'work': 0, 'anc': 1})
    return b.build(flag, closed_form=float(np.prod([f.cos for f in factors])))


def rotation_fragment(theta: Angle, kind: GateKind = GateKind.RY) -> Circuit:
    """One-qubit fragment R(2 theta) with flag |0>, amplitude cos(theta)"""
    factor = _angle_factor(theta)
    layout = RegisterLayout.of(('target', 1, RegisterKind.WORK))
    b = CircuitBuilder(layout, 'rotation')
    b.gate(kind, 0, 2 * factor.theta)
    return b.build(FlagPredicate(((0, 0),)))


def weighted_preparer(weights: Sequence[float]) -> Circuit:
    """Rotation tree mapping |0^m> to sum_i sqrt(w_i / sum w)|i>

    Level l rotates qubit l, uniformly controlled on the l qubits above it;
    zero-angle rotations are omitted.
    """
    probs = np.asarray(weights, dtype=float)
    if probs.ndim != 1 or probs.size < 2 or probs.size & (probs.size - 1):
        raise ValidationError(f"Preparer needs a power-of-two number of weights >= 2, got {probs.size}")
    if np.any(probs < 0) or not np.all(np.isfinite(probs)) or probs.sum() <= 0:
        raise ValidationError("Preparer weights must be finite, nonnegative and not all zero")
    m = ceil_log2(probs.size)
    probs = probs / probs.sum()

    layout = RegisterLayout.of(('combine', m, RegisterKind.CONTROL))
    b = CircuitBuilder(layout, 'weighted_preparer')
    for level in range(m):
        block = 2 ** (m - level)
        for prefix in range(2 ** level):
            chunk = probs[prefix * block:(prefix + 1) * block]
            total = chunk.sum()
            if total <= 0:
                continue
            left = float(np.clip(chunk[:block // 2].sum() / total, 0.0, 1.0))
            angle = 2 * math.acos(math.sqrt(left))
            if angle == 0.0:
                continue
            controls = [(t, (prefix >> (level - 1 - t)) & 1) for t in range(level)]
            b.ry(level, angle, controls)
    return b.build(FlagPredicate())


@dataclass(frozen=True)
class LcuBranch:
    """One addend of an LCU: a positive weight and a fragment, optionally negated"""
    weight: float
    fragment: Circuit
    negate: bool = False


def _branch(item: Union[LcuBranch, Tuple]) -> LcuBranch:
    return item if isinstance(item, LcuBranch) else LcuBranch(*item)


def _register_signature(layout: RegisterLayout) -> List[Tuple[str, int]]:
    return [(reg.name, reg.width) for reg in layout.registers]


def lcu_combine(branches: Sequence[Union[LcuBranch, Tuple]], m: int,
                preparer: str = 'auto', name: str = 'combine') -> Circuit:
    """Prepare-select-unprepare over an m-qubit combiner register.

    All fragments must share their registers and flag. The result's flag is
    combiner=0^m joined with the fragment flag; its amplitude is
    sum_i (p_i/p) a_i with the weighted preparer, or sum_i a_i / 2^m with
    Hadamards, where unused Hadamard branches act as identity.

    Raises:
        ValidationError: On too many branches, nonpositive weights or
            fragments that disagree on registers or flag
    """
    require(validate_integer(m, "m", min_value=1, max_value=16),
            validate_choice(preparer, PREPARERS, "preparer"))
    items = [_branch(item) for item in branches]
    if not items:
        raise ValidationError("lcu_combine needs at least one branch")
    if len(items) > 2 ** m:
        raise ValidationError(f"{len(items)} branches do not fit a {m}-qubit combiner")
    for item in items:
        require(validate_numeric(item.weight, "weight"))
        if item.weight <= 0:
            raise ValidationError(f"Branch weights must be positive, got {item.weight}")

    reference = items[0].fragment
    for item in items[1:]:
        if _register_signature(item.fragment.layout) != _register_signature(reference.layout):
            raise ValidationError("LCU fragments must share the same registers")
        if item.fragment.flag.as_dict() != reference.flag.as_dict():
            raise ValidationError("LCU fragments must share the same flag")
    if any(item.negate for item in items) and not reference.flag.qubits:
        raise ValidationError("A negated branch needs a fragment flag to flip")

    weights = [float(item.weight) for item in items]
    uniform = all(w == weights[0] for w in weights)
    if preparer == 'auto':
        preparer = 'hadamard' if uniform else 'weighted'
    if preparer == 'hadamard' and not uniform:
        raise ValidationError("Hadamard preparation requires equal branch weights")

    combiner = name
    suffix = 1
    while combiner in reference.layout:
        combiner = f"{name}{suffix}"
        suffix += 1
    layout = RegisterLayout((Register(combiner, m, RegisterKind.CONTROL),) + reference.layout.registers)
    b = CircuitBuilder(layout, 'lcu_combine')
    combiner_qubits = b.qubits(combiner)
    fragment_map = b.qubit_map(reference.layout)

    if preparer == 'hadamard':
        prepare_ops: List[GateOp] = [GateOp(GateKind.H, q) for q in combiner_qubits]
        unprepare_ops = list(prepare_ops)
        denominator = float(2 ** m)
    else:
        padded = weights + [0.0] * (2 ** m - len(weights))
        tree = weighted_preparer(padded)
        prep_map = dict(zip(tree.layout.qubits('combine'), combiner_qubits))
        prepare_ops = [op.remap(prep_map) for op in tree.ops]
        unprepare_ops = [op.remap(prep_map) for op in tree.inverse_ops()]
        denominator = float(sum(weights))

    b.extend(prepare_ops)
    flip_qubit, flip_bit = reference.flag.constraints[0] if reference.flag.qubits else (None, None)
    for index, item in enumerate(items):
        with b.controlled(b.equals(combiner, index)):
            b.append_circuit(item.fragment)
            if item.negate:
                b.phase_flip(fragment_map[flip_qubit], flip_bit)
    b.extend(unprepare_ops)

    flag = FlagPredicate(tuple((q, 0) for q in combiner_qubits)).merged(reference.flag.shifted(fragment_map))
    return b.build(flag, normalization=preparer, denominator=denominator,
                   combiner=combiner, branches=len(items))


def add_block(theta1: Angle, theta2: Angle) -> Circuit:
    """(cos theta1 + cos theta2)/2 on |00>: H, two oppositely controlled Ry, H"""
    circuit = lcu_combine([(1.0, rotation_fragment(theta1)), (1.0, rotation_fragment(theta2))], m=1)
    f1, f2 = _angle_factor(theta1), _angle_factor(theta2)
    circuit.meta.update(builder='add_block', closed_form=(f1.cos + f2.cos) / 2)
    return circuit


def emit_binary_controlled_ry(builder: CircuitBuilder, data: Sequence[int], target: int,
                              scale: float, controls: Iterable[Control] = ()) -> CircuitBuilder:
    """Rotate target by scale * j for data register value j, one gate per data bit.

    Data qubit k-1 (most significant first) controls Ry(scale * 2^(n-k)). Always
    n gates, zero-angle ones included.
    """
    n = len(data)
    controls = tuple(controls)
    for k, qubit in enumerate(data, start=1):
        builder.ry(target, scale * 2 ** (n - k), controls + ((qubit, 1),))
    return builder


def binary_controlled_ry(n: int, scale: Optional[float] = None) -> Circuit:
    """Cascade realizing Ry(j*pi/2^(n-1)) on target for data |j>; flag target=0 holds cos(j*pi/2^n)"""
    require(validate_integer(n, "n", min_value=1))
    scale = math.pi / 2 ** (n - 1) if scale is None else float(scale)
    layout = RegisterLayout.of(('data', n, RegisterKind.DATA), ('target', 1, RegisterKind.WORK))
    b = CircuitBuilder(layout, 'binary_controlled_ry')
    emit_binary_controlled_ry(b, b.qubits('data'), b.q('target'), scale)
    return b.build(FlagPredicate.on_registers(layout, {'target': 0}), scale=scale)
