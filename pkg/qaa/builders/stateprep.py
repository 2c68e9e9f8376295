"""
Black-Box State Preparation
Loads an n-bit value x onto the amplitude of a flagged state.

Data qubit i-1 holds bit x_{n-i}, so bit i (counted from the top) carries
weight 1/2^i in x/2^n. Three constructions are provided:

    basic        x/2^(n+m), control register of m = ceil(log2 n) qubits
    alternative  x/2^n, one control qubit per bit grouped by prefix pattern
    improved     x/2^(n+1), m+2 extra qubits, exactly n multi-controlled Ry
    complex      (a + ib)/2^(n+2), improved loads of a (Ry) and b (Rx)
"""

import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..models.circuit import Circuit, FlagPredicate
from ..models.gate import Control, GateKind
from ..models.layout import RegisterKind, RegisterLayout
from ..models.plans import PREP_VARIANTS, PrepSpec, ceil_log2
from ..utils.validators import require, validate_choice, validate_integer
from .base import CircuitBuilder
from .primitives import lcu_combine

logger = logging.getLogger(__name__)

# Per-bit control source: extra controls when the bit is read from a qubit,
# () for a classical 1, None for a classical 0
BitSource = Optional[Tuple[Control, ...]]


def _data_sources(layout: RegisterLayout, register: str) -> List[BitSource]:
    return [((q, 1),) for q in layout.qubits(register)]


def _constant_sources(n: int, value: int) -> List[BitSource]:
    return [() if (value >> (n - 1 - t)) & 1 else None for t in range(n)]


def _emit_prefix_groups(b: CircuitBuilder, ctrl: Sequence[int], sources: Sequence[BitSource],
                        work: int, kind: GateKind) -> None:
    """Group i (1-based) is the control states with prefix 1^(i-1)0; a full turn moves them to work=1"""
    for i, source in enumerate(sources, start=1):
        if source is None:
            continue
        prefix = [(ctrl[t], 1) for t in range(i - 1)] + [(ctrl[i - 1], 0)]
        b.gate(kind, work, math.pi, tuple(prefix) + source)


def _emit_binary_branches(b: CircuitBuilder, register: str, sources: Sequence[BitSource],
                          sines: Sequence[float], work: int, kind: GateKind) -> None:
    """Branch index t of the control register rotates work by 2*arcsin(sines[t]) when its bit is set"""
    for index, (source, sine) in enumerate(zip(sources, sines)):
        if source is None:
            continue
        b.gate(kind, work, 2 * math.asin(sine), b.equals(register, index) + source)


def _flag(layout: RegisterLayout) -> FlagPredicate:
    return FlagPredicate.on_registers(layout, {'control': 0, 'work': 1})


def _improved_parts(layout: RegisterLayout, sources: Sequence[BitSource],
                    kind: GateKind) -> List[Circuit]:
    """Top m bits via prefix groups, remaining n-m bits via binary branches

    Both parts are diagonal in the control register; the Hadamards around
    them are added once by _improved_load.
    """
    n = len(sources)
    m = layout.register('control').width

    first = CircuitBuilder(layout, 'improved_part_one')
    ctrl = first.qubits('control')
    _emit_prefix_groups(first, ctrl, sources[:m], first.q('work'), kind)

    second = CircuitBuilder(layout, 'improved_part_two')
    sines = [2.0 ** (m - k) for k in range(m + 1, n + 1)]
    _emit_binary_branches(second, 'control', sources[m:], sines, second.q('work'), kind)

    return [first.build(_flag(layout)), second.build(_flag(layout))]


def _improved_load(layout: RegisterLayout, sources: Sequence[BitSource],
                   kind: GateKind = GateKind.RY) -> Circuit:
    parts = _improved_parts(layout, sources, kind)
    select = lcu_combine([(1.0, part) for part in parts], m=1, name='lcu')
    # Both parts share H^m on control, applied once outside the selection
    b = CircuitBuilder(select.layout, 'improved_load')
    ctrl = b.qubits('control')
    b.h_all(ctrl)
    b.extend(select.ops)
    b.h_all(ctrl)
    return b.build(select.flag, **select.meta)


def _data_layout(n: int, m: int, data: Sequence[str] = ('data',)) -> RegisterLayout:
    return RegisterLayout.of(*[(name, n, RegisterKind.DATA) for name in data],
                             ('control', m, RegisterKind.CONTROL),
                             ('work', 1, RegisterKind.WORK))


def build_basic(n: int) -> Circuit:
    """Flag control=0^m, work=1 holds (1/2^m)(x/2^n); branch i-1 rotates by 2*arcsin(1/2^i)"""
    spec = PrepSpec(n, 'basic')
    layout = _data_layout(spec.n, spec.m)
    b = CircuitBuilder(layout, 'stateprep_basic')
    ctrl = b.qubits('control')
    b.h_all(ctrl)
    sines = [2.0 ** -i for i in range(1, spec.n + 1)]
    _emit_binary_branches(b, 'control', _data_sources(layout, 'data'), sines, b.q('work'), GateKind.RY)
    b.h_all(ctrl)
    return b.build(_flag(layout), variant='basic', n=spec.n, m=spec.m)


def build_alternative(n: int) -> Circuit:
    """Flag control=0^n, work=1 holds x/2^n; one Ry(pi) per bit on its prefix group"""
    spec = PrepSpec(n, 'alternative')
    layout = _data_layout(spec.n, spec.m)
    b = CircuitBuilder(layout, 'stateprep_alternative')
    ctrl = b.qubits('control')
    b.h_all(ctrl)
    _emit_prefix_groups(b, ctrl, _data_sources(layout, 'data'), b.q('work'), GateKind.RY)
    b.h_all(ctrl)
    return b.build(_flag(layout), variant='alternative', n=spec.n, m=spec.m)


def build_improved(n: int) -> Circuit:
    """Flag lcu=0, control=0^m, work=1 holds x/2^(n+1)"""
    spec = PrepSpec(n, 'improved')
    layout = _data_layout(spec.n, spec.m)
    circuit = _improved_load(layout, _data_sources(layout, 'data'))
    circuit.meta.update(builder='stateprep_improved', variant='improved', n=spec.n, m=spec.m)
    return circuit


def build_complex(n: int) -> Circuit:
    """Flag combine=0, lcu=0, control=0^m, work=1 holds (a + ib)/2^(n+2).

    a sits in data_re and is loaded with Ry; b sits in data_im and is loaded
    with Rx, whose -i is turned into +i by a Z on work inside that branch.
    """
    spec = PrepSpec(n, 'complex')
    layout = _data_layout(spec.n, spec.m, data=('data_re', 'data_im'))
    real = _improved_load(layout, _data_sources(layout, 'data_re'), GateKind.RY)
    imag = _improved_load(layout, _data_sources(layout, 'data_im'), GateKind.RX)

    fixed = CircuitBuilder(imag.layout, 'stateprep_complex_imag')
    fixed.append_circuit(imag).z(fixed.q('work'))
    imag = fixed.build(imag.flag)

    circuit = lcu_combine([(1.0, real), (1.0, imag)], m=1, name='combine')
    circuit.meta.update(builder='stateprep_complex', variant='complex', n=spec.n, m=spec.m)
    return circuit


def load_constant(n: int, value: int) -> Circuit:
    """Improved construction with the bits of value fixed classically.

    Layout lcu(1), control(m), work(1); flag lcu=0, control=0^m, work=1
    holds value/2^(n+1).
    """
    require(validate_integer(n, "n", min_value=2),
            validate_integer(value, "value", min_value=0, max_value=2 ** n - 1))
    layout = RegisterLayout.of(('control', ceil_log2(n), RegisterKind.PARAMETER),
                               ('work', 1, RegisterKind.PARAMETER))
    circuit = _improved_load(layout, _constant_sources(n, value))
    circuit.meta.update(builder='load_constant', n=n, value=value)
    return circuit


BUILDERS: Dict[str, Callable[[int], Circuit]] = {
    'basic': build_basic,
    'alternative': build_alternative,
    'improved': build_improved,
    'complex': build_complex,
}


def prepare(variant: str, n: int) -> Circuit:
    """Build the state-preparation circuit of the named variant"""
    require(validate_choice(variant, PREP_VARIANTS, "variant"))
    return BUILDERS[variant](n)


def closed_form(variant: str, n: int, x: int, b: int = 0) -> complex:
    """Expected flag amplitude for data value x (and imaginary part b)"""
    spec = PrepSpec(n, variant)
    if variant == 'basic':
        return complex(x / 2 ** (spec.n + spec.m))
    if variant == 'alternative':
        return complex(x / 2 ** spec.n)
    if variant == 'improved':
        return complex(x / 2 ** (spec.n + 1))
    return complex(x, b) / 2 ** (spec.n + 2)


def inputs_for(variant: str, x: int, b: int = 0) -> Dict[str, int]:
    """Register inputs of the variant's data registers"""
    if variant == 'complex':
        return {'data_re': x, 'data_im': b}
    return {'data': x}
