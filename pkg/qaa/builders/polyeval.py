"""
Piecewise Polynomial Evaluation on an Amplitude

For subdomain j with integer coefficients q_i (values p_i = q_i/2^n) and
local coordinate u, the four-step circuit

    1. Hadamards on the m = ceil(log2(d+1)) control qubits
    2. controlled on control=|i>, load q_i/2^(n+1) onto the parameter flag
    3. controlled on control=|i>, put u^i on data=0^d
    4. Hadamards on the control qubits again

leaves sum_i q_i u^i / (2^(m+1) 2^n) = p(u)/2^(m+1) on the flag control=0^m,
parameter=(0^l, 0, 1), data=0^d. Coefficient rows are zero-padded to 2^m.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from numpy.polynomial import polynomial as P

from ..config import active_config
from ..models.circuit import Circuit, FlagPredicate
from ..models.layout import RegisterKind, RegisterLayout
from ..models.plans import ceil_log2
from ..models.polynomial import PiecewisePolynomial, QramStub
from ..models.state import complex_to_dict
from ..sim.simulator import Simulator, simulate_flag
from ..utils.errors import ValidationError
from ..utils.logging_config import oracle_logger
from ..utils.validators import require, validate_integer
from .base import CircuitBuilder
from .stateprep import load_constant

logger = logging.getLogger(__name__)

PARAMETER_REGISTERS = {'lcu': 'param_lcu', 'control': 'param_ctrl', 'work': 'param_work'}


def _parameter_registers(n_bits: int):
    return (('param_ctrl', ceil_log2(n_bits), RegisterKind.PARAMETER),
            ('param_lcu', 1, RegisterKind.PARAMETER),
            ('param_work', 1, RegisterKind.PARAMETER))


PARAMETER_FLAG = {'param_ctrl': 0, 'param_lcu': 0, 'param_work': 1}


def qram_load_fragment(qram: QramStub, j: int) -> Circuit:
    """Coefficient loader of subdomain j.

    Controlled on control=|i>, the parameter flag (param_ctrl=0^l,
    param_lcu=0, param_work=1) receives q_i/2^(n+1) = p_i/2; negative
    coefficients get a Z on param_work under the same control.

    Raises:
        QramError: If row j is missing
    """
    row = qram.row(j)
    n = qram.n_bits
    require(validate_integer(n, "n_bits", min_value=2))
    m = ceil_log2(len(row))
    layout = RegisterLayout.of(('control', m, RegisterKind.CONTROL), *_parameter_registers(n))
    b = CircuitBuilder(layout, 'qram_load')
    for i, q in enumerate(row):
        if q == 0:
            continue
        controls = b.equals('control', i) if m else ()
        with b.controlled(controls):
            b.append_circuit(load_constant(n, abs(q)), PARAMETER_REGISTERS)
            if q < 0:
                b.z(b.q('param_work'))
    flag = FlagPredicate.on_registers(layout, PARAMETER_FLAG)
    return b.build(flag, subdomain=j, row=list(row))


def power_gadget(u: float, degree: int) -> Circuit:
    """Controlled on control=|i>, Ry(2 arccos u) on data qubits 0..i-1; data=0^d then holds u^i"""
    require(validate_integer(degree, "degree", min_value=1))
    if not -1.0 <= u <= 1.0:
        raise ValidationError(f"Power gadget needs |u| <= 1, got {u}")
    m = ceil_log2(degree + 1)
    layout = RegisterLayout.of(('control', m, RegisterKind.CONTROL), ('data', degree, RegisterKind.DATA))
    b = CircuitBuilder(layout, 'power_gadget')
    angle = 2 * math.acos(u)
    data = b.qubits('data')
    for i in range(1, degree + 1):
        controls = b.equals('control', i)
        for qubit in data[:i]:
            b.ry(qubit, angle, controls)
    return b.build(FlagPredicate.on_registers(layout, {'data': 0}), u=u)


def build_eval_circuit(poly: PiecewisePolynomial, qram: QramStub, j: int, x: float) -> Circuit:
    """Four-step evaluation circuit of subdomain j at x in [b_j, b_{j+1})

    Raises:
        FitError: If x lies outside subdomain j
        QramError: If row j is missing
    """
    require(validate_integer(j, "j", min_value=0, max_value=poly.num_pieces - 1))
    u = poly.local_coordinate(j, x)
    loader = qram_load_fragment(qram, j)
    d = poly.degree
    m = ceil_log2(d + 1)
    layout = RegisterLayout.of(('control', m, RegisterKind.CONTROL),
                               *_parameter_registers(qram.n_bits),
                               ('data', d, RegisterKind.DATA))
    b = CircuitBuilder(layout, 'polyeval')
    if m:
        b.h_all(b.qubits('control'))
    b.append_circuit(loader)
    if d:
        b.append_circuit(power_gadget(u, d))
    if m:
        b.h_all(b.qubits('control'))

    values = dict(PARAMETER_FLAG)
    if m:
        values['control'] = 0
    if d:
        values['data'] = 0
    return b.build(FlagPredicate.on_registers(layout, values), subdomain=j, u=u, m=m,
                   amplitude_scale=float(2 ** (m + 1)))


def integer_value(row, u: float) -> float:
    """Horner evaluation of sum_i q_i u^i"""
    return float(P.polyval(u, [float(q) for q in row]))


def decode_amplitude(poly: PiecewisePolynomial, amplitude: complex) -> float:
    """Function-units value encoded by a flag amplitude: s * 2^(m+1) * amplitude"""
    m = ceil_log2(poly.degree + 1)
    return poly.output_scale * 2 ** (m + 1) * complex(amplitude).real


@dataclass(frozen=True)
class PolyEvalResult:
    """Simulated and classical value of one evaluation point"""
    x: float
    subdomain: int
    u: float
    flag_amplitude: complex
    oracle_amplitude: float
    integer_oracle: float
    circuit_integer: float
    classical: float
    circuit_value: float
    abs_error: float

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            'x': self.x,
            'subdomain': self.subdomain,
            'u': self.u,
            'flag_amplitude': complex_to_dict(self.flag_amplitude),
            'oracle_amplitude': self.oracle_amplitude,
            'integer_oracle': self.integer_oracle,
            'circuit_integer': self.circuit_integer,
            'classical': self.classical,
            'circuit_value': self.circuit_value,
            'abs_error': self.abs_error,
        }


def evaluate_point(poly: PiecewisePolynomial, x: float, qram: Optional[QramStub] = None,
                   simulator: Optional[Simulator] = None,
                   circuit: Optional[Circuit] = None) -> PolyEvalResult:
    """Pick the subdomain of x, simulate its circuit and compare with Horner evaluation"""
    qram = qram or QramStub.from_polynomial(poly)
    j = poly.subdomain(x)
    circuit = circuit or build_eval_circuit(poly, qram, j, x)
    u = circuit.meta['u']
    amplitude = simulate_flag(circuit, {}, simulator)
    integer_oracle = integer_value(qram.row(j), u)
    denominator = circuit.meta['amplitude_scale'] * 2 ** poly.n_bits
    oracle_amplitude = integer_oracle / denominator
    circuit_integer = amplitude.real * denominator
    classical = poly.output_scale * integer_oracle / 2 ** poly.n_bits
    circuit_value = decode_amplitude(poly, amplitude)

    tolerance = active_config().ORACLE_TOLERANCE
    if abs(amplitude - oracle_amplitude) > tolerance:
        oracle_logger.log_mismatch(f"polyeval {poly.function} x={x}", oracle_amplitude, amplitude, tolerance)
    return PolyEvalResult(x, j, u, amplitude, oracle_amplitude, integer_oracle, circuit_integer,
                          classical, circuit_value, abs(circuit_value - classical))
