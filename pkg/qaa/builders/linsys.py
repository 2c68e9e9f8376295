"""
Eigenvalue Reciprocals of the Tridiagonal Toeplitz Matrix

The matrix has 2y on the diagonal and -1 on both off-diagonals, so
lambda_j = 2(y - cos(j pi / 2^n)). With x_j = lambda_j / (2y) and
t = cos(j pi / 2^n) / y = 1 - x_j, the truncated series for 1/x_j folds into
the product prod_{i<m} (1 + t^(2^i)) = sum_{s<2^m} t^s.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy import sparse
from scipy.special import comb

from ..config import active_config
from ..models.circuit import Circuit, FlagPredicate
from ..models.layout import Register, RegisterKind, RegisterLayout
from ..models.plans import AngleFactor, ReciprocalPlan, ToeplitzSystem
from ..models.state import complex_to_dict
from ..sim.simulator import Simulator, simulate_flag
from ..utils.errors import NumericalError, ValidationError
from ..utils.logging_config import oracle_logger
from ..utils.validators import require, validate_choice, validate_integer, validate_open_interval
from .base import CircuitBuilder
from .primitives import LcuBranch, emit_binary_controlled_ry, lcu_combine, multiply_block

logger = logging.getLogger(__name__)

MAX_DENSE_SIZE = 4095
TAIL_TERMS = 256
RECIPROCAL_VARIANTS = ('compact', 'product')


def eigenvalue(system: ToeplitzSystem, j: int) -> float:
    """lambda_j = 2(y - cos(j pi / 2^n))"""
    j = system.check_index(j)
    return 2.0 * (system.y - math.cos(j * math.pi / 2 ** system.n))


def normalized_eigenvalue(system: ToeplitzSystem, j: int) -> float:
    """x_j = lambda_j / (2y), inside (1/2, 3/2) for y >= 2"""
    return eigenvalue(system, j) / (2.0 * system.y)


def toeplitz_matrix(system: ToeplitzSystem) -> sparse.csr_matrix:
    size = system.size
    if size == 1:
        return sparse.csr_matrix([[2 * system.y]])
    return sparse.diags([-np.ones(size - 1), 2 * system.y * np.ones(size), -np.ones(size - 1)],
                        [-1, 0, 1], format='csr')


def eigenpair_residual(system: ToeplitzSystem, j: int) -> float:
    """||A v - lambda_j v|| / ||v|| for v_k = sin(j k pi / 2^n), k = 1..N"""
    j = system.check_index(j)
    if system.size > MAX_DENSE_SIZE:
        raise ValidationError(f"Matrix size {system.size} exceeds {MAX_DENSE_SIZE}")
    k = np.arange(1, system.size + 1)
    v = np.sin(j * k * math.pi / 2 ** system.n)
    residual = toeplitz_matrix(system) @ v - eigenvalue(system, j) * v
    return float(np.linalg.norm(residual) / np.linalg.norm(v))


def _ratio(system: ToeplitzSystem, j: int) -> float:
    return math.cos(system.check_index(j) * math.pi / 2 ** system.n) / system.y


def product_form(t: float, m: int) -> float:
    """prod_{i<m} (1 + t^(2^i))"""
    result = 1.0
    power = t
    for _ in range(m):
        result *= 1.0 + power
        power *= power
    return result


def reciprocal_product(system: ToeplitzSystem, j: int, plan: ReciprocalPlan) -> float:
    """Truncated product approximating 1/x_j within plan.eps_bound"""
    _check_plan(system, plan)
    return product_form(_ratio(system, j), plan.m)


def achieved_error(system: ToeplitzSystem, j: int, plan: ReciprocalPlan) -> float:
    """|product - 1/x_j| for this plan"""
    return abs(reciprocal_product(system, j, plan) - 1.0 / normalized_eigenvalue(system, j))


def truncation_tail(x: float, k: int) -> float:
    """Exact tail sum_{i>=k} (1-x)^i = (1-x)^k / x"""
    return (1.0 - x) ** k / x


def truncation_error_bound(x: float, k: int) -> float:
    """Bound 2^(-k+1) on the series tail for x in (1/2, 3/2)

    Raises:
        ValidationError: If x is outside the open interval or k < 1
        NumericalError: If the explicit partial tail exceeds the bound
    """
    require(validate_open_interval(x, 0.5, 1.5, "x"),
            validate_integer(k, "k", min_value=1))
    bound = 2.0 ** (-k + 1)
    partial = abs(np.sum((1.0 - x) ** np.arange(k, k + TAIL_TERMS)))
    if partial > bound:
        raise NumericalError(f"Tail {partial:.3e} exceeds bound {bound:.3e} at x={x}, k={k}")
    return bound


def reciprocal_weights(y: float, m: int) -> np.ndarray:
    """Weights W_r with sum_{s<2^m} (cos(phi) cos(a))^s = sum_r W_r cos(r a), cos(phi) = 1/y.

    Uses cos^s(a) = 2^-s sum_l C(s, l) cos((s - 2l) a); every W_r is positive.
    """
    k = 2 ** m
    half = 0.5 / y
    weights = np.zeros(k)
    for s in range(k):
        scale = half ** s
        for l in range(s + 1):
            weights[abs(s - 2 * l)] += scale * comb(s, l, exact=True)
    return weights


def _check_plan(system: ToeplitzSystem, plan: ReciprocalPlan) -> None:
    if not plan.matches(system):
        raise ValidationError(f"Plan for n={plan.n}, y={plan.y} does not match system n={system.n}, y={system.y}")


def _cosine_multiple_fragment(n: int, r: int) -> Circuit:
    layout = RegisterLayout.of(('data', n, RegisterKind.DATA), ('target', 1, RegisterKind.WORK))
    b = CircuitBuilder(layout, f'cosine_multiple_{r}')
    # cos(0) = 1 branch is the identity
    if r:
        emit_binary_controlled_ry(b, b.qubits('data'), b.q('target'), r * math.pi / 2 ** (n - 1))
    return b.build(FlagPredicate.on_registers(layout, {'target': 0}))


def _zero_fragment(n: int) -> Circuit:
    layout = RegisterLayout.of(('data', n, RegisterKind.DATA), ('target', 1, RegisterKind.WORK))
    b = CircuitBuilder(layout, 'zero_branch')
    b.ry(b.q('target'), math.pi)
    return b.build(FlagPredicate.on_registers(layout, {'target': 0}))


def build_reciprocal_circuit(system: ToeplitzSystem, plan: Optional[ReciprocalPlan] = None,
                             variant: str = 'compact') -> Circuit:
    """Flag control=0^(m+1), target=0 holds 2^-m prod_{i<m}(1 + (cos(phi) cos(j pi/2^n))^(2^i)).

    One weighted LCU over m+1 combiner qubits: branch r < 2^m turns the
    target by r*j*pi/2^(n-1) through the binary-controlled cascade, so its
    flag is cos(r j pi / 2^n); branch 2^m is a zero branch taking the weight
    2^m - sum W_r so the normalization is exactly 2^m.

    variant='product' builds the factor-by-factor circuit instead.
    """
    require(validate_choice(variant, RECIPROCAL_VARIANTS, "variant"))
    if variant == 'product':
        return build_reciprocal_product_circuit(system, plan)
    plan = plan or ReciprocalPlan.for_system(system)
    _check_plan(system, plan)
    weights = reciprocal_weights(system.y, plan.m)
    filler = plan.k - float(weights.sum())
    if filler <= 0:
        raise NumericalError(f"Branch weights {weights.sum():.6g} leave no room below 2^m = {plan.k}")

    branches = [LcuBranch(float(w), _cosine_multiple_fragment(system.n, r)) for r, w in enumerate(weights)]
    branches.append(LcuBranch(filler, _zero_fragment(system.n)))
    circuit = lcu_combine(branches, m=plan.m + 1, preparer='weighted', name='control')
    circuit.meta.update(builder='reciprocal', variant='compact', n=system.n, y=system.y, m=plan.m,
                        amplitude_scale=float(plan.k))
    logger.debug(f"Reciprocal circuit n={system.n} y={system.y} m={plan.m}: "
                 f"{circuit.num_qubits} qubits, {len(circuit.ops)} ops")
    return circuit


def _identity_factor_fragment(i: int, n: int) -> Circuit:
    """Flag of the power fragment reached with amplitude 1"""
    layout = _factor_layout(i, n)
    b = CircuitBuilder(layout, f'identity_factor_{i}')
    b.x(b.q(f'mark{i}'))
    return b.build(_factor_flag(layout, i))


def _factor_layout(i: int, n: int) -> RegisterLayout:
    width = 2 ** i
    return RegisterLayout.of(('data', n, RegisterKind.DATA),
                             (f'angle{i}', width, RegisterKind.WORK),
                             (f'phase{i}', width, RegisterKind.WORK),
                             (f'mark{i}', 1, RegisterKind.ANCILLA))


def _factor_flag(layout: RegisterLayout, i: int) -> FlagPredicate:
    return FlagPredicate.on_registers(layout, {f'angle{i}': 0, f'phase{i}': 0, f'mark{i}': 1})


def _power_fragment(i: int, system: ToeplitzSystem) -> Circuit:
    """(cos(phi) cos(j pi/2^n))^(2^i) on its flag, cos(phi) = 1/y

    Each angle qubit carries one cascade; the 2^i copies of cos(phi) come
    from one multiply_block whose marker lands in mark.
    """
    n = system.n
    layout = _factor_layout(i, n)
    b = CircuitBuilder(layout, f'power_factor_{i}')
    for qubit in b.qubits(f'angle{i}'):
        emit_binary_controlled_ry(b, b.qubits('data'), qubit, math.pi / 2 ** (n - 1))
    phi = AngleFactor.from_cosine(1.0 / system.y)
    b.append_circuit(multiply_block([phi] * 2 ** i), registers={'work': f'phase{i}', 'anc': f'mark{i}'})
    return b.build(_factor_flag(layout, i))


def build_reciprocal_product_circuit(system: ToeplitzSystem,
                                     plan: Optional[ReciprocalPlan] = None) -> Circuit:
    """Flag of every factor holds 2^-m prod_{i<m}(1 + (cos(phi) cos(j pi/2^n))^(2^i)).

    Factor i is a Hadamard LCU of the identity and the power fragment, so
    its flag carries (1 + t^(2^i)) / 2. The factors share only the data
    register, read as controls, so their flags multiply. Uses
    n + 2m + 2(2^m - 1) qubits, which limits simulation to small m.
    """
    plan = plan or ReciprocalPlan.for_system(system)
    _check_plan(system, plan)
    factors = [lcu_combine([(1.0, _identity_factor_fragment(i, system.n)), (1.0, _power_fragment(i, system))],
                           m=1, name=f'lcu{i}')
               for i in range(plan.m)]

    registers = [Register('data', system.n, RegisterKind.DATA)]
    for factor in factors:
        registers.extend(reg for reg in factor.layout.registers if reg.name != 'data')
    layout = RegisterLayout(tuple(registers))
    b = CircuitBuilder(layout, 'reciprocal_product')
    flag = FlagPredicate()
    for factor in factors:
        b.append_circuit(factor)
        flag = flag.merged(factor.flag.shifted(b.qubit_map(factor.layout)))
    circuit = b.build(flag, variant='product', n=system.n, y=system.y, m=plan.m,
                      amplitude_scale=float(plan.k))
    logger.debug(f"Product reciprocal circuit n={system.n} y={system.y} m={plan.m}: "
                 f"{circuit.num_qubits} qubits, {len(circuit.ops)} ops")
    return circuit


@dataclass(frozen=True)
class ReciprocalResult:
    """Classical and simulated reciprocal of one eigenvalue"""
    j: int
    eigenvalue: float
    inverse: float
    product: float
    flag_amplitude: complex
    circuit_amp_scaled: float
    abs_err: float
    product_err: float
    eps_bound: float

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            'j': self.j,
            'lambda': self.eigenvalue,
            'inverse': self.inverse,
            'product': self.product,
            'flag_amplitude': complex_to_dict(self.flag_amplitude),
            'circuit_amp_scaled': self.circuit_amp_scaled,
            'abs_err': self.abs_err,
            'product_err': self.product_err,
            'eps_bound': self.eps_bound,
        }


def evaluate_reciprocal(system: ToeplitzSystem, j: int, plan: Optional[ReciprocalPlan] = None,
                        circuit: Optional[Circuit] = None,
                        simulator: Optional[Simulator] = None,
                        variant: str = 'compact') -> ReciprocalResult:
    """Simulate the reciprocal circuit on data |j> and compare with the classical values"""
    plan = plan or ReciprocalPlan.for_system(system)
    circuit = circuit or build_reciprocal_circuit(system, plan, variant)
    lam = eigenvalue(system, j)
    inverse = 2.0 * system.y / lam
    product = reciprocal_product(system, j, plan)
    amplitude = simulate_flag(circuit, {'data': j}, simulator)
    scaled = plan.k * amplitude.real

    tolerance = active_config().ORACLE_TOLERANCE
    if abs(scaled - product) > tolerance:
        oracle_logger.log_mismatch(f"reciprocal n={system.n} y={system.y} j={j}",
                                   product, scaled, tolerance)
    return ReciprocalResult(
        j=j,
        eigenvalue=lam,
        inverse=inverse,
        product=product,
        flag_amplitude=amplitude,
        circuit_amp_scaled=scaled,
        abs_err=abs(scaled - inverse),
        product_err=abs(scaled - product),
        eps_bound=plan.eps_bound,
    )


def reciprocal_sweep(system: ToeplitzSystem, plan: Optional[ReciprocalPlan] = None,
                     workers: Optional[int] = None, variant: str = 'compact') -> List[ReciprocalResult]:
    """Evaluate every j in parallel; results come back ordered by j"""
    plan = plan or ReciprocalPlan.for_system(system)
    circuit = build_reciprocal_circuit(system, plan, variant)
    simulator = Simulator()
    workers = workers or active_config().SWEEP_WORKERS
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(
            lambda j: evaluate_reciprocal(system, j, plan, circuit, simulator),
            range(1, system.size + 1)))
