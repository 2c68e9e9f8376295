"""
Piecewise Minimax Fitting with Fixed-Point Coefficients

Each subdomain is fitted in its local coordinate u in [0, 1]: Chebyshev-node
interpolation seeds a Remez exchange on a dense grid, then coefficients are
rounded one at a time (largest magnitude first) to n-bit fixed point while
the still-free ones are refitted by least squares on the reference points.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..config import active_config
from ..models.polynomial import FitReport, PiecewisePolynomial
from ..utils.errors import FitError
from ..utils.logging_config import oracle_logger
from ..utils.validators import require, validate_integer, validate_numeric

logger = logging.getLogger(__name__)

MAX_DEGREE = 7
MAX_PIECES = 64
EXACT_FIT = 1e-15


def evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate f on an array, falling back to a scalar loop for non-vectorized callables"""
    try:
        values = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        values = None
    if values is None or values.shape != x.shape:
        values = np.array([float(f(v)) for v in x])
    return values


def chebyshev_nodes(count: int) -> np.ndarray:
    """Chebyshev points of the first kind on [0, 1], ascending"""
    k = np.arange(count)
    return np.sort((1 - np.cos((2 * k + 1) * np.pi / (2 * count))) / 2)


def _vander(u: np.ndarray, degree: int) -> np.ndarray:
    return np.vander(u, degree + 1, increasing=True)


def alternating_extrema(error: np.ndarray, count: int) -> Optional[np.ndarray]:
    """Indices of count local extrema of alternating sign, or None if there are too few.

    One extremum is taken per run of constant sign; surplus runs are dropped
    from whichever end has the smaller error.
    """
    signs = np.where(error >= 0, 1, -1)
    runs = np.split(np.arange(error.size), np.flatnonzero(np.diff(signs)) + 1)
    picks = [run[np.argmax(np.abs(error[run]))] for run in runs]
    while len(picks) > count:
        if abs(error[picks[0]]) < abs(error[picks[-1]]):
            picks.pop(0)
        else:
            picks.pop()
    if len(picks) < count:
        return None
    return np.asarray(picks)


def remez(values: np.ndarray, grid: np.ndarray, degree: int, max_iterations: int,
          defect_tolerance: float) -> Tuple[np.ndarray, np.ndarray, int]:
    """Minimax polynomial for samples values on grid

    Returns:
        (coefficients lowest order first, reference points, iterations run)
    """
    nodes = chebyshev_nodes(degree + 1)
    seed = np.interp(nodes, grid, values)
    best = np.linalg.solve(_vander(nodes, degree), seed)
    error = values - P.polyval(grid, best)
    best_error = float(np.max(np.abs(error)))
    reference = chebyshev_nodes(degree + 2)
    if best_error < EXACT_FIT:
        return best, reference, 0

    signs = (-1.0) ** np.arange(degree + 2)
    iterations = 0
    picks = alternating_extrema(error, degree + 2)
    while picks is not None and iterations < max_iterations:
        iterations += 1
        points = grid[picks]
        system = np.column_stack([_vander(points, degree), signs])
        try:
            solution = np.linalg.solve(system, values[picks])
        except np.linalg.LinAlgError:
            logger.debug("Remez reference matrix singular; keeping best fit")
            break
        candidate, level = solution[:-1], abs(solution[-1])
        error = values - P.polyval(grid, candidate)
        max_error = float(np.max(np.abs(error)))
        if max_error < best_error:
            best, best_error, reference = candidate, max_error, points
        defect = (max_error - level) / max_error if max_error > 0 else 0.0
        if defect < defect_tolerance:
            break
        picks = alternating_extrema(error, degree + 2)
    return best, reference, iterations


def _to_fixed(value: float, n_bits: int) -> int:
    """rint(value * 2^n_bits), which must stay within +-(2^n_bits - 1)

    Raises:
        FitError: If the coefficient does not fit n_bits
    """
    q = int(np.rint(value * 2 ** n_bits))
    if abs(q) > 2 ** n_bits - 1:
        raise FitError(f"Coefficient {value:.6g} does not fit {n_bits} fractional bits")
    return q


def quantize_sparse(coeffs: np.ndarray, n_bits: int, points: np.ndarray,
                    targets: np.ndarray) -> List[int]:
    """Round coefficients to n_bits one at a time, refitting the free ones by least squares

    Raises:
        FitError: If a refitted coefficient leaves the representable range
    """
    scale = 2 ** n_bits
    current = np.array(coeffs, dtype=float)
    basis = _vander(points, len(current) - 1)
    fixed = {}
    free = list(range(len(current)))
    while free:
        index = max(free, key=lambda i: abs(current[i]))
        fixed[index] = _to_fixed(current[index], n_bits)
        free.remove(index)
        if free:
            known = list(fixed)
            residual = targets - basis[:, known] @ (np.array([fixed[i] for i in known]) / scale)
            current[free] = np.linalg.lstsq(basis[:, free], residual, rcond=None)[0]
    return [fixed[i] for i in range(len(current))]


def quantize_plain(coeffs: np.ndarray, n_bits: int) -> List[int]:
    """Round each coefficient to n_bits

    Raises:
        FitError: If a coefficient leaves the representable range
    """
    return [_to_fixed(float(c), n_bits) for c in np.asarray(coeffs, dtype=float)]


def output_scale_for(peak: float, coefficient_peak: float = 0.0, n_bits: int = 30) -> float:
    """Smallest power of two s >= 1 with peak / s < 1 and coefficient_peak / s < 1 - 2^-(n_bits+1)

    The second bound keeps every rounded coefficient at most 2^n_bits - 1.
    """
    ceiling = 1.0 - 2.0 ** -(n_bits + 1)
    scale = 1.0
    while peak / scale >= 1.0 or coefficient_peak / scale >= ceiling:
        scale *= 2.0
    return scale


def _max_error(row: Sequence[int], n_bits: int, grid: np.ndarray, values: np.ndarray) -> float:
    return float(np.max(np.abs(values - P.polyval(grid, np.asarray(row, dtype=float) / 2 ** n_bits))))


def fit(f: Callable, domain: Sequence[float], degree: int, pieces: int, n_bits: int,
        eps: float, name: str = 'custom', config=None) -> Tuple[PiecewisePolynomial, FitReport]:
    """Fit f on [b_0, b_J) with pieces equal subdomains of the given degree

    Args:
        f: Vectorized or scalar callable
        domain: (b_0, b_J)
        degree: Polynomial degree d, 0..7
        pieces: Number of subdomains J, 1..64
        n_bits: Fixed-point coefficient bits
        eps: Target maximum error in function units; missing it is logged, not fatal
        name: Function name recorded in the result
        config: Configuration class, default the active one

    Raises:
        FitError: If f is not finite on the domain or the piece count is invalid
        ValidationError: If other parameters are invalid
    """
    config = config or active_config()
    if validate_integer(pieces, "pieces", min_value=1, max_value=MAX_PIECES):
        raise FitError(f"Breakpoint count must give 1..{MAX_PIECES} subdomains, got {pieces}")
    require(validate_integer(degree, "degree", min_value=0, max_value=MAX_DEGREE),
            validate_integer(n_bits, "n_bits", min_value=2, max_value=30),
            validate_numeric(eps, "eps", min_value=0.0))
    b0, bj = (float(v) for v in domain)
    require(validate_numeric(b0, "domain start"), validate_numeric(bj, "domain end"))
    if not b0 < bj:
        raise FitError(f"Domain start {b0} must be below its end {bj}")

    grid_points = max(int(config.FIT_GRID_POINTS), 10000)
    breakpoints = np.linspace(b0, bj, pieces + 1)
    local = np.linspace(0.0, 1.0, grid_points + 1)

    samples, fits = [], []
    for j in range(pieces):
        x = breakpoints[j] + local * (breakpoints[j + 1] - breakpoints[j])
        values = evaluate(f, x)
        if not np.all(np.isfinite(values)):
            raise FitError(f"{name} is unbounded or undefined on [{breakpoints[j]}, {breakpoints[j + 1]}]")
        samples.append(values)
        # Remez is linear in the samples, so the scale can be chosen afterwards
        fits.append(remez(values, local, degree, config.REMEZ_MAX_ITERATIONS, config.REMEZ_DEFECT_TOLERANCE))
    scale = output_scale_for(max(float(np.max(np.abs(v))) for v in samples),
                             max(float(np.max(np.abs(coeffs))) for coeffs, _, _ in fits), n_bits)

    rows, errors, iterations = [], [], []
    for j, (values, (coeffs, reference, count)) in enumerate(zip(samples, fits)):
        scaled = values / scale
        coeffs = coeffs / scale
        targets = np.interp(reference, local, scaled)
        row = quantize_plain(coeffs, n_bits)
        error = _max_error(row, n_bits, local, scaled)
        try:
            sparse = quantize_sparse(coeffs, n_bits, reference, targets)
        except FitError:
            logger.debug(f"{name} subdomain {j}: sparse rounding left the range, keeping plain rounding")
        else:
            sparse_error = _max_error(sparse, n_bits, local, scaled)
            if sparse_error < error:
                row, error = sparse, sparse_error
        rows.append(tuple(row))
        errors.append(error * scale)
        iterations.append(count)
        if error * scale > eps:
            oracle_logger.log_fit_target_missed(name, j, error * scale, eps)

    poly = PiecewisePolynomial(tuple(breakpoints), degree, tuple(rows), n_bits, scale, name)
    report = FitReport(errors, float(eps), iterations, grid_points + 1)
    logger.info(f"Fitted {name}: d={degree}, J={pieces}, n={n_bits}, worst error {report.worst_error:.3e}")
    return poly, report


def eval_classical(poly: PiecewisePolynomial, x: float) -> float:
    """Horner evaluation of the subdomain containing x, in function units"""
    j = poly.subdomain(x)
    u = poly.local_coordinate(j, x)
    return poly.output_scale * float(P.polyval(u, poly.coeffs[j]))


def max_error_on(poly: PiecewisePolynomial, f: Callable, points: np.ndarray) -> float:
    """Largest |f(x) - poly(x)| over the given points"""
    values = evaluate(f, np.asarray(points, dtype=float))
    return max(abs(v - eval_classical(poly, float(x))) for x, v in zip(points, values))
