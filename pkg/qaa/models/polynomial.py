"""
Piecewise Polynomial, QRAM Stub and Fit Report Models
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..utils.errors import FitError, QramError


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Per-subdomain polynomials in the local coordinate u = (x - b_j)/(b_{j+1} - b_j).

    Coefficients are signed fixed-point values q/2^n_bits stored as integers q
    with |q| <= 2^n_bits - 1; the represented function is output_scale * p(u).
    """
    breakpoints: Tuple[float, ...]
    degree: int
    int_coeffs: Tuple[Tuple[int, ...], ...]
    n_bits: int
    output_scale: float = 1.0
    function: str = 'custom'

    def __post_init__(self):
        breakpoints = tuple(float(b) for b in self.breakpoints)
        if len(breakpoints) < 2:
            raise FitError("At least two breakpoints are required")
        if any(b >= c for b, c in zip(breakpoints, breakpoints[1:])):
            raise FitError(f"Breakpoints must be strictly increasing: {breakpoints}")
        if self.degree < 0:
            raise FitError(f"Degree must be nonnegative, got {self.degree}")
        if self.n_bits < 1:
            raise FitError(f"n_bits must be positive, got {self.n_bits}")
        rows = tuple(tuple(int(q) for q in row) for row in self.int_coeffs)
        if len(rows) != len(breakpoints) - 1:
            raise FitError(f"Expected {len(breakpoints) - 1} coefficient rows, got {len(rows)}")
        limit = 2 ** self.n_bits
        for j, row in enumerate(rows):
            if len(row) != self.degree + 1:
                raise FitError(f"Row {j} has {len(row)} coefficients, expected {self.degree + 1}")
            if any(abs(q) >= limit for q in row):
                raise FitError(f"Row {j} coefficient magnitude must be below 2^{self.n_bits}: {row}")
        object.__setattr__(self, 'breakpoints', breakpoints)
        object.__setattr__(self, 'int_coeffs', rows)
        object.__setattr__(self, 'output_scale', float(self.output_scale))

    @property
    def num_pieces(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def domain(self) -> Tuple[float, float]:
        return self.breakpoints[0], self.breakpoints[-1]

    @property
    def coeffs(self) -> np.ndarray:
        """Coefficient values q/2^n_bits, shape (J, d+1), lowest order first"""
        return np.asarray(self.int_coeffs, dtype=float) / 2 ** self.n_bits

    def subdomain(self, x: float) -> int:
        """Index j with b_j <= x < b_{j+1}"""
        b0, bj = self.domain
        if not b0 <= x < bj:
            raise FitError(f"x = {x} outside the domain [{b0}, {bj})")
        return int(np.searchsorted(self.breakpoints, x, side='right')) - 1

    def local_coordinate(self, j: int, x: float) -> float:
        """Map x in [b_j, b_{j+1}) onto u in [0, 1)"""
        left, right = self.breakpoints[j], self.breakpoints[j + 1]
        if not left <= x < right:
            raise FitError(f"x = {x} outside subdomain {j} [{left}, {right})")
        return (x - left) / (right - left)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            'function': self.function,
            'domain': list(self.domain),
            'degree': self.degree,
            'n_bits': self.n_bits,
            'breakpoints': list(self.breakpoints),
            'coeffs': [list(row) for row in self.int_coeffs],
            'output_scale': self.output_scale,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'PiecewisePolynomial':
        """Create from dictionary"""
        return cls(
            breakpoints=tuple(data['breakpoints']),
            degree=int(data['degree']),
            int_coeffs=tuple(tuple(row) for row in data['coeffs']),
            n_bits=int(data['n_bits']),
            output_scale=float(data.get('output_scale', 1.0)),
            function=data.get('function', 'custom'),
        )


@dataclass(frozen=True)
class QramStub:
    """Classical stand-in for QRAM: coefficient rows keyed by subdomain"""
    table: Dict[int, Tuple[int, ...]]
    n_bits: int
    provenance: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_polynomial(cls, poly: PiecewisePolynomial) -> 'QramStub':
        return cls(
            table={j: row for j, row in enumerate(poly.int_coeffs)},
            n_bits=poly.n_bits,
            provenance={'function': poly.function, 'degree': poly.degree,
                        'pieces': poly.num_pieces, 'n_bits': poly.n_bits},
        )

    def row(self, j: int) -> Tuple[int, ...]:
        """Integer coefficient row of subdomain j

        Raises:
            QramError: If the row is missing
        """
        try:
            return tuple(self.table[j])
        except KeyError:
            raise QramError(f"No coefficient row stored for subdomain {j}") from None


@dataclass
class FitReport:
    """Dense-grid error of each fitted subdomain"""
    max_abs_error: List[float]
    target_eps: float
    iterations: List[int] = field(default_factory=list)
    grid_points: int = 0

    @property
    def worst_error(self) -> float:
        return max(self.max_abs_error) if self.max_abs_error else 0.0

    @property
    def meets_target(self) -> bool:
        return self.worst_error <= self.target_eps

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {
            'max_abs_error': list(self.max_abs_error),
            'target_eps': self.target_eps,
            'iterations': list(self.iterations),
            'grid_points': self.grid_points,
            'meets_target': self.meets_target,
        }

    @classmethod
    def from_dict(cls, data: Optional[dict]) -> 'FitReport':
        """Create from dictionary"""
        data = data or {}
        return cls(
            max_abs_error=[float(e) for e in data.get('max_abs_error', [])],
            target_eps=float(data.get('target_eps', 0.0)),
            iterations=[int(i) for i in data.get('iterations', [])],
            grid_points=int(data.get('grid_points', 0)),
        )
