"""
Construction Parameter Models
Angle factors, state-preparation specs, Toeplitz systems and reciprocal plans
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from ..utils.errors import ValidationError
from ..utils.validators import require, validate_choice, validate_integer, validate_numeric

PREP_VARIANTS = ('basic', 'alternative', 'improved', 'complex')


def ceil_log2(value: int) -> int:
    """Smallest m with 2^m >= value (0 for value <= 1)"""
    return max(0, (int(value) - 1).bit_length())


@dataclass(frozen=True)
class AngleFactor:
    """Rotation half-angle whose cosine is the encoded amplitude factor"""
    theta: float

    def __post_init__(self):
        require(validate_numeric(self.theta, "theta", 0.0, math.pi))
        object.__setattr__(self, 'theta', float(self.theta))

    @classmethod
    def from_cosine(cls, value: float) -> 'AngleFactor':
        require(validate_numeric(value, "cosine", -1.0, 1.0))
        return cls(math.acos(value))

    @property
    def cos(self) -> float:
        return math.cos(self.theta)

    @property
    def sin(self) -> float:
        return math.sin(self.theta)


@dataclass(frozen=True)
class PrepSpec:
    """Black-box state preparation parameters"""
    n: int
    variant: str = 'improved'
    m: int = field(init=False)

    def __post_init__(self):
        require(validate_integer(self.n, "n", min_value=2),
                validate_choice(self.variant, PREP_VARIANTS, "variant"))
        object.__setattr__(self, 'n', int(self.n))
        m = self.n if self.variant == 'alternative' else ceil_log2(self.n)
        object.__setattr__(self, 'm', m)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'n': self.n, 'variant': self.variant, 'm': self.m}


@dataclass(frozen=True)
class ToeplitzSystem:
    """Tridiagonal Toeplitz matrix with 2y on the diagonal and -1 beside it, size 2^n - 1"""
    n: int
    y: float

    def __post_init__(self):
        require(validate_integer(self.n, "n", min_value=1, max_value=30),
                validate_numeric(self.y, "y"))
        if float(self.y) < 2:
            if float(self.y) == 1:
                raise ValidationError("y = 1 is the Poisson case, which is not supported; y must be >= 2")
            raise ValidationError(f"y must be >= 2 so every eigenvalue is bounded away from zero, got {self.y}")
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'y', float(self.y))

    @property
    def size(self) -> int:
        return 2 ** self.n - 1

    @property
    def phi(self) -> float:
        """Angle with cos(phi) = 1/y"""
        return math.acos(1.0 / self.y)

    def check_index(self, j: int) -> int:
        require(validate_integer(j, "j", min_value=1, max_value=self.size))
        return int(j)

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'n': self.n, 'y': self.y, 'size': self.size}


@dataclass(frozen=True)
class ReciprocalPlan:
    """Truncation plan of the product-form reciprocal: m factors, k = 2^m series terms"""
    m: int
    n: Optional[int] = None
    y: Optional[float] = None

    def __post_init__(self):
        require(validate_integer(self.m, "m", min_value=1, max_value=10))
        object.__setattr__(self, 'm', int(self.m))

    @classmethod
    def for_system(cls, system: ToeplitzSystem) -> 'ReciprocalPlan':
        """Plan with m = ceil(log2(4n + 6 + log2 y))"""
        m = math.ceil(math.log2(4 * system.n + 6 + math.log2(system.y)))
        return cls(m=m, n=system.n, y=system.y)

    @property
    def k(self) -> int:
        return 2 ** self.m

    @property
    def eps_bound(self) -> float:
        return 2.0 ** (-self.k + 1)

    def matches(self, system: ToeplitzSystem) -> bool:
        """True when the plan was made for this system or is system-agnostic"""
        return ((self.n is None or self.n == system.n)
                and (self.y is None or self.y == system.y))

    def to_dict(self) -> dict:
        """Convert to dictionary"""
        return {'m': self.m, 'k': self.k, 'eps_bound': self.eps_bound}
