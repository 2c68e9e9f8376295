"""
Toolkit Exceptions
Exception hierarchy shared by the simulator, builders, fitter and CLI
"""


class QAAError(Exception):
    """Base exception for amplitude-arithmetic toolkit errors"""
    pass


class CircuitError(QAAError):
    """Exception raised for invalid gates, layouts or qubit references"""
    pass


class SimulationError(QAAError):
    """Exception raised when a statevector run cannot proceed"""
    pass


class FlagError(QAAError):
    """Exception raised when a flag/residual pattern does not pick one basis state"""
    pass


class ValidationError(QAAError):
    """Exception raised for invalid user-supplied parameters"""
    pass


class NumericalError(QAAError):
    """Exception raised when a computed value disagrees with its oracle or bound"""
    pass


class FitError(QAAError):
    """Exception raised for polynomial fitting failures"""
    pass


class QramError(QAAError):
    """Exception raised for missing coefficient rows"""
    pass


class QasmError(QAAError):
    """Exception raised for OpenQASM export/import failures"""
    pass
