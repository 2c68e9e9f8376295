"""
Logging Configuration

This module configures structured logging for the toolkit.
"""

import logging
import logging.handlers
import os

import psutil

ROOT_LOGGER = 'qaa'


def setup_logging(config):
    """
    Configure logging for the toolkit.

    Standard output is reserved for command results, so console logging goes
    to stderr.

    Args:
        config: Configuration class (see qaa.config)
    """
    log_level = getattr(config, 'LOG_LEVEL', 'INFO')
    log_format = getattr(config, 'LOG_FORMAT',
                         '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s')

    # Create formatters
    detailed_formatter = logging.Formatter(
        log_format,
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Create handlers
    handlers = []

    if getattr(config, 'LOG_TO_FILE', False):
        log_dir = getattr(config, 'LOG_DIR', 'logs')
        os.makedirs(log_dir, exist_ok=True)

        # File handler for all logs
        all_logs_handler = logging.handlers.RotatingFileHandler(
            os.path.join(log_dir, 'qaa.log'),
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5
        )
        all_logs_handler.setFormatter(detailed_formatter)
        handlers.append(all_logs_handler)

        # Separate error log file
        error_logs_handler = logging.handlers.RotatingFileHandler(
            os.path.join(log_dir, 'errors.log'),
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5
        )
        error_logs_handler.setFormatter(detailed_formatter)
        error_logs_handler.setLevel(logging.ERROR)
        handlers.append(error_logs_handler)
    else:
        console_handler = logging.StreamHandler()  # stderr
        console_handler.setFormatter(detailed_formatter)
        handlers.append(console_handler)

    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(getattr(logging, log_level.upper()))

    # Re-configuring replaces our own handlers only
    for handler in list(root.handlers):
        if getattr(handler, '_qaa_handler', False):
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        handler._qaa_handler = True
        root.addHandler(handler)
    root.propagate = False

    root.debug(f"Logging configured - Level: {log_level}, File logging: {getattr(config, 'LOG_TO_FILE', False)}")


class PerformanceLogger:
    """Specialized logger for simulation performance"""

    def __init__(self, name='qaa.performance'):
        self.logger = logging.getLogger(name)

    def log_slow_simulation(self, label: str, num_qubits: int, num_ops: int,
                            execution_time: float, threshold: float = 5.0):
        """Log a simulation run that exceeded the threshold"""
        message = (f"Slow Simulation - {label}, Qubits: {num_qubits}, Ops: {num_ops}, "
                   f"Time: {execution_time:.4f}s (threshold: {threshold}s)")
        self.logger.warning(message)

    def log_statevector_allocation(self, num_qubits: int, size_mb: float):
        """Log a statevector allocation together with process memory"""
        usage_mb = psutil.Process().memory_info().rss / (1024 * 1024)
        self.logger.debug(f"Statevector - {num_qubits} qubits, {size_mb:.2f} MB "
                          f"(process RSS: {usage_mb:.2f} MB)")


class OracleLogger:
    """Specialized logger for oracle comparisons and fit targets"""

    def __init__(self, name='qaa.oracle'):
        self.logger = logging.getLogger(name)

    def log_mismatch(self, label: str, expected: complex, actual: complex,
                     tolerance: float):
        """Log an oracle mismatch beyond tolerance"""
        message = (f"Oracle Mismatch - {label}, Expected: {expected}, Actual: {actual}, "
                   f"Error: {abs(expected - actual):.3e} (tolerance: {tolerance:.1e})")
        self.logger.error(message)

    def log_fit_target_missed(self, function: str, subdomain: int, error: float, target: float):
        """Log a subdomain whose fitted error exceeds the requested target"""
        self.logger.warning(f"Fit Target Missed - Function: {function}, Subdomain: {subdomain}, "
                            f"Error: {error:.3e} (target: {target:.3e})")


# Create specialized loggers
performance_logger = PerformanceLogger()
oracle_logger = OracleLogger()
