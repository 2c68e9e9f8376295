"""
Unit tests for command decorators
"""

import click
import pytest

# Mark all tests in this module as unit tests
pytestmark = pytest.mark.unit


class TestLogExecutionTime:
    """Test suite for log_execution_time decorator"""

    def test_preserves_function_signature(self):
        """Test that log_execution_time preserves the original function signature"""
        from qaa.utils.decorators import log_execution_time

        def test_function(x, y, z=10):
            return x + y + z

        decorated = log_execution_time(test_function)
        assert decorated.__name__ == 'test_function'
        assert decorated.__doc__ == test_function.__doc__
        assert decorated(1, 2) == 13

    def test_failure_is_logged_and_reraised(self, mocker):
        """Test that a failing call logs an error and re-raises"""
        from qaa.utils import decorators
        from qaa.utils.errors import SimulationError

        error = mocker.patch.object(decorators.logger, 'error')

        @decorators.log_execution_time
        def failing():
            raise SimulationError("too wide")

        with pytest.raises(SimulationError):
            failing()
        error.assert_called_once()
        assert 'failing failed after' in error.call_args[0][0]

    @pytest.mark.parametrize('exception', ['usage', 'validation'])
    def test_parameter_errors_log_at_warning(self, mocker, exception):
        """Test rejected parameters are a warning, not an error"""
        from qaa.utils import decorators
        from qaa.utils.errors import ValidationError

        error = mocker.patch.object(decorators.logger, 'error')
        warning = mocker.patch.object(decorators.logger, 'warning')
        raised = click.UsageError("bad --n") if exception == 'usage' else ValidationError("n must be at least 2")

        @decorators.log_execution_time
        def command():
            raise raised

        with pytest.raises(type(raised)):
            command()
        error.assert_not_called()
        warning.assert_called_once()
        assert 'command rejected its parameters' in warning.call_args[0][0]

    def test_success_is_logged_at_debug(self, mocker):
        """Test that timing goes to the debug log"""
        from qaa.utils import decorators

        debug = mocker.patch.object(decorators.logger, 'debug')

        @decorators.log_execution_time
        def quick():
            return 1

        assert quick() == 1
        assert 'quick executed in' in debug.call_args[0][0]


class TestCliErrors:
    """Test suite for cli_errors decorator"""

    def test_validation_error_is_usage_error(self):
        """Test ValidationError maps onto a usage error"""
        from qaa.utils.decorators import cli_errors
        from qaa.utils.errors import ValidationError

        @cli_errors
        def command():
            raise ValidationError("n must be at least 2")

        with pytest.raises(click.UsageError) as exc_info:
            command()
        assert exc_info.value.exit_code == 2
        assert 'n must be at least 2' in exc_info.value.message

    def test_toolkit_error_exits_one(self):
        """Test other toolkit errors exit 1 with their class name"""
        from qaa.utils.decorators import cli_errors
        from qaa.utils.errors import QramError

        @cli_errors
        def command():
            raise QramError("No coefficient row stored for subdomain 3")

        with pytest.raises(click.ClickException) as exc_info:
            command()
        assert not isinstance(exc_info.value, click.UsageError)
        assert exc_info.value.exit_code == 1
        assert exc_info.value.message.startswith('QramError:')

    def test_other_errors_pass_through(self):
        """Test non-toolkit errors are not translated"""
        from qaa.utils.decorators import cli_errors

        @cli_errors
        def command():
            raise KeyError('x')

        with pytest.raises(KeyError):
            command()
