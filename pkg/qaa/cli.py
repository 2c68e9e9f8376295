"""
Command-Line Front End

Each subcommand builds a construction, simulates it, compares the flag
amplitude with its closed-form oracle and prints one JSON report on stdout.
Logs go to stderr (or files, see LOG_TO_FILE).

Exit codes: 0 success, 1 oracle mismatch under --check or toolkit error,
2 invalid parameters.
"""

import json
import logging
import os
from typing import Optional

import click

from . import configure
from .builders.linsys import RECIPROCAL_VARIANTS, build_reciprocal_circuit, evaluate_reciprocal
from .builders.polyeval import build_eval_circuit, evaluate_point
from .builders.primitives import binary_controlled_ry
from .builders.stateprep import closed_form, inputs_for, prepare
from .config import active_config
from .fitting.functions import get_available_functions, get_function
from .fitting.remez import fit, max_error_on
from .fitting.tables import load_table, save_table
from .models.circuit import Circuit
from .models.plans import PREP_VARIANTS, PrepSpec, ReciprocalPlan, ToeplitzSystem
from .models.polynomial import QramStub
from .models.state import complex_to_dict
from .sim.cost_model import CostModel, count_resources
from .sim.qasm import export_qasm, roundtrip_flag_amplitude
from .sim.simulator import Simulator, simulate_flag
from .utils.decorators import cli_errors, log_execution_time
from .utils.errors import ValidationError
from .utils.validators import require, validate_integer

logger = logging.getLogger(__name__)

COST_MODELS = ('default', 'native')
NAMED_BUILDERS = PREP_VARIANTS + ('reciprocal', 'reciprocal_product', 'cascade')


def _emit(report: dict) -> None:
    click.echo(json.dumps(report, indent=2))


def _finish(ctx: click.Context, report: dict, failures) -> None:
    """Print the report; under --check any failure exits 1"""
    report['check'] = {'enabled': ctx.params.get('check', False), 'failures': list(failures)}
    _emit(report)
    if ctx.params.get('check') and failures:
        for failure in failures:
            click.echo(f"Check failed: {failure}", err=True)
        ctx.exit(1)


def _export(circuit: Circuit, path: Optional[str]) -> Optional[str]:
    if not path:
        return None
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(export_qasm(circuit))
    logger.info(f"Wrote OpenQASM to {path}")
    return path


def _roundtrip(circuit: Circuit, inputs: dict, enabled: bool, simulator: Simulator, failures: list):
    if not enabled:
        return None
    direct, roundtrip = roundtrip_flag_amplitude(circuit, inputs, simulator)
    error = abs(direct - roundtrip)
    if error > active_config().ROUNDTRIP_TOLERANCE:
        failures.append(f"qasm round-trip differs by {error:.3e}")
    return {'direct': complex_to_dict(direct), 'reimported': complex_to_dict(roundtrip), 'abs_error': error}


def _named_circuit(builder: str, n: int, y: Optional[float]) -> Circuit:
    if builder in PREP_VARIANTS:
        return prepare(builder, n)
    if builder in ('reciprocal', 'reciprocal_product'):
        if y is None:
            raise ValidationError(f"--y is required for the {builder} builder")
        variant = 'product' if builder == 'reciprocal_product' else 'compact'
        return build_reciprocal_circuit(ToeplitzSystem(n, y), variant=variant)
    require(validate_integer(n, "n", min_value=1))
    return binary_controlled_ry(n)


# Shared options
check_option = click.option('--check', is_flag=True, help='Exit 1 when an oracle comparison fails')
export_option = click.option('--export', 'export_path', type=click.Path(dir_okay=False),
                             help='Write the circuit as OpenQASM 2.0')
roundtrip_option = click.option('--check-roundtrip', is_flag=True,
                                help='Re-simulate the exported QASM and compare flag amplitudes')
cost_model_option = click.option('--cost-model', type=click.Choice(COST_MODELS), default='default',
                                 show_default=True)


@click.group()
@click.option('--env', type=click.Choice(['development', 'production', 'testing']), default=None,
              help='Configuration (default: QAA_ENV or development)')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              default=None)
def cli(env, log_level):
    """Amplitude arithmetic circuits: build, simulate, verify."""
    configure(env, log_level)


@cli.command()
@click.option('--variant', type=click.Choice(PREP_VARIANTS), default='improved', show_default=True)
@click.option('--n', 'n', type=int, required=True, help='Data bits (n >= 2)')
@click.option('--x', 'x', type=int, default=0, show_default=True, help='Data value (real part)')
@click.option('--b', 'b', type=int, default=0, show_default=True, help='Imaginary part (complex variant)')
@check_option
@export_option
@roundtrip_option
@cost_model_option
@click.pass_context
@cli_errors
@log_execution_time
def prep(ctx, variant, n, x, b, check, export_path, check_roundtrip, cost_model):
    """Black-box state preparation of an n-bit value."""
    spec = PrepSpec(n, variant)
    require(validate_integer(x, "x", min_value=0, max_value=2 ** spec.n - 1),
            validate_integer(b, "b", min_value=0, max_value=2 ** spec.n - 1))
    if b and variant != 'complex':
        raise ValidationError("--b is only meaningful for the complex variant")

    simulator = Simulator()
    circuit = prepare(variant, spec.n)
    inputs = inputs_for(variant, x, b)
    amplitude = simulate_flag(circuit, inputs, simulator)
    oracle = closed_form(variant, spec.n, x, b)
    error = abs(amplitude - oracle)

    failures = []
    if error > active_config().ORACLE_TOLERANCE:
        failures.append(f"flag amplitude differs from closed form by {error:.3e}")
    report = {
        'command': 'prep',
        'inputs': {'variant': variant, 'n': spec.n, 'x': x, 'b': b, 'm': spec.m},
        'oracle': complex_to_dict(oracle),
        'simulated': complex_to_dict(amplitude),
        'abs_error': error,
        'flag_amplitude': complex_to_dict(amplitude),
        'closed_form': complex_to_dict(oracle),
        'resources': count_resources(circuit, CostModel.by_name(cost_model)).to_dict(),
        'export': _export(circuit, export_path),
        'roundtrip': _roundtrip(circuit, inputs, check_roundtrip, simulator, failures),
    }
    _finish(ctx, report, failures)


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Matrix size 2^n - 1')
@click.option('--y', 'y', type=float, required=True, help='Diagonal parameter (y >= 2)')
@click.option('--j', 'j', type=int, required=True, help='Eigenvalue index 1..2^n - 1')
@click.option('--m', 'm', type=int, default=None, help='Product factors (default from n and y)')
@click.option('--circuit', 'variant', type=click.Choice(RECIPROCAL_VARIANTS), default='compact', show_default=True,
              help='Weighted LCU, or one LCU per product factor (small m only)')
@check_option
@export_option
@roundtrip_option
@cost_model_option
@click.pass_context
@cli_errors
@log_execution_time
def recip(ctx, n, y, j, m, variant, check, export_path, check_roundtrip, cost_model):
    """Reciprocal of one eigenvalue of the tridiagonal Toeplitz matrix."""
    system = ToeplitzSystem(n, y)
    system.check_index(j)
    plan = ReciprocalPlan(m, system.n, system.y) if m is not None else ReciprocalPlan.for_system(system)

    simulator = Simulator()
    circuit = build_reciprocal_circuit(system, plan, variant)
    result = evaluate_reciprocal(system, j, plan, circuit, simulator)
    oracle = result.product / plan.k
    error = abs(result.flag_amplitude - oracle)

    failures = []
    if error > active_config().ORACLE_TOLERANCE:
        failures.append(f"flag amplitude differs from product form by {error:.3e}")
    if result.abs_err > plan.eps_bound:
        failures.append(f"reciprocal error {result.abs_err:.3e} exceeds bound {plan.eps_bound:.3e}")
    report = {
        'command': 'recip',
        'inputs': {'n': system.n, 'y': system.y, 'j': j, 'm': plan.m, 'circuit': variant},
        'oracle': complex_to_dict(oracle),
        'simulated': complex_to_dict(result.flag_amplitude),
        'abs_error': error,
        'eps_bound': plan.eps_bound,
        'lambda': result.eigenvalue,
        'inverse': result.inverse,
        'product': result.product,
        'circuit_amp_scaled': result.circuit_amp_scaled,
        'reciprocal_error': result.abs_err,
        'resources': count_resources(circuit, CostModel.by_name(cost_model)).to_dict(),
        'export': _export(circuit, export_path),
        'roundtrip': _roundtrip(circuit, {'data': j}, check_roundtrip, simulator, failures),
    }
    _finish(ctx, report, failures)


@cli.command()
@click.option('--function', 'function', type=click.Choice(get_available_functions()), required=True)
@click.option('--domain', nargs=2, type=float, default=(0.0, 1.0), show_default=True)
@click.option('--degree', type=int, default=3, show_default=True)
@click.option('--pieces', type=int, default=4, show_default=True, help='Number of subdomains J')
@click.option('--n-bits', type=int, default=12, show_default=True)
@click.option('--eps', type=float, default=1e-3, show_default=True, help='Target maximum error')
@click.option('--alpha', type=float, default=0.01, show_default=True, help='modified_relu slope')
@click.option('--value', type=float, default=0.0, show_default=True, help='constant function value')
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Coefficient table path')
@check_option
@click.pass_context
@cli_errors
@log_execution_time
def polyfit(ctx, function, domain, degree, pieces, n_bits, eps, alpha, value, output, check):
    """Fit a piecewise polynomial with fixed-point coefficients."""
    import numpy as np

    f = get_function(function, alpha=alpha, value=value)
    poly, fit_report = fit(f, domain, degree, pieces, n_bits, eps, name=function)
    if output:
        save_table(output, poly, fit_report)

    # Independent check on points off the fitting grid
    b0, bj = poly.domain
    points = b0 + (bj - b0) * (np.arange(997) + 0.5) / 997
    verified = max_error_on(poly, f, points)

    failures = []
    if verified > eps:
        failures.append(f"verified error {verified:.3e} exceeds target {eps:.3e}")
    report = {
        'command': 'polyfit',
        'inputs': {'function': function, 'domain': list(domain), 'degree': degree, 'pieces': pieces,
                   'n_bits': n_bits, 'eps': eps},
        'oracle': {'verified_max_error': verified},
        'simulated': None,
        'abs_error': fit_report.worst_error,
        'eps_bound': eps,
        'fit_report': fit_report.to_dict(),
        'table': poly.to_dict(),
        'output': output,
        'resources': None,
    }
    _finish(ctx, report, failures)


@cli.command()
@click.option('--table', type=click.Path(dir_okay=False), default=None, help='Coefficient table from polyfit')
@click.option('--function', 'function', type=click.Choice(get_available_functions()), default=None,
              help='Fit on the fly instead of loading a table')
@click.option('--degree', type=int, default=3, show_default=True)
@click.option('--pieces', type=int, default=4, show_default=True)
@click.option('--n-bits', type=int, default=12, show_default=True)
@click.option('--x', 'x', type=float, required=True, help='Evaluation point')
@check_option
@export_option
@roundtrip_option
@cost_model_option
@click.pass_context
@cli_errors
@log_execution_time
def polyeval(ctx, table, function, degree, pieces, n_bits, x, check, export_path, check_roundtrip,
             cost_model):
    """Evaluate a piecewise polynomial on an amplitude."""
    if bool(table) == bool(function):
        raise ValidationError("Give exactly one of --table or --function")
    if table:
        poly, fit_report = load_table(table)
    else:
        poly, fit_report = fit(get_function(function), (0.0, 1.0), degree, pieces, n_bits, 1e-3,
                               name=function)

    simulator = Simulator()
    qram = QramStub.from_polynomial(poly)
    circuit = build_eval_circuit(poly, qram, poly.subdomain(x), x)
    result = evaluate_point(poly, x, qram, simulator, circuit)
    oracle = result.oracle_amplitude
    error = abs(result.flag_amplitude - oracle)

    failures = []
    if error > active_config().ORACLE_TOLERANCE:
        failures.append(f"flag amplitude differs from Horner evaluation by {error:.3e}")
    report = {
        'command': 'polyeval',
        'inputs': {'function': poly.function, 'x': x, 'degree': poly.degree, 'pieces': poly.num_pieces,
                   'n_bits': poly.n_bits, 'table': table},
        'oracle': complex_to_dict(oracle),
        'simulated': complex_to_dict(result.flag_amplitude),
        'abs_error': error,
        'eps_bound': fit_report.worst_error + 2.0 ** -poly.n_bits if fit_report.max_abs_error else None,
        'evaluation': result.to_dict(),
        'resources': count_resources(circuit, CostModel.by_name(cost_model)).to_dict(),
        'export': _export(circuit, export_path),
        'roundtrip': _roundtrip(circuit, {}, check_roundtrip, simulator, failures),
    }
    _finish(ctx, report, failures)


@cli.command()
@click.option('--builder', type=click.Choice(NAMED_BUILDERS), default='improved', show_default=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--y', 'y', type=float, default=None, help='Diagonal parameter (reciprocal only)')
@click.option('--scaling', is_flag=True, help='Also count at 2n and report the ratio')
@cost_model_option
@click.pass_context
@cli_errors
@log_execution_time
def resources(ctx, builder, n, y, scaling, cost_model):
    """Gate and qubit counts without simulation."""
    model = CostModel.by_name(cost_model)
    report = count_resources(_named_circuit(builder, n, y), model)
    out = {
        'command': 'resources',
        'inputs': {'builder': builder, 'n': n, 'y': y, 'cost_model': cost_model},
        'oracle': None,
        'simulated': None,
        'abs_error': None,
        'resources': report.to_dict(),
    }
    if scaling:
        doubled = count_resources(_named_circuit(builder, 2 * n, y), model)
        out['scaling'] = {
            'toffoli_equivalent': report.toffoli_equivalent,
            'toffoli_equivalent_doubled': doubled.toffoli_equivalent,
            'ratio': doubled.toffoli_equivalent / report.toffoli_equivalent if report.toffoli_equivalent else None,
        }
    _emit(out)


@cli.command()
@click.option('--builder', type=click.Choice(NAMED_BUILDERS), default='improved', show_default=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--y', 'y', type=float, default=None, help='Diagonal parameter (reciprocal only)')
@click.option('--output', type=click.Path(dir_okay=False), required=True, help='QASM file path')
@roundtrip_option
@click.pass_context
@cli_errors
@log_execution_time
def export(ctx, builder, n, y, output, check_roundtrip):
    """Write a builder circuit as OpenQASM 2.0."""
    circuit = _named_circuit(builder, n, y)
    failures = []
    report = {
        'command': 'export',
        'inputs': {'builder': builder, 'n': n, 'y': y},
        'oracle': None,
        'simulated': None,
        'abs_error': None,
        'export': _export(circuit, output),
        'roundtrip': _roundtrip(circuit, {}, check_roundtrip, Simulator(), failures),
        'resources': count_resources(circuit).to_dict(),
    }
    _emit(report)
    if failures:
        for failure in failures:
            click.echo(f"Check failed: {failure}", err=True)
        ctx.exit(1)


def main():
    cli()


if __name__ == '__main__':
    main()
