import json
import logging
import sys

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from mimolab.choices import OutputFormat, PceMode, Precoder
from mimolab.constants import PRESET_NAMES
from mimolab.exceptions import ConfigurationError, DomainError, MimoLabError, ScenarioParseError
from mimolab.models import NetworkConfig, ScalingExponents
from mimolab.output.summary import to_jsonable
from mimolab.scenarios import PRESET_TABLES, find_case, load_preset, parse_scenario
from mimolab.settings import get_lab_settings
from mimolab.utils.montecarlo import collect_trials
from mimolab.utils.mrt import rate_from_sinr
from mimolab.utils.precoding import ANALYSIS_CLASSES, get_analysis_class, run_precoder_operation
from mimolab.utils.scaling import deterministic_check, non_decreasing_check, scaling_exponent
from mimolab.utils.statistics import effective_value, estimate_exponent, estimate_scv, fit_power_decay, standard_error
from mimolab.worker import reproduce_preset, run_case_sweep, verify_moments

logger = logging.getLogger(__name__)

__all__ = ('cli', 'main', 'cli_main')

VALIDATION_ERRORS = (ValidationError, ConfigurationError, DomainError, ScenarioParseError, click.BadParameter)


def network_options(require_m=True, default_k=10):
    def decorator(f):
        options = [
            click.option('--M', 'M', type=int, required=require_m, default=None, help='Base station antennas.'),
            click.option('--K', 'K', type=int, default=default_k, show_default=True, help='Users per cell.'),
            click.option('--L', 'L', type=int, default=7, show_default=True, help='Cells.'),
            click.option('--c', 'c', type=float, default=0.6, show_default=True, help='Spatial correlation level.'),
            click.option('--alpha', type=float, default=0.3, show_default=True, help='Inter-cell large-scale fading.'),
            click.option('--Lp', 'L_p', type=int, default=0, show_default=True, help='Pilot-contaminating cells.'),
            click.option('--Et', 'E_t', type=float, default=10.0, show_default=True, help='Training energy (linear).'),
            click.option('--rho', type=float, default=10.0, show_default=True, help='Downlink SNR (linear).'),
        ]
        for option in reversed(options):
            f = option(f)
        return f

    return decorator


def format_option(default=OutputFormat.TEXT):
    return click.option('--format', 'output_format', type=click.Choice([item.value for item in OutputFormat]), default=default.value, show_default=True)


def build_config(M, K, L, c, alpha, L_p, E_t, rho) -> NetworkConfig:
    return NetworkConfig(L=L, M=M, K=K, c=c, alpha=alpha, L_p=L_p, E_t=E_t, rho=rho)


def resolve_seed(seed):
    return get_lab_settings().master_seed if seed is None else seed


def _flatten(data, prefix=''):
    flat = {}
    for key, value in data.items():
        name = f'{prefix}{key}'
        if isinstance(value, dict):
            flat.update(_flatten(value, f'{name}.'))
        else:
            flat[name] = value
    return flat


def emit(data, output_format):
    """Write a dict or a list of flat records to stdout."""
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.JSON:
        click.echo(json.dumps(to_jsonable(data), indent=2))
        return

    records = data if isinstance(data, list) else [_flatten(data)]
    if output_format == OutputFormat.CSV:
        click.echo(pd.DataFrame.from_records(records).to_csv(index=False), nl=False)
        return

    if isinstance(data, list):
        click.echo(pd.DataFrame.from_records(records).to_string(index=False))
        return
    for key, value in records[0].items():
        click.echo(f'{key}: {value}')


def _load_case(preset, case_id, scenario_file):
    if scenario_file:
        cases = parse_scenario(scenario_file.read())
    else:
        cases = load_preset(preset)
    return find_case(cases, case_id)


@click.group()
@click.option('-v', '--verbose', count=True, help='Increase log verbosity.')
def cli(verbose):
    """Multi-cell massive MIMO downlink laboratory."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')


@cli.command()
@network_options()
@format_option()
def analytic(M, K, L, c, alpha, L_p, E_t, rho, output_format):
    """Closed-form quantities of one configuration."""
    cfg = build_config(M, K, L, c, alpha, L_p, E_t, rho)
    result = {'M': cfg.M, 'K': cfg.K, 'L_p': cfg.L_p, 'delta': cfg.delta, 'c_eff': cfg.c_eff, 'Q': cfg.Q}
    for precoder, analysis_class in ANALYSIS_CLASSES.items():
        try:
            result[precoder.value] = run_precoder_operation(analysis_class, cfg, 'summary')
        except MimoLabError as err:
            result[precoder.value] = {'error': str(err)}
    emit(result, output_format)


@cli.command()
@network_options(require_m=False)
@click.option('--preset', type=click.Choice(PRESET_TABLES), default=None, help='Sweep a preset case instead of one configuration.')
@click.option('--case', 'case_id', default=None, help='Case id within the preset or scenario file.')
@click.option('--scenario', 'scenario_file', type=click.File('r'), default=None, help='Scenario document (INI).')
@click.option('--grid', default=None, help='Comma separated M grid for sweeps.')
@click.option('--precoder', type=click.Choice([item.value for item in Precoder]), default=None)
@click.option('--trials', type=int, default=None, help='Trials per point.')
@click.option('--seed', type=int, default=None, envvar='MIMO_LAB_SEED', help='Master seed.')
@click.option('--workers', type=int, default=None)
@format_option()
def simulate(M, K, L, c, alpha, L_p, E_t, rho, preset, case_id, scenario_file, grid, precoder, trials, seed, workers, output_format):
    """Monte Carlo simulation of one configuration or a preset case sweep."""
    settings = get_lab_settings()
    trials = trials or settings.simulation.n_trials
    seed = resolve_seed(seed)

    if preset or scenario_file:
        if not case_id:
            raise click.UsageError('--case is required with --preset or --scenario')
        case = _load_case(preset, case_id, scenario_file)
        M_grid = [int(item) for item in grid.split(',')] if grid else None
        if M_grid:
            case = case.with_grid(M_grid)
        sweep = run_case_sweep(case, n_trials=trials, master_seed=seed, workers=workers, precoder=precoder)
        emit([{'case_id': sweep.case_id, 'precoder': sweep.precoder.value, **row.to_dict()} for row in sweep.rows], output_format)
        return

    if M is None:
        raise click.UsageError('--M is required unless --preset or --scenario is given')
    cfg = build_config(M, K, L, c, alpha, L_p, E_t, rho)
    precoder = Precoder(precoder or Precoder.MRT)
    samples = collect_trials(cfg, precoder, seed, 'adhoc', trials, workers or settings.simulation.workers)
    effective, effective_se = effective_value(samples.sinr)
    analytic_sinr = run_precoder_operation(get_analysis_class(precoder), cfg, 'effective_sinr')
    emit(
        {
            'precoder': precoder.value,
            'M': cfg.M,
            'n_trials': samples.n_trials,
            'ergodic_rate': float(np.mean(samples.rate)),
            'se_rate': standard_error(samples.rate),
            'rate_lower_bound': rate_from_sinr(analytic_sinr),
            'mean_sinr': float(np.mean(samples.sinr)),
            'effective_sinr_simulated': effective,
            'se_effective_sinr': effective_se,
            'effective_sinr_analytic': analytic_sinr,
            'scv_sinr': estimate_scv(samples.sinr),
        },
        output_format,
    )


@cli.command()
@click.option('--rt', 'r_t', type=float, default=0.0, show_default=True)
@click.option('--rk', 'r_k', type=float, default=0.0, show_default=True)
@click.option('--rrho', 'r_rho', type=float, default=0.0, show_default=True)
@click.option('--rgamma', 'r_gamma', type=float, default=0.0, show_default=True)
@click.option('--pce', type=click.Choice([item.value for item in PceMode]), default=PceMode.PERFECT.value, show_default=True)
@format_option()
def scaling(r_t, r_k, r_rho, r_gamma, pce, output_format):
    """Scaling exponent and convergence checks for given exponents."""
    s = ScalingExponents(r_t=r_t, r_k=r_k, r_rho=r_rho, r_gamma=r_gamma, perfect_pce=PceMode(pce) == PceMode.PERFECT)
    emit(
        {
            'r_s': scaling_exponent(s),
            'non_decreasing': non_decreasing_check(s),
            'deterministic': deterministic_check(s),
        },
        output_format,
    )


@cli.command('check-applicability')
@click.option('--preset', type=click.Choice(PRESET_TABLES), default='table1', show_default=True)
@click.option('--case', 'case_id', required=True)
@click.option('--scenario', 'scenario_file', type=click.File('r'), default=None)
@click.option('--M', 'M', type=int, required=True)
@click.option('--precoder', type=click.Choice([item.value for item in Precoder]), default=None)
@click.option('--threshold', type=float, default=None, help='Dominance factor for ">>".')
@format_option()
def check_applicability(preset, case_id, scenario_file, M, precoder, threshold, output_format):
    """Finite-M applicability of the scaling law for one case."""
    case = _load_case(preset, case_id, scenario_file)
    threshold = threshold or get_lab_settings().analysis.dominance_threshold
    analysis_class = get_analysis_class(precoder or case.precoder)
    extra_args = {'exponents': case.exponents(), 'threshold': threshold}
    verdict = run_precoder_operation(analysis_class, case.config_at(M), 'applicability', extra_args)
    emit({'case_id': case.case_id, 'M': M, 'precoder': analysis_class.precoder.value, **verdict.to_dict()}, output_format)


@cli.command('verify-moments')
@network_options(default_k=8)
@click.option('--trials', type=int, default=None)
@click.option('--seed', type=int, default=None, envvar='MIMO_LAB_SEED')
@format_option()
def verify_moments_command(M, K, L, c, alpha, L_p, E_t, rho, trials, seed, output_format):
    """Compare closed-form moments with Monte Carlo estimates."""
    cfg = build_config(M, K, L, c, alpha, L_p, E_t, rho)
    report = verify_moments(cfg, trials, resolve_seed(seed))
    emit([entry.to_dict() for entry in report.entries + report.diagnostics], output_format)
    click.echo(f'passed: {report.passed} (max |z| = {report.max_abs_z:.3f})', err=True)
    return 0 if report.passed else 1


@cli.command()
@click.option('--points', default=None, help='M:value pairs, e.g. 100:5.2,200:7.9,300:9.8')
@click.option('--csv', 'csv_file', type=click.Path(exists=True, dir_okay=False), default=None, help='Metric CSV written by reproduce.')
@click.option('--metric', default='effective_sinr_simulated', show_default=True)
@click.option('--case', 'case_id', default=None)
@click.option('--model', type=click.Choice(['exponent', 'decay']), default='exponent', show_default=True)
@format_option()
def fit(points, csv_file, metric, case_id, model, output_format):
    """Log-log fit of a value against M."""
    if bool(points) == bool(csv_file):
        raise click.UsageError('give exactly one of --points or --csv')

    if points:
        try:
            pairs = [item.split(':') for item in points.split(',') if item.strip()]
            series = {'points': [(int(M), float(value)) for M, value in pairs]}
        except ValueError as err:
            raise click.BadParameter(f'malformed points {points!r}', param_hint='--points') from err
    else:
        frame = pd.read_csv(csv_file)
        frame = frame[frame['metric'] == metric]
        if case_id:
            frame = frame[frame['case_id'] == case_id]
        series = {key: list(zip(group['M'], group['value'])) for key, group in frame.dropna(subset=['value']).groupby('case_id', sort=False)}
        if not series:
            raise DomainError(f'no rows with metric {metric!r} in {csv_file}')

    results = []
    for key, pairs in series.items():
        pairs = sorted(pairs)
        if model == 'exponent':
            results.append({'series': key, 'exponent': estimate_exponent(pairs)})
        else:
            a, b = fit_power_decay(pairs)
            results.append({'series': key, 'a': a, 'b': b})
    emit(results if len(results) > 1 else results[0], output_format)


@cli.command()
@click.argument('name', type=click.Choice(PRESET_NAMES))
@click.option('--out', 'out_dir', type=click.Path(file_okay=False), default='.', show_default=True)
@click.option('--seed', type=int, default=None, envvar='MIMO_LAB_SEED')
@click.option('--trials', type=int, default=None)
@click.option('--workers', type=int, default=None)
@click.option('--grid', default=None, help='Comma separated M grid.')
@click.option('--plots/--no-plots', default=None)
def reproduce(name, out_dir, seed, trials, workers, grid, plots):
    """Write the CSV, JSON summary and plot of a figure or table preset."""
    plots = get_lab_settings().output.plots if plots is None else plots
    M_grid = [int(item) for item in grid.split(',')] if grid else None
    for path in reproduce_preset(name, out_dir, resolve_seed(seed), trials, workers, plots, M_grid):
        click.echo(str(path))


def main(argv=None) -> int:
    try:
        result = cli.main(args=argv, prog_name='mimolab', standalone_mode=False)
    except click.UsageError as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    except VALIDATION_ERRORS as err:
        click.echo(f'error: {err}', err=True)
        return 1
    except (MimoLabError, OSError, RuntimeError, ArithmeticError) as err:
        click.echo(f'error: {err}', err=True)
        return 2
    return result if isinstance(result, int) else 0


cli_main = main


if __name__ == '__main__':
    sys.exit(main())
