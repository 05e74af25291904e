"""
Command-line front end.

Subcommands `scan`, `best`, `fwhm` and `estimate` write CSV (header row, LF line
endings) or a single JSON object. Reals are written in their shortest round-trip
form, infinities as "inf".

Exit codes: 0 ok, 2 invalid configuration, 3 I/O failure, 4 no half-maximum
crossing, 5 estimation aborted, 6 `--check` violation, 7 numerical non-convergence.
"""

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from . import configure
from . import estimator
from . import metrology
from ._private_tools.exceptions import BadCallError, ConvergenceError, DomainError, ExperimentAbortedError
from ._private_tools.exceptions import DegeneratePointError, NoCrossingError
from ._private_tools.parsers import digest_grid, digest_sweep
from ._private_tools.schemes import digest_scheme
from .interferometer import InterferometerConfig, get_model
from .units import Q_, from_radians, to_radians

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_NO_CROSSING = 4
EXIT_ABORTED = 5
EXIT_CHECK = 6
EXIT_NUMERICAL = 7

formats = ['csv', 'json']

estimate_ratio_band = (0.85, 1.15)

_config_aliases = {
    'n': 'N',
    'mean_photons': 'N',
    'photons': 'N',
    'diffusion_rate': 'gamma',
    't': 'transmission',
    'grid': 'phi',
    }

_run_keys = ['scheme', 'N', 'gamma', 'transmission', 'p0', 'phi', 'pi_units', 'output', 'format', 'seed',
             'sweep', 'bracket', 'wavelength', 'phi_true', 'trials', 'repeats']

@dataclass(frozen=True)
class RunConfig:

    scenario: InterferometerConfig
    schemes: Tuple
    grid: Tuple[float, float, int] = (-np.pi/4.0, np.pi/4.0, 201)
    output: Optional[str] = None
    format: str = 'csv'
    seed: Optional[int] = None
    pi_units: bool = False
    sweep: Tuple = ()
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.format not in formats:
            raise BadCallError('The output format is one of {}, got {!r}.'.format(formats, self.format))
        digest_grid(self.grid)
        if len(self.schemes) == 0:
            raise BadCallError('At least one detection scheme is needed.')

    @property
    def scheme(self):
        return self.schemes[0]

    def phases(self):
        start, end, points = self.grid
        return np.linspace(start, end, points)

# Serialization

def format_real(value):

    value = float(value)

    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'

    return repr(value)

def _csv_cell(value):

    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_real(value)
    return str(value)

def _json_value(value):

    if isinstance(value, dict):
        return {key: _json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return format_real(value)
        return value
    return value

def render_csv(columns, rows):

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[column]) for column in columns])

    return buffer.getvalue()

def render_json(document):

    return json.dumps(_json_value(document), indent=2, allow_nan=False)+'\n'

def render(run, columns, rows, metadata):

    if run.format == 'csv':
        return render_csv(columns, rows)

    document = dict(metadata)
    document['columns'] = list(columns)
    document['rows'] = [{column: row[column] for column in columns} for row in rows]

    return render_json(document)

def write_output(text, path=None):

    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    directory = os.path.dirname(os.path.abspath(path))
    handle = tempfile.NamedTemporaryFile('w', encoding='utf-8', newline='', dir=directory,
                                         prefix='.'+os.path.basename(path)+'.', delete=False)
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        if os.path.exists(handle.name):
            os.unlink(handle.name)
        raise

# Run configuration

def _phase_out(run, value):

    if value is None or not run.pi_units:
        return value
    return float(from_radians(value, 'pi_radian').magnitude)

def _phase_in(pi_units, value):

    if value is None or not pi_units:
        return value
    return to_radians(Q_(value, 'pi_radian'))

def _boolean(value):

    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off', ''):
        return False
    raise BadCallError('Expected a boolean, got {!r}.'.format(value))

def _merge(args):

    file_values = {}

    if args.config is not None:
        for key, value in configure.load_config_file(args.config).items():
            key = _config_aliases.get(key.lower(), key)
            if key in _run_keys:
                file_values[key] = value
            elif key in configure.get_settings_supported():
                configure.set_settings({key: value})
            else:
                raise BadCallError('Unknown configuration key {!r} in {}.'.format(key, args.config))

    merged = {}
    for key in _run_keys:
        value = getattr(args, key, None)
        if value is None or value is False:
            value = file_values.get(key, value)
        merged[key] = value

    return merged

def build_run_config(args):

    values = _merge(args)

    if values['scheme'] is None:
        raise BadCallError('A detection scheme is needed (--scheme).')
    sweep = values['sweep']
    sweep = tuple(digest_sweep(sweep)) if sweep is not None else ()

    if values['N'] is None:
        if not sweep:
            raise BadCallError('A mean photon number is needed (-N).')
        values['N'] = sweep[0]

    p0 = values['p0']
    names = [name for name in str(values['scheme']).split(',') if name.strip() != '']
    schemes = tuple(digest_scheme(name, p0 if 'window' in name else None) for name in names)

    scenario = InterferometerConfig(float(values['N']),
                                    float(values['gamma']) if values['gamma'] is not None else 0.0,
                                    float(values['transmission']) if values['transmission'] is not None else 1.0)

    pi_units = _boolean(values['pi_units']) if values['pi_units'] is not None else False

    grid = values['phi']
    if grid is None:
        grid = (-np.pi/4.0, np.pi/4.0, 201)
        if pi_units:
            grid = (-0.25, 0.25, 201)
    start, end, points = digest_grid(grid)
    grid = (_phase_in(pi_units, start), _phase_in(pi_units, end), points)

    output = values['output']
    output_format = values['format']
    if output_format is None:
        output_format = 'json' if (output is not None and output.endswith('.json')) else args.default_format

    seed = values['seed']
    if seed is not None:
        seed = int(seed)

    options = {}
    if values['bracket'] is not None:
        fields = str(values['bracket']).split(':')
        if len(fields) != 2:
            raise BadCallError("A bracket reads 'lo:hi', got {!r}.".format(values['bracket']))
        options['bracket'] = tuple(_phase_in(pi_units, float(ii)) for ii in fields)
    if values['wavelength'] is not None:
        options['wavelength'] = values['wavelength']
    if values['phi_true'] is not None:
        options['phi_true'] = _phase_in(pi_units, float(values['phi_true']))
    for key in ('trials', 'repeats'):
        if values[key] is not None:
            options[key] = int(values[key])

    output = RunConfig(scenario=scenario, schemes=schemes, grid=grid, output=output, format=output_format,
                       seed=seed, pi_units=pi_units, sweep=sweep, options=options)

    return output

def _metadata(run):

    scenario = run.scenario
    output = {
        'scheme': ','.join(scheme.label for scheme in run.schemes),
        'N': scenario.mean_photons,
        'gamma': scenario.diffusion_rate,
        'transmission': scenario.transmission,
        'phase_unit': 'pi_radian' if run.pi_units else 'radian',
        }

    return output

def _report_violations(violations, context):

    if violations:
        for name, value in violations.items():
            logger.error('check %s failed for %s: %r', name, context, value)
        return EXIT_CHECK

    return EXIT_OK

# Commands

def cmd_scan(run, check=False):

    scheme = run.scheme
    result = metrology.scan(run.scenario, scheme, run.phases())

    columns = ['phi', 'signal', 'p_plus', 'delta_phi', 'fisher']
    rows = [{'phi': _phase_out(run, phi), 'signal': signal, 'p_plus': p_plus, 'delta_phi': delta_phi,
             'fisher': fisher} for phi, signal, p_plus, delta_phi, fisher in result.rows]

    write_output(render(run, columns, rows, _metadata(run)), run.output)

    if check:
        return _report_violations(metrology.check_invariants(run.scenario, scheme), scheme.label)

    return EXIT_OK

def cmd_best(run, check=False):

    sweep = run.sweep if run.sweep else (run.scenario.mean_photons,)
    bracket = run.options.get('bracket', None)

    columns = ['scheme', 'N', 'phi_min', 'delta_phi_min_exact', 'delta_phi_min_analytic',
               'delta_phi_min_series', 'shot_noise', 'fwhm', 'error']
    rows = []
    status = EXIT_OK

    for scheme in run.schemes:
        for photons in sweep:
            cfg = run.scenario.with_photons(photons)
            row = {column: None for column in columns}
            row['scheme'] = scheme.label
            row['N'] = photons
            row['shot_noise'] = 1.0/math.sqrt(cfg.n_eff) if cfg.n_eff > 0.0 else float('inf')
            try:
                report = metrology.best_sensitivity(cfg, scheme, bracket)
            except (BadCallError, ConvergenceError, DomainError) as error:
                logger.warning('best %s at N=%r failed: %s', scheme.label, photons, error)
                row['error'] = str(error)
            else:
                row['phi_min'] = _phase_out(run, report.phi_min)
                row['delta_phi_min_exact'] = report.delta_phi_min
                row['delta_phi_min_analytic'] = report.analytic_delta_phi_min
                row['delta_phi_min_series'] = report.series_delta_phi_min
                row['fwhm'] = _phase_out(run, report.fwhm)
            rows.append(row)
            if check:
                violations = metrology.check_invariants(cfg, scheme)
                if _report_violations(violations, '{} N={!r}'.format(scheme.label, photons)):
                    status = EXIT_CHECK

    write_output(render(run, columns, rows, _metadata(run)), run.output)

    return status

def cmd_fwhm(run, check=False):

    scheme = run.scheme
    sweep = run.sweep if run.sweep else (run.scenario.mean_photons,)
    wavelength = run.options.get('wavelength', None)

    columns = ['N', 'gamma', 'fwhm_exact', 'fwhm_analytic']
    if wavelength is not None:
        columns += ['resolution', 'resolution_unit']

    rows = []
    status = EXIT_OK

    for photons in sweep:
        cfg = run.scenario.with_photons(photons)
        exact = metrology.fwhm(get_model(cfg, scheme))
        analytic = metrology.analytic_fwhm(cfg, scheme)
        row = {'N': photons, 'gamma': cfg.diffusion_rate, 'fwhm_exact': _phase_out(run, exact),
               'fwhm_analytic': _phase_out(run, analytic)}
        if wavelength is not None:
            length = metrology.resolution(exact, wavelength)
            row['resolution'] = float(length.magnitude)
            row['resolution_unit'] = str(length.units)
        rows.append(row)
        if check:
            violations = metrology.check_invariants(cfg, scheme)
            if _report_violations(violations, '{} N={!r}'.format(scheme.label, photons)):
                status = EXIT_CHECK

    write_output(render(run, columns, rows, _metadata(run)), run.output)

    return status

def cmd_estimate(run, check=False):

    options = run.options
    for key in ('phi_true', 'trials', 'repeats'):
        if key not in options:
            raise BadCallError('estimate needs --{}.'.format(key.replace('_', '-')))

    spec = estimator.ExperimentSpec(cfg=run.scenario, scheme=run.scheme, phi_true=options['phi_true'],
                                    trials=options['trials'], repeats=options['repeats'],
                                    seed=run.seed if run.seed is not None else 0)

    report = estimator.run_experiment(spec)
    document = report.as_dict()
    document['phi_true'] = _phase_out(run, document['phi_true'])
    document['mean_estimate'] = _phase_out(run, document['mean_estimate'])
    document['empirical_std'] = _phase_out(run, document['empirical_std'])
    document['predicted_std'] = _phase_out(run, document['predicted_std'])

    if run.format == 'json':
        text = render_json(document)
    else:
        text = render_csv(list(document.keys()), [document])

    write_output(text, run.output)

    if check:
        violations = {}
        lo, hi = estimate_ratio_band
        if not report.degenerate and not lo <= report.ratio <= hi:
            violations['ratio'] = report.ratio
        bias = abs(report.mean_estimate-spec.phi_true)
        if bias > 4.0*report.predicted_std/math.sqrt(spec.repeats):
            violations['bias'] = bias
        return _report_violations(violations, spec.scheme.label)

    return EXIT_OK

commands = {
    'scan': cmd_scan,
    'best': cmd_best,
    'fwhm': cmd_fwhm,
    'estimate': cmd_estimate,
    }

def build_parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--scheme', help="detection scheme: homodyne-window, homodyne-zero, parity, zero-nonzero (z)")
    common.add_argument('-N', '--photons', dest='N', help='mean photon number')
    common.add_argument('--gamma', help='dimensionless phase-diffusion rate')
    common.add_argument('-T', '--transmission', help='photon transmission in [0, 1]')
    common.add_argument('--p0', help='half-width of the homodyne window')
    common.add_argument('--phi', help='phase grid start:end:points (radians)')
    common.add_argument('--pi-units', dest='pi_units', action='store_true', default=None,
                        help='read and write phases in units of pi')
    common.add_argument('-o', '--output', help='output path (stdout when absent)')
    common.add_argument('--format', choices=formats)
    common.add_argument('--seed', help='64-bit unsigned seed')
    common.add_argument('--config', help='key=value configuration file')
    common.add_argument('--check', action='store_true', help='run the invariant suite; exit 6 on violations')
    common.add_argument('-v', '--verbose', action='store_true', help='debug logging to stderr')

    parser = argparse.ArgumentParser(prog='pyphasewizard',
                                     description='Binary-outcome phase metrology with coherent light.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    subparsers.add_parser('scan', parents=[common], help='signal, Fisher information and sensitivity on a phase grid')

    best = subparsers.add_parser('best', parents=[common], help='best sensitivity against N')
    best.add_argument('--sweep', help="N values: comma list or log-spaced start:end:count")
    best.add_argument('--bracket', help='search bracket lo:hi')

    width = subparsers.add_parser('fwhm', parents=[common], help='fringe width against N')
    width.add_argument('--sweep', help="N values: comma list or log-spaced start:end:count")
    width.add_argument('--wavelength', help="wavelength with units, e.g. '800 nm'")

    estimate = subparsers.add_parser('estimate', parents=[common], help='Monte Carlo inversion estimator')
    estimate.add_argument('--phi-true', dest='phi_true', help='true phase')
    estimate.add_argument('--trials', help='binary outcomes per repetition')
    estimate.add_argument('--repeats', help='number of repetitions')

    return parser

def _attach_handler(verbose):

    package_logger = logging.getLogger('pyphasewizard')
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    package_logger.addHandler(handler)
    previous_level = package_logger.level
    package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    return package_logger, handler, previous_level

def main(argv=None):

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code

    args.default_format = 'json' if args.command == 'estimate' else 'csv'

    package_logger, handler, previous_level = _attach_handler(args.verbose)

    try:
        configure.reset()
        run = build_run_config(args)
        return commands[args.command](run, check=args.check)
    except OSError as error:
        logger.error('I/O failure: %s', error)
        return EXIT_IO
    except NoCrossingError as error:
        logger.error('%s', error)
        return EXIT_NO_CROSSING
    except ExperimentAbortedError as error:
        logger.error('%s', error)
        return EXIT_ABORTED
    except (ConvergenceError, DegeneratePointError) as error:
        logger.error('%s', error)
        return EXIT_NUMERICAL
    except (BadCallError, ValueError) as error:
        logger.error('invalid configuration: %s', error)
        return EXIT_INVALID
    finally:
        configure.reset()
        package_logger.removeHandler(handler)
        package_logger.setLevel(previous_level)
