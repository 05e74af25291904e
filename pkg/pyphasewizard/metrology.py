import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import integrate as _integrate

from . import kernel
from . import schemes as _schemes
from . import units as _units
from ._private_tools.exceptions import BadCallError, DegeneratePointError, NoCrossingError
from ._private_tools.exceptions import NoiselessOnlyError
from ._private_tools.schemes import digest_scheme
from .interferometer import InterferometerConfig, DetectionScheme, apply_loss, binary_model
from .interferometer import brute_force_binary, get_model, marginal_prob, default_cutoff
from .specfun import Bracket, improves, minimize_scalar, invert_monotone
from .units import to_radians

logger = logging.getLogger(__name__)

saturation_tolerance = 1e-6
evenness_tolerance = 1e-12
periodicity_tolerance = 1e-10
complement_tolerance = 1e-9
brute_force_tolerance = 1e-10
deviation_threshold = 0.1

default_bracket_diffused = (1e-4, 1.0)
default_bracket_noiseless = (0.0, 1.0)

@dataclass(frozen=True)
class SensitivityScan:

    phi: np.ndarray
    signal: np.ndarray
    p_plus: np.ndarray
    delta_phi: np.ndarray
    fisher: np.ndarray
    config: InterferometerConfig
    scheme: DetectionScheme

    def __len__(self):
        return len(self.phi)

    @property
    def rows(self):
        return list(zip(self.phi.tolist(), self.signal.tolist(), self.p_plus.tolist(),
                        self.delta_phi.tolist(), self.fisher.tolist()))

    def minimum(self):
        index = int(np.argmin(self.delta_phi))
        return float(self.phi[index]), float(self.delta_phi[index])

@dataclass(frozen=True)
class OptimumReport:

    phi_min: float
    delta_phi_min: float
    analytic_delta_phi_min: Optional[float]
    analytic_phi_min: Optional[float]
    fwhm: float
    series_delta_phi_min: Optional[float] = None
    config: Optional[InterferometerConfig] = None
    scheme: Optional[DetectionScheme] = None
    bracket: Optional[Bracket] = None

    @property
    def shot_noise(self):
        return 1.0/np.sqrt(self.config.n_eff)

def _as_output(value):

    if np.ndim(value) == 0:
        return float(value)
    return value

def _slope(model, phi, h=None, method=None):

    if method is None:
        method = 'analytic'

    if method == 'analytic':
        output = model.dp_plus(phi)
    elif method == 'central':
        if h is None:
            h = kernel.derivative_step
        if h <= 0.0:
            raise BadCallError('The derivative step must be positive.')
        output = (model.p_plus(phi+h)-model.p_plus(phi-h))/(2.0*h)
    else:
        raise BadCallError("The derivative method is 'analytic' or 'central', got {!r}.".format(method))

    return np.asarray(output, dtype=float)

def _binary_terms(model, phi, h=None, method=None):

    phi = np.asarray(to_radians(phi), dtype=float)
    p = np.asarray(model.p_plus(phi), dtype=float)
    q = np.asarray(model.p_minus(phi), dtype=float)
    dp = _slope(model, phi, h, method)

    stationary = np.abs(dp) < kernel.stationary_slope
    degenerate = (p < kernel.degenerate_tolerance) | (q < kernel.degenerate_tolerance)
    limit = stationary & degenerate & (model.fisher_limit is not None)
    zero = ((p <= 0.0) | (q <= 0.0)) & ~stationary

    return p, q, dp, stationary, limit, zero

def fisher_binary(model, phi, h=None, method=None):
    """Fisher information of the binary outcome, F = P'^2 (1/P(+) + 1/P(-)).

    At stationary points F is 0, except at degenerate peaks of models that know
    their limiting value (noiseless parity and zero-nonzero counting).
    """

    p, q, dp, stationary, limit, zero = _binary_terms(model, phi, h, method)

    if np.any(zero):
        raise DegeneratePointError()

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        output = dp**2*(1.0/p+1.0/q)

    output = np.where(stationary, 0.0, output)
    if model.fisher_limit is not None:
        output = np.where(limit, model.fisher_limit, output)

    return _as_output(output)

def sensitivity(model, phi, h=None, method=None):

    p, q, dp, stationary, limit, zero = _binary_terms(model, phi, h, method)

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        output = np.sqrt(p*q)/np.abs(dp)

    output = np.where(stationary | zero, np.inf, output)
    if model.fisher_limit is not None and model.fisher_limit > 0.0:
        output = np.where(limit, 1.0/np.sqrt(model.fisher_limit), output)

    return _as_output(output)

def fisher_homodyne_full(cfg, phi, method='analytic'):

    if cfg.diffusion_rate != 0.0:
        raise NoiselessOnlyError()

    phi = to_radians(phi)
    n_eff = cfg.n_eff

    if method == 'analytic':
        output = n_eff*np.cos(phi)**2
    elif method == 'quad':

        def _single(angle):
            center = -np.sqrt(n_eff)*np.sin(angle)/2.0
            slope = np.sqrt(n_eff)*np.cos(angle)/2.0

            def integrand(p):
                u = p-center
                return np.sqrt(2.0/np.pi)*np.exp(-2.0*u**2)*16.0*u**2*slope**2

            value, _ = _integrate.quad(integrand, center-12.0, center+12.0, epsabs=1e-13, epsrel=1e-12)
            return value

        output = np.vectorize(_single, otypes=[float])(phi)
    else:
        raise BadCallError("method is 'analytic' or 'quad', got {!r}.".format(method))

    return _as_output(output)

def fisher_intensity(cfg, phi, method='analytic'):

    if cfg.diffusion_rate != 0.0:
        raise NoiselessOnlyError()

    phi = to_radians(phi)
    n_eff = cfg.n_eff

    if method == 'analytic':
        output = n_eff*np.sin(np.asarray(phi)/2.0)**2
    elif method == 'sum':
        k = np.arange(default_cutoff(n_eff)+1)

        def _single(angle):
            rate = n_eff*np.cos(angle/2.0)**2
            if rate == 0.0:
                return n_eff*np.sin(angle/2.0)**2
            rate_slope = -0.5*n_eff*np.sin(angle)
            probabilities = marginal_prob(cfg, k, angle, port='d')
            return float(np.sum(probabilities*(k/rate-1.0)**2))*rate_slope**2

        output = np.vectorize(_single, otypes=[float])(phi)
    else:
        raise BadCallError("method is 'analytic' or 'sum', got {!r}.".format(method))

    return _as_output(output)

def crb_homodyne_full(cfg, phi):

    with np.errstate(divide='ignore'):
        output = 1.0/np.sqrt(fisher_homodyne_full(cfg, phi))

    return _as_output(output)

def crb_intensity(cfg, phi):

    with np.errstate(divide='ignore'):
        output = 1.0/np.sqrt(fisher_intensity(cfg, phi))

    return _as_output(output)

def _digest_grid(phi_grid):

    phi_grid = np.atleast_1d(np.asarray(to_radians(phi_grid), dtype=float))

    if phi_grid.ndim != 1 or len(phi_grid) == 0:
        raise BadCallError('A phase grid must be a nonempty one-dimensional sequence.')
    if np.any(np.diff(phi_grid) < 0.0):
        raise BadCallError('A phase grid must be sorted.')

    return phi_grid

def scan(cfg, scheme, phi_grid, p0=None, model=None):

    scheme = digest_scheme(scheme, p0)
    phi_grid = _digest_grid(phi_grid)

    if model is None:
        model = get_model(cfg, scheme)

    p, q, dp, stationary, limit, zero = _binary_terms(model, phi_grid)

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        fisher = np.where(stationary | zero, 0.0, dp**2*(1.0/p+1.0/q))
    if model.fisher_limit is not None:
        fisher = np.where(limit, model.fisher_limit, fisher)

    delta_phi = np.atleast_1d(sensitivity(model, phi_grid))

    output = SensitivityScan(phi=phi_grid, signal=np.atleast_1d(model.signal(phi_grid)),
                             p_plus=p, delta_phi=delta_phi, fisher=fisher, config=cfg, scheme=scheme)

    return output

def _fwhm_offsets():

    return np.unique(np.concatenate([np.linspace(0.0, np.pi, 4097), np.geomspace(1e-7, np.pi, 2049)]))

def fwhm(model, peak_phi=0.0):

    peak_phi = to_radians(peak_phi)
    offsets = _fwhm_offsets()
    signal = model.signal

    peak = float(signal(peak_phi))
    baseline = float(np.min(signal(peak_phi+offsets)))

    if not peak-baseline > kernel.degenerate_tolerance:
        raise NoCrossingError('The signal is flat: peak {!r}, baseline {!r}.'.format(peak, baseline))

    half = 0.5*(peak+baseline)

    edges = []
    for side in (+1.0, -1.0):
        angles = peak_phi+side*offsets
        values = np.asarray(signal(angles))
        below = np.nonzero(values <= half)[0]
        if len(below) == 0 or below[0] == 0:
            raise NoCrossingError()
        index = below[0]
        lo, hi = sorted((angles[index-1], angles[index]))
        edges.append(invert_monotone(signal, half, Bracket(lo, hi)))

    output = float(edges[0]-edges[1])

    return output

def _optimizer_grid(bracket):

    size = kernel.grid_points
    lo, hi = bracket.lo, bracket.hi

    grid = np.linspace(lo, hi, size)
    geometric_lo = lo if lo > 0.0 else hi*1e-6
    grid = np.unique(np.concatenate([grid, np.geomspace(geometric_lo, hi, size)]))

    return grid

def _digest_bracket(bracket, gamma):

    if bracket is None:
        bracket = default_bracket_diffused if gamma > 0.0 else default_bracket_noiseless

    if not isinstance(bracket, Bracket):
        bracket = Bracket(*bracket)

    if bracket.lo < 0.0 or bracket.hi > np.pi/2.0:
        raise BadCallError('The search bracket must lie within [0, pi/2].')
    if gamma > 0.0 and bracket.lo <= 0.0:
        raise BadCallError('With phase diffusion the search bracket must exclude phi=0.')

    return bracket

def best_sensitivity(cfg, scheme, bracket=None, p0=None, model=None):

    scheme = digest_scheme(scheme, p0)
    gamma = cfg.diffusion_rate

    if cfg.n_eff <= 0.0:
        raise BadCallError('The best sensitivity needs N_eff > 0.')

    bracket = _digest_bracket(bracket, gamma)

    if model is None:
        model = get_model(cfg, scheme)

    logger.debug('best_sensitivity %s N_eff=%r gamma=%r on [%g, %g]', scheme.label, cfg.n_eff, gamma,
                 bracket.lo, bracket.hi)

    grid = _optimizer_grid(bracket)
    with np.errstate(all='ignore'):
        values = np.atleast_1d(sensitivity(model, grid))

    index = int(np.argmin(values))

    if not np.isfinite(values[index]):
        logger.warning('The sensitivity of %s diverges over the whole bracket [%g, %g].',
                       scheme.label, bracket.lo, bracket.hi)
        phi_min, delta_phi_min = float('nan'), float('inf')
    else:
        sub_bracket = Bracket(grid[max(index-1, 0)], grid[min(index+1, len(grid)-1)])

        def objective(phi):
            with np.errstate(all='ignore'):
                return sensitivity(model, phi)

        phi_min, delta_phi_min = minimize_scalar(objective, sub_bracket)
        if not improves(delta_phi_min, values[index]):
            phi_min, delta_phi_min = float(grid[index]), float(values[index])

    analytic = analytic_optimum(cfg, scheme)
    if analytic is None:
        analytic_phi_min, analytic_delta_phi_min, series_delta_phi_min = None, None, None
    else:
        analytic_phi_min, analytic_delta_phi_min, series_delta_phi_min = analytic

    try:
        width = fwhm(model)
    except NoCrossingError:
        width = float('nan')

    output = OptimumReport(phi_min=phi_min, delta_phi_min=delta_phi_min,
                           analytic_delta_phi_min=analytic_delta_phi_min,
                           analytic_phi_min=analytic_phi_min, fwhm=width,
                           series_delta_phi_min=series_delta_phi_min,
                           config=cfg, scheme=scheme, bracket=bracket)

    return output

def window_best_sensitivity(cfg, p0, bracket=None):

    return best_sensitivity(cfg, DetectionScheme.homodyne_window(p0), bracket=bracket)

def crb_saturation_check(model, phi_grid, h=None, method=None):

    phi_grid = _digest_grid(phi_grid)

    fisher = np.atleast_1d(fisher_binary(model, phi_grid, h, method))
    delta_phi = np.atleast_1d(sensitivity(model, phi_grid, h, method))

    finite = np.isfinite(delta_phi) & (fisher > 0.0)

    if not np.any(finite):
        return 0.0

    output = float(np.max(np.abs(delta_phi[finite]*np.sqrt(fisher[finite])-1.0)))

    return output

# Closed forms

def analytic_signal(cfg, scheme, phi, p0=None):

    scheme = digest_scheme(scheme, p0)
    phi = to_radians(phi)

    return _schemes.dict_analytic_signal[scheme.name](phi, cfg.n_eff, cfg.diffusion_rate, **scheme.params)

def analytic_sensitivity(cfg, scheme, phi, form='exact', p0=None):

    if form not in ('exact', 'expansion'):
        raise BadCallError("form is 'exact' or 'expansion', got {!r}.".format(form))

    scheme = digest_scheme(scheme, p0)
    phi = to_radians(phi)

    return _schemes.dict_analytic_sensitivity[scheme.name](phi, cfg.n_eff, cfg.diffusion_rate, form=form,
                                                           **scheme.params)

def analytic_fwhm(cfg, scheme, p0=None):

    scheme = digest_scheme(scheme, p0)

    if cfg.n_eff <= 0.0:
        return None

    output = _schemes.dict_analytic_fwhm[scheme.name](cfg.n_eff, cfg.diffusion_rate, **scheme.params)

    return None if output is None else float(output)

def analytic_optimum(cfg, scheme, p0=None):

    scheme = digest_scheme(scheme, p0)

    if cfg.n_eff <= 0.0:
        return None

    return _schemes.dict_analytic_optimum[scheme.name](cfg.n_eff, cfg.diffusion_rate, **scheme.params)

def analytic_deviation(cfg, scheme, phi_grid, threshold=deviation_threshold, p0=None, model=None):

    scheme = digest_scheme(scheme, p0)
    phi_grid = _digest_grid(phi_grid)

    if model is None:
        model = get_model(cfg, scheme)

    exact = np.atleast_1d(sensitivity(model, phi_grid))
    analytic = analytic_sensitivity(cfg, scheme, phi_grid)

    if analytic is None:
        raise BadCallError('No closed-form sensitivity exists for {}.'.format(scheme.label))

    analytic = np.atleast_1d(analytic)

    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        deviation = np.abs(exact-analytic)/exact

    flagged = ~(deviation <= threshold)

    if np.any(flagged):
        logger.warning('The closed-form sensitivity of %s deviates by more than %g at %d of %d phases.',
                       scheme.label, threshold, int(np.sum(flagged)), len(phi_grid))

    output = {'phi': phi_grid, 'exact': exact, 'analytic': analytic, 'deviation': deviation,
              'flagged': flagged}

    return output

def resolution(fwhm, wavelength):

    return _units.resolution(fwhm, wavelength)

def check_invariants(cfg, scheme, p0=None, grid_points=200):
    """Runs the invariant suite, returning {name: violation} for every failed check."""

    scheme = digest_scheme(scheme, p0)
    model = get_model(cfg, scheme)
    violations = {}

    phi = np.linspace(-np.pi, np.pi, 2*grid_points+1)
    p = np.asarray(model.p_plus(phi))
    q = np.asarray(model.p_minus(phi))

    bound_excess = float(max(np.max(-p), np.max(p-model.bound), 0.0))
    if bound_excess > evenness_tolerance:
        violations['bounds'] = bound_excess

    evenness = float(np.max(np.abs(p-np.asarray(model.p_plus(-phi)))))
    if evenness > evenness_tolerance:
        violations['evenness'] = evenness

    periodicity = float(np.max(np.abs(p-np.asarray(model.p_plus(phi+2.0*np.pi)))))
    if periodicity > periodicity_tolerance:
        violations['periodicity'] = periodicity

    complement = float(np.max(np.abs(p+q-1.0)))
    if complement > complement_tolerance:
        violations['complement'] = complement

    saturation = crb_saturation_check(model, np.linspace(0.01, 1.5, grid_points))
    if saturation > saturation_tolerance:
        violations['crb_saturation'] = saturation

    if scheme.name in ('parity', 'zero-nonzero') and cfg.n_eff <= 1000.0:
        lossless = apply_loss(cfg)
        noiseless = binary_model(lossless, scheme)
        probes = np.linspace(0.05, np.pi, 10)
        oracle = brute_force_binary(lossless, scheme, probes)
        agreement = float(np.max(np.abs(oracle-noiseless.p_plus(probes))))
        if agreement > brute_force_tolerance:
            violations['brute_force'] = agreement

    if violations:
        logger.warning('Invariant violations for %s: %s', scheme.label, violations)

    return violations
