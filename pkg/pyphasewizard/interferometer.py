"""
Coherent-light Mach-Zehnder interferometer.

Output statistics of a coherent state |alpha> entering one port, the binary-outcome
probability models of the supported detection schemes, photon loss and Gaussian
phase diffusion.
"""

import logging
import warnings
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.special import gammaln, xlogy
from scipy.stats import poisson

from . import kernel
from . import schemes as _schemes
from ._private_tools.exceptions import BadCallError, QuadratureConvergenceError, TailBoundWarning
from ._private_tools.schemes import digest_scheme, digest_scheme_name
from .specfun import QuadratureRule, gauss_hermite
from .units import to_radians

logger = logging.getLogger(__name__)

tail_bound = 1e-12

@dataclass(frozen=True)
class InterferometerConfig:

    mean_photons: float
    diffusion_rate: float = 0.0
    transmission: float = 1.0

    def __post_init__(self):
        for name in ('mean_photons', 'diffusion_rate', 'transmission'):
            value = getattr(self, name)
            if isinstance(value, bool) or not np.isfinite(value):
                raise BadCallError('{} must be a finite real number, got {!r}.'.format(name, value))
            object.__setattr__(self, name, float(value))
        if self.mean_photons < 0.0:
            raise BadCallError('The mean photon number must be >= 0.')
        if self.diffusion_rate < 0.0:
            raise BadCallError('The diffusion rate must be >= 0.')
        if not 0.0 <= self.transmission <= 1.0:
            raise BadCallError('The transmission must lie in [0, 1].')

    @property
    def n_eff(self):
        return self.mean_photons*self.transmission

    @property
    def gamma(self):
        return self.diffusion_rate

    @property
    def alpha(self):
        return np.sqrt(self.mean_photons)

    @property
    def delta(self):
        return np.sqrt(1.0+2.0*self.n_eff*self.diffusion_rate)

    @property
    def delta0(self):
        return np.sqrt(1.0+self.n_eff*self.diffusion_rate)

    def with_photons(self, mean_photons):
        return replace(self, mean_photons=mean_photons)

    def noiseless(self):
        return replace(self, diffusion_rate=0.0)

@dataclass(frozen=True)
class DetectionScheme:

    name: str
    p0: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'name', digest_scheme_name(self.name))
        if self.name == 'homodyne-window':
            if self.p0 is None or not np.isfinite(self.p0) or self.p0 <= 0.0:
                raise BadCallError('The homodyne window needs a half-width p0 > 0, got {!r}.'.format(self.p0))
            object.__setattr__(self, 'p0', float(self.p0))
        elif self.p0 is not None:
            raise BadCallError("Only the 'homodyne-window' scheme takes a window half-width.")

    @classmethod
    def homodyne_window(cls, p0):
        return cls('homodyne-window', p0)

    @classmethod
    def homodyne_zero(cls):
        return cls('homodyne-zero')

    @classmethod
    def parity(cls):
        return cls('parity')

    @classmethod
    def zero_nonzero(cls):
        return cls('zero-nonzero')

    @property
    def params(self):
        return {'p0': self.p0} if self.name == 'homodyne-window' else {}

    @property
    def label(self):
        if self.name == 'homodyne-window':
            return '{}(p0={!r})'.format(self.name, self.p0)
        return self.name

@dataclass(frozen=True)
class BinaryModel:
    """P(+|phi) with its complement, derivative and outcome labels (mu+, mu-).

    Every callable takes phases in radians (float, array or pint quantity).
    """

    p_plus: Callable
    p_minus: Callable
    dp_plus: Callable
    outcome_values: Tuple[float, float]
    is_density: bool = False
    fisher_limit: Optional[float] = None
    scheme: Optional[DetectionScheme] = None
    n_eff: float = 0.0
    gamma: float = 0.0
    method: str = field(default='closed-form', compare=False)

    def signal(self, phi):
        mu_plus, mu_minus = self.outcome_values
        return mu_plus*self.p_plus(phi)+mu_minus*self.p_minus(phi)

    def signal_derivative(self, phi):
        mu_plus, mu_minus = self.outcome_values
        return (mu_plus-mu_minus)*self.dp_plus(phi)

    @property
    def bound(self):
        return _schemes.api_homodyne_zero.peak_density if self.is_density else 1.0

def _radians(function):

    def wrapper(phi):
        return function(to_radians(phi))

    return wrapper

def homodyne_density(cfg, p, phi):

    phi = to_radians(phi)
    center = p+np.sqrt(cfg.n_eff)*np.sin(phi)/2.0

    return np.sqrt(2.0/np.pi)*np.exp(-2.0*center**2)

def quadrature_mean(cfg, phi):

    phi = to_radians(phi)

    return -np.sqrt(cfg.n_eff)*np.sin(phi)/2.0

def coincidence_prob(cfg, n, m, phi):

    phi = to_radians(phi)
    n = np.asarray(n)
    m = np.asarray(m)

    if np.any(n < 0) or np.any(m < 0):
        raise BadCallError('Photon counts must be nonnegative.')

    n_eff = cfg.n_eff
    log_p = (-n_eff+xlogy(n, n_eff*np.sin(phi/2.0)**2)+xlogy(m, n_eff*np.cos(phi/2.0)**2)
             -gammaln(n+1.0)-gammaln(m+1.0))

    output = np.exp(log_p)

    if np.ndim(output) == 0:
        output = float(output)

    return output

def marginal_prob(cfg, k, phi, port='d'):

    phi = to_radians(phi)
    k = np.asarray(k)

    if port == 'd':
        rate = cfg.n_eff*np.cos(phi/2.0)**2
    elif port == 'c':
        rate = cfg.n_eff*np.sin(phi/2.0)**2
    else:
        raise BadCallError("The output port is 'c' or 'd', got {!r}.".format(port))

    output = np.exp(xlogy(k, rate)-rate-gammaln(k+1.0))

    if np.ndim(output) == 0:
        output = float(output)

    return output

def intensity_signal(cfg, phi):

    phi = to_radians(phi)

    return cfg.n_eff*np.cos(phi/2.0)**2

def apply_loss(cfg):

    return InterferometerConfig(cfg.n_eff, cfg.diffusion_rate, 1.0)

def binary_model(cfg, scheme, p0=None):

    scheme = digest_scheme(scheme, p0)
    name = scheme.name
    params = scheme.params
    n_eff = cfg.n_eff

    p_plus = _schemes.dict_p_plus[name]
    p_minus = _schemes.dict_p_minus[name]
    dp_plus = _schemes.dict_dp_plus[name]

    output = BinaryModel(
        p_plus=_radians(lambda phi: p_plus(phi, n_eff, **params)),
        p_minus=_radians(lambda phi: p_minus(phi, n_eff, **params)),
        dp_plus=_radians(lambda phi: dp_plus(phi, n_eff, **params)),
        outcome_values=_schemes.dict_outcome_values[name],
        is_density=_schemes.dict_is_density[name],
        fisher_limit=_schemes.dict_fisher_limit[name](n_eff, **params),
        scheme=scheme,
        n_eff=n_eff,
        gamma=0.0,
        )

    return output

def default_cutoff(n_eff):

    return int(np.ceil(n_eff+10.0*np.sqrt(n_eff)+20.0))

def brute_force_binary(cfg, scheme, phi, cutoff=None):

    scheme = digest_scheme(scheme)

    if scheme.name not in ('parity', 'zero-nonzero'):
        raise BadCallError('The Fock-sum oracle covers the counting schemes only, got {}.'.format(scheme.name))

    if cutoff is None:
        cutoff = default_cutoff(cfg.n_eff)

    # both marginals are Poisson with mean at most N_eff
    tail = 2.0*poisson.sf(cutoff, cfg.n_eff)
    if tail > tail_bound:
        warnings.warn('Fock cutoff {} leaves a Poisson tail of {:.3g}.'.format(cutoff, tail), TailBoundWarning)

    if scheme.name == 'parity':
        n = np.arange(0, cutoff+1, 2)
    else:
        n = np.zeros(1, dtype=int)
    m = np.arange(0, cutoff+1)

    def _single(angle):
        return float(np.sum(coincidence_prob(cfg, n[:, None], m[None, :], angle)))

    phi = to_radians(phi)

    if np.ndim(phi) == 0:
        output = _single(phi)
    else:
        output = np.array([_single(angle) for angle in np.ravel(phi)]).reshape(np.shape(phi))

    return output

# Phase diffusion

def _probe_phases():

    return np.concatenate([np.linspace(0.0, np.pi, 33), np.geomspace(1e-3, 0.5, 16)])

def _gauss_hermite_smear(function, gamma, rule):

    spread = 2.0*np.sqrt(gamma)
    nodes = rule.nodes
    weights = rule.weights/np.sqrt(np.pi)

    def smeared(phi):
        phi = np.asarray(phi, dtype=float)
        values = function(phi[..., None]+spread*nodes)
        output = np.dot(values, weights)
        if np.ndim(output) == 0:
            output = float(output)
        return output

    return smeared

def _gauss_hermite_shift(model, gamma, rule, other):

    probes = _probe_phases()
    tolerance = kernel.convergence_tolerance

    shift = 0.0
    for function in (model.p_plus, model.p_minus):
        a = _gauss_hermite_smear(function, gamma, rule)(probes)
        b = _gauss_hermite_smear(function, gamma, other)(probes)
        shift = max(shift, float(np.max(np.abs(a-b))))

    a = _gauss_hermite_smear(model.dp_plus, gamma, rule)(probes)
    b = _gauss_hermite_smear(model.dp_plus, gamma, other)(probes)
    scale = np.maximum(1.0, np.abs(b))
    shift = max(shift, float(np.max(np.abs(a-b)/scale)))

    return shift, tolerance

def _gauss_hermite_model(model, gamma, rule):

    if 2*rule.order <= kernel.max_quadrature_order:
        other = gauss_hermite(2*rule.order)
    else:
        other = gauss_hermite(rule.order//2)

    shift, tolerance = _gauss_hermite_shift(model, gamma, rule, other)

    if shift > tolerance:
        raise QuadratureConvergenceError(
            'Gauss-Hermite orders {} and {} differ by {:.3g} at gamma={!r}, N_eff={!r}.'.format(
                rule.order, other.order, shift, gamma, model.n_eff))

    logger.debug('Gauss-Hermite diffusion with order %d (doubling shift %.3g)', rule.order, shift)

    output = replace(model,
                     p_plus=_radians(_gauss_hermite_smear(model.p_plus, gamma, rule)),
                     p_minus=_radians(_gauss_hermite_smear(model.p_minus, gamma, rule)),
                     dp_plus=_radians(_gauss_hermite_smear(model.dp_plus, gamma, rule)),
                     fisher_limit=None, gamma=gamma, method='gauss-hermite')

    return output

min_fourier_size = 2**10
max_fourier_size = 2**20

def _cosine_coefficients(function, size):

    angles = 2.0*np.pi*np.arange(size)/size
    coefficients = np.fft.rfft(function(angles))/size
    output = 2.0*coefficients.real
    output[0] *= 0.5
    output[-1] = 0.0

    return output

class _CosineSeries:

    def __init__(self, coefficients, gamma):

        k = np.arange(len(coefficients), dtype=float)
        damped = coefficients*np.exp(-gamma*k**2)
        keep = np.nonzero(np.abs(damped) > 1e-18)[0]
        size = keep[-1]+1 if len(keep) else 1
        self.k = k[:size]
        self.b = damped[:size]

    def value(self, phi):
        phi = np.asarray(phi, dtype=float)
        output = np.cos(phi[..., None]*self.k) @ self.b
        if np.ndim(output) == 0:
            output = float(output)
        return output

    def derivative(self, phi):
        phi = np.asarray(phi, dtype=float)
        output = -(np.sin(phi[..., None]*self.k) @ (self.k*self.b))
        if np.ndim(output) == 0:
            output = float(output)
        return output

def _fourier_model(model, gamma):

    probes = _probe_phases()
    tolerance = kernel.convergence_tolerance

    size = min_fourier_size
    plus = _CosineSeries(_cosine_coefficients(model.p_plus, size), gamma)
    minus = _CosineSeries(_cosine_coefficients(model.p_minus, size), gamma)

    while True:
        if size >= max_fourier_size:
            raise QuadratureConvergenceError(
                'The spectral diffusion did not converge with {} samples.'.format(size))
        size *= 2
        new_plus = _CosineSeries(_cosine_coefficients(model.p_plus, size), gamma)
        new_minus = _CosineSeries(_cosine_coefficients(model.p_minus, size), gamma)
        shift = max(float(np.max(np.abs(new_plus.value(probes)-plus.value(probes)))),
                    float(np.max(np.abs(new_minus.value(probes)-minus.value(probes)))))
        plus, minus = new_plus, new_minus
        if shift < tolerance:
            break

    logger.debug('Spectral diffusion with %d samples, %d cosine terms (shift %.3g)', size, len(plus.k), shift)

    output = replace(model,
                     p_plus=_radians(plus.value),
                     p_minus=_radians(minus.value),
                     dp_plus=_radians(plus.derivative),
                     fisher_limit=None, gamma=gamma, method='fourier')

    return output

def diffuse_model(model, gamma, rule=None, method=None):
    """Gaussian phase diffusion of a noiseless model.

    The noiseless probabilities are convolved with the normalized kernel
    (4 pi gamma)^(-1/2) exp(-(xi-phi)^2/(4 gamma)). With an explicit rule or
    method='gauss-hermite' the quadrature is strict and raises
    QuadratureConvergenceError when doubling the order moves the result.
    method='auto' falls back to the spectral evaluation in that case.
    """

    if gamma < 0.0 or not np.isfinite(gamma):
        raise BadCallError('The diffusion rate must be a finite number >= 0.')

    if gamma == 0.0:
        return model

    if model.gamma != 0.0:
        raise BadCallError('The model is already diffused.')

    if method is None:
        method = 'gauss-hermite' if rule is not None else kernel.diffusion_method

    if method not in kernel.diffusion_methods:
        raise BadCallError('Unknown diffusion method {!r}; use one of {}.'.format(method, kernel.diffusion_methods))

    if method == 'fourier':
        return _fourier_model(model, gamma)

    if rule is None:
        rule = gauss_hermite(kernel.quadrature_order)
    elif not isinstance(rule, QuadratureRule):
        raise BadCallError('rule must be a QuadratureRule.')

    if method == 'gauss-hermite':
        return _gauss_hermite_model(model, gamma, rule)

    try:
        output = _gauss_hermite_model(model, gamma, rule)
    except QuadratureConvergenceError as error:
        logger.warning('%s Falling back to the spectral evaluation.', error)
        output = _fourier_model(model, gamma)

    return output

def get_model(cfg, scheme, p0=None, rule=None, method=None):

    lossless = apply_loss(cfg)
    model = binary_model(lossless, scheme, p0)

    return diffuse_model(model, cfg.diffusion_rate, rule=rule, method=method)
