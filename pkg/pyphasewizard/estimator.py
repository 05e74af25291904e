"""
Monte Carlo validation of the signal-inversion estimator.

Each repetition draws nu binary outcomes at the true phase, inverts the observed
frequency on a monotone branch of P(+|phi) and collects the estimate. The spread of
the estimates is compared with the error-propagation prediction delta_phi/sqrt(nu).

Density outcomes cannot be sampled: the 'homodyne-zero' scheme is run through a
narrow 'homodyne-window' model whose half-width is the configured sampling window.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernel
from ._private_tools.exceptions import BadCallError, ExperimentAbortedError, TargetOutsideRangeError
from ._private_tools.schemes import digest_scheme
from .interferometer import InterferometerConfig, DetectionScheme, get_model
from .metrology import sensitivity
from .specfun import Bracket, invert_monotone
from .units import to_radians

logger = logging.getLogger(__name__)

min_trials = 100
min_repeats = 10
max_seed = 2**64

default_branches = {
    'homodyne-window': (0.0, np.pi/2.0),
    'homodyne-zero': (0.0, np.pi/2.0),
    'parity': (0.0, np.pi),
    'zero-nonzero': (0.0, np.pi),
    }

@dataclass(frozen=True)
class ExperimentSpec:

    cfg: InterferometerConfig
    scheme: DetectionScheme
    phi_true: float
    trials: int
    repeats: int
    seed: int = 0
    branch: Optional[Bracket] = None

    def __post_init__(self):

        object.__setattr__(self, 'scheme', digest_scheme(self.scheme))
        object.__setattr__(self, 'phi_true', to_radians(self.phi_true))

        for name, minimum in (('trials', min_trials), ('repeats', min_repeats)):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise BadCallError('{} must be an integer, got {!r}.'.format(name, value))
            if value < minimum:
                raise BadCallError('{} must be >= {}, got {}.'.format(name, minimum, value))
            object.__setattr__(self, name, int(value))

        if isinstance(self.seed, bool) or int(self.seed) != self.seed or not 0 <= self.seed < max_seed:
            raise BadCallError('The seed must be an unsigned 64-bit integer, got {!r}.'.format(self.seed))
        object.__setattr__(self, 'seed', int(self.seed))

        branch = self.branch
        if branch is None:
            branch = default_branches[self.scheme.name]
        if not isinstance(branch, Bracket):
            branch = Bracket(*branch)
        object.__setattr__(self, 'branch', branch)

        if not branch.contains(self.phi_true):
            raise BadCallError('phi_true={!r} lies outside the inversion branch [{}, {}].'.format(
                self.phi_true, branch.lo, branch.hi))

    @property
    def sampled_scheme(self):
        if self.scheme.name == 'homodyne-zero':
            return DetectionScheme.homodyne_window(kernel.sampling_window)
        return self.scheme

@dataclass(frozen=True)
class EstimationReport:

    spec: ExperimentSpec
    mean_estimate: float
    empirical_std: float
    predicted_std: float
    failures: int
    degenerate: bool = False

    @property
    def ratio(self):
        if self.predicted_std == 0.0:
            return float('nan')
        return self.empirical_std/self.predicted_std

    def as_dict(self):
        spec = self.spec
        output = {
            'scheme': spec.scheme.name,
            'sampled_scheme': spec.sampled_scheme.label,
            'N': spec.cfg.mean_photons,
            'gamma': spec.cfg.diffusion_rate,
            'transmission': spec.cfg.transmission,
            'phi_true': spec.phi_true,
            'trials': spec.trials,
            'repeats': spec.repeats,
            'seed': spec.seed,
            'mean_estimate': self.mean_estimate,
            'empirical_std': self.empirical_std,
            'predicted_std': self.predicted_std,
            'ratio': self.ratio,
            'failures': self.failures,
            'degenerate': self.degenerate,
            }
        return output

def sampling_model(spec):

    return get_model(spec.cfg, spec.sampled_scheme)

def substream(seed, repetition):

    sequence = np.random.SeedSequence(seed, spawn_key=(repetition,))

    return np.random.Generator(np.random.PCG64(sequence))

def _frequency(model, spec, repetition):

    probability = float(np.clip(model.p_plus(spec.phi_true), 0.0, 1.0))
    count = substream(spec.seed, repetition).binomial(spec.trials, probability)

    return count/spec.trials

def sample_outcomes(spec, repetition=0, model=None):

    if model is None:
        model = sampling_model(spec)

    return _frequency(model, spec, repetition)

def invert_signal(model, f, branch):

    if not isinstance(branch, Bracket):
        branch = Bracket(*branch)

    return invert_monotone(model.p_plus, f, branch)

def run_experiment(spec):

    model = sampling_model(spec)

    predicted_std = sensitivity(model, spec.phi_true)/np.sqrt(spec.trials)

    if not np.isfinite(predicted_std):
        raise ExperimentAbortedError('The predicted spread diverges at phi_true={!r} ({} is stationary there).'.format(
            spec.phi_true, spec.scheme.label))

    estimates = []
    failures = 0

    for repetition in range(spec.repeats):
        f = _frequency(model, spec, repetition)
        try:
            estimates.append(invert_signal(model, f, spec.branch))
        except TargetOutsideRangeError:
            failures += 1
            logger.debug('Repetition %d: frequency %r outside the branch range', repetition, f)

    if failures > kernel.failure_rate_limit*spec.repeats:
        raise ExperimentAbortedError('{} of {} inversions fell outside the branch [{}, {}].'.format(
            failures, spec.repeats, spec.branch.lo, spec.branch.hi))

    estimates = np.asarray(estimates)
    mean_estimate = float(np.mean(estimates))
    empirical_std = float(np.std(estimates, ddof=1)) if len(estimates) > 1 else 0.0

    at_edge = spec.phi_true in (spec.branch.lo, spec.branch.hi)
    degenerate = bool(empirical_std == 0.0 and at_edge)

    if failures:
        logger.info('%d of %d repetitions failed the inversion', failures, spec.repeats)

    output = EstimationReport(spec=spec, mean_estimate=mean_estimate, empirical_std=empirical_std,
                              predicted_std=float(predicted_std), failures=failures, degenerate=degenerate)

    return output
