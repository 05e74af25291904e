import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize as _optimize
from scipy import special as _special

from . import kernel
from ._private_tools.exceptions import BadCallError, DomainError, TargetOutsideRangeError
from ._private_tools.exceptions import ConvergenceError

logger = logging.getLogger(__name__)

branch_point = -np.exp(-1.0)
lambert_tolerance = 1e-13
max_polish_steps = 20
tie_tolerance = 1e-12

@dataclass(frozen=True)
class Bracket:

    lo: float
    hi: float

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise BadCallError('A bracket needs finite edges.')
        if not self.lo < self.hi:
            raise BadCallError('A bracket needs lo < hi, got ({}, {}).'.format(self.lo, self.hi))

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi

@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite rule for the weight exp(-t**2) on the real line."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def __post_init__(self):
        if len(self.nodes) != self.order or len(self.weights) != self.order:
            raise BadCallError('Nodes and weights must have length equal to the order.')
        if np.any(np.diff(self.nodes) <= 0.0):
            raise BadCallError('Quadrature nodes must be strictly increasing.')
        if np.any(self.weights <= 0.0):
            raise BadCallError('Quadrature weights must be positive.')

    def integrate(self, f):
        """Approximates the integral of exp(-t**2) f(t) over the real line."""
        return np.dot(self.weights, f(self.nodes))

def erf(x):

    return _special.erf(x)

def erfc(x):

    return _special.erfc(x)

def lambert_w0(z):
    """Principal branch of the Lambert W function on [-1/e, inf).

    Raises DomainError below the branch point -1/e. Values within rounding of the
    branch point return exactly -1. The scipy estimate is polished by Halley steps
    until |w*exp(w) - z| <= 1e-13*max(1, |z|).
    """

    z_array = np.asarray(z, dtype=float)

    if np.any(z_array < branch_point*(1.0+4.0*np.finfo(float).eps)):
        raise DomainError('The Lambert W argument must satisfy z >= -1/e, got {}.'.format(z))

    at_branch = z_array <= branch_point
    z_inner = np.where(at_branch, 0.0, z_array)

    with np.errstate(invalid='ignore'):
        output = np.real(_special.lambertw(z_inner, 0))

    # series about the branch point
    p = np.sqrt(np.maximum(2.0*(np.e*z_inner+1.0), 0.0))
    output = np.where(np.isfinite(output), output, -1.0+p-p**2/3.0)

    target = lambert_tolerance*np.maximum(1.0, np.abs(z_inner))
    for _ in range(max_polish_steps):
        ew = np.exp(output)
        residual = output*ew-z_inner
        if np.all(np.abs(residual) <= target):
            break
        wp1 = output+1.0
        denominator = ew*wp1-(output+2.0)*residual/(2.0*wp1)
        with np.errstate(divide='ignore', invalid='ignore'):
            step = np.where((wp1 > 0.0) & (denominator != 0.0), residual/denominator, 0.0)
        output = np.maximum(output-step, -1.0)

    output = np.where(at_branch, -1.0, output)

    if output.ndim == 0:
        output = float(output)

    return output

@lru_cache(maxsize=None)
def gauss_hermite(order):

    if isinstance(order, bool) or not isinstance(order, (int, np.integer)):
        raise BadCallError('The quadrature order must be an integer.')

    if not (kernel.min_quadrature_order <= order <= kernel.max_quadrature_order):
        raise BadCallError('The quadrature order must lie in [{}, {}], got {}.'.format(
            kernel.min_quadrature_order, kernel.max_quadrature_order, order))

    nodes, weights = np.polynomial.hermite.hermgauss(int(order))

    # exact symmetry about 0
    nodes = 0.5*(nodes-nodes[::-1])
    weights = 0.5*(weights+weights[::-1])
    weights = weights*(np.sqrt(np.pi)/np.sum(weights))

    nodes.setflags(write=False)
    weights.setflags(write=False)

    return QuadratureRule(nodes, weights, int(order))

def improves(candidate, reference):
    """True when candidate beats reference by more than rounding."""

    if np.isinf(reference):
        return candidate < reference

    return reference-candidate > tie_tolerance*abs(reference)

def minimize_scalar(f, bracket, tol=None, max_iterations=None):
    """Bounded Brent minimisation, the bracket edges included as candidates.

    Returns (x_min, f_min). Ties are resolved toward the smaller abscissa.
    """

    if tol is None:
        tol = kernel.optimizer_tolerance
    if max_iterations is None:
        max_iterations = kernel.max_iterations

    if not isinstance(bracket, Bracket):
        bracket = Bracket(*bracket)

    if tol <= 0.0:
        raise BadCallError('The tolerance must be positive.')

    result = _optimize.minimize_scalar(f, bounds=(bracket.lo, bracket.hi), method='bounded',
                                       options={'xatol': tol, 'maxiter': max_iterations})

    if not result.success:
        raise ConvergenceError('Bounded minimisation on [{}, {}] did not converge in {} iterations.'.format(
            bracket.lo, bracket.hi, max_iterations))

    candidates = [(bracket.lo, float(f(bracket.lo))), (float(result.x), float(result.fun)),
                  (bracket.hi, float(f(bracket.hi)))]

    x_min, f_min = candidates[0]
    for x, fx in candidates[1:]:
        if np.isnan(f_min) or improves(fx, f_min):
            x_min, f_min = x, fx

    logger.debug('minimize_scalar on [%g, %g]: x_min=%r f_min=%r (%d evaluations)',
                 bracket.lo, bracket.hi, x_min, f_min, result.nfev)

    return x_min, f_min

def invert_monotone(f, target, bracket, tol=None, max_iterations=None):

    if tol is None:
        tol = kernel.inversion_tolerance
    if max_iterations is None:
        max_iterations = kernel.max_iterations

    if not isinstance(bracket, Bracket):
        bracket = Bracket(*bracket)

    f_lo = float(f(bracket.lo))-target
    f_hi = float(f(bracket.hi))-target

    if f_lo == 0.0:
        return bracket.lo
    if f_hi == 0.0:
        return bracket.hi

    if np.sign(f_lo) == np.sign(f_hi) or np.isnan(f_lo) or np.isnan(f_hi):
        raise TargetOutsideRangeError('Target {!r} is not straddled by f on [{}, {}].'.format(
            target, bracket.lo, bracket.hi))

    try:
        output = _optimize.brentq(lambda x: float(f(x))-target, bracket.lo, bracket.hi,
                                  xtol=tol*1e-4, maxiter=max_iterations)
    except RuntimeError as error:
        raise ConvergenceError(str(error))

    return output
