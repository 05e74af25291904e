"""
PyPhaseWizard
Binary-outcome phase metrology with coherent light in a Mach-Zehnder interferometer.
"""

from ._version import __version__

# Add imports here
from .interferometer import InterferometerConfig, DetectionScheme, BinaryModel
from .interferometer import homodyne_density, coincidence_prob, marginal_prob, intensity_signal, quadrature_mean
from .interferometer import binary_model, brute_force_binary, diffuse_model, apply_loss, get_model
from .metrology import SensitivityScan, OptimumReport
from .metrology import fisher_binary, fisher_homodyne_full, fisher_intensity, sensitivity, scan, fwhm
from .metrology import best_sensitivity, window_best_sensitivity, crb_saturation_check
from .metrology import crb_homodyne_full, crb_intensity
from .metrology import analytic_signal, analytic_sensitivity, analytic_fwhm, analytic_optimum, analytic_deviation
from .metrology import resolution, check_invariants
from .estimator import ExperimentSpec, EstimationReport, sample_outcomes, invert_signal, run_experiment
from .specfun import Bracket, QuadratureRule
from . import specfun
from . import units
from . import configure
from . import kernel as _kernel

_kernel.initialize()
