import logging
import os

logger = logging.getLogger(__name__)

def initialize():

    global quadrature_order
    global derivative_step
    global stationary_slope
    global degenerate_tolerance
    global convergence_tolerance
    global diffusion_method
    global optimizer_tolerance
    global inversion_tolerance
    global max_iterations
    global grid_points
    global sampling_window
    global failure_rate_limit

    quadrature_order = _quadrature_order_from_environment()
    derivative_step = 1e-5
    stationary_slope = 1e-12
    degenerate_tolerance = 1e-12
    convergence_tolerance = 1e-9
    diffusion_method = 'auto'
    optimizer_tolerance = 1e-10
    inversion_tolerance = 1e-10
    max_iterations = 200
    grid_points = 512
    sampling_window = 0.05
    failure_rate_limit = 0.2

def _quadrature_order_from_environment():

    value = os.environ.get('MZI_QUAD_ORDER', None)

    if value is None or value.strip() == '':
        return default_quadrature_order

    try:
        output = int(value)
    except ValueError:
        logger.warning("MZI_QUAD_ORDER must be an integer, got '%s'; using %d.", value, default_quadrature_order)
        return default_quadrature_order

    if not (min_quadrature_order <= output <= max_quadrature_order):
        logger.warning('MZI_QUAD_ORDER must lie in [%d, %d], got %d; using %d.', min_quadrature_order,
                       max_quadrature_order, output, default_quadrature_order)
        return default_quadrature_order

    return output

default_quadrature_order = 64
min_quadrature_order = 2
max_quadrature_order = 256

diffusion_methods = ['auto', 'gauss-hermite', 'fourier']
