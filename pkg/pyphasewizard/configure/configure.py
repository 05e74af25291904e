from pyphasewizard import kernel
from pyphasewizard._private_tools.exceptions import BadCallError

def reset():

    kernel.initialize()

def _positive(name, value):

    value = float(value)
    if not value > 0.0:
        raise BadCallError('{} must be positive, got {!r}.'.format(name, value))
    return value

def get_quadrature_order():

    return kernel.quadrature_order

def set_quadrature_order(order):

    order = int(order)
    if not (kernel.min_quadrature_order <= order <= kernel.max_quadrature_order):
        raise BadCallError('The quadrature order must lie in [{}, {}].'.format(
            kernel.min_quadrature_order, kernel.max_quadrature_order))
    kernel.quadrature_order = order
    pass

def get_diffusion_methods_supported():

    return kernel.diffusion_methods

def get_diffusion_method():

    return kernel.diffusion_method

def set_diffusion_method(method):

    if method not in kernel.diffusion_methods:
        raise BadCallError('Unknown diffusion method {!r}; use one of {}.'.format(method, kernel.diffusion_methods))
    kernel.diffusion_method = method
    pass

def get_derivative_step():

    return kernel.derivative_step

def set_derivative_step(step):

    kernel.derivative_step = _positive('derivative_step', step)
    pass

def get_stationary_slope():

    return kernel.stationary_slope

def set_stationary_slope(slope):

    kernel.stationary_slope = _positive('stationary_slope', slope)
    pass

def get_degenerate_tolerance():

    return kernel.degenerate_tolerance

def set_degenerate_tolerance(tolerance):

    kernel.degenerate_tolerance = _positive('degenerate_tolerance', tolerance)
    pass

def get_convergence_tolerance():

    return kernel.convergence_tolerance

def set_convergence_tolerance(tolerance):

    kernel.convergence_tolerance = _positive('convergence_tolerance', tolerance)
    pass

def get_optimizer_tolerance():

    return kernel.optimizer_tolerance

def set_optimizer_tolerance(tolerance):

    kernel.optimizer_tolerance = _positive('optimizer_tolerance', tolerance)
    pass

def get_inversion_tolerance():

    return kernel.inversion_tolerance

def set_inversion_tolerance(tolerance):

    kernel.inversion_tolerance = _positive('inversion_tolerance', tolerance)
    pass

def get_max_iterations():

    return kernel.max_iterations

def set_max_iterations(iterations):

    iterations = int(iterations)
    if iterations < 1:
        raise BadCallError('max_iterations must be >= 1.')
    kernel.max_iterations = iterations
    pass

def get_grid_points():

    return kernel.grid_points

def set_grid_points(points):

    points = int(points)
    if points < 3:
        raise BadCallError('grid_points must be >= 3.')
    kernel.grid_points = points
    pass

def get_sampling_window():

    return kernel.sampling_window

def set_sampling_window(p0):

    kernel.sampling_window = _positive('sampling_window', p0)
    pass

def get_failure_rate_limit():

    return kernel.failure_rate_limit

def set_failure_rate_limit(limit):

    limit = float(limit)
    if not 0.0 <= limit <= 1.0:
        raise BadCallError('failure_rate_limit must lie in [0, 1].')
    kernel.failure_rate_limit = limit
    pass

_setters = {
    'quadrature_order': set_quadrature_order,
    'diffusion_method': set_diffusion_method,
    'derivative_step': set_derivative_step,
    'stationary_slope': set_stationary_slope,
    'degenerate_tolerance': set_degenerate_tolerance,
    'convergence_tolerance': set_convergence_tolerance,
    'optimizer_tolerance': set_optimizer_tolerance,
    'inversion_tolerance': set_inversion_tolerance,
    'max_iterations': set_max_iterations,
    'grid_points': set_grid_points,
    'sampling_window': set_sampling_window,
    'failure_rate_limit': set_failure_rate_limit,
    }

def get_settings_supported():

    return list(_setters.keys())

def set_settings(settings):

    for key, value in settings.items():
        if key not in _setters:
            raise BadCallError('Unknown setting {!r}.'.format(key))
        _setters[key](value)
    pass

def load_config_file(path):
    """Reads a flat key=value file; '#' starts a comment, blank lines are skipped."""

    output = {}

    with open(path, 'r', encoding='utf-8') as config_file:
        for line_number, line in enumerate(config_file, start=1):
            line = line.split('#', 1)[0].strip()
            if line == '':
                continue
            if '=' not in line:
                raise BadCallError('{}:{}: expected key=value, got {!r}.'.format(path, line_number, line))
            key, value = line.split('=', 1)
            key = key.strip().replace('-', '_')
            if key == '':
                raise BadCallError('{}:{}: empty key.'.format(path, line_number))
            output[key] = value.strip()

    return output
