from .configure import reset
from .configure import get_quadrature_order, set_quadrature_order
from .configure import get_diffusion_methods_supported, get_diffusion_method, set_diffusion_method
from .configure import get_derivative_step, set_derivative_step
from .configure import get_stationary_slope, set_stationary_slope
from .configure import get_degenerate_tolerance, set_degenerate_tolerance
from .configure import get_convergence_tolerance, set_convergence_tolerance
from .configure import get_optimizer_tolerance, set_optimizer_tolerance
from .configure import get_inversion_tolerance, set_inversion_tolerance
from .configure import get_max_iterations, set_max_iterations
from .configure import get_grid_points, set_grid_points
from .configure import get_sampling_window, set_sampling_window
from .configure import get_failure_rate_limit, set_failure_rate_limit
from .configure import get_settings_supported, set_settings, load_config_file
