import numpy as np

from ..specfun import lambert_w0

scheme_name = 'zero-nonzero'
is_density = False
outcome_values = (1.0, 0.0)

def _exponent(phi, n_eff):

    return n_eff*np.sin(phi/2.0)**2

def p_plus(phi, n_eff):

    return np.exp(-_exponent(phi, n_eff))

def p_minus(phi, n_eff):

    return -np.expm1(-_exponent(phi, n_eff))

def dp_plus(phi, n_eff):

    return -0.5*n_eff*np.sin(phi)*p_plus(phi, n_eff)

def fisher_limit(n_eff):

    return n_eff

def analytic_signal(phi, n_eff, gamma):

    output = None

    if gamma == 0.0:
        output = p_plus(phi, n_eff)
    else:
        delta0 = np.sqrt(1.0+n_eff*gamma)
        output = np.exp(-n_eff*phi**2/(4.0*delta0**2))/delta0

    return output

def analytic_sensitivity(phi, n_eff, gamma, form='exact'):

    output = None
    phi = np.asarray(phi, dtype=float)

    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        if form == 'expansion' and gamma == 0.0:
            output = (1.0+(n_eff+2.0)/16.0*phi**2)/np.sqrt(n_eff)
        elif gamma == 0.0:
            output = 2.0*np.sqrt(np.expm1(_exponent(phi, n_eff)))/(n_eff*np.abs(np.sin(phi)))
        else:
            delta0 = np.sqrt(1.0+n_eff*gamma)
            output = (2.0*delta0**2/(n_eff*np.abs(phi)))*np.sqrt(delta0*np.exp(n_eff*phi**2/(4.0*delta0**2))-1.0)

    if output.ndim == 0:
        output = float(output)

    return output

def analytic_fwhm(n_eff, gamma):

    delta0 = np.sqrt(1.0+n_eff*gamma)

    return 4.0*delta0*np.sqrt(np.log(2.0)/n_eff)

def analytic_optimum(n_eff, gamma):

    delta0 = np.sqrt(1.0+n_eff*gamma)
    w = lambert_w0(-np.exp(-1.0)/delta0)

    phi_min = 2.0*delta0*np.sqrt((1.0+w)/n_eff)
    delta_phi_min = delta0/np.sqrt(-n_eff*w)
    x = n_eff*gamma
    delta_phi_series = (1.0+np.sqrt(x)/2.0+17.0*x/24.0)/np.sqrt(n_eff)

    return float(phi_min), float(delta_phi_min), float(delta_phi_series)
