import numpy as np

from ..specfun import lambert_w0

scheme_name = 'parity'
is_density = False
outcome_values = (1.0, -1.0)

def _exponent(phi, n_eff):

    return 2.0*n_eff*np.sin(phi/2.0)**2

def p_plus(phi, n_eff):

    return 0.5*(1.0+np.exp(-_exponent(phi, n_eff)))

def p_minus(phi, n_eff):

    return -0.5*np.expm1(-_exponent(phi, n_eff))

def dp_plus(phi, n_eff):

    return -0.5*n_eff*np.sin(phi)*np.exp(-_exponent(phi, n_eff))

def fisher_limit(n_eff):

    return n_eff

def analytic_signal(phi, n_eff, gamma):

    output = None

    if gamma == 0.0:
        output = np.exp(-_exponent(phi, n_eff))
    else:
        delta = np.sqrt(1.0+2.0*n_eff*gamma)
        output = np.exp(-n_eff*phi**2/(2.0*delta**2))/delta

    return output

def analytic_sensitivity(phi, n_eff, gamma, form='exact'):

    output = None
    phi = np.asarray(phi, dtype=float)

    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        if form == 'expansion':
            delta = np.sqrt(1.0+2.0*n_eff*gamma)
            if gamma == 0.0:
                output = (1.0+(1.0+2.0*n_eff)/8.0*phi**2)/np.sqrt(n_eff)
            else:
                output = (delta**2/(n_eff*np.abs(phi)))*np.sqrt(delta**2*np.exp(n_eff*phi**2/delta**2)-1.0)
        elif gamma == 0.0:
            output = np.sqrt(np.expm1(2.0*_exponent(phi, n_eff)))/(n_eff*np.abs(np.sin(phi)))
        else:
            delta = np.sqrt(1.0+2.0*n_eff*gamma)
            output = (delta**2/(n_eff*np.abs(phi)))*np.sqrt(delta**2*np.exp(n_eff*phi**2/delta**2)-1.0)

    if output.ndim == 0:
        output = float(output)

    return output

def analytic_fwhm(n_eff, gamma):

    delta = np.sqrt(1.0+2.0*n_eff*gamma)

    return 2.0*delta*np.sqrt(2.0*np.log(2.0)/n_eff)

def analytic_optimum(n_eff, gamma):

    delta = np.sqrt(1.0+2.0*n_eff*gamma)
    w = lambert_w0(-np.exp(-1.0)/delta**2)

    phi_min = delta*np.sqrt((1.0+w)/n_eff)
    delta_phi_min = delta**2/np.sqrt(n_eff)*np.exp((1.0+w)/2.0)
    x = n_eff*gamma
    delta_phi_series = (1.0+np.sqrt(x)+11.0*x/6.0)/np.sqrt(n_eff)

    return float(phi_min), float(delta_phi_min), float(delta_phi_series)
