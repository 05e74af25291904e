import numpy as np
from scipy.special import erf, erfc

scheme_name = 'homodyne-window'
is_density = False
outcome_values = (1.0, 0.0)

def _shift(phi, n_eff):

    return np.sqrt(n_eff)*np.sin(phi)/2.0

def p_plus(phi, n_eff, p0):

    c = _shift(phi, n_eff)
    output = 0.5*(erf(np.sqrt(2.0)*(p0+c))+erf(np.sqrt(2.0)*(p0-c)))

    return output

def p_minus(phi, n_eff, p0):

    c = _shift(phi, n_eff)
    output = 0.5*(erfc(np.sqrt(2.0)*(p0+c))+erfc(np.sqrt(2.0)*(p0-c)))

    return output

def dp_plus(phi, n_eff, p0):

    c = _shift(phi, n_eff)
    dp_dc = np.sqrt(2.0/np.pi)*(np.exp(-2.0*(p0+c)**2)-np.exp(-2.0*(p0-c)**2))
    output = dp_dc*np.sqrt(n_eff)*np.cos(phi)/2.0

    return output

def fisher_limit(n_eff, p0):

    return None

# No closed forms beyond the noiseless probability itself.

def analytic_signal(phi, n_eff, gamma, p0):

    output = None

    if gamma == 0.0:
        output = p_plus(phi, n_eff, p0)

    return output

def analytic_sensitivity(phi, n_eff, gamma, form='exact', p0=None):

    return None

def analytic_fwhm(n_eff, gamma, p0=None):

    return None

def analytic_optimum(n_eff, gamma, p0=None):

    return None
