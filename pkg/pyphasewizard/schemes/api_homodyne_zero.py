import numpy as np

scheme_name = 'homodyne-zero'
is_density = True
outcome_values = (1.0, 0.0)

peak_density = np.sqrt(2.0/np.pi)
eta = np.sqrt(np.sqrt(np.e*np.pi/2.0)-1.0)

def p_plus(phi, n_eff):

    return peak_density*np.exp(-0.5*n_eff*np.sin(phi)**2)

def p_minus(phi, n_eff):

    # projector convention: <p+^2> = <p+>
    return 1.0-p_plus(phi, n_eff)

def dp_plus(phi, n_eff):

    return -p_plus(phi, n_eff)*0.5*n_eff*np.sin(2.0*phi)

def fisher_limit(n_eff):

    return None

def analytic_signal(phi, n_eff, gamma):

    output = None

    if gamma == 0.0:
        output = p_plus(phi, n_eff)
    else:
        delta = np.sqrt(1.0+2.0*n_eff*gamma)
        output = peak_density/delta*np.exp(-n_eff*phi**2/(2.0*delta**2))

    return output

def analytic_sensitivity(phi, n_eff, gamma, form='exact'):

    output = None
    phi = np.asarray(phi, dtype=float)

    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        if gamma == 0.0 and form == 'exact':
            output = (2.0/n_eff)*np.sqrt(np.sqrt(np.pi/2.0)*np.exp(0.5*n_eff*np.sin(phi)**2)-1.0)/np.abs(np.sin(2.0*phi))
        else:
            # small-phase Gaussian form, exact at gamma=0 to leading order
            delta = np.sqrt(1.0+2.0*n_eff*gamma)
            output = (delta**2/(n_eff*np.abs(phi)))*np.sqrt(delta*np.sqrt(np.pi/2.0)*np.exp(n_eff*phi**2/(2.0*delta**2))-1.0)

    if output.ndim == 0:
        output = float(output)

    return output

def analytic_fwhm(n_eff, gamma):

    delta = np.sqrt(1.0+2.0*n_eff*gamma)

    return 2.0*delta*np.sqrt(2.0*np.log(2.0)/n_eff)

def analytic_optimum(n_eff, gamma):

    if gamma == 0.0:
        # N sin^2(2 phi) = 4 cos(2 phi)
        phi_min = 0.5*np.arccos((-2.0+np.sqrt(4.0+n_eff**2))/n_eff)
        delta_phi_min = eta/np.sqrt(n_eff)
        delta_phi_series = delta_phi_min
    else:
        delta = np.sqrt(1.0+2.0*n_eff*gamma)
        phi_min = delta/np.sqrt(n_eff)
        delta_phi_min = delta*np.sqrt(delta*np.sqrt(np.e*np.pi/2.0)-1.0)/np.sqrt(n_eff)
        delta_phi_series = (eta/np.sqrt(n_eff))*(1.0+(3.0*eta**2+1.0)/(2.0*eta**2)*n_eff*gamma)

    return float(phi_min), float(delta_phi_min), float(delta_phi_series)
