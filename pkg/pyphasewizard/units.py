import numpy as np
import pint as pint

## Create a unit UnitRegistry
## See: https://pint.readthedocs.io/en/stable/tutorial.html#using-pint-in-your-projects

ureg = pint.UnitRegistry()
ureg.define('pi_radian = pi * radian = pi_rad')
Q_ = ureg.Quantity
U_ = ureg.Unit

##

phase_unit = 'radian'

def is_quantity(value):

    return isinstance(value, pint.Quantity)

def phase(value, unit=phase_unit):

    output = None

    if is_quantity(value):
        output = value.to(unit)
    elif isinstance(value, str):
        output = Q_(value).to(unit)
    else:
        output = Q_(np.asarray(value, dtype=float), unit)

    return output

def to_radians(value):

    output = None

    if is_quantity(value):
        if value.dimensionality != ureg.radian.dimensionality:
            raise ValueError('A phase must be dimensionless, got {:~}.'.format(value.units))
        output = value.to(phase_unit).magnitude
    elif isinstance(value, str):
        output = to_radians(Q_(value))
    else:
        output = value

    if np.ndim(output) == 0:
        output = float(output)
    else:
        output = np.asarray(output, dtype=float)

    return output

def from_radians(value, unit=phase_unit):

    return Q_(value, phase_unit).to(unit)

def to_length(value):

    output = None

    if isinstance(value, str):
        try:
            value = Q_(value)
        except (AttributeError, TypeError, ValueError):
            raise ValueError("Cannot read a wavelength from {!r}.".format(value))

    if not is_quantity(value) or value.dimensionality != ureg.meter.dimensionality:
        raise ValueError('A wavelength must be a length quantity, got {!r}.'.format(value))

    output = value

    return output

def resolution(fwhm, wavelength):
    """Fringe resolution FWHM*wavelength/(2*pi) as a pint length."""

    wavelength = to_length(wavelength)
    fwhm = to_radians(fwhm)

    output = (fwhm/(2.0*np.pi))*wavelength

    return output
