import numpy as np
import pytest
import pyphasewizard as ppw
from pyphasewizard._private_tools.exceptions import NoCrossingError

def test_fwhm_noiseless():
    ppw.configure.reset()
    cfg = ppw.InterferometerConfig(200.0)
    assert ppw.fwhm(ppw.get_model(cfg, 'parity'))==pytest.approx(0.1665108, rel=0.02)
    assert ppw.fwhm(ppw.get_model(cfg, 'zero-nonzero'))==pytest.approx(0.2354821, rel=0.02)
    assert ppw.fwhm(ppw.get_model(cfg, 'homodyne-zero'))==pytest.approx(0.1665108, rel=0.02)

def test_fwhm_window_is_finite():
    ppw.configure.reset()
    model = ppw.get_model(ppw.InterferometerConfig(200.0), 'homodyne-window', p0=0.5)
    width = ppw.fwhm(model)
    assert 0.0<width<np.pi

def test_fwhm_diffused_parity():
    ppw.configure.reset()
    model = ppw.get_model(ppw.InterferometerConfig(200.0, 1e-4), 'parity')
    assert ppw.fwhm(model)==pytest.approx(np.sqrt(1.04)*0.1665108, rel=0.02)

def test_fwhm_matches_closed_forms():
    ppw.configure.reset()
    for scheme in ['parity', 'zero-nonzero', 'homodyne-zero']:
        cfg = ppw.InterferometerConfig(500.0, 1e-4)
        assert ppw.fwhm(ppw.get_model(cfg, scheme))==pytest.approx(ppw.analytic_fwhm(cfg, scheme), rel=0.02)

def test_resolution_grows_with_photons():
    ppw.configure.reset()
    widths = []
    for n in [50.0, 100.0]:
        model = ppw.get_model(ppw.InterferometerConfig(n, 1e-4), 'parity')
        widths.append(ppw.fwhm(model)*np.sqrt(n))
    assert widths[0]<widths[1]
    noiseless = 2.0*np.sqrt(2.0*np.log(2.0))
    for width in widths:
        assert width==pytest.approx(noiseless, rel=0.03)

def test_resolution_saturates():
    ppw.configure.reset()
    gamma = 1e-2
    limit = 4.0*np.sqrt(gamma*np.log(2.0))
    for n in [1000.0, 10000.0]:
        model = ppw.get_model(ppw.InterferometerConfig(n, gamma), 'parity')
        assert ppw.fwhm(model)==pytest.approx(limit, rel=0.05)

def test_fwhm_flat_signal():
    ppw.configure.reset()
    model = ppw.get_model(ppw.InterferometerConfig(0.0), 'parity')
    with pytest.raises(NoCrossingError):
        ppw.fwhm(model)

def test_fwhm_to_length():
    ppw.configure.reset()
    model = ppw.get_model(ppw.InterferometerConfig(200.0), 'parity')
    width = ppw.fwhm(model)
    length = ppw.resolution(width, ppw.units.Q_(633.0, 'nm'))
    assert length.to('nm').magnitude==pytest.approx(width*633.0/(2.0*np.pi))
