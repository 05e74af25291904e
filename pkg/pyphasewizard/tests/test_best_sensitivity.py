import numpy as np
import pytest
import pyphasewizard as ppw
from pyphasewizard._private_tools.exceptions import BadCallError

def test_homodyne_zero_noiseless():
    ppw.configure.reset()
    for n in [200.0, 1000.0]:
        report = ppw.best_sensitivity(ppw.InterferometerConfig(n), 'homodyne-zero')
        assert 1.02<=report.delta_phi_min*np.sqrt(n)<=1.04
        assert report.analytic_delta_phi_min*np.sqrt(n)==pytest.approx(1.0326, abs=1e-4)
    report = ppw.best_sensitivity(ppw.InterferometerConfig(50.0), 'homodyne-zero')
    assert 1.02<=report.delta_phi_min*np.sqrt(50.0)<=1.05

def test_homodyne_zero_benchmark():
    ppw.configure.reset()
    report = ppw.best_sensitivity(ppw.InterferometerConfig(200.0), 'homodyne-zero')
    assert report.delta_phi_min==pytest.approx(0.0728, abs=1e-3)
    assert report.shot_noise==pytest.approx(1.0/np.sqrt(200.0))
    assert 0.0<report.phi_min<1.0

def test_counting_schemes_noiseless():
    ppw.configure.reset()
    for scheme in ['parity', 'zero-nonzero']:
        for n in [10.0, 50.0, 200.0, 1000.0]:
            report = ppw.best_sensitivity(ppw.InterferometerConfig(n), scheme)
            assert report.phi_min==0.0
            assert 0.999<=report.delta_phi_min*np.sqrt(n)<=1.01
            assert report.analytic_delta_phi_min==pytest.approx(1.0/np.sqrt(n))

def test_window_benchmark():
    ppw.configure.reset()
    report = ppw.window_best_sensitivity(ppw.InterferometerConfig(200.0), 0.5)
    assert 1.30<=report.delta_phi_min*np.sqrt(200.0)<=1.44
    assert report.analytic_delta_phi_min is None
    assert report.scheme==ppw.DetectionScheme.homodyne_window(0.5)

def test_window_narrow_limit():
    ppw.configure.reset()
    n = 200.0
    limit = np.exp(0.5)*(np.pi/2.0)**0.25/np.sqrt(2.0)
    for p0 in [1e-3, 1e-2]:
        report = ppw.window_best_sensitivity(ppw.InterferometerConfig(n), p0)
        assert report.delta_phi_min*np.sqrt(n)*np.sqrt(2.0*p0)==pytest.approx(limit, rel=0.03)

def test_window_covering_everything(caplog):
    ppw.configure.reset()
    with caplog.at_level('WARNING', logger='pyphasewizard'):
        report = ppw.window_best_sensitivity(ppw.InterferometerConfig(200.0), 10.0)
    assert report.delta_phi_min==np.inf
    assert np.isnan(report.phi_min)
    assert 'diverges' in caplog.text

def test_diffused_against_closed_forms():
    ppw.configure.reset()
    gamma = 1e-4
    for n in [10.0, 50.0, 200.0, 500.0]:
        cfg = ppw.InterferometerConfig(n, gamma)
        parity = ppw.best_sensitivity(cfg, 'parity')
        counting = ppw.best_sensitivity(cfg, 'zero-nonzero')
        for report in [parity, counting]:
            assert report.delta_phi_min==pytest.approx(report.analytic_delta_phi_min, rel=0.05)
            assert report.delta_phi_min==pytest.approx(report.series_delta_phi_min, rel=0.05)
            assert report.phi_min>0.0
        assert counting.delta_phi_min<parity.delta_phi_min
    for n in [50.0, 200.0, 500.0]:
        report = ppw.best_sensitivity(ppw.InterferometerConfig(n, gamma), 'homodyne-zero')
        assert report.delta_phi_min==pytest.approx(report.analytic_delta_phi_min, rel=0.05)

def test_counting_ordering_across_photon_numbers():
    ppw.configure.reset()
    gamma = 1e-4
    for n in [1000.0, 10000.0]:
        cfg = ppw.InterferometerConfig(n, gamma)
        parity = ppw.best_sensitivity(cfg, 'parity')
        counting = ppw.best_sensitivity(cfg, 'zero-nonzero')
        assert counting.delta_phi_min<parity.delta_phi_min
        assert parity.phi_min>0.0 and counting.phi_min>0.0

def test_diffused_benchmark():
    ppw.configure.reset()
    cfg = ppw.InterferometerConfig(200.0, 1e-4)
    parity = ppw.best_sensitivity(cfg, 'parity')
    counting = ppw.best_sensitivity(cfg, 'zero-nonzero')
    assert parity.series_delta_phi_min==pytest.approx(0.08330, abs=1e-5)
    assert counting.series_delta_phi_min==pytest.approx(0.07671, abs=1e-5)
    assert parity.delta_phi_min==pytest.approx(0.08330, rel=0.05)
    assert counting.delta_phi_min==pytest.approx(0.07671, rel=0.05)
    assert parity.bracket==ppw.Bracket(1e-4, 1.0)
    assert parity.fwhm==pytest.approx(np.sqrt(1.04)*0.1665108, rel=0.02)

def test_monotone_in_gamma():
    ppw.configure.reset()
    for scheme in ['parity', 'zero-nonzero']:
        previous = 0.0
        for gamma in [0.0, 1e-5, 1e-4, 1e-3]:
            report = ppw.best_sensitivity(ppw.InterferometerConfig(200.0, gamma), scheme)
            assert report.delta_phi_min>=previous
            previous = report.delta_phi_min

def test_loss_reduces_photon_number():
    ppw.configure.reset()
    report = ppw.best_sensitivity(ppw.InterferometerConfig(400.0, 0.0, 0.5), 'parity')
    assert report.delta_phi_min==pytest.approx(1.0/np.sqrt(200.0))

def test_bad_brackets():
    ppw.configure.reset()
    with pytest.raises(BadCallError):
        ppw.best_sensitivity(ppw.InterferometerConfig(200.0, 1e-4), 'parity', bracket=(0.0, 1.0))
    with pytest.raises(BadCallError):
        ppw.best_sensitivity(ppw.InterferometerConfig(200.0), 'parity', bracket=(0.0, 2.0))
    with pytest.raises(BadCallError):
        ppw.best_sensitivity(ppw.InterferometerConfig(200.0), 'parity', bracket=(0.5, 0.1))
    with pytest.raises(BadCallError):
        ppw.best_sensitivity(ppw.InterferometerConfig(0.0), 'parity')

def test_explicit_bracket():
    ppw.configure.reset()
    report = ppw.best_sensitivity(ppw.InterferometerConfig(200.0, 1e-4), 'parity', bracket=(0.05, 0.5))
    assert 0.05<=report.phi_min<=0.5
    assert report.bracket==ppw.Bracket(0.05, 0.5)
