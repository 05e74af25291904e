import pytest
import pyphasewizard as ppw
from pyphasewizard._private_tools.exceptions import BadCallError

def test_defaults():
    ppw.configure.reset()
    assert ppw.configure.get_quadrature_order()==64
    assert ppw.configure.get_diffusion_method()=='auto'
    assert ppw.configure.get_derivative_step()==1e-5
    assert ppw.configure.get_stationary_slope()==1e-12
    assert ppw.configure.get_max_iterations()==200
    assert ppw.configure.get_sampling_window()==0.05
    assert ppw.configure.get_failure_rate_limit()==0.2

def test_diffusion_methods_supported():
    assert ppw.configure.get_diffusion_methods_supported()==['auto', 'gauss-hermite', 'fourier']

def test_set_and_reset():
    ppw.configure.reset()
    ppw.configure.set_quadrature_order(32)
    ppw.configure.set_diffusion_method('fourier')
    assert ppw.configure.get_quadrature_order()==32
    assert ppw.configure.get_diffusion_method()=='fourier'
    ppw.configure.reset()
    assert ppw.configure.get_quadrature_order()==64
    assert ppw.configure.get_diffusion_method()=='auto'

def test_bad_settings():
    ppw.configure.reset()
    with pytest.raises(BadCallError):
        ppw.configure.set_quadrature_order(300)
    with pytest.raises(BadCallError):
        ppw.configure.set_diffusion_method('simpson')
    with pytest.raises(BadCallError):
        ppw.configure.set_derivative_step(0.0)
    with pytest.raises(BadCallError):
        ppw.configure.set_failure_rate_limit(1.5)
    with pytest.raises(BadCallError):
        ppw.configure.set_settings({'unknown': 1})

def test_quadrature_order_from_environment(monkeypatch):
    monkeypatch.setenv('MZI_QUAD_ORDER', '48')
    ppw.configure.reset()
    assert ppw.configure.get_quadrature_order()==48
    monkeypatch.delenv('MZI_QUAD_ORDER')
    ppw.configure.reset()
    assert ppw.configure.get_quadrature_order()==64

def test_malformed_quadrature_order_from_environment(monkeypatch, caplog):
    for value in ['many', '1000']:
        monkeypatch.setenv('MZI_QUAD_ORDER', value)
        caplog.clear()
        with caplog.at_level('WARNING', logger='pyphasewizard'):
            ppw.configure.reset()
        assert ppw.configure.get_quadrature_order()==64
        assert 'MZI_QUAD_ORDER' in caplog.text
    monkeypatch.delenv('MZI_QUAD_ORDER')
    ppw.configure.reset()
    assert ppw.configure.get_quadrature_order()==64

def test_set_settings():
    ppw.configure.reset()
    ppw.configure.set_settings({'grid_points': '256', 'sampling_window': '0.1'})
    assert ppw.configure.get_grid_points()==256
    assert ppw.configure.get_sampling_window()==0.1
    ppw.configure.reset()

def test_load_config_file(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('# scenario\nscheme = parity\n\nN=200 # photons\ngamma = 1e-4\n')
    settings = ppw.configure.load_config_file(str(path))
    assert settings=={'scheme': 'parity', 'N': '200', 'gamma': '1e-4'}

def test_load_config_file_bad_line(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('scheme parity\n')
    with pytest.raises(BadCallError):
        ppw.configure.load_config_file(str(path))
