import csv
import io
import json
import numpy as np
import pytest
import pyphasewizard as ppw
from pyphasewizard import cli

def _rows(path):
    with open(path, 'r', encoding='utf-8', newline='') as output_file:
        text = output_file.read()
    assert '\r' not in text
    return list(csv.DictReader(io.StringIO(text)))

def _json(path):
    with open(path, 'r', encoding='utf-8') as output_file:
        return json.load(output_file)

## scan

def test_scan_parity(tmp_path):
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '-o', path])==0
    rows = _rows(path)
    assert list(rows[0].keys())==['phi', 'signal', 'p_plus', 'delta_phi', 'fisher']
    assert len(rows)==201
    delta_phi = np.array([float(row['delta_phi']) for row in rows])
    assert delta_phi.min()==pytest.approx(0.0707107, abs=1e-7)
    assert abs(float(rows[int(np.argmin(delta_phi))]['phi']))<1e-12

def test_scan_stdout(capsys):
    assert cli.main(['scan', '--scheme', 'z', '-N', '50', '--phi', '0.1:0.5:5'])==0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [float(row['phi']) for row in rows]==pytest.approx([0.1, 0.2, 0.3, 0.4, 0.5])

def test_scan_diffused_peak(tmp_path):
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--scheme', 'homodyne', '-N', '200', '--gamma', '1e-4', '-o', path])==0
    rows = _rows(path)
    center = [row for row in rows if abs(float(row['phi']))<1e-12]
    assert len(center)==1
    assert center[0]['delta_phi']=='inf'

def test_scan_json(tmp_path):
    path = str(tmp_path/'scan.json')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '--gamma', '1e-4', '-o', path])==0
    document = _json(path)
    assert document['scheme']=='parity'
    assert document['gamma']==1e-4
    assert document['columns']==['phi', 'signal', 'p_plus', 'delta_phi', 'fisher']
    assert document['rows'][100]['delta_phi']=='inf'

def test_scan_pi_units(tmp_path):
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '--pi-units', '-o', path])==0
    rows = _rows(path)
    assert float(rows[0]['phi'])==pytest.approx(-0.25)
    assert float(rows[-1]['phi'])==pytest.approx(0.25)
    delta_phi = [float(row['delta_phi']) for row in rows]
    assert min(delta_phi)==pytest.approx(0.0707107, abs=1e-7)

def test_scan_check(tmp_path):
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '100', '--gamma', '1e-4', '--check', '-o', path])==0

def test_invalid_configurations(tmp_path):
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '--phi', '0:1:0', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'sideband', '-N', '200', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'parity', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'parity', '-N', '-5', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'window', '-N', '200', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '-T', '1.5', '-o', path])==2
    assert cli.main(['scan', '--scheme', 'parity', '-N', 'many', '-o', path])==2
    assert cli.main(['sweep'])==2

def test_bad_output_directory(tmp_path):
    path = str(tmp_path/'missing'/'scan.csv')
    assert cli.main(['scan', '--scheme', 'parity', '-N', '200', '-o', path])==3

## config files

def test_config_file(tmp_path):
    config = tmp_path/'run.cfg'
    config.write_text('# parity run\nscheme = parity\nN = 100\nquadrature_order = 32\n\nformat = json\n')
    path = str(tmp_path/'scan.json')
    assert cli.main(['scan', '--config', str(config), '-o', path])==0
    assert _json(path)['N']==100.0
    assert cli.main(['scan', '--config', str(config), '-N', '200', '-o', path])==0
    assert _json(path)['N']==200.0
    assert ppw.configure.get_quadrature_order()==64

def test_config_file_errors(tmp_path):
    config = tmp_path/'run.cfg'
    config.write_text('scheme = parity\nN = 100\ncolour = blue\n')
    path = str(tmp_path/'scan.csv')
    assert cli.main(['scan', '--config', str(config), '-o', path])==2
    config.write_text('scheme parity\n')
    assert cli.main(['scan', '--config', str(config), '-o', path])==2
    assert cli.main(['scan', '--config', str(tmp_path/'absent.cfg'), '-o', path])==3

## best

def test_best_single(tmp_path):
    path = str(tmp_path/'best.csv')
    assert cli.main(['best', '--scheme', 'parity', '-N', '200', '-o', path])==0
    rows = _rows(path)
    assert len(rows)==1
    assert float(rows[0]['delta_phi_min_exact'])==pytest.approx(1.0/np.sqrt(200.0), rel=1e-6)
    assert float(rows[0]['shot_noise'])==pytest.approx(1.0/np.sqrt(200.0))
    assert float(rows[0]['fwhm'])==pytest.approx(0.1665108, rel=0.02)
    assert rows[0]['error']==''

def test_best_sweep(tmp_path):
    path = str(tmp_path/'best.csv')
    assert cli.main(['best', '--scheme', 'parity,z', '--gamma', '1e-4', '--sweep', '100,200', '-o', path])==0
    rows = _rows(path)
    assert [(row['scheme'], float(row['N'])) for row in rows]==[('parity', 100.0), ('parity', 200.0),
                                                                ('zero-nonzero', 100.0), ('zero-nonzero', 200.0)]
    for parity, counting in zip(rows[:2], rows[2:]):
        assert float(counting['delta_phi_min_exact'])<float(parity['delta_phi_min_exact'])
    assert float(rows[1]['delta_phi_min_series'])==pytest.approx(0.08330, abs=1e-5)

def test_best_row_errors(tmp_path):
    path = str(tmp_path/'best.csv')
    assert cli.main(['best', '--scheme', 'parity', '--sweep', '0,200', '-o', path])==0
    rows = _rows(path)
    assert rows[0]['error']!=''
    assert rows[0]['delta_phi_min_exact']==''
    assert rows[1]['error']==''

## fwhm

def test_fwhm(tmp_path):
    path = str(tmp_path/'fwhm.csv')
    assert cli.main(['fwhm', '--scheme', 'parity', '-N', '200', '--wavelength', '800 nm', '-o', path])==0
    rows = _rows(path)
    assert float(rows[0]['fwhm_exact'])==pytest.approx(0.1665108, rel=0.02)
    assert float(rows[0]['fwhm_analytic'])==pytest.approx(0.1665108, abs=1e-6)
    assert float(rows[0]['resolution'])==pytest.approx(float(rows[0]['fwhm_exact'])*800.0/(2.0*np.pi))
    assert rows[0]['resolution_unit']=='nanometer'

def test_fwhm_errors(tmp_path):
    path = str(tmp_path/'fwhm.csv')
    assert cli.main(['fwhm', '--scheme', 'parity', '-N', '0', '-o', path])==4
    assert cli.main(['fwhm', '--scheme', 'parity', '-N', '200', '--wavelength', '3 kg', '-o', path])==2

## estimate

def test_estimate(tmp_path):
    first = str(tmp_path/'first.json')
    second = str(tmp_path/'second.json')
    arguments = ['estimate', '--scheme', 'parity', '-N', '100', '--phi-true', '0.15', '--trials', '10000',
                 '--repeats', '400', '--seed', '7', '--check']
    assert cli.main(arguments+['-o', first])==0
    assert cli.main(arguments+['-o', second])==0
    with open(first, 'rb') as a, open(second, 'rb') as b:
        assert a.read()==b.read()
    document = _json(first)
    assert 0.85<=document['ratio']<=1.15
    assert document['failures']==0
    assert document['seed']==7

def test_estimate_pi_units(tmp_path):
    path = str(tmp_path/'estimate.json')
    assert cli.main(['estimate', '--scheme', 'parity', '-N', '100', '--phi-true', '0.05', '--trials', '1000',
                     '--repeats', '20', '--pi-units', '-o', path])==0
    document = _json(path)
    assert document['phi_true']==pytest.approx(0.05)
    assert document['mean_estimate']==pytest.approx(0.05, abs=0.01)

def test_estimate_errors(tmp_path):
    path = str(tmp_path/'estimate.json')
    assert cli.main(['estimate', '--scheme', 'z', '-N', '100', '--gamma', '1e-3', '--phi-true', '0',
                     '--trials', '1000', '--repeats', '20', '-o', path])==5
    assert cli.main(['estimate', '--scheme', 'parity', '-N', '100', '--phi-true', '0.15', '-o', path])==2
    assert cli.main(['estimate', '--scheme', 'parity', '-N', '100', '--phi-true', '0.15', '--trials', '10',
                     '--repeats', '20', '-o', path])==2

## serialization

def test_format_real():
    assert cli.format_real(float('inf'))=='inf'
    assert cli.format_real(0.1)=='0.1'
    assert cli.format_real(np.float64(1.0)/3.0)==repr(1.0/3.0)

def test_render_json_non_finite():
    text = cli.render_json({'value': float('inf'), 'flag': np.bool_(True), 'count': np.int64(3)})
    assert json.loads(text)=={'value': 'inf', 'flag': True, 'count': 3}
