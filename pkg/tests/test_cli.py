import json
from argparse import Namespace

import pytest

from bisectorlab.compute import compute
from bisectorlab.generate import generate
from bisectorlab.geometry import CanonicalLine
from bisectorlab.oracle_check import oracle_check
from bisectorlab.sweep import sweep
from bisectorlab.utils import THREADS_ENV
from bisectorlab.verify import verify


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / 'square.json'
    path.write_text(json.dumps([[0, 0], [1, 0], [0, 1], [1, 1]]))
    return str(path)


def compute_args(pointset, output, **kwargs):
    defaults = dict(pointset=pointset, invariants=['bisectors', 'distances'], backend='exact', quantum=1e-9,
                    heaviness='curves', K=[3, 4], M_cut=None, validate_oracles=True, workers=1, output=output)
    return Namespace(**dict(defaults, **kwargs))


def test_compute(square_file, tmp_path):
    output = tmp_path / 'out' / 'report.json'
    compute(compute_args(square_file, str(output)))
    report = json.loads(output.read_text())
    assert report['energy'] == 40
    assert report['isoceles'] == 8
    assert report['family'] == 'file'


def test_compute_prints_without_output(square_file, capsys):
    compute(compute_args(square_file, None, invariants=['bisectors']))
    assert json.loads(capsys.readouterr().out)['distinct_bisectors'] == 4


def test_generate_then_oracle_check(tmp_path, capsys):
    output = tmp_path / 'mix.json'
    generate(Namespace(family='heavy_circle_mix', n=10, output=str(output), seed=2, param=[('eps', '1/2')],
                       quantum=1e-9))
    points = json.loads(output.read_text())
    assert len(points) == 10
    oracle_check(Namespace(pointset=str(output), backend='exact', quantum=1e-9, heaviness='curves', K=[3],
                           energy_cap=40, isoceles_cap=300, pairwise_cap=60))
    assert 'agree with their oracles' in capsys.readouterr().out


def test_sweep(tmp_path, monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    config = tmp_path / 'experiment.json'
    config.write_text(json.dumps({'sweeps': [{'family': 'grid', 'sizes': [4, 9]}], 'invariants': ['bisectors']}))
    out = tmp_path / 'results'
    sweep(Namespace(config=str(config), out=str(out), workers=None, quiet=True))
    reports = json.loads((out / 'report.json').read_text())
    assert [report['n'] for report in reports] == [4, 9]
    assert (out / 'summary.csv').exists() and (out / 'report.csv').exists()
    assert json.loads((out / 'config.json').read_text())['sweeps'][0]['sizes'] == [4, 9]


def test_verify_exit_status(tmp_path):
    output = tmp_path / 'verify.json'
    args = Namespace(suite='delta_identity', seed=0, seeds=1, max_n=6, instances=10, ratio_max_n=16, show=1,
                     output=str(output), quiet=True)
    verify(args)
    assert json.loads(output.read_text())['passed'] is True


def test_verify_fails_loudly(monkeypatch):
    monkeypatch.setattr('bisectorlab.invariants.bisectors.perpendicular_bisector',
                        lambda p, q, backend=None: CanonicalLine(1, 0, 0))
    args = Namespace(suite='oracle_parity', seed=0, seeds=1, max_n=5, instances=10, ratio_max_n=16, show=1,
                     output=None, quiet=True)
    with pytest.raises(SystemExit) as info:
        verify(args)
    assert info.value.code == 1
