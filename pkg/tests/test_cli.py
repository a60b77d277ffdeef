import pytest

import app
from utils.helpers import parse_csv

CSV_HEADER = 'd,squarefree,phi,phiK,splitting,irreducible,divides,realizable,normal,lehmer,strongly_lehmer'


def run(capsys, *argv):
    code = app.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


# ---------------------------------------------------------
# phi / split / crt
# ---------------------------------------------------------

def test_phi(capsys):
    assert run(capsys, 'phi', '--field', '-1', '--d', '3') == (0, '8\n')
    assert run(capsys, 'phi', '--field', '-1', '--d', '1') == (0, '1\n')
    assert run(capsys, 'phi', '--field', '1', '--d', '36') == (0, '12\n')


def test_phi_with_oracle_check(capsys):
    code, out = run(capsys, 'phi', '--field', '-1', '--d', '15', '--check')
    assert code == 0
    assert out.splitlines() == ['128', 'oracle: OK']


def test_phi_check_above_cap_is_skipped(capsys):
    code, out = run(capsys, 'phi', '--field', '-3', '--d', '50', '--check', '--oracle-cap', '10')
    assert code == 0
    assert out.splitlines()[1].startswith('oracle: skipped')


def test_phi_rejects_bad_input(capsys):
    assert run(capsys, 'phi', '--field', '-1', '--d', '0')[0] == 1
    assert run(capsys, 'phi', '--field', '-5', '--d', '3')[0] == 1
    assert run(capsys, 'phi', '--field', '12', '--d', '3')[0] == 1
    assert run(capsys, 'phi', '--field', '-1')[0] == 1


def test_split(capsys):
    assert run(capsys, 'split', '--field', '-1', '--p', '7') == (0, 'inert\n')
    assert run(capsys, 'split', '--field', '-1', '--p', '5') == (0, 'split\n')
    assert run(capsys, 'split', '--field', '-1', '--p', '2') == (0, 'ramified\n')
    assert run(capsys, 'split', '--field', '-1', '--p', '9')[0] == 1
    assert run(capsys, 'split', '--field', '1', '--p', '5')[0] == 1


def test_crt(capsys):
    code, out = run(capsys, 'crt', '--field', '-1', '--m', '3', '--n', '5')
    assert code == 0
    assert 'PASS' in out.splitlines()[0]
    assert 'units: [128, 8, 16]' in out
    assert run(capsys, 'crt', '--field', '-1', '--m', '4', '--n', '6')[0] == 1


# ---------------------------------------------------------
# classify / field-scan
# ---------------------------------------------------------

def test_classify_golden_rows(capsys):
    code, out = run(capsys, 'classify', '--field', '-1', '--max', '10')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 10
    assert '5,1,4,16,split,0,0,0,0,1,0' in lines
    assert '7,1,6,48,inert,1,1,1,1,1,1' in lines


def test_classify_threads_do_not_change_output(capsys):
    _, single = run(capsys, 'classify', '--field', '-1', '--max', '1000', '--threads', '1')
    _, pooled = run(capsys, 'classify', '--field', '-1', '--max', '1000', '--threads', '8')
    assert single == pooled
    assert [r.d for r in parse_csv(single)] == list(range(2, 1001))


def test_classify_squarefree_only(capsys):
    _, out = run(capsys, 'classify', '--field', '-3', '--max', '100', '--squarefree-only')
    assert len(out.splitlines()) == 61


def test_classify_jsonl(capsys):
    _, out = run(capsys, 'classify', '--field', '-1', '--max', '7', '--format', 'jsonl')
    lines = out.splitlines()
    assert len(lines) == 6
    assert '"splitting": "inert"' in lines[-1]


def test_classify_to_file(capsys, tmp_path):
    target = tmp_path / 'out' / 'rows.csv'
    code, out = run(capsys, 'classify', '--field', '-1', '--max', '20', '--output', str(target))
    assert code == 0
    assert out == ''
    assert target.read_text(encoding='utf-8').splitlines()[0] == CSV_HEADER


def test_classify_unwritable_output(capsys, tmp_path):
    blocker = tmp_path / 'blocker'
    blocker.write_text('not a directory')
    code, _ = run(capsys, 'classify', '--field', '-1', '--max', '20',
                  '--output', str(blocker / 'rows.csv'))
    assert code == 3


def test_config_file_precedence(capsys, tmp_path):
    settings = tmp_path / 'run.env'
    settings.write_text('field=-3\nmax=12\nformat=jsonl\n')
    _, out = run(capsys, '--config', str(settings), 'classify')
    assert len(out.splitlines()) == 11
    # flags win over the file
    _, out = run(capsys, '--config', str(settings), 'classify', '--format', 'csv', '--max', '5')
    assert out.splitlines()[0] == CSV_HEADER
    assert len(out.splitlines()) == 5


def test_config_file_errors(capsys, tmp_path):
    assert run(capsys, '--config', str(tmp_path / 'missing.env'), 'classify')[0] == 1
    settings = tmp_path / 'bad.env'
    settings.write_text('max=lots\n')
    assert run(capsys, '--config', str(settings), 'classify')[0] == 1


def test_config_file_drives_verify(capsys, tmp_path):
    settings = tmp_path / 'run.env'
    settings.write_text('field=-3\nmax=10\noracle_cap=5\n')
    code, out = run(capsys, '--config', str(settings), 'verify', '--suite', 'cardinality')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'suite cardinality over Q(sqrt(-3)) up to 10: PASS'
    assert 'checked: 5' in lines
    assert 'limit: 5' in lines


def test_config_file_oracle_cap_reaches_phi_check(capsys, tmp_path):
    settings = tmp_path / 'run.env'
    settings.write_text('oracle_cap=5\n')
    code, out = run(capsys, '--config', str(settings), 'phi', '--field', '-1', '--d', '15', '--check')
    assert code == 0
    assert out.splitlines() == ['128', 'oracle: skipped (d above cap 5)']
    # an explicit flag still wins over the file
    code, out = run(capsys, '--config', str(settings), 'phi', '--d', '15', '--check',
                    '--oracle-cap', '100')
    assert out.splitlines() == ['128', 'oracle: OK']


def test_config_file_field_for_split_and_scan(capsys, tmp_path):
    settings = tmp_path / 'run.env'
    settings.write_text('field=-3\nmax=100\n')
    assert run(capsys, '--config', str(settings), 'split', '--p', '7') == (0, 'split\n')
    code, out = run(capsys, '--config', str(settings), 'field-scan')
    assert code == 0
    assert 'realizable: fails, first witness 3' in out.splitlines()


def test_field_scan(capsys):
    code, out = run(capsys, 'field-scan', '--field', '-3', '--max', '100')
    assert code == 0
    assert 'realizable: fails, first witness 3' in out.splitlines()


# ---------------------------------------------------------
# verify / scan-ratio / zeta
# ---------------------------------------------------------

def test_verify_embedding(capsys):
    code, out = run(capsys, 'verify', '--suite', 'embedding', '--field', '-3', '--max', '10000')
    assert code == 0
    assert out.splitlines()[0] == 'suite embedding over Q(sqrt(-3)) up to 10000: PASS'
    assert 'checked: 10000' in out


def test_verify_all_over_rationals(capsys):
    code, out = run(capsys, 'verify', '--suite', 'all', '--field', '1', '--max', '30')
    assert code == 0
    assert 'suite theorem1' not in out
    assert out.count(': PASS') == 12


def test_verify_errors(capsys):
    assert run(capsys, 'verify', '--suite', 'nonsense')[0] == 1
    assert run(capsys, 'verify', '--suite', 'theorem1', '--field', '1')[0] == 1
    assert run(capsys, 'verify', '--suite', 'embedding', '--max', '0')[0] == 1


def test_verify_output_is_deterministic(capsys):
    argv = ['verify', '--suite', 'theorem3', '--field', '-7', '--max', '400']
    _, single = run(capsys, *argv, '--threads', '1')
    _, pooled = run(capsys, *argv, '--threads', '4')
    assert single == pooled


def test_scan_ratio(capsys):
    assert run(capsys, 'scan-ratio', '--w', '3', '--l', '1/1', '--max', '100') == \
        (0, '3\nhypothesis l < w/phi(w): true\n')
    assert run(capsys, 'scan-ratio', '--w', '6', '--l', '3', '--max', '1000') == \
        (0, 'hypothesis l < w/phi(w): false\n')
    assert run(capsys, 'scan-ratio', '--w', '3', '--l', 'x/2', '--max', '100')[0] == 1
    assert run(capsys, 'scan-ratio', '--w', '4', '--l', '1', '--max', '100')[0] == 1


def test_zeta(capsys):
    code, out = run(capsys, 'zeta', '--s', '2', '--tol', '1/100')
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == 'terms: 100'
    assert lines[2].startswith('lower: 1.63')
    assert lines[3].startswith('upper: 1.64')
    assert lines[-1] == 'zeta(s) < 2: true'


@pytest.mark.parametrize('argv', [['zeta', '--s', '1'], ['zeta', '--tol', '0/5'], ['zeta', '--tol', '1/0']])
def test_zeta_rejects_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_zeta_tolerance_beyond_term_cap(capsys):
    assert run(capsys, 'zeta', '--tol', '1/1' + '0' * 400)[0] == 1
