import json

import pytest

import cellgap
from modules import families
from modules.errors import ConfigurationError
from modules.settings import Settings


def run(capsys, *argv):
    code = cellgap.main(list(argv))
    return code, capsys.readouterr().out


def test_dims_csv(capsys):
    code, out = run(capsys, '--format', 'csv', 'dims', '--family', 'tl', '--n', '8')
    assert code == cellgap.EXIT_OK
    assert out.splitlines()[0] == "family,n,k,char,dim,ssdim,source"
    assert "TL,8,2,0,28,28,table-formula" in out


def test_gap_of_truncation(capsys):
    code, out = run(capsys, '--format', 'json', 'gap', '--family', 'tl', '--n', '8', '--truncate-low', '4')
    payload = json.loads(out)
    assert code == cellgap.EXIT_OK
    assert payload['gap']['value'] == '13'
    assert payload['gap']['status'] == 'exact'


def test_cyclic_gap(capsys):
    code, out = run(capsys, '--format', 'json', 'gap', '--cyclic', '7', '--q', '2')
    assert json.loads(out)['gap']['value'] == '3'


def test_gap_needs_a_monoid(capsys):
    assert cellgap.main(['gap']) == cellgap.EXIT_VALIDATION


def test_cells_text(capsys):
    code, out = run(capsys, 'cells', '--family', 'tl', '--n', '4')
    assert code == cellgap.EXIT_OK
    assert [line.split()[2] for line in out.splitlines()] == ['size=1', 'size=9', 'size=4']


def test_fixture_family(capsys):
    code, out = run(capsys, 'gap', '--family', 'transformation', '--n', '3')
    assert code == cellgap.EXIT_OK
    assert out.startswith("T_3 over Q (|M| = 27)")


def test_bad_family(capsys):
    assert cellgap.main(['dims', '--family', 'braid', '--n', '3']) == cellgap.EXIT_VALIDATION


def test_unsupported(capsys):
    assert cellgap.main(['dims', '--family', 'brauer', '--n', '3']) == cellgap.EXIT_VALIDATION


def test_guard(capsys, monkeypatch):
    monkeypatch.setattr(families.settings, 'guard', lambda family: 2)
    assert cellgap.main(['cells', '--family', 'tl', '--n', '5']) == cellgap.EXIT_GUARD


def test_protocol(capsys):
    code, out = run(capsys, '--format', 'json', 'protocol', 'su', '--family', 'tl', '--n', '10',
                    '--truncate-low', '4', '--seed', '7')
    assert code == cellgap.EXIT_OK
    assert json.loads(out)['equal'] is True


def test_output_options_after_the_verb(capsys):
    code, out = run(capsys, 'protocol', 'su', '--family', 'tl', '--n', '10', '--truncate-low', '4',
                    '--seed', '7', '--format', 'json', '--timestamps')
    assert code == cellgap.EXIT_OK
    header, body = out.split("\n", 1)
    assert header.startswith("# generated ")
    assert json.loads(body)['seed'] == 7


def test_output_option_before_the_verb_survives(capsys):
    code, out = run(capsys, '--format', 'csv', 'cells', '--family', 'tl', '--n', '3')
    assert code == cellgap.EXIT_OK
    assert out.splitlines()[0].startswith("j,width,size")


def _cell_sizes(out):
    return [row['size'] for row in json.loads(out)['rows']]


def test_cyclic_group_fixture(capsys):
    code, out = run(capsys, 'cells', '--family', 'cyclic', '--n', '3', '--format', 'json')
    assert code == cellgap.EXIT_OK
    assert _cell_sizes(out) == [3]


def test_cyclic_monoid_fixture_is_case_insensitive(capsys):
    code, out = run(capsys, 'cells', '--family', 'Cyclic', '--index', '3', '--period', '2', '--format', 'json')
    assert code == cellgap.EXIT_OK
    assert _cell_sizes(out) == [1, 1, 1, 2]
    code, out = run(capsys, 'period', '--family', 'CYCLIC', '--index', '3', '--period', '2',
                    '--element', 'a', '--format', 'json')
    row = json.loads(out)['rows'][0]
    assert (row['index'], row['period']) == (3, 2)


def test_cyclic_fixture_needs_a_period(capsys):
    assert cellgap.main(['cells', '--family', 'cyclic']) == cellgap.EXIT_VALIDATION
    assert cellgap.main(['truncate', '--family', 'cyclic', '--n', '3']) == cellgap.EXIT_VALIDATION


def test_period_of_unknown_element(capsys):
    assert cellgap.main(['period', '--family', 'tl', '--n', '3', '--element', 'nope']) == cellgap.EXIT_VALIDATION


def test_truncate_summary(capsys):
    code, out = run(capsys, 'truncate', '--family', 'tl', '--n', '5', '--truncate-low', '3')
    assert code == cellgap.EXIT_OK
    assert "size=42" in out and "unit=1′" in out


def test_selftest_subset(capsys):
    code, out = run(capsys, 'selftest', '--quick', '--only', 'e-matrix', 'cyclic')
    assert code == cellgap.EXIT_OK
    assert out.splitlines()[-1].startswith("2/2 checks passed")


def test_timestamps(capsys):
    code, out = run(capsys, '--timestamps', 'h1', '--family', 'tl', '--n', '3')
    assert out.startswith("# generated ")


def test_settings_roundtrip(settings_file):
    s = Settings(settings_file)
    assert s.guard('tl') == 14
    s.set('enumeration_max_n', {'tl': 3})
    again = Settings(settings_file)
    assert again.guard('tl') == 3
    assert again.guard('brauer') == 7
    assert again.get('table_max_size') == 6000


def test_settings_file_created(tmp_path):
    path = tmp_path / "fresh.json"
    Settings(str(path))
    assert json.loads(path.read_text())['protocol_word_length'] == 6


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        cellgap.main(['--version'])
    assert exit_info.value.code == 0
    assert capsys.readouterr().out.strip().endswith(cellgap.get_current_version())


def test_bad_guard_is_rejected(settings_file):
    s = Settings(settings_file)
    s.set('enumeration_max_n', {'tl': -1, 'brauer': '7'})
    for family in ('tl', 'brauer'):
        with pytest.raises(ConfigurationError):
            s.guard(family)
