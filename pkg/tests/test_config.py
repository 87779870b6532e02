from pathlib import Path
from util.config import DEFAULT_GUARD_LIMIT, GUARD_ENV, Config, resolve_guard_limit

IMPORTS = Path(__file__).resolve().parents[1] / 'imports'


def _write(tmp_path, text, name='quotkit.yaml'):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_guard_limit_resolution(monkeypatch):
    monkeypatch.delenv(GUARD_ENV, raising=False)
    assert resolve_guard_limit() == DEFAULT_GUARD_LIMIT
    monkeypatch.setenv(GUARD_ENV, '7')
    assert resolve_guard_limit() == 7
    assert resolve_guard_limit(11) == 11
    monkeypatch.setenv(GUARD_ENV, 'many')
    assert resolve_guard_limit() == DEFAULT_GUARD_LIMIT


def test_defaults_without_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(GUARD_ENV, raising=False)
    conf = Config()
    assert conf.load_config({})
    assert conf.guard_limit == DEFAULT_GUARD_LIMIT
    assert conf.ib_order == 'quotient_first'
    assert not conf.cross_check
    assert (conf.oracle_prime, conf.oracle_trials, conf.oracle_seed) == (32003, 20, 20240817)
    assert conf.cell_formats_heading is None


def test_load_file_and_command_line_overrides(tmp_path):
    config_file = _write(tmp_path, f"""
guard_limit: 500
cross_check: true
ib_order: kernel_first
oracle:
  prime: 101
  trials: 4
output_file: {tmp_path / 'out.xlsx'}
worksheet_name: Census
theme_imports: {IMPORTS / 'theme_green.yaml'}
cell_formats:
  number: {{'num_format': '0.0'}}
""")
    conf = Config()
    assert conf.load_config({'config_file': config_file, 'trials': 9, 'guard_limit': 50})
    assert conf.filename == config_file
    assert conf.guard_limit == 50
    assert conf.cross_check
    assert conf.ib_order == 'kernel_first'
    assert (conf.oracle_prime, conf.oracle_trials, conf.oracle_seed) == (101, 9, 20240817)
    assert conf.output_file == str(tmp_path / 'out.xlsx')
    assert conf.worksheet_name == 'Census'
    assert conf.cell_formats_heading['fg_color'] == '#4f7942'
    assert conf.cell_formats_number == {'num_format': '0.0'}


def test_missing_explicit_file(tmp_path):
    assert not Config().load_config({'config_file': str(tmp_path / 'absent.yaml')})


def test_malformed_files(tmp_path):
    assert not Config().load_config({'config_file': _write(tmp_path, 'guard_limit: [1,\n')})
    assert not Config().load_config({'config_file': _write(tmp_path, '- 1\n- 2\n')})
    assert not Config().load_config({'config_file': _write(tmp_path, 'ib_order: sideways\n')})


def test_values_of_the_wrong_kind(tmp_path):
    for text in ('guard_limit: lots\n', 'oracle: 5\n', 'oracle:\n  trials: [1]\n',
                 'cell_formats: [1]\n'):
        assert not Config().load_config({'config_file': _write(tmp_path, text)}), text


def test_importer_lookup(tmp_path):
    conf = Config()
    assert conf.load_config({'config_file': _write(tmp_path, '---\n')})
    json_importer = conf.importer_for('diagram.json')
    assert type(json_importer).__module__ == 'plugins.json_importer'
    assert conf.importer_for('diagram.JSON') is json_importer
    assert type(conf.importer_for('diagram.yml')).__module__ == 'plugins.yaml_importer'
    assert conf.importer_for('diagram.txt') is None

    conf = Config()
    assert conf.load_config({'config_file': _write(tmp_path, '---\n'),
                             'importer': 'plugins.yaml_importer'})
    assert type(conf.importer_for('diagram.txt')).__module__ == 'plugins.yaml_importer'
