import json
import os
import logging
from fractions import Fraction

import pytest

from dna_codes import serialization
from dna_codes.config import (
    Config, resolve_enumeration_cap, resolve_oracle_limit, check_enumeration)
from dna_codes.errors import (
    InvalidArgumentError, EnumerationLimitError, OracleLimitError,
    SequenceFormatError)
from dna_codes.bounds.bound_report import BoundMode
from dna_codes.sequences.qary_sequence import QarySequence
from dna_codes.similarity.similarity import SimilarityKind

CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))), 'configs', 'desk_scale.json')


def test_defaults(monkeypatch):
    monkeypatch.delenv(Config.ENV_ENUMERATION_CAP, raising=False)
    config = Config()
    assert config.ENUMERATION_CAP == 2 ** 26
    assert config.ORACLE_LIMIT == 12
    assert resolve_enumeration_cap() == 2 ** 26
    assert resolve_oracle_limit() == 12
    assert resolve_oracle_limit(5) == 5


def test_shipped_config_file(monkeypatch):
    monkeypatch.delenv(Config.ENV_ENUMERATION_CAP, raising=False)
    config = Config(CONFIG_PATH)
    assert config.NAME == 'desk-scale'
    assert config.ENUMERATION_CAP == 67108864
    assert config.SEARCH_BUDGET == 600.0


def test_config_file_overrides(tmp_path, monkeypatch):
    monkeypatch.delenv(Config.ENV_ENUMERATION_CAP, raising=False)
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'enumeration_cap': 1000,
                                'oracle_limit': 6}))
    config = Config(str(path))
    assert config.ENUMERATION_CAP == 1000
    assert config.ORACLE_LIMIT == 6
    assert Config.ENUMERATION_CAP == 2 ** 26


def test_display_logs_limits(caplog):
    with caplog.at_level(logging.INFO, logger='dna_codes.config'):
        Config().display()
    assert 'ENUMERATION_CAP' in caplog.text
    assert 'ORACLE_LIMIT' in caplog.text


def test_bad_config_files(tmp_path):
    with pytest.raises(InvalidArgumentError):
        Config(str(tmp_path / 'absent.json'))
    path = tmp_path / 'config.json'
    path.write_text('{"oracle_limit": 0}')
    with pytest.raises(InvalidArgumentError):
        Config(str(path))


def test_environment_cap(monkeypatch):
    monkeypatch.setenv(Config.ENV_ENUMERATION_CAP, '50')
    assert resolve_enumeration_cap() == 50
    assert resolve_enumeration_cap(70) == 70
    assert Config().ENUMERATION_CAP == 50
    with pytest.raises(EnumerationLimitError):
        check_enumeration('test', 51)
    monkeypatch.setenv(Config.ENV_ENUMERATION_CAP, 'many')
    with pytest.raises(InvalidArgumentError):
        resolve_enumeration_cap()


def test_check_enumeration():
    assert check_enumeration('test', 10, cap=10) == 10
    with pytest.raises(EnumerationLimitError) as excinfo:
        check_enumeration('test', 11, cap=10)
    assert excinfo.value.required == 11
    assert excinfo.value.cap == 10
    with pytest.raises(InvalidArgumentError):
        check_enumeration('test', 1, cap=0)


def test_error_hierarchy():
    assert issubclass(OracleLimitError, EnumerationLimitError)
    assert issubclass(SequenceFormatError, ValueError)
    error = OracleLimitError(14, 12)
    assert str(error).startswith('refused')
    assert error.required == 14


def test_serialization_is_deterministic():
    payload = {
        'b': Fraction(1, 2),
        'a': [QarySequence(4, (0, 1, 2, 3)), QarySequence(2, (0, 1))],
        'kind': SimilarityKind.BLOCK,
        'mode': BoundMode.ANALYTIC,
        'value': 0.1234567890123,
        'flag': True,
        'none': None,
    }
    text = serialization.dumps(payload)
    assert text == serialization.dumps(dict(reversed(list(payload.items()))))
    document = json.loads(text)
    assert document['schema_version'] == Config.SCHEMA_VERSION
    assert document['b'] == '1/2'
    assert document['a'] == ['ACGT', '01']
    assert document['kind'] == 'block'
    assert document['mode'] == 'analytic-bound'
    assert document['value'] == 0.1234567890
    assert document['flag'] is True and document['none'] is None
    assert json.loads(serialization.dumps(payload, acgt=False))['a'] == \
        ['0123', '01']


def test_fraction_text():
    assert serialization.fraction_text(Fraction(4, 2)) == '2'
    assert serialization.fraction_text(Fraction(-3, 4)) == '-3/4'
