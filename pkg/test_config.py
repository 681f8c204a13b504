#!/usr/bin/env python3
"""Tests for environment-driven configuration."""

import sys

import pytest

from config import Config, check_cap, get_config, set_config
from matroid_errors import ConfigError, SizeCapExceeded


@pytest.fixture
def restore_config():
    saved = get_config()
    yield
    set_config(saved)


def test_defaults():
    config = Config.from_env({})
    assert config == Config()
    assert config.canon_n == 9
    assert config.coproduct_n == 10
    assert config.perm_n == 9
    assert config.census_n == 5
    assert config.threads == 1
    assert config.output_format == 'text'


def test_reads_environment():
    config = Config.from_env({'MATROID_CANON_N': '11', 'MATROID_THREADS': '4',
                              'MATROID_FORMAT': 'json', 'MATROID_CACHE_SIZE': '100'})
    assert config.canon_n == 11
    assert config.threads == 4
    assert config.output_format == 'json'
    assert config.cache_size == 100


def test_blank_variable_takes_default():
    assert Config.from_env({'MATROID_PERM_N': '  '}).perm_n == 9


@pytest.mark.parametrize("environ,variable", [
    ({'MATROID_CANON_N': 'nine'}, 'MATROID_CANON_N'),
    ({'MATROID_CANON_N': '13'}, 'MATROID_CANON_N'),
    ({'MATROID_THREADS': '0'}, 'MATROID_THREADS'),
    ({'MATROID_CENSUS_N': '-1'}, 'MATROID_CENSUS_N'),
    ({'MATROID_FORMAT': 'yaml'}, 'MATROID_FORMAT'),
])
def test_bad_values(environ, variable):
    with pytest.raises(ConfigError) as info:
        Config.from_env(environ)
    assert info.value.variable == variable
    assert isinstance(info.value, ValueError)


def test_overrides_warn_when_raising_a_cap(capsys):
    config = Config().with_overrides(canon_n=10, threads=None)
    assert config.canon_n == 10
    assert 'Warning' in capsys.readouterr().err


def test_overrides_are_validated():
    with pytest.raises(ConfigError):
        Config().with_overrides(perm_n=11)
    with pytest.raises(ConfigError):
        Config().with_overrides(colour='blue')


def test_lowering_a_cap_is_silent(capsys):
    Config().with_overrides(perm_n=5)
    assert capsys.readouterr().err == ''


def test_check_cap(restore_config):
    set_config(Config(perm_n=4))
    check_cap('perm_n', 4)
    with pytest.raises(SizeCapExceeded) as info:
        check_cap('perm_n', 5)
    assert info.value.cap_name == 'perm_n'
    assert info.value.limit == 4
    assert info.value.requested == 5
    assert 'perm_n' in str(info.value)


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
