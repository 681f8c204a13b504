#!/usr/bin/env python3
"""Tests for the setup checker."""

import sys

import pytest

from setup_check import check_dependencies, check_environment, check_smoke


def test_dependencies_installed(capsys):
    assert check_dependencies()
    out = capsys.readouterr().out
    assert '✓ NumPy' in out
    assert '✓ NetworkX' in out


def test_environment_defaults(capsys):
    assert check_environment({})
    assert 'canonical form n <= 9' in capsys.readouterr().out


def test_environment_rejects_bad_value(capsys):
    assert not check_environment({'MATROID_THREADS': 'many'})
    assert '✗' in capsys.readouterr().out


def test_smoke(capsys):
    assert check_smoke()
    assert 'M_0101' in capsys.readouterr().out


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
