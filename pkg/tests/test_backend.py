"""Parity between the compiled kernel and the pure-Python one."""

import os
import subprocess
import sys

import pytest

from schurq import backend_name
from schurq import _kernel_py
from schurq.coefficients import basic_rows
from schurq.partitions import basic_pairs_by_boxes

_kernel_c = pytest.importorskip("schurq._kernel_c")

PAIRS = list(basic_pairs_by_boxes(5))


def test_backend_name_values():
    assert backend_name() in ("c", "python")
    assert _kernel_py.backend_name() == "python"
    assert _kernel_c.backend_name() == "c"


def test_count_contents_parity():
    for lam, mu in PAIRS:
        rows = basic_rows(lam, mu)
        assert _kernel_c.count_contents(rows) == \
            _kernel_py.count_contents(rows), (lam, mu)


def test_count_content_parity():
    for lam, mu in PAIRS:
        rows = basic_rows(lam, mu)
        for nu, f in _kernel_py.count_contents(rows).items():
            assert _kernel_c.count_content(rows, nu) == f, (lam, mu, nu)
        absent = (sum(lam) - sum(mu),)
        assert _kernel_c.count_content(rows, absent) == \
            _kernel_py.count_content(rows, absent), (lam, mu)


def test_has_duplicate_content_parity():
    for lam, mu in PAIRS:
        rows = basic_rows(lam, mu)
        assert _kernel_c.has_duplicate_content(rows) == \
            _kernel_py.has_duplicate_content(rows), (lam, mu)


def test_count_bounded_parity():
    for lam, mu in PAIRS:
        rows = basic_rows(lam, mu)
        for n in (1, 2, 3):
            assert _kernel_c.count_bounded(rows, n) == \
                _kernel_py.count_bounded(rows, n), (lam, mu, n)


def test_word_checks_parity():
    for lam, mu in PAIRS[:40]:
        rows = basic_rows(lam, mu)
        for word in _kernel_py.iter_bounded_words(rows, 3):
            assert _kernel_c.word_is_amenable(word) == \
                _kernel_py.word_is_amenable(word), (lam, mu, word)
            for k in (2, 3, 4):
                assert _kernel_c.word_is_k_amenable(word, k) == \
                    _kernel_py.word_is_k_amenable(word, k), (lam, mu, word, k)


def test_pure_fallback_env_switch():
    env = dict(os.environ, SCHURQ_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "import schurq; print(schurq.backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"
