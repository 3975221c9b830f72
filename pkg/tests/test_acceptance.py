"""Acceptance gate: every cross-check at its pinned size and time budget."""

import time

from schurq.coefficients import count_tableaux_bounded, decompose
from schurq.partitions import basic_pairs_by_boxes
from schurq.verify import (
    suite_checklist,
    suite_ot,
    suite_parts,
    suite_rowstrip,
    suite_symmetry,
    suite_theorem,
)

GOLDEN = [
    ((4, 2), (2,), {(4,): 1, (3, 1): 2}),
    ((5, 4, 2), (4,), {(5, 2): 1, (4, 3): 2, (4, 2, 1): 1}),
    ((6, 4, 3, 2, 1), (3, 1),
     {(6, 4, 2): 1, (5, 4, 3): 2, (5, 4, 2, 1): 1}),
    ((8, 6, 5, 1), (1,),
     {(7, 6, 5, 1): 1, (8, 6, 4, 1): 1, (8, 6, 5): 1}),
    ((7, 5, 4, 1), (2, 1),
     {(7, 5, 2): 1, (7, 4, 3): 1, (7, 4, 2, 1): 1,
      (6, 5, 3): 2, (6, 5, 2, 1): 1, (6, 4, 3, 1): 1}),
]


def test_golden_expansions():
    for lam, mu, expected in GOLDEN:
        start = time.monotonic()
        assert decompose(lam, mu) == expected, (lam, mu)
        assert time.monotonic() - start < 1.0, (lam, mu)

    start = time.monotonic()
    big = decompose((9, 8, 7, 6, 5), (6, 5, 4))
    assert time.monotonic() - start < 60.0
    assert len(big) == 18
    assert [nu for nu, f in big.items() if f == 2] == [(8, 6, 4, 2)]
    assert all(f in (1, 2) for f in big.values())

    start = time.monotonic()
    flat = decompose((9, 8, 7, 3, 2, 1), (3, 2, 1))
    assert time.monotonic() - start < 60.0
    assert len(flat) == 15
    assert set(flat.values()) == {1}


def test_scan_box_equivalence():
    report = suite_checklist(7)
    print(report.summary())
    assert report.failures == []
    assert report.checked > 25_000_000
    assert report.elapsed < 300.0


def test_case_list_vs_bruteforce():
    report = suite_theorem(12)
    print(report.summary())
    assert report.failures == []
    assert report.checked == 393
    assert report.elapsed < 1800.0


def test_symmetry_of_coefficients():
    report = suite_symmetry(9)
    print(report.summary())
    assert report.failures == []
    assert report.checked > 0
    assert report.elapsed < 600.0


def test_transform_invariance():
    report = suite_ot(7)
    print(report.summary())
    assert report.failures == []
    assert report.checked > 0


def test_specialization_counts():
    cache = {}
    checked = 0
    for lam, mu in basic_pairs_by_boxes(7):
        terms = decompose(lam, mu)
        for n in (1, 2, 3):
            total = sum(f * cache.setdefault(
                (nu, n), count_tableaux_bounded(nu, (), n))
                for nu, f in terms.items())
            assert count_tableaux_bounded(lam, mu, n) == total, (lam, mu, n)
            checked += 1
    assert checked == 3 * 1412


def test_insertion_relations():
    report = suite_parts(7)
    print(report.summary())
    assert report.failures == []
    assert report.checked > 0


def test_fast_paths():
    report = suite_rowstrip(10, 15)
    print(report.summary())
    assert report.failures == []
    assert report.checked > 0
