"""Closed-form multiplicity-freeness test with brute-force cross-checks."""

import multiprocessing
from dataclasses import dataclass

from ._backend import kernel
from .coefficients import (
    basic_rows,
    decompose_row_strip,
    is_multiplicity_free_bruteforce,
)
from .partitions import (
    TooManyCorners,
    basic_pairs_by_weight,
    check_strict,
    contains,
    corner_removals,
    is_basic,
    shape_path,
)
from . import _kernel_py


class NotBasic(ValueError):
    """Raised when a caller hands classify a non-basic shape."""


@dataclass(frozen=True)
class Classification:
    """Verdict of the closed-form test, with every matching case tag."""

    lam: tuple
    mu: tuple
    multiplicity_free: bool
    matched_cases: tuple
    witness: tuple | None = None  # (nu, coefficient >= 2) when consulted

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "multiplicity_free": self.multiplicity_free,
            "cases": list(self.matched_cases),
            "witness": None if self.witness is None else
            {"nu": list(self.witness[0]), "coeff": self.witness[1]},
        }


def _path_or_none(parts):
    try:
        return shape_path(parts)
    except TooManyCorners:
        return None


def _find_witness(lam, mu):
    """First content seen twice, with its exact multiplicity."""
    rows = basic_rows(lam, mu)
    seen = set()
    for word in _kernel_py.iter_amenable_words(rows):
        nu = _kernel_py._word_content(word)
        if nu in seen:
            return nu, kernel.count_content(rows, nu)
        seen.add(nu)
    return None


def classify(lam, mu=(), witness=False):
    """Decide multiplicity-freeness of Q_{lam/mu} by the case list alone.

    Both shapes are described by their corner walks: one corner gives a
    two-number path, two corners a four-number path, and three or more
    corners fit no case beyond the first two.  Every matching case tag is
    collected.  With witness=True a failing shape also carries some
    (nu, coefficient) with coefficient at least 2, found by enumeration.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not is_basic(lam, mu):
        raise NotBasic(f"D_{lam}/{mu} is not basic; normalize first")
    cases = []
    if mu in ((), (1,)):
        cases.append("i")
    lpath = _path_or_none(lam)
    mpath = _path_or_none(mu) if mu else None
    if lpath and len(lpath) == 2:
        a, b = lpath
        if b in (1, 2):
            cases.append("ii")
        if mpath and len(mpath) == 4 and mpath[3] == 1:
            w, x, y, _ = mpath
            if w == 1 or x == 1 or b <= 3 or a + b - w - x - y - 1 == 1:
                cases.append("iii")
        if mpath and len(mpath) == 2:
            w, x = mpath
            if 2 <= b <= 4 or w <= 2 or x <= 3 or a == w + 1 or a + b - w - x <= 2:
                cases.append("vi")
    if lpath and len(lpath) == 4 and mpath and len(mpath) == 2 and mpath[1] == 1:
        a, b, c, d = lpath
        w = mpath[0]
        if d != 1 and (1 in (a, b, c) or w <= 2):
            cases.append("iv")
        if d == 1 and (a <= 2 or b <= 2 or c <= 2 or w <= 3 or w == a + c - 1):
            cases.append("v")
    free = bool(cases)
    found = _find_witness(lam, mu) if witness and not free else None
    return Classification(lam, mu, free, tuple(cases), found)


def decompose_special(lam, mu=()):
    """Closed-form expansion when one applies, else None.

    Covers the empty inner shape, a single removed box, staircase outer
    shapes (where removal acts on the parts themselves), and one-row inner
    shapes via the border-strip formula.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu):
        return {}
    if lam == mu:
        return {(): 1}
    if mu == ():
        return {lam: 1}
    if mu == (1,):
        return {nu: 1 for nu in corner_removals(lam)}
    if lam == tuple(range(len(lam), 0, -1)) and is_basic(lam, mu):
        return {tuple(p for p in lam if p not in set(mu)): 1}
    if len(mu) == 1:
        return decompose_row_strip(lam, mu[0])
    return None


@dataclass
class TheoremReport:
    """Outcome of sweeping the case list against brute force."""

    max_total: int
    checked: int = 0
    free: int = 0
    case_counts: dict = None
    discrepancies: list = None

    def __post_init__(self):
        self.case_counts = self.case_counts or {}
        self.discrepancies = self.discrepancies or []


def _check_pair(pair):
    lam, mu = pair
    verdict = classify(lam, mu)
    return pair, verdict.matched_cases, is_multiplicity_free_bruteforce(lam, mu)


def verify_theorem(max_total, processes=1):
    """Compare the case list against enumeration for every basic shape.

    Covers all basic (lam, mu) with |lam| <= max_total; any disagreement
    lands in the report's discrepancies.
    """
    pairs = list(basic_pairs_by_weight(max_total))
    report = TheoremReport(max_total)
    if processes > 1:
        with multiprocessing.Pool(processes) as pool:
            results = pool.imap_unordered(_check_pair, pairs, chunksize=64)
            _tally(report, results)
    else:
        _tally(report, map(_check_pair, pairs))
    return report


def _tally(report, results):
    for (lam, mu), cases, brute in results:
        report.checked += 1
        report.free += brute
        for tag in cases:
            report.case_counts[tag] = report.case_counts.get(tag, 0) + 1
        if bool(cases) != brute:
            report.discrepancies.append((lam, mu, bool(cases), brute))
