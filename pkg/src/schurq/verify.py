"""Exhaustive cross-check suites shared by the CLI and the test suite."""

import os
import time
from dataclasses import dataclass, field

from .classifier import verify_theorem
from .coefficients import (
    basic_rows,
    decompose,
    decompose_row_strip,
    enumerate_tableaux,
)
from .partitions import (
    NotSkew,
    basic_pairs_by_boxes,
    components,
    contained_partitions,
    normalize_basic,
    skew_diagram,
    strict_partitions_of,
)
from .tableaux import (
    Tableau,
    is_k_amenable_checklist,
    is_k_amenable_word,
    reading_word,
    salmasian_strips,
    truncation,
)
from .transforms import (
    EmptyColumn,
    add_column,
    add_row,
    gamma_down,
    gamma_right,
    orthogonal_transpose,
    rotate,
    transpose,
)


@dataclass
class Report:
    """One suite's tally: what was checked and what disagreed."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        return (f"suite {self.name}: {self.checked} checked, "
                f"{len(self.failures)} failures, {self.elapsed:.1f}s")


def threads_from_env():
    """Worker count from the THREADS variable, at least 1."""
    try:
        return max(1, int(os.environ.get("THREADS", "1")))
    except ValueError:
        return 1


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report
    return run


@_timed
def suite_ot(max_boxes=7):
    """Expansions survive reflection and rotation of the diagram."""
    report = Report("ot")
    for lam, mu in basic_pairs_by_boxes(max_boxes):
        base = decompose(lam, mu)
        d = skew_diagram(lam, mu)
        images = [("ot", orthogonal_transpose(d))]
        if len(mu) == len(lam) - 1:
            images += [("t", transpose(d)), ("o", rotate(d))]
        for tag, boxes in images:
            report.checked += 1
            pair = normalize_basic(boxes)
            if decompose(*pair) != base:
                report.failures.append((tag, lam, mu, pair))
    return report


@_timed
def suite_symmetry(max_weight=9):
    """Swapping the inner shape with the content leaves f unchanged."""
    report = Report("symmetry")
    for total in range(1, max_weight + 1):
        for lam in strict_partitions_of(total):
            table = {mu: decompose(lam, mu) for mu in contained_partitions(lam)}
            for mu, terms in table.items():
                for nu, f in terms.items():
                    report.checked += 1
                    if table.get(nu, {}).get(mu, 0) != f:
                        report.failures.append((lam, mu, nu, f))
    return report


def _strip_prefix_terms(lam, mu, nu_prefix):
    """Terms of Q_{lam/mu} whose content starts with nu_prefix, tail-keyed."""
    k = len(nu_prefix)
    return {delta[k:]: f for delta, f in decompose(lam, mu).items()
            if delta[:k] == nu_prefix}


@_timed
def suite_parts(max_boxes=7):
    """The truncation identity and the three insertion inequalities."""
    report = Report("parts")
    for lam, mu in basic_pairs_by_boxes(max_boxes):
        base = decompose(lam, mu)
        d = skew_diagram(lam, mu)
        strips = salmasian_strips(lam, mu)
        nu = tuple(len(s) for s in strips)
        factor = 1
        for k in range(2, len(strips) + 2):
            factor *= 2 ** (len(components(strips[k - 2])) - 1)
            u = truncation(lam, mu, k)
            report.checked += 1
            try:
                alpha, beta = normalize_basic(u) if u else ((), ())
            except NotSkew:
                report.failures.append(("parts-shape", lam, mu, k))
                continue
            scaled = {gamma: factor * f
                      for gamma, f in decompose(alpha, beta).items()}
            if scaled != _strip_prefix_terms(lam, mu, nu[:k - 1]):
                report.failures.append(("parts", lam, mu, k))
        for a in range(2, len(mu) + 3):
            report.checked += 1
            grown = decompose(*normalize_basic(gamma_right(d, a)))
            if any(f > grown.get(t, 0) for t, f in base.items()):
                report.failures.append(("gamma_right", lam, mu, a))
        for b in range(len(lam), lam[0] + 2):
            report.checked += 1
            grown = decompose(*normalize_basic(gamma_down(d, b)))
            if any(f > grown.get(t, 0) for t, f in base.items()):
                report.failures.append(("gamma_down", lam, mu, b))
        for a in range(1, len(mu) + 2):
            report.checked += 1
            grown = decompose(*add_row(lam, mu, a))
            if any(f > grown.get((t[0] + 1,) + t[1:], 0) for t, f in base.items()):
                report.failures.append(("add_row", lam, mu, a))
        for b in range(len(lam), lam[0] + 2):
            try:
                alpha, beta = add_column(lam, mu, b)
            except EmptyColumn:
                continue
            report.checked += 1
            grown = decompose(alpha, beta)
            if any(f > grown.get((t[0] + 1,) + t[1:], 0) for t, f in base.items()):
                report.failures.append(("add_column", lam, mu, b))
    return report


# Both amenability tests see a tableau only through its k-neighbourhood:
# which boxes hold values below k-1, where the k-1 and k letters sit and
# which are marked, nothing else.  Checking one materialized tableau per
# neighbourhood pattern therefore checks every tableau, all values, all k.
_SMALL, _AM, _A, _BM, _B, _BIG = range(6)


def _neighbourhood_patterns(rows):
    """All six-state box labelings that some tableau induces at some k.

    Yields one live dict, mutated between yields: consume it immediately.
    """
    boxes = [(x, y) for x, (lo, hi) in enumerate(rows, 1)
             for y in range(lo, hi + 1)]
    state = {}
    marked_rows = {_AM: set(), _BM: set()}
    plain_cols = {_A: set(), _B: set()}

    def fill(i):
        if i == len(boxes):
            yield state
            return
        x, y = boxes[i]
        floor = max(state.get((x, y - 1), 0), state.get((x - 1, y), 0))
        for s in range(floor, _BIG + 1):
            if s in marked_rows and x in marked_rows[s]:
                continue
            if s in plain_cols and y in plain_cols[s]:
                continue
            state[(x, y)] = s
            if s in marked_rows:
                marked_rows[s].add(x)
            if s in plain_cols:
                plain_cols[s].add(y)
            yield from fill(i + 1)
            if s in marked_rows:
                marked_rows[s].discard(x)
            if s in plain_cols:
                plain_cols[s].discard(y)
        state.pop((x, y), None)

    yield from fill(0)


def _materialize(pattern, boxes, check=False):
    """A tableau with the given pattern as its k-neighbourhood, with k
    and the reading word."""
    entries = {}
    strip = {}
    for b in boxes:  # row-major, so the upper-left neighbour is done first
        if pattern[b] == _SMALL:
            strip[b] = strip.get((b[0] - 1, b[1] - 1), 0) + 1
    depth = max(strip.values(), default=0)
    k = depth + 2
    big = k
    word_rows = [[] for _ in range(boxes[-1][0] + 1)]
    for b in boxes:
        s = pattern[b]
        if s == _SMALL:
            i = strip[b]
            code = 2 * i - (strip.get((b[0] + 1, b[1])) == i)
        elif s == _BIG:
            big += 1
            code = 2 * big
        else:
            # _AM, _A, _BM, _B give k-1, k-1, k, k with marks on _AM, _BM
            code = 2 * (k - 1) + (s >= _BM) * 2 - (s in (_AM, _BM))
        entries[b] = code
        word_rows[b[0]].append(code)
    word = tuple(c for row in reversed(word_rows) for c in row)
    return Tableau(entries, check=check), k, word


@_timed
def suite_checklist(max_boxes=7, exhaustive_boxes=4):
    """The box-counting test matches the word scan on every tableau."""
    report = Report("checklist")
    for lam, mu in basic_pairs_by_boxes(max_boxes):
        boxes = [(x, y) for x, (lo, hi) in enumerate(basic_rows(lam, mu), 1)
                 for y in range(lo, hi + 1)]
        for pattern in _neighbourhood_patterns(basic_rows(lam, mu)):
            report.checked += 1
            t, k, word = _materialize(pattern, boxes,
                                      check=report.checked % 97 == 0)
            if is_k_amenable_checklist(t, k) != is_k_amenable_word(word, k):
                report.failures.append((lam, mu, sorted(pattern.items()), k))
    for lam, mu in basic_pairs_by_boxes(exhaustive_boxes):
        for t in enumerate_tableaux(lam, mu):
            word = reading_word(t)
            for k in range(2, sum(lam) - sum(mu) + 2):
                report.checked += 1
                if is_k_amenable_checklist(t, k) != is_k_amenable_word(word, k):
                    report.failures.append((lam, mu, word, k))
    return report


@_timed
def suite_rowstrip(max_weight=10, staircase_weight=15):
    """Border-strip formulas against enumeration, staircases included."""
    report = Report("rowstrip")
    for total in range(1, max_weight + 1):
        for lam in strict_partitions_of(total):
            for n in range(1, lam[0] + 1):
                report.checked += 1
                if decompose_row_strip(lam, n) != decompose(lam, (n,)):
                    report.failures.append(("rowstrip", lam, n))
    ell = 1
    while ell * (ell + 1) // 2 <= staircase_weight:
        lam = tuple(range(ell, 0, -1))
        for mask in range(2 ** ell):
            mu = tuple(p for i, p in enumerate(lam) if mask >> i & 1)
            rest = tuple(p for i, p in enumerate(lam) if not mask >> i & 1)
            report.checked += 1
            expected = {rest: 1} if rest else {(): 1}
            if decompose(lam, mu) != expected:
                report.failures.append(("staircase", lam, mu))
        ell += 1
    return report


@_timed
def suite_theorem(max_total=12, processes=None):
    """The case list against brute force over every basic shape."""
    if processes is None:
        processes = threads_from_env()
    inner = verify_theorem(max_total, processes=processes)
    report = Report("theorem")
    report.checked = inner.checked
    report.failures = list(inner.discrepancies)
    report.case_counts = inner.case_counts
    return report


SUITES = {
    "ot": suite_ot,
    "symmetry": suite_symmetry,
    "parts": suite_parts,
    "checklist": suite_checklist,
    "rowstrip": suite_rowstrip,
    "theorem": suite_theorem,
}

DEFAULT_SIZES = {
    "ot": 7,
    "symmetry": 9,
    "parts": 7,
    "checklist": 7,
    "rowstrip": 10,
    "theorem": 12,
}


def run_suite(name, max_size=None):
    """Run one named suite at its default or the given size."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; pick from {sorted(SUITES)}")
    size = DEFAULT_SIZES[name] if max_size is None else max_size
    return SUITES[name](size)
