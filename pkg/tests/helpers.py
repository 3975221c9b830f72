"""Shared helpers for the test suite."""

import naive
from schurq.tableaux import Tableau


def naive_tableaux(boxes, max_value):
    """All valid tableaux on the boxes, built by the brute-force oracle."""
    for filling in naive.all_fillings(boxes, max_value):
        yield Tableau({b: naive.to_code(l) for b, l in filling.items()})


def tableau_from_rows(lam, mu, rows):
    """Build a tableau from per-row token strings like "1' 1 2"."""
    from schurq.partitions import row_intervals, skew_diagram
    from schurq.tableaux import parse_letter

    d = skew_diagram(lam, mu)
    spans = row_intervals(d)
    entries = {}
    for x, text in zip(sorted(spans), rows):
        lo, hi = spans[x]
        tokens = text.split()
        assert len(tokens) == hi - lo + 1, f"row {x} needs {hi - lo + 1} letters"
        for y, tok in zip(range(lo, hi + 1), tokens):
            entries[(x, y)] = parse_letter(tok)
    return Tableau(entries)
