"""Diagram symmetries and the row/column insertion maps."""

import pytest

from schurq.coefficients import decompose, enumerate_amenable
from schurq.partitions import (
    basic_pairs_by_boxes,
    normalize_basic,
    skew_diagram,
)
from schurq.tableaux import is_amenable_word, reading_word
from schurq.transforms import (
    EmptyColumn,
    NotUnshifted,
    OutOfRange,
    add_column,
    add_row,
    gamma_down,
    gamma_right,
    orthogonal_transpose,
    ot_truncation_commutes,
    rotate,
    transpose,
)


def unshifted_pairs(max_boxes):
    return [(lam, mu) for lam, mu in basic_pairs_by_boxes(max_boxes)
            if len(mu) == len(lam) - 1]


def test_transpose_and_rotate_are_involutions():
    for lam, mu in unshifted_pairs(8):
        d = skew_diagram(lam, mu)
        assert transpose(transpose(d)) == d, (lam, mu)
        assert rotate(rotate(d)) == d, (lam, mu)


def test_ot_is_an_involution():
    for lam, mu in basic_pairs_by_boxes(8):
        d = skew_diagram(lam, mu)
        assert orthogonal_transpose(orthogonal_transpose(d)) == d, (lam, mu)


def test_ot_composes_transpose_and_rotate():
    for lam, mu in unshifted_pairs(7):
        d = skew_diagram(lam, mu)
        assert orthogonal_transpose(d) == rotate(transpose(d)), (lam, mu)


def test_transpose_requires_unshifted():
    with pytest.raises(NotUnshifted):
        transpose(skew_diagram((3, 1), ()))
    with pytest.raises(NotUnshifted):
        rotate(skew_diagram((4, 2), ()))


def test_expansion_survives_ot():
    for lam, mu in [((4, 2), (2,)), ((5, 4, 2), (4,)), ((6, 4, 3, 2, 1), (3, 1))]:
        image = normalize_basic(orthogonal_transpose(skew_diagram(lam, mu)))
        assert decompose(*image) == decompose(lam, mu), (lam, mu)


def test_gamma_right_worked_shape():
    d = skew_diagram((8, 7, 4, 3, 1), (5, 2, 1))
    assert normalize_basic(gamma_right(d, 5)) == ((9, 8, 5, 4, 1), (6, 3, 2, 1))


def test_gamma_down_worked_shape():
    d = skew_diagram((8, 7, 4, 3, 1), (5, 2, 1))
    assert normalize_basic(gamma_down(d, 6)) == (
        (9, 8, 5, 4, 2, 1), (6, 5, 2, 1))


def test_gamma_bounds():
    d = skew_diagram((4, 2), (2,))
    with pytest.raises(OutOfRange):
        gamma_right(d, 1)
    with pytest.raises(OutOfRange):
        gamma_right(d, 4)
    with pytest.raises(OutOfRange):
        gamma_down(d, 1)


def test_gamma_never_loses_coefficients():
    for lam, mu in basic_pairs_by_boxes(6):
        base = decompose(lam, mu)
        d = skew_diagram(lam, mu)
        for a in range(2, len(mu) + 3):
            grown = decompose(*normalize_basic(gamma_right(d, a)))
            assert all(f <= grown.get(nu, 0) for nu, f in base.items())
        for b in range(len(lam), lam[0] + 2):
            grown = decompose(*normalize_basic(gamma_down(d, b)))
            assert all(f <= grown.get(nu, 0) for nu, f in base.items())


def test_add_row_shapes_and_bound():
    assert add_row((4, 2), (2,), 1) == ((5, 2), (2,))
    assert add_row((4, 2), (2,), 2) == ((5, 3), (3,))
    with pytest.raises(OutOfRange):
        add_row((4, 2), (2,), 3)
    base = decompose((4, 2), (2,))
    for a in (1, 2):
        grown = decompose(*add_row((4, 2), (2,), a))
        for nu, f in base.items():
            assert f <= grown.get((nu[0] + 1,) + nu[1:], 0), (a, nu)


def test_add_column_smallest_case():
    assert add_column((2,), (), 2) == ((3, 1), (1,))


def test_add_column_reports_empty_columns():
    with pytest.raises(EmptyColumn):
        add_column((2,), (), 1)


def test_add_column_never_loses_coefficients():
    for lam, mu in basic_pairs_by_boxes(6):
        base = decompose(lam, mu)
        for b in range(len(lam), lam[0] + 2):
            try:
                grown = decompose(*add_column(lam, mu, b))
            except EmptyColumn:
                continue
            for nu, f in base.items():
                assert f <= grown.get((nu[0] + 1,) + nu[1:], 0), (lam, mu, b)


def test_truncation_commutes_with_ot():
    for lam, mu in basic_pairs_by_boxes(8):
        for i in range(1, sum(lam) - sum(mu) + 2):
            assert ot_truncation_commutes(lam, mu, i), (lam, mu, i)


def test_inserting_unmarked_one_keeps_words_amenable():
    for lam, mu in [((3, 1), ()), ((4, 2), (2,)), ((3, 2), (1,))]:
        for t in enumerate_amenable(lam, mu):
            w = reading_word(t)
            for pos in range(len(w) + 1):
                assert is_amenable_word(w[:pos] + (2,) + w[pos:]), (w, pos)
