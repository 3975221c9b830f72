"""Letters, tableau validity, reading words, and amenability criteria."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from helpers import naive_tableaux, tableau_from_rows
from schurq import tableaux as T
from schurq.partitions import basic_pairs_by_boxes, shifted_diagram, skew_diagram
from schurq.tableaux import Tableau, letter


def codes(text):
    return T.parse_word(text)


# the worked 14-box example: lambda=(11,9,6,5,4,2,1), mu=(8,6,5,4,1)
CHECK_LAM = (11, 9, 6, 5, 4, 2, 1)
CHECK_MU = (8, 6, 5, 4, 1)
CHECK_ROWS = ["1' 1 1", "1' 2' 2", "1", "2'", "1' 1 2", "1 2'", "2"]


def checklist_example():
    return tableau_from_rows(CHECK_LAM, CHECK_MU, CHECK_ROWS)


def test_letter_encoding_orders_the_alphabet():
    seq = [letter(1, True), letter(1), letter(2, True), letter(2), letter(3, True)]
    assert seq == sorted(seq)
    assert T.letter_value(letter(4, True)) == 4
    assert T.is_marked(letter(4, True)) and not T.is_marked(letter(4))
    with pytest.raises(ValueError):
        letter(0)


def test_letter_parse_format_round_trip():
    for tok in ["1", "1'", "12", "12'"]:
        assert T.format_letter(T.parse_letter(tok)) == tok
    assert T.parse_word("2 3 1'") == (4, 6, 1)
    assert T.format_word((4, 6, 1)) == "2 3 1'"
    with pytest.raises(ValueError):
        T.parse_letter("x")


def test_tableau_validation_rejects_bad_fillings():
    box = lambda rows: {(1, 1): rows[0], (1, 2): rows[1]}
    Tableau(box([letter(1), letter(1)]))  # two unmarked in a row is fine
    with pytest.raises(ValueError):
        Tableau(box([letter(2), letter(1)]))  # decreasing row
    with pytest.raises(ValueError):
        Tableau(box([letter(1, True), letter(1, True)]))  # marked repeat in row
    with pytest.raises(ValueError):
        Tableau({(1, 1): letter(1), (2, 1): letter(1)})  # unmarked repeat in column
    Tableau({(1, 1): letter(1, True), (2, 1): letter(1, True)})  # marked column repeat ok


def test_validator_agrees_with_oracle_on_all_fillings():
    import itertools
    boxes = sorted(skew_diagram((3, 1), (1,)))  # 3 boxes
    alphabet = [(v, m) for v in (1, 2, 3) for m in (True, False)]
    for combo in itertools.product(alphabet, repeat=3):
        filling = dict(zip(boxes, combo))
        ok = naive.is_valid_filling(filling)
        entries = {b: naive.to_code(l) for b, l in filling.items()}
        try:
            Tableau(entries)
            assert ok, f"validator accepted {filling}"
        except ValueError:
            assert not ok, f"validator rejected {filling}"


def test_reading_word_goldens():
    single = Tableau({(1, 1): letter(1)})
    assert T.reading_word(single) == codes("1")

    sal = T.salmasian_tableau((6, 5, 3, 2), (4, 1))
    assert T.format_word(T.reading_word(sal)) == "2 3 1 2' 2 1' 1 1 2 1' 1"

    t = checklist_example()
    assert T.format_word(T.reading_word(t)) == "2 1 2' 1' 1 2 2' 1 1' 2' 2 1' 1 1"


def test_content_with_internal_zero():
    t = tableau_from_rows((8, 6, 5, 3, 2), (5, 2, 1),
                          ["1' 1 2", "2' 2 2 4", "2 4 5 5", "4 6' 6", "6 7"])
    assert T.content(t) == (2, 5, 0, 3, 2, 3, 1)
    assert T.unmarked_content(t) == (1, 4, 0, 3, 2, 2, 1)
    assert T.marked_content(t) == (1, 1, 0, 0, 0, 1)
    word = T.reading_word(t)
    assert T.format_word(word) == "6 7 4 6' 6 2 4 5 5 2' 2 2 4 1' 1 2"
    assert T.word_content(word) == T.content(t)


def test_scan_statistics_examples():
    assert T.scan_statistics(codes("1"), 1) == [0, 1, 1]
    assert T.scan_statistics(codes("1' 1"), 1) == [0, 1, 1, 2, 2]
    assert T.scan_statistics(codes("1' 1"), 3) == [0, 0, 0, 0, 0]


@given(st.lists(st.integers(1, 8), max_size=6), st.integers(1, 5))
def test_scan_statistics_against_oracle(word, i):
    word = tuple(word)
    m = T.scan_statistics(word, i)
    nword = [naive.from_code(c) for c in word]
    assert m == [naive.m_stat(nword, i, j) for j in range(2 * len(word) + 1)]


def test_k_amenable_word_goldens():
    # right-to-left scan sees the 2 while the counts still tie
    assert not T.is_k_amenable_word(codes("1 2"), 2)
    # content (1,1) is not strict: after scanning the leading 2 the counts
    # tie again and the trailing unmarked 1 is forbidden
    assert not T.is_k_amenable_word(codes("2 1"), 2)
    assert T.is_k_amenable_word(codes("1 2"), 4)   # no 3s or 4s present
    assert T.is_k_amenable_word(codes("1 1"), 2)
    assert not T.is_k_amenable_word(codes("1' 1"), 2)  # first 1-ish letter marked
    with pytest.raises(ValueError):
        T.is_k_amenable_word(codes("1"), 1)


@given(st.lists(st.integers(1, 8), max_size=6), st.integers(2, 5))
def test_k_amenable_word_against_oracle(word, k):
    word = tuple(word)
    nword = [naive.from_code(c) for c in word]
    assert T.is_k_amenable_word(word, k) == naive.is_k_amenable(nword, k)


@given(st.lists(st.integers(1, 8), max_size=6))
def test_amenable_word_against_oracle(word):
    word = tuple(word)
    nword = [naive.from_code(c) for c in word]
    assert T.is_amenable_word(word) == naive.is_amenable(nword)


def test_is_amenable_goldens():
    assert T.is_amenable(Tableau({(1, 1): letter(1)}))
    assert not T.is_amenable(Tableau({(1, 1): letter(1, True)}))
    assert not T.is_amenable(Tableau({(1, 1): letter(2)}))  # a 2 in row 1
    assert T.is_amenable(checklist_example())
    assert T.is_amenable(T.salmasian_tableau((6, 5, 3, 2), (4, 1)))


def test_checklist_on_worked_example():
    t = checklist_example()
    assert T.unmarked_content(t) == (5, 3)
    for k in (2, 3):
        assert T.is_k_amenable_checklist(t, k)
        assert T.is_k_amenable_word(T.reading_word(t), k)


def test_checklist_escape_clause():
    t = Tableau({(1, 1): letter(1)})
    assert T.is_k_amenable_checklist(t, 5)  # no 4s or 5s anywhere


from functools import lru_cache


@lru_cache(maxsize=None)
def sweep_tableaux(max_boxes):
    out = []
    for lam, mu in basic_pairs_by_boxes(max_boxes):
        boxes = skew_diagram(lam, mu)
        out.extend(naive_tableaux(boxes, max_value=len(boxes)))
    return out


def test_checklist_equals_word_condition_small_sweep():
    checked = 0
    for t in sweep_tableaux(4):
        word = T.reading_word(t)
        for k in range(2, 6):
            assert T.is_k_amenable_checklist(t, k) == T.is_k_amenable_word(word, k), \
                f"disagree on {t!r} k={k}"
            checked += 1
    assert checked > 1000


def test_sufficient_condition_implies_amenable():
    hits = 0
    for t in sweep_tableaux(4):
        word = T.reading_word(t)
        for k in range(2, 6):
            if T.is_k_amenable_sufficient(t, k):
                assert T.is_k_amenable_word(word, k)
                hits += 1
    assert hits > 100


def test_diagonal_strictness_is_a_consequence():
    for t in sweep_tableaux(4):
        for (x, y), code in t.entries.items():
            below = t.entries.get((x + 1, y + 1))
            if below is not None:
                assert T.letter_value(code) < T.letter_value(below)


def test_amenable_tableaux_satisfy_row_bound_and_unmarked_lemma():
    for t in sweep_tableaux(4):
        word = T.reading_word(t)
        if not T.is_amenable_word(word):
            continue
        for (x, _), code in t.entries.items():
            assert T.letter_value(code) <= x
        n = len(word)
        for k in range(2, 6):
            mk1 = T.scan_statistics(word, k - 1)[n]
            mk = T.scan_statistics(word, k)[n]
            if mk1 > 0:
                assert mk1 > mk


def test_two_fillings_per_component():
    import itertools
    from schurq.partitions import components, strip_last_box

    for t in sweep_tableaux(3):
        for i in set(T.letter_value(c) for c in t.entries.values()):
            shape_i = T.tvalue_boxes(t, i)
            for comp in components(shape_i):
                variants = []
                boxes = sorted(comp)
                for marks in itertools.product((False, True), repeat=len(boxes)):
                    entries = dict(t.entries)
                    for b, m in zip(boxes, marks):
                        entries[b] = letter(i, m)
                    try:
                        variants.append(Tableau(entries))
                    except ValueError:
                        pass
                assert len(variants) == 2
                a, b = variants
                last = strip_last_box(comp)
                diff = [box for box in boxes if a.entries[box] != b.entries[box]]
                assert diff == [last]


def test_fitting():
    sal = T.salmasian_tableau((6, 5, 3, 2), (4, 1))
    for i in (1, 2, 3):
        assert T.fitting(sal, i)
    assert T.fitting(sal, 9)  # empty support is vacuously fitting
    flipped = dict(sal.entries)
    flipped[(3, 3)] = letter(1, True)  # last box of the 1-strip, now marked
    assert not T.fitting(Tableau(flipped), 1)


def test_salmasian_examples():
    sal = T.salmasian_tableau((6, 5, 3, 2), (4, 1))
    assert sal == tableau_from_rows((6, 5, 3, 2), (4, 1),
                                    ["1' 1", "1' 1 1 2", "1 2' 2", "2 3"])
    row = T.salmasian_tableau((4,))
    assert sorted(row.entries.values()) == [letter(1)] * 4


def test_salmasian_strips_partition_the_shape():
    for lam, mu in [((6, 5, 3, 2), (4, 1)), ((10, 8, 7, 6, 4, 1), (5, 3, 2, 1))]:
        strips = T.salmasian_strips(lam, mu)
        union = set()
        for s in strips:
            assert not (union & s)
            union |= s
        assert union == skew_diagram(lam, mu)


def test_salmasian_output_is_valid_with_decreasing_content():
    for lam, mu in basic_pairs_by_boxes(6):
        t = T.salmasian_tableau(lam, mu)  # constructor validates
        c = T.content(t)
        assert all(c[i] >= c[i + 1] for i in range(len(c) - 1))
        strips = T.salmasian_strips(lam, mu)
        from schurq.partitions import components
        if all(len(components(s)) == 1 for s in strips):
            assert T.is_amenable(t)


def test_truncation_basics():
    lam, mu = (10, 8, 7, 6, 4, 1), (5, 3, 2, 1)
    assert T.truncation(lam, mu, 1) == skew_diagram(lam, mu)
    nstrips = len(T.salmasian_strips(lam, mu))
    assert T.truncation(lam, mu, nstrips + 1) == frozenset()
    from schurq.partitions import normalize_basic
    assert normalize_basic(T.truncation(lam, mu, 3)) == ((5, 4, 2), (3, 1))
    # a wider variant where dropping the two lowest strips leaves 10 boxes
    assert normalize_basic(T.truncation((11, 9, 8, 7, 5, 1), mu, 3)) == ((6, 5, 3), (3, 1))
    with pytest.raises(ValueError):
        T.truncation(lam, mu, 0)


def test_truncation_closed_form_agrees():
    for lam, mu in basic_pairs_by_boxes(9):
        for k in range(1, 5):
            assert T.truncation(lam, mu, k) == T.truncation_closed(lam, mu, k)


def test_render_tableau():
    sal = T.salmasian_tableau((6, 5, 3, 2), (4, 1))
    out = T.render_tableau(sal, mu_boxes=shifted_diagram((4, 1)))
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0].split() == ["×", "×", "×", "×", "1'", "1"]
    assert lines[1].split() == [":", "×", "1'", "1", "1", "2"]
    assert lines[2].split() == [":", ":", "1", "2'", "2"]
    assert lines[3].split() == [":", ":", ":", "2", "3"]
