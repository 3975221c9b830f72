"""Marked letters, shifted tableaux, reading words, and amenability tests.

Letters live in the ordered alphabet 1' < 1 < 2' < 2 < ... and are encoded
as ints (marked v -> 2v-1, unmarked v -> 2v) so integer order is alphabet
order.  Words are tuples of letter codes.
"""

from collections import Counter

from .partitions import components, row_intervals, skew_diagram, strip_last_box


def letter(value, marked=False):
    """Encode a letter; the code order matches the alphabet order."""
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"letter value must be a positive integer: {value}")
    return 2 * value - 1 if marked else 2 * value


def letter_value(code):
    return (code + 1) // 2


def is_marked(code):
    return code % 2 == 1


def format_letter(code):
    return f"{letter_value(code)}'" if is_marked(code) else str(letter_value(code))


def parse_letter(token):
    token = token.strip()
    marked = token.endswith("'")
    if marked:
        token = token[:-1]
    try:
        value = int(token)
    except ValueError:
        raise ValueError(f"cannot parse letter {token!r}") from None
    return letter(value, marked)


def parse_word(text):
    return tuple(parse_letter(tok) for tok in text.split())


def format_word(word):
    return " ".join(format_letter(c) for c in word)


class Tableau:
    """A filling of a skew shifted diagram by marked letters.

    Rows and columns weakly increase, each column holds at most one
    unmarked k, and each row at most one marked k'.
    """

    __slots__ = ("entries", "shape")

    def __init__(self, entries, check=True):
        self.entries = dict(entries)
        self.shape = frozenset(self.entries)
        if check:
            self._validate()

    def _validate(self):
        row_intervals(self.shape)  # rows must be contiguous
        for (x, y), code in self.entries.items():
            if not isinstance(code, int) or code < 1:
                raise ValueError(f"bad letter code {code} at {(x, y)}")
            right = self.entries.get((x, y + 1))
            below = self.entries.get((x + 1, y))
            if right is not None and code > right:
                raise ValueError(f"row decreases at {(x, y)}")
            if below is not None and code > below:
                raise ValueError(f"column decreases at {(x, y)}")
            # equal letters sit adjacent, so adjacency checks catch repeats
            if right == code and is_marked(code):
                raise ValueError(f"marked letter repeats in row {x}")
            if below == code and not is_marked(code):
                raise ValueError(f"unmarked letter repeats in column {y}")

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        rows = {}
        for (x, y), code in sorted(self.entries.items()):
            rows.setdefault(x, []).append(format_letter(code))
        body = " / ".join(" ".join(toks) for _, toks in sorted(rows.items()))
        return f"Tableau({body})"


def reading_word(t):
    """Rows bottom to top, each read left to right."""
    return tuple(t.entries[box]
                 for box in sorted(t.shape, key=lambda b: (-b[0], b[1])))


def content(t):
    """Total letter multiplicities by value, trailing zeros trimmed."""
    return _trim(Counter(letter_value(c) for c in t.entries.values()))


def unmarked_content(t):
    return _trim(Counter(letter_value(c) for c in t.entries.values()
                         if not is_marked(c)))


def marked_content(t):
    return _trim(Counter(letter_value(c) for c in t.entries.values()
                         if is_marked(c)))


def word_content(word):
    return _trim(Counter(letter_value(c) for c in word))


def _trim(counter):
    top = max(counter, default=0)
    return tuple(counter.get(v, 0) for v in range(1, top + 1))


def scan_statistics(word, i):
    """m_i(j) for j = 0..2n.

    The first pass counts unmarked i right to left; the second adds marked
    i' left to right on top of m_i(n).
    """
    n = len(word)
    m = [0] * (2 * n + 1)
    for j in range(1, n + 1):
        m[j] = m[j - 1] + (word[n - j] == 2 * i)
    for j in range(n + 1, 2 * n + 1):
        m[j] = m[j - 1] + (word[j - n - 1] == 2 * i - 1)
    return m


def is_k_amenable_word(word, k):
    """The four scanning conditions for one k.

    Equivalent to testing ties of scan_statistics at k-1 and k plus the
    two first-letter conditions, fused into two early-exit passes.
    """
    if k < 2:
        raise ValueError("k-amenability is defined for k >= 2")
    uk, marked_k = 2 * k, 2 * k - 1
    uk1, marked_k1 = 2 * k - 2, 2 * k - 3
    mk = mk1 = 0
    for c in reversed(word):
        # at a tie the next letter scanned right to left may not be k or k'
        if mk == mk1 and (c == uk or c == marked_k):
            return False
        if c == uk:
            mk += 1
        elif c == uk1:
            mk1 += 1
    seen_k = seen_k1 = False
    for c in word:
        # at a tie the next letter scanned left to right may not be k-1 or k'
        if mk == mk1 and (c == uk1 or c == marked_k):
            return False
        if c == marked_k:
            if not seen_k:
                return False  # first letter of value k is marked
            mk += 1
        elif c == uk:
            seen_k = True
        elif c == marked_k1:
            if not seen_k1:
                return False  # first letter of value k-1 is marked
            mk1 += 1
        elif c == uk1:
            seen_k1 = True
    return True


def is_amenable_word(word):
    """k-amenable for every k >= 2; k beyond max value + 1 is vacuous."""
    top = max((letter_value(c) for c in word), default=0)
    return all(is_k_amenable_word(word, k) for k in range(2, top + 2))


def is_amenable(t):
    return is_amenable_word(reading_word(t))


def tvalue_boxes(t, i):
    """T^(i): the boxes whose letter has absolute value i."""
    return frozenset(b for b, c in t.entries.items() if letter_value(c) == i)


def fitting(t, i):
    """Whether the last box of T^(i) holds an unmarked i.

    The last box of a broken border strip is the last box of its leftmost
    component.  An empty T^(i) is vacuously fitting.
    """
    boxes = tvalue_boxes(t, i)
    if not boxes:
        return True
    return t.entries[strip_last_box(boxes)] == letter(i)


def _has_injection(sources, targets, allowed):
    # small augmenting-path matcher; d never exceeds the box count
    match = {}

    def augment(i, seen):
        for tgt in targets:
            if tgt in seen or not allowed(sources[i], tgt):
                continue
            seen.add(tgt)
            if tgt not in match or augment(match[tgt], seen):
                match[tgt] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(sources)))


def is_k_amenable_checklist(t, k):
    """Box-level k-amenability test, equivalent to the word conditions."""
    if k < 2:
        raise ValueError("k-amenability is defined for k >= 2")
    entries = t.entries
    uk, marked_k = letter(k), letter(k, True)
    uk1, marked_k1 = letter(k - 1), letter(k - 1, True)
    n_uk = n_mk = n_uk1 = n_mk1 = 0
    for c in entries.values():
        if c == uk:
            n_uk += 1
        elif c == marked_k:
            n_mk += 1
        elif c == uk1:
            n_uk1 += 1
        elif c == marked_k1:
            n_mk1 += 1
    if n_uk + n_mk == 0 and n_uk1 + n_mk1 == 0:
        return True
    if n_uk1 <= n_uk:
        return False

    def upper_right(x, y, code):
        # boxes weakly above and weakly to the right holding the letter
        return sum(1 for (u, v), c in entries.items()
                   if u <= x and v >= y and c == code)

    for (x, y), c in entries.items():
        if c == uk and upper_right(x, y, uk1) < upper_right(x, y, uk):
            return False
    bboxes = sorted(b for b, c in entries.items()
                    if c == marked_k
                    and entries.get((b[0] - 1, b[1] - 1)) != marked_k1)
    for (x, y) in bboxes:
        if upper_right(x, y, uk1) <= upper_right(x, y, uk):
            return False
    d = len(bboxes) + n_uk - n_uk1 + 1
    if d > 0:
        sources = bboxes[:d]
        targets = [b for b, c in entries.items()
                   if c == marked_k1
                   and entries.get((b[0] + 1, b[1] + 1)) != marked_k]
        blocked = {x for (x, _), c in entries.items() if c in (uk1, marked_k)}
        def allowed(src, tgt):
            return not any(r in blocked for r in range(tgt[0] + 1, src[0]))
        if not _has_injection(sources, targets, allowed):
            return False
    if not fitting(t, k - 1):
        return False
    if n_uk + n_mk > 0 and not fitting(t, k):
        return False
    return True


def is_k_amenable_sufficient(t, k):
    """A cheaper sufficient condition for k-amenability (not necessary)."""
    if k < 2:
        raise ValueError("k-amenability is defined for k >= 2")
    entries = t.entries
    uk, marked_k = letter(k), letter(k, True)
    uk1, marked_k1 = letter(k - 1), letter(k - 1, True)
    counts = Counter(entries.values())
    if counts[uk] + counts[marked_k] == 0 and counts[uk1] + counts[marked_k1] == 0:
        return True

    def column_has(y, code, lo, hi):
        return any(c == code for (u, v), c in entries.items()
                   if v == y and lo < u < hi)

    top = max(x for x, _ in entries) + 1
    anchor = any(c == uk1 and not column_has(y, uk, x, top + 1)
                 for (x, y), c in entries.items())
    if not anchor:
        return False
    for (x, y), c in entries.items():
        if c == uk and not column_has(y, uk1, 0, x):
            return False
        if c == marked_k and entries.get((x - 1, y - 1)) != marked_k1:
            return False
    if not fitting(t, k - 1):
        return False
    # a value-k region holding only marked letters is never fitting, so the
    # trigger must count marked letters too
    if counts[uk] + counts[marked_k] > 0 and not fitting(t, k):
        return False
    return True


def salmasian_strips(lam, mu=()):
    """The strips P_1, P_2, ... peeled off the skew diagram in turn."""
    remaining = set(skew_diagram(lam, mu))
    strips = []
    while remaining:
        strip = {b for b in remaining
                 if (b[0] - 1, b[1] - 1) not in remaining}
        strips.append(frozenset(strip))
        remaining -= strip
    return strips


def salmasian_tableau(lam, mu=()):
    """The canonical filling: strip i gets letter i, marked when the box
    directly below belongs to the same strip."""
    entries = {}
    for i, strip in enumerate(salmasian_strips(lam, mu), 1):
        for (x, y) in strip:
            entries[(x, y)] = letter(i, marked=(x + 1, y) in strip)
    return Tableau(entries)


def truncation(lam, mu, k):
    """U_k: what remains of the skew diagram after peeling k-1 strips."""
    if k < 1:
        raise ValueError("truncation index must be >= 1")
    remaining = set(skew_diagram(lam, mu))
    for _ in range(k - 1):
        if not remaining:
            break
        remaining -= {b for b in remaining
                      if (b[0] - 1, b[1] - 1) not in remaining}
    return frozenset(remaining)


def truncation_closed(lam, mu, k):
    """Closed form of U_k: boxes whose (k-1)-step diagonal shift stays inside."""
    if k < 1:
        raise ValueError("truncation index must be >= 1")
    d = skew_diagram(lam, mu)
    return frozenset(b for b in d if (b[0] - k + 1, b[1] - k + 1) in d)


def render_tableau(t, mu_boxes=frozenset()):
    """ASCII grid: ":" pads shifted indentation, "×" marks removed boxes."""
    mu_boxes = frozenset(mu_boxes)
    every = t.shape | mu_boxes
    if not every:
        return ""
    first_row = min(x for x, _ in every)
    last_row = max(x for x, _ in every)
    last_col = max(y for _, y in every)
    grid = []
    for x in range(first_row, last_row + 1):
        cells = []
        for y in range(1, last_col + 1):
            if (x, y) in mu_boxes:
                cells.append("×")
            elif (x, y) in t.shape:
                cells.append(format_letter(t.entries[(x, y)]))
            else:
                cells.append(":" if any((x, z) in every for z in range(y, last_col + 1)) else "")
        grid.append(cells)
    widths = [max(len(row[y]) for row in grid) for y in range(last_col)]
    lines = []
    for cells in grid:
        line = " ".join(cell.ljust(widths[y]) for y, cell in enumerate(cells))
        lines.append(line.rstrip())
    return "\n".join(lines)
