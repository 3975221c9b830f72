"""Strict partitions, shifted and skew diagrams, and the shape-path encoding.

Partitions are plain tuples of strictly decreasing positive ints, () being
the empty partition.  Boxes are (row, col) pairs in matrix orientation with
row 1 on top.  Diagrams are frozensets of boxes.
"""

from collections import deque


class NotContained(ValueError):
    """mu does not fit inside lambda as shifted diagrams."""


class NotSkew(ValueError):
    """box set is not a shifted skew diagram, even after cleanup."""


class TooManyCorners(ValueError):
    """partition has three or more corners, so it has no shape path."""


def check_strict(parts):
    """Validate and return a strict partition as a tuple."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
            raise ValueError(f"parts must be positive integers, got {parts}")
        if i > 0 and parts[i - 1] <= p:
            raise ValueError(f"parts must strictly decrease, got {parts}")
    return parts


def is_strict(parts):
    try:
        check_strict(parts)
    except ValueError:
        return False
    return True


def parse_partition(text):
    """Parse "8,6,5,1" into (8,6,5,1); "-" or "" is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return check_strict(parts)


def format_partition(parts):
    return ",".join(str(p) for p in parts) if parts else "-"


def contains(lam, mu):
    """Whether the shifted diagram of mu sits inside that of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def shifted_diagram(lam):
    """Boxes (i,j) with 1 <= i <= l(lam) and i <= j <= i + lam_i - 1."""
    lam = check_strict(lam)
    return frozenset((i, j) for i, part in enumerate(lam, 1)
                     for j in range(i, i + part))


def skew_diagram(lam, mu):
    """The difference of the shifted diagrams of lam and mu."""
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    return shifted_diagram(lam) - shifted_diagram(mu)


def row_intervals(boxes):
    """Map each row to its (leftmost, rightmost) column.

    Raises NotSkew if some row's boxes are not contiguous.
    """
    spans = {}
    for x, y in boxes:
        lo, hi = spans.get(x, (y, y))
        spans[x] = (min(lo, y), max(hi, y))
    for x, (lo, hi) in spans.items():
        if hi - lo + 1 != sum(1 for b in boxes if b[0] == x):
            raise NotSkew(f"row {x} is not contiguous")
    return spans


def components(d):
    """Maximal edge-connected parts of a diagram, leftmost first."""
    boxes = set(d)
    parts = []
    while boxes:
        seed = next(iter(boxes))
        seen = {seed}
        queue = deque([seed])
        while queue:
            x, y = queue.popleft()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in boxes and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        boxes -= seen
        parts.append(frozenset(seen))
    parts.sort(key=lambda part: min(y for _, y in part))
    return parts


def corners(d):
    """Boxes with no box below and no box to the right, sorted by row."""
    boxes = frozenset(d)
    found = [(x, y) for x, y in boxes
             if (x + 1, y) not in boxes and (x, y + 1) not in boxes]
    found.sort()
    return found


def translate(boxes, dr, dc):
    return frozenset((x + dr, y + dc) for x, y in boxes)


def reanchor(boxes):
    """Move an arrangement of boxes into anchored position.

    The top row with boxes becomes row 1 and the lowest box of the leftmost
    column lands on the main diagonal.
    """
    boxes = frozenset(boxes)
    if not boxes:
        return boxes
    dr = 1 - min(x for x, _ in boxes)
    moved = translate(boxes, dr, 0)
    c0 = min(y for _, y in moved)
    r0 = max(x for x, y in moved if y == c0)
    return translate(moved, 0, r0 - c0)


def _strip_empty(boxes):
    # delete internal empty columns first, then internal empty rows,
    # repeating until neither kind remains
    boxes = set(boxes)
    while True:
        cols = {y for _, y in boxes}
        gap = next((y for y in range(min(cols) + 1, max(cols))
                    if y not in cols), None)
        if gap is not None:
            boxes = {(x, y - 1 if y > gap else y) for x, y in boxes}
            continue
        rows = {x for x, _ in boxes}
        gap = next((x for x in range(min(rows) + 1, max(rows))
                    if x not in rows), None)
        if gap is not None:
            boxes = {(x - 1 if x > gap else x, y) for x, y in boxes}
            continue
        return boxes


def normalize_basic(d):
    """Strip empty rows and columns, re-anchor, and read off (alpha, beta).

    The Q-function of the input equals that of the returned basic pair.
    Raises NotSkew when the cleaned-up boxes form no shifted skew shape.
    """
    boxes = frozenset(d)
    if not boxes:
        return (), ()
    boxes = reanchor(_strip_empty(boxes))
    spans = row_intervals(boxes)
    nrows = max(spans)
    alpha, beta = [], []
    for i in range(1, nrows + 1):
        if i not in spans:
            raise NotSkew(f"row {i} is empty")
        lo, hi = spans[i]
        alpha.append(hi - i + 1)
        beta.append(lo - i)
    while beta and beta[-1] == 0:
        beta.pop()
    alpha, beta = tuple(alpha), tuple(beta)
    if not (is_strict(alpha) and is_strict(beta)):
        raise NotSkew(f"rows do not form a skew shape: {sorted(boxes)}")
    if skew_diagram(alpha, beta) != boxes:
        raise NotSkew(f"rows do not form a skew shape: {sorted(boxes)}")
    return alpha, beta


def is_basic(lam, mu):
    """Whether D_{lam/mu} is basic: no empty rows, no empty columns."""
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu) or len(lam) <= len(mu):
        return False
    if any(lam[i] <= mu[i] for i in range(len(mu))):
        return False
    return all(lam[i + 1] >= mu[i] - 1 for i in range(len(mu)))


def border(lam):
    """Boxes of D_lam whose lower-right diagonal neighbour is absent."""
    lam = check_strict(lam)
    if not lam:
        raise ValueError("border of the empty partition is undefined")
    d = shifted_diagram(lam)
    return frozenset((x, y) for x, y in d if (x + 1, y + 1) not in d)


def border_strips(lam, n):
    """All n-box skew diagrams D_{lam/nu} lying inside the border of lam.

    Returns (nu, diagram) pairs.  D_{lam/nu} stays inside the border
    exactly when nu_i >= lam_{i+1} for every row, so the nu are read off
    from those intervals directly.
    """
    lam = check_strict(lam)
    if not 1 <= n <= (lam[0] if lam else 0):
        raise ValueError(f"need 1 <= n <= lam_1, got n={n}, lam={lam}")
    ell = len(lam)
    # nu_i must reach at least the next part, else the strip would leave
    # the border; only the last row of nu may vanish
    floors = [lam[i + 1] if i + 1 < ell else 0 for i in range(ell)]
    suffix = [0] * (ell + 1)
    for i in range(ell - 1, -1, -1):
        suffix[i] = suffix[i + 1] + floors[i]
    out = []

    def fill(i, prev, left, acc):
        if i == ell:
            if left == 0:
                nu = tuple(acc)
                out.append((nu, skew_diagram(lam, nu)))
            return
        hi = min(lam[i], prev - 1, left)
        for v in range(hi, floors[i] - 1, -1):
            if left - v < suffix[i + 1]:
                continue
            if v == 0:
                fill(i + 1, prev, left, acc)
            else:
                fill(i + 1, v, left - v, acc + [v])

    fill(0, lam[0] + 1, sum(lam) - n, [])
    return out


def corner_removals(lam):
    """Strict partitions obtained by deleting one corner box of D_lam."""
    lam = check_strict(lam)
    if not lam:
        raise ValueError("the empty partition has no corners")
    out = []
    for r in range(len(lam)):
        last = r == len(lam) - 1
        if not last and lam[r] - lam[r + 1] < 2:
            continue
        parts = list(lam)
        parts[r] -= 1
        if parts[r] == 0:
            parts.pop()
        if is_strict(parts):
            out.append(tuple(parts))
    return out


def shape_path(lam):
    """Encode a partition with at most two corners as [a,b] or [a,b,c,d]."""
    lam = check_strict(lam)
    if not lam:
        raise ValueError("the empty partition has no shape path")
    ell = len(lam)
    corner_rows = [r for r in range(1, ell + 1)
                   if r == ell or lam[r - 1] - lam[r] >= 2]
    if len(corner_rows) > 2:
        raise TooManyCorners(f"{lam} has {len(corner_rows)} corners")
    a = corner_rows[0]
    if len(corner_rows) == 1:
        return (a, lam[a - 1])
    b = lam[a - 1] - lam[a] - 1
    return (a, b, ell - a, lam[-1])


def shape_from_path(path):
    """Rebuild the unique partition with the given shape path."""
    path = tuple(path)
    if any(not isinstance(v, int) or v < 1 for v in path):
        raise ValueError(f"path entries must be positive integers: {path}")
    if len(path) == 2:
        a, b = path
        return tuple(range(a + b - 1, b - 1, -1))
    if len(path) == 4:
        a, b, c, d = path
        top = range(a + b + c + d - 1, b + c + d - 1, -1)
        bottom = range(c + d - 1, d - 1, -1)
        return tuple(top) + tuple(bottom)
    raise ValueError(f"shape path must have 2 or 4 entries: {path}")


def strip_first_box(d):
    """First box of a (broken) border strip.

    The first box of the rightmost component: no box above, none to the
    right.
    """
    comp = components(d)[-1]
    found = [(x, y) for x, y in comp
             if (x - 1, y) not in comp and (x, y + 1) not in comp]
    if len(found) != 1:
        raise ValueError("not a border strip")
    return found[0]


def strip_last_box(d):
    """Last box of a (broken) border strip: taken in the leftmost component."""
    comp = components(d)[0]
    found = [(x, y) for x, y in comp
             if (x + 1, y) not in comp and (x, y - 1) not in comp]
    if len(found) != 1:
        raise ValueError("not a border strip")
    return found[0]


def is_border_strip(d):
    """Connected and free of lower-right diagonal pairs."""
    boxes = frozenset(d)
    if not boxes or len(components(boxes)) != 1:
        return False
    return all((x + 1, y + 1) not in boxes for x, y in boxes)


def render_diagram(boxes, inner=frozenset(), box_char=".", inner_char="#"):
    """ASCII picture of a diagram, optionally marking removed inner boxes."""
    boxes, inner = frozenset(boxes), frozenset(inner)
    every = boxes | inner
    if not every:
        return ""
    rows = range(min(x for x, _ in every), max(x for x, _ in every) + 1)
    last_col = max(y for _, y in every)
    lines = []
    for x in rows:
        line = []
        for y in range(1, last_col + 1):
            if (x, y) in boxes:
                line.append(box_char)
            elif (x, y) in inner:
                line.append(inner_char)
            else:
                line.append(" ")
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


def strict_partitions_of(n, max_part=None):
    """Yield all strict partitions of n, largest part first."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def strict_partitions_upto(n):
    """Yield all strict partitions of size 0..n (the empty one included)."""
    for total in range(n + 1):
        yield from strict_partitions_of(total)


def basic_inner_partitions(lam):
    """Yield every mu for which D_{lam/mu} is basic (including mu = ())."""
    lam = check_strict(lam)
    if not lam:
        return

    def grow(i, prev, acc):
        yield tuple(acc)
        if i >= len(lam) - 1:
            return
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        hi = min(lam[i] - 1, nxt + 1, prev - 1)
        for v in range(hi, 0, -1):
            yield from grow(i + 1, v, acc + [v])

    yield from grow(0, lam[0] + 1, [])


def contained_partitions(lam):
    """Yield every strict mu whose shifted diagram sits inside D_lam."""
    lam = check_strict(lam)

    def grow(i, prev, acc):
        yield tuple(acc)
        if i >= len(lam):
            return
        for v in range(min(lam[i], prev - 1), 0, -1):
            yield from grow(i + 1, v, acc + [v])

    yield from grow(0, lam[0] + 1 if lam else 1, [])


def basic_pairs_by_boxes(max_boxes):
    """Yield all basic (lam, mu) whose skew diagram has <= max_boxes boxes.

    Built bottom row up: mu_i <= lam_{i+1} + 1 bounds every choice, so the
    search is finite once the box budget is fixed.
    """
    out = []

    def grow(rows, used):
        # rows holds (lam_i, mu_i) from the bottom row upward; mu_i = 0 marks
        # a row below the inner shape, legal only while none is placed yet
        lam_below, mu_below = rows[-1]
        out.append(rows)
        if used + 1 > max_boxes:
            return
        start = mu_below + 1 if mu_below else 0
        for mu_i in range(start, lam_below + 2):
            for boxes_i in range(1, max_boxes - used + 1):
                lam_i = mu_i + boxes_i
                if lam_i > lam_below:
                    grow(rows + [(lam_i, mu_i)], used + boxes_i)

    for bottom in range(1, max_boxes + 1):
        grow([(bottom, 0)], bottom)
    for rows in out:
        lam = tuple(l for l, _ in reversed(rows))
        mu = tuple(m for _, m in reversed(rows) if m > 0)
        yield lam, mu


def basic_pairs_by_weight(max_weight):
    """Yield all basic (lam, mu) with |lam| <= max_weight."""
    for total in range(1, max_weight + 1):
        for lam in strict_partitions_of(total):
            for mu in basic_inner_partitions(lam):
                yield lam, mu
