"""Shape transformations that preserve or bound the Q-expansion."""

from dataclasses import dataclass

from .partitions import (
    check_strict,
    normalize_basic,
    reanchor,
    skew_diagram,
)
from .tableaux import truncation


class NotUnshifted(ValueError):
    """Raised when a transform needs an unshifted skew shape."""


class OutOfRange(ValueError):
    """Raised for a row or column index outside the legal range."""


class EmptyColumn(ValueError):
    """Raised when the targeted column holds no box."""


@dataclass(frozen=True)
class TransformReport:
    """How one shape's expansion relates to its transform's."""

    input_shape: tuple
    output_shape: tuple
    relation: str  # "equal" or "le"


def _unshifted_boxes(d):
    """Validate and return the anchored boxes of an unshifted shape."""
    alpha, beta = normalize_basic(d)
    if len(beta) != len(alpha) - 1:
        raise NotUnshifted(f"D_{alpha}/{beta} is not unshifted")
    return skew_diagram(alpha, beta)


def transpose(d):
    """Reflect an unshifted shape across the main diagonal and re-anchor."""
    boxes = _unshifted_boxes(d)
    return reanchor(frozenset((y, x) for x, y in boxes))


def rotate(d):
    """Rotate an unshifted shape a half turn and re-anchor."""
    boxes = _unshifted_boxes(d)
    return reanchor(frozenset((-x, -y) for x, y in boxes))


def orthogonal_transpose(d):
    """Reflect any skew shape across the anti-diagonal and re-anchor."""
    alpha, beta = normalize_basic(d)
    boxes = skew_diagram(alpha, beta)
    return reanchor(frozenset((-y, -x) for x, y in boxes))


def gamma_right(d, a):
    """Shift the rows above row a one box to the right."""
    alpha, beta = normalize_basic(d)
    if not 2 <= a <= len(beta) + 2:
        raise OutOfRange(f"need 2 <= a <= {len(beta) + 2}, got {a}")
    return frozenset((x, y + 1) if x < a else (x, y)
                     for x, y in skew_diagram(alpha, beta))


def gamma_down(d, b):
    """Shift the boxes left of column b one box down."""
    alpha, beta = normalize_basic(d)
    if b < len(alpha):
        raise OutOfRange(f"need b >= {len(alpha)}, got {b}")
    return frozenset((x + 1, y) if y < b else (x, y)
                     for x, y in skew_diagram(alpha, beta))


def _plus_ones(parts, k):
    """parts with one box added to each of the first k rows."""
    if k > len(parts) + 1:
        raise OutOfRange(f"cannot lengthen {parts} by a box in row {k}")
    grown = [p + 1 for p in parts[:k]] + list(parts[k:])
    if k == len(parts) + 1:
        grown.append(1)
    return check_strict(grown)


def add_row(lam, mu, a):
    """Insert one box into each of the first a rows, mu gaining a - 1.

    Every coefficient f of Q_nu inside Q_{lam/mu} is at most the
    coefficient of Q_{nu with its first part raised} in the new shape.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not 1 <= a <= len(mu) + 1:
        raise OutOfRange(f"need 1 <= a <= {len(mu) + 1}, got {a}")
    return _plus_ones(lam, a), _plus_ones(mu, a - 1)


def add_column(lam, mu, b):
    """Push columns left of b down one row and re-top column b - 1.

    Returns the basic pair of the grown shape; the same coefficient bound
    as add_row holds.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if b < len(lam):
        raise OutOfRange(f"need b >= {len(lam)}, got {b}")
    d = skew_diagram(lam, mu)
    col = [x for x, y in d if y == b - 1]
    if not col:
        raise EmptyColumn(f"column {b - 1} of D_{lam}/{mu} is empty")
    top = (min(col), b - 1)
    shifted = frozenset((x + 1, y) if y < b else (x, y) for x, y in d)
    return normalize_basic(shifted | {top})


def _min_normal(boxes):
    """Translate a box set so its top row and leftmost column are 1."""
    if not boxes:
        return frozenset()
    dx = 1 - min(x for x, _ in boxes)
    dy = 1 - min(y for _, y in boxes)
    return frozenset((x + dx, y + dy) for x, y in boxes)


def ot_truncation_commutes(lam, mu, i):
    """Whether dropping the first i - 1 strips commutes with reflection.

    Both orders are computed and compared as box sets up to translation.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    d = skew_diagram(lam, mu)
    left = _min_normal(frozenset((-y, -x) for x, y in truncation(lam, mu, i)))
    if not d:
        return left == frozenset()
    gamma, delta = normalize_basic(orthogonal_transpose(d))
    right = _min_normal(truncation(gamma, delta, i))
    return left == right
