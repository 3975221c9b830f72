"""Schur Q expansions of skew shapes via amenable tableau counting."""

from ._backend import kernel
from . import _kernel_py
from .partitions import (
    border,
    border_strips,
    check_strict,
    components,
    contains,
    corner_removals,
    is_strict,
    normalize_basic,
    shifted_diagram,
    skew_diagram,
    strip_first_box,
    strip_last_box,
)
from .tableaux import Tableau


def rows_of(alpha, beta=()):
    """Per-row (leftmost, rightmost) column spans of a basic D_{alpha/beta}."""
    beta = tuple(beta) + (0,) * (len(alpha) - len(beta))
    return [(beta[i] + i + 1, alpha[i] + i) for i in range(len(alpha))]


def basic_rows(lam, mu=()):
    """Row spans of the basic form of D_{lam/mu}."""
    boxes = skew_diagram(lam, mu)
    if not boxes:
        return []
    alpha, beta = normalize_basic(boxes)
    return rows_of(alpha, beta)


def decompose(lam, mu=()):
    """Coefficients {nu: f} of Q_{lam/mu} = sum of f * Q_nu.

    A mu not contained in lam gives the empty map (the function is zero);
    lam = mu gives {(): 1} (the function is the constant 1).
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu):
        return {}
    if lam == mu:
        return {(): 1}
    terms = kernel.count_contents(basic_rows(lam, mu))
    for nu in terms:
        if not is_strict(nu):
            raise RuntimeError(f"amenable tableau with non-strict content {nu}")
    return terms


def coefficient(lam, mu, nu):
    """The multiplicity f of Q_nu inside Q_{lam/mu}.

    Zero whenever mu does not fit inside lam, the box counts disagree, or
    nu has repeated parts.  Counts tableaux on the smaller of the two skew
    shapes D_{lam/mu} and D_{lam/nu}, which agree by symmetry in (mu, nu).
    """
    lam, mu = check_strict(lam), check_strict(mu)
    nu = tuple(nu)
    if not is_strict(nu):
        return 0
    if not contains(lam, mu) or sum(mu) + sum(nu) != sum(lam):
        return 0
    if lam == mu:
        return 1 if nu == () else 0
    if sum(nu) < sum(mu) and contains(lam, nu):
        mu, nu = nu, mu
    return kernel.count_content(basic_rows(lam, mu), nu)


def enumerate_amenable(lam, mu=(), content=None):
    """Yield every amenable tableau of the basic form of D_{lam/mu}.

    The shape is normalized first, so the tableaux live on the basic
    diagram.  Passing content restricts the stream to that content.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu):
        return
    rows = basic_rows(lam, mu)
    if not rows:
        if content in (None, ()):
            yield Tableau({})
        return
    spots = [(i + 1, y) for i in reversed(range(len(rows)))
             for y in range(rows[i][0], rows[i][1] + 1)]
    for word in _kernel_py.iter_amenable_words(rows, content):
        yield Tableau(dict(zip(spots, word)))


def enumerate_tableaux(lam, mu=(), max_value=None):
    """Yield every tableau on the basic form of D_{lam/mu} with values <= max_value.

    No amenability filter; max_value defaults to the box count.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu):
        return
    rows = basic_rows(lam, mu)
    if not rows:
        yield Tableau({})
        return
    if max_value is None:
        max_value = sum(hi - lo + 1 for lo, hi in rows)
    spots = [(i + 1, y) for i in reversed(range(len(rows)))
             for y in range(rows[i][0], rows[i][1] + 1)]
    for word in _kernel_py.iter_bounded_words(rows, max_value):
        yield Tableau(dict(zip(spots, word)))


def count_tableaux_bounded(lam, mu, max_value):
    """Number of tableaux on D_{lam/mu} with all values <= max_value."""
    lam, mu = check_strict(lam), check_strict(mu)
    if max_value < 0:
        raise ValueError("max_value must be non-negative")
    rows = basic_rows(lam, mu)
    if not rows:
        return 1
    return kernel.count_bounded(rows, max_value)


def is_multiplicity_free_bruteforce(lam, mu=()):
    """Whether every coefficient of Q_{lam/mu} is 0 or 1, by enumeration.

    Stops at the first content seen twice.
    """
    lam, mu = check_strict(lam), check_strict(mu)
    if not contains(lam, mu) or lam == mu:
        return True
    return not kernel.has_duplicate_content(basic_rows(lam, mu))


def _whole_border_expansion(lam):
    """The n = lam_1 - 1 closed form: one term per turning box of the border."""
    b = border(lam)
    first, last = strip_first_box(b), strip_last_box(b)
    inner = shifted_diagram(lam) - b
    terms = {}
    for box in sorted(b):
        x, y = box
        if (x - 1, y) in b or (x, y - 1) in b:
            continue
        nu, beta = normalize_basic(inner | {box})
        if beta != ():
            raise RuntimeError(f"border core plus {box} is not a straight shape")
        terms[nu] = 1 if box in (first, last) else 2
    return terms


def decompose_row_strip(lam, n):
    """Coefficients of Q_{lam/(n)} by the border-strip formula.

    n = 1 deletes one corner per term; n = lam_1 - 1 walks the turning
    boxes of the border; other n sum 2^(components-1) over the n-box
    border strips.
    """
    lam = check_strict(lam)
    if not lam or not 1 <= n <= lam[0]:
        raise ValueError(f"need 1 <= n <= lam_1, got {lam} and {n}")
    if n == 1:
        return {nu: 1 for nu in corner_removals(lam)}
    if n == lam[0] - 1:
        return _whole_border_expansion(lam)
    return {nu: 2 ** (len(components(d)) - 1) for nu, d in border_strips(lam, n)}


def expansion_terms_sorted(terms):
    """Terms as (nu, coeff) pairs, lexicographically descending by nu."""
    return sorted(terms.items(), reverse=True)


def expansion_text(terms):
    """Text form like "Q[4] + 2 Q[3,1]"; the empty expansion prints as 0."""
    if not terms:
        return "0"
    parts = []
    for nu, c in expansion_terms_sorted(terms):
        base = "Q[%s]" % ",".join(map(str, nu)) if nu else "1"
        parts.append(base if c == 1 else f"{c} {base}")
    return " + ".join(parts)


def expansion_json(lam, mu, terms):
    """JSON-ready dict for an expansion of Q_{lam/mu}."""
    return {
        "shape": {"lambda": list(lam), "mu": list(mu)},
        "terms": [{"nu": list(nu), "coeff": c}
                  for nu, c in expansion_terms_sorted(terms)],
    }


def expansion_from_json(doc):
    """Inverse of expansion_json: (lam, mu, terms)."""
    lam = tuple(doc["shape"]["lambda"])
    mu = tuple(doc["shape"]["mu"])
    terms = {tuple(t["nu"]): t["coeff"] for t in doc["terms"]}
    return lam, mu, terms
