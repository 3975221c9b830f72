# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel; same API as the pure-Python twin."""

from libc.stdlib cimport malloc, free


cdef struct Shape:
    int n
    int nrows
    int* rowidx
    int* right
    int* above


cdef int shape_init(Shape* s, rows) except -1:
    cdef int nrows = len(rows)
    cdef int n = 0
    cdef int i, j, lo, hi, p
    if nrows >= 250:
        raise ValueError("too many rows for the compiled kernel")
    for lo, hi in rows:
        if hi < lo:
            raise ValueError("bad row interval")
        n += hi - lo + 1
    s.n = n
    s.nrows = nrows
    s.rowidx = NULL
    if n == 0:
        return 0
    s.rowidx = <int*>malloc(3 * n * sizeof(int))
    if s.rowidx == NULL:
        raise MemoryError()
    s.right = s.rowidx + n
    s.above = s.rowidx + 2 * n
    index = {}
    p = 0
    for i, (lo, hi) in enumerate(rows, 1):
        for j in range(hi, lo - 1, -1):
            index[(i, j)] = p
            s.rowidx[p] = i
            p += 1
    p = 0
    for i, (lo, hi) in enumerate(rows, 1):
        for j in range(hi, lo - 1, -1):
            s.right[p] = index.get((i, j + 1), -1)
            s.above[p] = index.get((i - 1, j), -1)
            p += 1
    return 0


cdef void shape_free(Shape* s):
    if s.rowidx != NULL:
        free(s.rowidx)
        s.rowidx = NULL


cdef bint c_word_k_amenable(int* w, int n, int k) noexcept nogil:
    cdef int mk = 0, mk1 = 0, j, c
    # right-to-left pass: a value-k letter may not appear at a tie
    for j in range(n):
        c = w[n - 1 - j]
        if mk == mk1 and (c == 2 * k or c == 2 * k - 1):
            return False
        if c == 2 * k:
            mk += 1
        elif c == 2 * k - 2:
            mk1 += 1
    # left-to-right pass: unmarked k-1 and marked k forbidden at ties
    for j in range(n):
        c = w[j]
        if mk == mk1 and (c == 2 * k - 2 or c == 2 * k - 1):
            return False
        if c == 2 * k - 1:
            mk += 1
        elif c == 2 * k - 3:
            mk1 += 1
    # first letter of value k must be unmarked, same for value k-1
    for j in range(n):
        c = w[j]
        if c == 2 * k - 1:
            return False
        if c == 2 * k:
            break
    for j in range(n):
        c = w[j]
        if c == 2 * k - 3:
            return False
        if c == 2 * k - 2:
            break
    return True


cdef bint c_word_amenable(int* w, int n) noexcept nogil:
    cdef int maxv = 0, i, v, k
    for i in range(n):
        v = (w[i] + 1) >> 1
        if v > maxv:
            maxv = v
    for k in range(2, maxv + 2):
        if not c_word_k_amenable(w, n, k):
            return False
    return True


cdef object content_key(int* rw, int n):
    cdef int cnt[260]
    cdef int top = 0, i, v
    for i in range(260):
        cnt[i] = 0
    for i in range(n):
        v = (rw[i] + 1) >> 1
        cnt[v] += 1
        if v > top:
            top = v
    return tuple([cnt[v] for v in range(1, top + 1)])


cdef void c_enum(Shape* s, int p, int* w, int* u, int* rw, dict out):
    cdef int row, v, x, rc, ac, unm, t
    if p == s.n:
        for t in range(s.n):
            rw[t] = w[s.n - 1 - t]
        if c_word_amenable(rw, s.n):
            key = content_key(rw, s.n)
            out[key] = out.get(key, 0) + 1
        return
    row = s.rowidx[p]
    rc = w[s.right[p]] if s.right[p] >= 0 else 0x7fffffff
    ac = w[s.above[p]] if s.above[p] >= 0 else 0
    for v in range(1, row + 1):
        if v > 1 and u[v] == u[v - 1]:
            continue
        for x in range(2 * v - 1, 2 * v + 1):
            if x > rc or (x == rc and (x & 1)):
                continue
            if x < ac or (x == ac and not (x & 1)):
                continue
            w[p] = x
            unm = 1 - (x & 1)
            u[v] += unm
            c_enum(s, p + 1, w, u, rw, out)
            u[v] -= unm


cdef bint c_dup(Shape* s, int p, int* w, int* u, int* rw, set seen):
    cdef int row, v, x, rc, ac, unm, t
    if p == s.n:
        for t in range(s.n):
            rw[t] = w[s.n - 1 - t]
        if c_word_amenable(rw, s.n):
            key = content_key(rw, s.n)
            if key in seen:
                return True
            seen.add(key)
        return False
    row = s.rowidx[p]
    rc = w[s.right[p]] if s.right[p] >= 0 else 0x7fffffff
    ac = w[s.above[p]] if s.above[p] >= 0 else 0
    for v in range(1, row + 1):
        if v > 1 and u[v] == u[v - 1]:
            continue
        for x in range(2 * v - 1, 2 * v + 1):
            if x > rc or (x == rc and (x & 1)):
                continue
            if x < ac or (x == ac and not (x & 1)):
                continue
            w[p] = x
            unm = 1 - (x & 1)
            u[v] += unm
            if c_dup(s, p + 1, w, u, rw, seen):
                u[v] -= unm
                return True
            u[v] -= unm
    return False


cdef long long c_count_content(Shape* s, int p, int* w, int* u, int* rem,
                               int* after, int* rw):
    cdef int row, v, x, rc, ac, unm, t
    cdef long long total = 0
    cdef bint feasible
    if p == s.n:
        for t in range(s.n):
            rw[t] = w[s.n - 1 - t]
        return 1 if c_word_amenable(rw, s.n) else 0
    row = s.rowidx[p]
    rc = w[s.right[p]] if s.right[p] >= 0 else 0x7fffffff
    ac = w[s.above[p]] if s.above[p] >= 0 else 0
    for v in range(1, row + 1):
        if v > 1 and u[v] == u[v - 1]:
            continue
        if rem[v - 1] == 0:
            continue
        for x in range(2 * v - 1, 2 * v + 1):
            if x > rc or (x == rc and (x & 1)):
                continue
            if x < ac or (x == ac and not (x & 1)):
                continue
            w[p] = x
            unm = 1 - (x & 1)
            u[v] += unm
            rem[v - 1] -= 1
            feasible = True
            for t in range(1, s.nrows + 1):
                if rem[t - 1] > after[(p + 1) * (s.nrows + 1) + t]:
                    feasible = False
                    break
            if feasible:
                total += c_count_content(s, p + 1, w, u, rem, after, rw)
            rem[v - 1] += 1
            u[v] -= unm
    return total


cdef long long c_count_bounded(Shape* s, int p, int* w, int maxval):
    cdef int x, rc, ac
    cdef long long total = 0
    if p == s.n:
        return 1
    rc = w[s.right[p]] if s.right[p] >= 0 else 0x7fffffff
    ac = w[s.above[p]] if s.above[p] >= 0 else 0
    for x in range(1, 2 * maxval + 1):
        if x > rc or (x == rc and (x & 1)):
            continue
        if x < ac or (x == ac and not (x & 1)):
            continue
        w[p] = x
        total += c_count_bounded(s, p + 1, w, maxval)
    return total


cdef int* work_alloc(Shape* s) except NULL:
    # one block: w, rw, u (u sized nrows + 2 and zeroed)
    cdef int size = 2 * s.n + s.nrows + 2
    cdef int i
    cdef int* buf = <int*>malloc(size * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = 0
    return buf


def count_contents(rows):
    """Content -> number of amenable fillings, as a dict."""
    cdef Shape s
    cdef int* buf
    rows = [(int(lo), int(hi)) for lo, hi in rows]
    shape_init(&s, rows)
    if s.n == 0:
        shape_free(&s)
        return {(): 1}
    out = {}
    buf = work_alloc(&s)
    try:
        c_enum(&s, 0, buf, buf + 2 * s.n, buf + s.n, out)
    finally:
        free(buf)
        shape_free(&s)
    return out


def count_content(rows, nu):
    """Number of amenable fillings with the given content."""
    cdef Shape s
    cdef int* buf
    cdef int* rem
    cdef int* after
    cdef int p, r, i
    cdef long long result
    rows = [(int(lo), int(hi)) for lo, hi in rows]
    nu = [int(v) for v in nu]
    shape_init(&s, rows)
    if len(nu) > s.nrows or sum(nu) != s.n or any(v < 0 for v in nu):
        shape_free(&s)
        return 0
    if s.n == 0:
        shape_free(&s)
        return 1
    buf = work_alloc(&s)
    rem = <int*>malloc((s.nrows + 1) * sizeof(int))
    after = <int*>malloc((s.n + 1) * (s.nrows + 1) * sizeof(int))
    if rem == NULL or after == NULL:
        free(buf)
        if rem != NULL:
            free(rem)
        if after != NULL:
            free(after)
        shape_free(&s)
        raise MemoryError()
    try:
        for i in range(s.nrows):
            rem[i] = nu[i] if i < len(nu) else 0
        for r in range(s.nrows + 1):
            after[s.n * (s.nrows + 1) + r] = 0
        for p in range(s.n - 1, -1, -1):
            for r in range(1, s.nrows + 1):
                after[p * (s.nrows + 1) + r] = (
                    after[(p + 1) * (s.nrows + 1) + r]
                    + (1 if s.rowidx[p] >= r else 0))
        result = c_count_content(&s, 0, buf, buf + 2 * s.n, rem, after,
                                 buf + s.n)
    finally:
        free(after)
        free(rem)
        free(buf)
        shape_free(&s)
    return result


def has_duplicate_content(rows):
    """Stop at the first content reached twice."""
    cdef Shape s
    cdef int* buf
    cdef bint found
    rows = [(int(lo), int(hi)) for lo, hi in rows]
    shape_init(&s, rows)
    if s.n == 0:
        shape_free(&s)
        return False
    seen = set()
    buf = work_alloc(&s)
    try:
        found = c_dup(&s, 0, buf, buf + 2 * s.n, buf + s.n, seen)
    finally:
        free(buf)
        shape_free(&s)
    return found


def count_bounded(rows, max_value):
    """Number of valid fillings with letter values <= max_value."""
    cdef Shape s
    cdef int* buf
    cdef long long result
    rows = [(int(lo), int(hi)) for lo, hi in rows]
    shape_init(&s, rows)
    if s.n == 0:
        shape_free(&s)
        return 1
    buf = work_alloc(&s)
    try:
        result = c_count_bounded(&s, 0, buf, int(max_value))
    finally:
        free(buf)
        shape_free(&s)
    return result


cdef int* word_alloc(word) except NULL:
    cdef int n = len(word)
    cdef int i
    cdef int* w = <int*>malloc(max(n, 1) * sizeof(int))
    if w == NULL:
        raise MemoryError()
    for i in range(n):
        w[i] = word[i]
    return w


def word_is_k_amenable(word, k):
    cdef int* w
    cdef bint ok
    if k < 2:
        raise ValueError("k-amenability is defined for k >= 2")
    word = [int(c) for c in word]
    w = word_alloc(word)
    try:
        ok = c_word_k_amenable(w, len(word), int(k))
    finally:
        free(w)
    return ok


def word_is_amenable(word):
    cdef int* w
    cdef bint ok
    word = [int(c) for c in word]
    w = word_alloc(word)
    try:
        ok = c_word_amenable(w, len(word))
    finally:
        free(w)
    return ok


def backend_name():
    return "c"
