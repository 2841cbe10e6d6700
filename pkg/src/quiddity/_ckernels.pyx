# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython twin of quiddity._kernels.

Same four functions, same semantics, C integer arrays inside.  Entries
must fit in a C long long; quiddity-scale data is tiny, so this never
binds in practice (the dispatcher falls back to the pure kernels on
OverflowError).
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "c"

cdef int MAXSTACK = 64


cdef inline int _fill(seq, long long *buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return 0


cdef int _rot_cmp(long long *a, Py_ssize_t i, long long *b, Py_ssize_t j,
                  Py_ssize_t n) nogil:
    """Compare rotation i of doubled word a with rotation j of doubled b."""
    cdef Py_ssize_t k
    for k in range(n):
        if a[i + k] < b[j + k]:
            return -1
        if a[i + k] > b[j + k]:
            return 1
    return 0


cdef void _canon_into(long long *s, Py_ssize_t n, long long *out) nogil:
    """Write the dihedral canonical form of s[0:n] into out[0:n].

    Uses two doubled scratch words placed behind out: caller must supply
    4n extra slots at out+n.
    """
    cdef long long *d = out + n          # doubled forward word, 2n
    cdef long long *r = out + 3 * n      # doubled reversed word, 2n
    cdef Py_ssize_t i, besti = 0
    cdef bint best_rev = False
    for i in range(n):
        d[i] = s[i]
        d[i + n] = s[i]
        r[i] = s[n - 1 - i]
        r[i + n] = s[n - 1 - i]
    for i in range(1, n):
        if _rot_cmp(d, i, d, besti, n) < 0:
            besti = i
    for i in range(n):
        if _rot_cmp(r, i, d if not best_rev else r, besti, n) < 0:
            besti = i
            best_rev = True
    if best_rev:
        for i in range(n):
            out[i] = r[besti + i]
    else:
        for i in range(n):
            out[i] = d[besti + i]


cdef tuple _as_tuple(long long *buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(n)])


def canonical_form(seq):
    """Lex-least tuple over all rotations of ``seq`` and of its reversal."""
    cdef Py_ssize_t n = len(seq)
    if n == 0:
        return tuple(seq)
    cdef long long stack[64 * 6]
    cdef long long *buf
    cdef bint heap = n > MAXSTACK
    buf = <long long *> malloc(6 * n * sizeof(long long)) if heap else stack
    if buf is NULL:
        raise MemoryError
    try:
        _fill(seq, buf, n)
        _canon_into(buf, n, buf + n)
        return _as_tuple(buf + n, n)
    finally:
        if heap:
            free(buf)


def cyclic_contains(word, pat):
    """True iff ``pat`` occurs consecutively in the cyclic word ``word``,
    read in either direction."""
    cdef Py_ssize_t n = len(word), m = len(pat)
    if m == 0:
        return True
    if m > n:
        return False
    cdef long long stack[64 * 3]
    cdef long long *buf
    cdef bint heap = 2 * n + m > 3 * MAXSTACK
    buf = <long long *> malloc((2 * n + m) * sizeof(long long)) if heap else stack
    if buf is NULL:
        raise MemoryError
    cdef long long *d = buf
    cdef long long *p = buf + 2 * n
    cdef Py_ssize_t i, k
    cdef bint ok
    try:
        _fill(pat, p, m)
        for rev in (False, True):
            for i in range(n):
                d[i] = word[n - 1 - i] if rev else word[i]
                d[i + n] = d[i]
            for i in range(n):
                ok = True
                for k in range(m):
                    if d[i + k] != p[k]:
                        ok = False
                        break
                if ok:
                    return True
        return False
    finally:
        if heap:
            free(buf)


def linear_contains(seq, pat):
    """Consecutive-subsequence test, no wraparound, given orientation."""
    cdef Py_ssize_t n = len(seq), m = len(pat)
    if m > n:
        return False
    if m == 0:
        return True
    cdef long long stack[64 * 2]
    cdef long long *buf
    cdef bint heap = n + m > 2 * MAXSTACK
    buf = <long long *> malloc((n + m) * sizeof(long long)) if heap else stack
    if buf is NULL:
        raise MemoryError
    cdef long long *s = buf
    cdef long long *p = buf + n
    cdef Py_ssize_t i, k
    cdef bint ok
    try:
        _fill(seq, s, n)
        _fill(pat, p, m)
        for i in range(n - m + 1):
            ok = True
            for k in range(m):
                if s[i + k] != p[k]:
                    ok = False
                    break
            if ok:
                return True
        return False
    finally:
        if heap:
            free(buf)


def insert_fanout(rep):
    """Canonical forms of every single-ear insertion into the cycle
    ``rep`` (1 inserted between each adjacent pair, neighbours bumped)."""
    cdef Py_ssize_t n = len(rep), i, j
    cdef Py_ssize_t nn = n + 1
    cdef long long stack[65 * 7]
    cdef long long *buf
    cdef bint heap = nn > MAXSTACK
    buf = <long long *> malloc(7 * nn * sizeof(long long)) if heap else stack
    if buf is NULL:
        raise MemoryError
    cdef long long *src = buf
    cdef long long *cand = buf + nn
    cdef long long *work = buf + 2 * nn
    out = []
    try:
        _fill(rep, src, n)
        for i in range(n):
            if i < n - 1:
                for j in range(i):
                    cand[j] = src[j]
                cand[i] = src[i] + 1
                cand[i + 1] = 1
                cand[i + 2] = src[i + 1] + 1
                for j in range(i + 2, n):
                    cand[j + 1] = src[j]
            else:
                cand[0] = src[0] + 1
                for j in range(1, n - 1):
                    cand[j] = src[j]
                cand[n - 1] = src[n - 1] + 1
                cand[n] = 1
            _canon_into(cand, nn, work)
            out.append(_as_tuple(work, nn))
        return out
    finally:
        if heap:
            free(buf)
