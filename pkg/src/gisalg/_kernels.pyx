# cython: language_level=3, boundscheck=False
"""Compiled arithmetic kernels over raw element tuples.

Same contract as _kernels_py: raw paths are (edges, verts) tuple pairs, raw
elements are flat 4-tuples or None for zero.  Kept in lockstep with the pure
twin; tests assert call-for-call agreement.
"""

BACKEND = "compiled"


cpdef bint suffix_of(tuple se, tuple sv, tuple ue, tuple uv):
    cdef Py_ssize_t k = len(ue) - len(se)
    if k < 0:
        return False
    return ue[k:] == se and uv[k] == sv[0]


cpdef mul(a, b):
    if a is None or b is None:
        return None
    cdef tuple te = a[0], tv = a[1], ue = a[2], uv = a[3]
    cdef tuple ve = b[0], vv = b[1], we = b[2], wv = b[3]
    cdef Py_ssize_t k = len(ue) - len(ve)
    if k >= 0:
        if ue[k:] == ve and uv[k] == vv[0]:
            return (te, tv, ue[:k] + we, uv[:k] + wv)
    else:
        k = -k
        if ve[k:] == ue and vv[k] == uv[0]:
            return (ve[:k] + te, vv[:k] + tv, we, wv)
    return None


cpdef inv(a):
    if a is None:
        return None
    return (a[2], a[3], a[0], a[1])


cpdef bint leq(a, b):
    if a is None:
        return True
    if b is None:
        return False
    cdef tuple te = a[0], tv = a[1], ue = a[2], uv = a[3]
    cdef tuple ve = b[0], vv = b[1], we = b[2], wv = b[3]
    cdef Py_ssize_t k = len(te) - len(ve)
    if k < 0 or k != len(ue) - len(we):
        return False
    return (
        te[k:] == ve
        and tv[k] == vv[0]
        and ue[k:] == we
        and uv[k] == wv[0]
        and te[:k] == ue[:k]
    )


cdef Py_ssize_t _lcp(tuple te, tuple ue):
    cdef Py_ssize_t n = min(len(te), len(ue))
    cdef Py_ssize_t k = 0
    while k < n and te[k] == ue[k]:
        k += 1
    return k


cpdef list rays(a):
    cdef tuple te = a[0], tv = a[1], ue = a[2], uv = a[3]
    cdef Py_ssize_t k = _lcp(te, ue)
    cdef Py_ssize_t i
    return [(te[i:], tv[i:], ue[i:], uv[i:]) for i in range(k + 1)]


cpdef tuple top(a):
    cdef tuple te = a[0], tv = a[1], ue = a[2], uv = a[3]
    cdef Py_ssize_t k = _lcp(te, ue)
    return (te[k:], tv[k:], ue[k:], uv[k:])


cpdef tuple saturate(universe, gens):
    cdef set closed = set()
    cdef bint zero = False
    cdef list work = list(gens)
    cdef list fresh
    cdef tuple te, tv, ue, uv, y, z
    cdef Py_ssize_t k, i
    while work:
        x = work.pop()
        if x is None:
            zero = True
            continue
        if x in closed or x not in universe:
            continue
        te = x[0]
        tv = x[1]
        ue = x[2]
        uv = x[3]
        k = _lcp(te, ue)
        fresh = []
        for i in range(k + 1):
            y = (te[i:], tv[i:], ue[i:], uv[i:])
            z = (ue[i:], uv[i:], te[i:], tv[i:])
            if y not in closed and y in universe:
                closed.add(y)
                fresh.append(y)
            if z not in closed and z in universe:
                closed.add(z)
                fresh.append(z)
        for y in fresh:
            for w in list(closed):
                work.append(mul(y, w))
                work.append(mul(w, y))
    return closed, zero
