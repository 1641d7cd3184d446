# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_pykernels``.

Generator indices are C longs. Exponents and matrix entries stay Python ints
because exactness beyond 64 bits is required.
"""

BACKEND = "cython"


def reduce_syllables(syllables):
    cdef list out = []
    cdef long gen, top
    cdef Py_ssize_t n
    for item in syllables:
        gen = item[0]
        exp = item[1]
        if exp == 0:
            continue
        n = len(out)
        if n:
            top = (<tuple>out[n - 1])[0]
            if top == gen:
                total = (<tuple>out[n - 1])[1] + exp
                if total:
                    out[n - 1] = (gen, total)
                else:
                    out.pop()
                continue
        out.append((gen, exp))
    return tuple(out)


def concat_reduce(tuple u, tuple v):
    cdef Py_ssize_t i = len(u)
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t nv = len(v)
    cdef long g1, g2
    cdef tuple s1, s2
    if i == 0:
        return v
    if nv == 0:
        return u
    while i > 0 and j < nv:
        s1 = <tuple>u[i - 1]
        s2 = <tuple>v[j]
        g1 = s1[0]
        g2 = s2[0]
        if g1 != g2:
            break
        total = s1[1] + s2[1]
        if total:
            return u[: i - 1] + ((g1, total),) + v[j + 1 :]
        i -= 1
        j += 1
    return u[:i] + v[j:]


def invert_syllables(tuple u):
    cdef Py_ssize_t i, n = len(u)
    cdef list out = [None] * n
    for i in range(n):
        s = <tuple>u[n - 1 - i]
        out[i] = (s[0], -s[1])
    return tuple(out)


def mat_mul(tuple x, tuple y):
    cdef Py_ssize_t n = len(x)
    cdef Py_ssize_t inner = len(y)
    cdef Py_ssize_t m = len(<tuple>y[0])
    cdef Py_ssize_t i, j, k
    cdef tuple xi
    cdef list rows = []
    cdef list row
    for i in range(n):
        xi = <tuple>x[i]
        row = []
        for j in range(m):
            s = 0
            for k in range(inner):
                s += xi[k] * (<tuple>y[k])[j]
            row.append(s)
        rows.append(tuple(row))
    return tuple(rows)


def sanov_eval(syllables):
    a, b, c, d = 1, 0, 0, 1
    cdef long gen
    for item in syllables:
        gen = item[0]
        t = 2 * item[1]
        if gen == 1:
            b += a * t
            d += c * t
        else:
            a += b * t
            c += d * t
    return a, b, c, d


def sanov_peel(a, b, c, d):
    if a * d - b * c != 1:
        return None
    if (a - 1) % 2 or b % 2 or c % 2 or (d - 1) % 2:
        return None
    cdef list out = []
    while c:
        if abs(a) > abs(c):
            n = (2 * a + 2 * c) // (4 * c)
            t = 2 * n
            a -= t * c
            b -= t * d
            out.append((1, n))
        else:
            n = (2 * c + 2 * a) // (4 * a)
            t = 2 * n
            c -= t * a
            d -= t * b
            out.append((2, n))
    if a != 1:
        return None
    if b:
        out.append((1, b // 2))
    return reduce_syllables(out)
