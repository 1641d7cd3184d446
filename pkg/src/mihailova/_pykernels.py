"""Pure-Python implementations of the hot kernels.

Words are handled in syllable form: a tuple of ``(generator, exponent)`` pairs
with ``generator >= 1`` and ``exponent != 0``. A syllable tuple is reduced when
no two adjacent syllables share a generator. Matrices are tuples of row tuples
of Python ints.

``_ckernels.pyx`` mirrors this module function by function.
"""

BACKEND = "python"


def reduce_syllables(syllables):
    """Freely reduce an arbitrary syllable sequence (zero exponents allowed)."""
    out = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


def concat_reduce(u, v):
    """Product of two reduced syllable tuples; cancellation only at the seam."""
    if not u:
        return v
    if not v:
        return u
    i = len(u)
    j = 0
    nv = len(v)
    while i > 0 and j < nv:
        g1, e1 = u[i - 1]
        g2, e2 = v[j]
        if g1 != g2:
            break
        total = e1 + e2
        if total:
            return u[: i - 1] + ((g1, total),) + v[j + 1 :]
        i -= 1
        j += 1
    return u[:i] + v[j:]


def invert_syllables(u):
    return tuple((g, -e) for g, e in reversed(u))


def mat_mul(x, y):
    n = len(x)
    m = len(y[0])
    inner = len(y)
    rows = []
    for i in range(n):
        xi = x[i]
        row = []
        for j in range(m):
            s = 0
            for k in range(inner):
                s += xi[k] * y[k][j]
            row.append(s)
        rows.append(tuple(row))
    return tuple(rows)


def sanov_eval(syllables):
    """Image of a rank-2 syllable word under a -> [[1,2],[0,1]], b -> [[1,0],[2,1]].

    Returns the entries ``(a, b, c, d)`` of the 2x2 product.
    """
    a, b, c, d = 1, 0, 0, 1
    for gen, exp in syllables:
        t = 2 * exp
        if gen == 1:
            # M @ [[1, t], [0, 1]]
            b += a * t
            d += c * t
        else:
            # M @ [[1, 0], [t, 1]]
            a += b * t
            c += d * t
    return a, b, c, d


def sanov_peel(a, b, c, d):
    """Recover the reduced word of ``[[a, b], [c, d]]`` in the Sanov group.

    Returns the syllable tuple, or None when the matrix is not in the image.
    Each step peels a power of A (if |a| > |c|) or B (if |c| > |a|) off the
    left so that the first column shrinks; parity (a odd, c even) makes the
    shrink strict, so the loop terminates.
    """
    if a * d - b * c != 1:
        return None
    if (a - 1) % 2 or b % 2 or c % 2 or (d - 1) % 2:
        return None
    out = []
    while c:
        if abs(a) > abs(c):
            n = _nearest(a, 2 * c)
            t = 2 * n
            a -= t * c
            b -= t * d
            out.append((1, n))
        else:
            n = _nearest(c, 2 * a)
            t = 2 * n
            c -= t * a
            d -= t * b
            out.append((2, n))
    if a != 1:
        return None
    if b:
        out.append((1, b // 2))
    return reduce_syllables(out)


def _nearest(num, den):
    # nearest integer to num/den; ties cannot occur for odd/even operands
    return (2 * num + den) // (2 * den)
