# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (int64).

Callers must pre-check magnitudes: see ``k3cert.kernels``.
"""

from libc.math cimport sqrtl
from libc.stdint cimport int64_t


cdef inline int64_t _isqrt(int64_t x) nogil:
    cdef int64_t s = <int64_t> sqrtl(<long double> x)
    while s * s > x:
        s -= 1
    while (s + 1) * (s + 1) <= x:
        s += 1
    return s


cdef inline int64_t _floordiv(int64_t a, int64_t b) nogil:
    cdef int64_t q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline bint _better(int64_t m, int64_t n, bint have, int64_t bm, int64_t bn) nogil:
    cdef int64_t k1, k2
    if not have:
        return True
    k1 = (m if m >= 0 else -m) + (n if n >= 0 else -n)
    k2 = (bm if bm >= 0 else -bm) + (bn if bn >= 0 else -bn)
    if k1 != k2:
        return k1 < k2
    if m != bm:
        return m > bm
    return n > bn


def row_witness(int64_t a, int64_t b, int64_t c, int64_t t, int64_t m_bound, int64_t n_bound):
    cdef int64_t m, n, bm, rest, disc, s, num, two_c
    cdef int64_t best_m = 0, best_n = 0
    cdef bint have = False
    cdef int i
    with nogil:
        two_c = 2 * c
        for m in range(-m_bound, m_bound + 1):
            bm = b * m
            rest = a * m * m - t
            if c == 0:
                if bm == 0:
                    if rest == 0:
                        n = 0 if m != 0 else 1
                        if n <= n_bound and _better(m, n, have, best_m, best_n):
                            best_m, best_n, have = m, n, True
                    continue
                if rest % bm == 0:
                    n = -rest / bm
                    if (n if n >= 0 else -n) <= n_bound and not (m == 0 and n == 0):
                        if _better(m, n, have, best_m, best_n):
                            best_m, best_n, have = m, n, True
                continue
            disc = bm * bm - 4 * c * rest
            if disc < 0:
                continue
            s = _isqrt(disc)
            if s * s != disc:
                continue
            for i in range(2):
                num = -bm + s if i == 0 else -bm - s
                if num % two_c == 0:
                    n = _floordiv(num, two_c)
                    if (n if n >= 0 else -n) <= n_bound and not (m == 0 and n == 0):
                        if _better(m, n, have, best_m, best_n):
                            best_m, best_n, have = m, n, True
    if have:
        return (best_m, best_n)
    return None


def sieve_obstruction(int64_t a, int64_t b, int64_t c, int64_t t, moduli):
    cdef int64_t M, aa, bb, cc, tt, m, n, am, bmm
    cdef bint hit
    for M_obj in moduli:
        M = M_obj
        aa = ((a % M) + M) % M
        bb = ((b % M) + M) % M
        cc = ((c % M) + M) % M
        tt = ((t % M) + M) % M
        hit = False
        with nogil:
            for m in range(M):
                am = (aa * ((m * m) % M)) % M
                bmm = (bb * m) % M
                for n in range(M):
                    if (am + bmm * n + cc * ((n * n) % M)) % M == tt:
                        hit = True
                        break
                if hit:
                    break
        if not hit:
            return M
    return 0
