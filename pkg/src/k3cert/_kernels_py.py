"""Pure-Python versions of the enumeration kernels.

Same algorithms and results as the compiled ``_kernels`` module.
"""

from math import isqrt


def _better(m, n, best):
    if best is None:
        return True
    key = (abs(m) + abs(n), -m, -n)
    bm, bn = best
    return key < (abs(bm) + abs(bn), -bm, -bn)


def row_witness(a, b, c, t, m_bound, n_bound):
    """Best (m, n) with a m^2 + b m n + c n^2 == t, |m| <= m_bound, |n| <= n_bound.

    Best means smallest |m|+|n|, ties broken towards the larger (m, n).
    The pair (0, 0) is never returned. Returns None if nothing is found.
    """
    best = None
    for m in range(-m_bound, m_bound + 1):
        bm = b * m
        rest = a * m * m - t  # c n^2 + bm n + rest == 0
        if c == 0:
            if bm == 0:
                if rest == 0:
                    n = 0 if m != 0 else 1
                    if n <= n_bound and _better(m, n, best):
                        best = (m, n)
                continue
            if rest % bm == 0:
                n = -rest // bm
                if abs(n) <= n_bound and (m, n) != (0, 0) and _better(m, n, best):
                    best = (m, n)
            continue
        disc = bm * bm - 4 * c * rest
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for num in (-bm + s, -bm - s):
            if num % (2 * c) == 0:
                n = num // (2 * c)
                if abs(n) <= n_bound and (m, n) != (0, 0) and _better(m, n, best):
                    best = (m, n)
    return best


def sieve_obstruction(a, b, c, t, moduli):
    """First modulus M for which a m^2 + b m n + c n^2 never hits t mod M, else 0."""
    for M in moduli:
        aa, bb, cc, tt = a % M, b % M, c % M, t % M
        squares = [(x * x) % M for x in range(M)]
        hit = False
        for m in range(M):
            am = aa * squares[m]
            bmm = bb * m
            for n in range(M):
                if (am + bmm * n + cc * squares[n]) % M == tt:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            return M
    return 0
