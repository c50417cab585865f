"""Kernel dispatch: compiled int64 kernels when built and safe, Python otherwise.

Set ``K3CERT_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("K3CERT_PURE_PYTHON"):
        raise ImportError("pure Python forced")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_LIMIT = 1 << 62
_MAX_MODULUS = 1 << 20


def _row_fits(a, b, c, t, m_bound, n_bound):
    mb = m_bound
    worst = (abs(b) * mb) ** 2 + 4 * abs(c) * (abs(a) * mb * mb + abs(t)) + 1
    return worst < _LIMIT and n_bound < _LIMIT and abs(t) < _LIMIT


def row_witness(a, b, c, t, m_bound, n_bound):
    if _compiled is not None and _row_fits(a, b, c, t, m_bound, n_bound):
        return _compiled.row_witness(a, b, c, t, m_bound, n_bound)
    return _kernels_py.row_witness(a, b, c, t, m_bound, n_bound)


def sieve_obstruction(a, b, c, t, moduli):
    moduli = list(moduli)
    if any(M < 1 for M in moduli):
        raise ValueError("moduli must be positive")
    if _compiled is None:
        return _kernels_py.sieve_obstruction(a, b, c, t, moduli)
    for M in moduli:
        if M >= _MAX_MODULUS:
            hit = _kernels_py.sieve_obstruction(a, b, c, t, [M])
        else:
            # pre-reduced so the int64 code only sees residues
            hit = _compiled.sieve_obstruction(a % M, b % M, c % M, t % M, [M])
        if hit:
            return hit
    return 0
