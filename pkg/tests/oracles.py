"""Brute-force reference implementations, written independently of the package."""

import numpy as np


def grid(B, Bn=None):
    r = np.arange(-B, B + 1, dtype=np.int64)
    rn = r if Bn is None else np.arange(-Bn, Bn + 1, dtype=np.int64)
    return np.meshgrid(r, rn, indexing="ij")


def represented(a, b, c, t, B):
    """All (m, n) != (0, 0) in the box with a m^2 + b mn + c n^2 == t."""
    M, N = grid(B)
    hit = (a * M * M + b * M * N + c * N * N == t) & ((M != 0) | (N != 0))
    return list(zip(M[hit].tolist(), N[hit].tolist()))


def best_witness(points):
    if not points:
        return None
    return min(points, key=lambda w: (abs(w[0]) + abs(w[1]), -w[0], -w[1]))


def dm_feasible_mask(g, r, d, M, N, variant):
    c1 = (r - 1) * M * M + M * N * d + N * N * (g - 1) > 0
    c2 = (r - 1) * M * M + (M * N - M) * d + (1 - N) ** 2 * (g - 1) > 0
    dh = (2 * r - 2) * M + N * d
    c3 = (2 < dh) & (dh < d - 2)
    if variant == "Gonality":
        c4 = M * d + (2 * N - 1) * (g - 1) <= 0
    else:
        c4 = 3 * M * d + (6 * N - 4) * (g - 1) <= 0
    return c1 & c2 & c3 & c4


def dm_min(g, r, d, variant="Gonality", B=100, Bn=None):
    """(min f, sorted minimizers) over feasible points of the box, or (None, [])."""
    M, N = grid(B, Bn)
    mask = dm_feasible_mask(g, r, d, M, N, variant)
    if not mask.any():
        return None, []
    f = -(2 * r - 2) * M * M + d * (1 - 2 * N) * M + (N - N * N) * (2 * g - 2)
    best = int(f[mask].min())
    sel = mask & (f == best)
    mins = sorted(zip(M[sel].tolist(), N[sel].tolist()), key=lambda w: (w[1], w[0]))
    return best, mins


def lattice_solutions(h_sq, c_sq, hc, deg, s_int, B):
    M, N = grid(B)
    sel = (M * hc + N * c_sq == deg) & (h_sq * M * M + 2 * hc * M * N + c_sq * N * N == s_int)
    return sorted(zip(M[sel].tolist(), N[sel].tolist()))
