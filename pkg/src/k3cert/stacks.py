"""Dimension counts for stacks of filtered Lazarsfeld-Mukai bundles.

Every count is an exact integer or Fraction. The ``*_chain`` functions return
each displayed step of a dimension computation evaluated separately, so a
caller can check that consecutive steps agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Callable, Optional, Union

from .bn import burraco_cap, max_gonality, rho
from .lattice import C, ClassLike, PicardLattice, as_class, intersect, self_int
from .mukai import MukaiVector, ideal_twist_vector, pairing

ALL_DISTINCT = "all-distinct"
ALL_ISO = "N~N1~N2"
N_N1 = "N~N1!~N2"
N_N2 = "N~N2!~N1"
N1_N2 = "N1~N2!~N"
ISO_PATTERNS = (ALL_DISTINCT, ALL_ISO, N_N1, N_N2, N1_N2)

Exact = Union[int, Fraction]


@dataclass(frozen=True)
class FiltrationShape:
    """Which pieces of a length-3 filtration are isomorphic, plus ideal lengths."""

    iso_pattern: str
    l1: int
    l2: int

    def __post_init__(self):
        if self.iso_pattern not in ISO_PATTERNS:
            raise ValueError(f"unknown iso pattern {self.iso_pattern!r}")
        if self.l1 < 0 or self.l2 < 0:
            raise ValueError("lengths must be nonnegative")

    @classmethod
    def from_classes(cls, N: ClassLike, N1: ClassLike, N2: ClassLike, l1: int, l2: int):
        # on a K3, line bundles are isomorphic iff their classes agree
        N, N1, N2 = as_class(N), as_class(N1), as_class(N2)
        if N == N1 == N2:
            pat = ALL_ISO
        elif N == N1:
            pat = N_N1
        elif N == N2:
            pat = N_N2
        elif N1 == N2:
            pat = N1_N2
        else:
            pat = ALL_DISTINCT
        return cls(pat, l1, l2)


def _exact_json(x: Exact):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


@dataclass(frozen=True)
class DimReport:
    name: str
    value: Exact
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": _exact_json(self.value),
            "inputs": {k: _exact_json(v) for k, v in self.inputs.items()},
        }


# ------------------------------------------------------ rank-2 sub, rank-1 quotient


def dim_P_rank2sub(lat: PicardLattice, l: int, v: MukaiVector, vN: MukaiVector) -> int:
    if v.rank != 2 or vN.rank != 1:
        raise ValueError("need rank(v) = 2 and rank(vN) = 1")
    if l < 0:
        raise ValueError("l must be nonnegative")
    return 2 * l + pairing(lat, v, v) + pairing(lat, vN, v)


def dim_G_rank2sub(g: int, d: int, chi_pair: int) -> int:
    return g + rho(g, 2, d) + chi_pair


def occhio_cap(g: int, d: int, x: int) -> Fraction:
    """Upper bound on chi(M, N (x) I) when c1(N).c1(M) = x."""
    return Fraction(4 * g + 8, 3) - d - Fraction(3 * x, 2)


def cambridge_bound(g: int, d: int) -> Fraction:
    """Bound on dim W for a rank-2 destabilizing subbundle, using x >= (g+2)/2."""
    return g + rho(g, 2, d) + Fraction(7 * g, 12) + Fraction(13, 6) - d


# ------------------------------------------------------ rank-1 sub, rank-2 quotient


def dim_G_rank2quot(g: int, d: int, chi_quot_sub: int) -> int:
    return g + rho(g, 2, d) + chi_quot_sub


def fiducia_dim_bound(g: int, d: int, integral: bool = False) -> Exact:
    """Bound on dim W: dim G_N at the chi cap, plus one for the fibres.

    With ``integral`` the cap is floored first (chi is an integer).
    """
    cap = burraco_cap(g, d)
    if integral:
        return g + rho(g, 2, d) + floor(cap) + 1
    return g + rho(g, 2, d) + cap + 1


# ---------------------------------------------------------------------- pencils


def dim_G_pencil(g: int, d: int, x: int) -> int:
    return g + d - 1 - x


def pencil_chain(lat: PicardLattice, N: ClassLike, l: int) -> list[int]:
    """Steps of dim G_{N,l} for E -> N (x) I_xi with kernel M, c1(M) = C - N.

    The degree is forced: d = c1(M).c1(N) + l.
    """
    g = lat.genus
    N = as_class(N)
    M = C - N
    x = intersect(lat, M, N)
    d = x + l
    vM = MukaiVector(1, M, 1 + self_int(lat, M) // 2)
    vN = ideal_twist_vector(lat, N, l)
    # rank-1 stacks have dimension <v,v> + 1
    dim_P = (pairing(lat, vM, vM) + 1) + (pairing(lat, vN, vN) + 1) + pairing(lat, vM, vN)
    m_sq, n_sq = self_int(lat, M), self_int(lat, N)
    return [
        dim_P + 2 * (g - d + 1),
        (2 * l - 2) + pairing(lat, vM, vN) + 2 * (g - d + 1),
        2 * l - 2 + x - m_sq // 2 - n_sq // 2 - 2 + l + 2 * (g - d + 1),
        3 * l + 2 * g - 2 * d - 2 - (g - 1) + 2 * x,
        dim_G_pencil(g, d, x),
    ]


# ------------------------------------------------------- length-3 filtrations


def alpha_values(shape: FiltrationShape) -> frozenset:
    """Possible automorphism corrections alpha for a filtration shape."""
    p, l1, l2 = shape.iso_pattern, shape.l1, shape.l2
    if p == ALL_ISO:
        if l2 != 0 and l1 == 0:
            return frozenset({1, 2, 3})
        if l1 != 0 and l2 == 0:
            return frozenset({2, 3})
        return frozenset({3})
    if p == N_N1:
        return frozenset({2, 3}) if l1 == 0 else frozenset({3})
    if p == N_N2:
        return frozenset({2, 3}) if l2 == 0 else frozenset({3})
    if p == N1_N2:
        return frozenset({2, 3}) if (l2 != 0 and l1 == 0) else frozenset({3})
    return frozenset({3})


def dim_W_filtration(g: int, d: int, alpha: int) -> Fraction:
    if alpha not in (1, 2, 3):
        raise ValueError("alpha must be 1, 2 or 3")
    return Fraction(g, 4) + d + Fraction(3, 2) - alpha


def _three_pieces(lat: PicardLattice, N: ClassLike, N2: ClassLike, l2: int, d: int):
    N, N2 = as_class(N), as_class(N2)
    N1 = C - N - N2
    cross = intersect(lat, N, N1) + intersect(lat, N, N2) + intersect(lat, N1, N2)
    l1 = d - l2 - cross
    if l1 < 0 or l2 < 0:
        raise ValueError(f"ideal lengths must be nonnegative (l1={l1}, l2={l2})")
    return N, N1, N2, l1, cross


def leo_dimension(
    lat: PicardLattice, N: ClassLike, N2: ClassLike, l2: int, d: int
) -> tuple[int, bool]:
    """dim Q of the rank-2 quotient stack, and whether it is only an upper bound."""
    _, N1, N2, l1, _ = _three_pieces(lat, N, N2, l2, d)
    v1 = ideal_twist_vector(lat, N1, l1)
    v2 = ideal_twist_vector(lat, N2, l2)
    base = 2 * l1 + 2 * l2 + pairing(lat, v1, v2)
    if N1 == N2 and l2 != 0 and l1 == 0:
        return base - 1, True
    return base - 2, False


def marta_chain(
    lat: PicardLattice, N: ClassLike, N2: ClassLike, l2: int, d: int, alpha: int
) -> list[int]:
    """Steps of dim G for a filtration N, N2 (x) I, N1 (x) I with c2(E) = d."""
    g = lat.genus
    N, N1, N2, l1, cross = _three_pieces(lat, N, N2, l2, d)
    v = ideal_twist_vector(lat, N, 0)
    v1 = ideal_twist_vector(lat, N1, l1)
    v2 = ideal_twist_vector(lat, N2, l2)
    dim_Z = 2 * l1 + 2 * l2 + pairing(lat, v2, v) + pairing(lat, v1, v) + pairing(lat, v1, v2) - alpha
    chi_E = g - d + 5
    nn1, nn2, n1n2 = intersect(lat, N, N1), intersect(lat, N, N2), intersect(lat, N1, N2)
    return [
        3 * (g - d + 2) + dim_Z,
        3 * (g - d) + 12 - alpha - 2 * chi_E + 2 * l1 + 2 * l2 + cross,
        g - d + 2 - alpha + 2 * (l1 + l2) + intersect(lat, N, N1 + N2) + n1n2,
        g + d + 2 - alpha - nn1 - nn2 - n1n2,
    ]


# --------------------------------------------------------------- exceptions


def default_alpha_min(g: int) -> int:
    # alpha = 1 needs equal slopes, impossible when 3 does not divide 2g - 2
    return 2 if gcd(2 * g - 2, 3) == 1 else 1


def exceptional_pairs(
    g_max: int, alpha_min: Optional[Callable[[int], int]] = None
) -> dict:
    """(g, d) pairs not excluded by d > 5g/8 + 13/4, and those surviving the
    borderline alpha test."""
    if g_max < 2:
        raise ValueError("g_max must be >= 2")
    alpha_min = alpha_min or default_alpha_min
    candidates, survivors = [], []
    for g in range(2, g_max + 1):
        k = max_gonality(g)
        h = Fraction(5 * g + 26, 8)
        for d in range(ceil(Fraction(3 * k, 2)), floor(h) + 1):
            if rho(g, 2, d) < 0:
                continue
            candidates.append((g, d))
            if d < floor(h) or not alpha_min(g) > 2 * h - 2 * floor(h) + 1:
                survivors.append((g, d))
    return {"candidates": candidates, "survivors": survivors}
