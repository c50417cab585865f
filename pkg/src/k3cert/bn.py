"""Brill-Noether and Clifford invariants, and the scalar thresholds used in the
stability arguments, evaluated as exact integer comparisons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

STRICT_ABOVE = "strict-above"
AT_LEAST = "at-least"
STRICT_BELOW = "strict-below"
AT_MOST = "at-most"


@dataclass(frozen=True)
class BNTriple:
    g: int
    r: int
    d: int

    def __post_init__(self):
        if self.g < 2 or self.r < 1 or self.d < 1:
            raise ValueError(f"need g >= 2, r >= 1, d >= 1; got {self}")


@dataclass(frozen=True)
class Threshold:
    """``subject <direction> value``; ``subject`` names the compared quantity."""

    name: str
    value: Fraction
    direction: str
    subject: str = "d"

    def holds(self, x: int) -> bool:
        # cleared denominators: x <op> p/q  <=>  q*x <op> p   (q > 0)
        p, q = self.value.numerator, self.value.denominator
        lhs = q * x
        if self.direction == STRICT_ABOVE:
            return lhs > p
        if self.direction == AT_LEAST:
            return lhs >= p
        if self.direction == STRICT_BELOW:
            return lhs < p
        if self.direction == AT_MOST:
            return lhs <= p
        raise ValueError(f"unknown direction {self.direction!r}")

    def least_integer(self) -> int:
        """Smallest integer satisfying a lower-bound threshold."""
        if self.direction == AT_LEAST:
            return ceil(self.value)
        if self.direction == STRICT_ABOVE:
            return floor(self.value) + 1
        raise ValueError("least_integer needs a lower-bound threshold")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": str(self.value),
            "direction": self.direction,
            "subject": self.subject,
        }


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def clifford_of_series(d: int, r: int) -> int:
    if r < 1:
        raise ValueError("r must be >= 1")
    return d - 2 * r


def max_gonality(g: int) -> int:
    if g < 2:
        raise ValueError("g must be >= 2")
    return (g + 3) // 2


def nene_bound(g: int, k: int) -> Fraction:
    return Fraction(3 * k, 4) + Fraction(7, 6) + Fraction(g, 3)


def threshold_table(g: int, r: int, k: int) -> list[Threshold]:
    """The named inequalities as Threshold records (independent of d)."""
    return [
        Threshold("nene", nene_bound(g, k), AT_LEAST),
        Threshold("sese", Fraction(3 * k, 2), AT_LEAST),
        Threshold("cambridge", Fraction(7 * g + 26, 12), STRICT_ABOVE),
        Threshold("fiducia", Fraction(3 * g, 4) + 2, STRICT_ABOVE),
        Threshold("vai", Fraction(5 * g + 13, 6), STRICT_BELOW),
        Threshold("nutella_h", Fraction(5 * g, 8) + Fraction(13, 4), STRICT_ABOVE),
        Threshold("rank2_stable", Fraction(g + 2, 2), STRICT_ABOVE),
        Threshold("pencil_split", Fraction(g - 1, 2), STRICT_ABOVE, subject="k"),
    ]


def burraco_cap(g: int, d: int) -> Fraction:
    """Upper bound 3g/2 - 2d + 3 for chi(E/N, N)."""
    return Fraction(3 * g, 2) - 2 * d + 3


def thresholds(g: int, r: int, d: int, k: int) -> list[tuple[Threshold, bool]]:
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    for t in threshold_table(g, r, k):
        x = k if t.subject == "k" else d
        out.append((t, t.holds(x)))
    # cap on chi(E/N,N); satisfied when the resulting dim W bound drops below g + rho
    cap = Threshold("burraco", burraco_cap(g, d), AT_MOST, subject="chi(E/N,N)")
    out.append((cap, cap.value + 1 < 0))
    return out


def lasagna_ceiling_holds(g: int, k: int) -> bool:
    """ceil(3k/4 + 7/6 + g/3) <= ceil(3k/2)."""
    return ceil(nene_bound(g, k)) <= ceil(Fraction(3 * k, 2))


# a base point free net has degree at least 4
MIN_NET_DEGREE = 4


def lasagna_gap(g: int, k: int) -> list[int]:
    """Degrees d >= 4 with 3k/2 <= d < 3k/4 + 7/6 + g/3.

    Without the floor of 4 this range is nonempty exactly when the ceiling
    inequality fails; the floor drops g=2, whose only gap degree is 3.
    """
    lo = max(ceil(Fraction(3 * k, 2)), MIN_NET_DEGREE)
    hi = ceil(nene_bound(g, k))
    return list(range(lo, hi))


def lasagna_exception_scan(g_max: int) -> list[int]:
    return [g for g in range(2, g_max + 1) if lasagna_gap(g, max_gonality(g))]
