"""Mukai vectors on a K3 with rank-2 Picard lattice, and the Mukai pairing.

Vectors are stored as (rank, c1, s) with s = chi - rank, the coefficient of
the fundamental class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import ZERO, C, ClassLike, DivisorClass, PicardLattice, as_class, intersect, self_int


@dataclass(frozen=True)
class MukaiVector:
    rank: int
    c1: DivisorClass
    s: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "c1", as_class(self.c1))

    @property
    def chi(self) -> int:
        return self.s + self.rank

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.rank + other.rank, self.c1 + other.c1, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.rank - other.rank, self.c1 - other.c1, self.s - other.s)

    def to_json(self) -> dict:
        return {"rank": self.rank, "c1": self.c1.to_list(), "s": self.s}

    @classmethod
    def from_json(cls, data: dict) -> "MukaiVector":
        return cls(int(data["rank"]), as_class(data["c1"]), int(data["s"]))


def chi(v: MukaiVector) -> int:
    return v.chi


def pairing(lat: PicardLattice, v: MukaiVector, w: MukaiVector) -> int:
    """<v, w> = c1(v).c1(w) - rank(v) s(w) - rank(w) s(v)."""
    return intersect(lat, v.c1, w.c1) - v.rank * w.s - w.rank * v.s


def euler_pair(lat: PicardLattice, v: MukaiVector, w: MukaiVector) -> int:
    """chi(E, F) = -<v(E), v(F)>."""
    return -pairing(lat, v, w)


def lm_vector(lat: PicardLattice, g: int, r: int, d: int) -> MukaiVector:
    """Mukai vector (r+1, C, g-d+r) of the Lazarsfeld-Mukai bundle of a g^r_d."""
    if lat.c_sq != 2 * g - 2:
        raise ValueError(f"lattice has C^2={lat.c_sq}, genus {g} needs {2 * g - 2}")
    if r < 1 or d < 1:
        raise ValueError("need r >= 1 and d >= 1")
    return MukaiVector(r + 1, C, g - d + r)


def ideal_twist_vector(lat: PicardLattice, N: ClassLike, l: int) -> MukaiVector:
    """v(N (x) I_xi) for a length-l zero-dimensional xi."""
    if l < 0:
        raise ValueError("length l must be nonnegative")
    N = as_class(N)
    return MukaiVector(1, N, 1 + self_int(lat, N) // 2 - l)


def rank2_piece_vector(lat: PicardLattice, c1: ClassLike, chi: int) -> MukaiVector:
    return MukaiVector(2, as_class(c1), chi - 2)


O_S = MukaiVector(1, ZERO, 1)
