"""Rank-2 Picard lattices with basis (H, C) and their divisor classes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from os import PathLike
from typing import Union


@dataclass(frozen=True)
class DivisorClass:
    """The class m*H + n*C."""

    m: int
    n: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        other = as_class(other)
        return DivisorClass(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        other = as_class(other)
        return DivisorClass(self.m - other.m, self.n - other.n)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.m, -self.n)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.m, k * self.n)

    __rmul__ = __mul__

    def to_list(self) -> list[int]:
        return [self.m, self.n]


ClassLike = Union[DivisorClass, tuple, list]

ZERO = DivisorClass(0, 0)
H = DivisorClass(1, 0)
C = DivisorClass(0, 1)


def as_class(x: ClassLike) -> DivisorClass:
    if isinstance(x, DivisorClass):
        return x
    m, n = x
    return DivisorClass(int(m), int(n))


@dataclass(frozen=True)
class PicardLattice:
    """Gram data H^2, C^2, C.H of a K3 Picard lattice.

    ``ambient_only`` lattices model Pic(S) = Z*C: only multiples of C are
    legal classes there.
    """

    h_sq: int
    c_sq: int
    hc: int
    ambient_only: bool = False

    def __post_init__(self):
        for name in ("h_sq", "c_sq", "hc"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if self.h_sq % 2 or self.c_sq % 2:
            raise ValueError("K3 intersection form is even: h_sq and c_sq must be even")
        if self.c_sq < 2:
            raise ValueError("c_sq must be >= 2 (curve genus >= 2)")

    @classmethod
    def ambient(cls, c_sq: int) -> "PicardLattice":
        return cls(c_sq, c_sq, c_sq, ambient_only=True)

    @property
    def genus(self) -> int:
        return self.c_sq // 2 + 1

    def to_dict(self) -> dict:
        return {"h_sq": self.h_sq, "c_sq": self.c_sq, "hc": self.hc}

    def _check(self, D: DivisorClass) -> DivisorClass:
        D = as_class(D)
        if self.ambient_only and D.m != 0:
            raise ValueError(f"class {D.to_list()} is not a multiple of C on an ambient-only lattice")
        return D


ambient_only = PicardLattice.ambient


def intersect(lat: PicardLattice, D: ClassLike, D2: ClassLike) -> int:
    D, D2 = lat._check(D), lat._check(D2)
    return D.m * D2.m * lat.h_sq + (D.m * D2.n + D2.m * D.n) * lat.hc + D.n * D2.n * lat.c_sq


def self_int(lat: PicardLattice, D: ClassLike) -> int:
    return intersect(lat, D, D)


def degree_on_C(lat: PicardLattice, D: ClassLike) -> int:
    return intersect(lat, D, C)


def rr_count(lat: PicardLattice, D: ClassLike) -> int:
    """chi(O_S(D)) = 2 + D^2/2 by Riemann-Roch on a K3."""
    return 2 + self_int(lat, D) // 2


def slope(lat: PicardLattice, c1: ClassLike, rank: int) -> Fraction:
    """L-slope c1.C / rank, exact."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    return Fraction(degree_on_C(lat, c1), rank)


_LATTICE_KEYS = {"h_sq", "c_sq", "hc"}


def lattice_from_dict(data: dict) -> PicardLattice:
    if not isinstance(data, dict):
        raise ValueError("lattice description must be a JSON object")
    keys = set(data)
    if keys != _LATTICE_KEYS:
        extra, missing = keys - _LATTICE_KEYS, _LATTICE_KEYS - keys
        raise ValueError(f"bad lattice keys: unknown={sorted(extra)} missing={sorted(missing)}")
    return PicardLattice(data["h_sq"], data["c_sq"], data["hc"])


def load_lattice(source: Union[str, PathLike, dict]) -> PicardLattice:
    """Parse a lattice from a dict, a JSON string, or a path to a JSON file."""
    if isinstance(source, dict):
        return lattice_from_dict(source)
    text = str(source)
    if not text.lstrip().startswith("{"):
        with open(source) as fh:
            text = fh.read()
    return lattice_from_dict(json.loads(text))
