"""Certified lower bounds for f(m, n) = D.(C - D), D = mH + nC, on the lattice
(2r-2, 2g-2, d), and the genus-11 Diophantine case analysis.

The minimization runs over integers n in a finite window. For each n the
feasible m form an interval computed exactly, and f is strictly concave in m,
so only interval endpoints are evaluated. Outside the window a tail
certificate bounds f from below along the boundary curves of the feasible
region; square roots there are compared by squaring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd, isqrt
from typing import Optional

from .bn import clifford_of_series, max_gonality, rho
from .lattice import (
    C as C_CLASS,
    H as H_CLASS,
    PicardLattice,
    intersect,
    self_int,
    slope,
)
from .mukai import MukaiVector, lm_vector, pairing, rank2_piece_vector
from .qforms import from_bn, minus_two_free, parity_excludes_minus_one, represents

GONALITY = "Gonality"
CLIFFORD_NET = "CliffordNet"

PROVED = "Proved"
REFUTED = "Refuted"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DMProblem:
    g: int
    r: int
    d: int
    variant: str = GONALITY

    def __post_init__(self):
        if self.variant not in (GONALITY, CLIFFORD_NET):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.g < 2 or self.r < 2 or self.d < 1:
            raise ValueError("need g >= 2, r >= 2, d >= 1")

    @property
    def threshold(self) -> int:
        return self.d - 2 * self.r + 2

    @property
    def delta(self) -> int:
        """Discriminant d^2 - 4(r-1)(g-1) of Q in m per unit n."""
        return self.d * self.d - 4 * (self.r - 1) * (self.g - 1)

    def hypotheses(self, search_bound: int = 1000) -> dict:
        g, r, d = self.g, self.r, self.d
        if r >= 4:
            sq = d * d > 4 * (r - 1) * (g + r - 2)
        elif r == 3:
            sq = d * d > 8 * g + 1
        else:
            sq = False
        if parity_excludes_minus_one(g, r, d):
            free = True
        else:
            free = represents(from_bn(g, r, d), -1, search_bound).status == "No"
        return {
            "rho<0": rho(g, r, d) < 0,
            "d<=g-1": d <= g - 1,
            "d-2r+2>=floor((g+3)/2)": self.threshold >= max_gonality(g),
            "r>=3": r >= 3,
            "degree-square": sq,
            "-1 not represented": free,
        }


def f_value(g: int, r: int, d: int, m, n):
    """D.C - D^2 for D = mH + nC; works for ints and Fractions."""
    return -(2 * r - 2) * m * m + d * (1 - 2 * n) * m + (n - n * n) * (2 * g - 2)


def _cap_numerator(p: DMProblem, n: int) -> tuple[int, int]:
    """(A, B): the last constraint reads B*m <= A."""
    if p.variant == GONALITY:
        return (1 - 2 * n) * (p.g - 1), p.d
    return (4 - 6 * n) * (p.g - 1), 3 * p.d


def feasible(p: DMProblem, m: int, n: int) -> tuple[bool, dict]:
    g, r, d = p.g, p.r, p.d
    dh = (2 * r - 2) * m + n * d
    if p.variant == GONALITY:
        last = ("(4)", m * d + (2 * n - 1) * (g - 1) <= 0)
    else:
        last = ("(iv')", 3 * m * d + (6 * n - 4) * (g - 1) <= 0)
    parts = {
        "(1)": (r - 1) * m * m + m * n * d + n * n * (g - 1) > 0,
        "(2)": (r - 1) * m * m + (m * n - m) * d + (1 - n) ** 2 * (g - 1) > 0,
        "(3)": 2 < dh < d - 2,
        last[0]: last[1],
    }
    return all(parts.values()), parts


def _nonpos_range(A: int, B: int, C: int):
    """Integers m with A m^2 + B m + C <= 0 (A > 0), as (lo, hi) or None."""
    disc = B * B - 4 * A * C
    if disc < 0:
        return None
    s = isqrt(disc)

    def le_upper(m):  # m <= larger root
        t = 2 * A * m + B
        return t <= 0 or t * t <= disc

    def ge_lower(m):  # m >= smaller root
        t = 2 * A * m + B
        return t >= 0 or t * t <= disc

    hi = (-B + s) // (2 * A)
    if le_upper(hi + 1):
        hi += 1
    lo = -((B + s) // (2 * A))
    if ge_lower(lo - 1):
        lo -= 1
    return (lo, hi) if lo <= hi else None


def _subtract(intervals, cut):
    if cut is None:
        return intervals
    a, b = cut
    out = []
    for lo, hi in intervals:
        if b < lo or a > hi:
            out.append((lo, hi))
            continue
        if lo < a:
            out.append((lo, a - 1))
        if b < hi:
            out.append((b + 1, hi))
    return out


def feasible_m_intervals(p: DMProblem, n: int) -> list[tuple[int, int]]:
    """Disjoint closed integer intervals whose union is {m : feasible(p, m, n)}."""
    g, r, d = p.g, p.r, p.d
    k = 2 * r - 2
    lo = (2 - n * d) // k + 1  # (2r-2)m > 2 - nd
    hi = -((n * d - d + 2) // k) - 1  # (2r-2)m < d - 2 - nd
    A, B = _cap_numerator(p, n)
    hi = min(hi, A // B)
    if lo > hi:
        return []
    out = [(lo, hi)]
    out = _subtract(out, _nonpos_range(r - 1, n * d, n * n * (g - 1)))
    out = _subtract(out, _nonpos_range(r - 1, (n - 1) * d, (n - 1) ** 2 * (g - 1)))
    return out


# ------------------------------------------------------------------ tail


def boundary_quadratic(p: DMProblem) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of n -> f(U(n), n) where U(n) is the cap on m."""
    c0 = Fraction(1) if p.variant == GONALITY else Fraction(4, 3)
    u = Fraction(p.g - 1, p.d)
    # U(n) = u*c0 - 2u*n, substituted into f
    a1, a0 = -2 * u, u * c0
    k, d, G = 2 * p.r - 2, p.d, 2 * p.g - 2
    A2 = -k * a1 * a1 - 2 * d * a1 - G
    A1 = -2 * k * a1 * a0 + d * a1 - 2 * d * a0 + G
    A0 = -k * a0 * a0 + d * a0
    return A2, A1, A0


def cap_boundary_h(p: DMProblem, n) -> Fraction:
    """Closed form of the boundary function for the Gonality cap."""
    g, r, d = p.g, p.r, p.d
    return Fraction(g - 1, 2) * (Fraction((2 * n - 1) ** 2 * p.delta, d * d) + 1)


def _line_growth_ok(p: DMProblem, n_abs: int, target: int, sign: int) -> bool:
    """n_abs * (sign*Delta + d*sqrt(Delta)) / (2r-2) > target, exactly."""
    D = p.delta
    R = target * (2 * p.r - 2) - sign * n_abs * D
    lhs2 = p.d * p.d * n_abs * n_abs * D
    return R < 0 or lhs2 > R * R


def tail_certificate(p: DMProblem, W: int, target: int) -> tuple[bool, list[str]]:
    """Check f > target at every feasible point with |n| > W."""
    notes = []
    if p.delta <= 0:
        return False, [f"Delta' = {p.delta} <= 0: boundary roots not real"]
    # n < -W: feasible m lie in [-alpha n, U(n)]; on m = -alpha n, Q = 0 so f = D.C
    ok_neg = _line_growth_ok(p, W + 1, target, +1)
    notes.append(f"f(-alpha n, n) > {target} for n <= {-W - 1}: {ok_neg}")
    # n > W: feasible m lie in [-beta n, U(n)]
    ok_pos = _line_growth_ok(p, W + 1, target, -1)
    notes.append(f"f(-beta n, n) > {target} for n >= {W + 1}: {ok_pos}")
    A2, A1, A0 = boundary_quadratic(p)
    ok_cap = A2 > 0
    if ok_cap:
        vertex = -A1 / (2 * A2)
        ok_cap = -W - 1 <= vertex <= W + 1
        for n in (W + 1, -W - 1):
            ok_cap = ok_cap and A2 * n * n + A1 * n + A0 > target
    notes.append(f"cap curve {A2}n^2 + {A1}n + {A0} > {target} for |n| > {W}: {ok_cap}")
    return ok_neg and ok_pos and ok_cap, notes


# -------------------------------------------------------------- certificate


@dataclass(frozen=True)
class MinCertificate:
    status: str
    min_found: Optional[int]
    minimizers: list
    window: tuple[int, int]
    tail_ok: bool
    trace: str
    hypotheses: dict
    threshold: int
    problem: DMProblem = field(default=None)

    def __post_init__(self):
        if self.status not in (PROVED, REFUTED, UNKNOWN):
            raise ValueError(f"bad status {self.status!r}")
        p = self.problem
        for m, n in self.minimizers:
            if not feasible(p, m, n)[0] or f_value(p.g, p.r, p.d, m, n) != self.min_found:
                raise ValueError(f"minimizer {(m, n)} fails re-verification")
        if self.status == PROVED and not (self.tail_ok and (self.min_found is None or self.min_found >= self.threshold)):
            raise ValueError("Proved needs a passing tail and min_found >= threshold")

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "threshold": self.threshold,
            "min_found": self.min_found,
            "minimizers": [list(w) for w in self.minimizers],
            "window": list(self.window),
            "tail_ok": self.tail_ok,
            "hypotheses": dict(self.hypotheses),
            "trace": self.trace,
            "problem": {"g": self.problem.g, "r": self.problem.r, "d": self.problem.d, "variant": self.problem.variant},
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinCertificate":
        pr = data["problem"]
        return cls(
            data["status"],
            data["min_found"],
            [tuple(w) for w in data["minimizers"]],
            tuple(data["window"]),
            data["tail_ok"],
            data["trace"],
            dict(data["hypotheses"]),
            data["threshold"],
            DMProblem(pr["g"], pr["r"], pr["d"], pr["variant"]),
        )


def default_window(p: DMProblem) -> int:
    return 4 * (p.g + p.d + p.r)


def certify_min(
    p: DMProblem, n_window: Optional[int] = None, search_bound: int = 1000
) -> MinCertificate:
    W = default_window(p) if n_window is None else n_window
    if W < 2:
        raise ValueError("n_window must be >= 2")
    g, r, d = p.g, p.r, p.d
    T = p.threshold
    best, mins = None, []
    for n in range(-W, W + 1):
        for lo, hi in feasible_m_intervals(p, n):
            for m in {lo, hi}:
                v = f_value(g, r, d, m, n)
                if best is None or v < best:
                    best, mins = v, [(m, n)]
                elif v == best:
                    mins.append((m, n))
    mins.sort(key=lambda w: (w[1], w[0]))

    lines = [f"window n in [{-W}, {W}]"]
    if best is None:
        lines.append("no feasible point in window")
        target = T - 1  # f is an integer, so f > T - 1 means f >= T
    else:
        lines.append(f"min f = {best} at {mins}")
        target = best
    tail_ok, notes = tail_certificate(p, W, target)
    lines += notes

    hyps = p.hypotheses(search_bound)
    if p.variant == CLIFFORD_NET:
        pc = pappa_checks(g, r, d)
        hyps["cap-curve coefficients"] = pc["a>0"] and pc["0<-b/2a<1"] and pc["c>0"]
        lines.append(
            "cap-curve coefficients: "
            + ", ".join(f"{k}={pc[k]}" for k in ("a", "b", "c", "a>0", "0<-b/2a<1", "c>0"))
        )
        if r == 3:
            lines.append(f"r=3 branch: (g,d)=(12,11) or d>=12: {(g, d) == (12, 11) or d >= 12}")

    failed = [k for k, ok in hyps.items() if not ok]
    if best is not None and best < T:
        status = REFUTED
        lines.append(f"feasible point below threshold {T}")
    elif not tail_ok:
        status = UNKNOWN
        lines.append("tail certificate failed")
    elif failed:
        status = UNKNOWN
        lines.append("hypotheses failed: " + ", ".join(failed))
    else:
        status = PROVED
        lines.append(f"f >= {T} on the whole feasible set")
    return MinCertificate(status, best, mins, (-W, W), tail_ok, "; ".join(lines), hyps, T, p)


# ------------------------------------------------------ cap-curve coefficients


def pappa_coefficients(g: int, r: int, d: int) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, c) of g(n) = f(U(n), n) - d + 2r - 2 for the 4/3 cap."""
    u = Fraction(g - 1, d)
    k = 2 * r - 2
    a = -4 * k * u * u + 2 * d * u
    b = Fraction(16, 3) * k * u * u - Fraction(8, 3) * d * u
    c = -Fraction(16, 9) * k * u * u + Fraction(4, 3) * d * u - d + k
    return a, b, c


def pappa_condition(g: int, r: int, d: int) -> bool:
    return pappa_coefficients(g, r, d)[2] > 0


def pappa_ratio_condition(g: int, r: int, d: int) -> bool:
    """3/4 < (g-1)/d < (3/8)(d - 2(r-1))/(r-1)."""
    u = Fraction(g - 1, d)
    return Fraction(3, 4) < u < Fraction(3, 8) * Fraction(d - 2 * (r - 1), r - 1)


def pappa_checks(g: int, r: int, d: int) -> dict:
    a, b, c = pappa_coefficients(g, r, d)
    vertex_ok = a > 0 and 0 < -b / (2 * a) < 1
    return {
        "a": str(a),
        "b": str(b),
        "c": str(c),
        "a>0": a > 0,
        "0<-b/2a<1": vertex_ok,
        "c>0": c > 0,
        "ratio": pappa_ratio_condition(g, r, d),
    }


# ------------------------------------------------------------ lattice solving


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_deg_selfint_explained(
    lat: PicardLattice, deg: int, s_int: int
) -> tuple[list[tuple[int, int]], str]:
    """All (m, n) with C.D = deg and D^2 = s_int, plus a one-line reason."""
    p, q = lat.hc, lat.c_sq  # C.D = p m + q n
    gg, x, y = _xgcd(p, q)
    if deg % gg:
        return [], f"gcd({p},{q})={gg} does not divide {deg}"
    m0, n0 = x * (deg // gg), y * (deg // gg)
    dm, dn = q // gg, -p // gg  # kernel direction of the degree form
    base, step = (m0, n0), (dm, dn)
    A = self_int(lat, step)
    B = 2 * intersect(lat, base, step)
    C0 = self_int(lat, base) - s_int
    if A == 0 and B == 0:
        if C0 == 0:
            raise ValueError("infinite family: self-intersection constant along the line")
        return [], "self-intersection constant along the line"
    ks = []
    if A == 0:
        if C0 % B == 0:
            ks = [-C0 // B]
    else:
        disc = B * B - 4 * A * C0
        if disc >= 0:
            s = isqrt(disc)
            if s * s == disc:
                ks = sorted({k for num in (-B + s, -B - s) if num % (2 * A) == 0 for k in [num // (2 * A)]})
    sols = sorted((m0 + k * dm, n0 + k * dn) for k in ks)
    return sols, f"quadratic {A}k^2 + {B}k + {C0} along (m,n) = ({m0},{n0}) + k({dm},{dn})"


def solve_deg_selfint(lat: PicardLattice, deg: int, s_int: int) -> list[tuple[int, int]]:
    return solve_deg_selfint_explained(lat, deg, s_int)[0]


def lm_case_systems(g: int, d: int, k: int, lat: Optional[PicardLattice] = None) -> list[dict]:
    """Candidate (C.D, D^2, c2(E/N)) for a rank-2 stable quotient E/N with
    c1 = D: D^2 >= 2 even, c2 >= 3/2 + D^2/4, (C - D).D = d - c2 >= k."""
    if lat is not None and lat.c_sq != 2 * g - 2:
        raise ValueError(f"lattice C^2={lat.c_sq} does not match genus {g}")
    out = []
    s = 2
    while ceil(Fraction(3, 2) + Fraction(s, 4)) <= d - k:
        c2 = ceil(Fraction(3, 2) + Fraction(s, 4))
        while d - c2 >= k:
            out.append({"deg": s + d - c2, "s_int": s, "c2_quot": c2})
            c2 += 1
        s += 2
    return out


# --------------------------------------------------------------- genus 11


def _item(name, expected, observed):
    return {"name": name, "expected": expected, "observed": observed, "pass": expected == observed}


def _sols(lat, system):
    return [list(w) for w in solve_deg_selfint(lat, system["deg"], system["s_int"])]


def genus11_suite(lat: Optional[PicardLattice] = None) -> list[dict]:
    """Each step of the genus-11 analysis on the lattice H^2=6, C^2=20, C.H=13."""
    lat = lat or PicardLattice(6, 20, 13)
    g = lat.genus
    items = []

    cert = minus_two_free(lat)
    items.append(_item("no (-2)-classes", "No", cert.status))
    items.append(_item("rho(11,2,9)", -1, rho(g, 2, 9)))
    items.append(_item("rho(11,2,10)", 2, rho(g, 2, 10)))
    k = max_gonality(g)
    items.append(_item("maximal gonality", 7, k))
    items.append(_item("Clifford index", 5, clifford_of_series(k, 1)))

    v = lm_vector(lat, g, 2, 9)
    items.append(_item("v(E) for a g^2_9", [3, [0, 1], 4], [v.rank, v.c1.to_list(), v.s]))
    items.append(_item("gcd(rank, c1^2)", 1, gcd(v.rank, self_int(lat, v.c1))))

    sys9 = lm_case_systems(g, 9, k, lat)
    items.append(_item("g^2_9 systems", [{"deg": 9, "s_int": 2, "c2_quot": 2}], sys9))
    items.append(_item("g^2_9 solutions", [[]], [_sols(lat, s) for s in sys9]))

    sys10 = lm_case_systems(g, 10, k, lat)
    expected10 = [
        {"deg": 10, "s_int": 2, "c2_quot": 2},
        {"deg": 9, "s_int": 2, "c2_quot": 3},
        {"deg": 11, "s_int": 4, "c2_quot": 3},
        {"deg": 13, "s_int": 6, "c2_quot": 3},
    ]
    items.append(_item("g^2_10 systems (a)-(d)", expected10, sys10))
    items.append(
        _item(
            "g^2_10 solutions",
            [[], [], [], [[1, 0]]],
            [_sols(lat, s) for s in sys10],
        )
    )

    vq = rank2_piece_vector(lat, H_CLASS, 4)
    items.append(_item("v(E/N) = (2,H,2)", [2, [1, 0], 2], [vq.rank, vq.c1.to_list(), vq.s]))
    items.append(_item("<v(E/N), v(E/N)>", -2, pairing(lat, vq, vq)))
    items.append(_item("slope of E/N", "13/2", str(slope(lat, H_CLASS, 2))))
    sub = 2 * H_CLASS - C_CLASS
    items.append(_item("(2H-C).(C-H)", 7, intersect(lat, sub, C_CLASS - H_CLASS)))
    items.append(_item("dim G(3, H^0(E))", 9, 3 * ((g - 10 + 5) - 3)))
    return items
