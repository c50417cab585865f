"""Integer binary quadratic forms: does a*m^2 + b*m*n + c*n^2 take the value t?

Every answer carries a certificate. Yes answers carry a witness that is
re-evaluated on construction; No answers name the exact method that rules the
value out; Unknown answers record the search bound so they can be reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Optional, Sequence

from . import kernels
from .lattice import PicardLattice

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"

DEFINITE = "definite-enumeration"
FACTOR = "factor-split"
CYCLE = "reduction-cycle"
SIEVE = "modular-sieve"
SEARCH = "bounded-search"

DEFAULT_SEARCH_BOUND = 1000


def _prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(lo, hi + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        x = q
        while x % p == 0:
            x //= p
        if x == 1:
            out.append(q)
    return out


# every modulus up to 64, then prime powers up to 128
DEFAULT_MODULI: tuple[int, ...] = tuple(range(2, 65)) + tuple(_prime_powers(65, 128))


@dataclass(frozen=True)
class BinaryQForm:
    a: int
    b: int
    c: int

    def __call__(self, m: int, n: int) -> int:
        return self.a * m * m + self.b * m * n + self.c * n * n

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def classify(self) -> str:
        D = self.disc
        if D < 0:
            return "positive-definite" if self.a > 0 else "negative-definite"
        if isqrt(D) ** 2 == D:
            return "degenerate"
        return "indefinite"

    def transpose(self) -> "BinaryQForm":
        return BinaryQForm(self.c, self.b, self.a)

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c]


@dataclass(frozen=True)
class RepCertificate:
    status: str
    witness: Optional[tuple[int, int]]
    method: str
    trace: str
    bound_used: Optional[int]
    form: BinaryQForm = field(default=None)
    target: int = 0

    def __post_init__(self):
        if self.status not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == YES:
            if self.witness is None:
                raise ValueError("Yes certificate without a witness")
            m, n = self.witness
            if (m, n) == (0, 0) or self.form(m, n) != self.target:
                raise ValueError(f"witness {self.witness} does not represent {self.target}")

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": list(self.witness) if self.witness is not None else None,
            "method": self.method,
            "trace": self.trace,
            "bound_used": self.bound_used,
            "form": self.form.to_list(),
            "target": self.target,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RepCertificate":
        w = data.get("witness")
        return cls(
            data["status"],
            tuple(w) if w is not None else None,
            data["method"],
            data["trace"],
            data.get("bound_used"),
            BinaryQForm(*data["form"]),
            data["target"],
        )


def from_bn(g: int, r: int, d: int) -> BinaryQForm:
    """Half the self-intersection form on the lattice (2r-2, 2g-2, d)."""
    if g < 2 or r < 2:
        raise ValueError("need g >= 2 and r >= 2")
    return BinaryQForm(r - 1, d, g - 1)


def _key(w):
    m, n = w
    return (abs(m) + abs(n), -m, -n)


def _best(cands):
    cands = [w for w in cands if w != (0, 0)]
    return min(cands, key=_key) if cands else None


# ---------------------------------------------------------------- factor split


def _divisors(x: int) -> list[int]:
    from sympy import divisors

    pos = divisors(abs(x))
    return pos + [-e for e in pos]


def _line_best(p: int, q: int, u: int):
    """Best integer point on p*m + q*n = u (not both p, q zero), or None."""
    g = gcd(p, q)
    if u % g:
        return None
    x0, y0 = _bezout(p, q)
    m0, n0 = x0 * (u // g), y0 * (u // g)
    dm, dn = q // g, -p // g  # step along the line
    ks = {0}
    for base, step in ((m0, dm), (n0, dn)):
        if step:
            k = -base // step
            ks.update(range(k - 1, k + 3))
    return _best((m0 + k * dm, n0 + k * dn) for k in ks)


def _bezout(p: int, q: int) -> tuple[int, int]:
    """x, y with p*x + q*y = gcd(p, q) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    a, b = p, q
    while b:
        k = a // b
        a, b = b, a - k * b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        x0, y0 = -x0, -y0
    return x0, y0


def _factor_split(Q: BinaryQForm, t: int):
    """All-integer solution of Q = t for a square discriminant; exact."""
    a, b, c = Q.a, Q.b, Q.c
    if a == 0 and b == 0:
        w = _factor_split(Q.transpose(), t)
        return None if w is None else (w[1], w[0])
    s = isqrt(Q.disc)
    if a == 0:
        # Q = n (b m + c n)
        if t == 0:
            return (1, 0)
        cands = []
        for n in _divisors(t):
            rest = t // n - c * n
            if rest % b == 0:
                cands.append((rest // b, n))
        return _best(cands)
    # 4aQ = L1 * L2 with L1 = 2am + (b-s)n, L2 = 2am + (b+s)n
    if t == 0:
        cands = []
        for coeff in (b - s, b + s):
            g = gcd(2 * a, coeff)
            cands += [(-coeff // g, 2 * a // g), (coeff // g, -2 * a // g)]
        return _best(cands)
    N = 4 * a * t
    if s == 0:
        # (2am + bn)^2 = 4at
        u = isqrt(N) if N > 0 else -1
        if u < 0 or u * u != N:
            return None
        return _best(w for w in (_line_best(2 * a, b, u), _line_best(2 * a, b, -u)) if w)
    cands = []
    for L1 in _divisors(N):
        L2 = N // L1
        if (L2 - L1) % (2 * s):
            continue
        n = (L2 - L1) // (2 * s)
        rest = L1 - (b - s) * n
        if rest % (2 * a) == 0:
            cands.append((rest // (2 * a), n))
    return _best(cands)


# ------------------------------------------------------------- reduction cycle


def _mul(M, N):
    (p, q), (r, s) = M
    (e, f), (g, h) = N
    return ((p * e + q * g, p * f + q * h), (r * e + s * g, r * f + s * h))


def _inv(M):
    (p, q), (r, s) = M
    return ((s, -q), (-r, p))


_ID = ((1, 0), (0, 1))


def _is_reduced(A: int, B: int, D: int) -> bool:
    # |sqrt D - 2|A|| < B < sqrt D, squared out
    if B <= 0 or B * B >= D:
        return False
    lo = 2 * abs(A) + B
    hi = 2 * abs(A) - B
    return lo * lo > D and (hi < 0 or hi * hi < D)


def _rho(form, D: int, R: int):
    """One reduction step and the unimodular matrix that effects it."""
    A, B, C = form
    twoc = 2 * abs(C)
    if abs(C) > R:
        Bn = (-B) % twoc
        if Bn > abs(C):
            Bn -= twoc
    else:
        lo = R - twoc + 1
        Bn = lo + ((-B - lo) % twoc)
    s = (Bn + B) // (2 * C)
    return (C, Bn, (Bn * Bn - D) // (4 * C)), ((0, -1), (1, s))


def _reduce(form, D: int, R: int):
    M = _ID
    while not _is_reduced(form[0], form[1], D):
        form, step = _rho(form, D, R)
        M = _mul(M, step)
    return form, M


def _cycle(start, D: int, R: int) -> dict:
    """Reduced forms in the cycle of ``start`` mapped to the matrix reaching them."""
    seen = {start: _ID}
    form, M = start, _ID
    while True:
        form, step = _rho(form, D, R)
        M = _mul(M, step)
        if form in seen:
            return seen
        seen[form] = M


def _cycle_decide(Q: BinaryQForm, t: int):
    """Primitive representation of t via proper equivalence to (t, beta, *).

    Returns (witness or None, number of candidate forms, cycle length).
    """
    D = Q.disc
    R = isqrt(D)
    reduced, M1 = _reduce((Q.a, Q.b, Q.c), D, R)
    cyc = _cycle(reduced, D, R)
    n_cand = 0
    for beta in range(2 * abs(t)):
        if (beta * beta - D) % (4 * abs(t)):
            continue
        n_cand += 1
        F = (t, beta, (beta * beta - D) // (4 * t))
        S, M2 = _reduce(F, D, R)
        if S in cyc:
            P = _mul(_mul(M1, cyc[S]), _inv(M2))
            return (P[0][0], P[1][0]), n_cand, len(cyc)
    return None, n_cand, len(cyc)


# ------------------------------------------------------------------ decision


def represents(
    Q: BinaryQForm,
    t: int,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    moduli: Optional[Sequence[int]] = None,
) -> RepCertificate:
    """Decide whether Q(m, n) = t for some integers (m, n) != (0, 0)."""
    if search_bound < 1:
        raise ValueError("search_bound must be >= 1")
    moduli = DEFAULT_MODULI if moduli is None else tuple(moduli)

    def cert(status, witness, method, trace, bound=None):
        return RepCertificate(status, witness, method, trace, bound, Q, t)

    if Q.is_zero():
        if t == 0:
            return cert(YES, (1, 0), FACTOR, "zero form")
        return cert(NO, None, FACTOR, "zero form takes only the value 0")

    D = Q.disc
    kind = Q.classify()

    if kind in ("positive-definite", "negative-definite"):
        sign = 1 if kind == "positive-definite" else -1
        if t * sign < 0:
            return cert(NO, None, DEFINITE, "sign obstruction")
        if t == 0:
            return cert(NO, None, DEFINITE, "definite form vanishes only at the origin")
        # |4aQ| = (2am + bn)^2 + |D| n^2 bounds n; symmetric for m
        T = abs(t)
        nb = isqrt(4 * abs(Q.a) * T // -D)
        mb = isqrt(4 * abs(Q.c) * T // -D)
        w = kernels.row_witness(Q.a, Q.b, Q.c, t, mb, nb)
        trace = f"ellipse |m|<={mb}, |n|<={nb}"
        if w is None:
            return cert(NO, None, DEFINITE, trace + ": no point", max(mb, nb))
        return cert(YES, w, DEFINITE, trace, max(mb, nb))

    if kind == "degenerate":
        w = _factor_split(Q, t)
        trace = f"disc {D} = {isqrt(D)}^2, linear factors"
        if w is None:
            return cert(NO, None, FACTOR, trace + ": no factor pair solves")
        return cert(YES, w, FACTOR, trace)

    if t == 0:
        return cert(NO, None, FACTOR, f"disc {D} not a square: anisotropic over Q")

    w = kernels.row_witness(Q.a, Q.b, Q.c, t, search_bound, search_bound)
    if w is not None:
        return cert(YES, w, SEARCH, f"window |m|,|n|<={search_bound}", search_bound)

    if abs(t) == 1:
        w, n_cand, clen = _cycle_decide(Q, t)
        trace = f"window |m|,|n|<={search_bound} empty; {n_cand} candidate form(s), cycle length {clen}"
        if w is None:
            return cert(NO, None, CYCLE, trace + ": not equivalent", search_bound)
        return cert(YES, w, CYCLE, trace + ": equivalent", search_bound)

    M = kernels.sieve_obstruction(Q.a, Q.b, Q.c, t, moduli)
    if M:
        return cert(NO, None, SIEVE, f"no residue pair hits {t % M} mod {M}", search_bound)
    return cert(
        UNKNOWN,
        None,
        SIEVE,
        f"window |m|,|n|<={search_bound} empty; no obstruction modulo {len(moduli)} moduli",
        search_bound,
    )


def self_int_form(lat: PicardLattice) -> BinaryQForm:
    """Q with 2*Q(m, n) = (mH + nC)^2."""
    return BinaryQForm(lat.h_sq // 2, lat.hc, lat.c_sq // 2)


def minus_two_free(
    lat: PicardLattice,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    moduli: Optional[Sequence[int]] = None,
) -> RepCertificate:
    """Status No means the lattice has no class of square -2."""
    return represents(self_int_form(lat), -1, search_bound, moduli)


def parity_excludes_minus_one(g: int, r: int, d: int) -> bool:
    """r, g odd and d even make every coefficient of from_bn even."""
    return r % 2 == 1 and g % 2 == 1 and d % 2 == 0
