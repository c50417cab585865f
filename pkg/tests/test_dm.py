import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3cert.dm import (
    CLIFFORD_NET,
    GONALITY,
    PROVED,
    REFUTED,
    UNKNOWN,
    DMProblem,
    MinCertificate,
    boundary_quadratic,
    certify_min,
    f_value,
    feasible,
    feasible_m_intervals,
    genus11_suite,
    lm_case_systems,
    pappa_checks,
    pappa_coefficients,
    pappa_condition,
    pappa_ratio_condition,
    cap_boundary_h,
    solve_deg_selfint,
    solve_deg_selfint_explained,
    tail_certificate,
)
from k3cert.lattice import PicardLattice
from oracles import dm_min, lattice_solutions

G11 = PicardLattice(6, 20, 13)

problems = st.builds(
    DMProblem,
    st.integers(2, 30),
    st.integers(2, 6),
    st.integers(1, 40),
    st.sampled_from([GONALITY, CLIFFORD_NET]),
)


def test_f_value_examples():
    for g, r, d in [(21, 4, 18), (11, 3, 9), (30, 6, 25)]:
        assert f_value(g, r, d, 1, 0) == d - 2 * r + 2
        assert f_value(g, r, d, -1, 1) == d - 2 * r + 2
        assert f_value(g, r, d, 0, 0) == 0


def test_f_value_special_r3_case():
    # d^2 - 8g = 4: f(-1, 1) = d - 4
    for d in range(2, 200):
        if (d * d - 4) % 8 == 0 and (d * d - 4) // 8 >= 2:
            g = (d * d - 4) // 8
            assert f_value(g, 3, d, -1, 1) == d - 4


def test_feasible_example():
    ok, parts = feasible(DMProblem(21, 4, 18), 1, 0)
    assert ok and parts == {"(1)": True, "(2)": True, "(3)": True, "(4)": True}
    ok, parts = feasible(DMProblem(21, 4, 18), 0, 0)
    assert not ok and not parts["(3)"]
    _, parts = feasible(DMProblem(21, 4, 18, CLIFFORD_NET), 1, 0)
    assert set(parts) == {"(1)", "(2)", "(3)", "(iv')"}


def test_problem_validation():
    with pytest.raises(ValueError):
        DMProblem(21, 4, 18, "other")
    with pytest.raises(ValueError):
        DMProblem(1, 4, 18)
    with pytest.raises(ValueError):
        DMProblem(21, 1, 18)


@given(problems, st.integers(-30, 30), st.integers(-300, 300))
@settings(max_examples=500)
def test_gonality_feasible_implies_clifford_net(p, n, m):
    gon = DMProblem(p.g, p.r, p.d, GONALITY)
    net = DMProblem(p.g, p.r, p.d, CLIFFORD_NET)
    if feasible(gon, m, n)[0]:
        assert feasible(net, m, n)[0]


@given(problems, st.integers(-20, 20))
@settings(max_examples=300, deadline=None)
def test_intervals_are_exact(p, n):
    ivs = feasible_m_intervals(p, n)
    got = {m for lo, hi in ivs for m in range(lo, hi + 1)}
    span = (abs(n) + 1) * p.d + 10
    want = {m for m in range(-span, span + 1) if feasible(p, m, n)[0]}
    assert got == want
    for (a, b), (c, _) in zip(ivs, ivs[1:]):
        assert b + 1 < c


@given(problems, st.integers(-20, 20))
@settings(max_examples=300, deadline=None)
def test_interval_endpoints_carry_the_minimum(p, n):
    for lo, hi in feasible_m_intervals(p, n):
        full = min(f_value(p.g, p.r, p.d, m, n) for m in range(lo, hi + 1))
        ends = min(f_value(p.g, p.r, p.d, lo, n), f_value(p.g, p.r, p.d, hi, n))
        assert full == ends


def test_empty_strip():
    # with d small the strip 2 < (2r-2)m + nd < d - 2 has no integer
    assert feasible_m_intervals(DMProblem(10, 2, 4), 0) == []


def test_frozen_21_4_18():
    cert = certify_min(DMProblem(21, 4, 18))
    assert cert.min_found == 12 == cert.threshold
    assert cert.minimizers == [(1, 0)]
    assert cert.status == UNKNOWN
    assert cert.tail_ok
    assert not cert.hypotheses["-1 not represented"]
    assert "-1 not represented" in cert.trace
    net = certify_min(DMProblem(21, 4, 18, CLIFFORD_NET))
    assert net.minimizers == [(1, 0), (-1, 1)]
    assert dm_min(21, 4, 18) == (12, [(1, 0)])
    assert dm_min(21, 4, 18, CLIFFORD_NET) == (12, [(1, 0), (-1, 1)])


def _window_oracle(p, W):
    # m is pinned by (3) to |m| <= ((|n|+1) d)/(2r-2) + 2
    Bm = ((W + 1) * p.d) // (2 * p.r - 2) + 2
    return dm_min(p.g, p.r, p.d, p.variant, B=Bm, Bn=W)


def test_oracle_equivalence_random_grid():
    rng = random.Random(20261015)
    for _ in range(120):
        p = DMProblem(rng.randrange(2, 31), rng.randrange(2, 7), rng.randrange(1, 41), rng.choice([GONALITY, CLIFFORD_NET]))
        W = 12
        cert = certify_min(p, n_window=W, search_bound=50)
        assert (cert.min_found, cert.minimizers) == _window_oracle(p, W)
        if cert.min_found is not None and cert.min_found < cert.threshold:
            assert cert.status == REFUTED


def test_proved_certificate_13_3_12():
    cert = certify_min(DMProblem(13, 3, 12))
    assert cert.status == PROVED
    assert cert.tail_ok and all(cert.hypotheses.values())
    assert (cert.min_found, cert.minimizers) == (8, [(1, 0), (-1, 1)])
    assert cert.min_found == cert.threshold


def test_window_validation():
    with pytest.raises(ValueError):
        certify_min(DMProblem(21, 4, 18), n_window=1)


def test_certificate_round_trip_and_reverification():
    cert = certify_min(DMProblem(21, 4, 18, CLIFFORD_NET))
    again = MinCertificate.from_json(cert.to_json())
    assert again == cert
    data = cert.to_json()
    data["minimizers"] = [[2, 0]]
    with pytest.raises(ValueError):
        MinCertificate.from_json(data)
    data = cert.to_json()
    data["status"] = PROVED
    data["tail_ok"] = False
    with pytest.raises(ValueError):
        MinCertificate.from_json(data)


def test_tail_needs_real_boundary():
    p = DMProblem(30, 6, 10)  # d^2 < 4(r-1)(g-1)
    ok, notes = tail_certificate(p, 20, p.threshold - 1)
    assert not ok and "Delta'" in notes[0]


@given(st.integers(2, 60), st.integers(2, 6), st.integers(1, 60), st.integers(-50, 50))
def test_cap_boundary_h_is_the_gonality_boundary_quadratic(g, r, d, n):
    p = DMProblem(g, r, d)
    A2, A1, A0 = boundary_quadratic(p)
    assert A2 * n * n + A1 * n + A0 == cap_boundary_h(p, n)
    u = Fraction(g - 1, d)
    assert cap_boundary_h(p, n) == f_value(g, r, d, u * (1 - 2 * n), n)


@given(st.integers(2, 60), st.integers(3, 6), st.integers(1, 60))
def test_pappa_coefficients_are_the_net_boundary_minus_threshold(g, r, d):
    a, b, c = pappa_coefficients(g, r, d)
    A2, A1, A0 = boundary_quadratic(DMProblem(g, r, d, CLIFFORD_NET))
    assert (a, b, c) == (A2, A1, A0 - (d - 2 * r + 2))


def test_pappa_c_formula():
    g, r, d = 30, 4, 25
    u = Fraction(g - 1, d)
    want = -Fraction(16, 9) * (2 * r - 2) * u * u + Fraction(4, 3) * d * u - d + 2 * r - 2
    assert pappa_coefficients(g, r, d)[2] == want


def test_pappa_checks_shape():
    out = pappa_checks(30, 4, 25)
    assert out["c>0"] == pappa_condition(30, 4, 25)
    assert out["ratio"] == pappa_ratio_condition(30, 4, 25)
    assert out["c>0"] == out["ratio"]


def test_solve_examples():
    assert solve_deg_selfint(G11, 13, 6) == [(1, 0)]
    assert solve_deg_selfint(G11, 9, 2) == []
    assert (0, 1) in solve_deg_selfint(G11, 20, 20)
    sols, reason = solve_deg_selfint_explained(PicardLattice(6, 20, 14), 5, 2)
    assert sols == [] and "gcd" in reason


def test_solve_infinite_family():
    # H^2 = 0 and H.C = 0: every mH + C has degree c_sq and square c_sq
    with pytest.raises(ValueError, match="infinite family"):
        solve_deg_selfint(PicardLattice(0, 2, 0), 2, 2)


def test_solve_complete_against_brute_force():
    rng = random.Random(11)
    checked = 0
    while checked < 50:
        h, c, x = rng.randrange(-6, 12, 2), rng.randrange(2, 24, 2), rng.randrange(0, 15)
        if h * c - x * x == 0:
            continue
        lat = PicardLattice(h, c, x)
        m0, n0 = rng.randrange(-8, 9), rng.randrange(-8, 9)
        deg = x * m0 + c * n0
        s = h * m0 * m0 + 2 * x * m0 * n0 + c * n0 * n0
        if rng.random() < 0.3:
            s += 2
        got = solve_deg_selfint(lat, deg, s)
        assert got == lattice_solutions(h, c, x, deg, s, 200)
        checked += 1


def test_lm_case_systems_examples():
    assert lm_case_systems(11, 9, 7) == [{"deg": 9, "s_int": 2, "c2_quot": 2}]
    assert lm_case_systems(11, 8, 7) == []
    assert lm_case_systems(11, 10, 7) == [
        {"deg": 10, "s_int": 2, "c2_quot": 2},
        {"deg": 9, "s_int": 2, "c2_quot": 3},
        {"deg": 11, "s_int": 4, "c2_quot": 3},
        {"deg": 13, "s_int": 6, "c2_quot": 3},
    ]
    with pytest.raises(ValueError):
        lm_case_systems(12, 10, 7, G11)


def test_genus11_suite_passes():
    items = genus11_suite()
    assert len(items) == 16
    assert all(it["pass"] for it in items), [it for it in items if not it["pass"]]


def test_genus11_suite_on_perturbed_lattice():
    items = {it["name"]: it for it in genus11_suite(PicardLattice(6, 20, 12))}
    failed = sorted(name for name, it in items.items() if not it["pass"])
    assert failed == ["(2H-C).(C-H)", "g^2_10 solutions", "slope of E/N"]
    assert items["no (-2)-classes"]["observed"] == "No"
