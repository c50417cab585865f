import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3cert import _kernels_py, kernels
from oracles import best_witness, represented

coef = st.integers(-30, 30)

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")


@given(coef, coef, coef, st.integers(-60, 60), st.integers(0, 25))
@settings(max_examples=300)
def test_python_row_witness_matches_brute_force(a, b, c, t, B):
    want = best_witness(represented(a, b, c, t, B))
    assert _kernels_py.row_witness(a, b, c, t, B, B) == want


@given(coef, coef, coef, st.integers(-60, 60), st.integers(0, 25))
@settings(max_examples=300)
def test_dispatch_row_witness_matches_brute_force(a, b, c, t, B):
    want = best_witness(represented(a, b, c, t, B))
    assert kernels.row_witness(a, b, c, t, B, B) == want


def test_row_witness_rectangular_box():
    # x^2 - 2y^2 = -1 at (1,1); with no room for n, nothing
    assert kernels.row_witness(1, 0, -2, -1, 5, 0) is None
    assert kernels.row_witness(1, 0, -2, -1, 5, 1) == (1, 1)


def _sieve_brute(a, b, c, t, M):
    return all((a * m * m + b * m * n + c * n * n - t) % M for m in range(M) for n in range(M))


@given(coef, coef, coef, st.integers(-40, 40), st.lists(st.integers(1, 40), min_size=1, max_size=6))
@settings(max_examples=200)
def test_sieve_matches_brute_force(a, b, c, t, moduli):
    want = next((M for M in moduli if _sieve_brute(a, b, c, t, M)), 0)
    assert _kernels_py.sieve_obstruction(a, b, c, t, moduli) == want
    assert kernels.sieve_obstruction(a, b, c, t, moduli) == want


def test_sieve_rejects_bad_modulus():
    with pytest.raises(ValueError):
        kernels.sieve_obstruction(1, 0, 1, 3, [0])


@compiled
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
@settings(max_examples=200)
def test_compiled_agrees_with_python(a, b, c, t):
    from k3cert import _kernels

    assert _kernels.row_witness(a, b, c, t, 40, 40) == _kernels_py.row_witness(a, b, c, t, 40, 40)
    mods = [7, 8, 9, 11, 16]
    assert _kernels.sieve_obstruction(a % 16, b % 16, c % 16, t % 16, [16]) == _kernels_py.sieve_obstruction(
        a, b, c, t, [16]
    )
    assert kernels.sieve_obstruction(a, b, c, t, mods) == _kernels_py.sieve_obstruction(a, b, c, t, mods)


def test_huge_coefficients_take_python_path():
    big = 10**30
    # (big*m)^2 - (big*n)^2 with t = 0 off the diagonal: m = n = 1 works, exact
    assert kernels.row_witness(big, 0, -big, 0, 3, 3) == (1, 1)
    assert kernels.row_witness(big, 1, big, -1, 2, 2) is None
    assert kernels.sieve_obstruction(big, 0, big, big + 3, [4]) == _kernels_py.sieve_obstruction(
        big, 0, big, big + 3, [4]
    )


def test_large_modulus_takes_python_path():
    M = (1 << 20) + 7
    # residue hit at once, so the scan stops early
    assert kernels.sieve_obstruction(M, 0, M, 0, [M]) == 0
    assert kernels.sieve_obstruction(1, 0, 0, M + 1, [M]) == 0


def test_env_var_forces_pure_python():
    env = dict(os.environ, K3CERT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from k3cert import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"
