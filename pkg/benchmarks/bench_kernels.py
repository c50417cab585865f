"""Compiled vs pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from k3cert import _kernels_py
from k3cert.qforms import DEFAULT_MODULI

try:
    from k3cert import _kernels as _compiled
except ImportError:
    _compiled = None


def _forms(count, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b, c = (rng.randint(-50, 50) for _ in range(3))
        D = b * b - 4 * a * c
        if D > 0 and int(D**0.5) ** 2 != D:
            out.append((a, b, c))
    return out


def bench(repeat):
    forms = _forms(20)
    cases = {
        "row_witness |m|,|n|<=1000, t=-1 (20 forms)": lambda k: [
            k.row_witness(a, b, c, -1, 1000, 1000) for a, b, c in forms
        ],
        "sieve_obstruction default moduli, t=3 (5 forms)": lambda k: [
            k.sieve_obstruction(a, b, c, 3, DEFAULT_MODULI) for a, b, c in forms[:5]
        ],
    }
    backends = [("python", _kernels_py)] + ([("compiled", _compiled)] if _compiled else [])
    print(f"{'case':52s} " + " ".join(f"{n:>10s}" for n, _ in backends) + "   speedup")
    for name, fn in cases.items():
        times = []
        results = []
        for _, mod in backends:
            results.append(fn(mod))
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=repeat)))
        assert all(r == results[0] for r in results), "backends disagree"
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 else "     n/a"
        print(f"{name:52s} " + " ".join(f"{t:9.4f}s" for t in times) + "  " + speed)
    if _compiled is None:
        print("compiled kernels not built; only the Python fallback was timed")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    bench(ap.parse_args().repeat)
