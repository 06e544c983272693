from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newton_strata import kernels
from oracles import random_gsp_slopes

BACKENDS = kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
def test_cython_backend_is_default_when_built():
    assert kernels.BACKEND == "cython"


def test_env_var_forces_fallback():
    code = "import newton_strata.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, NEWTON_STRATA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def _band(rng, n):
    unit = 12 if n <= 3 else 24
    centre = random_gsp_slopes(rng, n, spread=2)
    lo = sorted((int(x * unit) - rng.randint(0, unit) for x in centre), reverse=True)
    hi = sorted((int(x * unit) + rng.randint(0, unit) for x in centre), reverse=True)
    c = int(centre[0] + centre[-1]) + rng.choice([-1, 0, 0, 1])
    return c, lo, hi, unit


@pytest.mark.skipif(len(BACKENDS) < 2, reason="only one backend available")
@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6), st.sampled_from([-1, 0, 3]))
def test_backends_agree_on_paths(n, seed, limit):
    rng = random.Random(seed)
    c, lo, hi, unit = _band(rng, n)
    py = BACKENDS["python"].symplectic_paths(n, c, lo, hi, unit, limit)
    cy = BACKENDS["cython"].symplectic_paths(n, c, lo, hi, unit, limit)
    assert py == cy


@pytest.mark.skipif(len(BACKENDS) < 2, reason="only one backend available")
@settings(max_examples=300, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_backends_agree_on_conditions(n, seed):
    rng = random.Random(seed)
    unit = 60
    b = sorted((rng.randint(-3 * unit, 3 * unit) for _ in range(2 * n)), reverse=True)
    bt = sorted((x - rng.randint(0, unit) for x in b), reverse=True)
    if rng.random() < 0.5:
        bt = sorted((x - rng.choice([0, unit]) for x in b), reverse=True)
    assert BACKENDS["python"].ordinary_conditions(b, bt, unit) == BACKENDS["cython"].ordinary_conditions(b, bt, unit)


def test_big_integers_stay_exact():
    # far beyond 64 bits: Python ints all the way through
    unit = 2 * 3 * 10**30
    for mod in BACKENDS.values():
        paths, truncated = mod.symplectic_paths(1, 0, [-unit, -unit], [unit, unit], unit, -1)
        assert not truncated
        assert sorted(paths) == [(0,), (unit,)]
