"""Parity between the compiled kernels and the pure-Python fallback."""

import os
import random
import subprocess
import sys

import pytest

from kktools import _backend, _pure, binom, level_masks

try:
    from kktools import _speedups
except ImportError:  # pragma: no cover - build without the extension
    _speedups = None

needs_speedups = pytest.mark.skipif(_speedups is None,
                                    reason="compiled extension not built")


def _random_family(rng, n, k, m):
    return sorted(rng.sample(level_masks(n, k), m))


@needs_speedups
def test_shadow_and_shade_parity():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(2, 8)
        k = rng.randint(1, n)
        m = rng.randint(0, binom(n, k))
        fam = _random_family(rng, n, k, m)
        assert sorted(_pure.shadow_masks(fam)) == sorted(_speedups.shadow_masks(fam))
        if k < n:
            assert sorted(_pure.shade_masks(fam, n)) == sorted(_speedups.shade_masks(fam, n))


@needs_speedups
def test_new_shadow_and_new_shade_parity():
    rng = random.Random(77)
    for _ in range(200):
        n = rng.randint(2, 8)
        k = rng.randint(0, n)
        m = rng.randint(0, binom(n, k))
        fam = _random_family(rng, n, k, m)
        assert sorted(_pure.new_shadow_masks(fam, n)) == \
            sorted(_speedups.new_shadow_masks(fam, n))
        if k < n:
            assert sorted(_pure.new_shade_masks(fam, n)) == \
                sorted(_speedups.new_shade_masks(fam, n))


@needs_speedups
def test_prefix_and_suffix_size_parity():
    for n in range(2, 9):
        for k in range(1, n + 1):
            lvl = level_masks(n, k)
            assert _pure.prefix_shadow_sizes(lvl) == _speedups.prefix_shadow_sizes(lvl)
        for k in range(0, n):
            lvl = level_masks(n, k)
            assert _pure.suffix_shade_sizes(lvl, n) == _speedups.suffix_shade_sizes(lvl, n)


@needs_speedups
def test_pair_scan_parity():
    from kktools import enumerate_antichains

    families = list(enumerate_antichains(3))
    for k in (0, 1, 2, 3):
        for exact in (False, True):
            got_p = _pure.scan_pairs(families, k, exact, exact, 0, len(families))
            got_c = _speedups.scan_pairs(families, k, exact, exact, 0, len(families))
            assert got_p[0] == got_c[0]
            assert sorted(got_p[1]) == sorted(got_c[1])


def test_active_backend_is_exposed():
    assert _backend.backend_name() in ("pure", "compiled")
    for name in ("shadow_masks", "new_shadow_masks", "scan_pairs"):
        assert callable(getattr(_backend, name))


def test_environment_override_forces_pure():
    env = dict(os.environ, KKTOOLS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from kktools._backend import backend_name; print(backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"


@needs_speedups
def test_default_prefers_compiled():
    env = {key: val for key, val in os.environ.items() if key != "KKTOOLS_PURE"}
    out = subprocess.run(
        [sys.executable, "-c",
         "from kktools._backend import backend_name; print(backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "compiled"
