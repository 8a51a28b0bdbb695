"""Seeded random instances for property suites and the acceptance corpus."""
from __future__ import annotations

import numpy as np

from .semifield import RMAX, Semifield


def _to_carrier(values: np.ndarray, zero_mask: np.ndarray, sf: Semifield) -> np.ndarray:
    # draws are made on the max-plus scale; exp maps them onto max-times
    out = values if sf.one == 0.0 else np.exp(values)
    return np.where(zero_mask, sf.zero, out)


def random_scalars(rng, size, sf: Semifield = RMAX, zero_prob=0.1, scale=100.0) -> np.ndarray:
    """Mixture of bottoms, small integers (to force ties) and continuous values."""
    cont = rng.uniform(-scale, scale, size)
    ints = rng.integers(-5, 6, size).astype(float)
    vals = np.where(rng.random(size) < 0.3, ints, cont)
    if sf.one != 0.0:
        vals = vals / scale * 20.0
    return _to_carrier(vals, rng.random(size) < zero_prob, sf)


def random_nonzero(rng, size, sf: Semifield = RMAX, scale=100.0) -> np.ndarray:
    return random_scalars(rng, size, sf, zero_prob=0.0, scale=scale)


def random_matrix(rng, n, m=None, density=1.0, low=-10.0, high=10.0, sf: Semifield = RMAX, integer=False):
    """n x m matrix with each entry present (non-bottom) with probability ``density``."""
    m = n if m is None else m
    if integer:
        vals = rng.integers(int(low), int(high) + 1, (n, m)).astype(float)
    else:
        vals = rng.uniform(low, high, (n, m))
    return _to_carrier(vals, rng.random((n, m)) >= density, sf)


def random_pattern_matrix(rng, n, kind, sf: Semifield = RMAX):
    """Square matrix of a named sparsity pattern: dense, sparse, bottom_row, acyclic."""
    if kind == "dense":
        return random_matrix(rng, n, sf=sf)
    if kind == "sparse":
        return random_matrix(rng, n, density=0.5, sf=sf)
    if kind == "bottom_row":
        a = random_matrix(rng, n, density=0.7, sf=sf)
        a[rng.integers(n)] = sf.zero
        return a
    if kind == "acyclic":
        a = random_matrix(rng, n, density=0.6, sf=sf)
        a[np.tril_indices(n)] = sf.zero
        perm = rng.permutation(n)
        return a[np.ix_(perm, perm)]
    raise ValueError(f"unknown pattern {kind!r}")


PATTERNS = ("dense", "sparse", "bottom_row", "acyclic")


def random_reducible_matrix(rng, n, sf: Semifield = RMAX):
    """Block upper-triangular matrix (2 or 3 diagonal blocks) under a random relabelling."""
    if n < 2:
        return random_matrix(rng, n, density=0.8, sf=sf)
    blocks = int(rng.integers(2, min(3, n) + 1))
    cuts = np.sort(rng.choice(np.arange(1, n), blocks - 1, replace=False))
    label = np.searchsorted(cuts, np.arange(n), side="right")
    a = random_matrix(rng, n, density=0.7, sf=sf)
    # no edge from a later block back to an earlier one
    a[label[:, None] > label[None, :]] = sf.zero
    perm = rng.permutation(n)
    return a[np.ix_(perm, perm)]
