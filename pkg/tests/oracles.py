"""Brute-force reference computations for max-plus (R_max) objects.

Written with plain loops or elementwise numpy comparisons; nothing here
imports the library.
"""
import itertools
import math

import numpy as np

BOT = -math.inf


def mp_matvec(a, x):
    n, m = len(a), len(x)
    return [max([a[i][j] + x[j] for j in range(m)]) for i in range(n)]


def mp_matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[max(a[i][j] + b[j][c] for j in range(k)) for c in range(m)] for i in range(n)]


def mp_identity(n):
    return [[0.0 if i == j else BOT for j in range(n)] for i in range(n)]


def simple_cycle_means(a):
    """Mean weight of every simple cycle, each listed once (rooted at its smallest node)."""
    n = len(a)
    means = []
    for length in range(1, n + 1):
        for cyc in itertools.permutations(range(n), length):
            if cyc[0] != min(cyc):
                continue
            w = 0.0
            for i in range(length):
                e = a[cyc[i]][cyc[(i + 1) % length]]
                if e == BOT:
                    break
                w += e
            else:
                means.append(w / length)
    return means


def max_cycle_mean(a):
    means = simple_cycle_means(a)
    return max(means) if means else BOT


def truncated_star(a):
    """I (+) A (+) ... (+) A^(n-1) by repeated products."""
    n = len(a)
    total = mp_identity(n)
    power = mp_identity(n)
    for _ in range(n - 1):
        power = mp_matmul(power, a)
        total = [[max(total[i][j], power[i][j]) for j in range(n)] for i in range(n)]
    return total


def least_cover_on_grid(x, y, lo=-30.0, hi=30.0):
    """Least grid lambda (pitch 1e-3) with lambda + x_i >= y_i for all i."""
    if all(v == BOT for v in y):
        return BOT
    lams = coefficient_grid(lo, hi)
    ok = np.all(lams[:, None] + np.asarray(x)[None, :] >= np.asarray(y)[None, :], axis=1)
    assert ok.any(), "grid too small"
    return float(lams[np.argmax(ok)])


def superlevel_closed_everywhere(closed_sets, f, thresholds):
    """USC by definition: every superlevel set {f >= b} over the given thresholds is closed."""
    closed = {frozenset(s) for s in closed_sets}
    for b in thresholds:
        level = frozenset(i for i, v in enumerate(f) if v >= b)
        if level not in closed:
            return False
    return True


def coefficient_grid(lo, hi, per_unit=1000):
    """Grid k / per_unit on [lo, hi]; exact in binary for the integer/half-integer points."""
    return np.arange(int(lo * per_unit), int(hi * per_unit) + 1) / per_unit


def is_meet_member_on_grid(gens, f, values):
    """Search for nonempty S and grid coefficients with min_{i in S} (lam_i + g_i) == f.

    ``values`` is the coefficient grid (bottom is always added). For each
    generator, collect the coordinate sets where some admissible grid
    coefficient (lam + g >= f everywhere) touches f; then try all choices.
    """
    f = np.asarray(f, dtype=float)
    m = len(f)
    lams = np.append(np.asarray(values, dtype=float), BOT)
    options = []
    for g in gens:
        scaled = lams[:, None] + np.asarray(g, dtype=float)[None, :]
        ok = np.all(scaled >= f[None, :], axis=1)
        touch = scaled[ok] == f[None, :]
        options.append({frozenset(np.flatnonzero(row).tolist()) for row in touch})
    full = frozenset(range(m))
    for size in range(1, len(gens) + 1):
        for subset in itertools.combinations(range(len(gens)), size):
            for pick in itertools.product(*(options[i] for i in subset)):
                if frozenset().union(*pick) == full:
                    return True
    return False


def mp_matvec_batch(a, xs):
    """A (*) x for every row x of xs, by broadcasting max_j (a_ij + x_j)."""
    a = np.asarray(a, dtype=float)
    xs = np.asarray(xs, dtype=float)
    return np.max(a[None, :, :] + xs[:, None, :], axis=2)


def grid_points(values, n):
    vals = np.asarray(values, dtype=float)
    mesh = np.meshgrid(*([vals] * n), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)
