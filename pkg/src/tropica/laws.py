"""Randomized checks of the semifield, semimodule and dual-functional laws.

Each check returns a :class:`LawResult`; a failing law carries the first
counterexample found. ``oplus``-only identities are compared exactly, the rest
with the semifield tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import semimodule as sm
from .samplers import random_nonzero, random_scalars
from .semifield import Semifield

SET_SIZE = 16
CHAIN_LENGTH = 40


@dataclass
class LawResult:
    law: str
    passed: bool
    checked: int
    counterexample: dict | None = None


def _verdict(law, ok, inputs) -> LawResult:
    ok = np.asarray(ok, dtype=bool)
    if ok.all():
        return LawResult(law, True, int(ok.size))
    i = int(np.flatnonzero(~ok)[0])
    return LawResult(law, False, int(ok.size), {k: v[i] for k, v in inputs.items()})


class _Tally:
    """Accumulates per-sample outcomes of loop-based checks."""

    def __init__(self):
        self.results: dict[str, LawResult] = {}

    def record(self, law, ok, **inputs):
        res = self.results.setdefault(law, LawResult(law, True, 0))
        res.checked += 1
        if not ok and res.passed:
            res.passed = False
            res.counterexample = inputs

    def __iter__(self):
        return iter(self.results.values())


def _finite_sets(rng, sf, samples):
    """Rows of SET_SIZE scalars, each row a set of random size padded with duplicates."""
    vals = random_scalars(rng, (samples, SET_SIZE), sf)
    sizes = rng.integers(1, SET_SIZE + 1, samples)
    pad = np.arange(SET_SIZE)[None, :] >= sizes[:, None]
    return np.where(pad, vals[:, :1], vals)


def scalar_laws(sf: Semifield, rng, samples: int) -> list[LawResult]:
    a, b, c = (random_scalars(rng, samples, sf) for _ in range(3))
    # ties between a and b exercise the order law at equality
    b = np.where(rng.random(samples) < 0.1, a, b)
    nz = random_nonzero(rng, samples, sf)
    deg = rng.integers(1, 9, samples)
    X = _finite_sets(rng, sf, samples)
    close, op, ot = sf.close, sf.oplus, sf.otimes
    out = [
        _verdict("oplus idempotent", op(a, a) == a, {"a": a}),
        _verdict("oplus commutative", op(a, b) == op(b, a), {"a": a, "b": b}),
        _verdict("oplus associative", op(op(a, b), c) == op(a, op(b, c)), {"a": a, "b": b, "c": c}),
        _verdict("zero neutral for oplus", op(a, sf.zero) == a, {"a": a}),
        _verdict("zero absorbing for otimes", sf.is_zero(ot(a, sf.zero)), {"a": a}),
        _verdict("otimes commutative", close(ot(a, b), ot(b, a)), {"a": a, "b": b}),
        _verdict("otimes associative", close(ot(ot(a, b), c), ot(a, ot(b, c))), {"a": a, "b": b, "c": c}),
        _verdict("one neutral for otimes", close(ot(a, sf.one), a), {"a": a}),
        _verdict("left distributive", close(ot(a, op(b, c)), op(ot(a, b), ot(a, c))), {"a": a, "b": b, "c": c}),
        _verdict("right distributive", close(ot(op(b, c), a), op(ot(b, a), ot(c, a))), {"a": a, "b": b, "c": c}),
        _verdict("inverse", close(ot(nz, sf.inv(nz)), sf.one), {"a": nz}),
        _verdict("root law", close(sf.power(sf.nth_root(a, deg), deg), a), {"a": a, "n": deg}),
        _verdict("order law", sf.leq(a, b) == (op(a, b) == b), {"a": a, "b": b}),
        _verdict(
            "generalized distributive (sup)",
            close(ot(a, X.max(axis=1)), ot(a[:, None], X).max(axis=1)),
            {"a": a, "X": X},
        ),
        _verdict(
            "generalized distributive (inf)",
            close(ot(a, X.min(axis=1)), ot(a[:, None], X).min(axis=1)),
            {"a": a, "X": X},
        ),
    ]
    # sup_set / inf_set are the library's finite suprema; check them against max/min
    out.append(_verdict("sup_set is max", np.array([sf.sup_set(row) == row.max() for row in X[:64]]), {"X": X}))
    out.append(_verdict("inf_set is min", np.array([sf.inf_set(row) == row.min() for row in X[:64]]), {"X": X}))
    return out


class _Pool:
    """Pre-drawn scalars handed out in slices; one RNG call instead of thousands."""

    def __init__(self, rng, sf, size, zero_prob=0.1):
        self.values = random_scalars(rng, size, sf, zero_prob=zero_prob)
        self.pos = 0

    def take(self, shape):
        k = int(np.prod(shape))
        if self.pos + k > self.values.size:
            self.pos = 0
        out = self.values[self.pos:self.pos + k].reshape(shape)
        self.pos += k
        return out


def semimodule_laws(sf: Semifield, rng, samples: int, max_dim: int = 8) -> list[LawResult]:
    tally = _Tally()
    dims = rng.integers(1, max_dim + 1, samples)
    qsizes = rng.integers(1, SET_SIZE + 1, samples)
    coins = rng.random(samples)
    pool = _Pool(rng, sf, samples * (3 * max_dim + 2 + SET_SIZE) + 1)
    mats = _Pool(rng, sf, samples * max_dim * max_dim + 1, zero_prob=0.3)
    for i in range(samples):
        d = int(dims[i])
        x, y, z = pool.take((3, d))
        a, b = pool.take(2)
        A = mats.take((d, d))
        Q = pool.take(int(qsizes[i]))
        close = lambda u, v: sm.vec_close(u, v, sf)  # noqa: E731
        tally.record(
            "scalar action associative",
            close(sm.scalar_mul(a, sm.scalar_mul(b, x, sf), sf), sm.scalar_mul(sf.otimes(a, b), x, sf)),
            a=a, b=b, x=x,
        )
        tally.record(
            "scalar sum distributes",
            close(sm.scalar_mul(sf.oplus(a, b), x, sf), sm.vec_oplus(sm.scalar_mul(a, x, sf), sm.scalar_mul(b, x, sf), sf)),
            a=a, b=b, x=x,
        )
        tally.record(
            "vector sum distributes",
            close(sm.scalar_mul(a, sm.vec_oplus(x, y, sf), sf), sm.vec_oplus(sm.scalar_mul(a, x, sf), sm.scalar_mul(a, y, sf), sf)),
            a=a, x=x, y=y,
        )
        tally.record("zero scalar annihilates", sm.is_zero_vector(sm.scalar_mul(sf.zero, x, sf), sf), x=x)
        tally.record("vector oplus idempotent", np.array_equal(sm.vec_oplus(x, x, sf), x), x=x)
        upper = sm.vec_oplus(x, z, sf) if coins[i] < 0.5 else y
        tally.record(
            "vector order law",
            sm.vec_leq(x, upper, sf) == np.array_equal(sm.vec_oplus(x, upper, sf), upper),
            x=x, y=upper,
        )
        tally.record(
            "b-space sup law",
            close(sm.scalar_mul(sf.sup_set(Q), x, sf), sf.otimes(Q[:, None], x[None, :]).max(axis=0)),
            Q=Q, x=x,
        )
        tally.record(
            "b-space inf law",
            close(sm.scalar_mul(sf.inf_set(Q), x, sf), sf.otimes(Q[:, None], x[None, :]).min(axis=0)),
            Q=Q, x=x,
        )
        tally.record(
            "matrix map preserves oplus",
            close(sm.mat_apply(A, sm.vec_oplus(x, y, sf), sf), sm.vec_oplus(sm.mat_apply(A, x, sf), sm.mat_apply(A, y, sf), sf)),
            A=A, x=x, y=y,
        )
        tally.record(
            "matrix map homogeneous",
            close(sm.mat_apply(A, sm.scalar_mul(a, x, sf), sf), sm.scalar_mul(a, sm.mat_apply(A, x, sf), sf)),
            A=A, a=a, x=x,
        )
    return list(tally)


def _nudge(sf: Semifield, k: int):
    # a scalar strictly above one that tends to one as k grows
    return 2.0 ** -k if sf.one == 0.0 else float(np.exp(2.0 ** -k))


def _within(sf: Semifield, u, v, tol=1e-9) -> bool:
    if sf.is_zero(u) or sf.is_zero(v):
        return bool(sf.is_zero(u) and sf.is_zero(v))
    if u == v:
        return True
    return abs(u - v) <= tol * max(1.0, abs(u), abs(v))


def _monotone(values, increasing):
    v = np.asarray(values)
    return bool(np.all(v[1:] >= v[:-1])) if increasing else bool(np.all(v[1:] <= v[:-1]))


def dual_laws(sf: Semifield, rng, samples: int, max_dim: int = 8) -> list[LawResult]:
    tally = _Tally()
    eps = _nudge(sf, 20)
    for _ in range(samples):
        d = int(rng.integers(1, max_dim + 1))
        x = random_nonzero(rng, d, sf)
        y = random_scalars(rng, d, sf, zero_prob=0.2)
        z = random_scalars(rng, d, sf, zero_prob=0.2)
        a = random_nonzero(rng, 1, sf)[0]
        lam = sm.dual_apply(x, y, sf)
        tally.record("x* covering", sm.vec_leq_tol(y, sm.scalar_mul(lam, x, sf), sf), x=x, y=y)
        if not sf.is_zero(lam):
            below = sf.otimes(lam, sf.inv(eps))
            tally.record("x* minimality", not sm.vec_leq(y, sm.scalar_mul(below, x, sf), sf), x=x, y=y)
        tally.record(
            "x* preserves oplus",
            sf.close(sm.dual_apply(x, sm.vec_oplus(y, z, sf), sf), sf.oplus(lam, sm.dual_apply(x, z, sf))),
            x=x, y=y, z=z,
        )
        tally.record(
            "x* homogeneous",
            sf.close(sm.dual_apply(x, sm.scalar_mul(a, y, sf), sf), sf.otimes(a, lam)),
            x=x, y=y, a=a,
        )
        rising = [sm.dual_apply(x, sf.otimes(y, sf.inv(_nudge(sf, k))), sf) for k in range(CHAIN_LENGTH)]
        falling = [sm.dual_apply(x, sf.otimes(y, _nudge(sf, k)), sf) for k in range(CHAIN_LENGTH)]
        tally.record(
            "x* continuous on increasing chains",
            _monotone(rising, increasing=True) and _within(sf, rising[-1], lam),
            x=x, y=y,
        )
        tally.record(
            "x* continuous on decreasing chains",
            _monotone(falling, increasing=False) and _within(sf, falling[-1], lam),
            x=x, y=y,
        )
    return list(tally)


def run_axioms(sf: Semifield, seed: int, samples: int) -> list[LawResult]:
    """The full law battery used by ``tropica axioms``."""
    rng = np.random.default_rng(seed)
    results = scalar_laws(sf, rng, samples)
    results += semimodule_laws(sf, rng, max(samples // 10, 1))
    results += dual_laws(sf, rng, max(samples // 10, 1))
    return results
