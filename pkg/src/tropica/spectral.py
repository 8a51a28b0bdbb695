"""Spectral theory of matrices over a totally ordered idempotent semifield.

The principal eigenvalue of A is its maximal cycle mean rho(A). Eigenvectors
are read off the columns of (rho^-1 (*) A)^+ at critical nodes, i.e. nodes
lying on a cycle whose mean attains rho(A). Written against the generic
semifield interface; RMAX is the default and the tested case.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DimensionMismatch, DivergentStar, NoCycles, TooLarge, VerificationFailed
from .semifield import RMAX, Semifield
from .semimodule import (
    as_matrix,
    as_vector,
    identity,
    is_archimedean,
    is_zero_vector,
    mat_apply,
    scalar_mul,
    vec_close,
    zeros,
)

DEFAULT_MAX_N = 12


@dataclass
class EigenSolution:
    eigenvalue: float
    eigenvector: np.ndarray
    critical_nodes: list[int]
    residual: float


@dataclass
class SpectrumEntry:
    eigenvalue: float
    eigenvector: np.ndarray
    support: list[int]
    archimedean: bool


@dataclass
class SpectrumReport:
    entries: list[SpectrumEntry]
    method: str = "subset-oracle"
    # every verified witness, one per admissible support subset, before dedup
    witnesses: list[SpectrumEntry] = field(default_factory=list)

    @property
    def eigenvalues(self) -> list[float]:
        return [e.eigenvalue for e in self.entries]


@dataclass
class Orbit:
    initial: np.ndarray
    states: list[np.ndarray]
    window: int
    cycle_time: np.ndarray


def _square(a) -> np.ndarray:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {a.shape}")
    return a


def strongly_connected_components(a, sf: Semifield = RMAX) -> list[list[int]]:
    """SCCs of the graph with an edge i -> j whenever a_ij is not bottom.

    Components are returned sorted by their smallest node.
    """
    a = _square(a)
    graph = csr_matrix((~sf.is_zero(a)).astype(np.int8))
    _, labels = connected_components(graph, directed=True, connection="strong")
    comps: dict[int, list[int]] = {}
    for node, label in enumerate(labels):
        comps.setdefault(int(label), []).append(node)
    return sorted(comps.values(), key=lambda c: c[0])


def _karp(sub: np.ndarray, sf: Semifield):
    """Maximal cycle mean of a strongly connected matrix, rooted at node 0."""
    k = sub.shape[0]
    walks = np.full((k + 1, k), sf.zero)
    walks[0, 0] = sf.one
    for t in range(1, k + 1):
        walks[t] = sf.otimes(walks[t - 1][:, None], sub).max(axis=0)
    best = sf.zero
    for v in range(k):
        if sf.is_zero(walks[k, v]):
            continue
        worst = None
        for t in range(k):
            if sf.is_zero(walks[t, v]):
                continue
            mean = sf.nth_root(sf.otimes(walks[k, v], sf.inv(walks[t, v])), k - t)
            worst = mean if worst is None else min(worst, mean)
        best = max(best, worst)
    return best


def max_cycle_mean(a, sf: Semifield = RMAX):
    """rho(A): the largest mean weight over all cycles; bottom if A is acyclic."""
    a = _square(a)
    rho = sf.zero
    for comp in strongly_connected_components(a, sf):
        sub = a[np.ix_(comp, comp)]
        if len(comp) == 1 and sf.is_zero(sub[0, 0]):
            continue
        rho = max(rho, _karp(sub, sf))
    return np.float64(rho)


def _closure(a: np.ndarray, sf: Semifield) -> np.ndarray:
    # valid only when no cycle has weight above one
    c = a.copy()
    for k in range(c.shape[0]):
        c = sf.oplus(c, sf.otimes(c[:, k][:, None], c[k, :][None, :]))
    return c


def _check_convergent(a: np.ndarray, sf: Semifield):
    rho = max_cycle_mean(a, sf)
    if not sf.leq_tol(rho, sf.one):
        raise DivergentStar(f"maximal cycle mean {rho} exceeds the unit; the star series diverges")


def kleene_plus(a, sf: Semifield = RMAX) -> np.ndarray:
    """A^+ = A (+) A^2 (+) ... , finite when rho(A) <= 1."""
    a = _square(a)
    _check_convergent(a, sf)
    return _closure(a, sf)


def kleene_star(a, sf: Semifield = RMAX) -> np.ndarray:
    """A^* = I (+) A^+."""
    a = _square(a)
    _check_convergent(a, sf)
    return sf.oplus(identity(a.shape[0], sf), _closure(a, sf))


def _normalized_plus(a: np.ndarray, rho, sf: Semifield) -> np.ndarray:
    return _closure(sf.otimes(sf.inv(rho), a), sf)


def critical_nodes(a, sf: Semifield = RMAX) -> list[int]:
    a = _square(a)
    rho = max_cycle_mean(a, sf)
    if sf.is_zero(rho):
        raise NoCycles("an acyclic matrix has no critical nodes")
    plus = _normalized_plus(a, rho, sf)
    return [int(i) for i in np.flatnonzero(sf.close(np.diag(plus), sf.one))]


def normalize(x, sf: Semifield = RMAX) -> np.ndarray:
    """Scale a nonzero vector so its greatest coordinate is the unit."""
    x = as_vector(x)
    top = x[int(np.argmax(x))]
    return sf.otimes(x, sf.inv(top))


def residual(a, lam, x, sf: Semifield = RMAX) -> float:
    """Largest carrier deviation between A (*) x and lam (*) x."""
    lhs = mat_apply(a, x, sf)
    rhs = scalar_mul(lam, x, sf)
    both_zero = sf.is_zero(lhs) & sf.is_zero(rhs)
    with np.errstate(invalid="ignore"):
        dev = np.where(both_zero, 0.0, np.abs(lhs - rhs))
    dev = np.nan_to_num(dev, nan=np.inf)
    return float(dev.max())


def eigen_check(a, lam, x, sf: Semifield = RMAX) -> bool:
    """True iff x is nonzero and A (*) x equals lam (*) x within tolerance."""
    a, x = _square(a), as_vector(x)
    if a.shape[1] != x.size:
        raise DimensionMismatch(f"matrix {a.shape} and vector of length {x.size}")
    if is_zero_vector(x, sf):
        return False
    return vec_close(mat_apply(a, x, sf), scalar_mul(lam, x, sf), sf)


def principal_eigenpair(a, sf: Semifield = RMAX) -> EigenSolution:
    a = _square(a)
    rho = max_cycle_mean(a, sf)
    if sf.is_zero(rho):
        # acyclic: a column with no entries is killed by A, eigenvalue bottom
        sinks = np.flatnonzero(np.all(sf.is_zero(a), axis=0))
        x = zeros(a.shape[0], sf)
        x[sinks[0]] = sf.one
        crit: list[int] = []
    else:
        plus = _normalized_plus(a, rho, sf)
        crit = [int(i) for i in np.flatnonzero(sf.close(np.diag(plus), sf.one))]
        x = normalize(plus[:, crit[0]], sf)
    if not eigen_check(a, rho, x, sf):
        raise VerificationFailed(f"constructed pair (lambda={rho}, x={x}) fails A x = lambda x")
    return EigenSolution(rho, x, crit, residual(a, rho, x, sf))


def _widest_eigenvector(a: np.ndarray, sf: Semifield):
    """Eigenvalue and the join of all critical columns: the eigenvector with the widest support."""
    rho = max_cycle_mean(a, sf)
    if sf.is_zero(rho):
        return rho, principal_eigenpair(a, sf).eigenvector
    plus = _normalized_plus(a, rho, sf)
    crit = np.flatnonzero(sf.close(np.diag(plus), sf.one))
    return rho, normalize(plus[:, crit].max(axis=1), sf)


def _support(x, sf):
    return [int(i) for i in np.flatnonzero(~sf.is_zero(x))]


def all_eigenvalues(a, max_n: int = DEFAULT_MAX_N, sf: Semifield = RMAX) -> SpectrumReport:
    """Exhaustive spectrum oracle over support subsets (exponential in n).

    A subset S is admissible when no row outside S reads a column in S, so a
    vector supported on S stays supported on S. For each admissible S the
    widest eigenvector of A[S,S] (the join of its critical columns), padded
    with bottoms, is verified against A.
    """
    a = _square(a)
    n = a.shape[0]
    if n > max_n:
        raise TooLarge(f"spectrum oracle is capped at n={max_n}, got n={n}")
    nodes = range(n)
    witnesses = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(nodes, size):
            inside = list(subset)
            outside = [i for i in nodes if i not in subset]
            if outside and not np.all(sf.is_zero(a[np.ix_(outside, inside)])):
                continue
            lam, local = _widest_eigenvector(a[np.ix_(inside, inside)], sf)
            x = zeros(n, sf)
            x[inside] = local
            if eigen_check(a, lam, x, sf):
                witnesses.append(SpectrumEntry(lam, x, _support(x, sf), is_archimedean(x, sf)))
    # one entry per eigenvalue; keep the witness with the widest support
    entries: list[SpectrumEntry] = []
    for w in witnesses:
        for i, e in enumerate(entries):
            if sf.close(w.eigenvalue, e.eigenvalue):
                if len(w.support) > len(e.support):
                    entries[i] = w
                break
        else:
            entries.append(w)
    entries.sort(key=lambda e: e.eigenvalue)
    return SpectrumReport(entries, "subset-oracle", witnesses)


def orbit_simulate(a, x0, k: int, sf: Semifield = RMAX) -> Orbit:
    """Iterate x_t = A (*) x_{t-1} for t = 1..k and estimate the cycle time.

    The estimate is the per-coordinate average increment over the last
    floor(k/2) steps (at least one step); coordinates that are bottom at either
    end of the window report bottom.
    """
    if k < 1:
        raise ValueError("orbit length must be at least 1")
    a, x = _square(a), as_vector(x0)
    if a.shape[1] != x.size:
        raise DimensionMismatch(f"matrix {a.shape} and vector of length {x.size}")
    states = []
    for _ in range(k):
        x = mat_apply(a, x, sf)
        states.append(x)
    window = max(k // 2, 1)
    end = states[-1]
    start = states[k - window - 1] if k - window >= 1 else as_vector(x0)
    live = ~sf.is_zero(end) & ~sf.is_zero(start)
    safe_start = np.where(live, start, sf.one)
    growth = sf.nth_root(sf.otimes(end, sf.inv(safe_start)), window)
    return Orbit(as_vector(x0), states, window, np.where(live, growth, sf.zero))
