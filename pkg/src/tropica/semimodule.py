"""Free semimodules K^n: vectors, matrices, the dual functional and residuation.

Vectors are 1-D float arrays and matrices 2-D float arrays in the carrier of a
:class:`~tropica.semifield.Semifield` (``RMAX`` unless given). Nothing here
mutates its inputs.
"""
from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotArchimedean, UnboundedCoordinate
from .semifield import RMAX, Semifield


def as_vector(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise DimensionMismatch(f"expected a nonempty 1-D vector, got shape {x.shape}")
    return x


def as_matrix(a) -> np.ndarray:
    try:
        a = np.asarray(a, dtype=float)
    except ValueError as exc:  # ragged nested lists
        raise DimensionMismatch(f"ragged matrix rows: {exc}") from None
    if a.ndim != 2 or 0 in a.shape:
        raise DimensionMismatch(f"expected a nonempty 2-D matrix, got shape {a.shape}")
    return a


def zeros(n: int, sf: Semifield = RMAX) -> np.ndarray:
    """The zero vector (all bottom)."""
    return np.full(n, sf.zero)


def identity(n: int, sf: Semifield = RMAX) -> np.ndarray:
    eye = np.full((n, n), sf.zero)
    np.fill_diagonal(eye, sf.one)
    return eye


def _same_shape(x, y):
    if x.shape != y.shape:
        raise DimensionMismatch(f"shapes {x.shape} and {y.shape} differ")


def vec_oplus(x, y, sf: Semifield = RMAX) -> np.ndarray:
    x, y = as_vector(x), as_vector(y)
    _same_shape(x, y)
    return sf.oplus(x, y)


def scalar_mul(a, x, sf: Semifield = RMAX) -> np.ndarray:
    return sf.otimes(a, as_vector(x))


def vec_leq(x, y, sf: Semifield = RMAX) -> bool:
    """Pointwise order, exact: x <= y iff x (+) y == y."""
    x, y = as_vector(x), as_vector(y)
    _same_shape(x, y)
    return bool(np.all(sf.leq(x, y)))


def vec_leq_tol(x, y, sf: Semifield = RMAX) -> bool:
    """Pointwise order with the otimes tolerance."""
    x, y = as_vector(x), as_vector(y)
    _same_shape(x, y)
    return bool(np.all(sf.leq_tol(x, y)))


def vec_close(x, y, sf: Semifield = RMAX) -> bool:
    x, y = as_vector(x), as_vector(y)
    _same_shape(x, y)
    if np.array_equal(x, y):
        return True
    return bool(np.all(sf.close(x, y)))


def is_zero_vector(x, sf: Semifield = RMAX) -> bool:
    return bool(np.all(sf.is_zero(as_vector(x))))


def mat_apply(a, x, sf: Semifield = RMAX) -> np.ndarray:
    """(A (*) x)_i = sup_j a_ij (*) x_j."""
    a, x = as_matrix(a), as_vector(x)
    if a.shape[1] != x.size:
        raise DimensionMismatch(f"matrix {a.shape} cannot act on vector of length {x.size}")
    return sf.otimes(a, x[None, :]).max(axis=1)


def mat_mul(a, b, sf: Semifield = RMAX) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return sf.otimes(a[:, :, None], b[None, :, :]).max(axis=1)


def mat_power(a, k: int, sf: Semifield = RMAX) -> np.ndarray:
    a = as_matrix(a)
    out = identity(a.shape[0], sf)
    for _ in range(k):
        out = mat_mul(out, a, sf)
    return out


def is_archimedean(x, sf: Semifield = RMAX) -> bool:
    """In K^n an element dominates every vector up to scaling iff it has no bottom entry."""
    return not bool(np.any(sf.is_zero(as_vector(x))))


def dual_apply(x, y, sf: Semifield = RMAX):
    """Evaluate x*(y), the least k with k (*) x >= y.

    Coordinatewise the constraint is k >= y_i / x_i, so the least admissible
    k is the supremum of those ratios. The zero vector maps to bottom.
    """
    x, y = as_vector(x), as_vector(y)
    _same_shape(x, y)
    if not is_archimedean(x, sf):
        raise NotArchimedean("x* is only defined for vectors without bottom entries")
    return sf.otimes(y, sf.inv(x)).max()


def mat_residuate(a, b, sf: Semifield = RMAX) -> np.ndarray:
    """Greatest x with A (*) x <= b.

    x_j = inf over {i : a_ij != bottom} of b_i (*) a_ij^-1. A column with no
    finite entry leaves x_j unconstrained and raises UnboundedCoordinate.
    """
    a, b = as_matrix(a), as_vector(b)
    if a.shape[0] != b.size:
        raise DimensionMismatch(f"matrix {a.shape} incompatible with right-hand side of length {b.size}")
    finite = ~sf.is_zero(a)
    empty = np.flatnonzero(~finite.any(axis=0))
    if empty.size:
        raise UnboundedCoordinate(int(empty[0]))
    safe = np.where(finite, a, sf.one)
    ratios = sf.otimes(b[:, None], sf.inv(safe))
    # entries of an absent edge impose no constraint
    ratios = np.where(finite, ratios, np.inf)
    return ratios.min(axis=0)
