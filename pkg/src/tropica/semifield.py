"""Idempotent semifields over a float carrier.

Every instance here is totally ordered and embeds order-preservingly into the
float line, so ``oplus`` is ``max`` on the carrier and the semifield zero is a
reserved carrier value (``-inf`` for the max-plus instances, ``0.0`` for
max-times). All operations accept Python floats or numpy arrays and broadcast.

Comparison policy: results built only from ``oplus``/``sup``/``inf`` compare
exactly; anything that went through ``otimes``, ``inv`` or ``nth_root`` is
compared with :meth:`Semifield.close` (relative 1e-9, absolute 1e-12).
"""
from __future__ import annotations

import numpy as np

from .errors import EmptyInf, InversionOfZero, NotClosed

RTOL = 1e-9
ATOL = 1e-12


class Semifield:
    """Common interface for a b-complete, totally ordered idempotent semifield."""

    name = "abstract"
    zero = 0.0
    one = 1.0
    algebraically_closed = True

    def oplus(self, a, b):
        return np.maximum(a, b)

    def otimes(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def nth_root(self, a, n):
        raise NotImplementedError

    def power(self, a, n):
        raise NotImplementedError

    def leq(self, a, b):
        return np.less_equal(a, b)

    def is_zero(self, a):
        return np.equal(a, self.zero)

    def contains(self, a) -> bool:
        """True when every value in ``a`` is a legal carrier value."""
        raise NotImplementedError

    def sup_set(self, values):
        values = np.asarray(values, dtype=float).ravel()
        if values.size == 0:
            return np.float64(self.zero)
        return values.max()

    def inf_set(self, values):
        values = np.asarray(values, dtype=float).ravel()
        if values.size == 0:
            raise EmptyInf("the infimum of the empty set does not exist in K")
        return values.min()

    def close(self, a, b):
        """Tolerant equality for values that passed through ``otimes``/roots."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        a_zero = a == self.zero
        b_zero = b == self.zero
        with np.errstate(invalid="ignore"):
            diff = np.abs(a - b)
            scale = np.maximum(np.abs(a), np.abs(b))
            near = diff <= np.maximum(RTOL * scale, ATOL)
        out = np.where(a_zero | b_zero, a_zero & b_zero, near)
        return bool(out) if out.ndim == 0 else out

    def leq_tol(self, a, b):
        out = np.less_equal(a, b) | np.asarray(self.close(a, b))
        return bool(out) if np.ndim(out) == 0 else out

    def _check_root_degree(self, n):
        n = np.asarray(n)
        if np.any(n < 1) or np.any(n != np.floor(n)):
            raise ValueError(f"root degree must be a positive integer, got {n!r}")

    def __repr__(self):
        return f"<semifield {self.name}>"


class MaxPlus(Semifield):
    """R_max: reals with max as addition and + as multiplication."""

    name = "rmax"
    zero = -np.inf
    one = 0.0

    def otimes(self, a, b):
        return np.add(a, b)

    def inv(self, a):
        if np.any(np.equal(a, self.zero)):
            raise InversionOfZero("bottom has no multiplicative inverse")
        return np.negative(a)

    def nth_root(self, a, n):
        self._check_root_degree(n)
        return np.divide(a, n)

    def power(self, a, n):
        # a^0 is the unit, including for bottom
        a, n = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(n))
        with np.errstate(invalid="ignore"):
            return np.where(n == 0, self.one, np.multiply(a, n))[()]

    def contains(self, a) -> bool:
        a = np.asarray(a, dtype=float)
        return bool(np.all(~np.isnan(a) & (a != np.inf)))


class MaxTimes(Semifield):
    """Positive reals with max and ordinary multiplication; zero is 0.0."""

    name = "maxtimes"
    zero = 0.0
    one = 1.0

    def otimes(self, a, b):
        return np.multiply(a, b)

    def inv(self, a):
        if np.any(np.equal(a, self.zero)):
            raise InversionOfZero("bottom has no multiplicative inverse")
        return np.reciprocal(np.asarray(a, dtype=float))[()]

    def nth_root(self, a, n):
        self._check_root_degree(n)
        return np.power(np.asarray(a, dtype=float), 1.0 / n)[()]

    def power(self, a, n):
        return np.power(np.asarray(a, dtype=float), n)[()]

    def contains(self, a) -> bool:
        a = np.asarray(a, dtype=float)
        return bool(np.all(np.isfinite(a) & (a >= 0.0)))


class IntMaxPlus(MaxPlus):
    """Z_max: integers under max and +. A semifield that is not algebraically closed."""

    name = "zmax"
    algebraically_closed = False

    def nth_root(self, a, n):
        self._check_root_degree(n)
        a = np.asarray(a, dtype=float)
        finite = a != self.zero
        with np.errstate(invalid="ignore"):
            if np.any(finite & (np.mod(a, n) != 0)):
                raise NotClosed(f"no integer {n}-th root in Z_max")
            return np.where(finite, np.floor_divide(a, n), self.zero)[()]

    def contains(self, a) -> bool:
        a = np.asarray(a, dtype=float)
        finite = a[a != self.zero]
        return bool(np.all(np.isfinite(finite) & (finite == np.round(finite))))


RMAX = MaxPlus()
MAXTIMES = MaxTimes()
ZMAX = IntMaxPlus()

SEMIFIELDS = {sf.name: sf for sf in (RMAX, MAXTIMES)}


def get_semifield(name: str) -> Semifield:
    try:
        return SEMIFIELDS[name]
    except KeyError:
        raise ValueError(f"unknown semifield {name!r}; choose from {sorted(SEMIFIELDS)}") from None
