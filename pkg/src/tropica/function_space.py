"""Semicontinuous functions on finite topological spaces and meet-subspaces.

A function on an m-point space X is a length-m vector. ``USC(X, K)`` is the
set of such vectors whose superlevel sets are all closed. A
:class:`MeetSubspace` is the set of all meets of scalar multiples of a finite
list of generators; projecting onto it uses the dual functional of each
generator.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotATopology, NotMember
from .semifield import RMAX, Semifield
from .semimodule import (
    as_matrix,
    as_vector,
    dual_apply,
    is_archimedean,
    scalar_mul,
    vec_close,
    vec_leq_tol,
)

# how far above one the finite caps of embed_free reach, per semifield
FREE_DEPTH = {"rmax": 1e6, "maxtimes": 1e12}


@dataclass(frozen=True)
class FiniteTopology:
    points: int
    closed_sets: frozenset[frozenset[int]]

    def is_closed(self, subset) -> bool:
        return frozenset(subset) in self.closed_sets

    def sorted_closed_sets(self) -> list[list[int]]:
        return sorted((sorted(s) for s in self.closed_sets), key=lambda s: (len(s), s))


def make_topology(m: int, closed_sets) -> FiniteTopology:
    """Validate a family of closed sets on points 0..m-1 (no implicit completion)."""
    if m < 1:
        raise NotATopology("a space needs at least one point")
    family = set()
    for s in closed_sets:
        s = frozenset(int(i) for i in s)
        if any(i < 0 or i >= m for i in s):
            raise NotATopology(f"closed set {sorted(s)} has points outside 0..{m - 1}")
        family.add(s)
    whole = frozenset(range(m))
    if frozenset() not in family:
        raise NotATopology("the empty set must be closed")
    if whole not in family:
        raise NotATopology("the whole space must be closed")
    for a, b in itertools.combinations(family, 2):
        if a | b not in family:
            raise NotATopology(f"union of {sorted(a)} and {sorted(b)} is not closed")
        if a & b not in family:
            raise NotATopology(f"intersection of {sorted(a)} and {sorted(b)} is not closed")
    return FiniteTopology(m, frozenset(family))


def discrete_topology(m: int) -> FiniteTopology:
    subsets = (frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r))
    return FiniteTopology(m, frozenset(subsets))


def all_topologies(m: int) -> list[FiniteTopology]:
    """Every topology on m points (brute force over closed-set families; m <= 4)."""
    if m > 4:
        raise ValueError("enumeration is only practical for m <= 4")
    whole = frozenset(range(m))
    proper = [frozenset(c) for r in range(1, m) for c in itertools.combinations(range(m), r)]
    out = []
    for mask in range(1 << len(proper)):
        family = {frozenset(), whole}
        family.update(s for i, s in enumerate(proper) if mask >> i & 1)
        if all(a | b in family and a & b in family for a in family for b in family):
            out.append(FiniteTopology(m, frozenset(family)))
    return out


def _check_function(t: FiniteTopology, f) -> np.ndarray:
    f = as_vector(f)
    if f.size != t.points:
        raise DimensionMismatch(f"function has {f.size} values but the space has {t.points} points")
    return f


def usc_violation(t: FiniteTopology, f, sf: Semifield = RMAX):
    """First threshold whose superlevel set is not closed, as (b, set); None if f is USC."""
    f = _check_function(t, f)
    # superlevel sets only change at values f actually takes
    for b in np.unique(f):
        level = frozenset(int(i) for i in np.flatnonzero(sf.leq(b, f)))
        if not t.is_closed(level):
            return float(b), sorted(level)
    return None


def is_usc(t: FiniteTopology, f, sf: Semifield = RMAX) -> bool:
    return usc_violation(t, f, sf) is None


def unit_function(m: int, sf: Semifield = RMAX) -> np.ndarray:
    if m < 1:
        raise ValueError("need at least one point")
    return np.full(m, sf.one)


def e_star(f, sf: Semifield = RMAX):
    """Dual functional of the unit function: the supremum of f."""
    return sf.sup_set(as_vector(f))


@dataclass(frozen=True, eq=False)
class MeetSubspace:
    """All meets of scalar multiples of ``generators`` (rows of a matrix).

    At least one generator must be Archimedean so that every function has a
    least upper member. Generators with bottom entries only take part when the
    function vanishes wherever they do.
    """

    generators: np.ndarray
    topology: FiniteTopology | None = None
    sf: Semifield = RMAX

    def __post_init__(self):
        gens = as_matrix(self.generators)
        object.__setattr__(self, "generators", gens)
        if self.topology is not None and self.topology.points != gens.shape[1]:
            raise DimensionMismatch("generators and topology disagree on the number of points")
        if not any(is_archimedean(g, self.sf) for g in gens):
            raise NotMember("a meet-subspace needs at least one generator without bottom entries")

    @property
    def points(self) -> int:
        return self.generators.shape[1]


def make_meet_subspace(generators, topology=None, sf: Semifield = RMAX) -> MeetSubspace:
    return MeetSubspace(generators, topology, sf)


def generator_coefficients(w: MeetSubspace, f) -> np.ndarray:
    """Least lambda_i with lambda_i (*) g_i >= f, +inf where no lambda works."""
    f = as_vector(f)
    if f.size != w.points:
        raise DimensionMismatch(f"function has {f.size} values, subspace lives on {w.points} points")
    sf = w.sf
    gens = w.generators
    support = ~sf.is_zero(gens)
    # a generator cannot cover f where it vanishes and f does not
    coverable = ~np.any(~support & ~sf.is_zero(f)[None, :], axis=1)
    safe = np.where(support, gens, sf.one)
    ratios = np.where(support, sf.otimes(f[None, :], sf.inv(safe)), sf.zero)
    return np.where(coverable, ratios.max(axis=1), np.inf)


def meet_project(w: MeetSubspace, f) -> np.ndarray:
    """Least member of W above f: the meet of g_i*(f) (*) g_i over usable generators."""
    f = as_vector(f)
    usable = generator_coefficients(w, f) != np.inf
    sf = w.sf
    gens = w.generators[usable]
    support = ~sf.is_zero(gens)
    # g_i*(f) (*) g_ik as max_j f_j (*) (g_ik / g_ij): the j = k ratio is exactly one,
    # so coordinates that touch come back without cancellation error
    safe = np.where(support, gens, sf.one)
    ratio = sf.otimes(gens[:, None, :], sf.inv(safe)[:, :, None])
    ratio = np.where(support[:, :, None], ratio, sf.zero)
    scaled = sf.otimes(f[None, :, None], ratio).max(axis=1)
    return scaled.min(axis=0)


def contains(w: MeetSubspace, f) -> bool:
    return vec_close(meet_project(w, f), f, w.sf)


def meet_join(w: MeetSubspace, x, y) -> np.ndarray:
    """Join inside W: the least member above both x and y."""
    return meet_project(w, w.sf.oplus(as_vector(x), as_vector(y)))


def embed_free(n: int, sf: Semifield = RMAX, depth=None):
    """Realize K^n as a meet-subspace of USC(X, K) for the discrete n-point X.

    Generators: the unit function; for each point j a finite cap equal to one
    except ``depth^-1`` at j; and the limiting cap with bottom at j. A vector
    is a member whenever its finite entries are within a factor ``depth``
    of each other (a spread of 1e6 for R_max). The isomorphism K^n -> W is the
    identity map.
    """
    if n < 1:
        raise ValueError("need at least one point")
    if depth is None:
        depth = FREE_DEPTH[sf.name]
    t = discrete_topology(n)
    gens = [unit_function(n, sf)]
    for j in range(n):
        cap = unit_function(n, sf)
        cap[j] = sf.inv(depth)
        gens.append(cap)
    if n > 1:
        for j in range(n):
            cap = unit_function(n, sf)
            cap[j] = sf.zero
            gens.append(cap)
    w = MeetSubspace(np.array(gens), t, sf)
    return t, w, _identity_map


def _identity_map(x):
    return as_vector(x).copy()


def archimedean_in_subspace(w: MeetSubspace, x, samples) -> bool:
    """Check lambda = x*(y) satisfies lambda (*) x >= y for each sampled member y.

    Raises NotMember if x is not an Archimedean member of W or a sample lies
    outside W.
    """
    sf = w.sf
    x = as_vector(x)
    if not is_archimedean(x, sf) or not contains(w, x):
        raise NotMember("x must be an Archimedean member of the subspace")
    for y in samples:
        y = as_vector(y)
        if not contains(w, y):
            raise NotMember(f"sample {y} is not a member of the subspace")
        lam = dual_apply(x, y, sf)
        if not vec_leq_tol(y, scalar_mul(lam, x, sf), sf):
            return False
    return True
