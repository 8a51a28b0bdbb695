import numpy as np
import pytest

from tropica import MAXTIMES, RMAX
from tropica.errors import DivergentStar, NoCycles, TooLarge
from tropica.samplers import PATTERNS, random_matrix, random_pattern_matrix, random_reducible_matrix
from tropica.semimodule import identity, mat_apply, scalar_mul, vec_leq, zeros
from tropica.spectral import (
    all_eigenvalues,
    critical_nodes,
    eigen_check,
    kleene_plus,
    kleene_star,
    max_cycle_mean,
    orbit_simulate,
    principal_eigenpair,
    strongly_connected_components,
)

from oracles import BOT, max_cycle_mean as brute_cycle_mean, mp_matvec, truncated_star

TWO_CYCLE = [[BOT, 2], [3, BOT]]


def test_max_cycle_mean_examples():
    assert brute_cycle_mean(TWO_CYCLE) == 2.5
    assert max_cycle_mean(TWO_CYCLE) == 2.5
    assert max_cycle_mean([[1]]) == 1
    assert max_cycle_mean([[BOT, 0], [BOT, BOT]]) == BOT


def test_max_cycle_mean_against_enumeration():
    rng = np.random.default_rng(2024)
    for _ in range(150):
        n = int(rng.integers(1, 6))
        a = random_matrix(rng, n, density=rng.choice([0.3, 0.6, 1.0]))
        expected = brute_cycle_mean(a.tolist())
        got = max_cycle_mean(a)
        assert RMAX.close(got, expected), (a, got, expected)


def test_scc_ordering():
    a = [[BOT, 0, BOT], [0, BOT, BOT], [BOT, 0, 1]]
    assert strongly_connected_components(a) == [[0, 1], [2]]


def test_kleene_star_examples():
    a = [[BOT, -1], [-2, BOT]]
    assert truncated_star(a) == [[0, -1], [-2, 0]]
    np.testing.assert_array_equal(kleene_star(a), [[0, -1], [-2, 0]])
    np.testing.assert_array_equal(kleene_star(np.full((3, 3), BOT)), identity(3))
    with pytest.raises(DivergentStar):
        kleene_star([[1]])


def test_kleene_plus_examples():
    a = [[BOT, -0.5], [0.5, BOT]]
    # A (+) A^2 by hand: A^2 = [[0, bot], [bot, 0]]
    np.testing.assert_array_equal(kleene_plus(a), [[0, -0.5], [0.5, 0]])
    np.testing.assert_array_equal(kleene_plus(np.full((2, 2), BOT)), np.full((2, 2), BOT))
    np.testing.assert_array_equal(kleene_plus(identity(3)), identity(3))
    with pytest.raises(DivergentStar):
        kleene_plus([[BOT, 1], [0, BOT]])


def test_kleene_star_fixed_point():
    rng = np.random.default_rng(8)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        a = random_matrix(rng, n, density=0.6)
        rho = max_cycle_mean(a)
        if rho != BOT:
            a = a - max(rho, 0.0) - rng.uniform(0, 1)
        star = kleene_star(a)
        fixed = np.maximum(np.max(a[:, :, None] + star[None, :, :], axis=1), identity(n))
        assert np.all(RMAX.close(fixed, star))
        assert np.all(RMAX.close(star, truncated_star(a.tolist())))


def test_critical_nodes_examples():
    assert critical_nodes(TWO_CYCLE) == [0, 1]
    assert critical_nodes([[0, BOT], [BOT, -1]]) == [0]
    assert critical_nodes([[1]]) == [0]
    with pytest.raises(NoCycles):
        critical_nodes([[BOT, 0], [BOT, BOT]])


def test_principal_eigenpair_examples():
    sol = principal_eigenpair(TWO_CYCLE)
    assert sol.eigenvalue == 2.5
    np.testing.assert_array_equal(sol.eigenvector, [-0.5, 0])
    # hand check: A x = (2, 2.5) = 2.5 + x
    assert mp_matvec(TWO_CYCLE, [-0.5, 0]) == [2, 2.5]

    sol = principal_eigenpair([[0, BOT], [BOT, 1]])
    assert sol.eigenvalue == 1
    np.testing.assert_array_equal(sol.eigenvector, [BOT, 0])

    sol = principal_eigenpair([[BOT, 0], [BOT, BOT]])
    assert sol.eigenvalue == BOT
    np.testing.assert_array_equal(sol.eigenvector, [0, BOT])
    assert sol.critical_nodes == []


def test_principal_eigenpair_normalization():
    rng = np.random.default_rng(4)
    for _ in range(50):
        sol = principal_eigenpair(random_matrix(rng, 5))
        assert sol.eigenvector.max() == 0.0


@pytest.mark.parametrize("kind", PATTERNS)
def test_principal_eigenpair_on_patterns(kind):
    rng = np.random.default_rng(PATTERNS.index(kind))
    for _ in range(100):
        n = int(rng.integers(1, 7))
        a = random_pattern_matrix(rng, n, kind)
        sol = principal_eigenpair(a)
        assert eigen_check(a, sol.eigenvalue, sol.eigenvector)
        assert sol.residual <= 1e-9


def test_principal_eigenpair_maxtimes_matches_log_image():
    rng = np.random.default_rng(6)
    for _ in range(50):
        a = random_matrix(rng, 4, density=0.7)
        sol = principal_eigenpair(np.exp(a), MAXTIMES)
        assert MAXTIMES.close(np.log(sol.eigenvalue) if sol.eigenvalue > 0 else BOT, max_cycle_mean(a))
        assert eigen_check(np.exp(a), sol.eigenvalue, sol.eigenvector, MAXTIMES)


def test_eigen_check_examples():
    assert eigen_check(TWO_CYCLE, 2.5, [-0.5, 0])
    assert not eigen_check(TWO_CYCLE, 2.5, zeros(2))
    assert eigen_check(identity(3), 0.0, [1, BOT, -2])
    assert not eigen_check(TWO_CYCLE, 2.4, [-0.5, 0])


def test_all_eigenvalues_examples():
    rep = all_eigenvalues([[0, BOT], [BOT, 1]])
    assert rep.eigenvalues == [0, 1]
    np.testing.assert_array_equal(rep.entries[0].eigenvector, [0, BOT])
    np.testing.assert_array_equal(rep.entries[1].eigenvector, [BOT, 0])

    rep = all_eigenvalues([[0, BOT], [0, 1]])
    assert rep.eigenvalues == [1]

    assert all_eigenvalues([[-4.25]]).eigenvalues == [-4.25]
    assert rep.method == "subset-oracle"


def test_all_eigenvalues_size_cap():
    with pytest.raises(TooLarge):
        all_eigenvalues(identity(13))
    assert all_eigenvalues(identity(3), max_n=3).eigenvalues == [0]


def test_spectrum_witnesses_on_reducible_matrices():
    rng = np.random.default_rng(17)
    for _ in range(60):
        n = int(rng.integers(2, 6))
        a = random_reducible_matrix(rng, n)
        rho = max_cycle_mean(a)
        rep = all_eigenvalues(a)
        for w in rep.witnesses:
            assert eigen_check(a, w.eigenvalue, w.eigenvector)
            if w.archimedean:
                assert RMAX.close(w.eigenvalue, rho)
        for p in rep.witnesses:
            for q in rep.witnesses:
                if vec_leq(p.eigenvector, q.eigenvector):
                    assert RMAX.leq_tol(p.eigenvalue, q.eigenvalue)


def test_matrix_map_is_homogeneous_and_monotone():
    rng = np.random.default_rng(9)
    for _ in range(200):
        a = random_matrix(rng, 4, density=0.6)
        x = rng.uniform(-5, 5, 4)
        y = x + rng.uniform(0, 3, 4)
        c = rng.uniform(-5, 5)
        np.testing.assert_allclose(mat_apply(a, scalar_mul(c, x)), scalar_mul(c, mat_apply(a, x)))
        assert vec_leq(mat_apply(a, x), mat_apply(a, y))


def test_orbit_examples():
    orbit = orbit_simulate(TWO_CYCLE, [0, 0], 4)
    assert [s.tolist() for s in orbit.states] == [[2, 3], [5, 5], [7, 8], [10, 10]]
    np.testing.assert_array_equal(orbit.cycle_time, [2.5, 2.5])

    orbit = orbit_simulate(identity(2), [1, -1], 10)
    assert all(s.tolist() == [1, -1] for s in orbit.states)
    np.testing.assert_array_equal(orbit.cycle_time, [0, 0])

    orbit = orbit_simulate(TWO_CYCLE, zeros(2), 5)
    assert all(np.all(s == BOT) for s in orbit.states)


def test_orbit_rejects_empty_run():
    with pytest.raises(ValueError):
        orbit_simulate(TWO_CYCLE, [0, 0], 0)


def test_orbit_estimate_obeys_projective_bound():
    # x_t - t*rho stays within the Hilbert spread of (x0 - v) around v, so the
    # window average is off by at most that spread divided by the window
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        a = random_matrix(rng, n)
        sol = principal_eigenpair(a)
        x0 = np.zeros(n)
        spread = np.ptp(x0 - sol.eigenvector)
        orbit = orbit_simulate(a, x0, 200)
        assert np.all(np.abs(orbit.cycle_time - sol.eigenvalue) <= spread / orbit.window + 1e-9)


def test_orbit_converges_exactly_for_critical_self_loop():
    a = np.array([[1.0, -3.0, 0.5], [-2.0, -1.0, 0.0], [0.0, -4.0, -2.0]])
    assert max_cycle_mean(a) == 1.0
    orbit = orbit_simulate(a, np.zeros(3), 200)
    assert np.all(np.abs(orbit.cycle_time - 1.0) <= 1e-6)
