import math

import numpy as np
import pytest

from exptype.core import Branch, DomainError, bound_state_count, derive_params
from exptype.oracle import (GridSpec, compare_with_closed_form, count_below, default_grid,
                            morse_potential, solve_bound_states, solve_with_richardson,
                            tridiagonal_eigenvalues)
from exptype.registry import BUILTIN
from exptype.spectrum import energy_level


def test_tridiagonal_against_dense():
    rng = np.random.default_rng(3)
    d, e = rng.normal(size=60), rng.normal(size=59)
    dense = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
    assert np.allclose(tridiagonal_eigenvalues(d, e, 10), dense[:10], atol=1e-9)


def test_particle_in_box():
    L, M = 2.0, 1.7
    res = solve_bound_states(lambda x: np.zeros_like(x), M, GridSpec(0.0, L, 4000), 3, bound_only=False)
    for n, E in enumerate(res.eigenvalues, start=1):
        assert E == pytest.approx(n * n * math.pi ** 2 / (M * L * L), rel=1e-3)


def test_harmonic_spacing():
    # V = x^2 with M = 1: E_n = (2n + 1)
    res = solve_bound_states(lambda x: x * x, 1.0, GridSpec(-10, 10, 4000), 5, bound_only=False)
    spacing = np.diff(res.eigenvalues)
    assert np.allclose(spacing, 2.0, rtol=1e-3)


def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec(1.0, 0.0, 500)
    with pytest.raises(DomainError):
        GridSpec(0.0, 1.0, 50)
    with pytest.raises(DomainError):
        solve_bound_states(lambda x: np.full_like(x, np.nan), 1.0, GridSpec(0, 1, 200), 1)


def test_bound_filter_sets_flag():
    res = solve_bound_states(lambda x: -np.exp(-x * x), 1.0, GridSpec(-8, 8, 400), 10)
    assert res.truncated and all(e < res.threshold for e in res.eigenvalues)


def test_second_order_convergence(h2):
    V = morse_potential(h2)
    exact = energy_level(h2.potential(), Branch.MORSE, 0).energy
    errs = [solve_bound_states(V, h2.M, GridSpec(-h2.r0, 12 * h2.r0, N), 1).eigenvalues[0] - exact
            for N in (2001, 4001)]
    assert 3.5 <= errs[0] / errs[1] <= 4.5


def test_richardson_improves(h2):
    res = solve_with_richardson(morse_potential(h2), h2.M, default_grid(h2, 2000), 3)
    exact = [energy_level(h2.potential(), Branch.MORSE, n).energy for n in range(3)]
    assert max(abs(a - b) for a, b in zip(res.richardson_estimate, exact)) < \
        max(abs(a - b) for a, b in zip(res.eigenvalues, exact))


def test_bound_count_matches(h2):
    params = derive_params(h2.potential(), Branch.MORSE)
    count = count_below(morse_potential(h2), h2.M, GridSpec(-h2.r0, 40 * h2.r0, 20000), 0.0)
    assert abs(count - bound_state_count(params)) <= 1


@pytest.mark.parametrize("name,n,published", [("H2", 0, -4.47601), ("H2", 4, -2.60903), ("LiH", 2, -2.09828)])
def test_compare_examples(name, n, published):
    (c,) = compare_with_closed_form(BUILTIN[name], [n])
    assert c.bound and abs(c.difference) <= 2e-3
    assert abs(c.oracle - published) <= 5e-3


def test_compare_unbound_marker(h2):
    (c,) = compare_with_closed_form(h2, [20])
    assert not c.bound and c.oracle is None


def test_deterministic(h2):
    a = compare_with_closed_form(h2, [0, 1])
    b = compare_with_closed_form(h2, [0, 1])
    assert a == b
