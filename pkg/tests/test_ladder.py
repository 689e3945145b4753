import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exptype.core import DerivedParams
from exptype.ladder import (OperatorCore, apply_lowering, apply_raising, commutator_pm,
                            raise_then_lower, structure_constants)
from exptype.states import BoundState, Convention, state_derivatives


def unit(n, eps, a1):
    return BoundState(n, eps, a1, 1.0, Convention.FIXED_EPS)


def test_lowering_examples():
    s0 = unit(0, 3.0, 1.2)
    c, g_max = apply_lowering(s0)
    z = np.geomspace(1e-3, 20, 400)
    assert c == 0.0 and g_max <= 1e-12 * np.max(np.abs(state_derivatives(s0, z, 0)[0]))
    c, r = apply_lowering(unit(1, 1.5, 1.0))
    assert c == pytest.approx(1 + 3.0, rel=1e-10) and r <= 1e-10
    c, r = apply_lowering(unit(3, 2.0, 1.0))
    assert c == pytest.approx(7.0, rel=1e-10) and r <= 1e-10


def test_raising_examples():
    c, r = apply_raising(unit(0, 2.0, 1.0))
    assert c == pytest.approx(1.0, rel=1e-10) and r <= 1e-10
    c, r = apply_raising(unit(4, 2.0, 1.0))
    assert c == pytest.approx(5.0, rel=1e-10) and r <= 1e-10
    _, r = apply_raising(unit(4, 2.0, 1.3), literal=True)
    assert r > 1e-2


def test_core_coefficients():
    assert OperatorCore("lowering", 3, 1.5, 2.0).coefficients == (-1.0, 4.5, -2.0)
    assert OperatorCore("raising", 3, 1.5, 2.0).coefficients == (1.0, 5.5, -2.0)
    with pytest.raises(ValueError):
        OperatorCore("sideways", 0, 1.0, 1.0).coefficients


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.floats(0.5, 20), st.floats(0.2, 20))
def test_ladder_coefficients(n, eps, a1):
    s = unit(n, eps, a1)
    if n:
        c, r = apply_lowering(s)
        assert c == pytest.approx(n + 2 * eps, rel=1e-10) and r <= 1e-10
    c, r = apply_raising(s)
    assert c == pytest.approx(n + 1, rel=1e-10) and r <= 1e-10
    c, r = raise_then_lower(s)
    assert c == pytest.approx((n + 1) * (n + 1 + 2 * eps), rel=1e-9) and r <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.floats(0.5, 20), st.floats(0.2, 20))
def test_commutator_eigenvalue(n, eps, a1):
    params = DerivedParams.from_A(2 * eps + 1, a1=a1)
    mu, r = commutator_pm(params, n, eps=eps)
    assert mu == pytest.approx(-(2 * n + 2 * eps + 1), rel=1e-9) and r <= 1e-9


def test_commutator_under_physical_constraint():
    params = DerivedParams.from_A(34.82, a1=17.4)
    for n in (0, 3, 7):
        mu, _ = commutator_pm(params, n)  # eps = eps_n
        assert mu == pytest.approx(-params.A, rel=1e-9)


def test_structure_constants(h2_morse):
    report = structure_constants(h2_morse, range(11))
    assert set(report.minus_constant) == set(range(1, 11))
    for c, r in report.minus_constant.values():
        assert c == pytest.approx(2.0, abs=1e-9) and r <= 1e-9
    for c, r in report.plus_constant.values():
        assert c == pytest.approx(-2.0, abs=1e-9) and r <= 1e-9
    claims = report.paper[3]
    A, eps = report.A, report.eps
    assert claims["ell_minus"] == pytest.approx((-3 + A - 1) * np.sqrt(3 * (3 + 2 * eps + 1)))
    assert claims["ell_plus"] == pytest.approx(np.sqrt(4 / (-3 + A + 1)))
    assert claims["commutator_eigenvalue"] == pytest.approx(2 * 3 + 2 - A)
    d = report.to_dict()
    assert d["minus_constant"]["1"][0] == pytest.approx(2.0)


def test_normalized_family_neighbor():
    # normalized fixed-eps states: lowering coefficient becomes (n + 2eps) N_n / N_{n-1}
    eps, a1, n = 2.0, 1.0, 3
    from math import lgamma, exp, sqrt
    norm = lambda k: sqrt(exp(lgamma(k + 1) - lgamma(k + 2 * eps + 1)))
    s = BoundState(n, eps, a1, norm(n), Convention.FIXED_EPS)
    c, r = apply_lowering(s)
    assert c == pytest.approx((n + 2 * eps) * norm(n) / norm(n - 1), rel=1e-10) and r <= 1e-10
