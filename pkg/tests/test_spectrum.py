
import pytest
from hypothesis import given, strategies as st

from exptype.core import Branch, PotentialSpec, derive_params, epsilon_of
from exptype.registry import BUILTIN, TABLE1, TABLE1_TOL
from exptype.spectrum import energy_level, levels, spectrum

TOL = 5e-3


def test_h2_examples(h2):
    assert energy_level(h2.potential(), "exp", 0).energy == pytest.approx(-5.02101, abs=TOL)
    assert energy_level(h2.potential(), "morse", 10).energy == pytest.approx(-0.74759, abs=TOL)


@pytest.mark.parametrize("branch,expected", [
    ("morse", [-2.42886, -2.09828, -1.79186, -1.01766]),
    ("exp", [-2.60322, -2.97007, -3.36109, -4.67918]),
])
def test_lih_levels(branch, expected):
    got = [lvl.energy for lvl in levels(BUILTIN["LiH"].potential(), branch, [0, 2, 4, 10])]
    assert got == pytest.approx(expected, abs=TOL)


def test_zero_cross_term():
    spec = PotentialSpec(V1=1.3, V2=0.0, beta=0.7, M=2.1)
    for br in Branch:
        for n in range(4):
            assert energy_level(spec, br, n).energy == pytest.approx(
                -(spec.beta ** 2 / (4 * spec.M)) * (2 * n + 1) ** 2, rel=1e-15)


def test_physical_flags():
    # a1 = 1, A = 3.5 on the Morse branch: V2 < 0 so that the flip gives A = +3.5
    spec = PotentialSpec(V1=1.0, V2=-3.5, beta=1.0, M=1.0)
    assert derive_params(spec, "exp").A == pytest.approx(3.5)
    spec = PotentialSpec(V1=1.0, V2=3.5, beta=1.0, M=1.0)
    flags = [lvl.physical for lvl in spectrum(spec, "morse", 5)]
    assert flags == [True, True, False, False, False, False]


def test_exponential_column_is_formal(molecule):
    assert not any(l.physical for l in spectrum(molecule.potential(), "exp", 10))


def test_table_within_tolerance():
    assert TABLE1_TOL == TOL
    for (name, br, n), published in TABLE1.items():
        assert abs(energy_level(BUILTIN[name].potential(), br, n).energy - published) <= TOL


spec_strategy = st.builds(PotentialSpec, V1=st.floats(0.1, 10), V2=st.floats(0.1, 10),
                          beta=st.floats(0.2, 3), M=st.floats(1, 500))


@given(spec_strategy, st.integers(0, 40), st.sampled_from(list(Branch)))
def test_two_routes_agree(spec, n, branch):
    lvl = energy_level(spec, branch, n)
    eps = epsilon_of(derive_params(spec, branch), n)
    assert lvl.energy == pytest.approx(-spec.beta ** 2 * eps ** 2 / spec.M, rel=1e-14, abs=1e-300)
    assert lvl.physical == (eps > 0)


@given(spec_strategy)
def test_monotonicity(spec):
    exp = [abs(l.energy) for l in spectrum(spec, "exp", 8)]
    assert all(b > a for a, b in zip(exp, exp[1:]))
    params = derive_params(spec, "morse")
    morse = [abs(l.energy) for l in spectrum(spec, "morse", 8) if 2 * l.n + 1 < params.A]
    assert all(b < a for a, b in zip(morse, morse[1:]))


@given(spec_strategy, st.integers(0, 20))
def test_branch_flip_maps_factor(spec, n):
    e, m = derive_params(spec, "exp"), derive_params(spec, "morse")
    assert e.a1 == m.a1
    assert (2 * n + 1 - m.A) == pytest.approx(2 * n + 1 + e.A)
