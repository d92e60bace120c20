"""Bound-state location and normalization against closed forms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad, simpson

from polewave.analytic import (
    SquareWellOracle,
    exp_well_bound_alpha,
    exp_well_bound_u,
    free_decay,
)
from polewave.errors import NoBoundStateError, NumericalError, SpecError
from polewave.potentials import Free, PotentialSpec, make_grid, make_potential
from polewave.spectrum import (
    asymptotic_coefficient,
    build_bound_state,
    decay_tail_integral,
    find_bound_states,
    ground_state,
)


def test_square_well_ground_state(sq41_states, sq41_oracle):
    assert len(sq41_states) == 1
    s = sq41_states[0]
    a = sq41_oracle.bound_alphas(0)[0]
    assert s.alpha == pytest.approx(a, abs=1e-8)
    assert s.asymptotic_norm == pytest.approx(sq41_oracle.normalization(0, a), abs=1e-6)
    assert s.energy == -s.alpha**2


def test_deep_well_spectrum(deep30_states):
    """Two s-wave states at depth 30, deepest first, each matching the
    transcendental roots and closed-form norms of the square well."""
    oracle = SquareWellOracle(30.0, 1.0)
    alphas = oracle.bound_alphas(0)
    assert len(deep30_states) == len(alphas) == 2
    assert deep30_states[0].alpha > deep30_states[1].alpha
    for s, a in zip(deep30_states, alphas):
        assert s.alpha == pytest.approx(a, abs=1e-8)
        n = oracle.normalization(0, a)
        assert s.asymptotic_norm == pytest.approx(n, rel=1e-6)


def test_p_wave_state(sq15_l1_states):
    oracle = SquareWellOracle(15.0, 1.0)
    alphas = oracle.bound_alphas(1)
    assert len(sq15_l1_states) == len(alphas) == 1
    s = sq15_l1_states[0]
    assert s.alpha == pytest.approx(alphas[0], abs=1e-8)
    assert s.asymptotic_norm == pytest.approx(
        oracle.normalization(1, alphas[0]), rel=1e-6
    )


def test_exponential_well_against_bessel_form(exp905):
    """The exponential well binds J_nu(z(r)); the computed state must
    match that profile after scaling unit norm to unit tail."""
    pot, grid = exp905
    states = find_bound_states(pot, 0, grid)
    assert len(states) == 1
    s = states[0]
    a = exp_well_bound_alpha(9.0, 0.5)
    assert s.alpha == pytest.approx(a, abs=1e-8)
    ref = s.asymptotic_norm * exp_well_bound_u(9.0, 0.5, a, grid.r())
    assert np.max(np.abs(s.u - ref)) < 1e-8


def test_free_potential_binds_nothing():
    free = Free()
    grid = make_grid(free, h=1 / 64, r_max=10.0)
    assert find_bound_states(free, 0, grid) == []
    with pytest.raises(NoBoundStateError):
        ground_state(free, 0, grid)


def test_states_are_unit_norm_and_tail_positive(deep30_states, sq15_l1_states):
    for s in (*deep30_states, *sq15_l1_states):
        body = float(simpson(s.u**2, x=s.grid.r()))
        tail = s.asymptotic_norm**2 * decay_tail_integral(s.l, s.alpha, s.grid.r_max)
        assert body + tail == pytest.approx(1.0, abs=1e-10)
        # the inward sweep leaves a rounding-level residual at r = 0
        assert abs(s.u[0]) < 1e-8
        assert s.u[-1] > 0


def test_asymptotic_coefficient_reads_back_the_norm(
    sq41_states, deep30_states, sq15_l1_states
):
    """Dividing the tail by the free decay profile recovers N; this is
    the measurement the normalization claims to encode."""
    for s in (*sq41_states, *deep30_states, *sq15_l1_states):
        anc = asymptotic_coefficient(s)
        assert anc == pytest.approx(s.asymptotic_norm, rel=1e-8)


def test_tail_reference_matches_the_state(sq41_states):
    s = sq41_states[0]
    r = s.grid.r()
    sel = r > 4.0
    assert np.max(np.abs(s.u[sel] - s.asymptotic_norm * s.tail_reference()[sel])) < 1e-9


def test_decay_tail_integral_closed_forms():
    for l, alpha, radius in [(0, 0.7, 5.0), (1, 1.2, 7.0), (2, 0.9, 6.0)]:
        ref = quad(
            lambda r: free_decay(l, alpha, r) ** 2, radius, radius + 80.0 / alpha
        )[0]
        assert decay_tail_integral(l, alpha, radius) == pytest.approx(ref, rel=1e-9)


def test_build_rejects_non_eigenvalues(sq41):
    pot, grid = sq41
    with pytest.raises(NumericalError):
        build_bound_state(pot, 0, 0.3, grid)
    with pytest.raises(SpecError):
        build_bound_state(pot, 0, -0.5, grid)


@pytest.mark.filterwarnings("ignore::polewave.errors.ConditioningWarning")
@given(st.floats(1.5, 40.0), st.floats(0.5, 1.5))
@settings(max_examples=10, deadline=None)
def test_square_well_spectrum_is_complete(depth, radius):
    """Every root of the closed-form bound condition is found, none are
    invented, and each alpha agrees to the root-finder tolerance."""
    oracle = SquareWellOracle(depth, radius)
    expected = oracle.bound_alphas(0)
    pot = make_potential(PotentialSpec("square", depth, radius))
    states = find_bound_states(pot, 0, h=1 / 256)
    assert len(states) == len(expected)
    for s, a in zip(states, expected):
        assert s.alpha == pytest.approx(a, abs=1e-7)
