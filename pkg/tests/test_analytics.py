"""Closed forms against brute force and against the simulator."""

import math

import numpy as np
import pytest

from dipnesim import (
    FockState,
    KittenSpec,
    ModeLayout,
    Squeeze,
    basis_state,
    beamsplit,
    coherent,
    displace,
    fit_squeezed_cat,
    kitten_direct,
    mean_quadrature,
    phase_shift,
    squeeze_op,
)
from dipnesim.analytics import (
    GaussianMoments,
    MatchResult,
    c_equal,
    c_equal_bruteforce,
    erasure_residual,
    gaussian_propagate,
    interference_loss_theory,
    mean_photons_from_moments,
    poisson_pn,
    squeeze_fraction_strong,
    squeeze_to_match,
    vacuum_moments,
)
from dipnesim.analytics import _antisqueezed


class TestInterferenceLossTheory:
    def test_frozen_value(self):
        v = interference_loss_theory(
            math.sqrt(0.5), math.sqrt(0.5), math.pi / 5, math.pi / 10
        )
        assert v == pytest.approx(0.2795084971874738, abs=1e-12)

    def test_pi_shift_flips_sign_exactly(self):
        args = (0.7 + 0.2j, 0.4 - 0.1j, 0.5, 0.3)
        assert interference_loss_theory(*args) == -interference_loss_theory(
            *args, pi_shift=True
        )

    def test_vanishes_without_amplitude(self):
        assert interference_loss_theory(0.0, 1.0, 0.4, 0.2) == 0.0
        assert interference_loss_theory(1.0, 0.0, 0.4, 0.2) == 0.0

    def test_orthogonal_phases_vanish(self):
        # Re[a1 conj(a2)] = 0 for a quarter-turn pair
        assert interference_loss_theory(1.0, 1.0j, 0.4, 0.2) == pytest.approx(
            0.0, abs=1e-15
        )

    def test_angle_validation(self):
        with pytest.raises(ValueError):
            interference_loss_theory(1.0, 1.0, math.pi / 2, 0.1)
        with pytest.raises(ValueError):
            interference_loss_theory(1.0, 1.0, 0.1, -0.2)


class TestCEqual:
    def test_trivial_values(self):
        assert c_equal(0, 0) == 1.0 + 0.0j
        assert c_equal(1, 1) == 0.0 + 0.0j

    def test_frozen_two_zero(self):
        assert c_equal(2, 0) == pytest.approx(1j / math.sqrt(2), abs=1e-15)
        assert c_equal_bruteforce(2, 0) == pytest.approx(1j / math.sqrt(2), abs=1e-15)

    def test_matches_bruteforce_everywhere(self):
        for n in range(9):
            for m in range(9):
                assert c_equal(n, m) == pytest.approx(
                    c_equal_bruteforce(n, m), abs=1e-9
                ), (n, m)

    def test_odd_odd_exactly_zero(self):
        for n in range(1, 9, 2):
            for m in range(1, 9, 2):
                assert c_equal(n, m) == 0.0
                assert c_equal_bruteforce(n, m) == 0.0

    def test_odd_total_zero(self):
        assert c_equal(3, 2) == 0.0
        assert c_equal_bruteforce(3, 2) == 0.0

    def test_symmetric_in_arguments(self):
        for n, m in [(4, 2), (6, 0), (8, 4), (5, 3)]:
            assert c_equal(n, m) == pytest.approx(c_equal(m, n), abs=1e-15)

    @pytest.mark.parametrize("n,m", [(2, 0), (4, 2), (2, 2), (6, 4), (3, 1)])
    def test_matches_beamsplit_simulation(self, n, m):
        st = basis_state(ModeLayout((n + m, n + m)), (n, m))
        out = beamsplit(st, 0, 1, math.pi / 4)
        p = (n + m) // 2
        assert complex(out.nd[p, p]) == pytest.approx(c_equal(n, m), abs=1e-12)

    def test_beamsplit_distribution_complete(self):
        st = basis_state(ModeLayout((6, 6)), (4, 2))
        out = beamsplit(st, 0, 1, math.pi / 4)
        assert np.sum(np.abs(out.amplitudes) ** 2) == pytest.approx(1.0, abs=1e-10)

    def test_magnitude_bounded(self):
        for n in range(0, 9, 2):
            assert abs(c_equal(n, n)) <= 1.0 + 1e-15

    def test_bruteforce_guard(self):
        with pytest.raises(ValueError, match="24"):
            c_equal_bruteforce(14, 12)

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            c_equal(-1, 2)
        with pytest.raises(ValueError):
            c_equal_bruteforce(2, -1)


class TestErasureResidual:
    def test_frozen_pair(self):
        exact, approx = erasure_residual(1.0, 10.0)
        assert exact == pytest.approx(0.049875621120889946, abs=1e-15)
        assert approx == pytest.approx(0.05, abs=1e-15)

    def test_approximation_overestimates(self):
        for aw, a_s in [(0.5, 1.0), (1.0, 3.0), (2.0, 5.0)]:
            exact, approx = erasure_residual(aw, a_s)
            assert exact < approx

    def test_ratio_approaches_one(self):
        exact, approx = erasure_residual(1.0, 1e3)
        assert approx / exact == pytest.approx(1.0, abs=1e-6)

    def test_zero_weak_field(self):
        assert erasure_residual(0.0, 2.0) == (0.0, 0.0)

    def test_strong_must_be_positive(self):
        with pytest.raises(ValueError):
            erasure_residual(1.0, 0.0)


class TestPoisson:
    def test_vacuum(self):
        assert poisson_pn(0.0, 0) == 1.0
        assert poisson_pn(0.0, 3) == 0.0

    def test_completeness(self):
        total = sum(poisson_pn(2.0, n) for n in range(80))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_mean(self):
        alpha = 1.3 + 0.4j
        mean = sum(n * poisson_pn(alpha, n) for n in range(80))
        assert mean == pytest.approx(abs(alpha) ** 2, abs=1e-10)

    def test_matches_coherent_amplitudes(self):
        alpha = 1.3 + 0.4j
        st = coherent(alpha, 40)
        probs = np.abs(st.amplitudes) ** 2
        for n in range(20):
            assert probs[n] == pytest.approx(poisson_pn(alpha, n), abs=1e-12)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            poisson_pn(1.0, -1)


class TestSqueezeFractionStrong:
    def test_frozen_unsqueezed_seed(self):
        exact, strong = squeeze_fraction_strong(1.0, 0.0, 5.0)
        assert strong == pytest.approx(0.2, abs=1e-15)
        assert exact == pytest.approx(0.2, rel=1e-3)

    def test_frozen_tenth_photon_seed(self):
        r0 = math.asinh(math.sqrt(0.1))
        _, strong = squeeze_fraction_strong(1.0, r0, 4.0)
        assert strong == pytest.approx(0.3177932267776061, abs=1e-12)

    def test_zero_drive_zero_fraction(self):
        exact, _ = squeeze_fraction_strong(1.0, 0.0, 0.0)
        assert exact == 0.0

    def test_within_one_percent_by_r_three(self):
        for r0 in (0.0, 0.31, 1.0):
            for r in (3.0, 4.0):
                exact, strong = squeeze_fraction_strong(1.0, r0, r)
                assert abs(exact - strong) / strong < 0.01

    def test_tight_at_large_r(self):
        exact, strong = squeeze_fraction_strong(1.0, 0.5, 8.0)
        assert abs(exact - strong) / strong < 1e-4

    def test_monotone_toward_limit(self):
        d0, r0 = 0.8, 0.4
        rs = np.linspace(r0 + 1.0, r0 + 6.0, 21)
        gaps = []
        for r in rs:
            exact, strong = squeeze_fraction_strong(d0, r0, float(r))
            gaps.append(abs(exact - strong))
        assert all(a > b for a, b in zip(gaps, gaps[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            squeeze_fraction_strong(0.0, 0.1, 1.0)
        with pytest.raises(ValueError):
            squeeze_fraction_strong(1.0, -0.1, 1.0)
        with pytest.raises(ValueError):
            squeeze_fraction_strong(1.0, 0.1, -1.0)


class TestGaussianMoments:
    def test_vacuum(self):
        g = vacuum_moments(2)
        assert g.n_modes == 2
        assert not g.mean.any()
        assert np.array_equal(g.cov, np.eye(4))

    def test_shape_and_symmetry_validation(self):
        with pytest.raises(ValueError, match="symmetric"):
            GaussianMoments(np.zeros(2), np.array([[1.0, 0.1], [0.0, 1.0]]))
        with pytest.raises(ValueError):
            GaussianMoments(np.zeros(3), np.eye(3))
        with pytest.raises(ValueError):
            GaussianMoments(np.zeros(2), np.eye(4))

    def test_arrays_frozen(self):
        g = vacuum_moments(1)
        with pytest.raises(ValueError):
            g.mean[0] = 1.0

    def test_displace_shifts_mean_only(self):
        g = gaussian_propagate(vacuum_moments(1), ("displace", 0, 0.8 + 0.3j))
        assert g.mean[0] == pytest.approx(1.6)
        assert g.mean[1] == pytest.approx(0.6)
        assert np.array_equal(g.cov, np.eye(2))

    def test_phase_rotates_mean(self):
        g = gaussian_propagate(vacuum_moments(1), ("displace", 0, 0.8))
        g = gaussian_propagate(g, ("phase", 0, math.pi / 2))
        assert g.mean[0] == pytest.approx(0.0, abs=1e-15)
        assert g.mean[1] == pytest.approx(1.6)

    def test_squeeze_variances(self):
        g = gaussian_propagate(vacuum_moments(1), ("squeeze", 0, Squeeze(0.7, 0.0)))
        assert g.cov[0, 0] == pytest.approx(math.exp(-1.4), abs=1e-12)
        assert g.cov[1, 1] == pytest.approx(math.exp(1.4), abs=1e-12)

    def test_beamsplit_crosses_quadratures(self):
        g = gaussian_propagate(vacuum_moments(2), ("displace", 0, 0.8))
        g = gaussian_propagate(g, ("beamsplit", 0, 1, math.pi / 4))
        # mode 1 picks up the other arm in its P quadrature
        assert g.mean[0] == pytest.approx(1.6 / math.sqrt(2))
        assert g.mean[2] == pytest.approx(0.0, abs=1e-15)
        assert g.mean[3] == pytest.approx(1.6 / math.sqrt(2))

    def test_unknown_element_rejected(self):
        with pytest.raises(ValueError, match="unknown"):
            gaussian_propagate(vacuum_moments(1), ("rotate", 0, 0.1))

    def test_mode_range_checked(self):
        with pytest.raises(ValueError):
            gaussian_propagate(vacuum_moments(1), ("displace", 1, 0.1))
        with pytest.raises(ValueError):
            gaussian_propagate(vacuum_moments(2), ("beamsplit", 0, 0, 0.1))

    def test_squeeze_takes_squeeze_type(self):
        with pytest.raises(TypeError):
            gaussian_propagate(vacuum_moments(1), ("squeeze", 0, 0.4))

    def test_composite_circuit_matches_fock(self):
        elements = [
            ("displace", 0, 0.8),
            ("squeeze", 1, Squeeze(0.4, 1.1)),
            ("beamsplit", 0, 1, 0.6),
            ("phase", 0, 0.7),
            ("displace", 1, 0.3j),
        ]
        g = vacuum_moments(2)
        st = basis_state(ModeLayout((40, 40)), (0, 0))
        for el in elements:
            g = gaussian_propagate(g, el)
            st = _apply_fock(st, el)
        for mode in (0, 1):
            assert mean_photons_from_moments(g, mode) == pytest.approx(
                st.mean_photons(mode), abs=1e-12
            )
            qx, qp = mean_quadrature(st, mode)
            assert g.mean[2 * mode] == pytest.approx(qx, abs=1e-12)
            assert g.mean[2 * mode + 1] == pytest.approx(qp, abs=1e-12)

    def test_three_mode_seeded_circuit_matches_fock(self):
        rng = np.random.default_rng(11)
        g = vacuum_moments(3)
        st = basis_state(ModeLayout((30, 30, 30)), (0, 0, 0))
        elements = []
        for _ in range(6):
            kind = rng.choice(["displace", "squeeze", "phase", "beamsplit"])
            if kind == "displace":
                el = ("displace", int(rng.integers(3)),
                      complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)))
            elif kind == "squeeze":
                el = ("squeeze", int(rng.integers(3)),
                      Squeeze(float(rng.uniform(0.05, 0.4)),
                              float(rng.uniform(0.0, 2 * math.pi))))
            elif kind == "phase":
                el = ("phase", int(rng.integers(3)),
                      float(rng.uniform(0.0, 2 * math.pi)))
            else:
                a, b = rng.choice(3, size=2, replace=False)
                el = ("beamsplit", int(a), int(b), float(rng.uniform(0.1, 1.2)))
            elements.append(el)
        for el in elements:
            g = gaussian_propagate(g, el)
            st = _apply_fock(st, el)
        for mode in range(3):
            assert mean_photons_from_moments(g, mode) == pytest.approx(
                st.mean_photons(mode), abs=1e-8
            )
            qx, qp = mean_quadrature(st, mode)
            assert g.mean[2 * mode] == pytest.approx(qx, abs=1e-9)
            assert g.mean[2 * mode + 1] == pytest.approx(qp, abs=1e-9)

    def test_propagation_preserves_physicality(self):
        g = vacuum_moments(2)
        for el in [
            ("squeeze", 0, Squeeze(0.9, 0.4)),
            ("beamsplit", 0, 1, 0.7),
            ("phase", 1, 1.9),
        ]:
            g = gaussian_propagate(g, el)
        omega = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))
        eigs = np.linalg.eigvalsh(g.cov + 1j * omega)
        assert eigs.min() > -1e-10


class TestMeanPhotonsFromMoments:
    def test_vacuum(self):
        assert mean_photons_from_moments(vacuum_moments(1), 0) == 0.0

    def test_coherent(self):
        g = gaussian_propagate(vacuum_moments(1), ("displace", 0, 1.2 - 0.5j))
        assert mean_photons_from_moments(g, 0) == pytest.approx(
            abs(1.2 - 0.5j) ** 2, abs=1e-12
        )

    def test_squeezed_vacuum(self):
        g = gaussian_propagate(vacuum_moments(1), ("squeeze", 0, Squeeze(0.7, 0.3)))
        assert mean_photons_from_moments(g, 0) == pytest.approx(
            math.sinh(0.7) ** 2, abs=1e-12
        )

    def test_unphysical_rejected(self):
        bad = GaussianMoments(np.zeros(2), 0.5 * np.eye(2))
        with pytest.raises(ValueError, match="uncertainty"):
            mean_photons_from_moments(bad, 0)

    def test_mode_range(self):
        with pytest.raises(ValueError):
            mean_photons_from_moments(vacuum_moments(1), 1)


@pytest.fixture(scope="module")
def kitten():
    return kitten_direct(KittenSpec(5.0, math.pi / 5, 1, 80))


class TestSqueezeToMatch:

    def test_diagonal_needs_no_squeezing(self, kitten):
        fit = fit_squeezed_cat(kitten)
        res = squeeze_to_match(kitten, fit.alpha, work_cutoff=200)
        assert isinstance(res, MatchResult)
        assert abs(res.r_required) < 1e-6
        assert res.excess_fraction == pytest.approx(fit.squeeze_fraction, abs=1e-6)

    def test_reaches_higher_target(self, kitten):
        fit = fit_squeezed_cat(kitten)
        target = fit.alpha * 1.3
        res = squeeze_to_match(kitten, target, work_cutoff=200)
        assert res.r_required > 0.0
        achieved = fit_squeezed_cat(
            _antisqueezed(kitten.state, res.r_required, 200)
        ).alpha
        assert achieved == pytest.approx(target, abs=1e-6)
        assert 0.0 < res.excess_fraction < 1.0

    def test_lower_target_squeezes(self, kitten):
        fit = fit_squeezed_cat(kitten)
        res = squeeze_to_match(kitten, fit.alpha * 0.8, work_cutoff=200)
        assert res.r_required < 0.0

    def test_target_validation(self, kitten):
        with pytest.raises(ValueError):
            squeeze_to_match(kitten, 0.0)

    def test_displacement_free_source_rejected(self):
        flat = kitten_direct(KittenSpec(3.0, math.pi / 5, 0, 60))
        with pytest.raises(ValueError, match="displacement"):
            squeeze_to_match(flat, 1.0, work_cutoff=120)


def _apply_fock(state: FockState, element) -> FockState:
    name = element[0]
    if name == "displace":
        return displace(state, element[1], element[2])
    if name == "phase":
        return phase_shift(state, element[1], element[2])
    if name == "squeeze":
        return squeeze_op(state, element[1], element[2])
    if name == "beamsplit":
        return beamsplit(state, element[1], element[2], element[3])
    raise ValueError(name)
