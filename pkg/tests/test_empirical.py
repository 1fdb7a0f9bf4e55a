"""Tail selection and the empirical spectral measure."""

import math

import numpy as np
import pytest

from specmeasure.empirical import (
    AngularSample,
    DiscreteSpectralMeasure,
    empirical_spectral_measure,
    empirical_spectral_prob,
    select_extremes,
)
from specmeasure.pseudo_obs import BivariateSample, pseudo_observations

from oracles import membership_oracle

HALF_PI = math.pi / 2


def data_with_ranks(r1, r2):
    """Tie-free sample whose columnwise ranks are the given vectors."""
    return BivariateSample(
        np.column_stack([10.0 * np.asarray(r1), 10.0 * np.asarray(r2)])
    )


@pytest.fixture
def four_point():
    # rank pairs (4,4), (3,1), (2,3), (1,2)
    return pseudo_observations(data_with_ranks([4, 3, 2, 1], [4, 1, 3, 2]))


class TestSelection:
    def test_hand_case_max_norm(self, four_point):
        ang = select_extremes(four_point, 2, math.inf)
        np.testing.assert_array_equal(ang.indices, [0, 1, 2])
        np.testing.assert_allclose(
            ang.angles,
            [math.pi / 4, math.atan(2.0), math.atan(2.0 / 3.0)],
            rtol=1e-15,
        )

    def test_hand_case_sum_norm(self, four_point):
        # the weakest point now qualifies: 1/4 + 1/3 >= 1/2
        ang = select_extremes(four_point, 2, 1.0)
        np.testing.assert_array_equal(ang.indices, [0, 1, 2, 3])

    def test_k_equals_n_selects_everything(self, four_point):
        for p in [1.0, 2.0, 3.5, math.inf]:
            ang = select_extremes(four_point, 4, p)
            assert ang.n_members == 4

    def test_exact_threshold_tie_is_a_member(self):
        # ranks give 1/3 + 1/6 = 1/2 exactly at the k = 2 threshold;
        # integer arithmetic must not lose the equality
        pobs = pseudo_observations(
            data_with_ranks([4, 1, 2, 3, 5, 6], [1, 2, 3, 4, 5, 6])
        )
        ang = select_extremes(pobs, 2, 1.0)
        assert 0 in ang.indices

    def test_matches_exact_rank_rule(self):
        rng = np.random.default_rng(1818)
        n = 60
        for p in [1.0, 2.0, 3.0, 5.0, math.inf]:
            for _ in range(5):
                pobs = pseudo_observations(
                    BivariateSample(rng.standard_normal((n, 2)))
                )
                m = np.rint(pobs.u * n).astype(int)
                for k in [1, 5, 17, 60]:
                    ang = select_extremes(pobs, k, p)
                    expected = [
                        i
                        for i in range(n)
                        if membership_oracle(int(m[i, 0]), int(m[i, 1]), k, p)
                    ]
                    np.testing.assert_array_equal(ang.indices, expected)

    def test_big_integer_fallback(self):
        # p = 16 at n = 50 overflows int64 inside the comparison, so the
        # arbitrary-precision branch must take over
        rng = np.random.default_rng(77)
        n = 50
        pobs = pseudo_observations(BivariateSample(rng.standard_normal((n, 2))))
        m = np.rint(pobs.u * n).astype(int)
        for k in [2, 9, 25]:
            ang = select_extremes(pobs, k, 16.0)
            expected = [
                i for i in range(n) if membership_oracle(int(m[i, 0]), int(m[i, 1]), k, 16.0)
            ]
            np.testing.assert_array_equal(ang.indices, expected)

    def test_fractional_order_agrees_with_float_rule(self):
        rng = np.random.default_rng(21)
        n = 40
        pobs = pseudo_observations(BivariateSample(rng.standard_normal((n, 2))))
        m = np.rint(pobs.u * n).astype(int)
        ang = select_extremes(pobs, 7, 2.5)
        expected = [
            i for i in range(n) if membership_oracle(int(m[i, 0]), int(m[i, 1]), 7, 2.5)
        ]
        np.testing.assert_array_equal(ang.indices, expected)

    def test_membership_shrinks_as_order_grows(self):
        rng = np.random.default_rng(303)
        pobs = pseudo_observations(BivariateSample(rng.standard_normal((80, 2))))
        orders = [1.0, 1.5, 2.0, 4.0, 10.0, math.inf]
        for k in [3, 12, 40]:
            sets = [set(select_extremes(pobs, k, p).indices.tolist()) for p in orders]
            for smaller, larger in zip(sets[1:], sets[:-1]):
                assert smaller <= larger

    def test_never_empty(self):
        rng = np.random.default_rng(62)
        pobs = pseudo_observations(BivariateSample(rng.standard_normal((30, 2))))
        for p in [1.0, 2.0, math.inf]:
            for k in range(1, 31):
                assert select_extremes(pobs, k, p).n_members >= 1

    @pytest.mark.parametrize("k", [0, -1, 31, 2.5])
    def test_invalid_k(self, k):
        pobs = pseudo_observations(
            BivariateSample(np.random.default_rng(0).standard_normal((30, 2)))
        )
        with pytest.raises((ValueError, TypeError)):
            select_extremes(pobs, k, 1.0)


class TestEmpiricalMeasure:
    def test_hand_case_cdf(self, four_point):
        phi = empirical_spectral_measure(select_extremes(four_point, 2, math.inf))
        assert phi.cdf(math.pi / 4) == pytest.approx(1.0)
        assert phi.total_mass == pytest.approx(1.5)

    def test_probability_normalization(self, four_point):
        q = empirical_spectral_prob(select_extremes(four_point, 2, math.inf))
        assert q.total_mass == pytest.approx(1.0, abs=1e-15)
        assert q.cdf(math.pi / 4) == pytest.approx(2.0 / 3.0)

    def test_prob_is_rescaled_measure(self, four_point):
        ang = select_extremes(four_point, 2, 1.0)
        phi = empirical_spectral_measure(ang)
        q = empirical_spectral_prob(ang)
        np.testing.assert_allclose(
            q.weights, phi.weights * ang.k / ang.n_members, rtol=1e-15
        )
        assert phi.cdf(HALF_PI) == pytest.approx(ang.n_members / ang.k)

    def test_single_member_point_mass(self):
        ang = AngularSample(
            indices=np.array([3]),
            angles=np.array([0.9]),
            scores=np.array([0.1]),
            k=5,
            p=1.0,
            n=10,
        )
        q = empirical_spectral_prob(ang)
        assert q.n_atoms == 1
        assert q.weights[0] == 1.0

    def test_duplicate_angles_merge(self):
        ang = AngularSample(
            indices=np.array([0, 1, 2]),
            angles=np.array([0.3, 0.7, 0.3]),
            scores=np.array([-0.2, 0.2, -0.2]),
            k=2,
            p=1.0,
            n=6,
        )
        phi = empirical_spectral_measure(ang)
        assert phi.n_atoms == 2
        np.testing.assert_allclose(phi.weights, [1.0, 0.5])


class TestDiscreteSpectralMeasure:
    def test_cdf_is_right_continuous_step(self):
        phi = DiscreteSpectralMeasure.from_atoms([0.5, 0.2], [1.0, 2.0], 1.0)
        np.testing.assert_allclose(
            phi.cdf(np.array([0.1, 0.2, 0.3, 0.5, 1.5])), [0.0, 2.0, 2.0, 3.0, 3.0]
        )

    def test_from_atoms_sorts_and_merges(self):
        phi = DiscreteSpectralMeasure.from_atoms([0.9, 0.1, 0.9], [1.0, 1.0, 1.0], 2.0)
        np.testing.assert_allclose(phi.angles, [0.1, 0.9])
        np.testing.assert_allclose(phi.weights, [1.0, 2.0])

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            DiscreteSpectralMeasure(np.array([0.5, 0.2]), np.array([1.0, 1.0]), 1.0)

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(ValueError, match="positive"):
            DiscreteSpectralMeasure(np.array([0.2, 0.5]), np.array([1.0, 0.0]), 1.0)

    def test_rejects_out_of_range_angle(self):
        with pytest.raises(ValueError, match="pi/2"):
            DiscreteSpectralMeasure(np.array([2.0]), np.array([1.0]), 1.0)

    def test_scaled(self):
        phi = DiscreteSpectralMeasure.from_atoms([0.4], [2.0], 1.0)
        assert phi.scaled(0.5).total_mass == pytest.approx(1.0)

    def test_moment_sums_point_mass_diagonal(self):
        phi = DiscreteSpectralMeasure.from_atoms([math.pi / 4], [1.0], 2.0)
        s, c = phi.moment_sums()
        assert s == pytest.approx(math.sqrt(0.5), rel=1e-15)
        assert c == pytest.approx(math.sqrt(0.5), rel=1e-15)
