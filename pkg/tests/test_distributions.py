"""Distribution construction, corruption, margins, and CSV round trips."""

import math

import numpy as np
import pytest
from hypothesis import given, settings

import helpers
from potmin import (DiscreteDistribution, LabeledPoint, MarginCertificate,
                    certify_margin, corrupt_rcn, l1_margin, make_counterexample,
                    mean_label_feature)


def atoms_by_key(dist):
    return {
        (int(dist.ys[i]), tuple(dist.xs[i])): float(dist.weights[i])
        for i in range(dist.n_atoms)
    }


class TestLabeledPoint:
    def test_valid(self):
        p = LabeledPoint([1.0, -2.0], -1)
        assert p.dimension == 2
        assert p.y == -1

    @pytest.mark.parametrize("x,y", [
        ([1.0], 0), ([1.0], 2), ([np.inf], 1), ([], 1),
    ])
    def test_invalid_rejected(self, x, y):
        with pytest.raises(ValueError):
            LabeledPoint(x, y)

    def test_immutable(self):
        p = LabeledPoint([1.0, 2.0], 1)
        with pytest.raises(ValueError):
            p.x[0] = 3.0


class TestConstruction:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError, match="sum to 1"):
            DiscreteDistribution([[1.0]], [1], [0.9])

    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError, match="positive"):
            DiscreteDistribution([[1.0], [2.0]], [1, 1], [1.0, 0.0])

    def test_labels_validated(self):
        with pytest.raises(ValueError, match="label"):
            DiscreteDistribution([[1.0]], [2], [1.0])

    def test_feature_array_must_be_two_dimensional(self):
        with pytest.raises(ValueError, match="2-d"):
            DiscreteDistribution(np.ones((1, 2, 2)), [1], [1.0])

    def test_duplicates_merge_by_exact_equality(self):
        dist = DiscreteDistribution([[1.0], [1.0]], [1, 1], [0.4, 0.6])
        assert dist.n_atoms == 1
        assert dist.weights[0] == 1.0

    def test_nearby_but_unequal_atoms_stay_separate(self):
        dist = DiscreteDistribution([[1.0], [1.0 + 2 ** -52]], [1, 1], [0.5, 0.5])
        assert dist.n_atoms == 2

    def test_same_x_opposite_labels_stay_separate(self):
        dist = DiscreteDistribution([[1.0], [1.0]], [1, -1], [0.5, 0.5])
        assert dist.n_atoms == 2

    def test_first_seen_order_is_kept(self):
        dist = DiscreteDistribution(
            [[2.0], [1.0], [2.0]], [1, -1, 1], [0.25, 0.5, 0.25])
        assert dist.xs[:, 0].tolist() == [2.0, 1.0]
        assert dist.weights.tolist() == [0.5, 0.5]

    def test_from_atoms(self):
        dist = DiscreteDistribution.from_atoms(
            [(LabeledPoint([0.0, 1.0], 1), 0.5), (LabeledPoint([1.0, 0.0], -1), 0.5)])
        assert dist.dimension == 2
        assert dist.n_atoms == 2

    def test_immutable_arrays(self):
        dist = make_counterexample(0.1)
        with pytest.raises(ValueError):
            dist.weights[0] = 0.3


class TestCounterexample:
    def test_atoms_at_parameter_five_percent(self):
        dist = make_counterexample(0.05)
        assert dist.n_atoms == 3
        assert np.all(dist.ys == 1)
        np.testing.assert_allclose(
            dist.xs,
            [[1.0, 0.0],
             [0.05, math.sqrt(1.0 - 0.05 ** 2)],
             [0.05, -0.1]],
            rtol=0, atol=0)
        assert dist.weights.tolist() == [0.25, 0.25, 0.5]

    def test_total_mass_one(self):
        for gamma in np.linspace(0.01, 0.99, 23):
            assert make_counterexample(float(gamma)).weights.sum() == 1.0

    def test_boundary_parameter_accepted(self):
        # the error-rate claim only holds strictly below the threshold,
        # but the builder is permissive on (0, 1)
        assert make_counterexample(0.0901).n_atoms == 3
        assert make_counterexample(0.99).n_atoms == 3

    @pytest.mark.parametrize("gamma", [0.0, 1.0, -0.2, 1.5])
    def test_out_of_range_rejected(self, gamma):
        with pytest.raises(ValueError, match="gamma"):
            make_counterexample(gamma)


class TestCorruptRcn:
    def test_single_atom_split(self):
        dist = DiscreteDistribution([[2.0, 0.0]], [1], [1.0])
        noisy = corrupt_rcn(dist, 0.25)
        assert atoms_by_key(noisy) == {
            (1, (2.0, 0.0)): 0.75,
            (-1, (2.0, 0.0)): 0.25,
        }

    def test_counterexample_split_weights(self):
        noisy = corrupt_rcn(make_counterexample(0.05), 0.1)
        assert noisy.n_atoms == 6
        table = atoms_by_key(noisy)
        assert table[(1, (1.0, 0.0))] == 0.225
        assert table[(-1, (1.0, 0.0))] == 0.025

    def test_label_symmetric_distribution_is_a_fixed_point(self):
        dist = DiscreteDistribution([[1.0], [1.0]], [1, -1], [0.5, 0.5])
        noisy = corrupt_rcn(dist, 0.25)
        assert atoms_by_key(noisy) == atoms_by_key(dist)

    @pytest.mark.parametrize("eta", [0.0, 0.5, -0.1, 0.7, 1.0])
    def test_rate_boundaries_rejected(self, eta):
        with pytest.raises(ValueError, match="eta"):
            corrupt_rcn(make_counterexample(0.1), eta)

    def test_feature_support_preserved(self):
        dist = make_counterexample(0.17)
        noisy = corrupt_rcn(dist, 0.3)
        assert {tuple(x) for x in noisy.xs} == {tuple(x) for x in dist.xs}

    @settings(max_examples=60, deadline=None)
    @given(dist=helpers.small_distributions(), eta=helpers.etas)
    def test_mass_preserved(self, dist, eta):
        assert abs(corrupt_rcn(dist, eta).weights.sum() - 1.0) <= 1e-12

    @settings(max_examples=60, deadline=None)
    @given(dist=helpers.small_distributions(), eta1=helpers.etas, eta2=helpers.etas)
    def test_composition_law(self, dist, eta1, eta2):
        twice = corrupt_rcn(corrupt_rcn(dist, eta1), eta2)
        once = corrupt_rcn(dist, eta1 + eta2 - 2.0 * eta1 * eta2)
        a, b = atoms_by_key(twice), atoms_by_key(once)
        assert a.keys() == b.keys()
        for key in a:
            assert a[key] == pytest.approx(b[key], abs=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(dist=helpers.small_distributions(), eta=helpers.etas)
    def test_centroid_contracts_by_one_minus_two_eta(self, dist, eta):
        clean = mean_label_feature(dist)
        noisy = mean_label_feature(corrupt_rcn(dist, eta))
        np.testing.assert_allclose(noisy, (1.0 - 2.0 * eta) * clean, atol=1e-12)


class TestMeanLabelFeature:
    def test_matches_closed_form_for_counterexample(self):
        for gamma in np.linspace(0.01, 0.45, 15):
            gamma = float(gamma)
            m = mean_label_feature(make_counterexample(gamma))
            expected = np.array([
                0.25 + 3.0 * gamma / 4.0,
                math.sqrt(1.0 - gamma * gamma) / 4.0 - gamma,
            ])
            np.testing.assert_allclose(m, expected, atol=1e-15)

    def test_value_at_five_percent(self):
        m = mean_label_feature(make_counterexample(0.05))
        np.testing.assert_allclose(m, [0.2875, 0.19968730444297722],
                                   rtol=0, atol=1e-15)

    def test_cancellation_gives_zero_vector(self):
        dist = DiscreteDistribution([[3.0, -1.0], [3.0, -1.0]], [1, -1], [0.5, 0.5])
        assert mean_label_feature(dist).tolist() == [0.0, 0.0]


class TestL1Margin:
    def test_counterexample_margin_is_exactly_gamma(self):
        for gamma in np.linspace(0.01, 0.49, 25):
            dist = make_counterexample(float(gamma))
            assert l1_margin(dist, [1.0, 0.0]) == float(gamma)

    def test_second_axis_margin(self):
        # atom margins 0, sqrt(1 - 0.0025), -0.1; the minimum is -0.1
        assert l1_margin(make_counterexample(0.05), [0.0, 1.0]) == -0.1

    def test_exact_scale_invariance_for_binary_scales(self):
        dist = make_counterexample(0.07)
        w = np.array([0.3, -1.7])
        base = l1_margin(dist, w)
        for c in (0.25, 0.5, 2.0, 8.0):
            assert l1_margin(dist, c * w) == base

    @settings(max_examples=60, deadline=None)
    @given(dist=helpers.small_distributions())
    def test_scale_invariance(self, dist):
        rng = np.random.default_rng(0)
        w = rng.normal(size=dist.dimension)
        if not np.any(w != 0):
            w[0] = 1.0
        m1 = l1_margin(dist, w)
        m2 = l1_margin(dist, 3.7 * w)
        assert m2 == pytest.approx(m1, rel=1e-12, abs=1e-15)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            l1_margin(make_counterexample(0.1), [0.0, 0.0])


class TestMarginCertificate:
    def test_separating_direction_certified(self):
        cert = certify_margin(make_counterexample(0.05), [1.0, 0.0])
        assert isinstance(cert, MarginCertificate)
        assert cert.margin == 0.05

    def test_non_separating_direction_rejected(self):
        with pytest.raises(ValueError, match="margin"):
            certify_margin(make_counterexample(0.05), [0.0, 1.0])

    def test_zero_separator_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            MarginCertificate(np.zeros(2), 0.1)


class TestCsv:
    def test_round_trip_exact(self, tmp_path):
        rng = np.random.default_rng(3)
        dist = helpers.random_distribution(rng, max_dim=4, max_atoms=7)
        path = tmp_path / "dist.csv"
        dist.to_csv(path)
        loaded = DiscreteDistribution.from_csv(path)
        assert loaded.n_atoms == dist.n_atoms
        np.testing.assert_array_equal(loaded.xs, dist.xs)
        np.testing.assert_array_equal(loaded.ys, dist.ys)
        np.testing.assert_array_equal(loaded.weights, dist.weights)

    def test_header_shape(self, tmp_path):
        path = tmp_path / "d.csv"
        make_counterexample(0.25).to_csv(path)
        header = path.read_text().splitlines()[0]
        assert header == "x1,x2,y,weight"

    def test_bad_label_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x1,y,weight\n1.0,2,1.0\n")
        with pytest.raises(ValueError, match="label"):
            DiscreteDistribution.from_csv(path)

    def test_bad_weight_sum_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x1,y,weight\n1.0,1,0.5\n2.0,1,0.4\n")
        with pytest.raises(ValueError, match="sum to 1"):
            DiscreteDistribution.from_csv(path)

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,weight\n1.0,1,1.0\n")
        with pytest.raises(ValueError, match="header"):
            DiscreteDistribution.from_csv(path)

    def test_margins_helper(self):
        dist = make_counterexample(0.05)
        np.testing.assert_allclose(dist.margins([1.0, 0.0]), [1.0, 0.05, 0.05])
