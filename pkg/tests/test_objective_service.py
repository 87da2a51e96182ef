"""Unit tests for objective coefficients and scalarization."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from config.constants import FOUR_PI
from models.enums import NormalizationMode, Objective
from schemas.objective_schema import RadioConfig, ScalarWeights, parse_objectives
from services.objective_service import (
    ber_from_snr,
    bit_error,
    compute_edge_objectives,
    normalize,
    path_loss,
    route_totals,
    scalarize,
)
from utils.exceptions import ObjectiveDomainError


class TestRadioDefaults:
    """Link budget defaults."""

    def test_defaults_load_as_stated(self):
        radio = RadioConfig()

        assert radio.path_loss_exponent == 2.7
        assert radio.transmit_power == 50.0
        assert radio.carrier_wavelength == 1.2
        assert radio.modulation_order == 4

    def test_modulation_order_must_be_power_of_two(self):
        with pytest.raises(ValidationError):
            RadioConfig(modulation_order=6)


class TestPathLoss:
    """Tests for path_loss."""

    def test_reference_distance_gives_unit_loss(self, radio):
        assert path_loss(radio.carrier_wavelength / FOUR_PI, radio) == 1.0

    def test_power_law(self, radio):
        near = path_loss(10.0, radio)
        far = path_loss(20.0, radio)

        assert math.isclose(far / near, 2.0 ** radio.path_loss_exponent, rel_tol=1e-12)

    def test_default_link_at_100_m(self, radio):
        """(100 / (1.2 / 4 pi)) ^ 2.7, frozen."""
        assert math.isclose(path_loss(100.0, radio), 142586125.65176174, rel_tol=1e-12)

    def test_array_input_keeps_shape(self, radio):
        result = path_loss(np.array([1.0, 2.0, 3.0]), radio)

        assert result.shape == (3,)
        assert np.all(np.diff(result) > 0)

    @pytest.mark.parametrize("distance", [0.0, -1.0])
    def test_non_positive_distance_raises(self, radio, distance):
        with pytest.raises(ObjectiveDomainError):
            path_loss(distance, radio)

    def test_domain_error_is_value_error(self, radio):
        with pytest.raises(ValueError):
            path_loss(0.0, radio)


class TestBitError:
    """Tests for the bit error probability."""

    def test_zero_snr_is_one_half(self):
        assert ber_from_snr(0.0) == 0.5

    def test_strictly_inside_interval_and_decreasing(self, rng):
        snr = np.sort(10.0 ** rng.uniform(-3, 12, size=10_000))
        ber = ber_from_snr(snr)

        assert np.all(ber > 0.0)
        assert np.all(ber < 0.5)
        assert np.all(np.diff(ber) <= 0.0)

    def test_matches_closed_form_at_moderate_snr(self):
        snr = 3.0
        expected = 0.5 * (1.0 - math.sqrt(snr / (snr + 1.0)))

        assert math.isclose(ber_from_snr(snr), expected, rel_tol=1e-12)

    def test_edge_value_matches_batch(self, triangle_instance, radio):
        objectives = compute_edge_objectives(triangle_instance, radio)

        for edge in range(triangle_instance.edge_count):
            assert math.isclose(bit_error(edge, triangle_instance, radio), objectives.ber[edge], rel_tol=1e-12)

    def test_higher_modulation_order_has_more_errors(self, two_node_instance):
        """log2(M) splits the received power, so QPSK sees half the SNR of BPSK."""
        qpsk = bit_error(0, two_node_instance, RadioConfig(modulation_order=4))
        bpsk = bit_error(0, two_node_instance, RadioConfig(modulation_order=2))

        assert qpsk > bpsk

    def test_missing_edge_raises(self, triangle_instance, radio):
        with pytest.raises(IndexError):
            bit_error(99, triangle_instance, radio)


class TestEdgeObjectives:
    """Tests for compute_edge_objectives."""

    def test_link_budget(self, two_node_instance, radio):
        objectives = compute_edge_objectives(two_node_instance, radio)
        loss = path_loss(100.0, radio)
        received = radio.transmit_power / loss
        snr = received / (math.log2(radio.modulation_order) * 1e-12)

        assert math.isclose(objectives.loss[0], loss, rel_tol=1e-12)
        assert math.isclose(objectives.received_power[0], received, rel_tol=1e-12)
        assert math.isclose(objectives.snr[0], snr, rel_tol=1e-12)
        assert objectives.hop[0] == 1.0

    def test_longer_edge_has_more_loss_and_errors(self, triangle_instance, radio):
        objectives = compute_edge_objectives(triangle_instance, radio)
        lengths = triangle_instance.edge_lengths()
        longest = int(np.argmax(lengths))
        shortest = int(np.argmin(lengths))

        assert objectives.loss[longest] > objectives.loss[shortest]
        assert objectives.ber[longest] > objectives.ber[shortest]

    def test_values_by_objective(self, triangle_instance, radio):
        objectives = compute_edge_objectives(triangle_instance, radio)

        assert objectives.values(Objective.LOSS) is objectives.loss
        assert objectives.stacked().shape == (3, 3)


class TestScalarize:
    """Tests for scalarize and normalize."""

    def test_max_normalization(self):
        np.testing.assert_allclose(normalize(np.array([1.0, 2.0, 4.0]), NormalizationMode.MAX), [0.25, 0.5, 1.0])

    def test_no_normalization_copies(self):
        values = np.array([3.0, 5.0])
        result = normalize(values, NormalizationMode.NONE)

        assert result is not values
        np.testing.assert_array_equal(result, values)

    def test_single_objective_weights(self, triangle_instance, radio, loss_weights):
        objectives = compute_edge_objectives(triangle_instance, radio)
        costs = scalarize(objectives, loss_weights)

        np.testing.assert_allclose(costs, objectives.loss / objectives.loss.max())
        assert costs.max() == 1.0

    def test_hop_weights_give_unit_costs(self, triangle_instance, radio):
        objectives = compute_edge_objectives(triangle_instance, radio)
        costs = scalarize(objectives, ScalarWeights.single(Objective.HOPS))

        np.testing.assert_array_equal(costs, np.ones(3))

    def test_costs_are_non_negative(self, diamond_instance, radio):
        objectives = compute_edge_objectives(diamond_instance, radio)
        costs = scalarize(objectives, ScalarWeights(v1=0.3, v2=0.3, v3=0.4))

        assert np.all(costs >= 0.0)

    def test_empty_edge_set_raises(self, instance_factory, radio):
        instance = instance_factory([(0.0, 0.0), (1.0, 0.0)], [], 0, 1)
        objectives = compute_edge_objectives(instance, radio)

        with pytest.raises(ObjectiveDomainError):
            scalarize(objectives, ScalarWeights(v1=1.0, v2=0.0, v3=0.0))

    def test_route_totals(self, triangle_instance, radio):
        objectives = compute_edge_objectives(triangle_instance, radio)
        loss, ber, hops = route_totals(objectives, [0, 2])

        assert math.isclose(loss, objectives.loss[0] + objectives.loss[2])
        assert math.isclose(ber, objectives.ber[0] + objectives.ber[2])
        assert hops == 2.0


class TestScalarWeights:
    """Validation and parsing of ScalarWeights."""

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValidationError):
            ScalarWeights(v1=0.5, v2=0.4, v3=0.0)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValidationError):
            ScalarWeights(v1=1.2, v2=-0.2, v3=0.0)

    def test_parse_three_values(self):
        weights = ScalarWeights.parse("0.33,0.33,0.34")

        assert weights.as_tuple() == (0.33, 0.33, 0.34)

    def test_parse_two_values_means_loss_and_ber(self):
        weights = ScalarWeights.parse("0.5,0.5")

        assert weights.active_objectives() == [Objective.LOSS, Objective.BER]

    def test_parse_objectives_canonical_order(self):
        assert parse_objectives("ber, loss") == [Objective.LOSS, Objective.BER]

    def test_parse_unknown_objective(self):
        with pytest.raises(ValueError):
            parse_objectives("loss,latency")
