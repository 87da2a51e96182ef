"""Unit tests for instance generation and the network schema."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from config.constants import GeneratorDefaults
from schemas.network_schema import EdgeRecord, GeneratorConfig, NetworkInstance, NodeRecord
from services.network_service import (
    calibrated_radius,
    draw_topology,
    generate_instance,
    pair_distance_cdf,
    require_reachable,
)
from utils.exceptions import ConfigurationError, UnreachableDestinationError
from utils.numeric import dbm_to_watts


class TestNoiseConversion:
    """dBm to watt conversion."""

    def test_minus_90_dbm_is_one_picowatt(self):
        assert math.isclose(dbm_to_watts(-90.0), 1e-12, rel_tol=1e-12)

    def test_minus_30_dbm_is_one_microwatt(self):
        assert math.isclose(dbm_to_watts(-30.0), 1e-6, rel_tol=1e-12)

    def test_array_input(self):
        watts = dbm_to_watts(np.array([-90.0, -30.0, 30.0]))
        np.testing.assert_allclose(watts, [1e-12, 1e-6, 1.0], rtol=1e-12)


class TestGenerateInstance:
    """Tests for generate_instance."""

    def test_two_nodes_at_maximum_radius_are_fully_connected(self):
        """Radius >= area * sqrt(2) connects every ordered pair."""
        config = GeneratorConfig(node_count=2, connection_radius=1000.0 * math.sqrt(2) + 1.0, seed=3)
        instance = generate_instance(config)

        assert [edge.as_tuple() for edge in instance.edges] == [(0, 1), (1, 0)]
        assert instance.source == 0
        assert instance.destination == 1

    def test_same_seed_gives_identical_instance(self):
        config = GeneratorConfig(node_count=10, seed=42)

        assert generate_instance(config) == generate_instance(config)

    def test_different_seeds_differ(self):
        first = generate_instance(GeneratorConfig(node_count=10, seed=1))
        second = generate_instance(GeneratorConfig(node_count=10, seed=2))

        assert first != second

    def test_edges_match_distance_rule(self):
        """Edge (i, j) exists iff i != j and d_ij <= radius."""
        radius = 400.0
        instance = generate_instance(GeneratorConfig(node_count=15, connection_radius=radius, seed=5))
        positions = instance.positions()
        edges = {edge.as_tuple() for edge in instance.edges}

        for i in range(instance.node_count):
            for j in range(instance.node_count):
                expected = i != j and np.linalg.norm(positions[i] - positions[j]) <= radius
                assert ((i, j) in edges) == expected

    def test_nodes_inside_area_with_positive_noise(self):
        instance = generate_instance(GeneratorConfig(node_count=20, seed=9))

        positions = instance.positions()
        assert np.all((positions >= 0.0) & (positions <= GeneratorDefaults.AREA_SIDE_M))
        assert np.all(instance.noise_powers() > 0.0)

    def test_default_endpoints_follow_id_rule(self):
        instance = generate_instance(GeneratorConfig(node_count=12, seed=4))
        tails = {edge.tail for edge in instance.edges}
        heads = {edge.head for edge in instance.edges}

        assert instance.source == min(tails)
        assert instance.destination == max(heads)
        assert instance.is_destination_reachable()

    def test_endpoint_overrides(self):
        config = GeneratorConfig(node_count=6, connection_radius=2000.0, seed=1, source=4, destination=2)
        instance = generate_instance(config)

        assert (instance.source, instance.destination) == (4, 2)

    def test_unreachable_after_retries_raises(self):
        config = GeneratorConfig(node_count=10, connection_radius=1.0, seed=0, max_retries=3)

        with pytest.raises(UnreachableDestinationError, match="destination unreachable"):
            generate_instance(config)

    def test_override_must_be_a_node(self):
        with pytest.raises(ValidationError):
            GeneratorConfig(node_count=3, source=5)


class TestRadiusCalibration:
    """Radius calibration against the tabulated edge densities."""

    def test_distance_cdf_endpoints(self):
        assert pair_distance_cdf(0.0) == 0.0
        assert math.isclose(pair_distance_cdf(1.0), math.pi - 8.0 / 3.0 + 0.5)

    def test_radius_solves_expected_edge_count(self):
        for nodes, target in GeneratorDefaults.TABLE_EDGE_TARGETS.items():
            radius = calibrated_radius(nodes)
            expected = nodes * (nodes - 1) * pair_distance_cdf(radius / GeneratorDefaults.AREA_SIDE_M)
            assert math.isclose(expected, target, rel_tol=1e-9)

    def test_unreachable_target_raises(self):
        with pytest.raises(ConfigurationError):
            calibrated_radius(4, target_edges=100)

    def test_mean_edge_count_matches_table_for_ten_nodes(self):
        """Mean |E| over 100 draws is within 20% of the 10-node target (30)."""
        config = GeneratorConfig(node_count=10, seed=0)
        radius = calibrated_radius(10)
        counts = []
        for seed in range(100):
            _, _, edges = draw_topology(config, radius, np.random.default_rng(seed))
            counts.append(len(edges))

        assert abs(np.mean(counts) - 30.0) <= 0.2 * 30.0


class TestNetworkInstanceValidation:
    """Schema invariants of NetworkInstance."""

    def _nodes(self, count):
        return [NodeRecord(id=i, x=float(i), y=0.0, noise_power=1e-12) for i in range(count)]

    def test_source_equals_destination_rejected(self):
        with pytest.raises(ValidationError):
            NetworkInstance(nodes=self._nodes(2), edges=[], source=1, destination=1)

    def test_duplicate_edge_rejected(self):
        edges = [EdgeRecord(tail=0, head=1), EdgeRecord(tail=0, head=1)]
        with pytest.raises(ValidationError, match="duplicate edge"):
            NetworkInstance(nodes=self._nodes(2), edges=edges, source=0, destination=1)

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError, match="self-loop"):
            EdgeRecord(tail=2, head=2)

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(ValidationError, match="unknown node id"):
            NetworkInstance(nodes=self._nodes(2), edges=[EdgeRecord(tail=0, head=7)], source=0, destination=1)

    def test_non_positive_noise_rejected(self):
        with pytest.raises(ValidationError):
            NodeRecord(id=0, x=0.0, y=0.0, noise_power=0.0)

    def test_edges_are_sorted(self):
        edges = [EdgeRecord(tail=1, head=0), EdgeRecord(tail=0, head=1)]
        instance = NetworkInstance(nodes=self._nodes(2), edges=edges, source=0, destination=1)

        assert [edge.as_tuple() for edge in instance.edges] == [(0, 1), (1, 0)]

    def test_require_reachable(self, two_node_instance):
        assert require_reachable(two_node_instance) is two_node_instance
        unreachable = NetworkInstance(nodes=self._nodes(2), edges=[], source=0, destination=1)
        with pytest.raises(UnreachableDestinationError):
            require_reachable(unreachable)
