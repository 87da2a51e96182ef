"""Unit tests for the penalized QUBO construction."""
import itertools
import math

import numpy as np
import pytest
from pydantic import ValidationError

from models.qubo_model import QuboModel
from models.variable_map import VariableMap
from schemas.penalty_schema import PenaltyConfig
from services.objective_service import compute_edge_objectives, scalarize
from services.oracle_service import brute_force_qubo, build_route_solution, scalar_optimum
from services.qubo_service import build_qubo, default_penalties, energies, energy, penalty_terms
from utils.exceptions import DimensionMismatchError


def _indicator(size, edges):
    x = np.zeros(size, dtype=int)
    x[list(edges)] = 1
    return x


class TestVariableMap:
    """Edge/variable bijection."""

    def test_follows_edge_order(self, triangle_instance):
        variable_map = VariableMap.from_instance(triangle_instance)

        assert variable_map.edges == ((0, 1), (0, 2), (1, 2))
        assert variable_map.index_of(1, 2) == 2
        assert variable_map.edge_of(1) == (0, 2)
        assert variable_map.indices_from(0) == [0, 1]
        assert variable_map.indices_into(2) == [1, 2]

    def test_unsorted_edges_rejected(self):
        with pytest.raises(ValueError):
            VariableMap(((1, 0), (0, 1)))


class TestDefaultPenalties:
    """Tests for default_penalties."""

    def test_derived_from_cost_sum(self):
        penalties = default_penalties(np.array([0.5, 1.0, 1.5]))

        assert penalties.p1 == 6.0
        assert penalties.p2 == 6.0
        assert penalties.p3 == 12.0
        assert penalties.balance_dominates

    def test_floor_for_tiny_costs(self):
        penalties = default_penalties(np.array([1e-6]))

        assert penalties.p1 == 1.0
        assert penalties.p3 == 2.0

    def test_parse(self):
        assert PenaltyConfig.parse("1,2,3") == PenaltyConfig(p1=1.0, p2=2.0, p3=3.0)

    def test_negative_penalty_rejected(self):
        with pytest.raises(ValidationError):
            PenaltyConfig(p1=-1.0, p2=1.0, p3=1.0)


class TestBuildQubo:
    """Tests for build_qubo and energy."""

    def test_upper_triangular_storage(self, diamond_instance, radio, balanced_weights):
        costs = scalarize(compute_edge_objectives(diamond_instance, radio), balanced_weights)
        model = build_qubo(diamond_instance, costs, default_penalties(costs))

        assert model.dimension == 4
        assert np.all(np.tril(model.quadratic) == 0.0)

    def test_path_energy_equals_route_cost(self, triangle_instance, radio, balanced_weights):
        """A simple S-D path violates nothing, so its energy is its cost."""
        costs = scalarize(compute_edge_objectives(triangle_instance, radio), balanced_weights)
        model = build_qubo(triangle_instance, costs, default_penalties(costs))

        for path in ([1], [0, 2]):
            x = _indicator(3, path)
            assert math.isclose(energy(model, x), costs[path].sum(), rel_tol=1e-12, abs_tol=1e-12)

    def test_energy_decomposes_into_cost_and_penalties(self, diamond_instance, radio, balanced_weights):
        """E(x) = f(x) + p1 t1 + p2 t2 + p3 t3 for every assignment."""
        costs = scalarize(compute_edge_objectives(diamond_instance, radio), balanced_weights)
        penalties = PenaltyConfig(p1=3.0, p2=5.0, p3=7.0)
        model = build_qubo(diamond_instance, costs, penalties)

        for bits in itertools.product((0, 1), repeat=4):
            x = np.array(bits)
            source, destination, balance = penalty_terms(diamond_instance, x)
            expected = costs @ x + 3.0 * source + 5.0 * destination + 7.0 * balance
            assert math.isclose(energy(model, x), expected, rel_tol=1e-12, abs_tol=1e-12)

    def test_empty_selection_pays_endpoint_penalties(self, chain_instance):
        costs = np.array([1.0, 1.0, 1.0])
        model = build_qubo(chain_instance, costs, PenaltyConfig(p1=2.0, p2=4.0, p3=8.0))

        assert energy(model, np.zeros(3, dtype=int)) == 6.0

    def test_batch_energies_match(self, diamond_instance):
        costs = np.array([1.0, 2.0, 3.0, 4.0])
        model = build_qubo(diamond_instance, costs, default_penalties(costs))
        block = np.array(list(itertools.product((0, 1), repeat=4)))

        expected = [energy(model, row) for row in block]
        np.testing.assert_allclose(energies(model, block), expected, rtol=1e-12)

    def test_diagonal_restores_the_squared_penalties(self, diamond_instance):
        """With x_k^2 kept apart, fractional x gives cost plus the squared violations."""
        costs = np.array([1.0, 2.0, 3.0, 4.0])
        model = build_qubo(diamond_instance, costs, PenaltyConfig(p1=5.0, p2=7.0, p3=11.0))
        x = np.array([0.3, 0.6, 0.25, 0.9])

        relaxed = x @ model.quadratic @ x + (model.linear - model.diagonal) @ x + model.diagonal @ x ** 2 + model.offset
        expected = (costs @ x + 5.0 * (x[0] + x[1] - 1.0) ** 2 + 7.0 * (x[2] + x[3] - 1.0) ** 2
                    + 11.0 * ((x[2] - x[0]) ** 2 + (x[3] - x[1]) ** 2))
        np.testing.assert_array_equal(model.diagonal, [16.0, 16.0, 18.0, 18.0])
        assert math.isclose(relaxed, expected, rel_tol=1e-12)

    def test_cost_length_mismatch_raises(self, triangle_instance):
        with pytest.raises(DimensionMismatchError):
            build_qubo(triangle_instance, np.ones(2), PenaltyConfig(p1=1.0, p2=1.0, p3=2.0))

    def test_energy_length_mismatch_raises(self, triangle_instance):
        model = build_qubo(triangle_instance, np.ones(3), default_penalties(np.ones(3)))

        with pytest.raises(DimensionMismatchError):
            energy(model, np.zeros(4, dtype=int))

    def test_non_binary_assignment_raises(self, triangle_instance):
        model = build_qubo(triangle_instance, np.ones(3), default_penalties(np.ones(3)))

        with pytest.raises(DimensionMismatchError):
            energy(model, np.array([0, 2, 1]))

    def test_weak_balance_penalty_logs_warning(self, triangle_instance, caplog):
        with caplog.at_level("WARNING"):
            build_qubo(triangle_instance, np.ones(3), PenaltyConfig(p1=5.0, p2=5.0, p3=1.0))

        assert "p3=1.0" in caplog.text


class TestPenaltyCorrectness:
    """Default penalties make the QUBO minimizer the optimal path."""

    @pytest.mark.parametrize("fixture", ["two_node_instance", "triangle_instance", "diamond_instance", "chain_instance"])
    def test_brute_force_minimizer_is_optimal_path(self, fixture, request, radio, balanced_weights):
        instance = request.getfixturevalue(fixture)
        costs = scalarize(compute_edge_objectives(instance, radio), balanced_weights)
        model = build_qubo(instance, costs, default_penalties(costs))

        x, value = brute_force_qubo(model)
        optimum = scalar_optimum(instance, costs)

        route = build_route_solution(instance, np.flatnonzero(x), costs=costs)

        assert route.is_simple_path
        assert math.isclose(value, optimum.scalar_value, rel_tol=1e-9)
        assert math.isclose(route.scalar_value, optimum.scalar_value, rel_tol=1e-9)


class TestQuboModel:
    """QuboModel storage convention."""

    def test_ordered_pairs_fold(self):
        matrix = np.array([[2.0, 1.0], [3.0, 0.0]])
        model = QuboModel.from_ordered_pairs(matrix, np.array([1.0, 1.0]), 0.5)

        assert model.quadratic[0, 1] == 4.0
        np.testing.assert_array_equal(model.linear, [3.0, 1.0])
        np.testing.assert_array_equal(model.diagonal, [2.0, 0.0])
        assert model.offset == 0.5

    def test_lower_triangle_rejected(self):
        with pytest.raises(ValueError):
            QuboModel(np.array([[0.0, 0.0], [1.0, 0.0]]), np.zeros(2))
