"""Unit tests for the model dataclasses."""
import numpy as np
import pytest

from models.cim_state import CimState
from models.edge_objectives import EdgeObjectives
from models.enums import Objective
from models.ising_model import IsingModel
from models.qubo_model import QuboModel
from services.harness_service import prepare_problem


def objectives_of(size: int) -> EdgeObjectives:
    ones = np.ones(size)
    return EdgeObjectives(loss=ones * 2, ber=ones * 0.1, hop=ones, received_power=ones, snr=ones, mean_noise=ones)


class TestEdgeObjectives:
    """Tests for EdgeObjectives."""

    def test_values_by_objective(self):
        objectives = objectives_of(3)

        assert objectives.edge_count == 3
        np.testing.assert_array_equal(objectives.values(Objective.BER), [0.1, 0.1, 0.1])
        np.testing.assert_array_equal(objectives.values(Objective.HOPS), [1.0, 1.0, 1.0])

    def test_shapes_must_agree(self):
        ones = np.ones(3)
        with pytest.raises(ValueError):
            EdgeObjectives(loss=ones, ber=ones, hop=np.ones(2), received_power=ones, snr=ones, mean_noise=ones)


class TestQuboModel:
    """Tests for QuboModel."""

    def test_arrays_are_converted_to_float(self):
        model = QuboModel([[0, 1], [0, 0]], [1, 2], 3)

        assert model.quadratic.dtype == float
        assert model.linear.dtype == float
        assert model.offset == 3.0
        assert model.dimension == 2

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            QuboModel(np.zeros((3, 3)), np.zeros(2))

    def test_diagonal_defaults_to_zeros(self):
        np.testing.assert_array_equal(QuboModel.zeros(3).diagonal, np.zeros(3))

    def test_diagonal_length_checked(self):
        with pytest.raises(ValueError):
            QuboModel(np.zeros((2, 2)), np.zeros(2), diagonal=np.ones(3))

    def test_symmetric_view(self):
        model = QuboModel(np.array([[0.0, 4.0], [0.0, 0.0]]), np.zeros(2))

        np.testing.assert_array_equal(model.symmetric(), [[0.0, 4.0], [4.0, 0.0]])


class TestIsingModel:
    """Tests for IsingModel."""

    def test_diagonal_rejected(self):
        with pytest.raises(ValueError):
            IsingModel(np.eye(2), np.zeros(2))

    def test_sparse_form_matches_dense(self):
        coupling = np.array([[0.0, 1.5, 0.0], [0.0, 0.0, -2.0], [0.0, 0.0, 0.0]])
        model = IsingModel(coupling, np.zeros(3))

        np.testing.assert_array_equal(model.sparse_symmetric().toarray(), model.symmetric())
        assert model.sparse_symmetric().nnz == 4


class TestCimState:
    """Tests for CimState."""

    def test_dimension_and_finiteness(self):
        state = CimState(np.array([0.1, -0.2]), np.array([0.0, 0.0]), 0.0)

        assert state.dimension == 2
        assert state.is_finite()
        assert not CimState(np.array([np.nan]), np.array([0.0]), 0.0).is_finite()

    def test_vector_lengths_must_match(self):
        with pytest.raises(ValueError):
            CimState(np.zeros(2), np.zeros(3), 0.0)


class TestRoutingProblem:
    """Tests for RoutingProblem."""

    def test_bundle_is_consistent(self, chain_instance, loss_weights):
        problem = prepare_problem(chain_instance, loss_weights)

        assert problem.dimension == 3
        assert problem.qubo.dimension == problem.ising.dimension == 3
        assert problem.costs.shape == (3,)
        assert problem.weights is loss_weights

    def test_out_edges_by_tail(self, diamond_instance):
        assert diamond_instance.out_edges() == {0: [0, 1], 1: [2], 2: [3], 3: []}
