"""Pytest configuration and fixtures for testing."""
import os
from pathlib import Path
from typing import Callable, List, Sequence, Tuple

import numpy as np
import pytest

# Keep test runs self-contained before importing toolkit modules
os.environ.setdefault('ROUTING_WORKERS', '2')
os.environ.setdefault('LOG_LEVEL', 'WARNING')

from schemas.cim_schema import CimConfig
from schemas.network_schema import EdgeRecord, GeneratorConfig, NetworkInstance, NodeRecord
from schemas.objective_schema import RadioConfig, ScalarWeights
from services.network_service import generate_instance

NOISE_WATTS = 1e-12


def build_instance(positions: Sequence[Tuple[float, float]], edges: Sequence[Tuple[int, int]],
                   source: int, destination: int, noise: float = NOISE_WATTS) -> NetworkInstance:
    """Hand-built instance with uniform node noise."""
    return NetworkInstance(
        nodes=[NodeRecord(id=i, x=float(x), y=float(y), noise_power=noise) for i, (x, y) in enumerate(positions)],
        edges=[EdgeRecord(tail=tail, head=head) for tail, head in edges],
        source=source,
        destination=destination,
    )


@pytest.fixture
def instance_factory() -> Callable[..., NetworkInstance]:
    """Factory for hand-built instances."""
    return build_instance


@pytest.fixture
def two_node_instance() -> NetworkInstance:
    """S=0 -> D=1, a single edge."""
    return build_instance([(0.0, 0.0), (100.0, 0.0)], [(0, 1)], 0, 1)


@pytest.fixture
def triangle_instance() -> NetworkInstance:
    """S=0 -> a=1 -> D=2 plus the direct edge S -> D.

    Edge indices: 0 = (0, 1), 1 = (0, 2), 2 = (1, 2).
    """
    return build_instance([(0.0, 0.0), (100.0, 80.0), (200.0, 0.0)], [(0, 1), (1, 2), (0, 2)], 0, 2)


@pytest.fixture
def diamond_instance() -> NetworkInstance:
    """Two disjoint two-hop routes from S=0 to D=3.

    Edge indices: 0 = (0, 1), 1 = (0, 2), 2 = (1, 3), 3 = (2, 3).
    """
    return build_instance(
        [(0.0, 0.0), (100.0, 100.0), (100.0, -100.0), (200.0, 0.0)],
        [(0, 1), (0, 2), (1, 3), (2, 3)],
        0,
        3,
    )


@pytest.fixture
def chain_instance() -> NetworkInstance:
    """Three-edge chain 0 -> 1 -> 2 -> 3."""
    return build_instance([(0.0, 0.0), (100.0, 0.0), (200.0, 0.0), (300.0, 0.0)], [(0, 1), (1, 2), (2, 3)], 0, 3)


@pytest.fixture
def cycle_instance() -> NetworkInstance:
    """Path 0 -> 1 -> 2 (S=0, D=2) and a disjoint 2-cycle 3 <-> 4.

    Edge indices: 0 = (0, 1), 1 = (1, 2), 2 = (3, 4), 3 = (4, 3).
    """
    return build_instance(
        [(0.0, 0.0), (100.0, 0.0), (200.0, 0.0), (0.0, 300.0), (100.0, 300.0)],
        [(0, 1), (1, 2), (3, 4), (4, 3)],
        0,
        2,
    )


@pytest.fixture
def radio() -> RadioConfig:
    """Default link parameters."""
    return RadioConfig()


@pytest.fixture
def loss_weights() -> ScalarWeights:
    return ScalarWeights(v1=1.0, v2=0.0, v3=0.0)


@pytest.fixture
def balanced_weights() -> ScalarWeights:
    return ScalarWeights(v1=0.5, v2=0.5, v3=0.0)


@pytest.fixture
def fast_cim() -> CimConfig:
    """Short integration for unit tests."""
    return CimConfig(iterations=300, seed=11)


@pytest.fixture(scope="session")
def generated_instances() -> List[NetworkInstance]:
    """Seeded 10-node instances at the tabulated density."""
    return [generate_instance(GeneratorConfig(node_count=10, seed=seed)) for seed in range(5)]


@pytest.fixture
def out_dir(tmp_path) -> Path:
    """Temporary output directory."""
    path = tmp_path / "out"
    path.mkdir()
    return path


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
