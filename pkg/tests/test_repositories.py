"""Unit tests for the file repositories."""
import math

import numpy as np
import pytest

from models.enums import Classification
from models.qubo_model import QuboModel
from repositories.artifact_repository import RECORD_COLUMNS, ArtifactRepository, format_cell
from repositories.instance_repository import InstanceRepository, load_instance, save_instance
from schemas.experiment_schema import RunRecord
from services.ising_service import qubo_to_ising
from services.objective_service import compute_edge_objectives, scalarize
from services.qubo_service import build_qubo, default_penalties
from utils.exceptions import InstanceFormatError, UnreachableDestinationError

VALID = """nodes 3 edges 2 source 0 dest 2
n 0 0.0 0.0 1e-12
n 1 10.0 0.0 1e-12
n 2 20.0 0.0 1e-12
e 0 1
e 1 2
"""


@pytest.fixture
def repository() -> InstanceRepository:
    return InstanceRepository()


class TestInstanceRepository:
    """Parsing and writing of instance files."""

    def test_parse_valid_file(self, repository):
        instance = repository.loads(VALID)

        assert instance.node_count == 3
        assert [edge.as_tuple() for edge in instance.edges] == [(0, 1), (1, 2)]
        assert instance.nodes[1].x == 10.0
        assert instance.nodes[0].noise_power == 1e-12

    def test_round_trip_is_exact(self, generated_instances, tmp_path):
        for index, instance in enumerate(generated_instances):
            path = save_instance(instance, tmp_path / f"instance_{index}.txt")
            assert load_instance(path) == instance

    def test_written_text_is_stable(self, repository, triangle_instance):
        text = repository.dumps(triangle_instance)

        assert text.splitlines()[0] == "nodes 3 edges 3 source 0 dest 2"
        assert repository.dumps(repository.loads(text)) == text

    def test_comments_and_blank_lines_are_skipped(self, repository):
        instance = repository.loads("# generated\n\n" + VALID)

        assert instance.edge_count == 2

    def test_unknown_node_id_names_line(self, repository):
        text = VALID.replace("e 1 2", "e 1 7")

        with pytest.raises(InstanceFormatError, match="unknown node id 7 on line 6") as excinfo:
            repository.loads(text)
        assert excinfo.value.line == 6

    def test_duplicate_edge_names_line(self, repository):
        text = VALID.replace("nodes 3 edges 2", "nodes 3 edges 3") + "e 0 1\n"

        with pytest.raises(InstanceFormatError, match="duplicate edge \\(0, 1\\) on line 7"):
            repository.loads(text)

    @pytest.mark.parametrize("line,replacement", [(2, "n 0 0.0"), (5, "e 0 x"), (1, "nodes 3 edges 2")])
    def test_malformed_record_names_line(self, repository, line, replacement):
        lines = VALID.splitlines()
        lines[line - 1] = replacement

        with pytest.raises(InstanceFormatError) as excinfo:
            repository.loads("\n".join(lines))
        assert excinfo.value.line == line

    def test_self_loop_is_rejected(self, repository):
        with pytest.raises(InstanceFormatError) as excinfo:
            repository.loads(VALID.replace("e 1 2", "e 1 1"))
        assert excinfo.value.line == 6

    def test_header_count_mismatch(self, repository):
        with pytest.raises(InstanceFormatError, match="header declares"):
            repository.loads(VALID.replace("edges 2", "edges 4"))

    def test_empty_file(self, repository):
        with pytest.raises(InstanceFormatError, match="missing header"):
            repository.loads("")

    def test_unreachable_destination(self, repository):
        text = VALID.replace("e 1 2", "e 2 1")

        with pytest.raises(UnreachableDestinationError):
            repository.loads(text)
        assert repository.loads(text, require_reachable=False).edge_count == 2

    def test_relative_paths_resolve_against_root(self, tmp_path, triangle_instance):
        repository = InstanceRepository(tmp_path)
        repository.save(triangle_instance, "nested/instance.txt")

        assert (tmp_path / "nested" / "instance.txt").exists()
        assert repository.load("nested/instance.txt") == triangle_instance


class TestArtifactRepository:
    """CSV, JSON and model exports."""

    def test_cell_formatting(self):
        assert format_cell(None) == ""
        assert format_cell(True) == "true"
        assert format_cell(0.1) == "0.1"
        assert format_cell(np.float64(1e-12)) == "1e-12"
        assert format_cell((3, 1, 4)) == "3 1 4"
        assert format_cell(Classification.SIMPLE_PATH) == "simple_path"
        assert format_cell(math.nan) == "nan"

    def test_record_table(self, out_dir):
        record = RunRecord(
            size=10, sample=0, weight_id=1, run=2, classification=Classification.SIMPLE_PATH, optimal=True,
            pareto_optimal=None, energy=-1.5, edges=(0, 4), loss=2.0, ber=0.25, hops=2.0, scalar_value=0.5,
            optimum_value=0.5, wall_time=3.0,
        )
        repository = ArtifactRepository(out_dir)
        path = repository.save([record], "records.csv", RECORD_COLUMNS)

        lines = path.read_text(encoding="utf-8").split("\n")
        assert lines[0] == ",".join(RECORD_COLUMNS)
        assert lines[1] == "10,0,1,2,simple_path,true,,-1.5,0 4,2.0,0.25,2.0,0.5,0.5,,false"
        assert "wall_time" not in lines[0]
        assert repository.load("records.csv")[0]["edges"] == "0 4"

    def test_default_columns_follow_schema(self, out_dir):
        record = RunRecord(
            size=10, sample=0, weight_id=0, run=0, classification=Classification.INFEASIBLE, optimal=False,
            energy=0.0, loss=0.0, ber=0.0, hops=0.0, scalar_value=0.0, optimum_value=1.0,
        )
        rows = ArtifactRepository(out_dir).save([record], "all.csv")

        assert rows.read_text(encoding="utf-8").splitlines()[0].endswith("diverged,wall_time")

    def test_json_sidecar_is_sorted(self, out_dir, fast_cim):
        path = ArtifactRepository(out_dir).save_config(fast_cim, seed_note="root")
        text = path.read_text(encoding="utf-8")

        assert '"iterations": 300' in text
        assert '"seed_note": "root"' in text
        assert text.index('"amplitude_clamp"') < text.index('"iterations"')

    def test_qubo_and_ising_exports_round_trip(self, out_dir, diamond_instance, radio, balanced_weights):
        costs = scalarize(compute_edge_objectives(diamond_instance, radio), balanced_weights)
        qubo = build_qubo(diamond_instance, costs, default_penalties(costs))
        ising = qubo_to_ising(qubo)
        repository = ArtifactRepository(out_dir)

        loaded_qubo = repository.load_qubo(repository.save_qubo(qubo))
        loaded_ising = repository.load_ising(repository.save_ising(ising))

        np.testing.assert_array_equal(loaded_qubo.quadratic, qubo.quadratic)
        np.testing.assert_array_equal(loaded_qubo.linear, qubo.linear)
        assert loaded_qubo.offset == qubo.offset
        np.testing.assert_array_equal(loaded_ising.coupling, ising.coupling)
        np.testing.assert_array_equal(loaded_ising.field, ising.field)
        np.testing.assert_array_equal(loaded_qubo.diagonal, qubo.diagonal)
        np.testing.assert_array_equal(loaded_ising.diagonal, ising.diagonal)
        assert np.all(ising.diagonal > 0)

    def test_qubo_export_layout(self, out_dir):
        model = QuboModel(np.array([[0.0, 2.5], [0.0, 0.0]]), np.array([1.0, -1.0]), 0.5)
        path = ArtifactRepository(out_dir).save_qubo(model)

        assert path.read_text(encoding="utf-8") == "offset 0.5\nq 0 1.0\nq 1 -1.0\nQ 0 1 2.5\n"

    def test_malformed_model_line(self, out_dir):
        (out_dir / "bad.qubo").write_text("offset 0.0\nq zero 1.0\n", encoding="utf-8")

        with pytest.raises(InstanceFormatError, match="line 2"):
            ArtifactRepository(out_dir).load_qubo("bad.qubo")
