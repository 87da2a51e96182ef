"""
Output artifacts of the CLI commands.

CSV tables are written with a fixed column order, floats in repr form and "\n"
line endings, so a rerun with the same seed produces byte-identical files.
"""
import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from models.ising_model import IsingModel
from models.qubo_model import QuboModel
from repositories.base_repository import BaseRepository, PathLike
from utils.exceptions import InstanceFormatError
from utils.numeric import format_float

RECORD_COLUMNS = [
    "size", "sample", "weight_id", "run", "classification", "optimal", "pareto_optimal", "energy",
    "edges", "loss", "ber", "hops", "scalar_value", "optimum_value", "frontier_gap", "diverged",
]


def format_cell(value: Any) -> str:
    """Text form of one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, (tuple, list)):
        return " ".join(format_cell(item) for item in value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


class ArtifactRepository(BaseRepository):
    """Writes CSV tables, JSON sidecars and model exports under one output directory."""

    def write_table(self, path: PathLike, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        path = self.resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([format_cell(value) for value in row])
        self.logger.debug(f"wrote {path}")
        return path

    def save(self, record: Sequence[BaseModel], path: PathLike, columns: Optional[Sequence[str]] = None) -> Path:
        """
        Write schema rows as a CSV table.

        Args:
            record: Rows, all of one schema type
            path: Target file
            columns: Field subset and order (default: every schema field)
        """
        rows = list(record)
        if columns is None:
            columns = list(type(rows[0]).model_fields) if rows else []
        return self.write_table(path, columns, ([getattr(row, column) for column in columns] for row in rows))

    def load(self, path: PathLike) -> List[Dict[str, str]]:
        """Read a CSV table back as a list of column -> text mappings."""
        with open(self.resolve(path), encoding="utf-8", newline="") as handle:
            return list(csv.DictReader(handle))

    def save_json(self, payload: Dict[str, Any], path: PathLike) -> Path:
        path = self.resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return path

    def save_config(self, config: BaseModel, path: PathLike = "config.json", **extra) -> Path:
        """JSON sidecar holding the full configuration of a run."""
        payload = config.model_dump(mode="json")
        payload.update(extra)
        return self.save_json(payload, path)

    def save_qubo(self, model: QuboModel, path: PathLike = "model.qubo") -> Path:
        """
        Lines `offset v`, `q k v` for every variable, `Q k l v` for every non-zero coupling
        and `d k v` for every non-zero folded square.
        """
        lines = [f"offset {format_float(model.offset)}"]
        lines += [f"q {k} {format_float(value)}" for k, value in enumerate(model.linear)]
        lines += [f"Q {k} {l} {format_float(model.quadratic[k, l])}" for k, l in zip(*np.nonzero(model.quadratic))]
        lines += [f"d {k} {format_float(model.diagonal[k])}" for k in np.flatnonzero(model.diagonal)]
        return self._write_lines(path, lines)

    def save_ising(self, model: IsingModel, path: PathLike = "model.ising") -> Path:
        """
        Lines `offset v`, `h k v` for every spin, `J k l v` for every non-zero coupling
        and `u k v` for every non-zero diagonal entry.
        """
        lines = [f"offset {format_float(model.offset)}"]
        lines += [f"h {k} {format_float(value)}" for k, value in enumerate(model.field)]
        lines += [f"J {k} {l} {format_float(model.coupling[k, l])}" for k, l in zip(*np.nonzero(model.coupling))]
        lines += [f"u {k} {format_float(model.diagonal[k])}" for k in np.flatnonzero(model.diagonal)]
        return self._write_lines(path, lines)

    def load_qubo(self, path: PathLike) -> QuboModel:
        offset, linear, pairs, squares = self._read_model(path, "q", "Q", "d")
        quadratic = np.zeros((len(linear), len(linear)))
        for (k, l), value in pairs.items():
            quadratic[k, l] = value
        return QuboModel(quadratic, np.array(linear), offset, self._diagonal(squares, len(linear)))

    def load_ising(self, path: PathLike) -> IsingModel:
        offset, field, pairs, diagonal = self._read_model(path, "h", "J", "u")
        coupling = np.zeros((len(field), len(field)))
        for (k, l), value in pairs.items():
            coupling[k, l] = value
        return IsingModel(coupling, np.array(field), offset, self._diagonal(diagonal, len(field)))

    def _write_lines(self, path: PathLike, lines: List[str]) -> Path:
        path = self.resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write("\n".join(lines) + "\n")
        return path

    @staticmethod
    def _diagonal(entries: Dict[int, float], dimension: int) -> np.ndarray:
        diagonal = np.zeros(dimension)
        for k, value in entries.items():
            diagonal[k] = value
        return diagonal

    def _read_model(self, path: PathLike, linear_tag: str, pair_tag: str, diagonal_tag: str):
        offset = 0.0
        linear: Dict[int, float] = {}
        diagonal: Dict[int, float] = {}
        pairs: Dict[tuple, float] = {}
        with open(self.resolve(path), encoding="utf-8") as handle:
            for number, raw in enumerate(handle, start=1):
                parts = raw.split()
                if not parts:
                    continue
                try:
                    if parts[0] == "offset" and len(parts) == 2:
                        offset = float(parts[1])
                    elif parts[0] == linear_tag and len(parts) == 3:
                        linear[int(parts[1])] = float(parts[2])
                    elif parts[0] == pair_tag and len(parts) == 4:
                        pairs[(int(parts[1]), int(parts[2]))] = float(parts[3])
                    elif parts[0] == diagonal_tag and len(parts) == 3:
                        diagonal[int(parts[1])] = float(parts[2])
                    else:
                        raise ValueError("unknown record")
                except ValueError as exc:
                    raise InstanceFormatError(f"malformed model line {number}: {raw.strip()!r}", line=number) from exc
        values = [linear.get(k, 0.0) for k in range(max(linear, default=-1) + 1)]
        return offset, values, pairs, diagonal
