"""
Instance file persistence.

One record per line:

    nodes N edges M source S dest D
    n <id> <x> <y> <noise_watts>
    e <from> <to>

Floats are written with repr, so a save/load round trip is exact.
"""
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from config.constants import ErrorMessages
from repositories.base_repository import BaseRepository, PathLike
from schemas.network_schema import EdgeRecord, NetworkInstance, NodeRecord
from utils.exceptions import InstanceFormatError, UnreachableDestinationError
from utils.numeric import format_float


def _error(template: str, line: int, content: str, **fields) -> InstanceFormatError:
    return InstanceFormatError(template.format(line=line, content=content, **fields), line=line)


class InstanceRepository(BaseRepository):
    """Reads and writes network instances in the textual instance format."""

    def dumps(self, instance: NetworkInstance) -> str:
        lines = [
            f"nodes {instance.node_count} edges {instance.edge_count} "
            f"source {instance.source} dest {instance.destination}"
        ]
        for node in instance.nodes:
            lines.append(f"n {node.id} {format_float(node.x)} {format_float(node.y)} {format_float(node.noise_power)}")
        for edge in instance.edges:
            lines.append(f"e {edge.tail} {edge.head}")
        return "\n".join(lines) + "\n"

    def loads(self, text: str, require_reachable: bool = True) -> NetworkInstance:
        """
        Parse an instance.

        Args:
            text: File content
            require_reachable: Reject instances whose destination is unreachable

        Raises:
            InstanceFormatError: Malformed record, unknown node id or duplicate edge,
                naming the offending line
            UnreachableDestinationError: If D cannot be reached from S
        """
        header: Optional[dict] = None
        nodes: List[NodeRecord] = []
        edges: List[EdgeRecord] = []
        seen = set()
        node_count = 0

        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.strip()
            if not content or content.startswith("#"):
                continue
            parts = content.split()
            try:
                if header is None:
                    if len(parts) != 8 or parts[0::2] != ["nodes", "edges", "source", "dest"]:
                        raise _error(ErrorMessages.MALFORMED_LINE, number, content)
                    header = dict(zip(parts[0::2], (int(value) for value in parts[1::2])))
                    node_count = header["nodes"]
                elif parts[0] == "n" and len(parts) == 5:
                    nodes.append(NodeRecord(id=int(parts[1]), x=float(parts[2]), y=float(parts[3]),
                                            noise_power=float(parts[4])))
                elif parts[0] == "e" and len(parts) == 3:
                    tail, head = int(parts[1]), int(parts[2])
                    for node_id in (tail, head):
                        if not 0 <= node_id < node_count:
                            raise _error(ErrorMessages.UNKNOWN_NODE, number, content, node_id=node_id)
                    if (tail, head) in seen:
                        raise _error(ErrorMessages.DUPLICATE_EDGE, number, content, tail=tail, head=head)
                    seen.add((tail, head))
                    edges.append(EdgeRecord(tail=tail, head=head))
                else:
                    raise _error(ErrorMessages.MALFORMED_LINE, number, content)
            except (ValueError, ValidationError) as exc:
                raise InstanceFormatError(
                    f"{ErrorMessages.MALFORMED_LINE.format(line=number, content=content)}: {exc}", line=number
                ) from exc

        if header is None:
            raise InstanceFormatError("empty instance file: missing header", line=None)
        if len(nodes) != header["nodes"] or len(edges) != header["edges"]:
            raise InstanceFormatError(
                f"header declares {header['nodes']} nodes and {header['edges']} edges, "
                f"found {len(nodes)} and {len(edges)}"
            )
        try:
            instance = NetworkInstance(nodes=nodes, edges=edges, source=header["source"], destination=header["dest"])
        except ValidationError as exc:
            raise InstanceFormatError(f"invalid instance: {exc.errors()[0]['msg']}") from exc
        if require_reachable and not instance.is_destination_reachable():
            raise UnreachableDestinationError(
                ErrorMessages.UNREACHABLE.format(source=instance.source, destination=instance.destination)
            )
        return instance

    def load(self, path: PathLike) -> NetworkInstance:
        path = self.resolve(path)
        instance = self.loads(path.read_text(encoding="utf-8"))
        self.logger.debug(f"loaded {instance.node_count} nodes and {instance.edge_count} edges from {path}")
        return instance

    def save(self, record: NetworkInstance, path: PathLike) -> Path:
        path = self.resolve(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(self.dumps(record))
        return path


def load_instance(path: PathLike) -> NetworkInstance:
    return InstanceRepository().load(path)


def save_instance(instance: NetworkInstance, path: PathLike) -> Path:
    return InstanceRepository().save(instance, path)
