"""
BaseRepository is an abstract class that defines the methods
"""
from abc import abstractmethod, ABC
from pathlib import Path
from typing import Any, Union

from utils.logging_utils import get_context_logger

PathLike = Union[str, Path]


class BaseRepository(ABC):
    """
    BaseRepository is an abstract class that defines the methods
    that must be implemented by the file-backed repositories.
    """

    def __init__(self, root: PathLike = "."):
        self._root = Path(root)
        self.logger = get_context_logger(type(self).__module__)

    @property
    def root(self) -> Path:
        """
        Directory relative paths are resolved against
        """
        return self._root

    def resolve(self, path: PathLike) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self._root / path

    def ensure_root(self) -> Path:
        """
        Create the root directory when missing
        :return: Path
        """
        self._root.mkdir(parents=True, exist_ok=True)
        return self._root

    @abstractmethod
    def load(self, path: PathLike) -> Any:
        """
        Load a record from a file
        :param path: file path
        """

    @abstractmethod
    def save(self, record: Any, path: PathLike) -> Path:
        """
        Save a record to a file
        :param record: record to persist
        :param path: file path
        :return: Path written
        """
