"""
Module for Base Service
"""
from abc import ABC, abstractmethod

from repositories.base_repository import BaseRepository


class BaseService(ABC):
    """Base Service"""

    @property
    @abstractmethod
    def repository(self) -> BaseRepository:
        """
        Repository the service persists through
        """


class BaseServiceImpl(BaseService):
    """Base Service Implementation"""

    def __init__(self, repository: BaseRepository):
        self._repository = repository

    @property
    def repository(self) -> BaseRepository:
        """Repository the service persists through"""
        return self._repository
