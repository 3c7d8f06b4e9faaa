"""Domain repositories for accessing catalog constants."""
from bh_lab.repositories.checks_repository import ChecksRepository

__all__ = [
    "ChecksRepository",
]
