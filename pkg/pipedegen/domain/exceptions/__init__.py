"""Domain exceptions."""
from pipedegen.domain.exceptions.domain_errors import (
    DomainError,
    InvalidInputError,
    CapacityError,
    BudgetExceededError,
    ParseError,
    ConfigurationError,
)

__all__ = [
    "DomainError",
    "InvalidInputError",
    "CapacityError",
    "BudgetExceededError",
    "ParseError",
    "ConfigurationError",
]
