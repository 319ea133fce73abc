# -*- coding: utf-8 -*-
"""Exceptions raised by `aiida-twinwidth`."""
from __future__ import annotations

from aiida.common.exceptions import AiidaException, ParsingError

__all__ = (
    'TwinWidthError', 'InvalidInputError', 'InvalidContractionError', 'FormatParsingError', 'SequenceWidthError',
    'DecompositionWidthExceededError', 'ContractionStuckError', 'LimitExceededError', 'BudgetExceededError',
    'CapExceededError', 'InternalCheckError'
)


class TwinWidthError(AiidaException):
    """Base class for all the exceptions of this package."""


class InvalidInputError(TwinWidthError, ValueError):
    """Raised when the arguments of an operation are malformed or inconsistent."""


class InvalidContractionError(InvalidInputError):
    """Raised when a contraction refers to dead, duplicated or unknown part ids.

    :param step: 1-based index of the offending contraction, if known
    """

    def __init__(self, message: str, step: int | None = None):
        self.step = step
        if step is not None:
            message = f'step {step}: {message}'
        super().__init__(message)


class FormatParsingError(TwinWidthError, ParsingError):
    """Raised when a text file does not follow its format."""

    def __init__(self, reason: str, line: int | None = None):
        self.reason = reason
        self.line = line
        message = reason if line is None else f'line {line}: {reason}'
        super().__init__(message)


class SequenceWidthError(TwinWidthError):
    """Raised when a contraction sequence exceeds a required width bound."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(
            f'the sequence exceeds the bound at step {violation.step}: '
            f'parts {list(violation.parts)} reach {violation.measure.value} width {violation.value}'
        )


class DecompositionWidthExceededError(TwinWidthError):
    """Raised when a branch decomposition is wider than the bound it was converted with."""

    def __init__(self, message: str, step: int):
        self.step = step
        super().__init__(f'step {step}: {message}')


class ContractionStuckError(TwinWidthError):
    """Raised when no admissible pair of small merged degree is left."""

    def __init__(self, step: int, min_degree: int | None, bound: int):
        self.step = step
        self.min_degree = min_degree
        self.bound = bound
        if min_degree is None:
            detail = 'no admissible pair is left'
        else:
            detail = f'the smallest merged degree is {min_degree} > {bound}'
        super().__init__(f'stuck at step {step}: {detail}')


class LimitExceededError(TwinWidthError):
    """Base class for the errors raised when a search budget or a size cap is exceeded."""


class BudgetExceededError(LimitExceededError):
    """Raised when an exhaustive search runs out of budget before proving its answer.

    :param lower: best proven lower bound
    :param upper: best upper bound found so far, if any
    """

    def __init__(self, message: str, lower: int, upper: int | None = None):
        self.lower = lower
        self.upper = upper
        super().__init__(f'{message} (bracket [{lower}, {upper}])')


class CapExceededError(LimitExceededError):
    """Raised when an input is larger than what a brute-force routine accepts."""


class InternalCheckError(TwinWidthError):
    """Raised when an internal consistency check of an algorithm fails."""
