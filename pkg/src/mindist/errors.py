# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Exception hierarchy shared by every mindist module.

Each exception class carries the process exit code the CLI reports for it:

===== =========================================================
code  meaning
===== =========================================================
1     usage or parse problem (bad flags, malformed files)
2     an enumeration budget or size limit was exceeded
3     an internal invariant failed (construction bug)
===== =========================================================

Library code raises the most specific class; the CLI only looks at
``exit_code``.
"""

from __future__ import annotations

from typing import Any


class MindistError(Exception):
    """Base class for expected mindist failures with user-facing messages."""

    exit_code: int = 1


# =============================================================================
# Usage / parse (exit code 1)
# =============================================================================


class UsageError(MindistError):
    """Invalid request: wrong flags, unsupported parameters."""


class ParseError(MindistError):
    """A file did not match its versioned text format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotPrimePower(UsageError):
    """Field order is not a supported prime power."""


class DimensionMismatch(UsageError):
    """Operand shapes are incompatible."""


class FieldMismatch(UsageError):
    """Operands live over different fields."""


class RedirectError(UsageError):
    """The requested construction is handled by a different builder."""


class NotSatisfying(UsageError):
    """The assignment does not satisfy every constraint."""


class NotPlantable(UsageError):
    """Generator parameters cannot produce a planted instance."""


# =============================================================================
# Arithmetic (exit code 1: caller passed degenerate input)
# =============================================================================


class DivisionByZero(MindistError, ZeroDivisionError):
    """Inverse of the additive identity was requested."""


class Inconsistent(MindistError):
    """A linear system has no solution."""


class RankDeficient(MindistError):
    """A matrix that must have full column rank does not."""


# =============================================================================
# Budgets (exit code 2)
# =============================================================================


class BudgetExceeded(MindistError):
    """An exhaustive enumeration would exceed the configured budget.

    ``partial`` carries whatever partial result the raising code could
    still compute (for example a case-split lower bound).
    """

    exit_code = 2

    def __init__(self, message: str, *, needed: int = 0, budget: int = 0,
                 partial: Any = None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget
        self.partial = partial


class TooLarge(BudgetExceeded):
    """Input is beyond the exhaustive range of an oracle."""


class SizeOverflow(BudgetExceeded):
    """A constructed object would be larger than the supported limit."""


# =============================================================================
# Invariants (exit code 3)
# =============================================================================


class InvariantFailure(MindistError):
    """A property the construction guarantees did not hold."""

    exit_code = 3


class NotInjective(InvariantFailure):
    """The output projection loses information on the solution space."""


class MembershipFailure(InvariantFailure):
    """A vector that must be a codeword is not."""


class OptionValidationError(UsageError):
    """A run option dict failed schema validation."""
