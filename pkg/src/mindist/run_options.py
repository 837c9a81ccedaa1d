# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Run option schema and validation.

Every knob a ``mindist`` run accepts is described once, in
:data:`RUN_SCHEMA`.  The CLI takes its help texts from it, experiment
plans are validated against it, and :func:`parse_run_options` turns a
plain dict of user choices into a checked :class:`RunOptions`.

Schema format
-------------
A versioned dict with an ordered list of ``sections``; each section holds
``options``::

    {
        "key": "budget",                 // dict key / CLI flag name
        "type": "integer",               // value type, see below
        "title": "Enumeration Budget",    // short label
        "description": "...",             // help text
        "default": 1073741824,            // value when omitted
        "minimum": 1,                     // optional numeric bound
        "choices": [...],                 // only for type "choice"
        "requires": {"points": [...]}     // optional prerequisite values
    }

========== ============== ===========================================
type       Python type    notes
========== ============== ===========================================
``integer`` ``int``        ``bool`` is rejected
``number``  ``float``      ints are accepted and widened
``choice``  ``str``        must be one of ``choices``
``count``   ``int | str``  a positive ``int`` or the string ``"auto"``
========== ============== ===========================================

``requires`` lists, per prerequisite key, the values under which the
option may be set explicitly.  Defaults never trip it.

Precedence when merging (highest wins): explicit options, config file
defaults, schema defaults.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Literal

from .config import MindistConfig
from .distance import DEFAULT_BUDGET
from .errors import OptionValidationError
from .gf import SUPPORTED_ORDERS

logger = logging.getLogger(__name__)


# =============================================================================
# Schema Definition
# =============================================================================

RUN_SCHEMA: dict[str, Any] = {
    "version": 1,
    "sections": [
        {
            "id": "instance",
            "title": "Max NAND Instance",
            "options": [
                {
                    "key": "n",
                    "type": "integer",
                    "title": "Variables",
                    "description": "Number of boolean variables of a generated instance",
                    "default": 4,
                    "minimum": 1,
                },
                {
                    "key": "m",
                    "type": "integer",
                    "title": "Constraints",
                    "description": "Number of NAND constraints of a generated instance",
                    "default": 8,
                    "minimum": 1,
                },
                {
                    "key": "flip",
                    "type": "number",
                    "title": "Flip Probability",
                    "description": "Chance that a planted constraint's inputs are rewired at random",
                    "default": 0.1,
                    "minimum": 0.0,
                    "maximum": 1.0,
                },
                {
                    "key": "seed",
                    "type": "integer",
                    "title": "Seed",
                    "description": "Seed for every random choice of the run",
                    "default": 0,
                    "minimum": 0,
                },
            ],
        },
        {
            "id": "reduction",
            "title": "Reduction",
            "options": [
                {
                    "key": "target",
                    "type": "choice",
                    "title": "Target Problem",
                    "description": "ncp2 (nearest codeword over F_2), md2 (minimum distance over F_2) "
                    "or mdq (minimum distance over F_q, q >= 3)",
                    "choices": ["ncp2", "md2", "mdq"],
                    "default": "mdq",
                },
                {
                    "key": "q",
                    "type": "integer",
                    "title": "Field Order",
                    "description": "Order of the field the output code lives over",
                    "default": 3,
                    "choices": list(SUPPORTED_ORDERS),
                },
                {
                    "key": "r",
                    "type": "count",
                    "title": "Repetitions",
                    "description": "How often each constraint block is repeated, or 'auto'",
                    "default": "auto",
                },
                {
                    "key": "points",
                    "type": "choice",
                    "title": "Evaluation Set",
                    "description": "exhaustive (all of F_q^n), small-bias, or viola (sum of small-bias copies)",
                    "choices": ["exhaustive", "small-bias", "viola"],
                    "default": "exhaustive",
                    "requires": {"target": ["mdq"]},
                },
                {
                    "key": "bias",
                    "type": "number",
                    "title": "Bias",
                    "description": "Target bias of the small-bias base set",
                    "default": 0.25,
                    "minimum": 0.0,
                    "maximum": 1.0,
                    "requires": {"points": ["small-bias", "viola"]},
                },
            ],
        },
        {
            "id": "search",
            "title": "Search",
            "options": [
                {
                    "key": "budget",
                    "type": "integer",
                    "title": "Enumeration Budget",
                    "description": "Maximum number of codewords an exhaustive search may visit",
                    "default": DEFAULT_BUDGET,
                    "minimum": 1,
                },
                {
                    "key": "threads",
                    "type": "integer",
                    "title": "Threads",
                    "description": "Worker threads for enumerations; results do not depend on it",
                    "default": 1,
                    "minimum": 1,
                },
                {
                    "key": "samples",
                    "type": "integer",
                    "title": "Samples",
                    "description": "Sample count for advisory checks that cannot be exhaustive",
                    "default": 100_000,
                    "minimum": 1,
                },
            ],
        },
    ],
}


# =============================================================================
# Defaults & Validation
# =============================================================================


def _options() -> dict[str, dict[str, Any]]:
    return {
        option["key"]: option
        for section in RUN_SCHEMA["sections"]
        for option in section["options"]
    }


_OPTIONS = _options()
_DEFAULTS: dict[str, Any] = {key: option["default"] for key, option in _OPTIONS.items()}

# Keys a MindistConfig may supply.
_CONFIG_KEYS = ("budget", "threads", "seed", "samples")

Target = Literal["ncp2", "md2", "mdq"]
Points = Literal["exhaustive", "small-bias", "viola"]


def option_help(key: str) -> str:
    """Help text for ``key``, for CLI flag declarations."""
    return str(_OPTIONS[key]["description"])


@dataclass(frozen=True)
class RunOptions:
    """Validated run options.

    Fields carry no Python defaults; :meth:`default` applies the schema's.
    """

    n: int
    m: int
    flip: float
    seed: int
    target: Target
    q: int
    r: int | Literal["auto"]
    points: Points
    bias: float
    budget: int
    threads: int
    samples: int

    @classmethod
    def default(cls) -> RunOptions:
        return cls(**_DEFAULTS)


def _check_value(key: str, value: Any) -> Any:
    option = _OPTIONS[key]
    kind = option["type"]
    if kind == "integer":
        if isinstance(value, bool) or not isinstance(value, int):
            raise OptionValidationError(f"Option '{key}' must be integer, got {type(value).__name__}")
    elif kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise OptionValidationError(f"Option '{key}' must be number, got {type(value).__name__}")
        value = float(value)
    elif kind == "choice":
        if not isinstance(value, str):
            raise OptionValidationError(f"Option '{key}' must be string, got {type(value).__name__}")
    elif kind == "count":
        if value == "auto":
            return value
        if isinstance(value, str) and value.isdigit():
            value = int(value)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise OptionValidationError(f"Option '{key}' must be a positive integer or 'auto', got {value!r}")
        return value

    choices = option.get("choices")
    if choices is not None and value not in choices:
        allowed = ", ".join(str(c) for c in choices)
        raise OptionValidationError(f"Option '{key}' must be one of {allowed}, got {value!r}")
    if "minimum" in option and value < option["minimum"]:
        raise OptionValidationError(f"Option '{key}' must be at least {option['minimum']}, got {value}")
    if "maximum" in option and value > option["maximum"]:
        raise OptionValidationError(f"Option '{key}' must be at most {option['maximum']}, got {value}")
    return value


def parse_run_options(
    raw: dict[str, Any],
    config_defaults: MindistConfig | None = None,
) -> RunOptions:
    """Validate a dict of user choices into :class:`RunOptions`.

    - Unknown keys are rejected.
    - Missing keys take the config file value, then the schema default.
    - Values are type- and range-checked.
    - ``requires`` prerequisites are enforced for explicitly set keys.
    - The field order must match the target: 2 for ``ncp2``/``md2``.

    Raises:
        OptionValidationError: On any validation failure.
    """
    unknown = set(raw) - set(_DEFAULTS)
    if unknown:
        raise OptionValidationError(f"Unknown options: {', '.join(sorted(unknown))}")

    from_config: dict[str, Any] = {}
    if config_defaults is not None:
        from_config = {key: getattr(config_defaults, key) for key in _CONFIG_KEYS}

    explicit = {key: value for key, value in raw.items() if value is not None}
    merged: dict[str, Any] = {**_DEFAULTS, **from_config, **explicit}
    checked = {key: _check_value(key, value) for key, value in merged.items()}

    for key in explicit:
        for prerequisite, allowed in _OPTIONS[key].get("requires", {}).items():
            if checked[prerequisite] not in allowed:
                raise OptionValidationError(
                    f"Option '{key}' requires {prerequisite} to be one of {', '.join(allowed)}"
                )

    if checked["target"] in ("ncp2", "md2"):
        if "q" in explicit and checked["q"] != 2:
            raise OptionValidationError(f"target {checked['target']} works over F_2, got q={checked['q']}")
        checked["q"] = 2

    opts = RunOptions(**checked)
    logger.debug("run options: %s", opts)
    return opts
