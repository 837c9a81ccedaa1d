# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""mindist user configuration.

Configuration is layered with systemd-style precedence:

1. ``$XDG_CONFIG_HOME/mindist/mindist.conf``  (user overrides, highest)
2. ``/etc/mindist/mindist.conf``              (site-wide settings)
3. ``/usr/lib/mindist/mindist.conf``          (package defaults, lowest)

All keys live in the ``[mindist]`` section:

- budget:  maximum number of codewords an exhaustive search may enumerate
- threads: worker count for enumerations
- seed:    default seed for generators and sampled checks
- samples: sample count for advisory (sampled) lemma checks

``MINDIST_BUDGET`` in the environment overrides the budget from every file.
"""

from __future__ import annotations

import configparser
import logging
import os
from pathlib import Path
from typing import NamedTuple

from .distance import DEFAULT_BUDGET

logger = logging.getLogger(__name__)

SECTION = "mindist"
BUDGET_ENV = "MINDIST_BUDGET"


class MindistConfig(NamedTuple):
    """Defaults applied to every run unless overridden on the command line."""

    budget: int
    threads: int
    seed: int
    samples: int


DEFAULT_THREADS = 1
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 100_000


def _config_home(home_dir: str | None) -> Path:
    if home_dir:
        return Path(home_dir) / ".config"
    config_home = os.environ.get("XDG_CONFIG_HOME", "")
    if not config_home:
        config_home = os.path.expanduser("~/.config")
    return Path(config_home)


def get_config_paths(home_dir: str | None = None) -> list[Path]:
    """Config file paths in priority order, highest first."""
    return [
        _config_home(home_dir) / "mindist" / "mindist.conf",
        Path("/etc/mindist/mindist.conf"),
        Path("/usr/lib/mindist/mindist.conf"),
    ]


def get_config_path(home_dir: str | None = None) -> Path:
    """The user config file, the only one :func:`save_config` writes."""
    return get_config_paths(home_dir)[0]


def _positive_int(parser: configparser.ConfigParser, key: str, current: int,
                  path: Path, *, minimum: int = 1) -> int:
    if not parser.has_option(SECTION, key):
        return current
    raw = parser.get(SECTION, key)
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s: ignoring non-integer %s = %r", path, key, raw)
        return current
    if value < minimum:
        logger.warning("%s: ignoring %s = %d (must be at least %d)", path, key, value, minimum)
        return current
    return value


def load_config(home_dir: str | None = None) -> MindistConfig:
    """Merge every config layer, lowest priority first, then apply the environment.

    Malformed files are skipped with a warning.
    """
    budget = DEFAULT_BUDGET
    threads = DEFAULT_THREADS
    seed = DEFAULT_SEED
    samples = DEFAULT_SAMPLES

    for config_path in reversed(get_config_paths(home_dir=home_dir)):
        if not config_path.exists():
            continue

        parser = configparser.ConfigParser()
        try:
            parser.read(config_path)
        except configparser.Error as e:
            logger.warning("Skipping malformed config %s: %s", config_path, e)
            continue

        if parser.has_section(SECTION):
            budget = _positive_int(parser, "budget", budget, config_path)
            threads = _positive_int(parser, "threads", threads, config_path)
            seed = _positive_int(parser, "seed", seed, config_path, minimum=0)
            samples = _positive_int(parser, "samples", samples, config_path)

    env_budget = os.environ.get(BUDGET_ENV, "")
    if env_budget:
        try:
            value = int(env_budget)
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", BUDGET_ENV, env_budget)
        else:
            if value >= 1:
                budget = value
            else:
                logger.warning("Ignoring %s=%d (must be at least 1)", BUDGET_ENV, value)

    return MindistConfig(budget=budget, threads=threads, seed=seed, samples=samples)


def save_config(config: MindistConfig, home_dir: str | None = None) -> Path:
    """Write ``config`` to the user config file and return its path."""
    config_path = get_config_path(home_dir)
    config_path.parent.mkdir(parents=True, exist_ok=True)

    parser = configparser.ConfigParser()
    parser[SECTION] = {key: str(value) for key, value in config._asdict().items()}

    with open(config_path, "w") as f:
        parser.write(f)
    return config_path
