# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Entry point for ``python -m mindist``."""

from .cli import cli

if __name__ == "__main__":
    cli()
