# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Deterministic reductions from Max NAND to nearest codeword and minimum
distance problems over finite fields, with exhaustive verification oracles.
"""

__version__ = "0.1.0"
