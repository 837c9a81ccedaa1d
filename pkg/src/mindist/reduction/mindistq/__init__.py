# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Min Dist over F_q pipeline: variables, basic constraints, consistency constraints.

Importing this package registers all steps with the pipeline.
"""

from ...pipeline import Pipeline
from ..contexts import MindistqContext

mindistq_pipeline = Pipeline[MindistqContext]("mindistq")

# Import step modules so their decorators register with the pipeline.
from . import variables as _  # noqa: F401, E402
from . import basic as _  # noqa: F401, E402
from . import consistency as _  # noqa: F401, E402
