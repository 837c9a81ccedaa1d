# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Binary Min Dist pipeline: variables, NAND blocks, square blocks, encoding.

Importing this package registers all steps with the pipeline.
"""

from ...pipeline import Pipeline
from ..contexts import Mindist2Context

mindist2_pipeline = Pipeline[Mindist2Context]("mindist2")

# Import step modules so their decorators register with the pipeline.
from . import variables as _  # noqa: F401, E402
from . import nand as _  # noqa: F401, E402
from . import squares as _  # noqa: F401, E402
from . import encoding as _  # noqa: F401, E402
