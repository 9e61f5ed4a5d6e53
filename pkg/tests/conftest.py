from __future__ import annotations

import os

from hypothesis import settings

# HYPOTHESIS_PROFILE=ci makes the randomized properties derandomized and short.
settings.register_profile("ci", max_examples=10, deadline=None, derandomize=True)
settings.register_profile("dev", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))
