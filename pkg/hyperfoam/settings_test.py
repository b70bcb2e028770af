"""
Test-only Django settings.

Referenced from pytest.ini via DJANGO_SETTINGS_MODULE. Invariant checks are
always on under test, whatever the environment says.
"""
from hyperfoam.settings import *  # noqa: F401, F403

HYPERFOAM = {
    **HYPERFOAM,  # noqa: F405
    "THREADS": 2,
    "DEBUG_INVARIANTS": True,
}

# Silence logging during tests
import logging

logging.disable(logging.CRITICAL)
