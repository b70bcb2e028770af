from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "THREADS": 1,
    "DEBUG_INVARIANTS": True,
    "SCHEMA_VERSION": 1,
    "DEFAULT_OUTPUT_DIR": "out",
}


def hyperfoam_setting(name: str):
    """Read one key of settings.HYPERFOAM, falling back to DEFAULTS outside a configured project."""
    try:
        configured = getattr(settings, "HYPERFOAM", {})
    except ImproperlyConfigured:
        configured = {}
    return configured.get(name, DEFAULTS[name])
