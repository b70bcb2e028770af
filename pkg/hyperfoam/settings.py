"""
Django settings for the hyperfoam project.

The project has no HTTP surface and no database. Django provides the settings
layer, app registry and management commands; Django REST Framework serializers
validate every structured input and render every JSON artefact.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals; nothing here is signed or served.
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "hyperfoam-local-only")

DEBUG = os.getenv("DJANGO_DEBUG", "0") == "1"

ALLOWED_HOSTS: list[str] = []

# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "algebra",
    "lattice",
    "network",
    "observables",
    "particles",
    "cli",
]

# No persistence: every artefact is a file written by a management command.
DATABASES: dict = {}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "UNAUTHENTICATED_USER": None,
}


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


# Domain knobs. Read through hyperfoam.conf.hyperfoam_setting().
HYPERFOAM = {
    "THREADS": max(1, int(os.getenv("HYPERFOAM_THREADS", "1"))),
    "DEBUG_INVARIANTS": _env_flag("HYPERFOAM_DEBUG_INVARIANTS", "1" if DEBUG else "0"),
    "SCHEMA_VERSION": 1,
    "DEFAULT_OUTPUT_DIR": os.getenv("HYPERFOAM_OUT", str(BASE_DIR / "out")),
}

LOG_LEVEL = os.getenv("HYPERFOAM_LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in ("algebra", "lattice", "network", "observables", "particles", "cli", "hyperfoam")
    },
}
