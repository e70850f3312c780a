"""
Settings for the gyrochromatic toolkit

This file contains the run-time configuration shared by the library and the CLI:
- Search budgets (node counts, never wall-clock time)
- LP column cap and vertex-transitive orbit cap
- Worker count for the base search
- Random corpus seed
- Logging level / file and certificate output directory
- A minimal Django configuration for the rest_framework serializers

Values are loaded from environment variables or a `.env` file via python-decouple;
command-line flags override them
"""

import os
from pathlib import Path

import django
from decouple import config
from django.conf import settings as django_settings


# Repository root
BASE_DIR = Path(__file__).resolve().parent.parent

# Bundled data files (connection sets for the DSL)
DATA_DIR = BASE_DIR / "data"

# Node budget for sigma_group_exact / gyro_upper_bound
BUDGET = config("GYRO_BUDGET", default=2_000_000, cast=int)

# Maximal independent sets allowed as LP columns
COLUMN_CAP = config("GYRO_COLUMN_CAP", default=20_000, cast=int)

# Default largest cyclic group tried by gyro_upper_bound
NMAX = config("GYRO_NMAX", default=10, cast=int)

# Workers for the depth-1 split of the base search
THREADS = config("GYRO_THREADS", default=1, cast=int)

# Largest orbit the vertex-transitive shortcut builds before using the LP
ORBIT_CAP = config("GYRO_ORBIT_CAP", default=5_000, cast=int)

# Seed for random corpora (property checks in the reproduce suite)
SEED = config("GYRO_SEED", default=2021, cast=int)

# Logging; exported so mylogger sees values that came from .env
LOG_LEVEL = config("GYRO_LOG_LEVEL", default="INFO")
LOG_FILE = config("GYRO_LOG_FILE", default="")
os.environ.setdefault("GYRO_LOG_LEVEL", LOG_LEVEL)
os.environ.setdefault("GYRO_LOG_FILE", LOG_FILE)

# Where `bounds` writes its certificate file
CERT_DIR = Path(config("GYRO_CERT_DIR", default="certificates"))

# Django: no database, no URLs, only what rest_framework serializers need
if not django_settings.configured:
    django_settings.configure(
        INSTALLED_APPS=["rest_framework"],
        USE_I18N=False,
        USE_TZ=True,
        LOGGING_CONFIG=None,
    )
    django.setup()
