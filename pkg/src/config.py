"""
Configuration settings for gptkit.

Values are module constants; each can be overridden through an environment
variable of the same name or a .env file in the working directory.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent

TOOLKIT_VERSION = "0.3.0"

# Logging
LOG_LEVEL = os.getenv("GPTKIT_LOG_LEVEL", "INFO").upper()

# Numeric qubit tolerance (exact systems never use a tolerance)
QUBIT_TOLERANCE = float(os.getenv("GPTKIT_QUBIT_TOLERANCE", "1e-9"))

# Joint vertex enumeration is only attempted when n*m stays below this
ENUMERATION_DIM_LIMIT = int(os.getenv("GPTKIT_ENUMERATION_DIM_LIMIT", "16"))

# Refuse enumerations producing more vertices than this
VERTEX_CAP = int(os.getenv("GPTKIT_VERTEX_CAP", "100000"))

# Largest denominator used when rationalizing regular polygon vertices
POLYGON_DENOMINATOR = int(os.getenv("GPTKIT_POLYGON_DENOMINATOR", str(10 ** 12)))

# Numeric sampling
DEFAULT_SEED = int(os.getenv("GPTKIT_DEFAULT_SEED", "7"))
QUBIT_NET_SIZE = int(os.getenv("GPTKIT_QUBIT_NET_SIZE", "400"))

# analyze enumerates E^max only while dim * (number of extremal states) stays below this
EMAX_ENUMERATION_LIMIT = int(os.getenv("GPTKIT_EMAX_ENUMERATION_LIMIT", "256"))
