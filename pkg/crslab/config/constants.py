# crslab/config/constants.py
"""
Configuration constants and default values
Centralizes caps, seeds and output conventions used across the library and CLI
"""

# ===============================
# ENUMERATION CAPS
# ===============================
DEFAULT_ENUMERATION_CAP = 2 ** 24  # Objects an exhaustive oracle may visit
DEFAULT_GROUP_ORDER_CAP = 10 ** 4  # Largest permutation group we close under composition
MAX_ORACLE_FIELD_ORDER = 64  # Table-driven field arithmetic is shipped up to this q
MAX_PERMUTATION_DEGREE = 12
MAX_RELABELING_DEGREE = 6  # Sym(d) is scanned exhaustively for full-invariance checks

# ===============================
# SAMPLING
# ===============================
DEFAULT_SEED = 0
MAX_SEED = 2 ** 64 - 1
MONTE_CARLO_SIGMA = 4  # Per-bin acceptance band, normal approximation
DEFAULT_MONTE_CARLO_SAMPLES = 100_000
DEFAULT_WORKERS = 1
SAMPLES_PER_STREAM = 10_000  # Chunk size; chunk index is the stream id

# ===============================
# OUTPUT
# ===============================
OUTPUT_FORMATS = ("json", "csv", "plain")
DEFAULT_OUTPUT_FORMAT = "plain"
CSV_LINE_TERMINATOR = "\n"
PLAIN_TABLE_WIDTH = 120

# ===============================
# EXIT CODES
# ===============================
EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_CAP = 3
EXIT_INVARIANT_VIOLATION = 4

# ===============================
# ENVIRONMENT
# ===============================
ENV_CONFIG_DIR = "CRSLAB_CONFIG_DIR"
ENV_ENUMERATION_CAP = "CRSLAB_ENUMERATION_CAP"
ENV_GROUP_ORDER_CAP = "CRSLAB_GROUP_ORDER_CAP"
ENV_LOG_LEVEL = "CRSLAB_LOG_LEVEL"
DEFAULT_CONFIG_DIR = "~/.crslab"
CONFIG_FILE_NAME = "config.json"

# ===============================
# LOGGING
# ===============================
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
SERVICE_NAME = "crslab"
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024
LOG_FILE_BACKUPS = 5

# ===============================
# FILE PERMISSIONS
# ===============================
CONFIG_DIR_PERMISSIONS = 0o700
CONFIG_FILE_PERMISSIONS = 0o600
