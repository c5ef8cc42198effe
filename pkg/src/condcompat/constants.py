"""Compile-time constants for the condcompat package.

These are values baked into code that change only on code updates,
NOT between environments. For runtime settings, see config.py.
"""

# ──────────────────────────────────────────────────────────────────────
# Exit codes (stable CLI contract)
# ──────────────────────────────────────────────────────────────────────
EXIT_OK = 0
EXIT_INCOMPATIBLE = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_INCONSISTENT = 4

# ──────────────────────────────────────────────────────────────────────
# Check / report defaults (fallbacks if config.json is missing values)
# ──────────────────────────────────────────────────────────────────────
METHODS = ("rank", "lp", "both")
FORMATS = ("text", "kv")
DEFAULT_METHOD = "both"
DEFAULT_FORMAT = "text"
DEFAULT_DECIMAL_PLACES = 7
DEFAULT_LOG_LEVEL = "WARNING"

# ──────────────────────────────────────────────────────────────────────
# Oracle
# ──────────────────────────────────────────────────────────────────────
DEFAULT_GRID_STEPS = 1000
DEFAULT_MAX_CELL_WEIGHT = 100     # random joints draw integer weights in [1, 100]
FLOOR_SCALE = 100                 # positivity floor = 1 / (FLOOR_SCALE * I * J)
GRID_EXACT_CANDIDATES = 16        # float-ranked grid points re-checked exactly
GRID_MAX_POINTS = 5_000_000       # larger grids are refused, or shrunk by the CLI

# ──────────────────────────────────────────────────────────────────────
# Simplex
# ──────────────────────────────────────────────────────────────────────
SIMPLEX_MAX_PIVOTS = 50_000

# ──────────────────────────────────────────────────────────────────────
# File format
# ──────────────────────────────────────────────────────────────────────
FILE_FORMAT_VERSION = 1
UNKNOWN_TOKEN = "?"

# ──────────────────────────────────────────────────────────────────────
# Config
# ──────────────────────────────────────────────────────────────────────
CONFIG_FILENAME = "configs/config.json"
CONFIG_ENV_VAR = "CONDCOMPAT_CONFIG"
