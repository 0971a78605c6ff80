from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent
DATA_DIR = (BASE_DIR / "../data/reference").resolve()
REPORTS_DIR = (BASE_DIR / "../lab_reports").resolve()

GOLDEN_VALUES_PATH = DATA_DIR / "golden_values.json"

THREADS_ENV_VAR = "WHITTAKER_LAB_THREADS"
REPORT_SCHEMA_VERSION = 1

# Laurent ring
PRUNE_RELATIVE = 1e-15

# Schur evaluation guards
BIALTERNANT_MIN_SEPARATION = 1e-6
TABLEAU_MAX_SIZE = 12
TABLEAU_MAX_RANK = 5
SCHUR_LAURENT_MAX_SIZE = 40
UNIT_DETERMINANT_TOLERANCE = 1e-10

# Series truncation
DEFAULT_TRUNCATION = 40
ROUNDOFF_RELATIVE = 1e-13
TAIL_MAX_SHELLS = 200_000

# Torus quadrature
QUADRATURE_MIN_NODES = 4
CONTOUR_MIN_NODES = 64
CONTOUR_DEFAULT_NODES = 512
CONTOUR_MAX_NODES = 8192
CONTOUR_DOUBLING_TOLERANCE = 1e-10
POLE_CLEARANCE = 1e-6

# Sampling-based symmetry check of spectral functions
SYMMETRY_SAMPLE_POINTS = 20
SYMMETRY_SAMPLE_PERMUTATIONS = 10
SYMMETRY_TOLERANCE = 1e-10
SYMMETRY_SEED = 20_240_101
