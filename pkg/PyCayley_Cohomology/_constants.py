SCHEMA_VERSION = 1
DEFAULT_INDENTATION = 2

MIN_RANDOM_VERTICES = 1
MAX_RANDOM_VERTICES = 12
DEFAULT_RANDOM_VERTICES = 6
MAX_RANDOM_DIMENSION = 3
DEFAULT_RANDOM_DIMENSION = 2
MIN_RANDOM_R = 1
MAX_RANDOM_R = 4
DEFAULT_RANDOM_R = 2
DEFAULT_RANDOM_DENSITY = 0.5
DEFAULT_RETRY_BUDGET = 200
RANDOM_BOUNDS_ERR_MSG = "Random instance parameters are out of range"
MIN_SUITE_VERTICES = 4
MAX_SUITE_VERTICES = 8
MIN_SUITE_DIMENSION = 1

MIN_TORUS_DIMENSION = 1
MAX_TORUS_DIMENSION = 3
TORUS_DIMENSION_ERR_MSG = "Torus dimension is out of range"

MIN_RANK_ONE_N = 2
MAX_RANK_ONE_N = 4
RANK_ONE_ERR_MSG = "Only d=1 with 2 <= N <= 4 is verified numerically"

MAX_CHECKED_REDUCTION_R = 8

INSTANCE_KINDS = ("space-pair", "cover", "cover-with-companion")
SUITE_COMMANDS = (
    "verify-resolution",
    "verify-final",
    "verify-theorem",
    "verify-trace",
    "reduce",
    "rank-one",
)

MIN_INDENTATION = 0
MAX_INDENTATION = 10
INDENTATION_ERR_MSG = "Indentation is out of range"
