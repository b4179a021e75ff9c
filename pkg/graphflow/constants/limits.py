from graphflow.constants.conf import LIMITS

# Desk-scale resource guards. Any of these can be raised from the [limits]
# section of the config file.
MAX_CANONICAL_VERTICES = LIMITS.get('MAX_CANONICAL_VERTICES', 16)
MAX_ENUMERATE_VERTICES = LIMITS.get('MAX_ENUMERATE_VERTICES', 8)
MAX_ENUMERATE_SUBSETS = LIMITS.get('MAX_ENUMERATE_SUBSETS', 2000000)
MAX_COHOMOLOGY_VERTICES = LIMITS.get('MAX_COHOMOLOGY_VERTICES', 6)

DEFAULT_PICARD_ORDER = 3
MAX_PICARD_ORDER = LIMITS.get('MAX_PICARD_ORDER', 6)

MAX_TRIVIALIZE_DEGREE = LIMITS.get('MAX_TRIVIALIZE_DEGREE', 6)
MAX_ANSATZ_UNKNOWNS = LIMITS.get('MAX_ANSATZ_UNKNOWNS', 20000)

MAX_LEIBNIZ_CANDIDATES = LIMITS.get('MAX_LEIBNIZ_CANDIDATES', 20000)
LEIBNIZ_ROUND_BATCH = LIMITS.get('LEIBNIZ_ROUND_BATCH', 400)
DEFAULT_LEIBNIZ_ROUNDS = 4
DEFAULT_FACTORIZE_DIMENSION = 3

# Process exit codes
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_NO_SOLUTION = 4
