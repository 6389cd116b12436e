"""
Configuration for the tetragap verifier.

Exact construction of a tetrahedron from its basic face, tangent point and
inradius, and exact verification of the two-term gap representation of the
Grace-Danielsson inequality.
"""
from pathlib import Path
from fractions import Fraction

# Exit codes (stable CLI contract)
EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3

# Output settings
OUTPUT_ENCODING = 'utf-8-sig'  # BOM for Excel compatibility
OUTPUT_DIR = Path("./output")
FUZZ_EXPORT_FILE = "fuzz_trials.csv"
EXAMPLES_EXPORT_FILE = "examples.xlsx"

# Decimal renderings are diagnostic only, never compared
APPROX_DIGITS = 12
APPROX_PRECISION = 60
APPROX_PREFIX = '~'

# Fuzz defaults
FUZZ_TRIALS = 1000
FUZZ_SEED = 42
FUZZ_COORDINATE_BOUND = 50
FUZZ_DENOMINATOR_BOUND = 7
FUZZ_MAX_REDRAWS = 1000
# Per-trial generator streams: Random(seed * FUZZ_STREAM_STRIDE + trial)
FUZZ_STREAM_STRIDE = 1_000_003

# Probe radii for quartic interpolation are rho * k / (k + 3), rho^2 <= A/B
PROBE_PRIMARY = (1, 2, 3)
PROBE_DISJOINT = (4, 5, 6)
PROBE_CHECK = 7

# Fraction of the critical-radius bound used when drawing a random inradius
RADIUS_FRACTION_STEPS = 100

# Pech / Euler defaults
PECH_TRIALS = 100
PECH_SIDE_BOUND = 60

# Known Heronian triangles that always join the Pech run (sides a, b, c)
HERONIAN_FIXTURES = [
    (Fraction(154), Fraction(165), Fraction(143)),
    (Fraction(3), Fraction(4), Fraction(5)),
    (Fraction(13), Fraction(14), Fraction(15)),
    (Fraction(5), Fraction(5), Fraction(6)),
]

# Scalar literal grammar: "p/q", "p", "p/q+r/s*sqrt(k)"
LITERAL_PATTERN = (
    r'^(?P<a>[+-]?\d+(?:/\d+)?)'
    r'(?:(?P<sign>[+-])(?P<b>\d+(?:/\d+)?)\*sqrt\((?P<k>[+-]?\d+)\))?$'
)

# Config file keys
CONFIG_POINT_KEYS = ('x', 'y', 'z', 'c')
CONFIG_REQUIRED_KEYS = ('x', 'y', 'z', 'c', 'r')
