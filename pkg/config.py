#config.py
import os

# -------------------------
# Exact verification grids
# -------------------------
# kappa3 chain: finite sums -> kappa3^T -> kappa3, for 1 <= m <= n <= MAX
KAPPA3_MAX_DIM = 20
# closed forms (Tables) vs finite-sum assemblies, for 2 <= m < n <= MAX
INTEGRALS_MAX_DIM = 15
# Laurent pole cancellation + printed block regression, m <= n <= MAX
POLES_MAX_DIM = 10
# identity sweeps: n <= MAX (first type), m <= n <= MAX (second type)
IDENTITIES_MAX_N = 25
IDENTITIES_MAX_A = 8
MILGRAM_MAX_M = 20
MILGRAM_MAX_SHIFT = 6

# -------------------------
# Quadrature
# -------------------------
QUAD_NODES = 256
QUAD_RTOL = 1e-8
QUAD_RTOL_2D = 1e-6
QUAD_NODES_2D = 64
QUAD_MAX_NODES = 2048
QUAD_MAX_NODES_2D = 256

# -------------------------
# Monte Carlo
# -------------------------
JACOBI_TOL = 1e-12        # off-diagonal Frobenius norm relative to the trace
JACOBI_MAX_SWEEPS = 100
EIGEN_CLAMP = -1e-14      # eigenvalues in [EIGEN_CLAMP, 0) are set to 0
DEFAULT_SAMPLES = 1_000_000
DEFAULT_SEED = 42
MIN_KSTAT_COUNT = 10

# -------------------------
# Density figures
# -------------------------
DENSITY_GRID_POINTS = 401
DENSITY_GRID_LO = -5.0
DENSITY_GRID_HI = 5.0
KDE_MIN_SAMPLES = 10_000
CSV_SIGNIFICANT_DIGITS = 12

# Scaling study along m = c*n
SCALING_RATIO = 0.5
SCALING_N_LIST = [16, 32, 64]


def _parse_positive_int(env_val, default):
    if not env_val:
        return default
    try:
        v = int(env_val.strip())
    except ValueError:
        return default
    return v if v > 0 else default


# env overrides; CLI flags win over these
DEFAULT_THREADS = _parse_positive_int(os.getenv("VN_SKEW_THREADS"), os.cpu_count() or 1)
MC_BATCHES = _parse_positive_int(os.getenv("VN_SKEW_BATCHES"), 100)
DEBUG = os.getenv("VN_SKEW_DEBUG", "0") == "1"

# Exit codes of vn_skew.py
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_NUMERIC = 3

VERIFY_SUITES = {
    # polygamma summation identities + paired-sum relations
    "identities": {"name": "Polygamma summation identities", "enabled": True, "module": "identity_suite", "func": "verify_identities", "params": {"max_n": IDENTITIES_MAX_N, "max_a": IDENTITIES_MAX_A}},
    # Table closed forms vs finite-sum assemblies of I_A, I_B, I_C
    "integrals":  {"name": "Integral route equality",       "enabled": True, "module": "laguerre_integrals", "func": "verify_integral_routes", "params": {"max_n": INTEGRALS_MAX_DIM}},
    # I_A - 3I_B + 2I_C -> kappa3^T -> kappa3
    "kappa3":     {"name": "Third cumulant chain",          "enabled": True, "module": "laguerre_integrals", "func": "verify_kappa3_chain", "params": {"max_n": KAPPA3_MAX_DIM}},
    # epsilon-limits of the log-derivative sums vs printed block formulas
    "poles":      {"name": "Pole cancellation",             "enabled": True, "module": "laguerre_integrals", "func": "verify_pole_cancellation", "params": {"max_n": POLES_MAX_DIM}},
}
