"""Configuration for spectral backends, oracle limits and numerical tolerances"""

import os
from dotenv import load_dotenv

load_dotenv()

# ============================================================================
# BACKEND SELECTION
# ============================================================================
# Options: "numpy" or "scipy"
SPECTRAL_BACKEND = os.getenv("SPECTRAL_BACKEND", "numpy").lower()

# ============================================================================
# DENSE ORACLE LIMITS
# ============================================================================
# Dense eigensolves are O(N^3); these caps keep a run under a few minutes
EXACT_MAX_N = int(os.getenv("EXACT_MAX_N", "4096"))
SWEEP_EXACT_MAX_N = int(os.getenv("SWEEP_EXACT_MAX_N", "2048"))
CONDEST_VERIFY_MAX_N = int(os.getenv("CONDEST_VERIFY_MAX_N", "2048"))

# ============================================================================
# QUADRATURE / SAMPLING
# ============================================================================
QUADRATURE_GRID = int(os.getenv("QUADRATURE_GRID", str(2**16)))
CDF_GRID = int(os.getenv("CDF_GRID", "4096"))

# ============================================================================
# COEFFICIENT FILES
# ============================================================================
# Largest k accepted from a coefficient file; stored densely as h[0..k]
COEFF_FILE_MAX_K = int(os.getenv("COEFF_FILE_MAX_K", str(2**22)))

# ============================================================================
# SWEEPS
# ============================================================================
SWEEP_WORKERS = int(os.getenv("SWEEP_WORKERS", "4"))

# ============================================================================
# TOLERANCES
# ============================================================================
HERMITIAN_TOL = 1e-12  # max-abs stored asymmetry accepted by the dense oracle
CIRCULANT_RESIDUE_TOL = 1e-9  # imaginary residue allowed per unit of ||row||_1

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
