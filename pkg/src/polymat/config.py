"""Budget configuration for the exhaustive scans and brute-force oracles."""

from __future__ import annotations

import os

VERSION = "0.1.0"

# Candidate-space cap for subset enumeration and divisor-lattice scans.
# 2**20 admits the full degree-3 scan on six variables.
DEFAULT_BUDGET = 1 << 20

ENV_BUDGET = "POLYMAT_BUDGET"


def default_budget() -> int:
    """Return the configured budget, honoring the POLYMAT_BUDGET environment variable."""
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{ENV_BUDGET} must be positive, got {value}")
    return value
