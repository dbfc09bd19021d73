"""Frozen reference values, transcribed once and never recomputed.

These are the published small tables the computed objects are compared with.
"""
from __future__ import annotations

# A_hat(n, k) for k = 1..n
ALT_EULERIAN_ROWS: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1, 1),
    3: (2, 2, 2),
    4: (5, 7, 7, 5),
    5: (16, 26, 36, 26, 16),
    6: (61, 117, 182, 182, 117, 61),
    7: (272, 594, 1056, 1196, 1056, 594, 272),
}

# E_hat_n(q), ascending coefficients
EHAT_COEFFS: dict[int, tuple[int, ...]] = {
    0: (1,),
    1: (1,),
    2: (1,),
    3: (1, 1),
    4: (2, 2, 1),
    5: (2, 5, 5, 3, 1),
    6: (5, 12, 16, 14, 9, 4, 1),
    7: (5, 21, 42, 56, 56, 44, 28, 14, 5, 1),
}

# Phi_hat_n(c, d) as word -> coefficient
PHI_HAT: dict[int, dict[str, int]] = {
    1: {"": 1},
    2: {"c": 1},
    3: {"cc": 2, "d": -1},
    4: {"ccc": 5, "cd": -2, "dc": -2},
    5: {"cccc": 16, "ccd": -7, "dcc": -7, "cdc": -5, "dd": 4},
    6: {
        "ccccc": 61,
        "cccd": -26, "dccc": -26,
        "cdcc": -21, "ccdc": -21,
        "dcd": 10,
        "cdd": 12, "ddc": 12,
    },
}

EULER = (1, 1, 1, 2, 5, 16, 61, 272, 1385)
CATALAN = (1, 1, 2, 5, 14, 42, 132)
# |R_n| for n = 0..4 (no double descent, no final descent); larger n only by brute force
R_COUNTS = (1, 1, 1, 3, 9)
