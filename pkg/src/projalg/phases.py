"""Circle arithmetic for phases measured in radians.

Canonical representatives live in the half-open interval (-pi, pi]; all
comparisons between phases go through :func:`reduce_phase` so that values
differing by a multiple of 2*pi never show up as spurious residuals.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def reduce_phase(x):
    """Reduce radians to the canonical branch (-pi, pi].

    Accepts scalars or arrays and preserves shape; scalars come back as
    plain floats.
    """
    r = np.mod(x, TWO_PI)
    if isinstance(r, np.ndarray) and r.ndim:
        r[r > np.pi] -= TWO_PI
        return r
    r = float(r)
    return r - TWO_PI if r > np.pi else r


def circle_distance(x, y) -> float:
    """Distance between two phases measured around the circle."""
    return abs(reduce_phase(x - y))
