"""Pure-numpy fixed-point CORDIC kernels (fallback backend).

Vectorized over int64 arrays; right shifts are arithmetic, matching the C
semantics of the compiled backend bit for bit.
"""

import numpy as np

from ._tables import FRAC_BITS, GUARD_BITS, INTERNAL_FRAC


def _round_out(v: np.ndarray) -> np.ndarray:
    return (v + (1 << (GUARD_BITS - 1))) >> GUARD_BITS


def cordic_vectoring_raw(re, im, atab, inv_gain, pi_int):
    """Vectoring mode: (re, im) in raw Q2.13 -> (magnitude, phase) raw Q2.13.

    Phase approximates atan2(im, re) in (-pi, pi]; magnitude is gain
    compensated.  (0, 0) maps to (0, 0).
    """
    re = np.asarray(re, dtype=np.int64)
    im = np.asarray(im, dtype=np.int64)
    x = re << GUARD_BITS
    y = im << GUARD_BITS
    neg = x < 0
    zoff = np.where(neg, np.where(y >= 0, pi_int, -pi_int), 0)
    x = np.where(neg, -x, x)
    y = np.where(neg, -y, y)
    z = np.zeros_like(x)
    for i, a in enumerate(atab):
        xs = x >> i
        ys = y >> i
        pos = y >= 0
        x = np.where(pos, x + ys, x - ys)
        y = np.where(pos, y - xs, y + xs)
        z = np.where(pos, z + a, z - a)
    phase = zoff + z
    phase = np.where(phase > pi_int, phase - 2 * pi_int, phase)
    phase = np.where(phase <= -pi_int, phase + 2 * pi_int, phase)
    mag = (x * np.int64(inv_gain)) >> INTERNAL_FRAC
    zero = (re == 0) & (im == 0)
    mag = np.where(zero, 0, _round_out(mag))
    phase = np.where(zero, 0, _round_out(phase))
    return mag, phase


def cordic_rotation_raw(theta, atab, inv_gain, pi_int):
    """Rotation mode: theta in raw Q2.13, pre-reduced to (-pi, pi] ->
    (cos, sin) raw Q2.13 with the gain compensated."""
    theta = np.asarray(theta, dtype=np.int64)
    z = theta << GUARD_BITS
    half_pi = pi_int >> 1
    hi = z > half_pi
    lo = z < -half_pi
    z = np.where(hi, z - pi_int, np.where(lo, z + pi_int, z))
    sign = np.where(hi | lo, np.int64(-1), np.int64(1))
    x = np.full_like(z, np.int64(inv_gain))
    y = np.zeros_like(z)
    for i, a in enumerate(atab):
        xs = x >> i
        ys = y >> i
        pos = z >= 0
        x = np.where(pos, x - ys, x + ys)
        y = np.where(pos, y + xs, y - xs)
        z = np.where(pos, z - a, z + a)
    return _round_out(sign * x), _round_out(sign * y)
