"""Shared fixed-point constants for the CORDIC kernels.

Both backends (Cython and numpy) consume the same integer tables so their
outputs are bit-identical.  Micro-rotations run at ``FRAC_BITS + GUARD_BITS``
fractional bits; results are rounded back to the 16-bit Q2.13 output format.
"""

import math

TOTAL_BITS = 16
FRAC_BITS = 13
GUARD_BITS = 14
INTERNAL_FRAC = FRAC_BITS + GUARD_BITS

_SCALE = 1 << INTERNAL_FRAC

PI_INT = round(math.pi * _SCALE)


def atan_table(iterations: int) -> list[int]:
    """arctan(2^-i) for each micro-rotation, at internal precision."""
    return [round(math.atan(2.0 ** -i) * _SCALE) for i in range(iterations)]


def cordic_gain(iterations: int) -> float:
    g = 1.0
    for i in range(iterations):
        g *= math.sqrt(1.0 + 4.0 ** -i)
    return g


def inv_gain_int(iterations: int) -> int:
    """1/gain at internal precision (one post-multiply compensates the gain)."""
    return round(_SCALE / cordic_gain(iterations))
