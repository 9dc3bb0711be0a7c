"""Fixed-point CORDIC emulation of the ARCTAN (vectoring) and SINCOS
(rotation) hardware blocks, plus the pipeline latency model.

Numbers are 16-bit Q2.13 two's complement (range [-4, 4), resolution 2^-13):
wide enough for phases in (-pi, pi] and unit-scale magnitudes with gain
headroom.  The CORDIC gain (~1.646760) is compensated by one post-multiply
with a precomputed reciprocal, matching vendor-core behavior.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels import FRAC_BITS, PI_INT, TOTAL_BITS, atan_table, cordic_gain, inv_gain_int

DEFAULT_ITERATIONS = 16

#: CORDIC gain at 16 iterations, prod_i sqrt(1 + 2^-2i)
CORDIC_GAIN = cordic_gain(DEFAULT_ITERATIONS)


@dataclass(frozen=True)
class FixedPoint:
    """A signed fixed-point sample: ``raw / 2**frac_bits``."""

    raw: int
    total_bits: int = TOTAL_BITS
    frac_bits: int = FRAC_BITS

    def __post_init__(self):
        lim = 1 << (self.total_bits - 1)
        if not -lim <= self.raw < lim:
            raise ValueError(
                f"raw value {self.raw} not representable in {self.total_bits}-bit "
                "two's complement"
            )

    @classmethod
    def from_float(cls, value: float, total_bits: int = TOTAL_BITS,
                   frac_bits: int = FRAC_BITS) -> "FixedPoint":
        lim = 1 << (total_bits - 1)
        raw = int(np.clip(round(value * (1 << frac_bits)), -lim, lim - 1))
        return cls(raw=raw, total_bits=total_bits, frac_bits=frac_bits)

    def to_float(self) -> float:
        return self.raw / (1 << self.frac_bits)


def _tables(iterations: int):
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    atab = np.asarray(atan_table(iterations), dtype=np.int64)
    return atab, inv_gain_int(iterations)


def quantize(values) -> np.ndarray:
    """Float array -> raw Q2.13 int64 array (round to nearest, saturate)."""
    lim = 1 << (TOTAL_BITS - 1)
    raw = np.rint(np.asarray(values, dtype=np.float64) * (1 << FRAC_BITS))
    return np.clip(raw, -lim, lim - 1).astype(np.int64)


def dequantize(raw) -> np.ndarray:
    return np.asarray(raw, dtype=np.float64) / (1 << FRAC_BITS)


def vectoring_array(re, im, iterations: int = DEFAULT_ITERATIONS):
    """Array vectoring on raw Q2.13 values -> (magnitude, phase) raw Q2.13."""
    atab, inv_gain = _tables(iterations)
    return _kernels.cordic_vectoring_raw(
        np.asarray(re, dtype=np.int64), np.asarray(im, dtype=np.int64),
        atab, inv_gain, PI_INT,
    )


def rotation_array(theta, iterations: int = DEFAULT_ITERATIONS):
    """Array rotation on raw Q2.13 angles in (-pi, pi] -> (cos, sin) raw Q2.13."""
    atab, inv_gain = _tables(iterations)
    return _kernels.cordic_rotation_raw(
        np.asarray(theta, dtype=np.int64), atab, inv_gain, PI_INT,
    )


def cordic_vectoring(re: FixedPoint, im: FixedPoint,
                     iterations: int = DEFAULT_ITERATIONS):
    """Scalar vectoring: phase ~ atan2(im, re), magnitude ~ hypot(re, im)
    with the CORDIC gain divided out.  (0, 0) -> (0, 0) by definition."""
    mag, ph = vectoring_array([re.raw], [im.raw], iterations)
    return FixedPoint(int(mag[0])), FixedPoint(int(ph[0]))


def cordic_rotation(theta: FixedPoint, iterations: int = DEFAULT_ITERATIONS):
    """Scalar rotation: theta pre-reduced to (-pi, pi] -> (cos, sin)."""
    cos_r, sin_r = rotation_array([theta.raw], iterations)
    return FixedPoint(int(cos_r[0])), FixedPoint(int(sin_r[0]))


@dataclass(frozen=True)
class LatencyModel:
    """Per-block unit delays of the enhancement pipeline.

    Defaults reproduce the hardware's measured block delays; the magnitude
    and phase paths run concurrently, so their shared operation delay is
    counted once.
    """

    fft_delay: int = 278
    magphase_delay: int = 13
    op_delay: int = 24
    sincos_delay: int = 11
    ifft_delay: int = 278
    clock_hz: float = 100e6

    def __post_init__(self):
        delays = (self.fft_delay, self.magphase_delay, self.op_delay,
                  self.sincos_delay, self.ifft_delay)
        if any(d < 0 for d in delays):
            raise ValueError("delays must be non-negative")
        if self.clock_hz <= 0:
            raise ValueError("clock_hz must be positive")


def total_pipeline_delay(model: LatencyModel) -> tuple[int, float]:
    """Total pipeline latency as (unit delays, seconds)."""
    units = (model.fft_delay + model.magphase_delay + model.op_delay
             + model.sincos_delay + model.ifft_delay)
    return units, units / model.clock_hz
