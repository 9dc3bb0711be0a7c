"""Frame segmentation, FFT/IFFT and rectangular/polar spectrum conversion.

Floating-point reference path.  Conventions fixed repo-wide: the forward
transform is unnormalized, the inverse carries the 1/N factor, and phases
live in (-pi, pi].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * np.pi


def _as_float_array(samples) -> np.ndarray:
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("expected a 1-D sample sequence")
    return arr


@dataclass(frozen=True)
class TimeSignal:
    """Mono sampled audio: amplitudes nominally in [-1, 1] plus a sample rate."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        arr = _as_float_array(self.samples)
        object.__setattr__(self, "samples", arr)
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate


@dataclass(frozen=True)
class Frame:
    """One fixed-length block of time-domain samples."""

    samples: np.ndarray
    index: int
    is_partial: bool = False  # True when the tail was zero-padded

    def __post_init__(self):
        object.__setattr__(self, "samples", _as_float_array(self.samples))

    def __len__(self) -> int:
        return len(self.samples)


@dataclass(frozen=True)
class ComplexSpectrum:
    """One frame's spectrum in rectangular form (unnormalized DFT bins)."""

    bins: np.ndarray
    frame_index: int = 0

    def __post_init__(self):
        arr = np.asarray(self.bins, dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError("expected a 1-D bin sequence")
        object.__setattr__(self, "bins", arr)

    def __len__(self) -> int:
        return len(self.bins)


@dataclass(frozen=True)
class MagPhaseSpectrum:
    """One frame's spectrum in polar form.

    Magnitudes are non-negative; phases are radians in (-pi, pi].  The phase
    of a zero-magnitude bin is defined as 0 so the representation is total.
    """

    magnitudes: np.ndarray
    phases: np.ndarray
    frame_index: int = 0

    def __post_init__(self):
        mag = _as_float_array(self.magnitudes)
        ph = _as_float_array(self.phases)
        if len(mag) != len(ph):
            raise ValueError("magnitude/phase length mismatch")
        if np.any(mag < 0):
            raise ValueError("magnitudes must be non-negative")
        object.__setattr__(self, "magnitudes", mag)
        object.__setattr__(self, "phases", ph)

    def __len__(self) -> int:
        return len(self.magnitudes)


def _require_pow2(n: int):
    if n < 2 or n & (n - 1):
        raise ValueError("frame length must be a power of two >= 2")


def wrap_phase(phase):
    """Map radians into (-pi, pi]."""
    p = np.asarray(phase, dtype=np.float64)
    w = p - TWO_PI * np.floor((p + np.pi) / TWO_PI)
    w = np.where(w <= -np.pi, w + TWO_PI, w)
    return w if w.ndim else float(w)


def segment(signal: TimeSignal, frame_len: int) -> list[Frame]:
    """Split a signal into contiguous non-overlapping frames.

    A trailing partial frame is zero-padded to ``frame_len`` and flagged, so
    the evaluation layer can exclude the pad.
    """
    _require_pow2(frame_len)
    x = signal.samples
    if len(x) == 0:
        raise ValueError("signal too short")
    n_frames = -(-len(x) // frame_len)
    frames = []
    for i in range(n_frames):
        chunk = x[i * frame_len:(i + 1) * frame_len]
        partial = len(chunk) < frame_len
        if partial:
            chunk = np.concatenate([chunk, np.zeros(frame_len - len(chunk))])
        frames.append(Frame(samples=chunk, index=i, is_partial=partial))
    return frames


def fft(frame: Frame) -> ComplexSpectrum:
    """Unnormalized DFT: X[k] = sum_m x[m] exp(-j 2 pi k m / N)."""
    _require_pow2(len(frame))
    return ComplexSpectrum(bins=np.fft.fft(frame.samples), frame_index=frame.index)


def ifft(spectrum: ComplexSpectrum) -> Frame:
    """Inverse DFT with the 1/N normalization; returns the real part."""
    _require_pow2(len(spectrum))
    x = np.fft.ifft(spectrum.bins)
    return Frame(samples=x.real, index=spectrum.frame_index)


def to_mag_phase(spectrum: ComplexSpectrum) -> MagPhaseSpectrum:
    """Rectangular -> polar; four-quadrant phases in (-pi, pi], 0 for zero bins."""
    bins = spectrum.bins
    mag = np.abs(bins)
    ph = np.where(mag == 0.0, 0.0, wrap_phase(np.angle(bins)))
    return MagPhaseSpectrum(magnitudes=mag, phases=ph, frame_index=spectrum.frame_index)


def from_mag_phase(mp: MagPhaseSpectrum) -> ComplexSpectrum:
    """Polar -> rectangular: re = m cos(phi), im = m sin(phi)."""
    bins = mp.magnitudes * (np.cos(mp.phases) + 1j * np.sin(mp.phases))
    return ComplexSpectrum(bins=bins, frame_index=mp.frame_index)
