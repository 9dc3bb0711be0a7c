"""Linear band partitioning, per-band segmental SNR, and the
over-subtraction and tweaking factors that control subtraction strength.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .noise import NoiseProfile
from .spectral import MagPhaseSpectrum

#: SNR clamp keeping the over-subtraction factor well-defined for
#: silent/zero bands.
SNR_CLAMP_DB = 40.0

ENERGY_RATIO = "energy-ratio"
MAX_AMPLITUDE = "max-amplitude"
SNR_MODES = (ENERGY_RATIO, MAX_AMPLITUDE)


@dataclass(frozen=True)
class BandPartition:
    """Contiguous, non-overlapping inclusive (begin, end) bin ranges tiling
    [0, n_bins - 1]."""

    edges: tuple
    n_bands: int
    n_bins: int

    def __post_init__(self):
        if self.n_bands != len(self.edges):
            raise ValueError("n_bands must match the edge list")
        prev_end = -1
        for b, e in self.edges:
            if b != prev_end + 1 or e < b:
                raise ValueError("bands must contiguously tile the bin range")
            prev_end = e
        if prev_end != self.n_bins - 1:
            raise ValueError("bands must cover all bins")


@dataclass(frozen=True)
class BandGains:
    """Per-band over-subtraction factor, tweaking factor and segmental SNR."""

    alpha: tuple
    delta: tuple
    snr_db: tuple

    def __post_init__(self):
        if not (len(self.alpha) == len(self.delta) == len(self.snr_db)):
            raise ValueError("per-band arrays must share one length")
        if any(not 1.0 <= a <= 5.0 for a in self.alpha):
            raise ValueError("alpha out of range [1, 5]")
        if any(d not in (1.0, 1.5, 2.5) for d in self.delta):
            raise ValueError("delta must be one of {1, 1.5, 2.5}")


def partition(n_bins: int, n_bands: int) -> BandPartition:
    """Split bins into n_bands equal linear bands; the last band absorbs the
    remainder."""
    if n_bands < 1 or n_bands > n_bins:
        raise ValueError("need 1 <= n_bands <= n_bins")
    size = n_bins // n_bands
    edges = []
    for i in range(n_bands):
        begin = i * size
        end = n_bins - 1 if i == n_bands - 1 else (i + 1) * size - 1
        edges.append((begin, end))
    return BandPartition(edges=tuple(edges), n_bands=n_bands, n_bins=n_bins)


def segmental_snr(band_signal_mag, band_noise_mag, mode: str = ENERGY_RATIO) -> float:
    """Band SNR in dB, clamped to +-40.

    ``energy-ratio`` is the conventional ratio of band energies;
    ``max-amplitude`` approximates the hardware, which compares only the
    peak amplitudes of signal and noise within the band.
    """
    y = np.asarray(band_signal_mag, dtype=np.float64)
    n = np.asarray(band_noise_mag, dtype=np.float64)
    if y.shape != n.shape:
        raise ValueError("band length mismatch")
    if len(y) < 1:
        raise ValueError("empty band")
    if np.any(n < 0):
        raise ValueError("noise magnitudes must be non-negative")
    if mode == ENERGY_RATIO:
        py, pn = float(np.sum(y ** 2)), float(np.sum(n ** 2))
        if pn == 0.0 and py == 0.0:
            return 0.0
        if pn == 0.0:
            return SNR_CLAMP_DB
        if py == 0.0:
            return -SNR_CLAMP_DB
        return float(np.clip(10.0 * np.log10(py / pn), -SNR_CLAMP_DB, SNR_CLAMP_DB))
    if mode == MAX_AMPLITUDE:
        my, mn = float(np.max(np.abs(y))), float(np.max(n))
        if mn == 0.0 and my == 0.0:
            return 0.0
        if mn == 0.0:
            return SNR_CLAMP_DB
        if my == 0.0:
            return -SNR_CLAMP_DB
        return float(np.clip(20.0 * np.log10(my / mn), -SNR_CLAMP_DB, SNR_CLAMP_DB))
    raise ValueError(f"unknown SNR mode: {mode}")


def over_subtraction_factor(snr_db: float) -> float:
    """SNR-dependent subtraction multiplier: a linear ramp 4 - (3/20) SNR
    clipped to [1, 5], so it is continuous, non-increasing, equal to 4 at
    0 dB and saturating at 5 (low SNR) and 1 (SNR >= 20 dB)."""
    return float(np.clip(4.0 - 0.15 * snr_db, 1.0, 5.0))


def tweaking_factor(band_upper_hz: float, sample_rate: float) -> float:
    """Per-band subtraction control keyed on the band's upper edge:
    1 up to 1 kHz (protects the speech-dominant low band), 2.5 through the
    mid range, 1.5 above Fs/2 - 2 kHz."""
    if not 0.0 < band_upper_hz <= sample_rate / 2.0:
        raise ValueError("band upper edge must be in (0, Nyquist]")
    if band_upper_hz <= 1000.0:
        return 1.0
    if band_upper_hz <= sample_rate / 2.0 - 2000.0:
        return 2.5
    return 1.5


def band_upper_edges_hz(part: BandPartition, sample_rate: float,
                        frame_len: int) -> list[float]:
    """Upper edge frequency of each band, clamped to Nyquist (the last band
    may include the Nyquist bin)."""
    width = sample_rate / frame_len
    return [min((e + 1) * width, sample_rate / 2.0) for _, e in part.edges]


def band_gains(frame: MagPhaseSpectrum, profile: NoiseProfile,
               part: BandPartition, sample_rate: float, frame_len: int,
               mode: str = ENERGY_RATIO) -> BandGains:
    """Per-band SNR -> alpha, plus the frequency-keyed delta.

    Tweaking applies only to multi-band partitions; a single global band
    uses delta = 1 (the band-free formulation).
    """
    alphas, deltas, snrs = [], [], []
    uppers = band_upper_edges_hz(part, sample_rate, frame_len)
    for (b, e), upper in zip(part.edges, uppers):
        snr = segmental_snr(frame.magnitudes[b:e + 1],
                            profile.noise_mag[b:e + 1], mode)
        snrs.append(snr)
        alphas.append(over_subtraction_factor(snr))
        deltas.append(1.0 if part.n_bands == 1 else tweaking_factor(upper, sample_rate))
    return BandGains(alpha=tuple(alphas), delta=tuple(deltas), snr_db=tuple(snrs))
