"""The four subtraction algorithms: MSS, MPSS, MBMSS, MBMPSS.

Magnitude and phase paths are pure functions of the frame and the frozen
noise profile, so they can run in either order (or concurrently) with
identical results.  Negative-frequency bins are restored from the processed
positive bins by conjugate symmetry.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from . import cordic
from .bands import (
    ENERGY_RATIO,
    SNR_MODES,
    BandGains,
    BandPartition,
    band_gains,
    band_upper_edges_hz,
    over_subtraction_factor,
    partition,
    segmental_snr,
    tweaking_factor,
)
from .noise import NoiseProfile, estimate_noise
from .spectral import (
    ComplexSpectrum,
    MagPhaseSpectrum,
    TimeSignal,
    fft,
    from_mag_phase,
    ifft,
    segment,
    to_mag_phase,
    wrap_phase,
)

MSS = "mss"
MPSS = "mpss"
MBMSS = "mbmss"
MBMPSS = "mbmpss"
ALGORITHMS = (MSS, MPSS, MBMSS, MBMPSS)

FLOAT_REFERENCE = "float-reference"
FIXED_CORDIC = "fixed-cordic"

_SINGLE_BAND = (MSS, MPSS)
_PHASE_SUB = (MPSS, MBMPSS)


@dataclass(frozen=True)
class EnhancerConfig:
    algorithm: str = MBMPSS
    frame_len: int = 256
    n_bands: int = 4
    noise_frames: int = 5
    beta: float = 0.0
    gamma: int = 1
    snr_mode: str = ENERGY_RATIO
    arithmetic: str = FLOAT_REFERENCE
    share_alpha: bool = False  # phase path reuses the magnitude-path alphas
    window: str = "rectangular"  # only rectangular is implemented

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm: {self.algorithm}")
        if self.frame_len < 2 or self.frame_len & (self.frame_len - 1):
            raise ValueError("frame length must be a power of two")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must be in [0, 1]")
        if self.gamma not in (1, 2):
            raise ValueError("gamma must be 1 (magnitude) or 2 (power)")
        if self.snr_mode not in SNR_MODES:
            raise ValueError(f"unknown SNR mode: {self.snr_mode}")
        if self.arithmetic not in (FLOAT_REFERENCE, FIXED_CORDIC):
            raise ValueError(f"unknown arithmetic mode: {self.arithmetic}")
        if self.noise_frames < 1:
            raise ValueError("noise_frames must be >= 1")
        if self.n_bands < 1:
            raise ValueError("n_bands must be >= 1")
        if self.window != "rectangular":
            raise ValueError("only the rectangular window is implemented")

    def normalized(self) -> "EnhancerConfig":
        """Force a single band for the band-free algorithms."""
        if self.algorithm in _SINGLE_BAND and self.n_bands != 1:
            warnings.warn(f"bands forced to 1 for {self.algorithm.upper()}")
            return replace(self, n_bands=1)
        return self


@dataclass(frozen=True)
class EnhancedFrame:
    mag_phase: MagPhaseSpectrum
    per_band_gains: BandGains
    frame_index: int


def subtract_band_magnitude(y_mag, n_mag, alpha: float, delta: float,
                            beta: float = 0.0, gamma: int = 1) -> np.ndarray:
    """Per-bin s^g = max(y^g - alpha*delta*n^g, (beta*y)^g); returns s.

    beta = 0 is plain half-wave rectification.
    """
    y = np.asarray(y_mag, dtype=np.float64)
    n = np.asarray(n_mag, dtype=np.float64)
    if y.shape != n.shape:
        raise ValueError("band length mismatch")
    if np.any(y < 0) or np.any(n < 0):
        raise ValueError("magnitudes must be non-negative")
    s_pow = np.maximum(y ** gamma - alpha * delta * n ** gamma, (beta * y) ** gamma)
    return s_pow if gamma == 1 else s_pow ** (1.0 / gamma)


def subtract_band_phase(y_phase, n_phase, alpha: float, delta: float) -> np.ndarray:
    """Per-bin wrap(y_phase - alpha*delta*n_phase) into (-pi, pi].

    Phase subtraction is linear in radians regardless of gamma (raising an
    angle to a power is dimensionally meaningless).
    """
    y = np.asarray(y_phase, dtype=np.float64)
    n = np.asarray(n_phase, dtype=np.float64)
    if y.shape != n.shape:
        raise ValueError("band length mismatch")
    return wrap_phase(y - alpha * delta * n)


def phase_band_gains(frame: MagPhaseSpectrum, profile: NoiseProfile,
                     part: BandPartition, sample_rate: float, frame_len: int,
                     mode: str = ENERGY_RATIO) -> BandGains:
    """Phase-path gains: alphas from the energy of the (absolute) phase
    spectra, mirroring the separate per-path SNR blocks."""
    alphas, deltas, snrs = [], [], []
    uppers = band_upper_edges_hz(part, sample_rate, frame_len)
    for (b, e), upper in zip(part.edges, uppers):
        snr = segmental_snr(np.abs(frame.phases[b:e + 1]),
                            np.abs(profile.noise_phase[b:e + 1]), mode)
        snrs.append(snr)
        alphas.append(over_subtraction_factor(snr))
        deltas.append(1.0 if part.n_bands == 1 else tweaking_factor(upper, sample_rate))
    return BandGains(alpha=tuple(alphas), delta=tuple(deltas), snr_db=tuple(snrs))


def _magnitude_path(frame_mp, profile, config, part, gains):
    out = np.empty(part.n_bins)
    for i, (b, e) in enumerate(part.edges):
        out[b:e + 1] = subtract_band_magnitude(
            frame_mp.magnitudes[b:e + 1], profile.noise_mag[b:e + 1],
            gains.alpha[i], gains.delta[i], config.beta, config.gamma)
    return out


def _phase_path(frame_mp, profile, config, part, gains):
    if config.algorithm not in _PHASE_SUB:
        return np.array(frame_mp.phases[:part.n_bins])
    out = np.empty(part.n_bins)
    for i, (b, e) in enumerate(part.edges):
        out[b:e + 1] = subtract_band_phase(
            frame_mp.phases[b:e + 1], profile.noise_phase[b:e + 1],
            gains.alpha[i], gains.delta[i])
    return out


def recombine_bands(per_band_outputs, frame_len: int,
                    frame_index: int = 0) -> MagPhaseSpectrum:
    """Reassemble per-band (bin-range, magnitudes, phases) pieces into a full
    N-bin spectrum, mirroring negative-frequency bins by conjugate symmetry.
    """
    n_bins = frame_len // 2 + 1
    mag = np.full(n_bins, np.nan)
    ph = np.full(n_bins, np.nan)
    covered = np.zeros(n_bins, dtype=bool)
    for (b, e), m, p in per_band_outputs:
        if b < 0 or e >= n_bins or e < b:
            raise ValueError("band range outside positive-frequency bins")
        if covered[b:e + 1].any():
            raise ValueError("overlapping bands")
        covered[b:e + 1] = True
        mag[b:e + 1] = m
        ph[b:e + 1] = p
    if not covered.all():
        raise ValueError("bands do not cover all positive-frequency bins")
    return _mirror(mag, ph, frame_len, frame_index)


def _mirror(pos_mag, pos_phase, frame_len, frame_index):
    """Positive bins [0, N/2] -> full N-bin spectrum with conjugate symmetry."""
    mag = np.concatenate([pos_mag, pos_mag[1:frame_len // 2][::-1]])
    ph = np.concatenate([pos_phase, wrap_phase(-pos_phase[1:frame_len // 2][::-1])])
    return MagPhaseSpectrum(magnitudes=mag, phases=ph, frame_index=frame_index)


def enhance_frame(frame_mp: MagPhaseSpectrum, profile: NoiseProfile,
                  config: EnhancerConfig, part: BandPartition,
                  sample_rate: float = 8000) -> EnhancedFrame:
    """Apply the configured algorithm to one frame.

    The magnitude and phase paths are computed independently; the phase path
    is a passthrough for MSS/MBMSS.
    """
    n = config.frame_len
    if len(frame_mp) != n or part.n_bins != n // 2 + 1:
        raise ValueError("partition does not match the frame length")
    gains = band_gains(frame_mp, profile, part, sample_rate, n,
                       config.snr_mode)
    if config.algorithm in _PHASE_SUB and not config.share_alpha:
        ph_gains = phase_band_gains(frame_mp, profile, part, sample_rate,
                                    n, config.snr_mode)
    else:
        ph_gains = gains
    pos_mag = _magnitude_path(frame_mp, profile, config, part, gains)
    pos_phase = _phase_path(frame_mp, profile, config, part, ph_gains)
    mp = _mirror(pos_mag, pos_phase, n, frame_mp.frame_index)
    return EnhancedFrame(mag_phase=mp, per_band_gains=gains,
                         frame_index=frame_mp.frame_index)


def _spectra(frames, config):
    """Frames -> MagPhaseSpectrum list via the configured arithmetic path."""
    out = []
    for fr in frames:
        spec = fft(fr)
        if config.arithmetic == FIXED_CORDIC:
            out.append(_fixed_to_mag_phase(spec, config.frame_len))
        else:
            out.append(to_mag_phase(spec))
    return out


def _fixed_to_mag_phase(spec: ComplexSpectrum, n: int) -> MagPhaseSpectrum:
    # Spectrum bins scaled into the Q2.13 range (|X| <= N for unit samples),
    # quantized, run through CORDIC vectoring, scaled back.
    re = cordic.quantize(spec.bins.real / n)
    im = cordic.quantize(spec.bins.imag / n)
    mag_raw, ph_raw = cordic.vectoring_array(re, im)
    return MagPhaseSpectrum(
        magnitudes=cordic.dequantize(mag_raw) * n,
        phases=wrap_phase(cordic.dequantize(ph_raw)),
        frame_index=spec.frame_index,
    )


def _fixed_from_mag_phase(mp: MagPhaseSpectrum) -> ComplexSpectrum:
    theta = cordic.quantize(wrap_phase(mp.phases))
    cos_r, sin_r = cordic.rotation_array(theta)
    bins = mp.magnitudes * (cordic.dequantize(cos_r) + 1j * cordic.dequantize(sin_r))
    return ComplexSpectrum(bins=bins, frame_index=mp.frame_index)


def enhance(signal: TimeSignal, config: EnhancerConfig) -> TimeSignal:
    """Whole-signal pipeline: segment -> FFT -> polar -> noise profile from
    the first k frames -> per-frame subtraction -> inverse FFT -> concatenate.

    Output length equals input length (the zero pad of a trailing partial
    frame is removed).
    """
    config = config.normalized()
    n = config.frame_len
    if len(signal) < config.noise_frames * n:
        raise ValueError("signal too short for the leading noise estimate")
    frames = segment(signal, n)
    spectra = _spectra(frames, config)
    profile = estimate_noise(spectra, config.noise_frames)
    part = partition(n // 2 + 1, config.n_bands)
    out = np.empty(len(frames) * n)
    for mp in spectra:
        enhanced = enhance_frame(mp, profile, config, part, signal.sample_rate)
        if config.arithmetic == FIXED_CORDIC:
            spec = _fixed_from_mag_phase(enhanced.mag_phase)
        else:
            spec = from_mag_phase(enhanced.mag_phase)
        frame = ifft(spec)
        out[mp.frame_index * n:(mp.frame_index + 1) * n] = frame.samples
    return TimeSignal(samples=out[:len(signal)], sample_rate=signal.sample_rate)
