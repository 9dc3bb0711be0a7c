"""Noise spectrum estimation from the leading noise-only frames.

Mirrors the write-before-read RAM block: the first k spectral frames are
averaged into a profile which is then frozen; later frames pass through
untouched.  Magnitudes are averaged arithmetically; phases circularly
(angle of the mean unit phasor), because arithmetic means of angles near
+-pi are meaningless.

The circular mean of incoherent phases (resultant length near zero) is an
arbitrary angle, and subtracting an arbitrary angle only randomizes the
output phase spectrum.  The estimator therefore reports a per-bin coherence
(the resultant length) and zeroes the phase estimate below
``coherence_min``; deterministic noise keeps its phase estimate (coherence
near 1), random noise contributes none.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .spectral import MagPhaseSpectrum, wrap_phase

#: Resultant length below which a circular phase mean is treated as
#: meaningless.  At k=5 the false-accept rate for uniform phases is < 1%.
DEFAULT_COHERENCE_MIN = 0.9


@dataclass(frozen=True)
class NoiseProfile:
    """Per-bin noise magnitude/phase estimate from k leading frames."""

    noise_mag: np.ndarray
    noise_phase: np.ndarray
    frames_used: int
    coherence: np.ndarray

    def __post_init__(self):
        mag = np.asarray(self.noise_mag, dtype=np.float64)
        ph = np.asarray(self.noise_phase, dtype=np.float64)
        coh = np.asarray(self.coherence, dtype=np.float64)
        if not (len(mag) == len(ph) == len(coh)):
            raise ValueError("profile arrays must share one length")
        if np.any(mag < 0):
            raise ValueError("noise magnitudes must be non-negative")
        if self.frames_used < 1:
            raise ValueError("frames_used must be >= 1")
        object.__setattr__(self, "noise_mag", mag)
        object.__setattr__(self, "noise_phase", ph)
        object.__setattr__(self, "coherence", coh)

    def __len__(self) -> int:
        return len(self.noise_mag)


def estimate_noise(frames, k: int,
                   coherence_min: float = DEFAULT_COHERENCE_MIN) -> NoiseProfile:
    """Build a profile from the first k spectra of ``frames``.

    Frames beyond k are ignored (read-mode passthrough).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    frames = list(frames)
    if len(frames) < k:
        raise ValueError("insufficient leading noise frames")
    mags = np.stack([f.magnitudes for f in frames[:k]])
    phases = np.stack([f.phases for f in frames[:k]])
    noise_mag = mags.mean(axis=0)
    mean_phasor = np.exp(1j * phases).mean(axis=0)
    coherence = np.abs(mean_phasor)
    noise_phase = np.where(coherence >= coherence_min,
                           wrap_phase(np.angle(mean_phasor)), 0.0)
    return NoiseProfile(noise_mag=noise_mag, noise_phase=noise_phase,
                        frames_used=k, coherence=coherence)


def update_noise(profile: NoiseProfile, frame: MagPhaseSpectrum,
                 weight: float) -> NoiseProfile:
    """Optional exponential refresh; weight 0 (the default pipeline setting)
    keeps the profile frozen like the hardware RAM."""
    if not 0.0 <= weight <= 1.0:
        raise ValueError("weight must be in [0, 1]")
    if weight == 0.0:
        return profile
    new_mag = (1.0 - weight) * profile.noise_mag + weight * frame.magnitudes
    old = profile.coherence * np.exp(1j * profile.noise_phase)
    new = (1.0 - weight) * old + weight * np.exp(1j * frame.phases)
    coherence = np.abs(new)
    phase = np.where(coherence > 0, wrap_phase(np.angle(new)), 0.0)
    return NoiseProfile(noise_mag=new_mag, noise_phase=phase,
                        frames_used=profile.frames_used, coherence=coherence)


def save_profile(profile: NoiseProfile, path) -> None:
    """Plain-text table: bin index, magnitude, phase, coherence."""
    lines = ["# bin magnitude phase coherence"]
    for i in range(len(profile)):
        lines.append(f"{i} {float(profile.noise_mag[i])!r} "
                     f"{float(profile.noise_phase[i])!r} "
                     f"{float(profile.coherence[i])!r}")
    lines.append(f"# frames_used {profile.frames_used}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_profile(path) -> NoiseProfile:
    mags, phases, cohs = [], [], []
    frames_used = 1
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["frames_used"]:
                frames_used = int(parts[1])
            continue
        _, mag, ph, coh = line.split()
        mags.append(float(mag))
        phases.append(float(ph))
        cohs.append(float(coh))
    return NoiseProfile(noise_mag=np.array(mags), noise_phase=np.array(phases),
                        frames_used=frames_used, coherence=np.array(cohs))
