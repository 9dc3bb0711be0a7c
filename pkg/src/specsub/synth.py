"""Seeded synthetic test signals: a clean speech surrogate and white noise.

The surrogate is a burst-modulated stack of harmonics placed on exact DFT
bin centers (for the default 256-sample frame) so its energy stays inside
the low-frequency band, with a silent lead-in long enough for the noise
estimator's write phase.
"""

from __future__ import annotations

import numpy as np

from .spectral import TimeSignal

#: Harmonic amplitude rolloff of the voiced surrogate.
_HARMONICS = (1.0, 0.7, 0.5, 0.35, 0.25)


def clean_surrogate(duration_s: float = 4.0, sample_rate: int = 8000,
                    seed: int = 7, lead_silence_s: float = 0.2,
                    frame_len: int = 256) -> TimeSignal:
    """Amplitude-modulated harmonic tone bursts preceded by silence.

    The fundamental sits on DFT bin 6 of a ``frame_len`` frame, keeping all
    harmonics below 1 kHz at 8 kHz sampling.
    """
    rng = np.random.default_rng(seed)
    n_total = int(round(duration_s * sample_rate))
    n_lead = int(round(lead_silence_s * sample_rate))
    t = np.arange(n_total - n_lead) / sample_rate
    f0 = 6 * sample_rate / frame_len
    x = np.zeros(len(t))
    for h, amp in enumerate(_HARMONICS, start=1):
        am = 0.8 + 0.2 * np.sin(2 * np.pi * 1.3 * t + rng.uniform(0, 2 * np.pi))
        x += amp * am * np.sin(2 * np.pi * f0 * h * t + rng.uniform(0, 2 * np.pi))
    # syllable-like bursts: ~40% duty cycle, 10 ms smoothed edges
    gate = (np.sin(2 * np.pi * 1.7 * t) ** 2 > 0.6).astype(float)
    w = max(int(0.01 * sample_rate), 1)
    kernel = np.hanning(2 * w + 1)
    kernel /= kernel.sum()
    gate = np.convolve(gate, kernel, mode="same")
    x *= 0.03 + 0.97 * gate
    x /= np.max(np.abs(x)) * 1.1
    return TimeSignal(samples=np.concatenate([np.zeros(n_lead), x]),
                      sample_rate=sample_rate)


def white_noise(duration_s: float = 4.0, sample_rate: int = 8000,
                seed: int = 1, rms: float = 0.1) -> TimeSignal:
    """Seeded Gaussian white noise at the given RMS level."""
    rng = np.random.default_rng(seed)
    n = int(round(duration_s * sample_rate))
    return TimeSignal(samples=rng.standard_normal(n) * rms,
                      sample_rate=sample_rate)
