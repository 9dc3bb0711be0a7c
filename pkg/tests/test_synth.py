"""Synthetic signal generators."""

import numpy as np
import pytest

from specsub.synth import clean_surrogate, white_noise


def test_surrogate_shape_and_lead_silence():
    sig = clean_surrogate(duration_s=2.0)
    assert len(sig) == 16000
    assert sig.sample_rate == 8000
    np.testing.assert_array_equal(sig.samples[:1600], 0.0)
    assert np.max(np.abs(sig.samples)) <= 1.0


def test_surrogate_deterministic():
    a = clean_surrogate(duration_s=1.0, seed=7)
    b = clean_surrogate(duration_s=1.0, seed=7)
    np.testing.assert_array_equal(a.samples, b.samples)
    c = clean_surrogate(duration_s=1.0, seed=8)
    assert not np.array_equal(a.samples, c.samples)


def test_surrogate_energy_is_low_frequency():
    sig = clean_surrogate(duration_s=2.0)
    spec = np.abs(np.fft.rfft(sig.samples)) ** 2
    freqs = np.fft.rfftfreq(len(sig), d=1 / sig.sample_rate)
    low = spec[freqs <= 1000].sum()
    assert low / spec.sum() > 0.95


def test_white_noise_stats():
    n = white_noise(duration_s=2.0, seed=1, rms=0.1)
    assert len(n) == 16000
    assert np.sqrt(np.mean(n.samples ** 2)) == pytest.approx(0.1, rel=0.05)
