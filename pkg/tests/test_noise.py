"""Noise profile estimation, refresh and persistence."""

import numpy as np
import pytest

from specsub.noise import (
    NoiseProfile,
    estimate_noise,
    load_profile,
    save_profile,
    update_noise,
)
from specsub.spectral import MagPhaseSpectrum


def _frames(mags, phases):
    return [MagPhaseSpectrum(magnitudes=m, phases=p, frame_index=i)
            for i, (m, p) in enumerate(zip(mags, phases))]


def test_magnitude_mean():
    mags = [np.full(4, v) for v in (1.0, 2.0, 3.0)]
    phases = [np.zeros(4)] * 3
    prof = estimate_noise(_frames(mags, phases), k=3)
    np.testing.assert_allclose(prof.noise_mag, 2.0)
    assert prof.frames_used == 3


def test_extra_frames_ignored():
    mags = [np.full(2, 1.0), np.full(2, 1.0), np.full(2, 100.0)]
    phases = [np.zeros(2)] * 3
    prof = estimate_noise(_frames(mags, phases), k=2)
    np.testing.assert_allclose(prof.noise_mag, 1.0)


def test_coherent_phase_kept():
    phases = [np.full(3, 0.5)] * 5
    mags = [np.ones(3)] * 5
    prof = estimate_noise(_frames(mags, phases), k=5)
    np.testing.assert_allclose(prof.noise_phase, 0.5, atol=1e-12)
    np.testing.assert_allclose(prof.coherence, 1.0)


def test_circular_mean_near_pi():
    # arithmetic mean of {pi - 0.1, -pi + 0.1} is 0; circular mean is pi
    phases = [np.array([np.pi - 0.1]), np.array([-np.pi + 0.1])]
    mags = [np.ones(1)] * 2
    prof = estimate_noise(_frames(mags, phases), k=2)
    assert abs(prof.noise_phase[0]) == pytest.approx(np.pi, abs=1e-9)


def test_incoherent_phase_zeroed():
    rng = np.random.default_rng(3)
    phases = [rng.uniform(-np.pi, np.pi, 64) for _ in range(5)]
    mags = [np.ones(64)] * 5
    prof = estimate_noise(_frames(mags, phases), k=5)
    # with 5 uniform phases most bins fall below the coherence threshold
    zeroed = np.sum(prof.noise_phase == 0.0)
    assert zeroed > 60


def test_insufficient_frames():
    mags = [np.ones(2)]
    phases = [np.zeros(2)]
    with pytest.raises(ValueError, match="insufficient"):
        estimate_noise(_frames(mags, phases), k=5)


def test_update_weight_zero_is_frozen():
    prof = estimate_noise(_frames([np.ones(2)] * 2, [np.zeros(2)] * 2), k=2)
    frame = MagPhaseSpectrum(magnitudes=np.full(2, 9.0), phases=np.full(2, 1.0))
    assert update_noise(prof, frame, 0.0) is prof


def test_update_blends_magnitude():
    prof = estimate_noise(_frames([np.ones(2)] * 2, [np.zeros(2)] * 2), k=2)
    frame = MagPhaseSpectrum(magnitudes=np.full(2, 3.0), phases=np.zeros(2))
    new = update_noise(prof, frame, 0.5)
    np.testing.assert_allclose(new.noise_mag, 2.0)


def test_update_weight_validation():
    prof = estimate_noise(_frames([np.ones(1)], [np.zeros(1)]), k=1)
    frame = MagPhaseSpectrum(magnitudes=np.ones(1), phases=np.zeros(1))
    with pytest.raises(ValueError, match="weight"):
        update_noise(prof, frame, 1.5)


def test_profile_round_trip(tmp_path):
    rng = np.random.default_rng(11)
    prof = NoiseProfile(noise_mag=rng.uniform(0, 2, 16),
                        noise_phase=rng.uniform(-np.pi, np.pi, 16),
                        frames_used=5, coherence=rng.uniform(0, 1, 16))
    path = tmp_path / "profile.txt"
    save_profile(prof, path)
    back = load_profile(path)
    np.testing.assert_array_equal(back.noise_mag, prof.noise_mag)
    np.testing.assert_array_equal(back.noise_phase, prof.noise_phase)
    np.testing.assert_array_equal(back.coherence, prof.coherence)
    assert back.frames_used == 5


def test_profile_validation():
    with pytest.raises(ValueError, match="non-negative"):
        NoiseProfile(noise_mag=np.array([-1.0]), noise_phase=np.array([0.0]),
                     frames_used=1, coherence=np.array([1.0]))
    with pytest.raises(ValueError, match="length"):
        NoiseProfile(noise_mag=np.ones(2), noise_phase=np.zeros(1),
                     frames_used=1, coherence=np.ones(2))
