"""WAV round trips, mixing accuracy and SNR reporting."""

import wave

import numpy as np
import pytest

from specsub.audio import (
    SnrReport,
    mix_at_snr,
    output_snr,
    read_wav,
    write_wav,
)
from specsub.spectral import TimeSignal


def test_wav_round_trip(tmp_path):
    rng = np.random.default_rng(4)
    sig = TimeSignal(samples=rng.uniform(-0.9, 0.9, 800), sample_rate=8000)
    path = tmp_path / "x.wav"
    write_wav(sig, path)
    back = read_wav(path)
    assert back.sample_rate == 8000
    assert back.bit_depth == 16
    assert back.channels == 1
    assert len(back.samples) == 800
    # quantization to 16 bits bounds the round-trip error
    assert np.max(np.abs(back.samples.samples - sig.samples)) <= 1.0 / 32767


def test_write_clips(tmp_path):
    sig = TimeSignal(samples=np.array([2.0, -2.0, 0.0]), sample_rate=8000)
    path = tmp_path / "clip.wav"
    write_wav(sig, path)
    back = read_wav(path).samples.samples
    assert back[0] == pytest.approx(1.0)
    assert back[1] == pytest.approx(-1.0)
    assert back[2] == 0.0


def test_rejects_stereo(tmp_path):
    path = tmp_path / "stereo.wav"
    with wave.open(str(path), "wb") as wf:
        wf.setnchannels(2)
        wf.setsampwidth(2)
        wf.setframerate(8000)
        wf.writeframes(b"\x00" * 40)
    with pytest.raises(ValueError, match="channel"):
        read_wav(path)


def test_rejects_8bit(tmp_path):
    path = tmp_path / "8bit.wav"
    with wave.open(str(path), "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(1)
        wf.setframerate(8000)
        wf.writeframes(b"\x00" * 20)
    with pytest.raises(ValueError, match="bit depth"):
        read_wav(path)


def test_rejects_garbage(tmp_path):
    path = tmp_path / "bad.wav"
    path.write_bytes(b"this is not RIFF data")
    with pytest.raises(ValueError, match="malformed WAV"):
        read_wav(path)


def test_warns_on_odd_rate(tmp_path):
    sig = TimeSignal(samples=np.zeros(10), sample_rate=44100)
    path = tmp_path / "odd.wav"
    write_wav(sig, path)
    with pytest.warns(UserWarning, match="sample rate"):
        read_wav(path)


def _measured_snr(clean, mixed):
    noise = mixed.samples - clean.samples
    return 10 * np.log10(np.mean(clean.samples ** 2) / np.mean(noise ** 2))


@pytest.mark.parametrize("target", [-5.0, 0.0, 5.0, 10.0])
def test_mix_hits_target(target):
    rng = np.random.default_rng(12)
    clean = TimeSignal(samples=rng.standard_normal(4000), sample_rate=8000)
    noise = TimeSignal(samples=rng.standard_normal(1500), sample_rate=8000)
    mixed = mix_at_snr(clean, noise, target)
    assert _measured_snr(clean, mixed) == pytest.approx(target, abs=0.01)


def test_mix_tiles_short_noise():
    clean = TimeSignal(samples=np.ones(10), sample_rate=8000)
    noise = TimeSignal(samples=np.array([1.0, -1.0, 1.0]), sample_rate=8000)
    mixed = mix_at_snr(clean, noise, 0.0)
    assert len(mixed) == 10


def test_mix_degenerate_inputs():
    clean = TimeSignal(samples=np.zeros(10), sample_rate=8000)
    noise = TimeSignal(samples=np.ones(10), sample_rate=8000)
    with pytest.raises(ValueError, match="degenerate mix"):
        mix_at_snr(clean, noise, 0.0)
    with pytest.raises(ValueError, match="degenerate mix"):
        mix_at_snr(noise, clean, 0.0)


def test_mix_rate_mismatch():
    a = TimeSignal(samples=np.ones(10), sample_rate=8000)
    b = TimeSignal(samples=np.ones(10), sample_rate=16000)
    with pytest.raises(ValueError, match="sample rate"):
        mix_at_snr(a, b, 0.0)


def test_output_snr_identity_clamped():
    sig = TimeSignal(samples=np.ones(10), sample_rate=8000)
    assert output_snr(sig, sig) == 100.0


def test_output_snr_known_value():
    clean = TimeSignal(samples=np.ones(4), sample_rate=8000)
    noisy = TimeSignal(samples=np.ones(4) + 0.1, sample_rate=8000)
    assert output_snr(clean, noisy) == pytest.approx(20.0)


def test_snr_report_round_trip(tmp_path):
    rows = (("white", 0.0, "mss", 3.14159), ("pink", -5.0, "mbmpss", 9.5))
    rep = SnrReport(rows=rows)
    path = tmp_path / "report.csv"
    rep.write_csv(path)
    back = SnrReport.read_csv(path)
    assert back.rows == rows


def test_snr_report_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c,d\n")
    with pytest.raises(ValueError, match="header"):
        SnrReport.read_csv(path)
