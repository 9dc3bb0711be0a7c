"""WAV ingestion/emission, controlled noise mixing at a target input SNR,
and reference-based output-SNR measurement.

Only 16-bit PCM mono RIFF files are handled.  Samples are clipped to
[-1, 1] on write (clipping, not wrap-around, to avoid catastrophic
artifacts in enhanced output).
"""

from __future__ import annotations

import csv
import warnings
import wave
from dataclasses import dataclass

import numpy as np

from .spectral import TimeSignal

_FULL_SCALE = 32767.0
OUTPUT_SNR_CLAMP_DB = 100.0


@dataclass(frozen=True)
class WavFile:
    path: str
    sample_rate: int
    bit_depth: int
    channels: int
    samples: TimeSignal


@dataclass(frozen=True)
class SnrReport:
    """Rows of (noise_name, input_snr_db, algorithm, output_snr_db)."""

    rows: tuple

    CSV_HEADER = ("noise", "input_snr_db", "algorithm", "output_snr_db")

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.CSV_HEADER)
            for noise, snr_in, algo, snr_out in self.rows:
                writer.writerow([noise, repr(float(snr_in)), algo,
                                 repr(float(snr_out))])

    @classmethod
    def read_csv(cls, path) -> "SnrReport":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = tuple(next(reader))
            if header != cls.CSV_HEADER:
                raise ValueError("unexpected SNR report header")
            rows = tuple((noise, float(snr_in), algo, float(snr_out))
                         for noise, snr_in, algo, snr_out in reader)
        return cls(rows=rows)


def read_wav(path) -> WavFile:
    """Read a 16-bit PCM mono WAV file into a float signal in [-1, 1]."""
    try:
        with wave.open(str(path), "rb") as wf:
            channels = wf.getnchannels()
            sampwidth = wf.getsampwidth()
            rate = wf.getframerate()
            n = wf.getnframes()
            raw = wf.readframes(n)
    except (wave.Error, EOFError) as exc:
        raise ValueError(f"malformed WAV: {path}: {exc}") from exc
    if channels != 1:
        raise ValueError(f"unsupported channel count: {channels} (mono only)")
    if sampwidth != 2:
        raise ValueError(f"unsupported bit depth: {8 * sampwidth} (16-bit only)")
    if rate not in (8000, 16000):
        warnings.warn(f"unusual sample rate {rate} Hz (expected 8000 or 16000)")
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / _FULL_SCALE
    return WavFile(path=str(path), sample_rate=rate, bit_depth=16, channels=1,
                   samples=TimeSignal(samples=samples, sample_rate=rate))


def write_wav(signal: TimeSignal, path) -> None:
    """Write a signal as 16-bit PCM mono, clipping to [-1, 1] first."""
    clipped = np.clip(signal.samples, -1.0, 1.0)
    pcm = np.rint(clipped * _FULL_SCALE).astype("<i2")
    with wave.open(str(path), "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(signal.sample_rate)
        wf.writeframes(pcm.tobytes())


def _fit_length(noise: np.ndarray, n: int) -> np.ndarray:
    """Tile the noise cyclically (or truncate) to n samples."""
    if len(noise) >= n:
        return noise[:n]
    reps = -(-n // len(noise))
    return np.tile(noise, reps)[:n]


def mix_at_snr(clean: TimeSignal, noise: TimeSignal,
               target_snr_db: float) -> TimeSignal:
    """clean + g*noise with g chosen so the mixture's input SNR equals the
    target (within 0.01 dB)."""
    if clean.sample_rate != noise.sample_rate:
        raise ValueError("sample rate mismatch")
    n = _fit_length(noise.samples, len(clean))
    p_clean = float(np.mean(clean.samples ** 2))
    p_noise = float(np.mean(n ** 2))
    if p_clean == 0.0 or p_noise == 0.0:
        raise ValueError("degenerate mix: silent clean or noise input")
    g = np.sqrt(p_clean / (p_noise * 10.0 ** (target_snr_db / 10.0)))
    return TimeSignal(samples=clean.samples + g * n,
                      sample_rate=clean.sample_rate)


def output_snr(clean: TimeSignal, processed: TimeSignal) -> float:
    """Reference-based SNR: 10 log10(sum clean^2 / sum (processed - clean)^2),
    clamped to +100 dB for (near-)identical signals."""
    if len(clean) != len(processed):
        raise ValueError("length mismatch")
    err = float(np.sum((processed.samples - clean.samples) ** 2))
    sig = float(np.sum(clean.samples ** 2))
    if err == 0.0:
        return OUTPUT_SNR_CLAMP_DB
    return min(10.0 * np.log10(sig / err), OUTPUT_SNR_CLAMP_DB)
