"""Multi-band magnitude and phase spectral subtraction speech enhancement.

Frame-based enhancement of noisy speech with four selectable algorithms
(``mss``, ``mpss``, ``mbmss``, ``mbmpss``), a floating-point reference path
and a bit-faithful fixed-point CORDIC path, plus WAV utilities and a
hardware latency model.
"""

from ._kernels import BACKEND
from .audio import SnrReport, WavFile, mix_at_snr, output_snr, read_wav, write_wav
from .bands import (
    BandGains,
    BandPartition,
    band_gains,
    over_subtraction_factor,
    partition,
    segmental_snr,
    tweaking_factor,
)
from .cordic import (
    CORDIC_GAIN,
    FixedPoint,
    LatencyModel,
    cordic_rotation,
    cordic_vectoring,
    total_pipeline_delay,
)
from .enhance import (
    ALGORITHMS,
    MBMPSS,
    MBMSS,
    MPSS,
    MSS,
    EnhancerConfig,
    enhance,
    enhance_frame,
)
from .noise import NoiseProfile, estimate_noise, load_profile, save_profile, update_noise
from .spectral import (
    ComplexSpectrum,
    Frame,
    MagPhaseSpectrum,
    TimeSignal,
    fft,
    from_mag_phase,
    ifft,
    segment,
    to_mag_phase,
    wrap_phase,
)
from .synth import clean_surrogate, white_noise

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BACKEND",
    "BandGains",
    "BandPartition",
    "CORDIC_GAIN",
    "ComplexSpectrum",
    "EnhancerConfig",
    "FixedPoint",
    "Frame",
    "LatencyModel",
    "MBMPSS",
    "MBMSS",
    "MPSS",
    "MSS",
    "MagPhaseSpectrum",
    "NoiseProfile",
    "SnrReport",
    "TimeSignal",
    "WavFile",
    "band_gains",
    "clean_surrogate",
    "cordic_rotation",
    "cordic_vectoring",
    "enhance",
    "enhance_frame",
    "estimate_noise",
    "fft",
    "from_mag_phase",
    "ifft",
    "load_profile",
    "mix_at_snr",
    "output_snr",
    "over_subtraction_factor",
    "partition",
    "read_wav",
    "save_profile",
    "segment",
    "segmental_snr",
    "to_mag_phase",
    "total_pipeline_delay",
    "tweaking_factor",
    "update_noise",
    "white_noise",
    "wrap_phase",
    "write_wav",
]
