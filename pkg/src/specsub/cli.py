"""Command-line front end.

Subcommands: ``enhance`` a WAV file, ``mix`` clean+noise at a target SNR,
``compare`` the four algorithms into a CSV report, print the hardware
``latency`` model, and generate ``synth`` test signals.

Exit codes: 0 success, 1 usage error, 2 data error.  Flags override an
optional key=value config file (``--config`` or ``$SPECSUB_CONFIG``), which
overrides built-in defaults.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import synth
from .audio import SnrReport, mix_at_snr, output_snr, read_wav, write_wav
from .cordic import LatencyModel, total_pipeline_delay
from .enhance import ALGORITHMS, EnhancerConfig, enhance
from .spectral import TimeSignal

CONFIG_ENV_VAR = "SPECSUB_CONFIG"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_CONFIG_KEYS = {
    "algorithm": str,
    "bands": int,
    "frame": int,
    "beta": float,
    "noise_frames": int,
    "snr_mode": str,
    "arithmetic": str,
    "gamma": int,
}

_DEFAULTS = {
    "algorithm": "mbmpss",
    "bands": 4,
    "frame": 256,
    "beta": 0.0,
    "noise_frames": 5,
    "snr_mode": "energy-ratio",
    "arithmetic": "float-reference",
    "gamma": 1,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract says 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_config_file(path) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, raw = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _CONFIG_KEYS[key](raw.strip())
    return values


def _resolve_config(args) -> EnhancerConfig:
    values = dict(_DEFAULTS)
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if path:
        values.update(_load_config_file(path))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return EnhancerConfig(
        algorithm=values["algorithm"].lower(),
        frame_len=values["frame"],
        n_bands=values["bands"],
        noise_frames=values["noise_frames"],
        beta=values["beta"],
        gamma=values["gamma"],
        snr_mode=values["snr_mode"],
        arithmetic=values["arithmetic"],
    )


def _add_enhance_flags(p):
    p.add_argument("--config", help="key=value config file "
                   f"(default from ${CONFIG_ENV_VAR})")
    p.add_argument("--algorithm", choices=ALGORITHMS, type=str.lower)
    p.add_argument("--bands", type=int)
    p.add_argument("--frame", type=int)
    p.add_argument("--beta", type=float)
    p.add_argument("--noise-frames", dest="noise_frames", type=int)
    p.add_argument("--snr-mode", dest="snr_mode",
                   choices=["energy-ratio", "max-amplitude"])
    p.add_argument("--arithmetic", choices=["float-reference", "fixed-cordic"])
    p.add_argument("--gamma", type=int, choices=[1, 2])


def _cmd_enhance(args) -> int:
    config = _resolve_config(args)
    wav = read_wav(args.input)
    result = enhance(wav.samples, config)
    write_wav(result, args.output)
    _print_first_frame_gains(wav.samples, config)
    print(f"wrote {args.output}")
    return EXIT_OK


def _print_first_frame_gains(signal: TimeSignal, config: EnhancerConfig):
    from .bands import band_gains, partition
    from .enhance import _spectra
    from .noise import estimate_noise
    from .spectral import segment

    config = config.normalized()
    frames = segment(signal, config.frame_len)[:max(config.noise_frames, 1)]
    spectra = _spectra(frames, config)
    profile = estimate_noise(spectra, min(config.noise_frames, len(spectra)))
    part = partition(config.frame_len // 2 + 1, config.n_bands)
    gains = band_gains(spectra[0], profile, part, signal.sample_rate,
                       config.frame_len, config.snr_mode)
    print("first frame per-band gains:")
    for i, (edge, a, d, s) in enumerate(
            zip(part.edges, gains.alpha, gains.delta, gains.snr_db)):
        print(f"  band {i} bins {edge[0]}-{edge[1]}: "
              f"snr={s:.2f} dB alpha={a:.3f} delta={d}")


def _cmd_mix(args) -> int:
    clean = read_wav(args.clean).samples
    noise = read_wav(args.noise).samples
    mixed = mix_at_snr(clean, noise, args.snr)
    write_wav(mixed, args.output)
    print(f"wrote {args.output} at {args.snr:+.2f} dB input SNR")
    return EXIT_OK


def _cmd_compare(args) -> int:
    clean = read_wav(args.clean).samples
    noise = read_wav(args.noise).samples
    noise_name = os.path.splitext(os.path.basename(args.noise))[0]
    base = _resolve_config(args)
    rows = []
    for snr_db in args.snrs:
        mixed = mix_at_snr(clean, noise, snr_db)
        for algorithm in ALGORITHMS:
            config = EnhancerConfig(
                algorithm=algorithm, frame_len=base.frame_len,
                n_bands=base.n_bands, noise_frames=base.noise_frames,
                beta=base.beta, gamma=base.gamma, snr_mode=base.snr_mode,
                arithmetic=base.arithmetic).normalized()
            processed = enhance(mixed, config)
            rows.append((noise_name, snr_db, algorithm,
                         output_snr(clean, processed)))
    report = SnrReport(rows=tuple(rows))
    report.write_csv(args.out)
    for noise_name, snr_in, algorithm, snr_out in rows:
        print(f"{noise_name} {snr_in:+6.2f} dB {algorithm:>6}: "
              f"{snr_out:+7.3f} dB")
    print(f"wrote {args.out} ({len(rows)} rows)")
    return EXIT_OK


def _cmd_latency(args) -> int:
    if args.clock_mhz <= 0:
        raise SystemExit(EXIT_USAGE)
    model = LatencyModel(clock_hz=args.clock_mhz * 1e6)
    units, seconds = total_pipeline_delay(model)
    print(f"FFT                {model.fft_delay}")
    print(f"mag/phase extract  {model.magphase_delay}")
    print(f"mag/phase op       {model.op_delay} (parallel paths, counted once)")
    print(f"CORDIC sincos      {model.sincos_delay}")
    print(f"IFFT               {model.ifft_delay}")
    print(f"total: {units} units, {seconds * 1e6:.2f} us at {args.clock_mhz:g} MHz")
    return EXIT_OK


def _cmd_synth(args) -> int:
    clean = synth.clean_surrogate(duration_s=args.duration,
                                  sample_rate=args.sample_rate, seed=args.seed)
    write_wav(clean, args.clean_out)
    print(f"wrote {args.clean_out}")
    if args.noise_out:
        noise = synth.white_noise(duration_s=args.duration,
                                  sample_rate=args.sample_rate,
                                  seed=args.seed + 1)
        write_wav(noise, args.noise_out)
        print(f"wrote {args.noise_out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specsub",
                     description="Multi-band magnitude/phase spectral "
                                 "subtraction speech enhancement")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="enhance a noisy WAV file")
    p.add_argument("input")
    p.add_argument("output")
    _add_enhance_flags(p)
    p.set_defaults(func=_cmd_enhance)

    p = sub.add_parser("mix", help="mix clean + noise at a target input SNR")
    p.add_argument("clean")
    p.add_argument("noise")
    p.add_argument("output")
    p.add_argument("--snr", type=float, required=True, help="target input SNR (dB)")
    p.set_defaults(func=_cmd_mix)

    p = sub.add_parser("compare",
                       help="run all four algorithms over input SNR levels")
    p.add_argument("clean")
    p.add_argument("noise")
    p.add_argument("--snrs", type=float, nargs="+", required=True)
    p.add_argument("--out", required=True, help="output CSV report")
    _add_enhance_flags(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("latency", help="print the pipeline latency model")
    p.add_argument("--clock-mhz", type=float, default=100.0)
    p.set_defaults(func=_cmd_latency)

    p = sub.add_parser("synth", help="generate synthetic clean/noise WAVs")
    p.add_argument("--duration", type=float, default=4.0)
    p.add_argument("--sample-rate", type=int, default=8000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--clean-out", required=True)
    p.add_argument("--noise-out")
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"specsub: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
