"""End-to-end CLI behavior: subcommands, exit codes and config precedence."""

import numpy as np
import pytest

from specsub import cli
from specsub.audio import SnrReport, read_wav, write_wav
from specsub.synth import clean_surrogate, white_noise


def run(argv):
    try:
        return cli.main(argv)
    except SystemExit as exc:
        return exc.code


@pytest.fixture
def wavs(tmp_path):
    clean = tmp_path / "clean.wav"
    noise = tmp_path / "noise.wav"
    write_wav(clean_surrogate(duration_s=1.5), clean)
    write_wav(white_noise(duration_s=1.5, seed=1), noise)
    return tmp_path, clean, noise


def test_no_command_is_usage_error(capsys):
    assert run([]) == cli.EXIT_USAGE


def test_unknown_command_is_usage_error():
    assert run(["transmogrify"]) == cli.EXIT_USAGE


def test_latency_defaults(capsys):
    assert run(["latency"]) == 0
    out = capsys.readouterr().out
    assert "604 units" in out
    assert "6.04 us" in out


def test_latency_zero_clock_fails():
    assert run(["latency", "--clock-mhz", "0"]) == cli.EXIT_USAGE


def test_synth_mix_enhance_round_trip(wavs, capsys):
    tmp_path, clean, noise = wavs
    mixed = tmp_path / "mixed.wav"
    out = tmp_path / "out.wav"
    assert run(["mix", str(clean), str(noise), str(mixed), "--snr", "0"]) == 0
    assert run(["enhance", str(mixed), str(out)]) == 0
    assert out.exists()
    text = capsys.readouterr().out
    assert "per-band gains" in text
    assert "alpha=" in text
    assert len(read_wav(out).samples) == len(read_wav(mixed).samples)


def test_enhance_missing_input_is_data_error(tmp_path):
    assert run(["enhance", str(tmp_path / "nope.wav"),
                str(tmp_path / "out.wav")]) == cli.EXIT_DATA


def test_enhance_bad_frame_is_nonzero(wavs):
    tmp_path, clean, noise = wavs
    code = run(["enhance", str(clean), str(tmp_path / "o.wav"),
                "--frame", "300"])
    assert code == cli.EXIT_DATA


def test_enhance_mss_forces_single_band(wavs):
    tmp_path, clean, noise = wavs
    with pytest.warns(UserWarning, match="bands forced to 1 for MSS"):
        code = run(["enhance", str(clean), str(tmp_path / "o.wav"),
                    "--algorithm", "mss", "--bands", "4"])
    assert code == 0


def test_synth_command(tmp_path):
    c = tmp_path / "c.wav"
    n = tmp_path / "n.wav"
    assert run(["synth", "--duration", "1.0", "--clean-out", str(c),
                "--noise-out", str(n)]) == 0
    assert len(read_wav(c).samples) == 8000
    assert len(read_wav(n).samples) == 8000


@pytest.mark.filterwarnings("ignore:bands forced to 1")
def test_compare_deterministic(wavs):
    tmp_path, clean, noise = wavs
    out1 = tmp_path / "r1.csv"
    out2 = tmp_path / "r2.csv"
    args = ["compare", str(clean), str(noise), "--snrs", "0", "--out"]
    assert run(args + [str(out1)]) == 0
    assert run(args + [str(out2)]) == 0
    r1 = SnrReport.read_csv(out1)
    r2 = SnrReport.read_csv(out2)
    assert r1.rows == r2.rows
    assert len(r1.rows) == 4
    algos = [row[2] for row in r1.rows]
    assert algos == ["mss", "mpss", "mbmss", "mbmpss"]


def test_config_file_and_flag_precedence(wavs, monkeypatch, capsys):
    tmp_path, clean, noise = wavs
    cfg = tmp_path / "specsub.cfg"
    cfg.write_text("algorithm = mbmss\nbands = 2\n# comment\n")
    out = tmp_path / "o.wav"
    monkeypatch.setenv(cli.CONFIG_ENV_VAR, str(cfg))
    assert run(["enhance", str(clean), str(out)]) == 0
    text = capsys.readouterr().out
    assert text.count("bins") == 2  # bands=2 from the config file
    assert run(["enhance", str(clean), str(out), "--bands", "4"]) == 0
    text = capsys.readouterr().out
    assert text.count("bins") == 4  # flag wins over the file


def test_config_file_bad_key(wavs, tmp_path):
    _, clean, noise = wavs
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("volume = 11\n")
    code = run(["enhance", str(clean), str(tmp_path / "o.wav"),
                "--config", str(cfg)])
    assert code == cli.EXIT_DATA
