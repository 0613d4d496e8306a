import io
import json
import subprocess
import sys

import numpy as np
import pytest

from wavefft import InvalidInputError, analyze, make_filter
from wavefft import io as wio
from wavefft.cli import run


class _Out(io.StringIO):
    """StringIO with a ``buffer`` so binary output also works."""

    def __init__(self):
        super().__init__()
        self.buffer = io.BytesIO()


def cli(*argv):
    out = _Out()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_signal_round_trip(rng):
    x = rng.standard_normal(17)
    np.testing.assert_array_equal(wio.parse_signal(wio.format_signal(x)), x)
    np.testing.assert_array_equal(wio.parse_signal("# c\n1, 2\n\n3\n"), [1, 2, 3])
    with pytest.raises(InvalidInputError):
        wio.parse_signal("1\nabc\n")


def test_complex_round_trip(rng):
    y = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    np.testing.assert_array_equal(wio.parse_complex(wio.format_complex(y)), y)
    np.testing.assert_array_equal(wio.parse_complex("1\n2,3\n"), [1, 2 + 3j])
    with pytest.raises(InvalidInputError):
        wio.parse_complex("1,2,3\n")


def test_pyramid_round_trip(rng):
    p = analyze(rng.standard_normal(16), "d4", 3, "paper")
    q = wio.parse_pyramid(wio.format_pyramid(p))
    assert q.normalization == "paper" and q.block_lengths == p.block_lengths
    np.testing.assert_array_equal(q.to_array(), p.to_array())
    with pytest.raises(InvalidInputError):
        wio.parse_pyramid("1\n2\n")


def test_filter_files(tmp_path):
    path = tmp_path / "mine.txt"
    path.write_text(wio.format_filter(make_filter("d4")))
    f = wio.load_filter(str(path))
    assert f.name == "d4" and f.coeffs == make_filter("d4").coeffs
    path.write_text("0.5\n1\n0.5\n")
    assert wio.load_filter(str(path)).name == "mine"
    assert wio.load_filter("HAAR").coeffs == (1.0, 1.0)


def test_matrix():
    np.testing.assert_array_equal(wio.parse_matrix("1,2\n3,4\n"), [[1, 2], [3, 4]])
    with pytest.raises(InvalidInputError):
        wio.parse_matrix("1,2\n3\n")


def test_pgm_with_comments_and_whitespace():
    raster = bytes(range(6))
    data = b"P5 # magic\n# a comment line\n3\t2\n\n# another\n255\n" + raster
    img = wio.parse_pgm(data)
    np.testing.assert_array_equal(img, np.arange(6).reshape(2, 3))
    np.testing.assert_array_equal(wio.parse_pgm(wio.format_pgm(img)), img)


@pytest.mark.parametrize(
    "data",
    [b"P2\n2 2\n255\n1 2 3 4", b"P5\n2 2\n65535\n" + bytes(8), b"P5\n2 2\n255\n\x00", b"P5\n2"],
)
def test_pgm_rejects(data):
    with pytest.raises(InvalidInputError):
        wio.parse_pgm(data)


def test_format_pgm_clamps():
    out = wio.parse_pgm(wio.format_pgm(np.array([[-5.0, 3.6], [300.0, 127.4]])))
    np.testing.assert_array_equal(out, [[0, 4], [255, 127]])


def test_atomic_write_leaves_nothing_on_failure(tmp_path):
    target = tmp_path / "out.txt"
    with pytest.raises(TypeError):
        wio.atomic_write(target, 123)
    assert list(tmp_path.iterdir()) == []


def test_cli_fwt_anchor(tmp_path):
    src = tmp_path / "x.csv"
    src.write_text("9\n1\n2\n0\n")
    code, out = cli("fwt", "--in", str(src), "--filter", "haar", "--normalization", "paper", "--levels", "2")
    assert code == 0
    assert wio.parse_signal(out).tolist() == [3, 2, 4, 1]


def test_cli_fwt_round_trip(tmp_path, rng):
    x = rng.standard_normal(64)
    src, pyr, back = tmp_path / "x.csv", tmp_path / "p.csv", tmp_path / "y.csv"
    src.write_text(wio.format_signal(x))
    assert cli("fwt", "--in", str(src), "--out", str(pyr))[0] == 0
    assert cli("fwt", "--inverse", "--in", str(pyr), "--out", str(back))[0] == 0
    assert np.max(np.abs(wio.parse_signal(back.read_text()) - x)) < 1e-10


def test_cli_deterministic(tmp_path, rng):
    src = tmp_path / "x.csv"
    src.write_text(wio.format_signal(rng.standard_normal(32)))
    runs = [cli("fwt", "--in", str(src))[1] for _ in range(2)]
    assert runs[0] == runs[1]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        cli("contest", "--in", str(src), "--report", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_cli_fft(tmp_path, capsys):
    src = tmp_path / "a.csv"
    src.write_text("re,im\n0,0\n1,0\n0,0\n0,0\n")
    code, out = cli("fft", "--in", str(src), "--count")
    assert code == 0
    np.testing.assert_allclose(wio.parse_complex(out), [1, 1j, -1, -1j], atol=1e-15)
    assert "multiplications=4" in capsys.readouterr().err
    inv = tmp_path / "y.csv"
    inv.write_text(out)
    np.testing.assert_allclose(wio.parse_complex(cli("fft", "--inverse", "--in", str(inv))[1]), [0, 1, 0, 0], atol=1e-15)


def _report(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_cli_check_filter():
    r = _report(cli("check-filter", "--filter", "d4")[1])
    assert (r["ortho_ok"], r["accuracy_order"], r["lawton_ok"]) == ("true", "2", "true")
    r = _report(cli("check-filter", "--filter", "stretched-box")[1])
    assert (r["ortho_ok"], r["lawton_ok"]) == ("true", "false")


def test_cli_cascade_and_wavelet():
    code, out = cli("cascade", "--filter", "hat", "--depth", "1")
    assert code == 0
    assert out.splitlines() == ["x,phi", "0.0,0.0", "0.5,0.5", "1.0,1.0", "1.5,0.5", "2.0,0.0"]
    code, out = cli("wavelet", "--filter", "haar", "--depth", "1")
    assert out.splitlines()[1:] == ["0.0,1.0", "0.5,-1.0", "1.0,0.0"]


def test_cli_jsr(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    a.write_text("0,2\n0,0\n")
    b.write_text("0,0\n2,0\n")
    code, out = cli("jsr", "--matrix-a", str(a), "--matrix-b", str(b), "--depth", "6", "--format", "json")
    row = json.loads(out)
    assert code == 0 and row["lower"] == pytest.approx(2.0) and row["upper"] >= 2.0
    code, out = cli("jsr", "--filter", "hat", "--depth", "6")
    header, values = out.strip().splitlines()
    row = dict(zip(header.split(","), values.split(",")))
    assert float(row["alpha_lower"]) == pytest.approx(1.0)


def test_cli_compress_signal(tmp_path):
    src, rec, rep = tmp_path / "s.csv", tmp_path / "r.csv", tmp_path / "rep.csv"
    src.write_text(wio.format_signal(np.repeat([1.0, 0.0], 32)))
    code, out = cli("compress", "--in", str(src), "--basis", "haar", "--keep", "0.1", "--out", str(rec), "--report", str(rep))
    assert code == 0 and out == ""
    assert rep.read_text().splitlines()[1].startswith("haar,0.1,7,")
    np.testing.assert_allclose(wio.parse_signal(rec.read_text()), np.repeat([1.0, 0.0], 32), atol=1e-12)


def test_cli_compress_image(tmp_path):
    img = np.add.outer(np.arange(16), np.arange(16)) * 7 % 256
    src, out = tmp_path / "i.pgm", tmp_path / "o.pgm"
    src.write_bytes(wio.format_pgm(img))
    code, text = cli("compress", "--in", str(src), "--basis", "d4", "--keep", "1", "--out", str(out))
    assert code == 0 and text.startswith("basis,")
    np.testing.assert_array_equal(wio.parse_pgm(out.read_bytes()), img)


def test_cli_errors(tmp_path, capsys):
    assert cli("fwt", "--bogus")[0] == 2
    assert cli()[0] == 2
    assert cli("jsr")[0] == 2
    assert cli("fwt", "--in", str(tmp_path / "missing.csv"))[0] == 1
    bad = tmp_path / "bad.csv"
    bad.write_text("1\n2\n3\n")
    out = tmp_path / "never.csv"
    assert cli("fwt", "--in", str(bad), "--out", str(out))[0] == 1
    assert not out.exists()
    assert cli("check-filter", "--filter", "nope")[0] == 1
    err = capsys.readouterr().err
    assert all(line for line in err.splitlines())


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "wavefft", "check-filter", "--filter", "haar"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "ortho_ok=true" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "wavefft", "nonsense"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and len(proc.stderr.strip().splitlines()) == 1
