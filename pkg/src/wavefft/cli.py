"""Command-line front end: ``wavefft <command> [options]``.

Commands: fwt, fft, check-filter, cascade, wavelet, jsr, compress, contest.
Exit status is 0 on success, 2 for usage errors and 1 for input/output or
numerical failures, with a one-line diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io as wio
from .compress import contest_report, compress_in_basis, parse_basis, report_rows
from .dilation import refine, wavelet_samples
from .errors import WaveletError
from .fft import fft_forward, fft_inverse
from .filters import check_conditions
from .fwt import NORMALIZATIONS, analyze, synthesize
from .jsr import neg_log2, jsr_bounds, reduced_pair


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(path: str | None, data: str | bytes, stdout):
    if path is None or path == "-":
        if isinstance(data, bytes):
            stdout.buffer.write(data)
        else:
            stdout.write(data)
    else:
        wio.atomic_write(path, data)


def _bool(v: bool) -> str:
    return "true" if v else "false"


def cmd_fwt(args, stdout):
    f = wio.load_filter(args.filter)
    if args.inverse:
        p = wio.parse_pyramid(_read_text(args.input))
        _emit(args.output, wio.format_signal(synthesize(p, f)), stdout)
        return
    x = wio.parse_signal(_read_text(args.input))
    p = analyze(x, f, args.levels, args.normalization)
    _emit(args.output, wio.format_pyramid(p), stdout)


def cmd_fft(args, stdout):
    a = wio.parse_complex(_read_text(args.input))
    if args.inverse:
        y = fft_inverse(a)
    else:
        spec, count = fft_forward(a)
        y = np.asarray(spec)
        if args.count:
            sys.stderr.write(f"multiplications={count.multiplications}\n")
    _emit(args.output, wio.format_complex(y), stdout)


def cmd_check_filter(args, stdout):
    f = wio.load_filter(args.filter)
    report = check_conditions(f, args.tol)
    lines = [f"filter={f.name or 'custom'}"]
    for key, value in report.as_dict().items():
        lines.append(f"{key}={_bool(value) if isinstance(value, bool) else value}")
    _emit(args.output, "\n".join(lines) + "\n", stdout)


def cmd_cascade(args, stdout):
    f = wio.load_filter(args.filter)
    s = refine(f, args.depth, allow_degenerate=True)
    _emit(args.output, wio.format_samples(s.x, s.values, "x,phi"), stdout)


def cmd_wavelet(args, stdout):
    f = wio.load_filter(args.filter)
    s = wavelet_samples(f, args.depth, allow_degenerate=True)
    _emit(args.output, wio.format_samples(s.x, s.values, "x,W"), stdout)


def cmd_jsr(args, stdout):
    if args.filter:
        pair = reduced_pair(wio.load_filter(args.filter))
        A, B = pair.A, pair.B
    elif args.matrix_a and args.matrix_b:
        A = wio.parse_matrix(Path(args.matrix_a).read_text())
        B = wio.parse_matrix(Path(args.matrix_b).read_text())
    else:
        raise UsageError("jsr: give --filter or both --matrix-a and --matrix-b")
    est = jsr_bounds(A, B, args.depth, args.norm)
    row = {
        "lower": est.lower,
        "upper": est.upper,
        "depth": est.depth,
        "argmax_word": est.argmax_word,
        "alpha_lower": neg_log2(est.upper),
        "alpha_upper": neg_log2(est.lower),
    }
    if args.format == "json":
        text = json.dumps(row) + "\n"
    else:
        text = ",".join(row) + "\n" + ",".join(
            wio.fmt(v) if isinstance(v, float) else str(v) for v in row.values()
        ) + "\n"
    _emit(args.output, text, stdout)


def _load_data(path: str):
    if path.lower().endswith(".pgm"):
        return wio.parse_pgm(Path(path).read_bytes()), True
    return wio.parse_signal(_read_text(path)), False


def _csv_text(rows) -> str:
    return "".join(",".join(r) + "\n" for r in rows)


def cmd_compress(args, stdout):
    data, is_image = _load_data(args.input)
    basis = parse_basis(args.basis, wio.load_filter)
    result, recon = compress_in_basis(data, basis, args.keep)
    if args.output:
        out = wio.format_pgm(recon) if is_image else wio.format_signal(recon)
        _emit(args.output, out, stdout)
    report = _csv_text(report_rows([result]))
    if args.report:
        _emit(args.report, report, stdout)
    elif args.output != "-":
        stdout.write(report)


def cmd_contest(args, stdout):
    data, _ = _load_data(args.input)
    bases = [parse_basis(b, wio.load_filter) for b in args.bases.split(",") if b]
    fractions = [float(v) for v in args.fractions.split(",") if v]
    rows = contest_report(data, bases, fractions, include_blocked=not args.no_blocked)
    _emit(args.report, _csv_text(report_rows(rows)), stdout)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wavefft", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("fwt", help="fast wavelet transform (analysis or synthesis)")
    s.add_argument("--in", dest="input", help="input CSV (default stdin)")
    s.add_argument("--out", dest="output", help="output CSV (default stdout)")
    s.add_argument("--filter", default="d4", help="built-in name or filter file (default d4)")
    s.add_argument("--levels", type=int, default=None, help="pyramid levels (default log2 n)")
    s.add_argument("--normalization", choices=NORMALIZATIONS, default="orthonormal")
    s.add_argument("--inverse", action="store_true", help="synthesize from a pyramid CSV")
    s.set_defaults(func=cmd_fwt)

    s = sub.add_parser("fft", help="radix-2 FFT of a re,im CSV")
    s.add_argument("--in", dest="input")
    s.add_argument("--out", dest="output")
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--count", action="store_true", help="print the multiplication count on stderr")
    s.set_defaults(func=cmd_fft)

    s = sub.add_parser("check-filter", help="sum, accuracy, orthogonality and Lawton tests")
    s.add_argument("--filter", required=True)
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--out", dest="output")
    s.set_defaults(func=cmd_check_filter)

    for name, func, helptext in (
        ("cascade", cmd_cascade, "scaling function on a dyadic grid"),
        ("wavelet", cmd_wavelet, "wavelet on a dyadic grid"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--filter", default="d4")
        s.add_argument("--depth", type=int, default=8, help="grid spacing 2^-depth (default 8)")
        s.add_argument("--out", dest="output")
        s.set_defaults(func=func)

    s = sub.add_parser("jsr", help="joint spectral radius bounds and Hoelder interval")
    s.add_argument("--filter")
    s.add_argument("--matrix-a")
    s.add_argument("--matrix-b")
    s.add_argument("--depth", type=int, default=12)
    s.add_argument("--norm", choices=("2", "inf"), default="2")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out", dest="output")
    s.set_defaults(func=cmd_jsr)

    s = sub.add_parser("compress", help="keep the largest coefficients and reconstruct")
    s.add_argument("--in", dest="input", required=True, help="signal CSV or P5 .pgm image")
    s.add_argument("--basis", default="d4")
    s.add_argument("--keep", type=float, default=0.05)
    s.add_argument("--out", dest="output")
    s.add_argument("--report")
    s.set_defaults(func=cmd_compress)

    s = sub.add_parser("contest", help="compare bases over several kept fractions")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--bases", default="haar,d4,fourier")
    s.add_argument("--fractions", default="0.05")
    s.add_argument("--no-blocked", action="store_true", help="omit the 8-sample blocked Fourier row")
    s.add_argument("--report")
    s.set_defaults(func=cmd_contest)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, stdout)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except (OSError, WaveletError, ValueError) as exc:
        sys.stderr.write(f"wavefft: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
