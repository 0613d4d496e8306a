"""Plain-text formats: value-per-line CSV, complex ``re,im`` CSV, pyramid CSV,
filter files, binary PGM (P5) images.

Writers go through :func:`atomic_write` so a failed command never leaves a
partial output file behind.
"""

from __future__ import annotations

import csv
import io
import os
import re
import tempfile
from pathlib import Path

import numpy as np

from .errors import InvalidInputError
from .filters import BUILTIN_FILTERS, FilterCoefficients, make_filter
from .fwt import PyramidCoefficients


def fmt(v: float) -> str:
    """Shortest repr that round-trips exactly."""
    return repr(float(v))


def atomic_write(path, data: str | bytes):
    path = Path(path)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _data_lines(text: str):
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def parse_signal(text: str) -> np.ndarray:
    """One value per line; commas also separate values; ``#`` lines are comments."""
    values = []
    for line in _data_lines(text):
        for tok in line.split(","):
            tok = tok.strip()
            if tok:
                try:
                    values.append(float(tok))
                except ValueError as exc:
                    raise InvalidInputError(f"not a number: {tok!r}") from exc
    return np.array(values)


def format_signal(x) -> str:
    return "".join(fmt(v) + "\n" for v in np.asarray(x, dtype=float))


def parse_complex(text: str) -> np.ndarray:
    """CSV with columns ``re,im``; a header row is optional."""
    rows = list(csv.reader(_data_lines(text)))
    if rows and rows[0] and rows[0][0].strip().lower() == "re":
        rows = rows[1:]
    out = []
    for row in rows:
        if len(row) == 1:
            row = [row[0], "0"]
        if len(row) != 2:
            raise InvalidInputError(f"expected re,im columns, got {row}")
        try:
            out.append(complex(float(row[0]), float(row[1])))
        except ValueError as exc:
            raise InvalidInputError(f"not a number in row {row}") from exc
    return np.array(out, dtype=complex)


def format_complex(y) -> str:
    y = np.asarray(y, dtype=complex)
    return "re,im\n" + "".join(f"{fmt(v.real)},{fmt(v.imag)}\n" for v in y)


_PYRAMID_HEADER = re.compile(r"#\s*pyramid\s+blocks=([\d,]+)\s+normalization=(\w+)")


def format_pyramid(p: PyramidCoefficients) -> str:
    header = f"# pyramid blocks={','.join(map(str, p.block_lengths))} normalization={p.normalization}\n"
    return header + format_signal(p.to_array())


def parse_pyramid(text: str) -> PyramidCoefficients:
    first = text.lstrip().splitlines()[0] if text.strip() else ""
    m = _PYRAMID_HEADER.match(first)
    if not m:
        raise InvalidInputError("missing '# pyramid blocks=... normalization=...' header")
    lengths = [int(v) for v in m.group(1).split(",") if v]
    p = PyramidCoefficients.from_array(parse_signal(text), lengths, m.group(2))
    p.validate()
    return p


def parse_filter(text: str, default_name: str | None = None) -> FilterCoefficients:
    """One coefficient per line with an optional ``# name: <label>`` header."""
    name = default_name
    for line in text.splitlines():
        m = re.match(r"\s*#\s*name:\s*(.+?)\s*$", line)
        if m:
            name = m.group(1)
            break
    return make_filter(parse_signal(text), name)


def format_filter(f: FilterCoefficients) -> str:
    head = f"# name: {f.name}\n" if f.name else ""
    return head + format_signal(f.c)


def load_filter(spec: str) -> FilterCoefficients:
    """A built-in name, or a path to a filter file."""
    if spec.strip().lower() in BUILTIN_FILTERS:
        return make_filter(spec)
    path = Path(spec)
    if path.is_file():
        return parse_filter(path.read_text(), path.stem)
    return make_filter(spec)  # raises with the list of built-ins


def parse_matrix(text: str) -> np.ndarray:
    rows = [[float(t) for t in row] for row in csv.reader(_data_lines(text))]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InvalidInputError("matrix CSV must have rows of equal length")
    return np.array(rows)


def format_samples(x, values, header: str = "x,value") -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    for a, b in zip(np.asarray(x, float), np.asarray(values, float)):
        buf.write(f"{fmt(a)},{fmt(b)}\n")
    return buf.getvalue()


def _pgm_tokens(data: bytes, count: int):
    """Read ``count`` header tokens, skipping whitespace and ``#`` comments."""
    tokens, pos = [], 0
    while len(tokens) < count:
        if pos >= len(data):
            raise InvalidInputError("truncated PGM header")
        ch = data[pos : pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            start = pos
            while pos < len(data) and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
                pos += 1
            tokens.append(data[start:pos])
    return tokens, pos


def parse_pgm(data: bytes) -> np.ndarray:
    """Binary PGM (P5) with ``maxval <= 255`` to a float array."""
    tokens, pos = _pgm_tokens(data, 4)
    if tokens[0] != b"P5":
        raise InvalidInputError("only binary PGM (P5) is supported")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError as exc:
        raise InvalidInputError("malformed PGM header") from exc
    if not 0 < maxval < 256:
        raise InvalidInputError("only 8-bit PGM (maxval < 256) is supported")
    pos += 1  # exactly one whitespace byte precedes the raster
    if len(data) - pos < width * height:
        raise InvalidInputError("PGM raster is shorter than width * height")
    raster = np.frombuffer(data, dtype=np.uint8, count=width * height, offset=pos)
    return raster.reshape(height, width).astype(float)


def format_pgm(image) -> bytes:
    img = np.clip(np.rint(np.asarray(image, dtype=float)), 0, 255).astype(np.uint8)
    h, w = img.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + img.tobytes()
