"""Bit-exact file I/O: CIFAR-10 binary records, SAUG1 containers, PPM, CSV.

SAUG1 container layout (all integers little-endian u32):

    bytes 0..4    magic "SAUG1"
    bytes 5..24   n, h, w, c, label_dim
    then          n * h * w * c image bytes, channel-planar per sample
    then          n * label_dim label bytes, each 0 or 1

Declared sizes must match the file length exactly.  CIFAR-10 batch files are
the published 3073-byte records: one label byte in [0, 9] followed by 3072
pixel bytes (1024 R, 1024 G, 1024 B, row-major 32x32); images load copy-free
into the in-memory channel-planar (3, 32, 32) layout.
"""

from __future__ import annotations

import csv
import struct
from pathlib import Path
from typing import Sequence

import numpy as np

from .pipeline import Sample

__all__ = [
    "FormatError",
    "SAUG_MAGIC",
    "CIFAR10_RECORD_LEN",
    "CIFAR10_CLASSES",
    "read_cifar10",
    "write_container",
    "read_container",
    "load_samples",
    "read_ppm",
    "write_ppm",
    "write_csv",
]


class FormatError(ValueError):
    """Malformed or unsupported file content."""


SAUG_MAGIC = b"SAUG1"
CIFAR10_RECORD_LEN = 3073
CIFAR10_CLASSES = 10
_HEADER = struct.Struct("<5I")


def read_cifar10(path) -> list[Sample]:
    """Read a CIFAR-10 binary batch file into samples with one-hot labels."""
    data = Path(path).read_bytes()
    n_full, rem = divmod(len(data), CIFAR10_RECORD_LEN)
    if rem:
        raise FormatError(f"truncated record at offset {n_full * CIFAR10_RECORD_LEN}")
    samples = []
    for i in range(n_full):
        off = i * CIFAR10_RECORD_LEN
        cls = data[off]
        if cls >= CIFAR10_CLASSES:
            raise FormatError(f"invalid label {cls} at offset {off}")
        pixels = np.frombuffer(data, dtype=np.uint8, count=3072, offset=off + 1)
        label = np.zeros(CIFAR10_CLASSES, dtype=np.uint8)
        label[cls] = 1
        samples.append(Sample(pixels.reshape(3, 32, 32).copy(), label))
    return samples


def write_container(samples: Sequence[Sample], path) -> None:
    """Serialize samples to a SAUG1 container (bit-exact roundtrip)."""
    n = len(samples)
    if n == 0:
        Path(path).write_bytes(SAUG_MAGIC + _HEADER.pack(0, 0, 0, 0, 0))
        return
    shape = samples[0].image.shape
    label_dim = len(samples[0].label)
    if len(shape) != 3:
        raise FormatError(f"container images must be (C, H, W), got shape {shape}")
    for s in samples:
        if s.image.shape != shape or len(s.label) != label_dim:
            raise FormatError(
                f"inhomogeneous samples: {s.image.shape}/{len(s.label)} "
                f"vs {shape}/{label_dim}"
            )
    c, h, w = shape
    parts = [SAUG_MAGIC, _HEADER.pack(n, h, w, c, label_dim)]
    parts.extend(np.ascontiguousarray(s.image).tobytes() for s in samples)
    parts.extend(s.label.tobytes() for s in samples)
    Path(path).write_bytes(b"".join(parts))


def read_container(path) -> list[Sample]:
    """Read a SAUG1 container, validating sizes and label bytes."""
    data = Path(path).read_bytes()
    if data[:5] != SAUG_MAGIC:
        raise FormatError(f"bad magic {data[:5]!r}, expected {SAUG_MAGIC!r}")
    if len(data) < 5 + _HEADER.size:
        raise FormatError("truncated container header")
    n, h, w, c, label_dim = _HEADER.unpack_from(data, 5)
    body = 5 + _HEADER.size
    expected = body + n * h * w * c + n * label_dim
    if len(data) != expected:
        raise FormatError(
            f"container length {len(data)} does not match declared sizes "
            f"(expected {expected})"
        )
    if n == 0:
        return []
    image_bytes = h * w * c
    labels = np.frombuffer(data, dtype=np.uint8, count=n * label_dim,
                           offset=body + n * image_bytes)
    if not np.all(labels <= 1):
        bad = int(np.argmax(labels > 1))
        raise FormatError(
            f"label byte {labels[bad]} at offset {body + n * image_bytes + bad} "
            f"is not 0 or 1"
        )
    samples = []
    for i in range(n):
        img = np.frombuffer(data, dtype=np.uint8, count=image_bytes,
                            offset=body + i * image_bytes)
        samples.append(
            Sample(img.reshape(c, h, w).copy(),
                   labels[i * label_dim:(i + 1) * label_dim].copy())
        )
    return samples


def load_samples(path) -> list[Sample]:
    """Read a SAUG1 container or a CIFAR-10 batch file, detected by magic."""
    with Path(path).open("rb") as fh:
        head = fh.read(5)
    if head == SAUG_MAGIC:
        return read_container(path)
    return read_cifar10(path)


def read_ppm(path) -> np.ndarray:
    """Read a binary P6 PPM (maxval 255) into a channel-planar (3, H, W) array."""
    data = Path(path).read_bytes()
    pos = 0

    def token() -> bytes:
        nonlocal pos
        while pos < len(data):
            ch = data[pos]
            if ch in b" \t\r\n":
                pos += 1
            elif ch == ord("#"):
                while pos < len(data) and data[pos] != ord("\n"):
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and data[pos] not in b" \t\r\n":
            pos += 1
        if start == pos:
            raise FormatError("unexpected end of PPM header")
        return data[start:pos]

    magic = token()
    if magic != b"P6":
        raise FormatError(f"unsupported PNM format {magic!r}, only binary P6")
    try:
        width, height, maxval = int(token()), int(token()), int(token())
    except ValueError as exc:
        raise FormatError(f"malformed PPM header: {exc}") from None
    if maxval != 255:
        raise FormatError(f"unsupported maxval {maxval}, only 255")
    if width <= 0 or height <= 0:
        raise FormatError(f"invalid dimensions {width}x{height}")
    if pos >= len(data) or data[pos] not in b" \t\r\n":
        raise FormatError("missing whitespace after maxval")
    pos += 1  # single whitespace byte separates header from raster
    raster = data[pos:]
    if len(raster) != width * height * 3:
        raise FormatError(
            f"raster length {len(raster)} does not match {width}x{height}x3"
        )
    arr = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    return np.ascontiguousarray(arr.transpose(2, 0, 1))


def write_ppm(image: np.ndarray, path) -> None:
    """Write a channel-planar (3, H, W) uint8 array as binary P6, maxval 255."""
    image = np.asarray(image)
    if image.dtype != np.uint8 or image.ndim != 3 or image.shape[0] != 3:
        raise FormatError(f"PPM needs a (3, H, W) uint8 image, got {image.dtype} {image.shape}")
    _, h, w = image.shape
    header = f"P6\n{w} {h}\n255\n".encode("ascii")
    Path(path).write_bytes(header + image.transpose(1, 2, 0).tobytes())


def _format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.6g}"
    return str(value)


def write_csv(table: Sequence[Sequence], path) -> None:
    """Write a rectangular table (header row first) as UTF-8 CSV, LF endings.

    Floats are rendered with 6 significant digits.
    """
    rows = [list(row) for row in table]
    if not rows:
        raise FormatError("csv table must include a header row")
    width = len(rows[0])
    for idx, row in enumerate(rows):
        if len(row) != width:
            raise FormatError(
                f"ragged csv row {idx}: {len(row)} cells, expected {width}"
            )
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row in rows:
            writer.writerow([_format_cell(cell) for cell in row])
