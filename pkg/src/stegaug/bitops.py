"""Exact bit-level primitives: LSB embedding, extraction, uniform quantization.

Scalar functions operate on single intensities in [0, 255]; the ``*_image``
variants lift them element-wise over uint8 arrays (channel-planar, shape
(C, H, W) by convention, though any shape is accepted as long as cover and
secret agree).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BitDepth",
    "QuantSpec",
    "embed_lsb",
    "embed_image",
    "extract_secret",
    "extract_image",
    "quantize",
    "quantize_image",
    "delta_i",
]


def _check_depth(k: int) -> int:
    # k = 0 would be a no-op embed, k = 8 would replace the cover entirely.
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or not 1 <= k <= 7:
        raise ValueError(f"bit depth must be an integer in [1, 7], got {k!r}")
    return int(k)


def _check_intensity(value: int, name: str) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if not 0 <= value <= 255:
        raise ValueError(f"{name} must be in [0, 255], got {value}")
    return int(value)


def _check_image(img: np.ndarray, name: str) -> np.ndarray:
    img = np.asarray(img)
    if img.dtype != np.uint8:
        raise ValueError(f"{name} must have dtype uint8, got {img.dtype}")
    return img


@dataclass(frozen=True)
class BitDepth:
    """Number of low-order cover bits replaced by the secret; valid range [1, 7]."""

    k: int

    def __post_init__(self) -> None:
        _check_depth(self.k)

    def __int__(self) -> int:
        return self.k


@dataclass(frozen=True)
class QuantSpec:
    """Quantization grid induced by a bit depth k.

    bin_width = 2**k, level_count = 256 / 2**k, levels = {0, 2**k, ...,
    256 - 2**k}.  bin_width * level_count == 256 always.
    """

    k: int
    bin_width: int = field(init=False)
    level_count: int = field(init=False)
    levels: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        k = _check_depth(self.k)
        object.__setattr__(self, "bin_width", 2**k)
        object.__setattr__(self, "level_count", 256 // 2**k)
        object.__setattr__(self, "levels", tuple(range(0, 256, 2**k)))


def embed_lsb(cover: int, secret: int, k: int) -> int:
    """Replace the k low bits of cover with the k high bits of secret."""
    cover = _check_intensity(cover, "cover")
    secret = _check_intensity(secret, "secret")
    k = _check_depth(k)
    return (cover >> k << k) | (secret >> (8 - k))


def extract_secret(stego: int, k: int) -> int:
    """Recover the embedded approximation: k low bits of stego, re-aligned high."""
    stego = _check_intensity(stego, "stego")
    k = _check_depth(k)
    return (stego & (2**k - 1)) << (8 - k)


def quantize(i: int, k: int) -> int:
    """Map an intensity to the nearest lower multiple of 2**k."""
    i = _check_intensity(i, "intensity")
    k = _check_depth(k)
    return i >> k << k


def delta_i(i: int, k: int) -> int:
    """Perturbation introduced by quantization: i - quantize(i, k) = i mod 2**k."""
    i = _check_intensity(i, "intensity")
    k = _check_depth(k)
    return i & (2**k - 1)


def embed_image(cover: np.ndarray, secret: np.ndarray, k: int) -> np.ndarray:
    """Element-wise embed_lsb over two equal-shape uint8 arrays."""
    cover = _check_image(cover, "cover")
    secret = _check_image(secret, "secret")
    k = _check_depth(k)
    if cover.shape != secret.shape:
        raise ValueError(
            f"cover and secret shapes differ: {cover.shape} vs {secret.shape}"
        )
    return (cover >> k << k) | (secret >> (8 - k))


def extract_image(stego: np.ndarray, k: int) -> np.ndarray:
    """Element-wise extract_secret over a uint8 array."""
    stego = _check_image(stego, "stego")
    k = _check_depth(k)
    return (stego & np.uint8(2**k - 1)) << np.uint8(8 - k)


def quantize_image(img: np.ndarray, k: int) -> np.ndarray:
    """Element-wise quantize over a uint8 array."""
    img = _check_image(img, "image")
    k = _check_depth(k)
    return img >> k << k
