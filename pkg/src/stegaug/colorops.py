"""Reference color augmentations: brightness, contrast, saturation, linear form.

All real-valued results are rounded half away from zero, then clamped to
[0, 255]; clamping never happens on intermediate values.  Scalar functions
take single intensities; ``*_image`` variants operate on channel-planar
(3, H, W) uint8 arrays.
"""

from __future__ import annotations

import math

import numpy as np

from .bitops import _check_image, _check_intensity

__all__ = [
    "round_half_away",
    "brightness",
    "contrast",
    "grayscale",
    "saturation",
    "linear_color",
    "brightness_image",
    "contrast_image",
    "saturation_image",
]

GRAY_WEIGHTS = (0.299, 0.587, 0.114)


def round_half_away(x: float) -> int:
    """Round half away from zero (0.5 -> 1, -0.5 -> -1)."""
    return int(math.floor(x + 0.5)) if x >= 0 else int(math.ceil(x - 0.5))


def _finish(x: float) -> int:
    return max(0, min(255, round_half_away(x)))


def _check_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    return value


def brightness(i: int, b: float) -> int:
    """Shift intensity by a constant bias b."""
    i = _check_intensity(i, "intensity")
    b = _check_finite(b, "bias")
    return _finish(i + b)


def contrast(i: int, s: float) -> int:
    """Scale intensity around the midpoint 128 by a factor s > 0."""
    i = _check_intensity(i, "intensity")
    s = _check_finite(s, "contrast factor")
    if s <= 0:
        raise ValueError(f"contrast factor must be > 0, got {s}")
    return _finish(128 + s * (i - 128))


def grayscale(pixel: tuple[int, int, int]) -> float:
    """Weighted grayscale value 0.299 R + 0.587 G + 0.114 B, unrounded."""
    r, g, b = pixel
    r = _check_intensity(r, "r")
    g = _check_intensity(g, "g")
    b = _check_intensity(b, "b")
    wr, wg, wb = GRAY_WEIGHTS
    return wr * r + wg * g + wb * b


def saturation(pixel: tuple[int, int, int], c: float) -> tuple[int, int, int]:
    """Move each channel toward (c < 1) or away from (c > 1) the pixel's gray value."""
    c = _check_finite(c, "saturation factor")
    if c < 0:
        raise ValueError(f"saturation factor must be >= 0, got {c}")
    gray = grayscale(pixel)
    r, g, b = pixel
    return tuple(_finish(gray + c * (ch - gray)) for ch in (r, g, b))


def linear_color(i: int, alpha: float, beta: float) -> int:
    """Generalized linear color map alpha * i + beta."""
    i = _check_intensity(i, "intensity")
    alpha = _check_finite(alpha, "alpha")
    beta = _check_finite(beta, "beta")
    return _finish(alpha * i + beta)


def _finish_array(x: np.ndarray) -> np.ndarray:
    rounded = np.where(x >= 0, np.floor(x + 0.5), np.ceil(x - 0.5))
    return np.clip(rounded, 0, 255).astype(np.uint8)


def brightness_image(img: np.ndarray, b: float) -> np.ndarray:
    img = _check_image(img, "image")
    b = _check_finite(b, "bias")
    return _finish_array(img.astype(np.float64) + b)


def contrast_image(img: np.ndarray, s: float) -> np.ndarray:
    img = _check_image(img, "image")
    s = _check_finite(s, "contrast factor")
    if s <= 0:
        raise ValueError(f"contrast factor must be > 0, got {s}")
    return _finish_array(128.0 + s * (img.astype(np.float64) - 128.0))


def saturation_image(img: np.ndarray, c: float) -> np.ndarray:
    """Per-pixel saturation on a channel-planar (3, H, W) array."""
    img = _check_image(img, "image")
    c = _check_finite(c, "saturation factor")
    if c < 0:
        raise ValueError(f"saturation factor must be >= 0, got {c}")
    if img.ndim != 3 or img.shape[0] != 3:
        raise ValueError(f"saturation needs a (3, H, W) image, got shape {img.shape}")
    planes = img.astype(np.float64)
    wr, wg, wb = GRAY_WEIGHTS
    gray = wr * planes[0] + wg * planes[1] + wb * planes[2]
    return _finish_array(gray[None, :, :] + c * (planes - gray[None, :, :]))
