"""Empirical checks of the quantization-as-color-augmentation equivalence.

Level histograms and preimage counts are exact combinatorial quantities; the
full-domain population (each intensity 0..255 exactly once) turns the
approximate uniform-level claim p(level) ~ 2**k/256 into an exact assertion
with no sampling noise.  Least-squares fits quantify how close the
quantization map is to the generalized linear color form alpha * i + beta.

Color-approximation errors compare quantization against the continuous
(pre-rounding, pre-clamping) transform values: the residual against
brightness bias b is (i mod 2**k) + b, which is what makes the centered bias
-(2**k - 1)/2 the best match.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gammaincc

from .bitops import QuantSpec, _check_depth
from .colorops import GRAY_WEIGHTS
from .dataio import write_csv
from .pipeline import Sample

__all__ = [
    "LevelHistogram",
    "LinearFit",
    "ColorApproxTable",
    "BitPlaneStat",
    "quantization_histogram",
    "uniformity_test",
    "fit_linear_approx",
    "color_approx_error",
    "bit_plane_stats",
    "default_param_grid",
    "write_analysis_csvs",
]

FULL_DOMAIN = np.arange(256, dtype=np.uint8)


def _as_pixels(population) -> np.ndarray:
    """Flatten images / samples / arrays into one 1-D uint8 pixel vector."""
    if population is None:
        return FULL_DOMAIN
    if isinstance(population, np.ndarray):
        arrays = [population]
    else:
        arrays = [p.image if isinstance(p, Sample) else np.asarray(p) for p in population]
    if not arrays:
        raise ValueError("empty pixel population")
    flat = np.concatenate([a.reshape(-1) for a in arrays])
    if flat.dtype != np.uint8:
        raise ValueError(f"pixel population must be uint8, got {flat.dtype}")
    if flat.size == 0:
        raise ValueError("empty pixel population")
    return flat


@dataclass(frozen=True)
class LevelHistogram:
    """Counts of quantized values over the full level grid for one bit depth."""

    k: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class LinearFit:
    """OLS fit of quantize(i, k) against i over the full intensity domain."""

    alpha_hat: float
    beta_hat: float
    rmse: float
    k: int


@dataclass(frozen=True)
class ColorApproxTable:
    """Mean absolute error between quantization and one color transform."""

    transform: str
    k: int
    params: tuple[float, ...]
    errors: tuple[float, ...]

    @property
    def best_param(self) -> float:
        return self.params[int(np.argmin(self.errors))]

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.params, self.errors))


@dataclass(frozen=True)
class BitPlaneStat:
    plane: int
    ones_fraction: float
    entropy: float


def quantization_histogram(population, k: int) -> LevelHistogram:
    """Histogram of quantize(i, k) over a pixel population.

    population=None uses the full domain: each intensity in [0, 255] exactly
    once, so counts are the exact preimage sizes (2**k per level).
    """
    k = _check_depth(k)
    pixels = _as_pixels(population)
    quantized = pixels >> np.uint8(k) << np.uint8(k)
    counts = np.bincount(quantized, minlength=256)
    spec = QuantSpec(k)
    return LevelHistogram(k, {level: int(counts[level]) for level in spec.levels})


def uniformity_test(histogram: LevelHistogram) -> tuple[float, float]:
    """Pearson chi-square of a level histogram against the uniform law.

    Returns (statistic, p-value); the p-value is the chi-square survival
    function with level_count - 1 degrees of freedom, evaluated via the
    regularized upper incomplete gamma function.
    """
    counts = np.array(list(histogram.counts.values()), dtype=np.float64)
    total = counts.sum()
    if total <= 0:
        raise ValueError("uniformity test needs a non-empty histogram")
    expected = total / len(counts)
    statistic = float(((counts - expected) ** 2 / expected).sum())
    dof = len(counts) - 1
    p_value = float(gammaincc(dof / 2.0, statistic / 2.0))
    return statistic, p_value


def fit_linear_approx(k: int) -> LinearFit:
    """Least-squares line through (i, quantize(i, k)) for i in [0, 255]."""
    k = _check_depth(k)
    x = np.arange(256, dtype=np.float64)
    y = np.floor(x / 2**k) * 2**k
    n = 256.0
    sx, sy = x.sum(), y.sum()
    sxx, sxy = (x * x).sum(), (x * y).sum()
    alpha = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    beta = (sy - alpha * sx) / n
    rmse = float(np.sqrt(np.mean((y - (alpha * x + beta)) ** 2)))
    return LinearFit(float(alpha), float(beta), rmse, k)


_DEFAULT_PIXEL_LATTICE = None


def _pixel_lattice() -> np.ndarray:
    """Deterministic 16x16x16 RGB lattice used when no population is supplied."""
    global _DEFAULT_PIXEL_LATTICE
    if _DEFAULT_PIXEL_LATTICE is None:
        axis = np.arange(0, 256, 17, dtype=np.uint8)
        r, g, b = np.meshgrid(axis, axis, axis, indexing="ij")
        _DEFAULT_PIXEL_LATTICE = np.stack(
            [r.reshape(-1), g.reshape(-1), b.reshape(-1)], axis=1
        )
    return _DEFAULT_PIXEL_LATTICE


def _rgb_triples(population) -> np.ndarray:
    if population is None:
        return _pixel_lattice()
    if isinstance(population, np.ndarray):
        arrays = [population]
    else:
        arrays = [p.image if isinstance(p, Sample) else np.asarray(p) for p in population]
    triples = []
    for a in arrays:
        if a.ndim != 3 or a.shape[0] != 3:
            raise ValueError(
                f"saturation population needs (3, H, W) images, got shape {a.shape}"
            )
        triples.append(a.reshape(3, -1).T)
    return np.concatenate(triples)


def color_approx_error(
    k: int, transform: str, param_grid: Sequence[float], pixels=None
) -> ColorApproxTable:
    """Mean |quantize - transform| per parameter value, over the pixel domain.

    brightness and contrast are evaluated on the full intensity domain;
    saturation on an RGB pixel population (a deterministic lattice over the
    color cube when none is supplied).  Transforms enter in their continuous
    form, without rounding or clamping.
    """
    k = _check_depth(k)
    params = tuple(float(p) for p in param_grid)
    if not params:
        raise ValueError("parameter grid must be non-empty")
    errors = []
    if transform == "brightness":
        i = np.arange(256, dtype=np.float64)
        q = np.floor(i / 2**k) * 2**k
        for b in params:
            errors.append(float(np.mean(np.abs(q - (i + b)))))
    elif transform == "contrast":
        i = np.arange(256, dtype=np.float64)
        q = np.floor(i / 2**k) * 2**k
        for s in params:
            errors.append(float(np.mean(np.abs(q - (128.0 + s * (i - 128.0))))))
    elif transform == "saturation":
        rgb = _rgb_triples(pixels).astype(np.float64)
        gray = rgb @ np.array(GRAY_WEIGHTS)
        q = np.floor(rgb / 2**k) * 2**k
        for c in params:
            transformed = gray[:, None] + c * (rgb - gray[:, None])
            errors.append(float(np.mean(np.abs(q - transformed))))
    else:
        raise ValueError(f"unknown transform {transform!r}")
    return ColorApproxTable(transform, k, params, tuple(errors))


def default_param_grid(transform: str, k: int) -> tuple[float, ...]:
    """Parameter grid containing the analytically best-matching value."""
    k = _check_depth(k)
    if transform == "brightness":
        centered = -(2**k - 1) / 2.0
        grid = {0.0, centered}
        grid.update(centered + d for d in (-16.0, -8.0, -4.0, -2.0, -1.0,
                                           1.0, 2.0, 4.0, 8.0, 16.0))
        return tuple(sorted(grid))
    if transform == "contrast":
        return (0.25, 0.5, 0.75, 0.9, 1.0, 1.1, 1.25, 1.5, 2.0)
    if transform == "saturation":
        return (0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0)
    raise ValueError(f"unknown transform {transform!r}")


def bit_plane_stats(images) -> list[BitPlaneStat]:
    """Ones-fraction and binary entropy per bit plane (plane 0 = LSB)."""
    if images is None:
        raise ValueError("bit-plane stats need a pixel population")
    pixels = _as_pixels(images)
    stats = []
    for plane in range(8):
        bits = (pixels >> np.uint8(plane)) & np.uint8(1)
        q = float(np.mean(bits))
        if q in (0.0, 1.0):
            entropy = 0.0
        else:
            entropy = float(-q * np.log2(q) - (1 - q) * np.log2(1 - q))
        stats.append(BitPlaneStat(plane, q, entropy))
    return stats


def write_analysis_csvs(
    outdir, ks: Iterable[int], population=None, saturation_pixels=None
) -> list[Path]:
    """Emit the analysis CSV families into outdir; returns written paths.

    Families: levels_k{k}.csv per depth, linfit.csv, color_err_{transform}.csv
    for the three transforms, and bitplanes.csv.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    ks = [_check_depth(k) for k in ks]
    written = []

    for k in ks:
        hist = quantization_histogram(population, k)
        path = outdir / f"levels_k{k}.csv"
        write_csv([["level", "count"]] + [[lv, ct] for lv, ct in hist.counts.items()], path)
        written.append(path)

    fits = [fit_linear_approx(k) for k in ks]
    path = outdir / "linfit.csv"
    write_csv(
        [["k", "alpha_hat", "beta_hat", "rmse"]]
        + [[f.k, f.alpha_hat, f.beta_hat, f.rmse] for f in fits],
        path,
    )
    written.append(path)

    for transform in ("brightness", "contrast", "saturation"):
        rows = [["k", "param", "mean_abs_error", "best"]]
        for k in ks:
            table = color_approx_error(
                k, transform, default_param_grid(transform, k),
                pixels=saturation_pixels,
            )
            best = table.best_param
            rows.extend(
                [k, p, e, int(p == best)] for p, e in table.rows()
            )
        path = outdir / f"color_err_{transform}.csv"
        write_csv(rows, path)
        written.append(path)

    stats = bit_plane_stats(population if population is not None else FULL_DOMAIN)
    path = outdir / "bitplanes.csv"
    write_csv(
        [["plane", "ones_fraction", "entropy"]]
        + [[s.plane, s.ones_fraction, s.entropy] for s in stats],
        path,
    )
    written.append(path)
    return written
