"""Batch augmentation: probabilistic steganographic pairing with label fusion.

For each output slot i an independent decision stream seeded by
(params.seed, i) draws, in fixed order: (1) a uniform u in [0, 1) -- the
sample is augmented iff u < p; (2) a partner index j uniform over the other
D - 1 slots; (3) a bit depth k uniform over k_choices.  Augmented slots
become (embed_image(image_i, image_j, k), fuse_labels(label_i, label_j));
the rest pass through unchanged.  The sample at slot i is always the cover,
the partner always the secret.

Draws (2) and (3) are only consumed when the sample is augmented.  Because
streams are per-sample (see stegaug.rng), results are bit-identical for any
worker count and any processing order, and the expected number of augmented
slots is Binomial(D, p).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bitops import _check_depth, _check_image
from .rng import GOLDEN, MASK64, DecisionStream, mix64_array, stream_keys

__all__ = [
    "StegParams",
    "Sample",
    "Batch",
    "AugmentationRecord",
    "fuse_labels",
    "sample_k",
    "augment_batch",
    "color_augment_batch",
    "COLOR_TRANSFORMS",
    "COLOR_PARAM_RANGES",
]

DEFAULT_K_CHOICES = (1, 2, 3, 4, 5, 6, 7)

# Color mode: transform drawn uniformly from this order, parameter uniform
# over the matching range.
COLOR_TRANSFORMS = ("brightness", "contrast", "saturation")
COLOR_PARAM_RANGES = {
    "brightness": (-64.0, 64.0),
    "contrast": (0.5, 1.5),
    "saturation": (0.0, 2.0),
}


@dataclass(frozen=True)
class StegParams:
    """Augmentation parameters: probability p, bit-depth choices, RNG seed."""

    p: float = 0.5
    k_choices: tuple[int, ...] = DEFAULT_K_CHOICES
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        choices = tuple(sorted(set(int(k) for k in self.k_choices)))
        if not choices:
            raise ValueError("k_choices must be non-empty")
        for k in choices:
            _check_depth(k)
        object.__setattr__(self, "k_choices", choices)
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(eq=False)
class Sample:
    """One image plus its multi-hot label vector."""

    image: np.ndarray
    label: np.ndarray

    def __post_init__(self) -> None:
        self.image = _check_image(self.image, "image")
        label = np.asarray(self.label)
        if label.dtype != np.uint8 or label.ndim != 1:
            raise ValueError("label must be a 1-D uint8 vector")
        if not np.all((label == 0) | (label == 1)):
            raise ValueError("label entries must be 0 or 1")
        if not label.any():
            raise ValueError("label must have at least one entry set")
        self.label = label


@dataclass(eq=False)
class Batch:
    """Ordered list of samples sharing one image shape and label length."""

    samples: list[Sample]

    def __post_init__(self) -> None:
        shapes = {s.image.shape for s in self.samples}
        if len(shapes) > 1:
            raise ValueError(f"batch images must share one shape, got {sorted(shapes)}")
        lengths = {len(s.label) for s in self.samples}
        if len(lengths) > 1:
            raise ValueError(f"batch labels must share one length, got {sorted(lengths)}")

    def __len__(self) -> int:
        return len(self.samples)

    def images(self) -> np.ndarray:
        return np.stack([s.image for s in self.samples])

    def labels(self) -> np.ndarray:
        return np.stack([s.label for s in self.samples])

    @classmethod
    def from_arrays(cls, images: np.ndarray, labels: np.ndarray) -> "Batch":
        if len(images) != len(labels):
            raise ValueError(
                f"image count {len(images)} != label count {len(labels)}"
            )
        return cls([Sample(img, lab) for img, lab in zip(images, labels)])


@dataclass(frozen=True)
class AugmentationRecord:
    """Provenance of one output slot: passthrough, steg pairing, or color jitter."""

    output_index: int
    kind: str
    secret_index: int | None = None
    k: int | None = None
    transform: str | None = None
    param: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("passthrough", "steg", "color"):
            raise ValueError(f"unknown record kind {self.kind!r}")
        if self.kind == "steg":
            if self.secret_index is None or self.k is None:
                raise ValueError("steg record needs secret_index and k")
            if self.secret_index == self.output_index:
                raise ValueError("steg record cannot pair a sample with itself")


def fuse_labels(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Element-wise OR of two equal-length {0,1} vectors."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"label shapes differ: {a.shape} vs {b.shape}")
    for v, name in ((a, "first"), (b, "second")):
        if not np.all((v == 0) | (v == 1)):
            raise ValueError(f"{name} label has entries outside {{0, 1}}")
    return (a.astype(np.uint8) | b.astype(np.uint8)).astype(np.uint8)


def sample_k(stream: DecisionStream, k_choices) -> int:
    """Uniform bit depth from k_choices (normalized to sorted unique order)."""
    choices = tuple(sorted(set(int(k) for k in k_choices)))
    if not choices:
        raise ValueError("k_choices must be non-empty")
    return choices[stream.randbelow(len(choices))]


def _randbelow_span(keys: np.ndarray, counters: np.ndarray, n: int) -> np.ndarray:
    """Vectorized rejection sampling below n; consumes draws per stream.

    Mirrors DecisionStream.randbelow exactly: counters[i] is the next draw
    number for stream keys[i] and is advanced by each attempt.
    """
    out = np.zeros(len(keys), dtype=np.int64)
    pending = np.arange(len(keys))
    span = (1 << 64) - ((1 << 64) % n)
    golden = np.uint64(GOLDEN)
    while len(pending):
        with np.errstate(over="ignore"):
            values = mix64_array(keys[pending] + golden * (counters[pending] + np.uint64(1)))
        counters[pending] += np.uint64(1)
        if span == 1 << 64:
            accepted = np.ones(len(pending), dtype=bool)
        else:
            accepted = values < np.uint64(span)
        out[pending[accepted]] = (values[accepted] % np.uint64(n)).astype(np.int64)
        pending = pending[~accepted]
    return out


def _steg_span(images, labels, indices, params, total, out_images, out_labels, records):
    """Augment the slots listed in `indices`, writing results in place."""
    keys = stream_keys(params.seed, indices)
    counters = np.zeros(len(indices), dtype=np.uint64)

    with np.errstate(over="ignore"):
        first = mix64_array(keys + np.uint64(GOLDEN))
    counters += np.uint64(1)
    u = (first >> np.uint64(11)).astype(np.float64) * 2.0**-53
    applied = u < params.p

    app_pos = np.nonzero(applied)[0]
    app_idx = indices[app_pos]
    for pos in np.nonzero(~applied)[0]:
        records[indices[pos]] = AugmentationRecord(int(indices[pos]), "passthrough")
    if len(app_pos) == 0:
        return

    # fancy indexing copies; sub_counters tracks draw position for applied slots
    sub_counters = counters[app_pos]
    raw = _randbelow_span(keys[app_pos], sub_counters, total - 1)
    partners = np.where(raw < app_idx, raw, raw + 1)
    choices = np.asarray(params.k_choices, dtype=np.int64)
    kidx = _randbelow_span(keys[app_pos], sub_counters, len(choices))
    kvals = choices[kidx]

    for k in np.unique(kvals):
        sel = kvals == k
        cov = images[app_idx[sel]]
        sec = images[partners[sel]]
        out_images[app_idx[sel]] = (cov >> np.uint8(k) << np.uint8(k)) | (
            sec >> np.uint8(8 - k)
        )
    out_labels[app_idx] = labels[app_idx] | labels[partners]
    for i, j, k in zip(app_idx, partners, kvals):
        records[int(i)] = AugmentationRecord(int(i), "steg", int(j), int(k))


def _split_spans(n: int, workers: int) -> list[np.ndarray]:
    chunk = (n + workers - 1) // workers
    return [np.arange(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]


def augment_batch(
    batch: Batch, params: StegParams, workers: int | None = None
) -> tuple[Batch, list[AugmentationRecord]]:
    """Steganographic batch augmentation; returns a new batch plus records.

    The input batch is never modified.  Output is bit-identical for any
    `workers` value.
    """
    total = len(batch)
    if total < 2:
        raise ValueError(f"augmentation needs at least 2 samples, got {total}")
    images = batch.images()
    labels = batch.labels()
    out_images = images.copy()
    out_labels = labels.copy()
    records: list[AugmentationRecord | None] = [None] * total

    spans = _split_spans(total, workers) if workers and workers > 1 else [np.arange(total)]
    if len(spans) == 1:
        _steg_span(images, labels, spans[0], params, total, out_images, out_labels, records)
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            futures = [
                pool.submit(
                    _steg_span, images, labels, span, params, total,
                    out_images, out_labels, records,
                )
                for span in spans
            ]
            for fut in futures:
                fut.result()

    return Batch.from_arrays(out_images, out_labels), records  # type: ignore[arg-type]


def _color_span(images, indices, params, out_images, records):
    from . import colorops

    ops = {
        "brightness": colorops.brightness_image,
        "contrast": colorops.contrast_image,
        "saturation": colorops.saturation_image,
    }
    for i in indices:
        i = int(i)
        stream = DecisionStream(params.seed, i)
        if stream.uniform() >= params.p:
            records[i] = AugmentationRecord(i, "passthrough")
            continue
        name = COLOR_TRANSFORMS[stream.randbelow(len(COLOR_TRANSFORMS))]
        lo, hi = COLOR_PARAM_RANGES[name]
        param = lo + stream.uniform() * (hi - lo)
        out_images[i] = ops[name](images[i], param)
        records[i] = AugmentationRecord(i, "color", transform=name, param=param)


def color_augment_batch(
    batch: Batch, params: StegParams, workers: int | None = None
) -> tuple[Batch, list[AugmentationRecord]]:
    """Color-jitter batch augmentation under the same decision-stream contract.

    With probability p a sample gets one transform drawn uniformly from
    COLOR_TRANSFORMS with a parameter uniform over COLOR_PARAM_RANGES.
    Labels are unchanged.
    """
    total = len(batch)
    if total < 1:
        raise ValueError("color augmentation needs at least 1 sample")
    images = batch.images()
    labels = batch.labels()
    out_images = images.copy()
    records: list[AugmentationRecord | None] = [None] * total

    spans = _split_spans(total, workers) if workers and workers > 1 else [np.arange(total)]
    if len(spans) == 1:
        _color_span(images, spans[0], params, out_images, records)
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            futures = [
                pool.submit(_color_span, images, span, params, out_images, records)
                for span in spans
            ]
            for fut in futures:
                fut.result()

    return Batch.from_arrays(out_images, labels), records  # type: ignore[arg-type]
