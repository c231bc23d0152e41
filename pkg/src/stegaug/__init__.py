"""LSB-steganography batch augmentation with quantization analysis tools."""

from .bitops import (
    BitDepth,
    QuantSpec,
    delta_i,
    embed_image,
    embed_lsb,
    extract_image,
    extract_secret,
    quantize,
    quantize_image,
)
from .colorops import brightness, contrast, grayscale, linear_color, saturation
from .pipeline import (
    AugmentationRecord,
    Batch,
    Sample,
    StegParams,
    augment_batch,
    color_augment_batch,
    fuse_labels,
    sample_k,
)
from .rng import DecisionStream

__version__ = "0.1.0"

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
    "brightness",
    "contrast",
    "grayscale",
    "saturation",
    "linear_color",
    "StegParams",
    "Sample",
    "Batch",
    "AugmentationRecord",
    "fuse_labels",
    "sample_k",
    "augment_batch",
    "color_augment_batch",
    "DecisionStream",
    "__version__",
]
