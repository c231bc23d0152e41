"""How clearing k low bits partitions the intensity range into uniform levels.

Embedding quantizes the cover: every intensity maps to the nearest lower
multiple of 2**k.  Over the full domain each level has exactly 2**k
preimages, so the quantized distribution is exactly uniform.
"""

from stegaug import QuantSpec, delta_i, quantize
from stegaug.analysis import quantization_histogram, uniformity_test

for k in (1, 3, 5, 7):
    spec = QuantSpec(k)
    print(f"k={k}: {spec.level_count} levels of width {spec.bin_width}, "
          f"levels {spec.levels[:4]}...{spec.levels[-1]}")

print()
print("quantize(181, k) and the perturbation delta = 181 - quantize:")
for k in range(1, 8):
    q = quantize(181, k)
    print(f"  k={k}: 181 -> {q:3d}  (delta {delta_i(181, k):3d} = 181 mod {2**k})")

print()
print("full-domain histograms (one of each intensity 0..255):")
for k in (3, 7):
    hist = quantization_histogram(None, k)
    stat, p = uniformity_test(hist)
    uniques = sorted(set(hist.counts.values()))
    print(f"  k={k}: every level has count {uniques}, chi-square stat {stat}, p {p}")

# A constant image is the degenerate opposite: all mass on one level.
import numpy as np

flat = np.full((3, 16, 16), 176, dtype=np.uint8)
hist = quantization_histogram(flat, 3)
stat, _ = uniformity_test(hist)
print(f"  constant-176 image, k=3: level 176 holds {hist.counts[176]} px, stat {stat:.0f}")
