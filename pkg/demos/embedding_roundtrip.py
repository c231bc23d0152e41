"""Embed one image inside another, then recover the hidden approximation.

Walks the core bit mechanics on a single pixel, then on whole images,
and writes PPM files you can open in any viewer.
"""

import numpy as np

from stegaug import embed_image, embed_lsb, extract_image, extract_secret, quantize
from stegaug.dataio import write_ppm

# Single pixel first: cover 181 (0b10110101), secret 206 (0b11001110), k = 3.
cover_px, secret_px, k = 181, 206, 3
stego_px = embed_lsb(cover_px, secret_px, k)
print(f"cover  {cover_px:3d} = {cover_px:08b}")
print(f"secret {secret_px:3d} = {secret_px:08b}")
print(f"stego  {stego_px:3d} = {stego_px:08b}   (top 5 bits from cover, low 3 from secret)")

recovered = extract_secret(stego_px, k)
print(f"extracted {recovered:3d} = {recovered:08b}   vs quantize(secret, 5) = {quantize(secret_px, 8 - k)}")
assert recovered == quantize(secret_px, 8 - k)

# Whole images: two random 32x32 RGB images, channel-planar (3, H, W).
rng = np.random.default_rng(0)
cover = rng.integers(0, 256, (3, 32, 32), dtype=np.uint8)
secret = rng.integers(0, 256, (3, 32, 32), dtype=np.uint8)

for depth in (1, 3, 5, 7):
    stego = embed_image(cover, secret, depth)
    hidden = extract_image(stego, depth)
    cover_err = np.abs(stego.astype(int) - cover.astype(int)).mean()
    secret_err = np.abs(hidden.astype(int) - secret.astype(int)).mean()
    print(
        f"k={depth}: mean |stego - cover| = {cover_err:6.2f},  "
        f"mean |extracted - secret| = {secret_err:6.2f}"
    )

stego = embed_image(cover, secret, 3)
write_ppm(cover, "demo_cover.ppm")
write_ppm(secret, "demo_secret.ppm")
write_ppm(stego, "demo_stego.ppm")
write_ppm(extract_image(stego, 3), "demo_extracted.ppm")
print("wrote demo_cover.ppm, demo_secret.ppm, demo_stego.ppm, demo_extracted.ppm")
