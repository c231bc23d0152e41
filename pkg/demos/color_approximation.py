"""Quantization as a discrete stand-in for continuous color jitter.

Fitting quantize(i, k) with a line alpha * i + beta shows alpha stays near 1
while beta sweeps with k: the perturbation behaves like a brightness shift
whose magnitude the bit depth controls.  The mean-absolute-error tables
quantify the match against each continuous transform.
"""

from stegaug.analysis import color_approx_error, default_param_grid, fit_linear_approx

print("least-squares line through (i, quantize(i, k)), i in [0, 255]:")
print(f"{'k':>2} {'alpha_hat':>12} {'beta_hat':>10} {'rmse':>8}")
for k in range(1, 8):
    fit = fit_linear_approx(k)
    print(f"{k:>2} {fit.alpha_hat:>12.6f} {fit.beta_hat:>10.4f} {fit.rmse:>8.4f}")

print()
print("brightness bias that best matches quantization (mean abs error):")
for k in (1, 3, 5):
    grid = default_param_grid("brightness", k)
    table = color_approx_error(k, "brightness", grid)
    best = table.best_param
    centered = -(2**k - 1) / 2
    err = dict(table.rows())[best]
    print(f"  k={k}: best b = {best:+.1f} (centered residual bias {centered:+.1f}), "
          f"error {err:.3f}")

print()
print("contrast factors vs quantization at k=3:")
table = color_approx_error(3, "contrast", default_param_grid("contrast", 3))
for param, err in table.rows():
    marker = "  <- best" if param == table.best_param else ""
    print(f"  s={param:<5} error {err:8.3f}{marker}")

print()
print("saturation factors vs quantization at k=3 (RGB lattice population):")
table = color_approx_error(3, "saturation", default_param_grid("saturation", 3))
for param, err in table.rows():
    marker = "  <- best" if param == table.best_param else ""
    print(f"  c={param:<5} error {err:8.3f}{marker}")
