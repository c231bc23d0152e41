import numpy as np
import pytest

from stegaug import bitops
from stegaug.bitops import (
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


# Independent reference: operate on bit strings, no shift arithmetic.
def embed_ref(cover: int, secret: int, k: int) -> int:
    return int(format(cover, "08b")[: 8 - k] + format(secret, "08b")[:k], 2)


def extract_ref(stego: int, k: int) -> int:
    return int(format(stego, "08b")[8 - k :] + "0" * (8 - k), 2)


def quantize_ref(i: int, k: int) -> int:
    return int(format(i, "08b")[: 8 - k] + "0" * k, 2)


class TestScalarGolden:
    def test_embed_examples(self):
        assert embed_lsb(181, 206, 3) == 182
        assert embed_lsb(0, 0, 5) == 0
        assert embed_lsb(255, 255, 4) == 255

    def test_zero_secret_is_pure_quantization(self):
        for k in range(1, 8):
            for c in range(256):
                assert embed_lsb(c, 0, k) == quantize(c, k)

    def test_extract_examples(self):
        assert extract_secret(182, 3) == 192
        for k in range(1, 8):
            assert extract_secret(0, k) == 0

    def test_quantize_examples(self):
        assert quantize(181, 3) == 176
        assert quantize(255, 1) == 254
        for k in range(1, 8):
            assert quantize(0, k) == 0

    def test_delta_examples(self):
        assert delta_i(181, 3) == 5
        assert delta_i(176, 3) == 0
        assert delta_i(255, 7) == 127


class TestBitStringReference:
    # Different construction (string slicing) checked against the arithmetic.
    @pytest.mark.parametrize("k", range(1, 8))
    def test_embed_matches_reference(self, k):
        for c in range(0, 256, 17):
            for s in range(256):
                assert embed_lsb(c, s, k) == embed_ref(c, s, k)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_extract_and_quantize_match_reference(self, k):
        for v in range(256):
            assert extract_secret(v, k) == extract_ref(v, k)
            assert quantize(v, k) == quantize_ref(v, k)


class TestExhaustiveInvariants:
    def test_roundtrip_full_grid(self):
        cover = np.arange(256, dtype=np.uint8)[:, None]
        secret = np.arange(256, dtype=np.uint8)[None, :]
        for k in range(1, 8):
            stego = (cover >> k << k) | (secret >> (8 - k))
            recovered = (stego & (2**k - 1)) << (8 - k)
            expected = (secret >> (8 - k)) << (8 - k)
            assert np.array_equal(
                np.broadcast_to(expected, stego.shape), recovered
            )

    def test_cover_preservation_full_grid(self):
        for k in range(1, 8):
            for c in range(0, 256, 7):
                for s in range(0, 256, 11):
                    st = embed_lsb(c, s, k)
                    assert st - (st % 2**k) == quantize(c, k)

    def test_quantize_idempotent(self):
        i = np.arange(256)
        for k in range(1, 8):
            q = i >> k << k
            assert np.array_equal(q >> k << k, q)

    def test_quantize_monotone(self):
        for k in range(1, 8):
            q = np.arange(256) >> k << k
            assert np.all(np.diff(q) >= 0)

    def test_bounded_perturbation(self):
        for k in range(1, 8):
            d = np.array([delta_i(i, k) for i in range(256)])
            assert d.min() == 0
            assert d.max() == 2**k - 1
            assert np.array_equal(d, np.arange(256) - (np.arange(256) >> k << k))

    def test_exact_preimage_uniformity(self):
        for k in range(1, 8):
            counts = np.bincount(np.arange(256) >> k << k, minlength=256)
            levels = QuantSpec(k).levels
            assert all(counts[lv] == 2**k for lv in levels)
            assert counts.sum() == 256


class TestImageOps:
    def test_lifts_scalar(self):
        rng = np.random.default_rng(3)
        cover = rng.integers(0, 256, (3, 5, 4), dtype=np.uint8)
        secret = rng.integers(0, 256, (3, 5, 4), dtype=np.uint8)
        for k in (1, 4, 7):
            out = embed_image(cover, secret, k)
            for idx in np.ndindex(cover.shape):
                assert out[idx] == embed_lsb(int(cover[idx]), int(secret[idx]), k)
            back = extract_image(out, k)
            for idx in np.ndindex(cover.shape):
                assert back[idx] == extract_secret(int(out[idx]), k)

    def test_zero_secret_image_is_quantization(self):
        rng = np.random.default_rng(4)
        cover = rng.integers(0, 256, (3, 32, 32), dtype=np.uint8)
        for k in range(1, 8):
            assert np.array_equal(
                embed_image(cover, np.zeros_like(cover), k), quantize_image(cover, k)
            )

    def test_bit_plane_slicing_oracle(self):
        # low-k planes of the stego equal the secret's top-k planes
        rng = np.random.default_rng(5)
        cover = rng.integers(0, 256, (3, 32, 32), dtype=np.uint8)
        secret = rng.integers(0, 256, (3, 32, 32), dtype=np.uint8)
        k = 3
        stego = embed_image(cover, secret, k)
        planes_stego = np.unpackbits(stego.reshape(-1, 1), axis=1)  # MSB first
        planes_secret = np.unpackbits(secret.reshape(-1, 1), axis=1)
        for p in range(k):
            # plane index p counts from the LSB; unpackbits column 7-p
            assert np.array_equal(planes_stego[:, 7 - p], planes_secret[:, 7 - (8 - k + p)])
        # high planes of the stego equal the cover's high planes
        planes_cover = np.unpackbits(cover.reshape(-1, 1), axis=1)
        for p in range(k, 8):
            assert np.array_equal(planes_stego[:, 7 - p], planes_cover[:, 7 - p])

    def test_shape_mismatch_reports_both_shapes(self):
        a = np.zeros((3, 32, 32), dtype=np.uint8)
        b = np.zeros((3, 16, 16), dtype=np.uint8)
        with pytest.raises(ValueError, match=r"\(3, 32, 32\).*\(3, 16, 16\)"):
            embed_image(a, b, 3)

    def test_dtype_rejected(self):
        a = np.zeros((3, 4, 4), dtype=np.int32)
        with pytest.raises(ValueError, match="uint8"):
            embed_image(a, a, 3)


class TestTypes:
    @pytest.mark.parametrize("k", [0, 8, -1, 100])
    def test_bad_depth_rejected(self, k):
        with pytest.raises(ValueError):
            BitDepth(k)
        with pytest.raises(ValueError):
            quantize(10, k)

    def test_non_integer_depth_rejected(self):
        with pytest.raises(ValueError):
            quantize(10, 2.5)
        with pytest.raises(ValueError):
            quantize(10, True)

    @pytest.mark.parametrize("v", [-1, 256, 1000])
    def test_out_of_range_intensity_rejected(self, v):
        with pytest.raises(ValueError):
            embed_lsb(v, 0, 3)
        with pytest.raises(ValueError):
            embed_lsb(0, v, 3)
        with pytest.raises(ValueError):
            quantize(v, 3)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_quant_spec_invariants(self, k):
        spec = QuantSpec(k)
        assert spec.bin_width * spec.level_count == 256
        assert len(spec.levels) == spec.level_count
        assert spec.levels[-1] == 256 - 2**k
        assert all(b - a == 2**k for a, b in zip(spec.levels, spec.levels[1:]))

    def test_bit_depth_int_conversion(self):
        assert int(BitDepth(5)) == 5
